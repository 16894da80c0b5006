#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pagtc {

using NodeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised by the edge-list reader; carries the 1-based line of the offending record.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Fixed-universe bit set over node ids with a cached cardinality.
class NodeSet {
public:
    NodeSet() = default;

    explicit NodeSet(std::size_t universe)
        : words_((universe + 63) / 64, 0), universe_(universe) {}

    static NodeSet of(std::size_t universe, std::span<const NodeId> nodes) {
        NodeSet set(universe);
        for (NodeId u : nodes) {
            set.insert(u);
        }
        return set;
    }

    static NodeSet of(std::size_t universe, std::initializer_list<NodeId> nodes) {
        return of(universe, std::span<const NodeId>(nodes.begin(), nodes.size()));
    }

    static NodeSet full(std::size_t universe) {
        NodeSet set(universe);
        for (NodeId u = 0; u < universe; ++u) {
            set.insert(u);
        }
        return set;
    }

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool contains(NodeId u) const noexcept {
        return u < universe_ && ((words_[u >> 6] >> (u & 63)) & 1U) != 0;
    }

    /// Returns true if the node was newly inserted.
    bool insert(NodeId u) {
        check(u);
        std::uint64_t& w = words_[u >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (u & 63);
        if (w & bit) {
            return false;
        }
        w |= bit;
        ++size_;
        return true;
    }

    bool erase(NodeId u) {
        check(u);
        std::uint64_t& w = words_[u >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (u & 63);
        if (!(w & bit)) {
            return false;
        }
        w &= ~bit;
        --size_;
        return true;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                const int bit = std::countr_zero(w);
                fn(static_cast<NodeId>(i * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    std::vector<NodeId> members() const {
        std::vector<NodeId> out;
        out.reserve(size_);
        for_each([&](NodeId u) { out.push_back(u); });
        return out;
    }

    bool is_subset_of(const NodeSet& other) const {
        if (other.universe_ != universe_) {
            return false;
        }
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~other.words_[i]) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const NodeSet& a, const NodeSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

private:
    void check(NodeId u) const {
        if (u >= universe_) {
            throw std::out_of_range("node " + std::to_string(u) + " outside universe of size " +
                                    std::to_string(universe_));
        }
    }

    std::vector<std::uint64_t> words_;
    std::size_t universe_ = 0;
    std::size_t size_ = 0;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Node ids are dense in [0, n). Each adjacency row is sorted and free of
/// duplicates and self-loops; the relation is symmetric.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an arbitrary edge multiset. Self-loops and duplicate
    /// edges (in either orientation) are dropped.
    static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                            std::vector<std::string> labels = {}) {
        if (node_count == 0) {
            throw std::invalid_argument("graph must have at least one node");
        }
        if (node_count > std::numeric_limits<NodeId>::max()) {
            throw std::invalid_argument("node count exceeds id range");
        }
        if (!labels.empty() && labels.size() != node_count) {
            throw std::invalid_argument("label count does not match node count");
        }

        Graph g;
        g.offsets_.assign(node_count + 1, 0);
        for (const Edge& e : edges) {
            if (e.u >= node_count || e.v >= node_count) {
                throw std::invalid_argument("edge endpoint outside [0, n)");
            }
            if (e.u == e.v) {
                continue;
            }
            ++g.offsets_[e.u + 1];
            ++g.offsets_[e.v + 1];
        }
        for (std::size_t i = 0; i < node_count; ++i) {
            g.offsets_[i + 1] += g.offsets_[i];
        }
        std::vector<NodeId> raw(g.offsets_.back());
        std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (const Edge& e : edges) {
            if (e.u == e.v) {
                continue;
            }
            raw[cursor[e.u]++] = e.v;
            raw[cursor[e.v]++] = e.u;
        }

        // Sort and deduplicate each row, then compact.
        std::vector<std::size_t> offsets(node_count + 1, 0);
        g.adjacency_.reserve(raw.size());
        for (std::size_t u = 0; u < node_count; ++u) {
            auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
            auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
            std::sort(first, last);
            last = std::unique(first, last);
            g.adjacency_.insert(g.adjacency_.end(), first, last);
            offsets[u + 1] = g.adjacency_.size();
        }
        g.adjacency_.shrink_to_fit();
        g.offsets_ = std::move(offsets);
        g.edge_count_ = g.adjacency_.size() / 2;
        g.labels_ = std::move(labels);
        for (std::size_t u = 0; u < node_count; ++u) {
            g.max_degree_ = std::max(g.max_degree_, g.degree(static_cast<NodeId>(u)));
        }
        if (!g.labels_.empty()) {
            g.label_index_.reserve(node_count);
            for (std::size_t u = 0; u < node_count; ++u) {
                g.label_index_.emplace(g.labels_[u], static_cast<NodeId>(u));
            }
        }
        return g;
    }

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t max_degree() const noexcept { return max_degree_; }

    std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {adjacency_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
    }

    bool has_edge(NodeId u, NodeId v) const {
        const auto row = neighbors(u);
        return std::binary_search(row.begin(), row.end(), v);
    }

    bool has_labels() const noexcept { return !labels_.empty(); }

    /// External label of a node; the decimal id when the graph carries no labels.
    std::string label(NodeId u) const {
        return labels_.empty() ? std::to_string(u) : labels_[u];
    }

    std::optional<NodeId> find_label(std::string_view name) const {
        if (labels_.empty()) {
            return std::nullopt;
        }
        auto it = label_index_.find(std::string(name));
        if (it == label_index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    /// Edges with u < v, in row order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (NodeId u = 0; u < node_count(); ++u) {
            for (NodeId v : neighbors(u)) {
                if (u < v) {
                    out.push_back({u, v});
                }
            }
        }
        return out;
    }

    bool is_connected() const {
        const std::size_t n = node_count();
        if (n == 0) {
            return false;
        }
        std::vector<char> seen(n, 0);
        std::vector<NodeId> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v : neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        return reached == n;
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adjacency_;
    std::size_t edge_count_ = 0;
    std::size_t max_degree_ = 0;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> label_index_;
};

struct EdgeListOptions {
    /// Input lines are arcs; they are symmetrized. The resulting graph is the
    /// same as for undirected input, the flag only documents intent.
    bool directed_input = false;
};

struct EdgeListReport {
    std::size_t records = 0;
    std::size_t comment_lines = 0;
    std::size_t self_loops = 0;
    std::size_t duplicate_edges = 0;
    bool connected = true;
};

/// Reads whitespace-separated "a b [extra columns...]" records. Lines starting
/// with '#' or '%' are comments. Tokens become dense ids in order of first
/// appearance and are kept as labels.
inline Graph load_edge_list(std::istream& in, EdgeListOptions options = {},
                            EdgeListReport* report = nullptr) {
    (void)options;
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    EdgeListReport local;

    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.try_emplace(token, static_cast<NodeId>(labels.size()));
        if (inserted) {
            labels.push_back(token);
        }
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        if (line[first] == '#' || line[first] == '%') {
            ++local.comment_lines;
            continue;
        }
        std::istringstream fields(line);
        std::string a;
        std::string b;
        if (!(fields >> a >> b)) {
            throw ParseError(line_no, "expected two node tokens, got '" + line + "'");
        }
        ++local.records;
        const NodeId u = intern(a);
        const NodeId v = intern(b);
        if (u == v) {
            ++local.self_loops;
            continue;
        }
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    if (labels.empty()) {
        throw std::invalid_argument("edge list contains no edges");
    }

    const std::size_t raw = edges.size();
    const std::size_t n = labels.size();
    Graph g = Graph::from_edges(n, edges, std::move(labels));
    local.duplicate_edges = raw - g.edge_count();
    local.connected = g.is_connected();
    if (report) {
        *report = local;
    }
    return g;
}

inline Graph load_edge_list(std::string_view text, EdgeListOptions options = {},
                            EdgeListReport* report = nullptr) {
    std::istringstream in{std::string(text)};
    return load_edge_list(in, options, report);
}

/// Writes one "label label" line per edge; re-reading gives the same graph as
/// long as every node has at least one edge.
inline void write_edge_list(const Graph& g, std::ostream& out) {
    for (const Edge& e : g.edges()) {
        out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    }
}

} // namespace pagtc
