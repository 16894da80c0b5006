#include <gtest/gtest.h>

#include <deque>
#include <random>
#include <sstream>

#include "pagtc/datasets.hpp"
#include "pagtc/targeting.hpp"
#include "support/reference.hpp"

using namespace pagtc;

namespace {

std::vector<TargetingStrategy> all_strategies() {
    return {TargetingStrategy::degree(), TargetingStrategy::greedy_one_round(), TargetingStrategy::greedy_full(),
            TargetingStrategy::pagtc_shapley(), TargetingStrategy::pagtc_truncated(0.5)};
}

void expect_valid_trace(const Graph& g, const TargetingTrace& t) {
    ASSERT_EQ(t.active_history.size(), t.rounds);
    ASSERT_FALSE(t.active_history.empty());
    EXPECT_EQ(t.active_history.back(), g.node_count());
    for (std::size_t i = 1; i < t.active_history.size(); ++i) {
        EXPECT_GT(t.active_history[i], t.active_history[i - 1]);
    }
    EXPECT_LE(t.chosen.size(), t.rounds);
    EXPECT_LE(t.rounds, g.node_count());
}

std::size_t eccentricity_max(const Graph& g) {
    std::size_t diameter = 0;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        std::vector<std::size_t> dist(g.node_count(), SIZE_MAX);
        std::deque<NodeId> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            const NodeId x = queue.front();
            queue.pop_front();
            for (NodeId y : g.neighbors(x)) {
                if (dist[y] == SIZE_MAX) {
                    dist[y] = dist[x] + 1;
                    diameter = std::max(diameter, dist[y]);
                    queue.push_back(y);
                }
            }
        }
    }
    return diameter;
}

}  // namespace

TEST(Targeting, ThresholdOfNNeverFires) {
    const Graph g = load_bundled("flor-families");
    for (const auto& s : all_strategies()) {
        const auto t = run_targeted(g, {15}, s);
        EXPECT_EQ(t.rounds, 15u) << s.describe();
        EXPECT_EQ(t.chosen.size(), t.rounds);
        expect_valid_trace(g, t);
    }
}

TEST(Targeting, ThresholdAboveMaxDegree) {
    const Graph g = load_bundled("les-miserables");
    const std::size_t k = g.max_degree() + 1;
    for (const auto& s : all_strategies()) {
        EXPECT_EQ(run_targeted(g, {k}, s).rounds, 77u) << s.describe();
    }
}

TEST(Targeting, DegreePicksStarCenter) {
    const Graph star = ref::from_pairs(5, {{1, 0}, {1, 2}, {1, 3}, {1, 4}});
    EXPECT_EQ(choose_next(star, NodeSet(5), {2}, TargetingStrategy::degree()), 1u);
}

TEST(Targeting, ShapleyPrefersThirdLeaf) {
    const Graph g = ref::three_leaf_star();
    EXPECT_EQ(choose_next(g, NodeSet::of(4, {0, 1}), {3}, TargetingStrategy::pagtc_shapley()), 2u);
}

TEST(Targeting, FullyActiveIsAnError) {
    const Graph g = ref::path(3);
    EXPECT_THROW((void)choose_next(g, NodeSet::full(3), {1}, TargetingStrategy::degree()), std::invalid_argument);
}

TEST(Targeting, InvalidFractionRejected) {
    EXPECT_THROW((void)TargetingStrategy::pagtc_truncated(0.0), std::invalid_argument);
    EXPECT_THROW((void)TargetingStrategy::pagtc_truncated(1.01), std::invalid_argument);
}

TEST(Targeting, FlorentineDegreeNeedsEveryRound) {
    const Graph g = load_bundled("flor-families");
    EXPECT_EQ(run_targeted(g, {4}, TargetingStrategy::degree()).rounds, 15u);
}

TEST(Targeting, DegenerateTruncationIsGreedy) {
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = ref::random_graph(40, 0.1, rng);
        const std::size_t k = 2 + trial % 3;
        const auto greedy = run_targeted(g, {k}, TargetingStrategy::greedy_one_round());
        const auto truncated = run_targeted(g, {k}, TargetingStrategy::pagtc_truncated(1e-9));
        EXPECT_EQ(truncated.chosen, greedy.chosen) << "trial " << trial;
    }
    const Graph les = load_bundled("les-miserables");
    for (std::size_t k = 2; k <= 4; ++k) {
        EXPECT_EQ(run_targeted(les, {k}, TargetingStrategy::pagtc_truncated(1e-9)).chosen,
                  run_targeted(les, {k}, TargetingStrategy::greedy_one_round()).chosen);
    }
}

TEST(Targeting, FullTruncationMatchesShapleyChoice) {
    // Once |T| >= 1 the law conditioned on S ⊇ T is the same for the full
    // Shapley weights and the uniform weights on [|T|, n - 1].
    const Graph g = load_bundled("les-miserables");
    std::mt19937_64 rng(82);
    for (int trial = 0; trial < 20; ++trial) {
        const NodeSet active = ref::to_nodeset(77, ref::random_subset(77, 1 + trial, rng));
        for (std::size_t k = 2; k <= 4; ++k) {
            EXPECT_EQ(choose_next(g, active, {k}, TargetingStrategy::pagtc_truncated(1.0)),
                      choose_next(g, active, {k}, TargetingStrategy::pagtc_shapley()));
        }
    }
}

TEST(Targeting, SimpleContagionFinishesWithinDiameter) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = ref::random_graph(35, 0.06, rng);
        const std::size_t bound = eccentricity_max(g) + 1;
        for (const auto& s : all_strategies()) {
            const auto t = run_targeted(g, {1}, s);
            EXPECT_LE(t.rounds, bound) << s.describe();
            expect_valid_trace(g, t);
        }
    }
}

TEST(Targeting, TracesAreValidOnBundledGraphs) {
    for (const char* name : {"flor-families", "les-miserables"}) {
        const Graph g = load_bundled(name);
        for (std::size_t k = 2; k <= 4; ++k) {
            for (const auto& s : all_strategies()) {
                const auto t = run_targeted(g, {k}, s);
                expect_valid_trace(g, t);
                EXPECT_EQ(run_targeted(g, {k}, s, 3).chosen, t.chosen) << "thread count changed the trace";
            }
        }
    }
}

TEST(Targeting, ShapleyNeverSlowerThanDegreeOnBundledGraphs) {
    for (const char* name : {"flor-families", "les-miserables"}) {
        const Graph g = load_bundled(name);
        for (std::size_t k = 2; k <= 4; ++k) {
            const std::size_t pagtc = run_targeted(g, {k}, TargetingStrategy::pagtc_shapley()).rounds;
            const std::size_t degree = run_targeted(g, {k}, TargetingStrategy::degree()).rounds;
            EXPECT_LE(pagtc, degree) << name << " K=" << k;
            if (k == 4) {
                EXPECT_LT(pagtc, degree) << name;
            }
        }
    }
}

TEST(Targeting, ConcentratedWeightsSpreadFasterEarly) {
    // Sum of active counts over the first quarter of the rounds (the longer
    // run sets the horizon; a finished run counts as fully active).
    const Graph g = load_bundled("les-miserables");
    const auto sharp = run_targeted(g, {4}, TargetingStrategy::pagtc_truncated(0.25));
    const auto flat = run_targeted(g, {4}, TargetingStrategy::pagtc_truncated(1.0));
    const std::size_t horizon = (std::max(sharp.rounds, flat.rounds) + 3) / 4;
    auto early = [&](const TargetingTrace& t) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i < horizon; ++i) {
            sum += i < t.active_history.size() ? t.active_history[i] : g.node_count();
        }
        return sum;
    };
    EXPECT_GT(early(sharp), early(flat));
}

TEST(TraceExport, GrowthAndChosenFiles) {
    const Graph g = ref::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto t = run_targeted(g, {4}, TargetingStrategy::degree());
    const auto rows = growth_rows(t);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows.back(), std::make_pair(std::size_t{4}, std::size_t{4}));
    EXPECT_EQ(t.rounds, t.chosen.size());
    std::ostringstream growth;
    write_growth(t, growth);
    EXPECT_EQ(growth.str(), "1 1\n2 2\n3 3\n4 4\n");
    std::ostringstream chosen;
    write_chosen(g, t, chosen);
    EXPECT_EQ(chosen.str(), "1 1 1\n2 2 2\n3 0 0\n4 3 3\n");
}

TEST(TraceExport, ContagionCompletingARoundSkipsActivation) {
    // Path 0-1-2 with K=1: activate the middle, then the ends join by
    // contagion and the second round ends without an external pick.
    const Graph g = ref::path(3);
    const auto t = run_targeted(g, {1}, TargetingStrategy::degree());
    EXPECT_EQ(t.rounds, 2u);
    EXPECT_EQ(t.chosen, std::vector<NodeId>{1});
    EXPECT_EQ(t.active_history, (std::vector<std::size_t>{1, 3}));
}
