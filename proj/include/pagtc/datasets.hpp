#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pagtc/detail/bundled_data.hpp"
#include "pagtc/graph.hpp"

namespace pagtc {

inline std::vector<std::string> bundled_dataset_names() {
    std::vector<std::string> names;
    for (const auto& asset : detail::kBundledAssets) {
        names.emplace_back(asset.name);
    }
    return names;
}

/// Raw edge-list text of a bundled dataset.
inline std::string_view bundled_dataset_text(std::string_view name) {
    for (const auto& asset : detail::kBundledAssets) {
        if (asset.name == name) {
            return asset.text;
        }
    }
    std::string msg = "unknown dataset '" + std::string(name) + "'; available:";
    for (const auto& asset : detail::kBundledAssets) {
        msg += " ";
        msg += asset.name;
    }
    throw std::invalid_argument(msg);
}

/// flor-families (15 nodes), les-miserables (77 nodes) or fig2-grid (25 nodes).
inline Graph load_bundled(std::string_view name) {
    return load_edge_list(bundled_dataset_text(name));
}

} // namespace pagtc
