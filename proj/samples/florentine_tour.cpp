// A short tour of the library on the Florentine families network: score the
// families, pick seeds, and run a targeted cascade.

#include <iostream>

#include "pagtc/all.hpp"

int main() {
    using namespace pagtc;

    const Graph g = load_bundled("flor-families");
    const ContagionParams params{2};

    // Shapley centrality of one-round influence, exact.
    const auto shapley = shapley_pagtc<Rational>(g, NodeSet(g.node_count()), params);
    std::cout << "Shapley scores (K=2):\n";
    for (NodeId u : shapley.ranking()) {
        std::cout << "  " << g.label(u) << "  " << shapley.at(u) << '\n';
    }

    // Same question once the Medici are known to be active.
    NodeSet medici(g.node_count());
    medici.insert(*g.find_label("Medici"));
    const auto conditioned = shapley_pagtc<double>(g, medici, params);
    std::cout << "best family given Medici: " << g.label(*conditioned.argmax()) << '\n';

    // Four seeds for one-round influence.
    const SeedProblem problem{Objective::one_round, 4, params};
    for (const SeedSolution& sol : {greedy_select(g, problem), pagtc_delta_select(g, problem)}) {
        std::cout << sol.algorithm << ":";
        for (NodeId u : sol.seeds) {
            std::cout << ' ' << g.label(u);
        }
        std::cout << "  -> " << sol.one_round_value << " after one round, " << sol.full_value << " at the end\n";
    }

    const auto trace = run_targeted(g, params, TargetingStrategy::pagtc_shapley());
    std::cout << "targeted cascade reaches all " << g.node_count() << " families in " << trace.rounds << " rounds\n";
}
