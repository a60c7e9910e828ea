#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subchi/graph.hpp"

namespace subchi {

enum class ChromaticMode { Exact, Bounds };

struct ChromaticResult {
    enum class Status { Exact, Bounds, Uncolorable };
    Status status = Status::Exact;
    int lower = 0;
    int upper = 0;
    // Exact mode: the lexicographically least proper coloring with `upper`
    // colors (vertex order). Bounds mode: the DSATUR greedy coloring.
    std::vector<int> coloring;
    std::uint64_t nodes = 0;

    int value() const { return upper; }
};

std::string to_string(ChromaticResult::Status status);

struct SolverLimits {
    std::uint64_t node_limit = 20'000'000;
};

// Exact mode: DSATUR branch-and-bound per connected component, seeded with a
// maximum clique. Bounds mode: (maximum clique, DSATUR greedy). Graphs with a
// loop are reported Uncolorable. Throws ResourceLimit when the node budget
// is exhausted.
ChromaticResult chromatic_number(const Graph& g, ChromaticMode mode = ChromaticMode::Exact,
                                 const SolverLimits& limits = {});

// Maximum clique (vertices ascending); ties resolved by the search order.
std::vector<int> max_clique(const Graph& g);

// DSATUR greedy; ties on saturation go to the smaller vertex.
std::vector<int> dsatur_coloring(const Graph& g);

bool is_proper_coloring(const Graph& g, std::span<const int> coloring);
int color_count(std::span<const int> coloring);

}  // namespace subchi
