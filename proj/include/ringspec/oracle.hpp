#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringspec/graph.hpp"

namespace ringspec {

struct OracleOptions {
    std::size_t max_vertices_independence = 128;
    std::size_t max_vertices_chromatic = 64;
    uint64_t max_nodes = 200'000'000;
    /// When set, the returned set witness is the lexicographically smallest
    /// optimal one (costs extra decision searches).
    bool canonical_witness = false;
};

struct OracleResult {
    std::string quantity;  // "alpha" | "omega" | "chi"
    std::string graph_id;
    long value = 0;
    /// Sorted vertex set for alpha/omega; a color per vertex for chi.
    std::vector<std::size_t> witness;
    uint64_t nodes_explored = 0;

    std::string to_json() const;
};

/// Exact independence number via branch and bound (max clique on the
/// complement, greedy-coloring bound).  Witness re-validated before return.
OracleResult max_independent_set(const Graph& g, const OracleOptions& opts = {}, std::string graph_id = "");

OracleResult clique_number(const Graph& g, const OracleOptions& opts = {}, std::string graph_id = "");

/// Exact chromatic number: clique and ceil(v/alpha) lower bounds, DSATUR
/// heuristic upper bound, then DSATUR-ordered decision searches upward from
/// the lower bound.
OracleResult chromatic_number(const Graph& g, const OracleOptions& opts = {}, std::string graph_id = "");

}  // namespace ringspec
