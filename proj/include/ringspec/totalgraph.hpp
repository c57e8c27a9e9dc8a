#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringspec/bigint.hpp"
#include "ringspec/finfield.hpp"
#include "ringspec/graph.hpp"
#include "ringspec/sumgraph.hpp"

namespace ringspec {

/// Shape-level facts about T_n(q) that need no enumeration.
struct TotalGraphSpec {
    int n = 0;
    BigInt q;
    BigInt vertices;        // q^(n^2)
    BigInt singular_count;  // |S| = q^(n^2) - |GL_n(F_q)|
    bool even_q = false;

    std::string to_json() const;
};

TotalGraphSpec total_graph_spec(int n, const BigInt& q);

/// Throws std::invalid_argument unless q is a prime power; returns {p, k}.
std::pair<long, int> factor_prime_power(long q);

/// The total graph T_n(q): sum-graph of the additive group of M_n(F_q) with
/// respect to the singular matrices.  Vertex i is the matrix of index i.
SumGraph total_graph(const Field& field, int n, std::size_t adjacency_budget = SumGraph::kDefaultAdjacencyBudget);

/// Indices of the singular matrices, in canonical order.
std::vector<long> singular_indices(const Field& field, int n, uint64_t budget = kDefaultEnumerationBudget);

struct InducedSubgraph {
    Graph graph;
    std::vector<std::size_t> labels;  // original vertex (= matrix) indices
};

/// The regular graph Gamma_n(q): the subgraph of T_n(q) induced on the
/// invertible matrices.
InducedSubgraph regular_graph(const SumGraph& total);
InducedSubgraph regular_graph(const Field& field, int n,
                              std::size_t adjacency_budget = SumGraph::kDefaultAdjacencyBudget);

/// Exact Laplacian spectrum of T_n(q) with multiplicities, without
/// materializing the graph.  For even q the non-trivial eigenvalues are
/// |S| + (-1)^r q^(n(n-1)/2) prod_{i=1}^{n-r}(q^i - 1), r = 1..n, each with
/// multiplicity rank_count(n,q,r); for odd q both |S| +- the same magnitude
/// appear, with multiplicity rank_count(n,q,r)/2 each.
SpectrumReport closed_form_spectrum(int n, const BigInt& q);

}  // namespace ringspec
