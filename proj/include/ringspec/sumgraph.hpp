#pragma once

#include <string>
#include <vector>

#include "ringspec/abelian_char.hpp"
#include "ringspec/bigint.hpp"
#include "ringspec/graph.hpp"

namespace ringspec {

struct SpectrumEntry {
    double value = 0.0;     // numeric view, always valid
    bool exact = false;     // when set, exact_value is authoritative
    BigInt exact_value = 0;
    BigInt multiplicity = 0;
};

struct SpectrumReport {
    std::string method;  // "closed-form" | "character" | "brute-force"
    BigInt vertices = 0;
    std::vector<SpectrumEntry> eigenvalues;  // ascending

    bool all_exact() const;
    double lambda_max() const;
    BigInt lambda_max_exact() const;  ///< throws unless all entries are exact
    BigInt total_multiplicity() const;
    std::size_t distinct_count() const { return eigenvalues.size(); }

    /// Eigenvalues repeated per multiplicity, ascending.
    std::vector<double> expand(std::size_t budget = 200000) const;

    std::string to_json() const;
};

/// Sorts ascending and merges equal values (exact entries by exact equality,
/// float entries when bit-identical).
SpectrumReport make_spectrum_report(std::string method, BigInt vertices, std::vector<SpectrumEntry> entries);

/// Sum-graph of a finite abelian group G with respect to S: distinct g, h
/// are adjacent whenever g + h lies in S.  Vertex i is group element i.
class SumGraph {
public:
    static constexpr std::size_t kDefaultAdjacencyBudget = 5000;
    static constexpr long kDefaultCharacterBudget = 10000;
    static constexpr std::size_t kDefaultEigenBudget = 2000;

    SumGraph(AbelianGroup group, std::vector<long> connection_set,
             std::size_t adjacency_budget = kDefaultAdjacencyBudget);

    const AbelianGroup& group() const { return group_; }
    const std::vector<long>& connection_set() const { return connection_; }
    const Graph& graph() const { return graph_; }

    std::size_t vertex_count() const { return graph_.vertex_count(); }
    std::size_t min_degree() const { return graph_.min_degree(); }
    std::optional<long> diameter() const { return graph_.diameter(); }

    /// deg(g) = |S| - 1 when 2g is in S, else |S|.
    bool degree_law_holds() const;

    /// Laplacian spectrum from the characters of G: one eigenvalue
    /// |S| - <phi,S> per real character, a pair |S| +- |<phi,S>| per
    /// conjugate pair of non-real characters.
    SpectrumReport spectrum_via_characters(long character_budget = kDefaultCharacterBudget) const;

    /// Dense symmetric eigensolve of L = D - A; the oracle for the above.
    SpectrumReport spectrum_bruteforce(std::size_t eigen_budget = kDefaultEigenBudget) const;

private:
    AbelianGroup group_;
    std::vector<long> connection_;
    Graph graph_;
};

}  // namespace ringspec
