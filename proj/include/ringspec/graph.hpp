#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ringspec/bitset.hpp"

namespace ringspec {

/// Simple undirected graph over vertices 0..v-1, adjacency kept as bitset
/// rows (these graphs are dense).
class Graph {
public:
    explicit Graph(std::size_t vertices);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const;

    void add_edge(std::size_t a, std::size_t b);
    bool adjacent(std::size_t a, std::size_t b) const { return adj_[a].test(b); }
    const Bitset& neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].count(); }

    std::size_t min_degree() const;
    std::size_t max_degree() const;
    bool is_regular() const { return min_degree() == max_degree(); }

    /// Max BFS eccentricity; nullopt when disconnected (or no vertices).
    std::optional<long> diameter() const;

    Graph induced(const std::vector<std::size_t>& vertices) const;
    Graph complement() const;

private:
    std::vector<Bitset> adj_;
};

bool is_independent_set(const Graph& g, const std::vector<std::size_t>& vs);
bool is_clique(const Graph& g, const std::vector<std::size_t>& vs);
bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& color);

}  // namespace ringspec
