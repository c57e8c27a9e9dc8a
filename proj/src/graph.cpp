#include "ringspec/graph.hpp"

#include <stdexcept>

namespace ringspec {

Graph::Graph(std::size_t vertices) : adj_(vertices, Bitset(vertices)) {}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
    if (a == b) throw std::invalid_argument("no self-loops");
    adj_[a].set(b);
    adj_[b].set(a);
}

std::size_t Graph::min_degree() const {
    std::size_t best = static_cast<std::size_t>(-1);
    for (const auto& row : adj_) best = std::min(best, row.count());
    return adj_.empty() ? 0 : best;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& row : adj_) best = std::max(best, row.count());
    return best;
}

std::optional<long> Graph::diameter() const {
    const std::size_t n = vertex_count();
    if (n == 0) return std::nullopt;
    long diam = 0;
    for (std::size_t src = 0; src < n; ++src) {
        Bitset visited(n);
        visited.set(src);
        Bitset frontier(n);
        frontier.set(src);
        long depth = 0;
        std::size_t seen = 1;
        while (frontier.any()) {
            Bitset next(n);
            frontier.for_each([&](std::size_t v) { next |= adj_[v]; });
            next.and_not(visited);
            if (!next.any()) break;
            visited |= next;
            seen += next.count();
            frontier = std::move(next);
            ++depth;
        }
        if (seen != n) return std::nullopt;  // disconnected
        diam = std::max(diam, depth);
    }
    return diam;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
    Graph out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
    return out;
}

Graph Graph::complement() const {
    const std::size_t n = vertex_count();
    Graph out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!adjacent(i, j)) out.add_edge(i, j);
    return out;
}

bool is_independent_set(const Graph& g, const std::vector<std::size_t>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_clique(const Graph& g, const std::vector<std::size_t>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& color) {
    if (color.size() != g.vertex_count()) return false;
    for (std::size_t v = 0; v < color.size(); ++v) {
        bool bad = false;
        g.neighbors(v).for_each([&](std::size_t u) {
            if (color[u] == color[v]) bad = true;
        });
        if (bad) return false;
    }
    return true;
}

}  // namespace ringspec
