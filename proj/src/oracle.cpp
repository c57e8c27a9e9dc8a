#include "ringspec/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "ringspec/errors.hpp"

namespace ringspec {
namespace {

/// Branch-and-bound maximum clique with a greedy-coloring bound.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, uint64_t max_nodes) : g_(g), n_(g.vertex_count()), max_nodes_(max_nodes) {}

    uint64_t nodes() const { return nodes_; }

    /// Largest clique containing `forced` (which must itself be a clique).
    std::vector<std::size_t> largest(const std::vector<std::size_t>& forced = {}) {
        best_.assign(forced.begin(), forced.end());
        target_ = 0;
        found_target_ = false;
        search_from(forced);
        return best_;
    }

    /// Is there a clique of size >= target containing `forced`?
    bool decide(std::size_t target, const std::vector<std::size_t>& forced) {
        best_.assign(forced.begin(), forced.end());
        if (best_.size() >= target) return true;
        target_ = target;
        found_target_ = false;
        search_from(forced);
        return found_target_;
    }

private:
    void search_from(const std::vector<std::size_t>& forced) {
        Bitset cand(n_);
        for (std::size_t v = 0; v < n_; ++v) cand.set(v);
        for (std::size_t v : forced) cand &= g_.neighbors(v);
        std::vector<std::size_t> current(forced);
        if (n_ > 0) expand(current, cand);
    }

    void expand(std::vector<std::size_t>& current, Bitset cand) {
        if (++nodes_ > max_nodes_) throw BudgetError("clique search exceeded node budget");
        if (found_target_) return;

        // Greedy-color the candidate subgraph; a clique takes at most one
        // vertex per color class, so color indices bound the extension.
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        color_sort(cand, order, bound);

        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best_.size()) return;
            std::size_t v = order[i];
            current.push_back(v);
            Bitset next = cand & g_.neighbors(v);
            if (next.any()) {
                expand(current, next);
            } else if (current.size() > best_.size()) {
                best_ = current;
                if (target_ > 0 && best_.size() >= target_) found_target_ = true;
            }
            current.pop_back();
            if (found_target_) return;
            cand.reset(v);
        }
    }

    void color_sort(const Bitset& cand, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) {
        std::vector<Bitset> classes;
        std::vector<std::vector<std::size_t>> members;
        cand.for_each([&](std::size_t v) {
            for (std::size_t c = 0; c < classes.size(); ++c) {
                if (!classes[c].intersects(g_.neighbors(v))) {
                    classes[c].set(v);
                    members[c].push_back(v);
                    return;
                }
            }
            classes.emplace_back(n_);
            classes.back().set(v);
            members.push_back({v});
        });
        for (std::size_t c = 0; c < members.size(); ++c)
            for (std::size_t v : members[c]) {
                order.push_back(v);
                bound.push_back(c + 1);
            }
    }

    const Graph& g_;
    std::size_t n_;
    uint64_t max_nodes_;
    uint64_t nodes_ = 0;
    std::vector<std::size_t> best_;
    std::size_t target_ = 0;
    bool found_target_ = false;
};

std::vector<std::size_t> lexicographically_smallest_clique(const Graph& g, std::size_t size, CliqueSearch& search) {
    std::vector<std::size_t> fixed;
    std::size_t start = 0;
    while (fixed.size() < size) {
        for (std::size_t v = start;; ++v) {
            if (v >= g.vertex_count()) throw std::logic_error("witness canonicalization lost the optimum");
            std::vector<std::size_t> attempt(fixed);
            attempt.push_back(v);
            if (!is_clique(g, attempt)) continue;
            if (search.decide(size, attempt)) {
                fixed = std::move(attempt);
                start = v + 1;
                break;
            }
        }
    }
    return fixed;
}

OracleResult clique_like(const Graph& g, const OracleOptions& opts, std::string graph_id, bool independent) {
    if (g.vertex_count() > opts.max_vertices_independence)
        throw BudgetError("graph on " + std::to_string(g.vertex_count()) + " vertices exceeds search budget of " +
                          std::to_string(opts.max_vertices_independence));
    const Graph work = independent ? g.complement() : g;
    CliqueSearch search(work, opts.max_nodes);
    std::vector<std::size_t> best = search.largest();
    if (opts.canonical_witness && !best.empty())
        best = lexicographically_smallest_clique(work, best.size(), search);
    std::sort(best.begin(), best.end());

    OracleResult result;
    result.quantity = independent ? "alpha" : "omega";
    result.graph_id = std::move(graph_id);
    result.value = static_cast<long>(best.size());
    result.witness = std::move(best);
    result.nodes_explored = search.nodes();
    const bool valid =
        independent ? is_independent_set(g, result.witness) : is_clique(g, result.witness);
    if (!valid) throw std::logic_error("search produced an invalid witness");
    return result;
}

/// DSATUR decision search: is g properly k-colorable?
class ColorSearch {
public:
    ColorSearch(const Graph& g, uint64_t max_nodes) : g_(g), n_(g.vertex_count()), max_nodes_(max_nodes) {}

    uint64_t nodes() const { return nodes_; }

    bool decide(std::size_t k, std::vector<std::size_t>& coloring_out) {
        if (k > 64) throw std::invalid_argument("color count above 64 unsupported");
        k_ = k;
        color_.assign(n_, kUncolored);
        neighbor_colors_.assign(n_, 0);
        counts_.assign(n_ * k, 0);
        max_used_ = 0;
        if (!recurse(0)) return false;
        coloring_out = color_;
        return true;
    }

private:
    static constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);

    bool recurse(std::size_t colored) {
        if (++nodes_ > max_nodes_) throw BudgetError("coloring search exceeded node budget");
        if (colored == n_) return true;

        // most saturated uncolored vertex, ties by degree then index
        std::size_t pick = kUncolored;
        std::size_t pick_sat = 0, pick_deg = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] != kUncolored) continue;
            auto sat = static_cast<std::size_t>(__builtin_popcountll(neighbor_colors_[v]));
            std::size_t deg = g_.degree(v);
            if (pick == kUncolored || sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }

        const std::size_t fresh = max_used_;  // first never-used color; trying one suffices
        for (std::size_t c = 0; c <= fresh && c < k_; ++c) {
            if ((neighbor_colors_[pick] >> c) & 1) continue;
            assign(pick, c);
            std::size_t saved_max = max_used_;
            if (c == fresh) max_used_ = fresh + 1;
            if (recurse(colored + 1)) return true;
            max_used_ = saved_max;
            unassign(pick, c);
        }
        return false;
    }

    void assign(std::size_t v, std::size_t c) {
        color_[v] = c;
        g_.neighbors(v).for_each([&](std::size_t u) {
            if (counts_[u * k_ + c]++ == 0) neighbor_colors_[u] |= uint64_t{1} << c;
        });
    }

    void unassign(std::size_t v, std::size_t c) {
        color_[v] = kUncolored;
        g_.neighbors(v).for_each([&](std::size_t u) {
            if (--counts_[u * k_ + c] == 0) neighbor_colors_[u] &= ~(uint64_t{1} << c);
        });
    }

    const Graph& g_;
    std::size_t n_;
    uint64_t max_nodes_;
    uint64_t nodes_ = 0;
    std::size_t k_ = 0;
    std::vector<std::size_t> color_;
    std::vector<uint64_t> neighbor_colors_;
    std::vector<uint16_t> counts_;  // per (vertex, color) count of colored neighbors
    std::size_t max_used_ = 0;
};

std::vector<std::size_t> dsatur_heuristic(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> color(n, static_cast<std::size_t>(-1));
    std::vector<uint64_t> neighbor_colors(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        std::size_t pick_sat = 0, pick_deg = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] != static_cast<std::size_t>(-1)) continue;
            auto sat = static_cast<std::size_t>(__builtin_popcountll(neighbor_colors[v]));
            std::size_t deg = g.degree(v);
            if (pick == n || sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::size_t c = 0;
        while ((neighbor_colors[pick] >> c) & 1) ++c;
        if (c >= 64) throw std::invalid_argument("heuristic needs more than 64 colors");
        color[pick] = c;
        g.neighbors(pick).for_each([&](std::size_t u) { neighbor_colors[u] |= uint64_t{1} << c; });
    }
    return color;
}

}  // namespace

std::string OracleResult::to_json() const {
    nlohmann::ordered_json j;
    j["quantity"] = quantity;
    if (!graph_id.empty()) j["graph"] = graph_id;
    j["value"] = value;
    j["witness"] = witness;
    j["nodes_explored"] = nodes_explored;
    return j.dump();
}

OracleResult max_independent_set(const Graph& g, const OracleOptions& opts, std::string graph_id) {
    return clique_like(g, opts, std::move(graph_id), /*independent=*/true);
}

OracleResult clique_number(const Graph& g, const OracleOptions& opts, std::string graph_id) {
    return clique_like(g, opts, std::move(graph_id), /*independent=*/false);
}

OracleResult chromatic_number(const Graph& g, const OracleOptions& opts, std::string graph_id) {
    const std::size_t n = g.vertex_count();
    if (n > opts.max_vertices_chromatic)
        throw BudgetError("graph on " + std::to_string(n) + " vertices exceeds coloring budget of " +
                          std::to_string(opts.max_vertices_chromatic));

    OracleResult result;
    result.quantity = "chi";
    result.graph_id = std::move(graph_id);
    if (n == 0) return result;

    OracleOptions sub = opts;
    sub.max_vertices_independence = std::max(opts.max_vertices_independence, n);
    sub.canonical_witness = false;
    OracleResult omega = clique_number(g, sub);
    OracleResult alpha = max_independent_set(g, sub);
    std::size_t lower = std::max<std::size_t>(static_cast<std::size_t>(omega.value),
                                              (n + static_cast<std::size_t>(alpha.value) - 1) /
                                                  static_cast<std::size_t>(alpha.value));
    result.nodes_explored = omega.nodes_explored + alpha.nodes_explored;

    std::vector<std::size_t> coloring = dsatur_heuristic(g);
    std::size_t upper = *std::max_element(coloring.begin(), coloring.end()) + 1;

    ColorSearch search(g, opts.max_nodes);
    for (std::size_t k = lower; k < upper; ++k) {
        std::vector<std::size_t> attempt;
        if (search.decide(k, attempt)) {
            coloring = std::move(attempt);
            upper = k;
            break;
        }
    }
    result.nodes_explored += search.nodes();
    result.value = static_cast<long>(upper);
    result.witness = std::move(coloring);
    if (!is_proper_coloring(g, result.witness)) throw std::logic_error("search produced an improper coloring");
    return result;
}

}  // namespace ringspec
