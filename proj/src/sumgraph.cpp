#include "ringspec/sumgraph.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "ringspec/errors.hpp"

namespace ringspec {

bool SpectrumReport::all_exact() const {
    for (const auto& e : eigenvalues)
        if (!e.exact) return false;
    return true;
}

double SpectrumReport::lambda_max() const {
    if (eigenvalues.empty()) throw std::logic_error("empty spectrum");
    return eigenvalues.back().value;
}

BigInt SpectrumReport::lambda_max_exact() const {
    if (eigenvalues.empty()) throw std::logic_error("empty spectrum");
    if (!all_exact()) throw std::logic_error("spectrum has non-exact eigenvalues");
    return eigenvalues.back().exact_value;
}

BigInt SpectrumReport::total_multiplicity() const {
    BigInt total = 0;
    for (const auto& e : eigenvalues) total += e.multiplicity;
    return total;
}

std::vector<double> SpectrumReport::expand(std::size_t budget) const {
    if (total_multiplicity() > budget) throw BudgetError("spectrum too large to expand");
    std::vector<double> out;
    for (const auto& e : eigenvalues) {
        auto m = static_cast<std::size_t>(e.multiplicity.convert_to<unsigned long long>());
        out.insert(out.end(), m, e.value);
    }
    return out;
}

std::string SpectrumReport::to_json() const {
    nlohmann::ordered_json j;
    j["method"] = method;
    j["v"] = dec(vertices);
    nlohmann::ordered_json eigs = nlohmann::ordered_json::array();
    for (const auto& e : eigenvalues) {
        nlohmann::ordered_json entry;
        if (e.exact)
            entry["value"] = dec(e.exact_value);
        else
            entry["value"] = e.value;
        entry["multiplicity"] = dec(e.multiplicity);
        eigs.push_back(entry);
    }
    j["eigenvalues"] = eigs;
    if (!eigenvalues.empty()) {
        if (all_exact())
            j["lambda_max"] = dec(lambda_max_exact());
        else
            j["lambda_max"] = lambda_max();
    }
    return j.dump();
}

SpectrumReport make_spectrum_report(std::string method, BigInt vertices, std::vector<SpectrumEntry> entries) {
    std::map<BigInt, BigInt> exact;
    std::map<double, BigInt> approx;
    for (auto& e : entries) {
        if (e.exact)
            exact[e.exact_value] += e.multiplicity;
        else
            approx[e.value] += e.multiplicity;
    }
    SpectrumReport rep;
    rep.method = std::move(method);
    rep.vertices = std::move(vertices);
    for (auto& [val, mult] : exact) {
        SpectrumEntry e;
        e.exact = true;
        e.exact_value = val;
        e.value = val.convert_to<double>();
        e.multiplicity = mult;
        rep.eigenvalues.push_back(std::move(e));
    }
    for (auto& [val, mult] : approx) {
        SpectrumEntry e;
        e.value = val;
        e.multiplicity = mult;
        rep.eigenvalues.push_back(std::move(e));
    }
    std::stable_sort(rep.eigenvalues.begin(), rep.eigenvalues.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (a.exact && b.exact) return a.exact_value < b.exact_value;
        return a.value < b.value;
    });
    return rep;
}

SumGraph::SumGraph(AbelianGroup group, std::vector<long> connection_set, std::size_t adjacency_budget)
    : group_(std::move(group)), connection_(std::move(connection_set)), graph_(0) {
    const long n = group_.order();
    if (static_cast<std::size_t>(n) > adjacency_budget)
        throw BudgetError("sum-graph on " + std::to_string(n) + " vertices exceeds adjacency budget of " +
                          std::to_string(adjacency_budget));
    std::sort(connection_.begin(), connection_.end());
    connection_.erase(std::unique(connection_.begin(), connection_.end()), connection_.end());
    Bitset in_s(static_cast<std::size_t>(n));
    for (long s : connection_) {
        if (s < 0 || s >= n) throw std::invalid_argument("connection set element outside the group");
        in_s.set(static_cast<std::size_t>(s));
    }
    graph_ = Graph(static_cast<std::size_t>(n));
    for (long g = 0; g < n; ++g)
        for (long h = g + 1; h < n; ++h)
            if (in_s.test(static_cast<std::size_t>(group_.add(g, h))))
                graph_.add_edge(static_cast<std::size_t>(g), static_cast<std::size_t>(h));
}

bool SumGraph::degree_law_holds() const {
    const long n = group_.order();
    Bitset in_s(static_cast<std::size_t>(n));
    for (long s : connection_) in_s.set(static_cast<std::size_t>(s));
    for (long g = 0; g < n; ++g) {
        std::size_t expected = connection_.size();
        if (in_s.test(static_cast<std::size_t>(group_.add(g, g)))) --expected;
        if (graph_.degree(static_cast<std::size_t>(g)) != expected) return false;
    }
    return true;
}

SpectrumReport SumGraph::spectrum_via_characters(long character_budget) const {
    const long n = group_.order();
    if (n > character_budget)
        throw BudgetError("character enumeration over " + std::to_string(n) + " elements exceeds budget of " +
                          std::to_string(character_budget));
    const BigInt s_size = static_cast<long long>(connection_.size());
    std::vector<SpectrumEntry> entries;
    for (long u = 0; u < n; ++u) {
        const long nu = group_.neg(u);
        if (nu < u) continue;  // pair already handled at its smaller index
        Character chi(group_, u);
        CharacterSum sum = char_sum(chi, connection_);
        if (nu == u) {
            // real character: <phi,S> is a sum of +-1
            auto val = sum.exact_integer();
            if (!val) throw std::logic_error("real character produced a non-real sum");
            SpectrumEntry e;
            e.exact = true;
            e.exact_value = s_size - *val;
            e.value = e.exact_value.convert_to<double>();
            e.multiplicity = 1;
            entries.push_back(std::move(e));
        } else if (auto val = sum.exact_integer()) {
            BigInt mag = *val >= 0 ? BigInt(*val) : BigInt(-*val);
            for (int sign : {-1, +1}) {
                SpectrumEntry e;
                e.exact = true;
                e.exact_value = sign > 0 ? s_size + mag : s_size - mag;
                e.value = e.exact_value.convert_to<double>();
                e.multiplicity = 1;
                entries.push_back(std::move(e));
            }
        } else {
            double mag = sum.abs();
            for (int sign : {-1, +1}) {
                SpectrumEntry e;
                e.value = static_cast<double>(connection_.size()) + sign * mag;
                e.multiplicity = 1;
                entries.push_back(std::move(e));
            }
        }
    }
    return make_spectrum_report("character", BigInt(n), std::move(entries));
}

SpectrumReport SumGraph::spectrum_bruteforce(std::size_t eigen_budget) const {
    const std::size_t n = graph_.vertex_count();
    if (n > eigen_budget)
        throw BudgetError("dense eigensolve on " + std::to_string(n) + " vertices exceeds budget of " +
                          std::to_string(eigen_budget));
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        lap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = static_cast<double>(graph_.degree(i));
        graph_.neighbors(i).for_each(
            [&](std::size_t j) { lap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = -1.0; });
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    const auto& ev = solver.eigenvalues();

    // group within 1e-6; integer Laplacians keep eigenvalues well separated
    SpectrumReport rep;
    rep.method = "brute-force";
    rep.vertices = static_cast<long long>(n);
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        double v = ev(i);
        if (!rep.eigenvalues.empty() && std::abs(rep.eigenvalues.back().value - v) < 1e-6) {
            rep.eigenvalues.back().multiplicity += 1;
        } else {
            SpectrumEntry e;
            e.value = v;
            e.multiplicity = 1;
            rep.eigenvalues.push_back(std::move(e));
        }
    }
    return rep;
}

}  // namespace ringspec
