#include "ringspec/totalgraph.hpp"

#include <stdexcept>

#include "json.hpp"
#include "ringspec/matrix_ring.hpp"

namespace ringspec {

std::string TotalGraphSpec::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["q"] = dec(q);
    j["v"] = dec(vertices);
    j["singular_count"] = dec(singular_count);
    j["parity"] = even_q ? "even" : "odd";
    return j.dump();
}

TotalGraphSpec total_graph_spec(int n, const BigInt& q) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    TotalGraphSpec spec;
    spec.n = n;
    spec.q = q;
    spec.vertices = pow_big(q, static_cast<unsigned>(n * n));
    spec.singular_count = spec.vertices - gl_order(n, q);
    spec.even_q = (q % 2 == 0);
    return spec;
}

std::pair<long, int> factor_prime_power(long q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    long p = q;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int k = 0;
    long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return {p, k};
}

std::vector<long> singular_indices(const Field& field, int n, uint64_t budget) {
    std::vector<long> sing;
    MatrixStream stream(field, n, budget);
    uint64_t idx = 0;
    while (auto m = stream.next()) {
        if (m->det().is_zero()) sing.push_back(static_cast<long>(idx));
        ++idx;
    }
    return sing;
}

SumGraph total_graph(const Field& field, int n, std::size_t adjacency_budget) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    // additive group of M_n(F_q) as kn^2 copies of Z_p, digit order matching
    // the canonical matrix index
    std::vector<long> factors(static_cast<std::size_t>(field.k() * n * n), field.p());
    AbelianGroup group(std::move(factors));
    uint64_t enum_budget = static_cast<uint64_t>(adjacency_budget);
    std::vector<long> sing = singular_indices(field, n, enum_budget);
    return SumGraph(group, std::move(sing), adjacency_budget);
}

InducedSubgraph regular_graph(const SumGraph& total) {
    Bitset in_s(total.vertex_count());
    for (long s : total.connection_set()) in_s.set(static_cast<std::size_t>(s));
    std::vector<std::size_t> invertible;
    for (std::size_t v = 0; v < total.vertex_count(); ++v)
        if (!in_s.test(v)) invertible.push_back(v);
    return {total.graph().induced(invertible), std::move(invertible)};
}

InducedSubgraph regular_graph(const Field& field, int n, std::size_t adjacency_budget) {
    return regular_graph(total_graph(field, n, adjacency_budget));
}

SpectrumReport closed_form_spectrum(int n, const BigInt& q) {
    TotalGraphSpec spec = total_graph_spec(n, q);
    std::vector<SpectrumEntry> entries;
    auto push = [&entries](BigInt value, BigInt mult) {
        SpectrumEntry e;
        e.exact = true;
        e.exact_value = std::move(value);
        e.value = e.exact_value.convert_to<double>();
        e.multiplicity = std::move(mult);
        entries.push_back(std::move(e));
    };
    push(0, 1);  // trivial character
    const BigInt base = pow_big(q, static_cast<unsigned>(n * (n - 1) / 2));
    for (int r = 1; r <= n; ++r) {
        BigInt magnitude = base;
        BigInt qi = 1;
        for (int i = 1; i <= n - r; ++i) {
            qi *= q;
            magnitude *= qi - 1;
        }
        BigInt mult = rank_count(n, q, r);
        if (spec.even_q) {
            BigInt value = (r % 2 == 0) ? spec.singular_count + magnitude : spec.singular_count - magnitude;
            push(std::move(value), std::move(mult));
        } else {
            // u and -u are distinct for odd q, so each conjugate pair splits
            // the rank-r index count evenly between the two signs
            if (mult % 2 != 0) throw std::logic_error("odd rank count in odd characteristic");
            BigInt half = mult / 2;
            push(spec.singular_count + magnitude, half);
            push(spec.singular_count - magnitude, half);
        }
    }
    return make_spectrum_report("closed-form", spec.vertices, std::move(entries));
}

}  // namespace ringspec
