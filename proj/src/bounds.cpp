#include "ringspec/bounds.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "ringspec/matrix_ring.hpp"
#include "ringspec/totalgraph.hpp"

namespace ringspec {

RationalBound hoffman_bound(const BigInt& v, const BigInt& d, const BigRational& theta_min) {
    if (theta_min >= 0) return {BigRational(v), true};
    BigRational ratio = BigRational(d) / theta_min;
    return {BigRational(v) / (1 - ratio), false};
}

RationalBound hoffman_type_bound(const BigInt& v, const BigInt& delta, const BigRational& lambda_max) {
    if (lambda_max <= 0) return {BigRational(v), true};
    return {BigRational(v) * (1 - BigRational(delta) / lambda_max), false};
}

namespace {

BigInt exact_ht_floor(int n, const BigInt& q) {
    TotalGraphSpec spec = total_graph_spec(n, q);
    SpectrumReport spectrum = closed_form_spectrum(n, q);
    BigInt delta = spec.singular_count - 1;
    RationalBound ht = hoffman_type_bound(spec.vertices, delta, BigRational(spectrum.lambda_max_exact()));
    return floor_rational(ht.value);
}

}  // namespace

BigInt alpha_upper_total(int n, const BigInt& q, AlphaMode mode) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    if (mode == AlphaMode::Theorem) return pow_big(q, static_cast<unsigned>(n * n - n + 1));
    return exact_ht_floor(n, q);
}

BigInt alpha_upper_regular(int n, const BigInt& q, AlphaMode mode) { return alpha_upper_total(n, q, mode); }

BigRational chi_lower(int n, const BigInt& q, ChiMode mode) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    BigInt qpow = pow_big(q, static_cast<unsigned>(n - 1));
    if (mode == ChiMode::Closed) {
        BigRational coeff = 1 - BigRational(1, q) - BigRational(1, q * q);
        return coeff * qpow;
    }
    return c_coefficient(n, q) * BigRational(qpow);
}

BigRational tomon_lower(int n, const BigInt& q) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    BigRational base(q, 4);
    BigRational out = 1;
    for (int i = 0; i < n / 2; ++i) out *= base;
    return out;
}

BigInt akbari_clique_upper(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    BigInt total = 0;
    BigInt factorial = 1;
    BigInt binom = 1;  // C(n, 0)
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            factorial *= k;
            binom = binom * (n - k + 1) / k;
        }
        total += factorial * binom * binom;
    }
    return total;
}

std::string BoundReport::to_json() const {
    nlohmann::ordered_json j;
    j["target"] = target;
    j["quantity"] = quantity;
    j["formula"] = formula;
    j["value"] = dec(value);
    if (value_int) j["value_int"] = dec(*value_int);
    if (v) j["v"] = dec(*v);
    if (delta_or_d) j["delta_or_d"] = dec(*delta_or_d);
    if (lambda_or_theta) j["lambda_max_or_theta_min"] = dec(*lambda_or_theta);
    if (!note.empty()) j["note"] = note;
    return j.dump();
}

std::string BoundReport::to_csv_row() const {
    std::ostringstream os;
    os << target << "," << quantity << "," << formula << "," << dec(value) << ",";
    if (value_int) os << dec(*value_int);
    os << ",";
    if (v) os << dec(*v);
    os << ",";
    if (delta_or_d) os << dec(*delta_or_d);
    os << ",";
    if (lambda_or_theta) os << dec(*lambda_or_theta);
    os << ",";
    if (!note.empty()) os << "\"" << note << "\"";
    return os.str();
}

std::vector<BoundReport> bounds_table(int n, const BigInt& q) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    TotalGraphSpec spec = total_graph_spec(n, q);
    SpectrumReport spectrum = closed_form_spectrum(n, q);
    const BigInt lam = spectrum.lambda_max_exact();
    const BigInt delta = spec.singular_count - 1;
    const std::string total_name = "T_" + std::to_string(n) + "(" + dec(q) + ")";
    const std::string regular_name = "Gamma_" + std::to_string(n) + "(" + dec(q) + ")";

    std::vector<BoundReport> rows;

    {
        BoundReport r;
        r.target = total_name;
        r.quantity = "alpha_upper";
        r.formula = "hoffman_type_exact";
        RationalBound ht = hoffman_type_bound(spec.vertices, delta, BigRational(lam));
        r.value = ht.value;
        r.value_int = floor_rational(ht.value);
        r.v = spec.vertices;
        r.delta_or_d = delta;
        r.lambda_or_theta = BigRational(lam);
        rows.push_back(std::move(r));
    }
    {
        BoundReport r;
        r.target = total_name;
        r.quantity = "alpha_upper";
        r.formula = "theorem_power";
        r.value = BigRational(alpha_upper_total(n, q, AlphaMode::Theorem));
        r.value_int = alpha_upper_total(n, q, AlphaMode::Theorem);
        r.v = spec.vertices;
        rows.push_back(std::move(r));
    }
    for (AlphaMode mode : {AlphaMode::Exact, AlphaMode::Theorem}) {
        BoundReport r;
        r.target = regular_name;
        r.quantity = "alpha_upper";
        r.formula = mode == AlphaMode::Exact ? "hoffman_type_exact" : "theorem_power";
        BigInt bound = alpha_upper_regular(n, q, mode);
        r.value = BigRational(bound);
        r.value_int = bound;
        r.note = "inherited from the total graph (induced subgraph)";
        rows.push_back(std::move(r));
    }
    for (ChiMode mode : {ChiMode::Closed, ChiMode::ExactRational}) {
        BoundReport r;
        r.target = regular_name;
        r.quantity = "chi_lower";
        r.formula = mode == ChiMode::Closed ? "chi_lower_closed" : "chi_lower_exact_rational";
        r.value = chi_lower(n, q, mode);
        r.value_int = ceil_rational(r.value);
        rows.push_back(std::move(r));
    }
    {
        BoundReport r;
        r.target = regular_name;
        r.quantity = "chi_lower_literature";
        r.formula = "tomon_power";
        r.value = tomon_lower(n, q);
        r.value_int = ceil_rational(r.value);
        r.note = "stated for odd q in the source";
        if (chi_lower(n, q, ChiMode::Closed) > r.value) r.note += "; improved by chi_lower_closed";
        rows.push_back(std::move(r));
    }
    {
        BoundReport r;
        r.target = regular_name;
        r.quantity = "omega_upper";
        r.formula = "akbari_factorial_sum";
        r.value = BigRational(akbari_clique_upper(n));
        r.value_int = akbari_clique_upper(n);
        r.note = "stated for odd q in the source; independent of q";
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace ringspec
