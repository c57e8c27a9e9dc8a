#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringspec/bigint.hpp"

namespace ringspec {

/// A spectral bound evaluation; degenerate means the trivial fallback
/// (empty graph) was returned.
struct RationalBound {
    BigRational value;
    bool degenerate = false;
};

/// Hoffman ratio bound for a d-regular graph on v vertices with smallest
/// adjacency eigenvalue theta_min < 0: alpha <= v / (1 - d/theta_min).
RationalBound hoffman_bound(const BigInt& v, const BigInt& d, const BigRational& theta_min);

/// Hoffman-type bound for a graph of minimal degree delta on v vertices with
/// largest Laplacian eigenvalue lambda_max > 0: alpha <= v (1 - delta/lambda_max).
RationalBound hoffman_type_bound(const BigInt& v, const BigInt& delta, const BigRational& lambda_max);

enum class AlphaMode { Exact, Theorem };
enum class ChiMode { Closed, ExactRational };

/// Upper bound on alpha(T_n(q)).  Theorem mode: q^(n^2-n+1).  Exact mode:
/// floor of the Hoffman-type bound fed with the closed-form lambda_max and
/// delta = |S| - 1.
BigInt alpha_upper_total(int n, const BigInt& q, AlphaMode mode);

/// Same value for Gamma_n(q); the bound is inherited by induced subgraphs.
BigInt alpha_upper_regular(int n, const BigInt& q, AlphaMode mode);

/// Lower bound on chi(Gamma_n(q)).  Closed: (1 - 1/q - 1/q^2) q^(n-1).
/// ExactRational: c_n(q) q^(n-1) = |GL_n| / q^(n^2-n+1).
BigRational chi_lower(int n, const BigInt& q, ChiMode mode);

/// Literature comparison: chi(Gamma_n(q)) >= (q/4)^floor(n/2), stated for odd q.
BigRational tomon_lower(int n, const BigInt& q);

/// Literature comparison: omega(Gamma_n(q)) <= sum_k k! C(n,k)^2 for odd q;
/// independent of q.
BigInt akbari_clique_upper(int n);

struct BoundReport {
    std::string target;    // "T_n(q)" or "Gamma_n(q)"
    std::string quantity;  // alpha_upper | chi_lower | omega_upper | chi_lower_literature
    std::string formula;   // tag naming the source formula
    BigRational value;
    std::optional<BigInt> value_int;  // floor for alpha, ceil for chi
    std::optional<BigInt> v;
    std::optional<BigInt> delta_or_d;
    std::optional<BigRational> lambda_or_theta;
    std::string note;

    std::string to_json() const;
    std::string to_csv_row() const;
};

inline const char* kBoundCsvHeader =
    "target,quantity,formula,value_rational,value_int,v,delta_or_d,lambda_max_or_theta_min,note";

/// One row per bound formula for the pair (n, q), exact and theorem modes
/// side by side plus the literature comparison rows.
std::vector<BoundReport> bounds_table(int n, const BigInt& q);

}  // namespace ringspec
