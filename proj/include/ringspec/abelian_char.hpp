#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ringspec/bigint.hpp"
#include "ringspec/cyclotomic.hpp"
#include "ringspec/matrix_ring.hpp"

namespace ringspec {

/// Product of cyclic groups Z_m1 x ... x Z_mt.  Elements are indexed
/// 0..|G|-1 in mixed-radix order with the first factor most significant.
class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<long> factors);

    long order() const { return order_; }
    const std::vector<long>& factors() const { return factors_; }
    /// lcm of the cyclic orders: the conductor of the character values.
    long exponent() const { return exponent_; }
    bool is_elementary_two() const;

    std::vector<long> tuple(long index) const;
    long index(const std::vector<long>& tuple) const;

    long add(long a, long b) const;
    long neg(long a) const;

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

private:
    std::vector<long> factors_;
    long order_;
    long exponent_;
};

/// Character phi_u of an abelian group, indexed by a group element u:
/// phi_u(x) = prod_i zeta_{m_i}^{u_i x_i}.  u -> phi_u identifies the group
/// with its dual.
class Character {
public:
    Character(AbelianGroup group, long u);

    const AbelianGroup& group() const { return group_; }
    long u() const { return u_; }
    bool is_trivial() const { return u_ == 0; }
    /// Real-valued iff 2u = 0 (values then lie in {+1,-1}).
    bool is_real() const;

    /// Exponent e with phi_u(x) = zeta_L^e, L = group exponent.
    long root_exponent(long x) const;
    std::complex<double> eval(long x) const;
    /// Exact value; requires a prime group exponent.
    CyclotomicInteger eval_exact(long x) const;

private:
    AbelianGroup group_;
    long u_;
    std::vector<long> u_tuple_;
    std::vector<long> weights_;  // L / m_i
};

/// <phi, S> = sum over S of phi(s), kept as a histogram of root-of-unity
/// exponents so the exact and float views come from one accumulation.
class CharacterSum {
public:
    CharacterSum(long conductor, std::vector<long long> exponent_counts);

    long conductor() const { return conductor_; }
    const std::vector<long long>& exponent_counts() const { return counts_; }

    std::complex<double> to_complex() const;
    double abs() const { return std::abs(to_complex()); }

    /// Exact form; available when the conductor is 1, 2 or prime.
    std::optional<CyclotomicInteger> exact() const;
    /// Exact integer value when one is certain: rational exact form, or all
    /// mass on exponents {0, L/2} (real characters).
    std::optional<long long> exact_integer() const;

private:
    long conductor_;
    std::vector<long long> counts_;
};

CharacterSum char_sum(const Character& chi, const std::vector<long>& subset);

/// The paper's character of the additive matrix group:
/// phi_u(x) = psi(sum_ij u_ij x_ij), exact in Z[zeta_p].
CyclotomicInteger matrix_char_eval(const MatrixFq& u, const MatrixFq& x);

bool is_real_matrix_character(const MatrixFq& u);

/// Closed form of sum_{a in GL_n} phi_u(a) for u of rank r >= 1:
/// (-1)^r q^(n(n-1)/2) prod_{i=1}^{n-r} (q^i - 1).
BigInt li_hu_sum(int n, const BigInt& q, int r);

/// sum_{s singular} phi_u(s) = -li_hu_sum(n, q, r), since the sum over the
/// whole matrix space vanishes for u != 0.
BigInt singular_char_sum(int n, const BigInt& q, int r);

}  // namespace ringspec
