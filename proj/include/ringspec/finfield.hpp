#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringspec/cyclotomic.hpp"
#include "ringspec/errors.hpp"

namespace ringspec {

class FieldElement;

namespace detail {
struct FieldData;
}

/// GF(p^k) with exact arithmetic.  Elements of F_p[x]/(modulus) are indexed
/// by 0..q-1; index sum_i c_i p^i corresponds to the residue sum_i c_i x^i,
/// so the index order doubles as the canonical element order.
class Field {
public:
    static constexpr long kDefaultMaxOrder = 1L << 16;

    /// Builds GF(p^k) with the smallest monic irreducible modulus of degree k
    /// (smallest in the index order above; deterministic across runs).
    static Field make(long p, int k, long max_order = kDefaultMaxOrder);

    long p() const;
    int k() const;
    long q() const;
    /// Modulus coefficients c_0..c_k with c_k = 1.
    const std::vector<int>& modulus() const;
    std::string description() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(long index) const;
    FieldElement from_coeffs(const std::vector<int>& coeffs) const;

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    friend class FieldElement;
    explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> data_;
};

class FieldElement {
public:
    long index() const { return idx_; }
    std::vector<int> coeffs() const;
    const Field& field() const { return field_; }
    bool is_zero() const { return idx_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;  ///< throws std::domain_error on zero
    FieldElement pow(long long e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Tr(x) = x + x^p + ... + x^(p^(k-1)), as an integer in [0, p).
    int trace() const;

    /// The additive character psi(x) = zeta_p^Tr(x).
    CyclotomicInteger psi() const;

private:
    friend class Field;
    FieldElement(Field f, long idx) : field_(std::move(f)), idx_(idx) {}
    void check_same(const FieldElement& o) const;

    Field field_;
    long idx_;
};

}  // namespace ringspec
