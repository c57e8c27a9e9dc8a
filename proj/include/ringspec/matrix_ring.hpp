#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ringspec/bigint.hpp"
#include "ringspec/errors.hpp"
#include "ringspec/finfield.hpp"

namespace ringspec {

inline constexpr uint64_t kDefaultEnumerationBudget = 1'000'000;

/// Square matrix over a Field.  The canonical index reads the matrix
/// row-major as a base-q number with entry (0,0) most significant; this
/// single ordering is reused as the vertex order of every graph built
/// over M_n(F_q).
class MatrixFq {
public:
    MatrixFq(Field field, int n);  // zero matrix
    static MatrixFq identity(const Field& field, int n);
    static MatrixFq from_index(const Field& field, int n, uint64_t index);
    static MatrixFq unit(const Field& field, int n, int i, int j);  // E_ij

    int n() const { return n_; }
    const Field& field() const { return field_; }
    uint64_t index() const;

    const FieldElement& at(int i, int j) const { return entries_[pos(i, j)]; }
    void set(int i, int j, const FieldElement& v);

    MatrixFq operator+(const MatrixFq& o) const;
    MatrixFq operator-() const;
    MatrixFq operator*(const MatrixFq& o) const;
    bool operator==(const MatrixFq& o) const;
    bool operator!=(const MatrixFq& o) const { return !(*this == o); }

    FieldElement det() const;
    int rank() const;
    MatrixFq transpose() const;
    bool is_zero() const;

private:
    std::size_t pos(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j); }
    Field field_;
    int n_;
    std::vector<FieldElement> entries_;
};

/// Number of n x n matrices, with a budget guard (throws BudgetError).
uint64_t matrix_space_size(const Field& field, int n, uint64_t budget = kDefaultEnumerationBudget);

/// Single-consumer stream over all matrices in canonical index order.
class MatrixStream {
public:
    MatrixStream(Field field, int n, uint64_t budget = kDefaultEnumerationBudget);
    std::optional<MatrixFq> next();
    uint64_t total() const { return total_; }

private:
    Field field_;
    int n_;
    uint64_t total_;
    uint64_t next_ = 0;
};

/// |GL_n(F_q)| = (q^n - 1)(q^n - q)...(q^n - q^(n-1)).
BigInt gl_order(int n, const BigInt& q);

/// c_n(q) = (1 - 1/q)(1 - 1/q^2)...(1 - 1/q^n), so |GL_n| = c_n(q) q^(n^2).
BigRational c_coefficient(int n, const BigInt& q);

/// Number of n x n matrices over F_q of rank exactly r.
BigInt rank_count(int n, const BigInt& q, int r);

struct CountReport {
    int n = 0;
    BigInt q;
    BigInt gl_order;
    BigRational c;
    std::vector<BigInt> rank_counts;  // index r = 0..n

    std::string to_json() const;
};

/// Counting formulas only; no enumeration.
CountReport count_report(int n, const BigInt& q);

/// Exhaustive rank census (the oracle for the formulas above).
std::vector<BigInt> rank_census(const Field& field, int n, uint64_t budget = kDefaultEnumerationBudget);

}  // namespace ringspec
