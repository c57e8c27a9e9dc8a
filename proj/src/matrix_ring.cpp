#include "ringspec/matrix_ring.hpp"

#include <sstream>

#include "json.hpp"

namespace ringspec {

MatrixFq::MatrixFq(Field field, int n) : field_(std::move(field)), n_(n) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), field_.zero());
}

MatrixFq MatrixFq::identity(const Field& field, int n) {
    MatrixFq m(field, n);
    for (int i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
}

MatrixFq MatrixFq::unit(const Field& field, int n, int i, int j) {
    MatrixFq m(field, n);
    m.set(i, j, field.one());
    return m;
}

MatrixFq MatrixFq::from_index(const Field& field, int n, uint64_t index) {
    MatrixFq m(field, n);
    const uint64_t q = static_cast<uint64_t>(field.q());
    for (int pos = n * n - 1; pos >= 0; --pos) {
        m.entries_[static_cast<std::size_t>(pos)] = field.element(static_cast<long>(index % q));
        index /= q;
    }
    if (index != 0) throw std::invalid_argument("matrix index out of range");
    return m;
}

uint64_t MatrixFq::index() const {
    uint64_t idx = 0;
    const uint64_t q = static_cast<uint64_t>(field_.q());
    for (const auto& e : entries_) idx = idx * q + static_cast<uint64_t>(e.index());
    return idx;
}

void MatrixFq::set(int i, int j, const FieldElement& v) {
    if (v.field() != field_) throw std::invalid_argument("entry from a different field");
    entries_[pos(i, j)] = v;
}

MatrixFq MatrixFq::operator+(const MatrixFq& o) const {
    if (n_ != o.n_ || field_ != o.field_) throw std::invalid_argument("matrix shape/field mismatch");
    MatrixFq out(field_, n_);
    for (std::size_t t = 0; t < entries_.size(); ++t) out.entries_[t] = entries_[t] + o.entries_[t];
    return out;
}

MatrixFq MatrixFq::operator-() const {
    MatrixFq out(field_, n_);
    for (std::size_t t = 0; t < entries_.size(); ++t) out.entries_[t] = -entries_[t];
    return out;
}

MatrixFq MatrixFq::operator*(const MatrixFq& o) const {
    if (n_ != o.n_ || field_ != o.field_) throw std::invalid_argument("matrix shape/field mismatch");
    MatrixFq out(field_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            FieldElement acc = field_.zero();
            for (int t = 0; t < n_; ++t) acc = acc + at(i, t) * o.at(t, j);
            out.set(i, j, acc);
        }
    return out;
}

bool MatrixFq::operator==(const MatrixFq& o) const {
    if (n_ != o.n_ || field_ != o.field_) return false;
    for (std::size_t t = 0; t < entries_.size(); ++t)
        if (entries_[t] != o.entries_[t]) return false;
    return true;
}

MatrixFq MatrixFq::transpose() const {
    MatrixFq out(field_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.set(j, i, at(i, j));
    return out;
}

bool MatrixFq::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

FieldElement MatrixFq::det() const {
    std::vector<FieldElement> m(entries_);
    auto at = [&](int i, int j) -> FieldElement& { return m[pos(i, j)]; };
    FieldElement d = field_.one();
    for (int col = 0; col < n_; ++col) {
        int piv = -1;
        for (int row = col; row < n_; ++row)
            if (!at(row, col).is_zero()) {
                piv = row;
                break;
            }
        if (piv < 0) return field_.zero();
        if (piv != col) {
            for (int j = 0; j < n_; ++j) std::swap(at(piv, j), at(col, j));
            d = -d;
        }
        d = d * at(col, col);
        FieldElement inv = at(col, col).inverse();
        for (int row = col + 1; row < n_; ++row) {
            if (at(row, col).is_zero()) continue;
            FieldElement f = at(row, col) * inv;
            for (int j = col; j < n_; ++j) at(row, j) = at(row, j) - f * at(col, j);
        }
    }
    return d;
}

int MatrixFq::rank() const {
    std::vector<FieldElement> m(entries_);
    auto at = [&](int i, int j) -> FieldElement& { return m[pos(i, j)]; };
    int r = 0;
    for (int col = 0; col < n_ && r < n_; ++col) {
        int piv = -1;
        for (int row = r; row < n_; ++row)
            if (!at(row, col).is_zero()) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < n_; ++j) std::swap(at(piv, j), at(r, j));
        FieldElement inv = at(r, col).inverse();
        for (int row = r + 1; row < n_; ++row) {
            if (at(row, col).is_zero()) continue;
            FieldElement f = at(row, col) * inv;
            for (int j = col; j < n_; ++j) at(row, j) = at(row, j) - f * at(r, j);
        }
        ++r;
    }
    return r;
}

uint64_t matrix_space_size(const Field& field, int n, uint64_t budget) {
    uint64_t total = 1;
    const uint64_t q = static_cast<uint64_t>(field.q());
    for (int i = 0; i < n * n; ++i) {
        if (total > budget / q)
            throw BudgetError("matrix enumeration would exceed budget of " + std::to_string(budget) + " matrices");
        total *= q;
    }
    if (total > budget)
        throw BudgetError("matrix enumeration would exceed budget of " + std::to_string(budget) + " matrices");
    return total;
}

MatrixStream::MatrixStream(Field field, int n, uint64_t budget)
    : field_(std::move(field)), n_(n), total_(matrix_space_size(field_, n, budget)) {}

std::optional<MatrixFq> MatrixStream::next() {
    if (next_ >= total_) return std::nullopt;
    return MatrixFq::from_index(field_, n_, next_++);
}

BigInt gl_order(int n, const BigInt& q) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    BigInt qn = pow_big(q, static_cast<unsigned>(n));
    BigInt out = 1;
    BigInt qi = 1;
    for (int i = 0; i < n; ++i) {
        out *= qn - qi;
        qi *= q;
    }
    return out;
}

BigRational c_coefficient(int n, const BigInt& q) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    BigRational out = 1;
    BigInt qi = 1;
    for (int i = 1; i <= n; ++i) {
        qi *= q;
        out *= BigRational(qi - 1, qi);
    }
    return out;
}

BigInt rank_count(int n, const BigInt& q, int r) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (r < 0 || r > n) throw std::invalid_argument("rank out of range");
    // (prod_{i<r} (q^n - q^i))^2 / prod_{i<r} (q^r - q^i)
    BigInt num = 1, den = 1;
    BigInt qn = pow_big(q, static_cast<unsigned>(n));
    BigInt qr = pow_big(q, static_cast<unsigned>(r));
    BigInt qi = 1;
    for (int i = 0; i < r; ++i) {
        num *= qn - qi;
        den *= qr - qi;
        qi *= q;
    }
    BigRational exact = BigRational(num * num, den);
    if (boost::multiprecision::denominator(exact) != 1) throw std::logic_error("rank count is not integral");
    return boost::multiprecision::numerator(exact);
}

CountReport count_report(int n, const BigInt& q) {
    CountReport rep;
    rep.n = n;
    rep.q = q;
    rep.gl_order = gl_order(n, q);
    rep.c = c_coefficient(n, q);
    for (int r = 0; r <= n; ++r) rep.rank_counts.push_back(rank_count(n, q, r));
    return rep;
}

std::string CountReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["q"] = dec(q);
    j["gl_order"] = dec(gl_order);
    j["c"] = dec(c);
    nlohmann::ordered_json counts;
    for (std::size_t r = 0; r < rank_counts.size(); ++r) counts[std::to_string(r)] = dec(rank_counts[r]);
    j["rank_counts"] = counts;
    return j.dump();
}

std::vector<BigInt> rank_census(const Field& field, int n, uint64_t budget) {
    std::vector<BigInt> census(static_cast<std::size_t>(n) + 1, 0);
    MatrixStream stream(field, n, budget);
    while (auto m = stream.next()) ++census[static_cast<std::size_t>(m->rank())];
    return census;
}

}  // namespace ringspec
