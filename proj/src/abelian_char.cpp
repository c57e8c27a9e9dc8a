#include "ringspec/abelian_char.hpp"

#include <numeric>
#include <stdexcept>

namespace ringspec {

namespace {

bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<long> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("abelian group needs at least one cyclic factor");
    order_ = 1;
    exponent_ = 1;
    for (long m : factors_) {
        if (m < 1) throw std::invalid_argument("cyclic factor must be >= 1");
        order_ *= m;
        exponent_ = std::lcm(exponent_, m);
    }
}

bool AbelianGroup::is_elementary_two() const {
    for (long m : factors_)
        if (m > 2) return false;
    return true;
}

std::vector<long> AbelianGroup::tuple(long index) const {
    std::vector<long> t(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        t[i] = index % factors_[i];
        index /= factors_[i];
    }
    return t;
}

long AbelianGroup::index(const std::vector<long>& tuple) const {
    if (tuple.size() != factors_.size()) throw std::invalid_argument("tuple length mismatch");
    long idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        long x = tuple[i] % factors_[i];
        if (x < 0) x += factors_[i];
        idx = idx * factors_[i] + x;
    }
    return idx;
}

long AbelianGroup::add(long a, long b) const {
    long idx = 0;
    // walk digits most-significant first
    long da = a, db = b;
    std::vector<long> ta(factors_.size()), tb(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        ta[i] = da % factors_[i];
        da /= factors_[i];
        tb[i] = db % factors_[i];
        db /= factors_[i];
    }
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        long s = ta[i] + tb[i];
        if (s >= factors_[i]) s -= factors_[i];
        idx = idx * factors_[i] + s;
    }
    return idx;
}

long AbelianGroup::neg(long a) const {
    long idx = 0;
    std::vector<long> t = tuple(a);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        long s = t[i] == 0 ? 0 : factors_[i] - t[i];
        idx = idx * factors_[i] + s;
    }
    return idx;
}

Character::Character(AbelianGroup group, long u) : group_(std::move(group)), u_(u) {
    if (u < 0 || u >= group_.order()) throw std::invalid_argument("character index out of range");
    u_tuple_ = group_.tuple(u);
    const long L = group_.exponent();
    weights_.reserve(u_tuple_.size());
    for (long m : group_.factors()) weights_.push_back(L / m);
}

bool Character::is_real() const { return group_.add(u_, u_) == 0; }

long Character::root_exponent(long x) const {
    std::vector<long> xt = group_.tuple(x);
    const long L = group_.exponent();
    long e = 0;
    for (std::size_t i = 0; i < xt.size(); ++i) e = (e + u_tuple_[i] * xt[i] % L * weights_[i]) % L;
    return e;
}

std::complex<double> Character::eval(long x) const {
    constexpr double tau = 6.283185307179586476925286766559;
    double a = tau * static_cast<double>(root_exponent(x)) / static_cast<double>(group_.exponent());
    return {std::cos(a), std::sin(a)};
}

CyclotomicInteger Character::eval_exact(long x) const {
    const long L = group_.exponent();
    if (L == 1) return CyclotomicInteger::from_integer(1);
    if (!is_prime_long(L)) throw std::domain_error("exact character values need a prime group exponent");
    return CyclotomicInteger::zeta_pow(static_cast<int>(L), root_exponent(x));
}

CharacterSum::CharacterSum(long conductor, std::vector<long long> exponent_counts)
    : conductor_(conductor), counts_(std::move(exponent_counts)) {
    if (conductor_ < 1 || counts_.size() != static_cast<std::size_t>(conductor_))
        throw std::invalid_argument("bad exponent histogram");
}

std::complex<double> CharacterSum::to_complex() const {
    constexpr double tau = 6.283185307179586476925286766559;
    std::complex<double> z = 0;
    for (long e = 0; e < conductor_; ++e) {
        if (!counts_[static_cast<std::size_t>(e)]) continue;
        double a = tau * static_cast<double>(e) / static_cast<double>(conductor_);
        z += static_cast<double>(counts_[static_cast<std::size_t>(e)]) * std::complex<double>(std::cos(a), std::sin(a));
    }
    return z;
}

std::optional<CyclotomicInteger> CharacterSum::exact() const {
    if (conductor_ == 1) return CyclotomicInteger::from_integer(counts_[0]);
    if (!is_prime_long(conductor_)) return std::nullopt;
    CyclotomicInteger z = CyclotomicInteger::from_integer(0, static_cast<int>(conductor_));
    for (long e = 0; e < conductor_; ++e)
        if (counts_[static_cast<std::size_t>(e)])
            z += CyclotomicInteger::zeta_pow(static_cast<int>(conductor_), e) * counts_[static_cast<std::size_t>(e)];
    return z;
}

std::optional<long long> CharacterSum::exact_integer() const {
    if (auto z = exact(); z && z->is_rational()) return z->rational_value();
    // mass only on {1, -1}
    long long pos = counts_[0];
    long long neg = 0;
    for (long e = 1; e < conductor_; ++e) {
        if (!counts_[static_cast<std::size_t>(e)]) continue;
        if (2 * e == conductor_) {
            neg = counts_[static_cast<std::size_t>(e)];
        } else {
            return std::nullopt;
        }
    }
    return pos - neg;
}

CharacterSum char_sum(const Character& chi, const std::vector<long>& subset) {
    const long L = chi.group().exponent();
    std::vector<long long> counts(static_cast<std::size_t>(L), 0);
    for (long s : subset) {
        if (s < 0 || s >= chi.group().order()) throw std::invalid_argument("subset element outside the group");
        ++counts[static_cast<std::size_t>(chi.root_exponent(s))];
    }
    return CharacterSum(L, std::move(counts));
}

CyclotomicInteger matrix_char_eval(const MatrixFq& u, const MatrixFq& x) {
    if (u.n() != x.n() || u.field() != x.field()) throw std::invalid_argument("matrix shape/field mismatch");
    FieldElement acc = u.field().zero();
    for (int i = 0; i < u.n(); ++i)
        for (int j = 0; j < u.n(); ++j) acc = acc + u.at(i, j) * x.at(i, j);
    return acc.psi();
}

bool is_real_matrix_character(const MatrixFq& u) { return u.is_zero() || u.field().p() == 2; }

BigInt li_hu_sum(int n, const BigInt& q, int r) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (r < 1 || r > n)
        throw std::invalid_argument("rank must be in 1..n (the trivial character sums to |GL_n| instead)");
    BigInt out = pow_big(q, static_cast<unsigned>(n * (n - 1) / 2));
    BigInt qi = 1;
    for (int i = 1; i <= n - r; ++i) {
        qi *= q;
        out *= qi - 1;
    }
    return (r % 2 == 0) ? out : -out;
}

BigInt singular_char_sum(int n, const BigInt& q, int r) { return -li_hu_sum(n, q, r); }

}  // namespace ringspec
