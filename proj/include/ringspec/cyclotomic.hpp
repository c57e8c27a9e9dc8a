#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ringspec {

/// Exact element of Z[zeta_p] for a prime conductor p, stored over the
/// Z-basis {1, zeta, ..., zeta^(p-2)}.  zeta^(p-1) is rewritten as
/// -(1 + zeta + ... + zeta^(p-2)), so the representation is unique.
/// For p = 2 this is just an ordinary integer.
class CyclotomicInteger {
public:
    using Coeff = long long;

    CyclotomicInteger() : p_(2), c_(1, 0) {}

    static CyclotomicInteger from_integer(Coeff v, int p = 2) {
        CyclotomicInteger z(p);
        z.c_[0] = v;
        return z;
    }

    /// zeta_p^exp, exp taken mod p.
    static CyclotomicInteger zeta_pow(int p, long long exp) {
        CyclotomicInteger z(p);
        long long e = exp % p;
        if (e < 0) e += p;
        if (e < p - 1) {
            z.c_[static_cast<std::size_t>(e)] = 1;
        } else {
            for (auto& c : z.c_) c = -1;
        }
        return z;
    }

    int conductor() const { return p_; }
    const std::vector<Coeff>& coords() const { return c_; }

    bool is_zero() const {
        for (Coeff c : c_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Coeff rational_value() const {
        if (!is_rational()) throw std::domain_error("cyclotomic value is not a rational integer");
        return c_[0];
    }

    CyclotomicInteger operator-() const {
        CyclotomicInteger z(*this);
        for (auto& c : z.c_) c = -c;
        return z;
    }

    CyclotomicInteger& operator+=(const CyclotomicInteger& o) {
        match(o, [&](std::size_t i, Coeff v) { c_[i] += v; });
        return *this;
    }
    CyclotomicInteger& operator-=(const CyclotomicInteger& o) {
        match(o, [&](std::size_t i, Coeff v) { c_[i] -= v; });
        return *this;
    }

    friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
    friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }

    CyclotomicInteger operator*(const CyclotomicInteger& o) const {
        if (p_ != o.p_) {
            if (is_rational()) return promoted(o.p_) * o;
            if (o.is_rational()) return *this * o.promoted(p_);
            throw std::invalid_argument("cyclotomic conductor mismatch");
        }
        CyclotomicInteger z(p_);
        const std::size_t m = c_.size();
        for (std::size_t i = 0; i < m; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (o.c_[j] == 0) continue;
                Coeff v = c_[i] * o.c_[j];
                std::size_t e = (i + j) % static_cast<std::size_t>(p_);
                if (e == m) {
                    for (auto& c : z.c_) c -= v;
                } else {
                    z.c_[e] += v;
                }
            }
        }
        return z;
    }

    CyclotomicInteger& operator*=(const CyclotomicInteger& o) { return *this = *this * o; }

    CyclotomicInteger operator*(Coeff k) const {
        CyclotomicInteger z(*this);
        for (auto& c : z.c_) c *= k;
        return z;
    }

    /// Complex conjugate: zeta^j -> zeta^(p-j).
    CyclotomicInteger conj() const {
        CyclotomicInteger z(p_);
        z.c_[0] = c_[0];
        for (std::size_t j = 1; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            std::size_t e = static_cast<std::size_t>(p_) - j;
            if (e == c_.size()) {
                for (auto& c : z.c_) c -= c_[j];
            } else {
                z.c_[e] += c_[j];
            }
        }
        return z;
    }

    bool operator==(const CyclotomicInteger& o) const {
        if (p_ == o.p_) return c_ == o.c_;
        if (is_rational() && o.is_rational()) return c_[0] == o.c_[0];
        return false;
    }
    bool operator!=(const CyclotomicInteger& o) const { return !(*this == o); }

    std::complex<double> to_complex() const {
        constexpr double tau = 6.283185307179586476925286766559;
        std::complex<double> z = 0;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            double a = tau * static_cast<double>(j) / p_;
            z += static_cast<double>(c_[j]) * std::complex<double>(std::cos(a), std::sin(a));
        }
        return z;
    }

    double abs() const { return std::abs(to_complex()); }

private:
    explicit CyclotomicInteger(int p) : p_(p), c_(static_cast<std::size_t>(p - 1), 0) {
        if (p < 2) throw std::invalid_argument("cyclotomic conductor must be >= 2");
    }

    CyclotomicInteger promoted(int p) const { return from_integer(c_[0], p); }

    template <typename Fn>
    void match(const CyclotomicInteger& o, Fn acc) {
        if (p_ == o.p_) {
            for (std::size_t i = 0; i < c_.size(); ++i) acc(i, o.c_[i]);
        } else if (o.is_rational()) {
            acc(0, o.c_[0]);
        } else if (is_rational()) {
            Coeff mine = c_[0];
            *this = o;
            for (auto& c : c_) c = 0;
            c_[0] = mine;
            for (std::size_t i = 0; i < c_.size(); ++i) acc(i, o.c_[i]);
        } else {
            throw std::invalid_argument("cyclotomic conductor mismatch");
        }
    }

    int p_;
    std::vector<Coeff> c_;
};

inline CyclotomicInteger operator*(CyclotomicInteger::Coeff k, const CyclotomicInteger& z) { return z * k; }

}  // namespace ringspec
