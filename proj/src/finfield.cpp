#include "ringspec/finfield.hpp"

#include <algorithm>
#include <sstream>

namespace ringspec {
namespace detail {

struct FieldData {
    long p = 0;
    int k = 0;
    long q = 0;
    std::vector<int> modulus;  // c_0..c_k, monic

    std::vector<int> decode(long idx) const {
        std::vector<int> c(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<int>(idx % p);
            idx /= p;
        }
        return c;
    }

    long encode(const std::vector<int>& c) const {
        long idx = 0;
        for (int i = k - 1; i >= 0; --i) idx = idx * p + c[static_cast<std::size_t>(i)];
        return idx;
    }

    long add(long a, long b) const {
        long out = 0, mul = 1;
        for (int i = 0; i < k; ++i) {
            out += ((a % p + b % p) % p) * mul;
            a /= p;
            b /= p;
            mul *= p;
        }
        return out;
    }

    long neg(long a) const {
        long out = 0, mul = 1;
        for (int i = 0; i < k; ++i) {
            long d = a % p;
            out += (d == 0 ? 0 : p - d) * mul;
            a /= p;
            mul *= p;
        }
        return out;
    }

    long mul(long a, long b) const {
        if (k == 1) return (a * b) % p;
        std::vector<int> ca = decode(a), cb = decode(b);
        std::vector<long> prod(static_cast<std::size_t>(2 * k - 1), 0);
        for (int i = 0; i < k; ++i) {
            if (!ca[static_cast<std::size_t>(i)]) continue;
            for (int j = 0; j < k; ++j)
                prod[static_cast<std::size_t>(i + j)] +=
                    static_cast<long>(ca[static_cast<std::size_t>(i)]) * cb[static_cast<std::size_t>(j)];
        }
        // reduce mod modulus (monic)
        for (int d = 2 * k - 2; d >= k; --d) {
            long c = prod[static_cast<std::size_t>(d)] % p;
            if (c) {
                for (int i = 0; i <= k; ++i) {
                    long& slot = prod[static_cast<std::size_t>(d - k + i)];
                    slot = ((slot - c * modulus[static_cast<std::size_t>(i)]) % p + p) % p;
                }
            }
            prod[static_cast<std::size_t>(d)] = 0;
        }
        std::vector<int> out(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            out[static_cast<std::size_t>(i)] = static_cast<int>(((prod[static_cast<std::size_t>(i)] % p) + p) % p);
        return encode(out);
    }

    long pow(long a, long long e) const {
        long out = 1;  // index of 1
        long base = a;
        while (e > 0) {
            if (e & 1) out = mul(out, base);
            base = mul(base, base);
            e >>= 1;
        }
        return out;
    }

    long inv(long a) const {
        if (a == 0) throw std::domain_error("division by zero in " + name());
        return pow(a, q - 2);
    }

    int trace(long a) const {
        if (k == 1) return static_cast<int>(a);
        long t = 0, x = a;
        for (int j = 0; j < k; ++j) {
            t = add(t, x);
            x = pow(x, p);
        }
        // the trace lands in the prime field
        return static_cast<int>(t);
    }

    std::string name() const {
        std::ostringstream os;
        os << "GF(" << p;
        if (k > 1) os << "^" << k;
        os << ")";
        return os.str();
    }
};

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Remainder of f (degree deg_f coefficient vector) by monic g of degree d, mod p.
bool divides(const std::vector<int>& g, int d, std::vector<long> f, long p) {
    for (int dd = static_cast<int>(f.size()) - 1; dd >= d; --dd) {
        long c = f[static_cast<std::size_t>(dd)] % p;
        if (c) {
            for (int i = 0; i <= d; ++i) {
                long& slot = f[static_cast<std::size_t>(dd - d + i)];
                slot = ((slot - c * g[static_cast<std::size_t>(i)]) % p + p) % p;
            }
        }
        f[static_cast<std::size_t>(dd)] = 0;
    }
    for (int i = 0; i < d; ++i)
        if (f[static_cast<std::size_t>(i)] % p != 0) return false;
    return true;
}

bool is_irreducible(const std::vector<int>& mod, int k, long p) {
    std::vector<long> f(mod.begin(), mod.end());
    std::vector<int> g;
    for (int d = 1; d <= k / 2; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            g.assign(static_cast<std::size_t>(d + 1), 0);
            long rest = idx;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<int>(rest % p);
                rest /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            if (divides(g, d, f, p)) return false;
        }
    }
    return true;
}

}  // namespace
}  // namespace detail

Field Field::make(long p, int k, long max_order) {
    if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("field extension degree must be >= 1");
    long q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > max_order / p) throw BudgetError("field order exceeds budget " + std::to_string(max_order));
        q *= p;
    }

    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->k = k;
    data->q = q;

    if (k == 1) {
        data->modulus = {0, 1};  // x
        return Field(std::move(data));
    }
    // scan monic degree-k polynomials in index order, keep the first irreducible
    for (long idx = 0;; ++idx) {
        if (idx >= q) throw std::logic_error("no irreducible modulus found");  // cannot happen
        std::vector<int> mod(static_cast<std::size_t>(k + 1), 0);
        long rest = idx;
        for (int i = 0; i < k; ++i) {
            mod[static_cast<std::size_t>(i)] = static_cast<int>(rest % p);
            rest /= p;
        }
        mod[static_cast<std::size_t>(k)] = 1;
        if (detail::is_irreducible(mod, k, p)) {
            data->modulus = std::move(mod);
            break;
        }
    }
    return Field(std::move(data));
}

long Field::p() const { return data_->p; }
int Field::k() const { return data_->k; }
long Field::q() const { return data_->q; }
const std::vector<int>& Field::modulus() const { return data_->modulus; }

std::string Field::description() const {
    std::ostringstream os;
    os << data_->name() << "/[";
    for (std::size_t i = 0; i < data_->modulus.size(); ++i) {
        if (i) os << ",";
        os << data_->modulus[i];
    }
    os << "]";
    return os.str();
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

FieldElement Field::element(long index) const {
    if (index < 0 || index >= data_->q) throw std::invalid_argument("field element index out of range");
    return FieldElement(*this, index);
}

FieldElement Field::from_coeffs(const std::vector<int>& coeffs) const {
    if (coeffs.size() != static_cast<std::size_t>(data_->k))
        throw std::invalid_argument("coefficient vector has wrong length");
    std::vector<int> c(coeffs);
    for (auto& x : c) x = ((x % static_cast<int>(data_->p)) + static_cast<int>(data_->p)) % static_cast<int>(data_->p);
    return FieldElement(*this, data_->encode(c));
}

bool Field::operator==(const Field& o) const {
    return data_ == o.data_ || (data_->p == o.data_->p && data_->modulus == o.data_->modulus);
}

std::vector<int> FieldElement::coeffs() const { return field_.data_->decode(idx_); }

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ != o.field_) throw std::invalid_argument("elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return FieldElement(field_, field_.data_->add(idx_, o.idx_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return FieldElement(field_, field_.data_->add(idx_, field_.data_->neg(o.idx_)));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return FieldElement(field_, field_.data_->mul(idx_, o.idx_));
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.data_->neg(idx_)); }

FieldElement FieldElement::inverse() const { return FieldElement(field_, field_.data_->inv(idx_)); }

FieldElement FieldElement::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    return FieldElement(field_, field_.data_->pow(idx_, e));
}

bool FieldElement::operator==(const FieldElement& o) const { return field_ == o.field_ && idx_ == o.idx_; }

int FieldElement::trace() const { return field_.data_->trace(idx_); }

CyclotomicInteger FieldElement::psi() const {
    return CyclotomicInteger::zeta_pow(static_cast<int>(field_.data_->p), trace());
}

}  // namespace ringspec
