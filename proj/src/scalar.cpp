#include "ghom/scalar.hpp"

#include <stdexcept>

namespace ghom {

std::string Field::str() const {
    return p == 0 ? "QQ" : "GF(" + std::to_string(p) + ")";
}

Field field_rationals() { return Field{0}; }

static bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field field_prime(uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw std::invalid_argument("characteristic must be a prime below 2^31");
    return Field{p};
}

void Scalar::check_same(const Scalar& o) const {
    if (!(f_ == o.f_))
        throw std::invalid_argument("scalar arithmetic across distinct fields");
}

Scalar Scalar::zero(Field f) {
    Scalar s; s.f_ = f; return s;
}

Scalar Scalar::one(Field f) { return of_int(f, 1); }

Scalar Scalar::of_int(Field f, long long n) {
    Scalar s; s.f_ = f;
    if (f.p) {
        long long m = n % (long long)f.p;
        if (m < 0) m += f.p;
        s.r_ = m;
    } else {
        s.q_ = n;
    }
    return s;
}

Scalar Scalar::of_rational(Field f, const Rational& q) {
    Scalar s; s.f_ = f;
    if (f.p) {
        using boost::multiprecision::cpp_int;
        cpp_int num = numerator(q) % f.p, den = denominator(q) % f.p;
        long long n = (long long)num, d = (long long)den;
        if (n < 0) n += f.p;
        if (d < 0) d += f.p;
        Scalar dd = of_int(f, d);
        if (dd.is_zero()) throw std::domain_error("denominator divisible by the characteristic");
        return of_int(f, n) * dd.inverse();
    }
    s.q_ = q;
    return s;
}

bool Scalar::is_zero() const { return f_.p ? r_ == 0 : q_.is_zero(); }
bool Scalar::is_one() const { return f_.p ? r_ == 1 : q_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s; s.f_ = f_;
    if (f_.p) { s.r_ = r_ + o.r_; if (s.r_ >= f_.p) s.r_ -= f_.p; }
    else s.q_ = q_ + o.q_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s; s.f_ = f_;
    if (f_.p) { s.r_ = r_ - o.r_; if (s.r_ < 0) s.r_ += f_.p; }
    else s.q_ = q_ - o.q_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s; s.f_ = f_;
    if (f_.p) s.r_ = (int64_t)((__int128)r_ * o.r_ % f_.p);
    else s.q_ = q_ * o.q_;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s; s.f_ = f_;
    if (f_.p) s.r_ = r_ ? f_.p - r_ : 0;
    else s.q_ = -q_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s; s.f_ = f_;
    if (f_.p) {
        // extended Euclid on (r_, p)
        int64_t a = r_, b = f_.p, x0 = 1, x1 = 0;
        while (b) {
            int64_t q = a / b;
            int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        if (x0 < 0) x0 += f_.p;
        s.r_ = x0;
    } else {
        s.q_ = 1 / q_;
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(f_ == o.f_)) return false;
    return f_.p ? r_ == o.r_ : q_ == o.q_;
}

int Scalar::cmp(const Scalar& o) const {
    check_same(o);
    if (f_.p) return r_ < o.r_ ? -1 : r_ > o.r_ ? 1 : 0;
    return q_ < o.q_ ? -1 : q_ > o.q_ ? 1 : 0;
}

std::string Scalar::str() const {
    if (f_.p) return std::to_string(r_);
    return q_.str();
}

} // namespace ghom
