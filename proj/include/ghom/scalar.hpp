#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>
#include <cstdint>
#include <string>

namespace ghom {

using Rational = boost::multiprecision::cpp_rational;

/* Coefficient field: p == 0 selects the rationals, p > 0 a prime field. */
struct Field {
    uint32_t p = 0;

    bool is_prime_field() const { return p != 0; }
    bool operator==(const Field&) const = default;
    std::string str() const;
};

Field field_rationals();
Field field_prime(uint32_t p);   // throws unless p is prime and p < 2^31

/* Exact field element; carries its field so mixed-field arithmetic can be rejected. */
class Scalar {
public:
    Scalar() = default;
    static Scalar zero(Field f);
    static Scalar one(Field f);
    static Scalar of_int(Field f, long long n);
    static Scalar of_rational(Field f, const Rational& q); // prime field: reduces num/den mod p

    Field field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // total order used only for canonical printing/sorting, not algebra
    int cmp(const Scalar& o) const;

    // least nonnegative residue (prime field only)
    int64_t residue() const { return r_; }
    const Rational& rational() const { return q_; }

    std::string str() const;

private:
    Field f_;
    int64_t r_ = 0;   // prime-field value in [0, p)
    Rational q_ = 0;  // rational value when p == 0

    void check_same(const Scalar& o) const;
};

} // namespace ghom
