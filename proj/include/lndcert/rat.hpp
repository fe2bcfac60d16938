#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "lndcert/util.hpp"

namespace lndcert {

/// Exact rational number. Always canonical: gcd(|num|, den) = 1, den >= 1.
/// Arithmetic is arbitrary precision; there is no rounding anywhere.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: intentionally implicit, mirrors integer literals
    Rat(long num, long den);
    explicit Rat(mpq_class v);

    static Rat from_string(const std::string& s);  // "7", "-3/4"
    static Rat factorial(unsigned long n);
    /// gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); the content convention for
    /// rational-coefficient polynomials.
    static Rat gcd(const Rat& a, const Rat& b);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat abs() const;
    Rat inverse() const;  // throws Error on zero

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);  // throws Error on zero divisor

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const;  // "7", "-3/4"

private:
    mpq_class v_;
};

}  // namespace lndcert
