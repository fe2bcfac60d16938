#include "lndcert/rat.hpp"

namespace lndcert {

Rat::Rat(long num, long den) {
    if (den == 0) throw Error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) {
    if (sgn(v_.get_den()) == 0) throw Error("Rat: zero denominator");
    v_.canonicalize();
}

Rat Rat::from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw Error("Rat: cannot parse '" + s + "'");
    if (sgn(v.get_den()) == 0) throw Error("Rat: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rat(std::move(v));
}

Rat Rat::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(mpq_class(f));
}

Rat Rat::gcd(const Rat& a, const Rat& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class g, l;
    mpz_gcd(g.get_mpz_t(), a.v_.get_num().get_mpz_t(), b.v_.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), a.v_.get_den().get_mpz_t(), b.v_.get_den().get_mpz_t());
    mpq_class r(g, l);
    r.canonicalize();
    return Rat(std::move(r));
}

Rat Rat::abs() const {
    Rat r = *this;
    r.v_ = ::abs(r.v_);
    return r;
}

Rat Rat::inverse() const {
    if (is_zero()) throw Error("Rat: inverse of zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::to_string() const { return v_.get_str(); }

}  // namespace lndcert
