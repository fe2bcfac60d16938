#include "lndcert/ratfunc.hpp"

namespace lndcert {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_table(num_.table(), den_.table(), "RatFunc");
    if (den_.is_zero()) throw Error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(den_.table(), Rat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *exact_divide(num_, g);
        den_ = *exact_divide(den_, g);
    }
    Rat c = Rat::gcd(num_.content(), den_.content());
    num_ = num_.scaled(c.inverse());
    den_ = den_.scaled(c.inverse());
    if (den_.leading_coeff().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

namespace {
Poly unit_denominator(const Poly& num) {
    if (!num.table()) throw Error("RatFunc: detached polynomial");
    return Poly::constant(num.table(), Rat(1));
}
}  // namespace

RatFunc::RatFunc(Poly num) : RatFunc(num, unit_denominator(num)) {}

Poly RatFunc::as_poly() const {
    if (!is_poly()) throw Error("RatFunc: not a polynomial");
    return num_.scaled(den_.constant_value().inverse());
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    *this = RatFunc(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw Error("RatFunc: division by zero");
    *this = RatFunc(num_ * o.den_, den_ * o.num_);
    return *this;
}

RatFunc RatFunc::pow(int n) const {
    if (n == 0) return RatFunc::constant(table(), Rat(1));
    if (n < 0) {
        if (is_zero()) throw Error("RatFunc: negative power of zero");
        RatFunc inv(den_, num_);
        return inv.pow(-n);
    }
    RatFunc result = RatFunc::constant(table(), Rat(1));
    RatFunc base = *this;
    unsigned e = static_cast<unsigned>(n);
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace lndcert
