#include "skein/rational_fn.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace skein {

RationalFn::RationalFn(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    canonicalize();
}

void RationalFn::canonicalize() {
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    // Move the denominator's unit factor into the numerator.
    long dshift = den_.min_exp();
    if (dshift != 0) {
        den_ = den_.shifted(-dshift);
        num_ = num_.shifted(-dshift);
    }
    Laurent g = Laurent::gcd(num_, den_);
    if (!g.is_one()) {
        long nshift = num_.min_exp();
        num_ = *num_.shifted(-nshift).divided_exactly_by(g);
        num_ = num_.shifted(nshift);
        den_ = *den_.divided_exactly_by(g);
    }
    if (den_.terms().rbegin()->second < 0) {
        den_ = -den_;
        num_ = -num_;
    }
}

const Laurent& RationalFn::as_laurent() const {
    if (!is_laurent()) throw std::logic_error("value is not a Laurent polynomial: " + str());
    return num_;
}

RationalFn RationalFn::operator-() const {
    RationalFn r(*this);
    r.num_ = -r.num_;
    return r;
}

namespace {

// Strips the joint integer content of an already gcd-reduced pair.
void strip_content(Laurent& num, Laurent& den) {
    if (num.is_zero()) {
        den = Laurent(1);
        return;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.int_content().get_mpz_t(), den.int_content().get_mpz_t());
    if (g > 1) {
        num = *num.divided_exactly_by(Laurent(g));
        den = *den.divided_exactly_by(Laurent(g));
    }
}

}  // namespace

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    // With both sides reduced, only the denominator gcd can cancel.
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) {
            den_ = Laurent(1);
            return *this;
        }
        Laurent g = Laurent::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *num_.divided_exactly_by(g);
            den_ = *den_.divided_exactly_by(g);
        }
        strip_content(num_, den_);
        return *this;
    }
    Laurent g = Laurent::gcd(den_, o.den_);
    Laurent d1 = *den_.divided_exactly_by(g), d2 = *o.den_.divided_exactly_by(g);
    Laurent t = num_ * d2 + o.num_ * d1;
    if (t.is_zero()) {
        num_ = Laurent();
        den_ = Laurent(1);
        return *this;
    }
    Laurent g2 = Laurent::gcd(t, g);
    num_ = *t.divided_exactly_by(g2);
    den_ = d1 * *o.den_.divided_exactly_by(g2);
    strip_content(num_, den_);
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    // Cross-cancel first; the reduced factors multiply to a reduced result.
    Laurent g1 = Laurent::gcd(num_, o.den_);
    Laurent g2 = Laurent::gcd(o.num_, den_);
    if (!g1.is_one()) num_ = *num_.divided_exactly_by(g1);
    if (!g2.is_one()) den_ = *den_.divided_exactly_by(g2);
    Laurent on = o.num_, od = o.den_;
    if (!g2.is_one()) on = *on.divided_exactly_by(g2);
    if (!g1.is_one()) od = *od.divided_exactly_by(g1);
    num_ *= on;
    den_ *= od;
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return *this;
    }
    if (den_.terms().rbegin()->second < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    strip_content(num_, den_);
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
    if (o.is_zero()) throw std::invalid_argument("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    if (den_.is_zero()) throw std::invalid_argument("division by zero");
    canonicalize();
    return *this;
}

std::strong_ordering RationalFn::operator<=>(const RationalFn& o) const {
    if (auto c = num_ <=> o.num_; c != 0) return c;
    return den_ <=> o.den_;
}

std::string RationalFn::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalFn& x) {
    if (x.is_laurent()) {
        if (x.num().is_monomial() || x.num().is_zero()) return os << x.num();
        return os << "(" << x.num() << ")";
    }
    if (x.num().is_monomial())
        os << x.num();
    else
        os << "(" << x.num() << ")";
    os << "/";
    if (x.den().is_monomial())
        os << x.den();
    else
        os << "(" << x.den() << ")";
    return os;
}

}  // namespace skein
