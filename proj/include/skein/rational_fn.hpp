// The fraction field of Z[A^{+-1}], stored in a canonical reduced form so
// that equality and "is this actually a Laurent polynomial" are syntactic.
#pragma once

#include "skein/laurent.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace skein {

// Canonical form: the denominator is an ordinary polynomial in A with
// nonzero constant term and positive leading coefficient, coprime to the
// numerator (polynomial gcd and joint integer content both trivial).  Any
// unit A^n is carried by the numerator, which stays a Laurent polynomial.
class RationalFn {
public:
    RationalFn() : num_(), den_(1) {}
    RationalFn(long c) : num_(c), den_(1) {}
    RationalFn(Laurent p) : num_(std::move(p)), den_(1) {}
    RationalFn(Laurent num, Laurent den);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // True exactly when the value lies in Z[A^{+-1}]; in canonical form
    // this means the denominator is 1.
    bool is_laurent() const { return den_.is_one(); }
    // Pre: is_laurent().
    const Laurent& as_laurent() const;

    RationalFn operator-() const;
    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator/=(const RationalFn& o);
    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

    bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const RationalFn& o) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RationalFn& x);

private:
    void canonicalize();
    Laurent num_;
    Laurent den_;
};

}  // namespace skein
