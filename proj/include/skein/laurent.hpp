// Exact Laurent polynomials in one variable A with arbitrary-precision
// integer coefficients.  This is the coefficient ring for every skein
// computation in the project; nothing here is ever rounded.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace skein {

class Laurent {
public:
    Laurent() = default;
    Laurent(long c);
    explicit Laurent(const mpz_class& c);

    // c * A^e
    static Laurent monomial(mpz_class c, long e);
    // A^e
    static Laurent power_of_A(long e);
    // Loop value of a trivial closed component: -A^2 - A^-2.
    static Laurent loop_value();

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // Unit of Z[A^{\pm 1}]: a single term with coefficient +-1.
    bool is_unit() const;
    bool is_monomial() const { return terms_.size() == 1; }

    // Lowest/highest exponent with nonzero coefficient.  Pre: nonzero.
    long min_exp() const;
    long max_exp() const;

    const mpz_class& coeff(long e) const;  // zero when absent
    const std::map<long, mpz_class>& terms() const { return terms_; }
    void set_coeff(long e, mpz_class c);

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    // Deterministic total order (lexicographic on the term map).
    std::strong_ordering operator<=>(const Laurent& o) const;

    // Mirror-image involution A -> A^{-1}.
    Laurent conj() const;
    // Multiply by A^d.
    Laurent shifted(long d) const;

    // gcd of the integer coefficients, non-negative; 0 for the zero poly.
    mpz_class int_content() const;

    // Exact quotient q with *this == q * g in Z[A^{+-1}], if it exists.
    std::optional<Laurent> divided_exactly_by(const Laurent& g) const;

    // gcd in Z[A] of the unit-normalized parts, including integer content.
    // Result is unit-normalized: min_exp 0, positive leading coefficient.
    static Laurent gcd(const Laurent& a, const Laurent& b);

    // Evaluation at a rational point, used to cross-check identities.
    mpq_class eval(const mpq_class& a) const;

    // Canonical printing, e.g. "A^10 - A^6", "1 - A^-4", "-A^2 - A^-2".
    // Decreasing exponent order, except that a polynomial whose top
    // coefficient is negative but whose bottom coefficient is positive is
    // printed bottom-up so the display starts with a positive term.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Laurent& p);

    // Parse the printed syntax (integers, A, A^e, + - * and parentheses).
    static Laurent parse(const std::string& text);

private:
    void prune(long e);
    // exponent -> coefficient; invariant: no zero coefficient is stored.
    std::map<long, mpz_class> terms_;
};

}  // namespace skein
