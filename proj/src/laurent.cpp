#include "skein/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace skein {

Laurent::Laurent(long c) {
    if (c != 0) terms_[0] = c;
}

Laurent::Laurent(const mpz_class& c) {
    if (c != 0) terms_[0] = c;
}

Laurent Laurent::monomial(mpz_class c, long e) {
    Laurent p;
    if (c != 0) p.terms_[e] = std::move(c);
    return p;
}

Laurent Laurent::power_of_A(long e) { return monomial(1, e); }

Laurent Laurent::loop_value() {
    Laurent p;
    p.terms_[2] = -1;
    p.terms_[-2] = -1;
    return p;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool Laurent::is_unit() const {
    if (terms_.size() != 1) return false;
    const mpz_class& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

long Laurent::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long Laurent::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

const mpz_class& Laurent::coeff(long e) const {
    static const mpz_class zero = 0;
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
}

void Laurent::set_coeff(long e, mpz_class c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

void Laurent::prune(long e) {
    auto it = terms_.find(e);
    if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) {
        terms_[e] += c;
        prune(e);
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) {
        terms_[e] -= c;
        prune(e);
    }
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.terms_[ea + eb] += ca * cb;
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (it->second == 0)
            it = r.terms_.erase(it);
        else
            ++it;
    }
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

std::strong_ordering Laurent::operator<=>(const Laurent& o) const {
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return it->first <=> jt->first;
        int c = cmp(it->second, jt->second);
        if (c != 0) return c <=> 0;
    }
    if (it != terms_.end()) return std::strong_ordering::greater;
    if (jt != o.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

Laurent Laurent::conj() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

Laurent Laurent::shifted(long d) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e + d] = c;
    return r;
}

mpz_class Laurent::int_content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::optional<Laurent> Laurent::divided_exactly_by(const Laurent& g) const {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return Laurent();
    // Long division of the unit-normalized parts over Z.  Every leading
    // division must be exact, otherwise no quotient exists.
    long shift = min_exp() - g.min_exp();
    Laurent rem = shifted(-min_exp());
    Laurent gn = g.shifted(-g.min_exp());
    const long gdeg = gn.max_exp();
    const mpz_class& glead = gn.terms_.rbegin()->second;
    Laurent q;
    while (!rem.is_zero()) {
        long rdeg = rem.max_exp();
        if (rdeg < gdeg) return std::nullopt;
        const mpz_class& rlead = rem.terms_.rbegin()->second;
        mpz_class qc, qr;
        mpz_tdiv_qr(qc.get_mpz_t(), qr.get_mpz_t(), rlead.get_mpz_t(), glead.get_mpz_t());
        if (qr != 0) return std::nullopt;
        Laurent t = monomial(qc, rdeg - gdeg);
        q += t;
        rem -= t * gn;
    }
    return q.shifted(shift);
}

namespace {

// Primitive pseudo-remainder sequence gcd over Z[A].  Inputs are ordinary
// polynomials (min_exp >= 0) and nonzero.
Laurent primitive_part(const Laurent& p) {
    mpz_class c = p.int_content();
    if (c == 1) return p;
    return *p.divided_exactly_by(Laurent(c));
}

Laurent pseudo_rem(Laurent a, const Laurent& b) {
    const long db = b.max_exp();
    const mpz_class& lb = b.terms().rbegin()->second;
    while (!a.is_zero() && a.max_exp() >= db) {
        long da = a.max_exp();
        mpz_class la = a.terms().rbegin()->second;
        // a := lb*a - la*A^{da-db}*b  kills the leading term exactly.
        a = Laurent(lb) * a - Laurent::monomial(la, da - db) * b;
    }
    return a;
}

}  // namespace

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero() && b.is_zero()) return Laurent();
    auto normalize = [](Laurent p) {
        p = p.shifted(-p.min_exp());
        if (p.terms_.rbegin()->second < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    Laurent p = normalize(a), q = normalize(b);
    mpz_class content;
    mpz_gcd(content.get_mpz_t(), p.int_content().get_mpz_t(), q.int_content().get_mpz_t());
    p = primitive_part(p);
    q = primitive_part(q);
    if (p.max_exp() < q.max_exp()) std::swap(p, q);
    while (!q.is_zero()) {
        Laurent r = pseudo_rem(p, q);
        p = q;
        q = r.is_zero() ? r : primitive_part(normalize(r));
    }
    p = normalize(p);
    return Laurent(content) * p;
}

mpq_class Laurent::eval(const mpq_class& a) const {
    if (a == 0) throw std::invalid_argument("cannot evaluate at A = 0");
    mpq_class acc = 0;
    mpq_class ainv = 1 / a;
    for (const auto& [e, c] : terms_) {
        mpq_class pw = 1;
        const mpq_class& base = e >= 0 ? a : ainv;
        for (long i = 0; i < (e >= 0 ? e : -e); ++i) pw *= base;
        acc += c * pw;
    }
    return acc;
}

namespace {

void print_term(std::ostream& os, const mpz_class& c, long e, bool first) {
    mpz_class ac = abs(c);
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
        os << ac.get_str();
        return;
    }
    if (ac != 1) os << ac.get_str() << "*";
    os << "A";
    if (e != 1) os << "^" << e;
}

}  // namespace

std::string Laurent::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) {
    if (p.terms_.empty()) return os << "0";
    bool descending = true;
    if (p.terms_.rbegin()->second < 0 && p.terms_.begin()->second > 0) descending = false;
    bool first = true;
    if (descending) {
        for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
            print_term(os, it->second, it->first, first);
            first = false;
        }
    } else {
        for (const auto& [e, c] : p.terms_) {
            print_term(os, c, e, first);
            first = false;
        }
    }
    return os;
}

namespace {

// Minimal recursive-descent parser for coefficient expressions.
struct PolyParser {
    const std::string& s;
    size_t pos = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("coefficient parse error at position " + std::to_string(pos) +
                                    ": " + msg);
    }

    long parse_long() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = (s[pos++] == '-');
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    Laurent parse_atom() {
        skip_ws();
        if (eat('(')) {
            Laurent r = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (pos < s.size() && s[pos] == 'A') {
            ++pos;
            long e = 1;
            if (eat('^')) e = parse_long();
            return Laurent::power_of_A(e);
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                digits += s[pos++];
            return Laurent(mpz_class(digits));
        }
        fail("expected coefficient atom");
    }

    Laurent parse_product() {
        Laurent r = parse_atom();
        while (true) {
            skip_ws();
            if (eat('*'))
                r *= parse_atom();
            else
                return r;
        }
    }

    Laurent parse_sum() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Laurent r = parse_product();
        if (neg) r = -r;
        while (true) {
            skip_ws();
            if (eat('+'))
                r += parse_product();
            else if (eat('-'))
                r -= parse_product();
            else
                return r;
        }
    }
};

}  // namespace

Laurent Laurent::parse(const std::string& text) {
    PolyParser p(text);
    Laurent r = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace skein
