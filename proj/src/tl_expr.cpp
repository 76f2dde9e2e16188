#include "skein/tl_expr.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <variant>

namespace skein {

namespace {

// Reduced words per strand count, computed lazily by breadth-first search
// over loop-free right multiplication by generators.  FIFO order makes the
// recorded word the lexicographically least among the shortest ones.
std::map<int, std::map<TLDiagram, std::vector<int>>>& word_cache() {
    static std::map<int, std::map<TLDiagram, std::vector<int>>> cache;
    return cache;
}
std::mutex word_mutex;

const std::map<TLDiagram, std::vector<int>>& words_for(int k) {
    std::lock_guard<std::mutex> lock(word_mutex);
    auto& cache = word_cache();
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    std::map<TLDiagram, std::vector<int>> words;
    std::deque<TLDiagram> queue;
    TLDiagram id = TLDiagram::identity(k);
    words.emplace(id, std::vector<int>{});
    queue.push_back(id);
    while (!queue.empty()) {
        TLDiagram d = queue.front();
        queue.pop_front();
        const std::vector<int>& w = words.at(d);
        for (int i = 1; i <= k - 1; ++i) {
            Composition c = compose_diagrams(d, TLDiagram::generator(k, i));
            if (c.loops != 0) continue;
            if (words.count(c.diagram)) continue;
            std::vector<int> nw = w;
            nw.push_back(i);
            words.emplace(c.diagram, std::move(nw));
            queue.push_back(c.diagram);
        }
    }
    return cache.emplace(k, std::move(words)).first->second;
}

}  // namespace

const std::vector<int>& jones_word(const TLDiagram& d) {
    if (d.left_points() != d.right_points())
        throw std::invalid_argument("generator words exist only for square diagrams");
    const auto& words = words_for(d.left_points());
    auto it = words.find(d);
    if (it == words.end()) throw std::logic_error("diagram missing from word table");
    return it->second;
}

std::string word_str(const TLDiagram& d) {
    const auto& w = jones_word(d);
    if (w.empty()) return "Id" + std::to_string(d.left_points());
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += "e" + std::to_string(w[i]);
    }
    return s;
}

namespace {

// Renders the coefficient of a term; the sign is returned separately so
// the caller can join terms with " + " / " - ".
std::string coeff_prefix(const Laurent& c, std::string* sign_out) {
    Laurent body = c;
    std::string sign = "+";
    if (c.is_monomial() && c.terms().begin()->second < 0) {
        sign = "-";
        body = -body;
    }
    *sign_out = sign;
    if (body.is_one()) return "";
    if (body.is_monomial()) return body.str() + "*";
    return "(" + body.str() + ")*";
}

}  // namespace

std::string print_element(const TLElement& x, PrintStyle style) {
    if (x.is_zero()) return "0";
    struct Term {
        std::vector<int> word;
        const TLDiagram* d;
        const Laurent* c;
    };
    std::vector<Term> terms;
    bool words_ok = style == PrintStyle::jones && x.left_points() == x.right_points();
    for (const auto& [d, c] : x.terms()) {
        Term t{{}, &d, &c};
        if (words_ok) t.word = jones_word(d);
        terms.push_back(std::move(t));
    }
    if (words_ok) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
            return a.word < b.word;
        });
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        std::string sign;
        std::string prefix = coeff_prefix(*t.c, &sign);
        if (first) {
            if (sign == "-") os << "-";
        } else {
            os << " " << sign << " ";
        }
        first = false;
        os << prefix << (words_ok ? word_str(*t.d) : t.d->pairing_str());
    }
    return os.str();
}

namespace {

// A parsed value is either a scalar or an element of TL(k, k).
using Value = std::variant<Laurent, TLElement>;

struct ExprParser {
    const std::string& s;
    int k;
    const ExprFnRegistry& fns;
    size_t pos = 0;

    ExprParser(const std::string& text, int strands, const ExprFnRegistry& registry)
        : s(text), k(strands), fns(registry) {}

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
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos, msg); }

    long parse_long() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = (s[pos++] == '-');
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    Value parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            Value v = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                digits += s[pos++];
            return Laurent(mpz_class(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            std::string name;
            while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
                name += s[pos++];
            if (name == "A") {
                long e = 1;
                if (eat('^')) e = parse_long();
                return Laurent::power_of_A(e);
            }
            bool has_index = pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
            if (name == "Id" && has_index) {
                long idx = parse_long();
                if (idx != k)
                    throw ParseError(start, "Id" + std::to_string(idx) + " used in a " +
                                                std::to_string(k) + "-strand context");
                return TLElement::identity(k);
            }
            if (name == "e" && has_index) {
                long idx = parse_long();
                if (idx < 1 || idx > k - 1)
                    throw ParseError(start, "generator e" + std::to_string(idx) +
                                                " out of range for k = " + std::to_string(k));
                return TLElement::generator(k, static_cast<int>(idx));
            }
            // Function application.
            if (!eat('(')) throw ParseError(start, "unknown name '" + name + "'");
            Value arg = parse_sum();
            if (!eat(')')) fail("expected ')'");
            TLElement el = to_element(arg);
            if (name == "bar") return el.bar();
            if (name == "sigma") return el.sigma();
            auto it = fns.find(name);
            if (it == fns.end()) throw ParseError(start, "unknown function '" + name + "'");
            return it->second(el);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    TLElement to_element(const Value& v) const {
        if (std::holds_alternative<TLElement>(v)) return std::get<TLElement>(v);
        return std::get<Laurent>(v) * TLElement::identity(k);
    }

    Value mul(const Value& a, const Value& b) const {
        if (std::holds_alternative<Laurent>(a) && std::holds_alternative<Laurent>(b))
            return std::get<Laurent>(a) * std::get<Laurent>(b);
        if (std::holds_alternative<Laurent>(a))
            return std::get<Laurent>(a) * std::get<TLElement>(b);
        if (std::holds_alternative<Laurent>(b))
            return std::get<Laurent>(b) * std::get<TLElement>(a);
        return std::get<TLElement>(a).compose(std::get<TLElement>(b));
    }

    Value add(const Value& a, const Value& b, bool subtract) const {
        if (std::holds_alternative<Laurent>(a) && std::holds_alternative<Laurent>(b)) {
            Laurent r = std::get<Laurent>(a);
            if (subtract)
                r -= std::get<Laurent>(b);
            else
                r += std::get<Laurent>(b);
            return r;
        }
        TLElement ea = to_element(a), eb = to_element(b);
        return subtract ? ea - eb : ea + eb;
    }

    Value negate(const Value& v) const {
        if (std::holds_alternative<Laurent>(v)) return -std::get<Laurent>(v);
        return -std::get<TLElement>(v);
    }

    Value parse_product() {
        Value r = parse_atom();
        while (true) {
            skip_ws();
            if (eat('*'))
                r = mul(r, parse_atom());
            else
                return r;
        }
    }

    Value parse_sum() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Value r = parse_product();
        if (neg) r = negate(r);
        while (true) {
            skip_ws();
            if (eat('+'))
                r = add(r, parse_product(), false);
            else if (eat('-'))
                r = add(r, parse_product(), true);
            else
                return r;
        }
    }
};

}  // namespace

TLElement parse_element(const std::string& text, int k, const ExprFnRegistry& fns) {
    if (k < 1) throw std::invalid_argument("strand count must be positive");
    ExprParser p(text, k, fns);
    Value v = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return p.to_element(v);
}

}  // namespace skein
