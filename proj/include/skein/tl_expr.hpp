// Text syntax for Temperley-Lieb elements: parsing of generator words with
// Laurent coefficients and printing in Jones normal form (each diagram as
// its lexicographically least shortest product of e_i generators).
#pragma once

#include "skein/tl_element.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

struct ParseError : std::runtime_error {
    ParseError(size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " +
                             message),
          pos(position) {}
    size_t pos;
};

// Extra named functions usable in expressions, e.g. w(...) or u(...).
using ExprFnRegistry = std::map<std::string, std::function<TLElement(const TLElement&)>>;

// Grammar: sums/differences of products; atoms are integers, A, A^e,
// Id<k>, e<i>, bar(...), sigma(...), registered functions, parentheses.
// A purely scalar expression is promoted to scalar * Id_k.
TLElement parse_element(const std::string& text, int k, const ExprFnRegistry& fns = {});

enum class PrintStyle { jones, pairing };

// Reduced word for a (k,k) basis diagram as generator indices; empty for
// the identity.
const std::vector<int>& jones_word(const TLDiagram& d);

std::string word_str(const TLDiagram& d);
std::string print_element(const TLElement& x, PrintStyle style = PrintStyle::jones);

}  // namespace skein
