#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "derivar/freeop.hpp"

namespace derivar {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses the expression grammar
///
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := [rational '*'] atom
///   atom     := opname '(' expr ',' expr ')' | var
///   var      := 'x' digits
///   rational := digits ['/' digits]
///
/// over the given operation names (all binary). Whitespace is
/// insignificant; the literal "0" denotes the zero polynomial. The result
/// must be multilinear in x1..xn; repeated or missing variables are
/// rejected. If expected_arity > 0 the parsed arity must match it.
Poly parse_expr(std::string_view src, const std::vector<std::string>& ops, int expected_arity = 0);

enum class RenderFormat { Text, Latex };

/// Canonical-order rendering; parse_expr(render(p, ops), ops) == p.
/// Latex output uses \prec and \succ for derived symbols.
std::string render(const Poly& p, const std::vector<std::string>& ops,
                   RenderFormat format = RenderFormat::Text);
std::string render_monomial(const Monomial& m, const std::vector<std::string>& ops,
                            RenderFormat format = RenderFormat::Text);

}  // namespace derivar
