#pragma once

#include "holoprove/bipoly.hpp"
#include "holoprove/upoly.hpp"

#include <string>
#include <string_view>

namespace holoprove {

enum class TermOrder { Descending, Ascending };

struct PolyStyle {
    TermOrder order = TermOrder::Descending;
    bool spaced = true;  // "z - 1" vs "z-1"
};

/// Canonical standalone form: descending powers, spaced, e.g. `8*z^4 - 4*z^3 - z + 1`.
std::string format(const UPoly& p, PolyStyle style = {});

/// Canonical bivariate form: descending powers of w with each z-coefficient in
/// ascending order inside parentheses, e.g.
/// `(z - z^2)*w^2 + (-1 + z)*w + (1 - z - z^2)`.
std::string format(const BiPoly& p);

/// Parses a polynomial in `var`. Accepts + - * ^ ** / (by nonzero constants),
/// parentheses, integer literals and arbitrary whitespace.
UPoly parse_upoly(std::string_view text, char var = 'z');

/// Same grammar with the two variables z and w.
BiPoly parse_bipoly(std::string_view text);

}  // namespace holoprove
