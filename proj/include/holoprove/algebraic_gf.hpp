#pragma once

#include "holoprove/bipoly.hpp"
#include "holoprove/rational.hpp"
#include "holoprove/sequence.hpp"

#include <string>
#include <vector>

namespace holoprove {

/// P(z, G(z)) = 0 together with the constant term that selects the
/// power-series branch G.
struct AlgebraicEq {
    BiPoly p;
    Rational branch_value;

    friend bool operator==(const AlgebraicEq&, const AlgebraicEq&) = default;
};

/// Divides by the rational content and fixes the sign so that the lowest-degree
/// nonzero z-coefficient of the leading w-coefficient is positive.
BiPoly normalize_algebraic(const BiPoly& p);

/// Translates the convolution recurrence into the quadratic equation for its
/// ordinary generating function, with the (1-z)^m denominators of the
/// inhomogeneous part cleared, then normalizes.
AlgebraicEq derive_algebraic(const ChouletSpec& spec);

struct BranchReport {
    bool ok = false;
    Rational derivative_value;  // dP/dw(0, terms[0])
    std::string message;
};

/// Confirms terms[0] is the branch value and a simple root of P(0, w).
BranchReport branch_check(const AlgebraicEq& eq, const std::vector<Rational>& terms);

}  // namespace holoprove
