#include "holoprove/algebraic_gf.hpp"

#include "holoprove/error.hpp"

namespace holoprove {

BiPoly normalize_algebraic(const BiPoly& p) {
    if (p.is_zero()) return p;
    BiPoly out = p * (Rational(1) / content(p));
    const UPoly lead = out.leading_w();
    if (lead.coeff(lead.valuation()) < 0) out = -out;
    return out;
}

AlgebraicEq derive_algebraic(const ChouletSpec& spec) {
    const UPoly one = UPoly::constant(1);
    const UPoly z = UPoly::variable();
    const UPoly one_minus_z{1, -1};

    // Sum_{n>=1} a(n+1) z^{n+1} = G - a0 - a1 z, and the convolution part is
    // z (G^2 - a0^2). The inhomogeneous part sums to
    //   k * z^2 (2 - z) / (1 - z)^2 + l * z^2 / (1 - z).
    // Moving everything to one side and clearing (1 - z)^m gives
    //   D z G^2 - D G + D (a0 + (a1 - a0^2) z) + k z^2 (2 - z) D/(1-z)^2 + l z^2 D/(1-z) = 0.
    const int m = spec.k != 0 ? 2 : (spec.l != 0 ? 1 : 0);
    UPoly denom = one;
    for (int i = 0; i < m; ++i) denom *= one_minus_z;

    UPoly constant_part = denom * UPoly{spec.a0, spec.a1 - spec.a0 * spec.a0};
    if (spec.k != 0) {
        // m == 2 here, so D / (1-z)^2 == 1.
        constant_part += UPoly{0, 0, 2, -1} * spec.k;
    }
    if (spec.l != 0) {
        UPoly cofactor = m == 2 ? one_minus_z : one;
        constant_part += UPoly::monomial(spec.l, 2) * cofactor;
    }

    BiPoly p(std::vector<UPoly>{constant_part, -denom, denom * z});
    if (p.degree_w() != 2) throw Error(ErrorKind::Internal, "convolution equation is not quadratic in w");
    return AlgebraicEq{normalize_algebraic(p), spec.a0};
}

BranchReport branch_check(const AlgebraicEq& eq, const std::vector<Rational>& terms) {
    if (terms.empty()) throw Error(ErrorKind::Usage, "branch_check needs at least one term");
    BranchReport report;
    const Rational& g0 = terms.front();
    report.derivative_value = partial(eq.p, Var::W).eval(0, g0);
    if (g0 != eq.branch_value) {
        report.message = "branch mismatch: terms start with " + to_string(g0) +
                         ", equation selects " + to_string(eq.branch_value);
        return report;
    }
    if (eq.p.eval(0, g0) != 0) {
        report.message = "P(0, " + to_string(g0) + ") = " + to_string(eq.p.eval(0, g0)) + " is not zero";
        return report;
    }
    if (report.derivative_value == 0) {
        report.message = "ramified root: dP/dw(0, " + to_string(g0) + ") = 0";
        return report;
    }
    report.ok = true;
    report.message = "simple root, dP/dw(0, " + to_string(g0) + ") = " + to_string(report.derivative_value);
    return report;
}

}  // namespace holoprove
