#pragma once

#include "holoprove/algebraic_gf.hpp"
#include "holoprove/bipoly.hpp"
#include "holoprove/series.hpp"
#include "holoprove/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace holoprove {

/// q0(z) G + q1(z) G' = R(z).
struct LinearOde {
    UPoly q0;
    UPoly q1;
    UPoly r;

    friend bool operator==(const LinearOde&, const LinearOde&) = default;
};

/// Cofactor certificate for a LinearOde satisfied by a root of P:
///   q0 * w * P_w - q1 * P_z - R * P_w == q * P   in Q[z, w].
struct Certificate {
    BiPoly p;
    LinearOde ode;
    UPoly q;
    bool identity_residual_checked = false;
};

/// Left minus right side of the cofactor identity, fully expanded.
BiPoly certificate_residual(const BiPoly& p, const LinearOde& ode, const UPoly& q);

/// Re-expands the cofactor identity from scratch; true iff it vanishes identically.
bool verify_certificate(const Certificate& cert);

/// Scales (q0, q1, R, q) by one rational so that the lowest nonzero coefficient
/// of q1 is positive and (q0, q1, R) are coprime integer polynomials.
void normalize_solution(LinearOde& ode, UPoly& q);

struct OdeSearchOptions {
    int max_degree = 6;
};

/// Iterative deepening over ansatz levels d = 0..max_degree with
/// deg q0 <= d, deg R <= d, deg q1 <= d + 2, deg q <= d + 1. Each level is an
/// exact homogeneous linear system over Q. Returns the normalized certificate
/// from the first level with a solution having q1 != 0 (already re-verified),
/// or nullopt when no level has any nonzero solution. Throws DegenerateOde
/// when the only solutions found have q1 == 0.
std::optional<Certificate> find_first_order_ode(const AlgebraicEq& eq, int max_degree);

/// The level a certificate's degrees occupy in the ansatz schedule.
int ansatz_level(const Certificate& cert);

struct UnitReport {
    bool ok = false;
    Rational value;  // dP/dw(0, terms[0])
};

/// dP/dw(z, G(z)) must be a unit in Q[[z]] for the cancellation step.
UnitReport unit_check(const Certificate& cert, const std::vector<Rational>& terms);

/// True iff q0 g + q1 g' - R vanishes to order g.order() - 1. Needs g.order() >= 10.
bool ode_series_check(const Certificate& cert, const Series& g);

struct RootBracket {
    UPoly factor;      // the polynomial that was bisected
    Rational low, high;
    double approx = 0; // midpoint
};

struct SingularityReport {
    std::vector<Rational> rational_roots;   // of q1, with multiplicity
    UPoly residual_factor;                  // q1 with rational roots divided out, squarefree, primitive
    UPoly discriminant;                     // res_w(P, P_w) / lc_w(P)
    bool discriminant_roots_in_q1 = false;  // sqfree(disc) | sqfree(q1)
    bool leading_roots_in_q1 = false;       // sqfree(lc_w P) | sqfree(q1)
    bool exact_match = false;               // sqfree(q1) ~ sqfree(disc * lc_w P)
    std::vector<RootBracket> dominant_roots;
};

/// Smallest positive real root of f in (0, 1] found by scanning in steps of
/// 1/64 for a sign change and then bisecting exactly to width < 1e-12.
std::optional<RootBracket> bisect_smallest_positive_root(const UPoly& f);

SingularityReport singularity_report(const Certificate& cert);

}  // namespace holoprove
