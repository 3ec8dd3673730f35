#pragma once

#include "holoprove/ode_prover.hpp"
#include "holoprove/sequence.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace holoprove {

/// Reads the P-recursive recurrence off q0 G + q1 G' = R by comparing
/// coefficients of z^n.
///
/// With q1(0) == 0 the coefficient of a(n-j) is q0_j + q1_{j+1} (n - j). When
/// q1(0) != 0 (or leading coefficients vanish) the highest surviving index is
/// renumbered to a(n), so coefficients are substituted n -> n + shift. Order is
/// padded to at least 1 with zero coefficients; valid_from is
/// max(deg R + 1 - shift, order).
PRecurrence extract_recurrence(const LinearOde& ode);

struct RecurrenceCheck {
    bool ok = true;
    std::size_t checked = 0;
    std::optional<long> first_failure;
    Rational residual;  // at first_failure
};

/// Evaluates sum_j c_j(n) a(n-j) for valid_from <= n < terms.size().
/// Requires terms.size() > valid_from.
RecurrenceCheck verify_recurrence(const PRecurrence& rec, const std::vector<Rational>& terms);

/// `(n+1)*a(n) + (-6*n+2)*a(n-1) + ... = 0  [n >= 4]`, expanded coefficients.
std::string format_recurrence(const PRecurrence& rec);

/// Display form with rational common factors pulled out, e.g. `2*(-3*n+1)*a(n-1)`.
std::string format_recurrence_factored(const PRecurrence& rec);

/// Parses either printed form back. The `[n >= K]` suffix is optional
/// (valid_from defaults to the order).
PRecurrence parse_recurrence(std::string_view text);

}  // namespace holoprove
