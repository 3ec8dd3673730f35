#pragma once

#include "holoprove/rational.hpp"
#include "holoprove/upoly.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace holoprove {

/// a(n+1) = sum_{p=0}^{n} a(p) a(n-p) + k*(n+1) + l for n >= 1, with a(0), a(1) free.
struct ChouletSpec {
    Rational a0 = 1;
    Rational a1 = 1;
    Rational k = 0;
    Rational l = 0;

    friend bool operator==(const ChouletSpec&, const ChouletSpec&) = default;
};

/// The defining data of OEIS A176677.
inline ChouletSpec a176677_spec() { return ChouletSpec{1, 1, 0, -1}; }

/// sum_{j=0}^{order} coefficients[j](n) * a(n-j) = 0 for every n >= valid_from.
struct PRecurrence {
    std::vector<UPoly> coefficients;  // polynomials in n
    int valid_from = 0;

    int order() const noexcept { return static_cast<int>(coefficients.size()) - 1; }

    friend bool operator==(const PRecurrence&, const PRecurrence&) = default;
};

/// Checks the structural invariants (order >= 1, nonzero leading polynomial,
/// every coefficient tagged 'n'); throws a usage error on violation.
void validate(const PRecurrence& rec);

/// Terms a(0..count-1) of the convolution recurrence. count >= 2.
std::vector<Rational> conv_terms(const ChouletSpec& spec, std::size_t count);

/// Extends `initial` to `count` terms by solving the recurrence for a(n).
/// Throws SingularRecurrence naming n when the leading coefficient vanishes
/// there, and Integrality when `require_integers` is set and a term is not an integer.
std::vector<Rational> prec_eval(const PRecurrence& rec, const std::vector<Rational>& initial,
                                std::size_t count, bool require_integers = false);

/// Smallest seed length for which prec_eval never meets a zero leading
/// coefficient: max(valid_from, 1 + largest non-negative integer root of it).
std::size_t required_seed_length(const PRecurrence& rec);

struct BFileEntry {
    std::int64_t index;
    Integer value;

    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Parses the OEIS b-file format: `#` comments, blank lines, `<n> <a(n)>` lines.
/// Indices must be strictly increasing (Format error otherwise).
std::vector<BFileEntry> parse_bfile(std::istream& in);
std::vector<BFileEntry> parse_bfile(const std::string& text);

struct CrosscheckReport {
    bool agree = true;
    std::size_t compared = 0;
    std::optional<std::int64_t> first_mismatch;
    Rational computed_value;   // at the first mismatch
    Integer reference_value;   // at the first mismatch
};

/// computed[i] is taken as the term of index offset + i. Reference entries
/// outside the computed range are skipped.
CrosscheckReport crosscheck(const std::vector<Rational>& computed,
                            const std::vector<BFileEntry>& reference, std::int64_t offset = 0);

}  // namespace holoprove
