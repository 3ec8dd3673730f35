#pragma once

#include "holoprove/algebraic_gf.hpp"
#include "holoprove/ode_prover.hpp"
#include "holoprove/sequence.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace holoprove {

// Spec files are line-oriented `key = value` (or `key: value`, `key value`)
// with keys a0, a1, k, l, exact rational values and `#` comments. All four
// keys are required exactly once.
ChouletSpec parse_spec_file(std::string_view text);
std::string format_spec_file(const ChouletSpec& spec);

inline constexpr std::string_view kCertificateHeader = "holoprove-certificate v1";

/// Contents of a certificate file. A stub (as written by `derive`) carries
/// only the equation; a full certificate also carries the ODE and cofactor.
struct CertificateFile {
    AlgebraicEq eq;
    std::optional<LinearOde> ode;
    std::optional<UPoly> q;
    std::vector<std::string> comments;  // without the leading '#'

    bool is_stub() const { return !ode.has_value(); }
    /// Throws a Format error for stubs.
    Certificate certificate() const;

    friend bool operator==(const CertificateFile&, const CertificateFile&) = default;
};

CertificateFile make_certificate_file(const AlgebraicEq& eq, const Certificate& cert,
                                      std::vector<std::string> comments = {});

/// Header, comment lines, then `P:`, `q0:`, `q1:`, `R:`, `q:`, `branch:` one per line.
std::string format_certificate_file(const CertificateFile& file);

/// Accepts the value on the label's line or on the next non-comment line.
CertificateFile parse_certificate_file(std::string_view text);

}  // namespace holoprove
