// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 if any fails.

#include "holoprove/algebraic_gf.hpp"
#include "holoprove/cli.hpp"
#include "holoprove/error.hpp"
#include "holoprove/file_formats.hpp"
#include "holoprove/ode_prover.hpp"
#include "holoprove/recurrence.hpp"
#include "holoprove/series.hpp"
#include "test_support.hpp"

#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

using namespace holoprove;
using namespace holoprove::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

std::vector<Rational> as_vector(const Series& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("holoprove_accept_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cli(std::vector<std::string> args, std::string* out = nullptr) {
    std::ostringstream o, e;
    const int code = run_cli(args, o, e);
    if (out) *out = o.str();
    return code;
}

Outcome ac1_terms() {
    const auto terms = conv_terms(a176677_spec(), 251);
    const std::vector<Rational> head(terms.begin(), terms.begin() + 15);
    const auto digits = decimal_digits(terms[250].get_num());
    const bool ok = head == paper_first_values() && digits == 134;
    return {ok, "first 15 values " + std::string(head == paper_first_values() ? "match" : "differ") +
                    ", a(250) has " + std::to_string(digits) + " digits"};
}

Outcome ac2_derive() {
    const AlgebraicEq eq = derive_algebraic(a176677_spec());
    bool ok = eq.p.degree_w() == 2 && eq.branch_value == 1;
    for (int j = 0; j <= 2; ++j) {
        for (int i = 0; i <= 3; ++i) ok = ok && eq.p.coeff(i, j) == paper_p().coeff(i, j);
    }
    return {ok, "P = " + format(eq.p)};
}

Outcome ac3_ode() {
    const auto cert = find_first_order_ode(AlgebraicEq{paper_p(), 1}, 6);
    if (!cert) return {false, "no ODE found"};
    const bool ok = cert->ode.q0 == zp("1 - 4*z + 5*z^2 - 4*z^3") && cert->ode.q1 == zp("z - 6*z^2 + 9*z^3 - 4*z^5") &&
                    cert->ode.r == zp("1 - 2*z - 2*z^2 + 2*z^3") && cert->q == zp("8*z^4 - 4*z^3 - 4*z^2 - z + 1");
    return {ok, "level " + std::to_string(ansatz_level(*cert)) + ", q = " + format(cert->q)};
}

Outcome ac4_identity() {
    const Certificate base = paper_certificate();
    if (!verify_certificate(base)) return {false, "paper certificate rejected"};
    int rejected = 0;
    for (int which = 0; which < 5; ++which) {
        Certificate c = base;
        switch (which) {
            case 0: c.ode.q0 += UPoly{1}; break;
            case 1: c.ode.q1 += UPoly{1}; break;
            case 2: c.ode.r += UPoly{1}; break;
            case 3: c.q += UPoly{1}; break;
            case 4: c.p += BiPoly(UPoly{1}); break;
        }
        if (!verify_certificate(c)) ++rejected;
    }
    return {rejected == 5, "accepted; " + std::to_string(rejected) + "/5 perturbations rejected"};
}

Outcome ac5_extract() {
    const PRecurrence rec = extract_recurrence(paper_ode());
    const std::vector<UPoly> expect{np("n + 1"), np("-6*n + 2"), np("9*n - 13"), np("-4"), np("-4*n + 16")};
    const bool ok = rec.coefficients == expect && rec.valid_from == 4;
    return {ok, format_recurrence(rec)};
}

Outcome ac6_residual() {
    const PRecurrence rec = extract_recurrence(paper_ode());
    const RecurrenceCheck check = verify_recurrence(rec, conv_terms(a176677_spec(), 251));
    return {check.ok && check.checked == 247, std::to_string(check.checked) + " residuals checked for n = 4..250"};
}

Outcome ac7_generators() {
    constexpr std::size_t n = 251;
    const auto conv = conv_terms(a176677_spec(), n);
    const auto newton = as_vector(newton_lift(paper_p(), 1, n));
    const auto closed = as_vector(closed_form_root(paper_p(), 1, n));

    // (1 - sqrt((1 - 5z + 4z^2 + 4z^3) / (1 - z))) / (2z), expanded literally.
    const Series radicand = Series::from_poly(UPoly{1, -5, 4, 4}, n + 1) * inverse(Series::from_poly(UPoly{1, -1}, n + 1));
    const auto literal = as_vector(shift_down(Series::constant(1, n + 1) - sqrt(radicand), 1) * Rational(1, 2));

    const std::vector<Rational> seed(conv.begin(), conv.begin() + 4);
    const auto recur = prec_eval(extract_recurrence(paper_ode()), seed, n, true);

    std::vector<Rational> brute;
    for (const auto& x : brute_force_terms(1, 1, 0, -1, n)) brute.emplace_back(x);

    const std::vector<std::pair<const char*, const std::vector<Rational>*>> all{
        {"conv", &conv}, {"newton", &newton}, {"closed-form", &closed}, {"sqrt", &literal}, {"prec_eval", &recur},
        {"brute", &brute}};
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (*all[i].second != *all[j].second) {
                return {false, std::string(all[i].first) + " and " + all[j].first + " differ"};
            }
        }
    }
    return {true, "6 generators agree on a(0..250)"};
}

Outcome ac8_singularities() {
    const SingularityReport r = singularity_report(paper_certificate());
    const bool roots = r.rational_roots == std::vector<Rational>{0, Rational(1, 2), 1};
    const bool residual = equal_up_to_scalar(r.residual_factor, UPoly{-1, 3, 2});
    if (r.dominant_roots.empty()) return {false, "no dominant root bracketed"};
    const double approx = r.dominant_roots.front().approx;
    const double closed = (std::sqrt(17.0) - 3.0) / 4.0;
    const bool four_places = std::round(approx * 1e4) == 2808;
    const bool close = std::abs(approx - closed) < 1e-9;
    std::ostringstream d;
    d.precision(12);
    d << "roots {0, 1/2, 1}: " << (roots ? "yes" : "no") << ", residual " << format(r.residual_factor)
      << ", dominant root " << approx;
    return {roots && residual && four_places && close, d.str()};
}

Outcome ac9_property() {
    Rng rng(20240601);
    int tried = 0, proved = 0, failures = 0;
    for (int trial = 0; trial < 24; ++trial) {
        const ChouletSpec spec{rng.integer(1, 2), rng.integer(1, 2), rng.integer(-2, 2), rng.integer(-2, 2)};
        ++tried;
        const fs::path spec_path = scratch_dir() / ("prop" + std::to_string(trial) + ".spec");
        const fs::path cert_path = scratch_dir() / ("prop" + std::to_string(trial) + ".cert");
        std::ofstream(spec_path) << format_spec_file(spec);
        if (cli({"prove", spec_path.string(), "--max-degree", "6", "--out", cert_path.string()}) != kExitOk) continue;
        ++proved;
        const Certificate cert = parse_certificate_file(slurp(cert_path)).certificate();
        const PRecurrence rec = extract_recurrence(cert.ode);
        const bool ok = verify_certificate(cert) && verify_recurrence(rec, conv_terms(spec, 101)).ok;
        if (!ok) ++failures;
    }
    return {tried >= 20 && proved > 0 && failures == 0,
            std::to_string(proved) + "/" + std::to_string(tried) + " specs proved, " + std::to_string(failures) +
                " failures"};
}

Outcome ac10_determinism() {
    const fs::path spec_path = scratch_dir() / "det.spec";
    std::ofstream(spec_path) << format_spec_file(a176677_spec());
    std::string prove_out[2], verify_out[2], certs[2];
    for (int run = 0; run < 2; ++run) {
        const fs::path cert_path = scratch_dir() / ("det" + std::to_string(run) + ".cert");
        if (cli({"prove", spec_path.string(), "--out", cert_path.string()}, &prove_out[run]) != kExitOk) {
            return {false, "prove failed"};
        }
        if (cli({"verify", cert_path.string()}, &verify_out[run]) != kExitOk) return {false, "verify failed"};
        certs[run] = slurp(cert_path);
    }
    const bool ok = certs[0] == certs[1] && prove_out[0] == prove_out[1] && verify_out[0] == verify_out[1];
    return {ok, "certificate " + std::to_string(certs[0].size()) + " bytes, outputs " + (ok ? "identical" : "differ")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 term generation", ac1_terms},
        {"AC2 algebraic derivation", ac2_derive},
        {"AC3 ODE discovery", ac3_ode},
        {"AC4 certificate identity", ac4_identity},
        {"AC5 recurrence extraction", ac5_extract},
        {"AC6 end-to-end residuals", ac6_residual},
        {"AC7 generator cross-equivalence", ac7_generators},
        {"AC8 singularity report", ac8_singularities},
        {"AC9 property suite", ac9_property},
        {"AC10 determinism", ac10_determinism},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.ok) ++failed;
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << "\n";
    }
    std::error_code ec;
    fs::remove_all(scratch_dir(), ec);
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
