#include "holoprove/cli.hpp"

#include "holoprove/algebraic_gf.hpp"
#include "holoprove/error.hpp"
#include "holoprove/ode_prover.hpp"
#include "holoprove/poly_format.hpp"
#include "holoprove/recurrence.hpp"
#include "holoprove/series.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace holoprove {

bool VerifyReport::all_ok() const {
    return std::all_of(sections.begin(), sections.end(), [](const VerifySection& s) { return s.ok; });
}

namespace {

// Inverts the first four terms of the convolution recurrence:
//   a2 = 2 a0 a1 + 2k + l,   a3 = 2 a0 a2 + a1^2 + 3k + l.
ChouletSpec recover_spec(const std::vector<Rational>& t) {
    ChouletSpec s;
    s.a0 = t[0];
    s.a1 = t[1];
    const Rational e2 = t[2] - 2 * t[0] * t[1];
    const Rational e3 = t[3] - 2 * t[0] * t[2] - t[1] * t[1];
    s.k = e3 - e2;
    s.l = e2 - 2 * s.k;
    return s;
}

std::string first_difference(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return "first difference at index " + std::to_string(i);
    }
    if (a.size() != b.size()) return "length mismatch";
    return "";
}

}  // namespace

VerifyReport verify_certificate_file(const CertificateFile& file, const VerifyOptions& options) {
    if (options.terms < 10) throw Error(ErrorKind::Usage, "--terms must be at least 10");
    VerifyReport report;
    auto add = [&](std::string name, bool ok, std::string detail) {
        report.sections.push_back({std::move(name), ok, std::move(detail)});
    };

    const Certificate cert = file.certificate();
    const AlgebraicEq& eq = file.eq;
    const std::size_t n = options.terms;

    add("identity", verify_certificate(cert),
        verify_certificate(cert) ? "q0*w*P_w - q1*P_z - R*P_w - q*P expands to 0"
                                 : "residual " + format(certificate_residual(cert.p, cert.ode, cert.q)));

    const UnitReport unit = unit_check(cert, {eq.branch_value});
    add("unit", unit.ok, "dP/dw(0, " + to_string(eq.branch_value) + ") = " + to_string(unit.value));

    Series lifted;
    try {
        lifted = newton_lift(eq.p, eq.branch_value, n);
    } catch (const Error& e) {
        add("newton", false, e.what());
        return report;
    }
    report.terms.assign(lifted.coeffs().begin(), lifted.coeffs().end());
    const auto& terms = report.terms;
    add("newton", substitute(eq.p, lifted).is_zero(),
        "P(z, S) = 0 mod z^" + std::to_string(n) + " for the lifted branch");

    const BranchReport branch = branch_check(eq, terms);
    add("branch", branch.ok, branch.message);

    const ChouletSpec spec = recover_spec(terms);
    const bool spec_ok = derive_algebraic(spec).p == normalize_algebraic(eq.p);
    add("spec", spec_ok,
        "a0=" + to_string(spec.a0) + " a1=" + to_string(spec.a1) + " k=" + to_string(spec.k) +
            " l=" + to_string(spec.l) + (spec_ok ? " rederives P" : " does not rederive P"));

    const auto conv = conv_terms(spec, n);
    const std::string conv_diff = first_difference(conv, terms);
    add("convolution", conv_diff.empty(),
        conv_diff.empty() ? "convolution terms equal Newton terms on 0.." + std::to_string(n - 1) : conv_diff);

    if (eq.p.degree_w() == 2) {
        try {
            const Series closed = closed_form_root(eq.p, eq.branch_value, n);
            const std::vector<Rational> ct(closed.coeffs().begin(), closed.coeffs().end());
            const std::string diff = first_difference(ct, terms);
            add("closed-form", diff.empty(), diff.empty() ? "quadratic-formula expansion equals Newton terms" : diff);
        } catch (const Error& e) {
            add("closed-form", false, e.what());
        }
    }

    add("ode-series", ode_series_check(cert, lifted),
        "q0*G + q1*G' - R = 0 mod z^" + std::to_string(n - 1));

    const PRecurrence rec = extract_recurrence(cert.ode);
    const RecurrenceCheck check = verify_recurrence(rec, terms);
    add("recurrence", check.ok,
        format_recurrence(rec) +
            (check.ok ? "; zero residual for n = " + std::to_string(rec.valid_from) + ".." + std::to_string(n - 1)
                      : "; residual " + to_string(check.residual) + " at n = " + std::to_string(*check.first_failure)));

    try {
        const std::size_t seed = required_seed_length(rec);
        if (seed > n) throw Error(ErrorKind::Usage, "recurrence needs " + std::to_string(seed) + " seed terms");
        const auto extended = prec_eval(rec, std::vector<Rational>(terms.begin(), terms.begin() + static_cast<long>(seed)), n);
        const std::string diff = first_difference(extended, terms);
        add("prec-eval", diff.empty(),
            diff.empty() ? "recurrence seeded with " + std::to_string(seed) + " terms reproduces all terms" : diff);
    } catch (const Error& e) {
        add("prec-eval", false, e.what());
    }

    if (options.extra_recurrence) {
        const RecurrenceCheck extra = verify_recurrence(*options.extra_recurrence, terms);
        add("given-recurrence", extra.ok,
            extra.ok ? "zero residual" : "residual " + to_string(extra.residual) + " at n = " +
                                             std::to_string(*extra.first_failure));
    }

    if (options.bfile) {
        const CrosscheckReport cc = crosscheck(terms, *options.bfile);
        add("bfile", cc.agree && cc.compared > 0,
            cc.agree ? std::to_string(cc.compared) + " overlapping terms agree"
                     : "mismatch at n = " + std::to_string(*cc.first_mismatch) + ": computed " +
                           to_string(cc.computed_value) + ", b-file " + to_string(cc.reference_value));
    }
    return report;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Usage, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Usage, "cannot write '" + path + "'");
    out << text;
}

std::string spec_comment(const ChouletSpec& s) {
    return " spec: a0=" + to_string(s.a0) + " a1=" + to_string(s.a1) + " k=" + to_string(s.k) +
           " l=" + to_string(s.l);
}

int cmd_derive(const std::string& spec_path, const std::string& out_path, std::ostream& out, std::ostream& err) {
    const ChouletSpec spec = parse_spec_file(read_file(spec_path));
    const AlgebraicEq eq = derive_algebraic(spec);
    out << format(eq.p) << "\n";

    constexpr std::size_t kResidualOrder = 30;
    const Series g(conv_terms(spec, kResidualOrder));
    const bool residual_ok = substitute(eq.p, g).is_zero();
    err << "# residual P(z, G) mod z^" << kResidualOrder << ": " << (residual_ok ? "zero" : "NONZERO") << "\n";

    if (!out_path.empty()) {
        write_file(out_path, format_certificate_file(CertificateFile{eq, std::nullopt, std::nullopt, {spec_comment(spec)}}));
    }
    return residual_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_prove(const std::string& spec_path, int max_degree, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
    const ChouletSpec spec = parse_spec_file(read_file(spec_path));
    const AlgebraicEq eq = derive_algebraic(spec);
    std::optional<Certificate> cert;
    try {
        cert = find_first_order_ode(eq, max_degree);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateOde) throw;
        err << "holoprove: " << e.what() << "\n";
        return kExitSearchExhausted;
    }
    if (!cert) {
        err << "holoprove: no first-order ODE within max degree " << max_degree << "\n";
        return kExitSearchExhausted;
    }

    const CertificateFile file = make_certificate_file(eq, *cert, {spec_comment(spec)});
    const std::string text = format_certificate_file(file);
    if (!out_path.empty()) {
        write_file(out_path, text);
    } else {
        out << text;
    }

    const PRecurrence rec = extract_recurrence(cert->ode);
    out << "level: " << ansatz_level(*cert) << "\n";
    out << "recurrence: " << format_recurrence(rec) << "\n";
    out << "factored: " << format_recurrence_factored(rec) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& cert_path, std::size_t terms, const std::string& bfile_path,
               const std::string& recurrence_text, bool machine, bool verbose, std::ostream& out) {
    const CertificateFile file = parse_certificate_file(read_file(cert_path));
    VerifyOptions options;
    options.terms = terms;
    if (!bfile_path.empty()) options.bfile = parse_bfile(read_file(bfile_path));
    if (!recurrence_text.empty()) options.extra_recurrence = parse_recurrence(recurrence_text);

    const VerifyReport report = verify_certificate_file(file, options);
    const bool ok = report.all_ok();
    const auto& t = report.terms;
    const bool has_last = !t.empty() && is_integer(t.back());

    if (machine) {
        for (const auto& s : report.sections) out << s.name << "=" << (s.ok ? "PASS" : "FAIL") << "\n";
        out << "terms=" << t.size() << "\n";
        if (has_last) out << "last_digits=" << decimal_digits(t.back().get_num()) << "\n";
        out << "overall=" << (ok ? "PASS" : "FAIL") << "\n";
    } else {
        for (const auto& s : report.sections) {
            out << (s.ok ? "[PASS] " : "[FAIL] ") << s.name << ": " << s.detail << "\n";
        }
        if (has_last) {
            out << "a(" << t.size() - 1 << ") digits: " << decimal_digits(t.back().get_num()) << "\n";
        }
        if (verbose) {
            out << "terms:\n" << format(Series(t), true) << "\n";
        }
        out << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"holoprove: algebraic generating function -> first-order ODE -> P-recursive recurrence"};
    app.footer(
        "Exit codes: 0 success, 1 verification failure, 2 input error, 3 search exhausted.");
    app.require_subcommand(1);

    std::string spec_path, cert_path, out_path, bfile_path, recurrence_text;
    int max_degree = 6;
    std::size_t terms = 251;
    bool machine = false, verbose = false;

    auto* derive = app.add_subcommand("derive", "Derive the algebraic equation P(z, G) = 0 of a spec");
    derive->add_option("spec", spec_path, "Spec file (keys a0, a1, k, l)")->required();
    derive->add_option("--out", out_path, "Write a certificate stub holding P and the branch");

    auto* prove = app.add_subcommand("prove", "Find and certify q0 G + q1 G' = R and extract the recurrence");
    prove->add_option("spec", spec_path, "Spec file (keys a0, a1, k, l)")->required();
    prove->add_option("--max-degree", max_degree, "Highest ansatz level to search")->check(CLI::NonNegativeNumber);
    prove->add_option("--out", out_path, "Certificate output file (stdout when omitted)");

    auto* verify = app.add_subcommand("verify", "Re-check a certificate and cross-verify the term generators");
    verify->add_option("certificate", cert_path, "Certificate file")->required();
    verify->add_option("--terms", terms, "Number of terms a(0..N-1) to generate")->check(CLI::Range(10, 100000));
    verify->add_option("--bfile", bfile_path, "OEIS b-file to cross-check against");
    verify->add_option("--recurrence", recurrence_text, "Additional recurrence to check, in printed form");
    verify->add_flag("--machine", machine, "One key=value line per check");
    verify->add_flag("--verbose", verbose, "Also print every term, one per line");

    std::vector<std::string> argv_store{"holoprove"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*derive) return cmd_derive(spec_path, out_path, out, err);
        if (*prove) return cmd_prove(spec_path, max_degree, out_path, out, err);
        if (*verify) return cmd_verify(cert_path, terms, bfile_path, recurrence_text, machine, verbose, out);
    } catch (const Error& e) {
        err << "holoprove: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::Internal ? kExitVerificationFailed : kExitInputError;
    }
    return kExitInputError;
}

}  // namespace holoprove
