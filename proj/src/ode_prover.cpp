#include "holoprove/ode_prover.hpp"

#include "holoprove/error.hpp"
#include "holoprove/linalg.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace holoprove {

BiPoly certificate_residual(const BiPoly& p, const LinearOde& ode, const UPoly& q) {
    const BiPoly pz = partial(p, Var::Z);
    const BiPoly pw = partial(p, Var::W);
    return ode.q0 * (BiPoly::w() * pw) - ode.q1 * pz - ode.r * pw - q * p;
}

bool verify_certificate(const Certificate& cert) {
    return certificate_residual(cert.p, cert.ode, cert.q).is_zero();
}

void normalize_solution(LinearOde& ode, UPoly& q) {
    if (ode.q1.is_zero()) throw Error(ErrorKind::DegenerateOde, "cannot normalize with q1 = 0");
    Rational scale = Rational(1) / ode.q1.coeff(ode.q1.valuation());

    std::vector<Rational> scaled;
    for (const UPoly* p : {&ode.q0, &ode.q1, &ode.r}) {
        for (const auto& c : p->coeffs()) scaled.push_back(c * scale);
    }
    const Rational to_integers(lcm_of_denominators(scaled));
    for (auto& c : scaled) c *= to_integers;
    scale *= to_integers / Rational(gcd_of_numerators(scaled));

    ode.q0 *= scale;
    ode.q1 *= scale;
    ode.r *= scale;
    q *= scale;
}

namespace {

struct Ansatz {
    int n_q0, n_q1, n_r, n_q;  // number of coefficients of each unknown polynomial
    std::size_t columns() const { return static_cast<std::size_t>(n_q0 + n_q1 + n_r + n_q); }
};

Ansatz ansatz_for_level(int d) { return Ansatz{d + 1, d + 3, d + 1, d + 2}; }

// Slices a nullspace vector into (q0, q1, R, q).
std::pair<LinearOde, UPoly> unpack(const std::vector<Rational>& v, const Ansatz& a) {
    auto slice = [&](int from, int count) {
        return UPoly(std::vector<Rational>(v.begin() + from, v.begin() + from + count));
    };
    int at = 0;
    LinearOde ode;
    ode.q0 = slice(at, a.n_q0);
    at += a.n_q0;
    ode.q1 = slice(at, a.n_q1);
    at += a.n_q1;
    ode.r = slice(at, a.n_r);
    at += a.n_r;
    UPoly q = slice(at, a.n_q);
    return {std::move(ode), std::move(q)};
}

// Columns of the linear map (q0, q1, R, q) -> q0 w P_w - q1 P_z - R P_w - q P,
// one image polynomial per unknown coefficient.
std::vector<BiPoly> ansatz_images(const BiPoly& p, const Ansatz& a) {
    const BiPoly pz = partial(p, Var::Z);
    const BiPoly pw = partial(p, Var::W);
    const BiPoly w_pw = BiPoly::w() * pw;
    std::vector<BiPoly> images;
    images.reserve(a.columns());
    for (int i = 0; i < a.n_q0; ++i) images.push_back(UPoly::monomial(1, i) * w_pw);
    for (int i = 0; i < a.n_q1; ++i) images.push_back(UPoly::monomial(-1, i) * pz);
    for (int i = 0; i < a.n_r; ++i) images.push_back(UPoly::monomial(-1, i) * pw);
    for (int i = 0; i < a.n_q; ++i) images.push_back(UPoly::monomial(-1, i) * p);
    return images;
}

std::size_t nonzero_count(const std::vector<Rational>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; }));
}

}  // namespace

std::optional<Certificate> find_first_order_ode(const AlgebraicEq& eq, int max_degree) {
    if (eq.p.degree_w() < 1) throw Error(ErrorKind::Usage, "equation must involve w");
    bool saw_degenerate = false;

    for (int d = 0; d <= max_degree; ++d) {
        const Ansatz a = ansatz_for_level(d);
        const auto images = ansatz_images(eq.p, a);

        std::map<std::pair<int, int>, std::size_t> row_of;  // (w-degree, z-degree) -> row
        for (const auto& img : images) {
            for (int j = 0; j <= img.degree_w(); ++j) {
                const UPoly c = img.coeff(j);
                for (int i = 0; i <= c.degree(); ++i) {
                    if (c.coeff(i) != 0) row_of.try_emplace({j, i}, 0);
                }
            }
        }
        std::size_t next = 0;
        for (auto& [key, row] : row_of) row = next++;

        RationalMatrix m(row_of.size(), a.columns());
        for (std::size_t col = 0; col < images.size(); ++col) {
            const BiPoly& img = images[col];
            for (int j = 0; j <= img.degree_w(); ++j) {
                const UPoly c = img.coeff(j);
                for (int i = 0; i <= c.degree(); ++i) {
                    if (c.coeff(i) != 0) m(row_of.at({j, i}), col) = c.coeff(i);
                }
            }
        }

        auto basis = nullspace(std::move(m));
        if (basis.empty()) continue;

        const auto q1_begin = static_cast<std::size_t>(a.n_q0);
        const auto q1_end = q1_begin + static_cast<std::size_t>(a.n_q1);
        std::erase_if(basis, [&](const std::vector<Rational>& v) {
            return std::all_of(v.begin() + static_cast<long>(q1_begin), v.begin() + static_cast<long>(q1_end),
                               [](const Rational& x) { return x == 0; });
        });
        if (basis.empty()) {
            saw_degenerate = true;
            continue;
        }

        const auto best = std::min_element(basis.begin(), basis.end(), [](const auto& x, const auto& y) {
            const auto nx = nonzero_count(x), ny = nonzero_count(y);
            if (nx != ny) return nx < ny;
            return x < y;
        });

        auto [ode, q] = unpack(*best, a);
        normalize_solution(ode, q);
        Certificate cert{eq.p, std::move(ode), std::move(q), false};
        if (!verify_certificate(cert)) {
            throw Error(ErrorKind::Internal, "nullspace solution fails re-expansion");
        }
        cert.identity_residual_checked = true;
        return cert;
    }

    if (saw_degenerate) {
        throw Error(ErrorKind::DegenerateOde, "every solution within the degree bound has q1 = 0");
    }
    return std::nullopt;
}

int ansatz_level(const Certificate& cert) {
    return std::max({0, cert.ode.q0.degree(), cert.ode.r.degree(), cert.ode.q1.degree() - 2,
                     cert.q.degree() - 1});
}

UnitReport unit_check(const Certificate& cert, const std::vector<Rational>& terms) {
    if (terms.empty()) throw Error(ErrorKind::Usage, "unit_check needs at least one term");
    UnitReport report;
    report.value = partial(cert.p, Var::W).eval(0, terms.front());
    report.ok = report.value != 0;
    return report;
}

bool ode_series_check(const Certificate& cert, const Series& g) {
    if (g.order() < 10) throw Error(ErrorKind::Usage, "ode_series_check needs a series of order >= 10");
    const std::size_t n = g.order() - 1;
    const Series gn = g.truncated(n);
    const Series lhs = Series::from_poly(cert.ode.q0, n) * gn +
                       Series::from_poly(cert.ode.q1, n) * derivative(g) -
                       Series::from_poly(cert.ode.r, n);
    return lhs.is_zero();
}

namespace {

int sign_of(const Rational& x) { return sgn(x); }

bool divides(const UPoly& d, const UPoly& a) {
    if (d.is_zero()) return false;
    return divrem(a, d).second.is_zero();
}

UPoly positive_primitive(const UPoly& a) {
    UPoly p = primitive_part(a);
    if (p.leading() < 0) p = -p;
    return p;
}

}  // namespace

std::optional<RootBracket> bisect_smallest_positive_root(const UPoly& f) {
    if (f.degree() < 1) return std::nullopt;
    const Rational step(1, 64);
    Rational lo = 0;
    int s_lo = sign_of(f.eval(lo));
    for (int k = 1; k <= 64; ++k) {
        const Rational hi = step * k;
        const int s_hi = sign_of(f.eval(hi));
        if (s_hi == 0) {
            return RootBracket{f, hi, hi, hi.get_d()};
        }
        if (s_lo != 0 && s_hi != s_lo) {
            Rational a = lo, b = hi;
            const Rational width(1, Integer("1000000000000"));
            while (b - a >= width) {
                Rational mid = (a + b) / 2;
                const int s_mid = sign_of(f.eval(mid));
                if (s_mid == 0) {
                    a = b = mid;
                    break;
                }
                if (s_mid == s_lo) {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            Rational mid = (a + b) / 2;
            return RootBracket{f, a, b, mid.get_d()};
        }
        lo = hi;
        s_lo = s_hi;
    }
    return std::nullopt;
}

SingularityReport singularity_report(const Certificate& cert) {
    SingularityReport report;
    const UPoly& q1 = cert.ode.q1;
    if (q1.is_zero()) throw Error(ErrorKind::Usage, "singularity report needs q1 != 0");

    report.rational_roots = rational_roots(q1);
    UPoly rest = q1;
    for (const auto& root : report.rational_roots) rest = exact_div(rest, UPoly{-root, 1});
    report.residual_factor = positive_primitive(squarefree_part(rest));

    const UPoly lead = cert.p.leading_w();
    report.discriminant = cert.p.degree_w() >= 2 ? discriminant_w(cert.p) : UPoly::constant(1);

    const UPoly sq_q1 = squarefree_part(q1);
    report.discriminant_roots_in_q1 =
        !report.discriminant.is_zero() && divides(squarefree_part(report.discriminant), sq_q1);
    report.leading_roots_in_q1 = divides(squarefree_part(lead), sq_q1);
    report.exact_match = !report.discriminant.is_zero() &&
                         squarefree_part(report.discriminant * lead) == sq_q1;

    if (report.residual_factor.degree() >= 1) {
        if (auto bracket = bisect_smallest_positive_root(report.residual_factor)) {
            report.dominant_roots.push_back(std::move(*bracket));
        }
    }
    return report;
}

}  // namespace holoprove
