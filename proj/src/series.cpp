#include "holoprove/series.hpp"

#include "holoprove/error.hpp"

#include <algorithm>

namespace holoprove {

Series Series::zero(std::size_t order) { return Series(std::vector<Rational>(order)); }

Series Series::constant(const Rational& c, std::size_t order) {
    std::vector<Rational> v(order);
    if (order > 0) v[0] = c;
    return Series(std::move(v));
}

Series Series::from_poly(const UPoly& p, std::size_t order) {
    std::vector<Rational> v(order);
    for (std::size_t i = 0; i < order; ++i) v[i] = p.coeff(static_cast<int>(i));
    return Series(std::move(v));
}

Series Series::truncated(std::size_t order) const {
    if (order > coeffs_.size()) throw Error(ErrorKind::Usage, "cannot extend a truncated series");
    return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order)));
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Series operator+(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
    return Series(std::move(out));
}

Series operator-(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a.coeffs_[i] - b.coeffs_[i];
    return Series(std::move(out));
}

Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Series(std::move(out));
}

Series operator*(Series a, const Rational& c) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
}

Series series_arith(const Series& a, const Series& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
    }
    throw Error(ErrorKind::Internal, "unknown arithmetic op");
}

Series inverse(const Series& a) {
    if (a.order() == 0) return a;
    if (a[0] == 0) throw Error(ErrorKind::NonUnit, "series with zero constant term has no inverse");
    const std::size_t n = a.order();
    const Rational inv0 = Rational(1) / a[0];
    std::vector<Rational> b(n);
    b[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
        b[k] = -acc * inv0;
    }
    return Series(std::move(b));
}

Series sqrt(const Series& a) {
    if (a.order() == 0) return a;
    if (a[0] != 1) throw Error(ErrorKind::Branch, "series square root needs constant term 1");
    const std::size_t n = a.order();
    std::vector<Rational> s(n);
    s[0] = 1;
    // (sum s_i z^i)^2 = a gives 2 s_k = a_k - sum_{0<i<k} s_i s_{k-i}.
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = a[k];
        for (std::size_t i = 1; i < k; ++i) acc -= s[i] * s[k - i];
        s[k] = acc / 2;
    }
    return Series(std::move(s));
}

Series derivative(const Series& a) {
    if (a.order() == 0) return a;
    std::vector<Rational> out(a.order() - 1);
    for (std::size_t i = 1; i < a.order(); ++i) out[i - 1] = a[i] * static_cast<long>(i);
    return Series(std::move(out));
}

Series shift_down(const Series& a, std::size_t k) {
    if (k > a.order()) throw Error(ErrorKind::Usage, "shift exceeds series order");
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] != 0) throw Error(ErrorKind::Internal, "shifted-out coefficient is nonzero");
    }
    auto cs = a.coeffs();
    return Series(std::vector<Rational>(cs.begin() + static_cast<long>(k), cs.end()));
}

Series substitute(const BiPoly& p, const Series& s) {
    const std::size_t n = s.order();
    Series acc = Series::zero(n);
    for (int j = p.degree_w(); j >= 0; --j) {
        acc = acc * s + Series::from_poly(p.coeff(j), n);
    }
    return acc;
}

Series newton_lift(const BiPoly& p, const Rational& g0, std::size_t order) {
    if (order == 0) throw Error(ErrorKind::Usage, "newton_lift needs order >= 1");
    if (p.eval(0, g0) != 0) {
        throw Error(ErrorKind::NotARoot, "P(0, " + to_string(g0) + ") != 0");
    }
    const BiPoly pw = partial(p, Var::W);
    if (pw.eval(0, g0) == 0) {
        throw Error(ErrorKind::RamifiedBranch, "dP/dw(0, " + to_string(g0) + ") = 0");
    }

    std::vector<Rational> seed{g0};
    Series s(std::move(seed));
    std::size_t prec = 1;
    while (prec < order) {
        prec = std::min(2 * prec, order);
        std::vector<Rational> ext(s.coeffs().begin(), s.coeffs().end());
        ext.resize(prec);
        s = Series(std::move(ext));
        s = s - substitute(p, s) * inverse(substitute(pw, s));
    }
    return s;
}

namespace {

// Exact rational square root, if any.
bool rational_sqrt(const Rational& x, Rational& out) {
    if (x < 0) return false;
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) {
        return false;
    }
    Integer num = sqrt(Integer(x.get_num()));
    Integer den = sqrt(Integer(x.get_den()));
    out = Rational(num, den);
    out.canonicalize();
    return true;
}

}  // namespace

Series closed_form_root(const BiPoly& p, const Rational& g0, std::size_t order) {
    if (p.degree_w() != 2) throw Error(ErrorKind::Usage, "closed form needs a quadratic in w");
    const UPoly a = p.coeff(2);
    const UPoly b = p.coeff(1);
    const UPoly c = p.coeff(0);
    const UPoly disc = b * b - UPoly::constant(4) * a * c;

    const Rational d0 = disc.coeff(0);
    if (d0 == 0) throw Error(ErrorKind::RamifiedBranch, "discriminant vanishes at z = 0");
    Rational root_d0;
    if (!rational_sqrt(d0, root_d0)) {
        throw Error(ErrorKind::Branch, "discriminant constant term is not a rational square");
    }

    const auto v = static_cast<std::size_t>(a.valuation());
    const std::size_t work = order + v;
    const Series sq = sqrt(Series::from_poly(disc * (Rational(1) / d0), work)) * root_d0;
    const Series minus_b = Series::from_poly(-b, work);
    const Series denom = shift_down(Series::from_poly(a * Rational(2), work), v);

    for (int sign : {1, -1}) {
        const Series numer = minus_b - sq * Rational(sign);
        bool divisible = true;
        for (std::size_t i = 0; i < v; ++i) divisible = divisible && numer[i] == 0;
        if (!divisible) continue;
        Series root = shift_down(numer, v) * inverse(denom);
        if (root[0] == g0) return root;
    }
    throw Error(ErrorKind::Branch, "no quadratic-formula branch has constant term " + to_string(g0));
}

std::string format(const Series& s, bool one_per_line) {
    std::string out;
    for (std::size_t i = 0; i < s.order(); ++i) {
        if (i > 0) out += one_per_line ? "\n" : ", ";
        out += to_string(s[i]);
    }
    return out;
}

}  // namespace holoprove
