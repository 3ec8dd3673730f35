#include "holoprove/bipoly.hpp"

#include "holoprove/error.hpp"

#include <algorithm>

namespace holoprove {

BiPoly::BiPoly(std::vector<UPoly> wcoeffs) : wcoeffs_(std::move(wcoeffs)) {
    for (const auto& c : wcoeffs_) {
        if (c.var() != 'z') throw Error(ErrorKind::Usage, "BiPoly coefficients must be in z");
    }
    normalize();
}

BiPoly::BiPoly(const UPoly& c) : BiPoly(std::vector<UPoly>{c}) {}

BiPoly BiPoly::w() { return BiPoly(std::vector<UPoly>{UPoly(), UPoly::constant(1)}); }

void BiPoly::normalize() {
    while (!wcoeffs_.empty() && wcoeffs_.back().is_zero()) wcoeffs_.pop_back();
}

int BiPoly::degree_z() const noexcept {
    int d = -1;
    for (const auto& c : wcoeffs_) d = std::max(d, c.degree());
    return d;
}

UPoly BiPoly::coeff(int j) const {
    if (j < 0 || j > degree_w()) return UPoly();
    return wcoeffs_[static_cast<std::size_t>(j)];
}

UPoly BiPoly::leading_w() const { return is_zero() ? UPoly() : wcoeffs_.back(); }

Rational BiPoly::coeff(int i, int j) const { return coeff(j).coeff(i); }

Rational BiPoly::eval(const Rational& z, const Rational& w) const {
    Rational acc = 0;
    for (auto it = wcoeffs_.rbegin(); it != wcoeffs_.rend(); ++it) {
        acc = acc * w + it->eval(z);
    }
    return acc;
}

UPoly BiPoly::eval_z(const Rational& z0) const {
    std::vector<Rational> out;
    out.reserve(wcoeffs_.size());
    for (const auto& c : wcoeffs_) out.push_back(c.eval(z0));
    return UPoly(std::move(out));
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& c : r.wcoeffs_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& b) {
    if (b.wcoeffs_.size() > wcoeffs_.size()) wcoeffs_.resize(b.wcoeffs_.size());
    for (std::size_t j = 0; j < b.wcoeffs_.size(); ++j) wcoeffs_[j] += b.wcoeffs_[j];
    normalize();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& b) {
    if (b.wcoeffs_.size() > wcoeffs_.size()) wcoeffs_.resize(b.wcoeffs_.size());
    for (std::size_t j = 0; j < b.wcoeffs_.size(); ++j) wcoeffs_[j] -= b.wcoeffs_[j];
    normalize();
    return *this;
}

BiPoly& BiPoly::operator*=(const UPoly& c) {
    if (c.var() != 'z') throw Error(ErrorKind::Usage, "BiPoly coefficients must be in z");
    for (auto& x : wcoeffs_) x *= c;
    normalize();
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
    for (auto& x : wcoeffs_) x *= c;
    normalize();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    std::vector<UPoly> out(a.wcoeffs_.size() + b.wcoeffs_.size() - 1);
    for (std::size_t i = 0; i < a.wcoeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.wcoeffs_.size(); ++j) {
            out[i + j] += a.wcoeffs_[i] * b.wcoeffs_[j];
        }
    }
    return BiPoly(std::move(out));
}

BiPoly bipoly_arith(const BiPoly& a, const BiPoly& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
    }
    throw Error(ErrorKind::Internal, "unknown arithmetic op");
}

BiPoly partial(const BiPoly& p, Var var) {
    auto cs = p.wcoeffs();
    std::vector<UPoly> out;
    if (var == Var::Z) {
        for (const auto& c : cs) out.push_back(derivative(c));
    } else {
        for (std::size_t j = 1; j < cs.size(); ++j) {
            out.push_back(cs[j] * Rational(static_cast<long>(j)));
        }
    }
    return BiPoly(std::move(out));
}

Rational content(const BiPoly& p) {
    std::vector<Rational> all;
    for (const auto& c : p.wcoeffs()) all.insert(all.end(), c.coeffs().begin(), c.coeffs().end());
    if (all.empty()) return 0;
    return Rational(gcd_of_numerators(all), lcm_of_denominators(all));
}

UPoly resultant_w(const BiPoly& a, const BiPoly& b) {
    const int m = a.degree_w();
    const int n = b.degree_w();
    if (m < 1 || n < 1) throw Error(ErrorKind::Usage, "resultant needs positive w-degree on both sides");

    const int size = m + n;
    std::vector<std::vector<UPoly>> mat(static_cast<std::size_t>(size),
                                        std::vector<UPoly>(static_cast<std::size_t>(size)));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k <= m; ++k) mat[i][i + k] = a.coeff(m - k);
    }
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k <= n; ++k) mat[n + i][i + k] = b.coeff(n - k);
    }

    // Fraction-free (Bareiss) elimination; every division below is exact in Q[z].
    bool negate = false;
    UPoly prev = UPoly::constant(1);
    for (int k = 0; k < size - 1; ++k) {
        if (mat[k][k].is_zero()) {
            int r = k + 1;
            while (r < size && mat[r][k].is_zero()) ++r;
            if (r == size) return UPoly();
            std::swap(mat[k], mat[r]);
            negate = !negate;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                mat[i][j] = exact_div(mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j], prev);
            }
            mat[i][k] = UPoly();
        }
        prev = mat[k][k];
    }
    UPoly det = mat[size - 1][size - 1];
    return negate ? -det : det;
}

UPoly discriminant_w(const BiPoly& p) {
    return exact_div(resultant_w(p, partial(p, Var::W)), p.leading_w());
}

}  // namespace holoprove
