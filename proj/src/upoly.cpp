#include "holoprove/upoly.hpp"

#include "holoprove/error.hpp"

#include <algorithm>

namespace holoprove {

namespace {

void require_same_var(const UPoly& a, const UPoly& b) {
    if (a.var() != b.var()) {
        throw Error(ErrorKind::Usage, std::string("variable mismatch: '") + a.var() +
                                          "' vs '" + b.var() + "'");
    }
}

}  // namespace

UPoly::UPoly(std::vector<Rational> coeffs, char var) : coeffs_(std::move(coeffs)), var_(var) {
    normalize();
}

UPoly::UPoly(std::initializer_list<Rational> coeffs, char var) : coeffs_(coeffs), var_(var) {
    normalize();
}

UPoly UPoly::constant(const Rational& c, char var) { return UPoly(std::vector<Rational>{c}, var); }

UPoly UPoly::monomial(const Rational& c, int degree, char var) {
    if (degree < 0) throw Error(ErrorKind::Usage, "negative monomial degree");
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UPoly(std::move(v), var);
}

UPoly UPoly::variable(char var) { return monomial(1, 1, var); }

UPoly UPoly::with_var(char var) const {
    UPoly r = *this;
    r.var_ = var;
    return r;
}

void UPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational UPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

int UPoly::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return static_cast<int>(i);
    }
    return -1;
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& b) {
    require_same_var(*this, b);
    if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    normalize();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& b) {
    require_same_var(*this, b);
    if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    normalize();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    require_same_var(a, b);
    if (a.is_zero() || b.is_zero()) return UPoly(a.var());
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UPoly(std::move(out), a.var());
}

UPoly& UPoly::operator*=(const UPoly& b) { return *this = *this * b; }

UPoly& UPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

bool operator==(const UPoly& a, const UPoly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
}

UPoly upoly_arith(const UPoly& a, const UPoly& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
    }
    throw Error(ErrorKind::Internal, "unknown arithmetic op");
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
    require_same_var(a, b);
    if (b.is_zero()) throw Error(ErrorKind::Usage, "polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(a.var()), a};

    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational lead = b.leading();
    const int db = b.degree();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + db)] / lead;
        quot[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= c * b.coeff(j);
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(quot), a.var()), UPoly(std::move(rem), a.var())};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw Error(ErrorKind::Internal, "inexact polynomial division");
    return q;
}

UPoly derivative(const UPoly& a) {
    if (a.degree() <= 0) return UPoly(a.var());
    std::vector<Rational> out(static_cast<std::size_t>(a.degree()));
    for (int i = 1; i <= a.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = a.coeff(i) * i;
    return UPoly(std::move(out), a.var());
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    require_same_var(a, b);
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x * (Rational(1) / x.leading());
}

UPoly squarefree_part(const UPoly& a) {
    if (a.is_zero()) return a;
    UPoly g = gcd(a, derivative(a));
    UPoly s = exact_div(a, g);
    return s * (Rational(1) / s.leading());
}

Rational content(const UPoly& a) {
    if (a.is_zero()) return 0;
    std::vector<Rational> cs(a.coeffs().begin(), a.coeffs().end());
    return Rational(gcd_of_numerators(cs), lcm_of_denominators(cs));
}

UPoly primitive_part(const UPoly& a) {
    if (a.is_zero()) return a;
    return a * (Rational(1) / content(a));
}

bool equal_up_to_scalar(const UPoly& a, const UPoly& b) {
    if (a.var() != b.var()) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    return a * b.leading() == b * a.leading();
}

std::vector<Rational> rational_roots(const UPoly& a) {
    if (a.is_zero()) throw Error(ErrorKind::Usage, "rational roots of the zero polynomial");
    std::vector<Rational> roots;

    // Strip the z^v factor first so the trailing coefficient is nonzero.
    const int v = a.valuation();
    for (int i = 0; i < v; ++i) roots.emplace_back(0);
    std::vector<Rational> shifted(a.coeffs().begin() + v, a.coeffs().end());
    UPoly rest = primitive_part(UPoly(std::move(shifted), a.var()));

    while (rest.degree() >= 1) {
        const Integer lead = rest.leading().get_num();
        const Integer trail = rest.coeff(0).get_num();
        bool found = false;
        for (const Integer& p : positive_divisors(trail)) {
            for (const Integer& q : positive_divisors(lead)) {
                for (int sign : {1, -1}) {
                    Rational cand(sign * p, q);
                    cand.canonicalize();
                    if (rest.eval(cand) == 0) {
                        roots.push_back(cand);
                        rest = primitive_part(exact_div(rest, UPoly({-cand, 1}, a.var())));
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace holoprove
