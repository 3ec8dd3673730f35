#pragma once

#include "holoprove/bipoly.hpp"
#include "holoprove/rational.hpp"
#include "holoprove/upoly.hpp"

#include <span>
#include <string>
#include <vector>

namespace holoprove {

/// Truncated power series sum_{i < order} c_i z^i over Q.
///
/// Coefficients at indices >= order are unknown, not zero. Binary operations
/// between series of different orders therefore truncate to the smaller one.
class Series {
public:
    Series() = default;
    explicit Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    static Series zero(std::size_t order);
    static Series constant(const Rational& c, std::size_t order);
    static Series from_poly(const UPoly& p, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size(); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

    Series truncated(std::size_t order) const;
    bool is_zero() const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Rational& c);
    friend Series operator*(const Rational& c, Series a) { return std::move(a) * c; }

    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<Rational> coeffs_;
};

Series series_arith(const Series& a, const Series& b, ArithOp op);

/// Multiplicative inverse; throws NonUnit when the constant term is zero.
Series inverse(const Series& a);

/// Principal square root (constant term +1); throws Branch unless a[0] == 1.
Series sqrt(const Series& a);

/// Formal derivative; the result has order a.order() - 1.
Series derivative(const Series& a);

/// Divides by z^k. The first k coefficients must be zero (Internal otherwise).
Series shift_down(const Series& a, std::size_t k);

/// P(z, s) evaluated by Horner's scheme in w, at s's order.
Series substitute(const BiPoly& p, const Series& s);

/// Newton/Hensel lifting of the power-series root of P(z, w) = 0 with
/// constant term g0, to `order` coefficients. Working precision doubles each
/// step. Throws NotARoot if P(0, g0) != 0 and RamifiedBranch if dP/dw(0, g0) == 0.
Series newton_lift(const BiPoly& p, const Rational& g0, std::size_t order);

/// Expands the quadratic-formula root (-B - s*sqrt(B^2 - 4AC)) / (2A) of
/// P = A w^2 + B w + C, choosing the sign s whose expansion is a power series
/// with constant term g0. Requires deg_w P == 2; throws Branch when no sign
/// yields that root and RamifiedBranch when the discriminant vanishes at 0.
Series closed_form_root(const BiPoly& p, const Rational& g0, std::size_t order);

/// Comma-separated coefficients, or one per line when `one_per_line`.
std::string format(const Series& s, bool one_per_line = false);

}  // namespace holoprove
