#pragma once

#include "holoprove/upoly.hpp"

#include <span>
#include <vector>

namespace holoprove {

/// Polynomial in w with coefficients in Q[z]: wcoeffs()[j] multiplies w^j.
/// Same normalization rule as UPoly: no zero at the top, zero is empty.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UPoly> wcoeffs);
    /// Embeds a w-free polynomial.
    explicit BiPoly(const UPoly& c);

    /// The polynomial w.
    static BiPoly w();

    int degree_w() const noexcept { return static_cast<int>(wcoeffs_.size()) - 1; }
    /// Largest z-degree over all w-coefficients; -1 for zero.
    int degree_z() const noexcept;
    bool is_zero() const noexcept { return wcoeffs_.empty(); }
    std::span<const UPoly> wcoeffs() const noexcept { return wcoeffs_; }

    /// Coefficient of w^j (zero polynomial outside the stored range).
    UPoly coeff(int j) const;
    UPoly leading_w() const;
    /// Coefficient of z^i w^j.
    Rational coeff(int i, int j) const;

    Rational eval(const Rational& z, const Rational& w) const;
    /// Substitutes z = z0, leaving a polynomial in w (tagged 'z' for lack of a w tag).
    UPoly eval_z(const Rational& z0) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& b);
    BiPoly& operator-=(const BiPoly& b);
    BiPoly& operator*=(const UPoly& c);
    BiPoly& operator*=(const Rational& c);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const UPoly& c) { return a *= c; }
    friend BiPoly operator*(const UPoly& c, BiPoly a) { return a *= c; }
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
    friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

private:
    void normalize();

    std::vector<UPoly> wcoeffs_;
};

enum class Var { Z, W };

BiPoly bipoly_arith(const BiPoly& a, const BiPoly& b, ArithOp op);
BiPoly partial(const BiPoly& p, Var var);

/// Rational content over all z^i w^j coefficients (positive; zero for zero).
Rational content(const BiPoly& p);

/// Resultant with respect to w, as the determinant of the Sylvester matrix
/// over Q[z]. Both inputs must have positive w-degree.
UPoly resultant_w(const BiPoly& a, const BiPoly& b);

/// resultant_w(p, dp/dw) divided exactly by the leading w-coefficient of p.
/// Only the root set is meaningful to callers; the constant factor follows the
/// res/lc convention.
UPoly discriminant_w(const BiPoly& p);

}  // namespace holoprove
