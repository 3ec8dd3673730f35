#pragma once

#include "holoprove/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace holoprove {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of var^i.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and has degree -1. The variable tag ('z' or 'n') is carried
/// along so that polynomials in z and recurrence coefficients in n cannot be
/// mixed by accident; binary operations on mismatched tags throw a usage error.
class UPoly {
public:
    static constexpr int kZeroDegree = -1;

    UPoly() = default;
    explicit UPoly(char var) : var_(var) {}
    UPoly(std::vector<Rational> coeffs, char var = 'z');
    UPoly(std::initializer_list<Rational> coeffs, char var = 'z');

    static UPoly constant(const Rational& c, char var = 'z');
    static UPoly monomial(const Rational& c, int degree, char var = 'z');
    /// The polynomial var itself.
    static UPoly variable(char var = 'z');

    char var() const noexcept { return var_; }
    UPoly with_var(char var) const;

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of var^i; zero outside the stored range (including i < 0).
    Rational coeff(int i) const;
    /// Leading coefficient; zero for the zero polynomial.
    Rational leading() const;
    /// Smallest i with a nonzero coefficient; -1 for the zero polynomial.
    int valuation() const noexcept;

    Rational eval(const Rational& x) const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& b);
    UPoly& operator-=(const UPoly& b);
    UPoly& operator*=(const UPoly& b);
    UPoly& operator*=(const Rational& c);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
    friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }

    /// Exact coefficient-wise equality after normalization (tags must agree too).
    friend bool operator==(const UPoly& a, const UPoly& b);

private:
    void normalize();

    std::vector<Rational> coeffs_;
    char var_ = 'z';
};

enum class ArithOp { Add, Sub, Mul };

UPoly upoly_arith(const UPoly& a, const UPoly& b, ArithOp op);

/// Returns (quotient, remainder) with a = b*quotient + remainder and
/// deg(remainder) < deg(b). Throws a usage error when b is zero.
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);

/// Quotient of a division that must be exact; throws an internal error otherwise.
UPoly exact_div(const UPoly& a, const UPoly& b);

UPoly derivative(const UPoly& a);

/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// a / gcd(a, a'), made monic.
UPoly squarefree_part(const UPoly& a);

/// Rational content: the positive c with a / c primitive with integer coefficients.
Rational content(const UPoly& a);

/// a / content(a): integer coefficients, coefficient gcd 1, sign preserved.
UPoly primitive_part(const UPoly& a);

/// True iff a = c*b for some nonzero rational c (two zero polynomials are equal).
bool equal_up_to_scalar(const UPoly& a, const UPoly& b);

/// All rational roots with multiplicity, ascending. Throws a usage error on zero.
std::vector<Rational> rational_roots(const UPoly& a);

}  // namespace holoprove
