#pragma once

#include "apostol/cyclotomic.hpp"

#include <map>
#include <string>
#include <utility>

namespace apostol {

/// Bivariate polynomial in the formal symbols Ll (= log lambda) and Lq
/// (= log q) with CycQ coefficients. Sparse, exponents (i, j) = (Ll, Lq).
class BivarPoly {
public:
    using Key = std::pair<int, int>;

    BivarPoly() {}
    BivarPoly(const CycQ& c) {
        if (!c.is_zero()) t_[{0, 0}] = c;
    }
    static BivarPoly sym_llambda() { return monomial(1, 0, CycQ(1)); }
    static BivarPoly sym_lq() { return monomial(0, 1, CycQ(1)); }
    static BivarPoly monomial(int i, int j, const CycQ& c);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    CycQ constant() const;
    const std::map<Key, CycQ>& terms() const { return t_; }

    /// Leading coefficient in lex order on (deg Ll, deg Lq).
    CycQ leading() const;
    /// Elementwise minimum exponent over all terms; (0,0) for the zero poly.
    Key min_exponents() const;
    /// Divides every term by Ll^e.first * Lq^e.second (must divide exactly).
    BivarPoly shift_down(Key e) const;

    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly operator-() const;
    BivarPoly scaled(const CycQ& s) const;

    friend bool operator==(const BivarPoly& a, const BivarPoly& b);
    friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void prune();
    std::map<Key, CycQ> t_;
};

/// Rational function in Ll, Lq over CycQ; the coefficient ring of every
/// lambda,q-dependent series. Stored as num/den with the common monomial
/// factor cancelled and den scaled to leading coefficient 1; full gcd
/// reduction is deliberately not performed, equality goes through
/// cross-multiplication.
class LogExpr {
public:
    LogExpr() : num_(), den_(CycQ(1)) {}
    LogExpr(long n) : num_(CycQ(n)), den_(CycQ(1)) {}
    LogExpr(const Rat& r) : num_(CycQ(r)), den_(CycQ(1)) {}
    LogExpr(const CycQ& c) : num_(c), den_(CycQ(1)) {}
    LogExpr(BivarPoly num, BivarPoly den);

    static LogExpr sym_llambda() { return LogExpr(BivarPoly::sym_llambda(), BivarPoly(CycQ(1))); }
    static LogExpr sym_lq() { return LogExpr(BivarPoly::sym_lq(), BivarPoly(CycQ(1))); }

    const BivarPoly& num() const { return num_; }
    const BivarPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const;
    Rat to_rat() const;

    LogExpr inv() const;

    friend LogExpr operator+(const LogExpr& a, const LogExpr& b);
    friend LogExpr operator-(const LogExpr& a, const LogExpr& b);
    friend LogExpr operator*(const LogExpr& a, const LogExpr& b);
    friend LogExpr operator/(const LogExpr& a, const LogExpr& b);
    LogExpr operator-() const;
    LogExpr& operator+=(const LogExpr& b) { *this = *this + b; return *this; }
    LogExpr& operator-=(const LogExpr& b) { *this = *this - b; return *this; }
    LogExpr& operator*=(const LogExpr& b) { *this = *this * b; return *this; }
    LogExpr& operator/=(const LogExpr& b) { *this = *this / b; return *this; }

    /// Equality by cross-multiplication: a.num*b.den == b.num*a.den.
    friend bool operator==(const LogExpr& a, const LogExpr& b);
    friend bool operator!=(const LogExpr& a, const LogExpr& b) { return !(a == b); }

    std::string str() const;

private:
    void normalize();
    BivarPoly num_, den_;
};

}  // namespace apostol
