#pragma once

#include "apostol/poly.hpp"
#include "apostol/rat.hpp"

#include <string>
#include <vector>

namespace apostol {

/// Element of the cyclotomic field Q(zeta_m), stored as a polynomial in
/// zeta_m reduced mod the m-th cyclotomic polynomial. Order m = 1 embeds Q.
/// Mixed-order arithmetic is only allowed when one side has m = 1; any other
/// promotion goes through embed() explicitly.
class CycQ {
public:
    CycQ() : m_(1), c_(1) {}
    CycQ(long n) : m_(1), c_(1, Rat(n)) {}
    CycQ(const Rat& r) : m_(1), c_(1, r) {}
    CycQ(int order, std::vector<Rat> coeffs);

    static CycQ zeta(int m);
    /// zeta_m^k.
    static CycQ zeta_pow(int m, long k);

    int order() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat to_rat() const;

    /// Embeds into Q(zeta_M); requires order() | M.
    CycQ embed(int M) const;

    CycQ inv() const;

    friend CycQ operator+(const CycQ& a, const CycQ& b);
    friend CycQ operator-(const CycQ& a, const CycQ& b);
    friend CycQ operator*(const CycQ& a, const CycQ& b);
    friend CycQ operator/(const CycQ& a, const CycQ& b);
    CycQ operator-() const;
    CycQ& operator+=(const CycQ& b) { *this = *this + b; return *this; }
    CycQ& operator-=(const CycQ& b) { *this = *this - b; return *this; }
    CycQ& operator*=(const CycQ& b) { *this = *this * b; return *this; }
    CycQ& operator/=(const CycQ& b) { *this = *this / b; return *this; }

    friend bool operator==(const CycQ& a, const CycQ& b);
    friend bool operator!=(const CycQ& a, const CycQ& b) { return !(a == b); }

    std::string str() const;

private:
    static void align(const CycQ& a, const CycQ& b, CycQ& ap, CycQ& bp);
    RatPoly as_poly() const { return RatPoly(c_); }
    void reduce_from_poly(const RatPoly& p);

    int m_;
    std::vector<Rat> c_;  // length deg Phi_m
};

}  // namespace apostol
