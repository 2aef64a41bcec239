#pragma once

#include "apostol/rat.hpp"

#include <string>
#include <vector>

namespace apostol {

/// Dense univariate polynomial over Rat, coefficients low to high.
class RatPoly {
public:
    RatPoly() {}
    RatPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
    static RatPoly constant(const Rat& r) { return RatPoly({r}); }
    static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
    }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }

    Rat eval(const Rat& x) const;

    RatPoly derivative() const;
    /// Antiderivative with zero constant term.
    RatPoly integral() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator-() const;
    RatPoly scaled(const Rat& s) const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    /// Exact division with remainder; divisor must be nonzero.
    static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& quot, RatPoly& rem);
    RatPoly mod(const RatPoly& m) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// m-th cyclotomic polynomial, computed by exact division of x^m - 1 and cached.
const RatPoly& cyclotomic_poly(int m);

}  // namespace apostol
