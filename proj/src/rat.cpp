#include "apostol/rat.hpp"

namespace apostol {

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        throw std::invalid_argument("Rat::parse: float syntax rejected: " + s);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat::parse: bad rational literal: " + s);
    }
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? *this : inv();
    long k = e > 0 ? e : -e;
    Rat acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial_int(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rat binomial_rat(const Rat& alpha, long n) {
    if (n < 0) return Rat(0);
    Rat r(1);
    for (long i = 0; i < n; ++i) r *= (alpha - Rat(i)) / Rat(i + 1);
    return r;
}

Rat falling_factorial(const Rat& x, long n) {
    Rat r(1);
    for (long i = 0; i < n; ++i) r *= x - Rat(i);
    return r;
}

}  // namespace apostol
