#include "apostol/cyclotomic.hpp"

#include <sstream>

namespace apostol {

CycQ::CycQ(int order, std::vector<Rat> coeffs) : m_(order) {
    if (order < 1) throw std::invalid_argument("CycQ: order must be positive");
    reduce_from_poly(RatPoly(std::move(coeffs)));
}

void CycQ::reduce_from_poly(const RatPoly& p) {
    const RatPoly& phi = cyclotomic_poly(m_);
    RatPoly r = p.degree() >= phi.degree() ? p.mod(phi) : p;
    c_.assign(static_cast<size_t>(phi.degree()), Rat(0));
    for (int i = 0; i < phi.degree(); ++i) c_[static_cast<size_t>(i)] = r.coeff(i);
}

CycQ CycQ::zeta(int m) { return zeta_pow(m, 1); }

CycQ CycQ::zeta_pow(int m, long k) {
    k %= m;
    if (k < 0) k += m;
    std::vector<Rat> c(static_cast<size_t>(k) + 1);
    c.back() = Rat(1);
    return CycQ(m, std::move(c));
}

bool CycQ::is_zero() const {
    for (const auto& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

bool CycQ::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rat CycQ::to_rat() const {
    if (!is_rational()) throw std::domain_error("CycQ::to_rat: value is not rational: " + str());
    return c_[0];
}

CycQ CycQ::embed(int M) const {
    if (M == m_) return *this;
    if (M % m_ != 0) throw std::invalid_argument("CycQ::embed: order does not divide target");
    long step = M / m_;
    CycQ r(M, {Rat(0)});
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        CycQ term = zeta_pow(M, step * static_cast<long>(i));
        for (auto& coef : term.c_) coef *= c_[i];
        r += term;
    }
    return r;
}

void CycQ::align(const CycQ& a, const CycQ& b, CycQ& ap, CycQ& bp) {
    if (a.m_ == b.m_) {
        ap = a;
        bp = b;
    } else if (a.m_ == 1) {
        ap = a.embed(b.m_);
        bp = b;
    } else if (b.m_ == 1) {
        ap = a;
        bp = b.embed(a.m_);
    } else {
        throw std::invalid_argument("CycQ: incompatible cyclotomic orders " +
                                    std::to_string(a.m_) + " and " + std::to_string(b.m_));
    }
}

CycQ operator+(const CycQ& a, const CycQ& b) {
    CycQ x, y;
    CycQ::align(a, b, x, y);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

CycQ operator-(const CycQ& a, const CycQ& b) {
    CycQ x, y;
    CycQ::align(a, b, x, y);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

CycQ operator*(const CycQ& a, const CycQ& b) {
    CycQ x, y;
    CycQ::align(a, b, x, y);
    CycQ r;
    r.m_ = x.m_;
    r.reduce_from_poly(x.as_poly() * y.as_poly());
    return r;
}

CycQ CycQ::inv() const {
    if (is_zero()) throw std::domain_error("CycQ: division by zero");
    // Extended Euclid in Q[x] against Phi_m: u*a + v*Phi = gcd = const.
    const RatPoly& phi = cyclotomic_poly(m_);
    RatPoly r0 = phi, r1 = as_poly();
    RatPoly s0, s1 = RatPoly::constant(Rat(1));  // coefficients of `a`
    while (!r1.is_zero() && r1.degree() > 0) {
        RatPoly q, r;
        RatPoly::divmod(r0, r1, q, r);
        RatPoly s = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if (r1.is_zero()) throw std::logic_error("CycQ::inv: element not invertible mod Phi_m");
    CycQ out;
    out.m_ = m_;
    out.reduce_from_poly(s1.scaled(r1.coeff(0).inv()));
    return out;
}

CycQ operator/(const CycQ& a, const CycQ& b) {
    CycQ x, y;
    CycQ::align(a, b, x, y);
    return x * y.inv();
}

CycQ CycQ::operator-() const {
    CycQ r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

bool operator==(const CycQ& a, const CycQ& b) {
    if (a.m_ == b.m_) return a.c_ == b.c_;
    if (a.m_ == 1 || b.m_ == 1) {
        CycQ x, y;
        CycQ::align(a, b, x, y);
        return x.c_ == y.c_;
    }
    return false;
}

std::string CycQ::str() const {
    if (is_rational()) return c_[0].str();
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].str();
    }
    os << "]@z" << m_;
    return os.str();
}

}  // namespace apostol
