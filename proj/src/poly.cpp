#include "apostol/poly.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace apostol {

Rat RatPoly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

RatPoly RatPoly::derivative() const {
    std::vector<Rat> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::integral() const {
    std::vector<Rat> d(c_.size() + 1);
    for (size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i] / Rat(static_cast<long>(i + 1));
    return RatPoly(std::move(d));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const Rat& s) const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return RatPoly(std::move(r));
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& quot, RatPoly& rem) {
    if (b.is_zero()) throw std::domain_error("RatPoly: division by zero polynomial");
    std::vector<Rat> r = a.c_;
    int db = b.degree();
    Rat lb = b.leading().inv();
    std::vector<Rat> q;
    int dr = static_cast<int>(r.size()) - 1;
    if (dr >= db) q.assign(dr - db + 1, Rat(0));
    while (dr >= db) {
        Rat f = r[dr] * lb;
        q[dr - db] = f;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b.c_[i];
        while (!r.empty() && r.back().is_zero()) r.pop_back();
        dr = static_cast<int>(r.size()) - 1;
    }
    quot = RatPoly(std::move(q));
    rem = RatPoly(std::move(r));
}

RatPoly RatPoly::mod(const RatPoly& m) const {
    RatPoly q, r;
    divmod(*this, m, q, r);
    return r;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

const RatPoly& cyclotomic_poly(int m) {
    static std::map<int, RatPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be positive");

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed bottom-up.
    std::function<const RatPoly&(int)> phi = [&](int k) -> const RatPoly& {
        auto jt = cache.find(k);
        if (jt != cache.end()) return jt->second;
        std::vector<Rat> xm(k + 1);
        xm[0] = Rat(-1);
        xm[k] = Rat(1);
        RatPoly num(std::move(xm));
        for (int d = 1; d < k; ++d) {
            if (k % d != 0) continue;
            RatPoly q, r;
            RatPoly::divmod(num, phi(d), q, r);
            if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division");
            num = q;
        }
        return cache.emplace(k, std::move(num)).first->second;
    };
    return phi(m);
}

}  // namespace apostol
