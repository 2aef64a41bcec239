#include "apostol/logexpr.hpp"

#include <sstream>

namespace apostol {

BivarPoly BivarPoly::monomial(int i, int j, const CycQ& c) {
    BivarPoly p;
    if (!c.is_zero()) p.t_[{i, j}] = c;
    return p;
}

void BivarPoly::prune() {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second.is_zero())
            it = t_.erase(it);
        else
            ++it;
    }
}

bool BivarPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0});
}

CycQ BivarPoly::constant() const {
    auto it = t_.find({0, 0});
    return it == t_.end() ? CycQ(0) : it->second;
}

CycQ BivarPoly::leading() const {
    if (t_.empty()) return CycQ(0);
    return t_.rbegin()->second;  // map ordered lex on (i, j)
}

BivarPoly::Key BivarPoly::min_exponents() const {
    if (t_.empty()) return {0, 0};
    int mi = t_.begin()->first.first, mj = t_.begin()->first.second;
    for (const auto& [k, v] : t_) {
        mi = std::min(mi, k.first);
        mj = std::min(mj, k.second);
    }
    return {mi, mj};
}

BivarPoly BivarPoly::shift_down(Key e) const {
    BivarPoly r;
    for (const auto& [k, v] : t_) {
        if (k.first < e.first || k.second < e.second)
            throw std::logic_error("BivarPoly::shift_down: monomial does not divide");
        r.t_[{k.first - e.first, k.second - e.second}] = v;
    }
    return r;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    for (const auto& [k, v] : b.t_) {
        auto it = r.t_.find(k);
        if (it == r.t_.end())
            r.t_[k] = v;
        else
            it->second += v;
    }
    r.prune();
    return r;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto& [k, v] : r.t_) v = -v;
    return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ka, va] : a.t_)
        for (const auto& [kb, vb] : b.t_) {
            BivarPoly::Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.t_.find(k);
            if (it == r.t_.end())
                r.t_[k] = va * vb;
            else
                it->second += va * vb;
        }
    r.prune();
    return r;
}

BivarPoly BivarPoly::scaled(const CycQ& s) const {
    BivarPoly r;
    if (s.is_zero()) return r;
    for (const auto& [k, v] : t_) r.t_[k] = v * s;
    return r;
}

bool operator==(const BivarPoly& a, const BivarPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    auto ib = b.t_.begin();
    for (; ia != a.t_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

std::string BivarPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : t_) {
        if (!first) os << " + ";
        bool need_coeff = (k == Key{0, 0}) || !(v == CycQ(1));
        bool wrote = false;
        if (need_coeff) {
            os << v.str();
            wrote = true;
        }
        if (k.first > 0) {
            if (wrote) os << "*";
            os << "Ll";
            if (k.first > 1) os << "^" << k.first;
            wrote = true;
        }
        if (k.second > 0) {
            if (wrote) os << "*";
            os << "Lq";
            if (k.second > 1) os << "^" << k.second;
        }
        first = false;
    }
    return os.str();
}

LogExpr::LogExpr(BivarPoly num, BivarPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("LogExpr: zero denominator");
    normalize();
}

void LogExpr::normalize() {
    if (num_.is_zero()) {
        den_ = BivarPoly(CycQ(1));
        return;
    }
    auto en = num_.min_exponents();
    auto ed = den_.min_exponents();
    BivarPoly::Key e{std::min(en.first, ed.first), std::min(en.second, ed.second)};
    if (e != BivarPoly::Key{0, 0}) {
        num_ = num_.shift_down(e);
        den_ = den_.shift_down(e);
    }
    CycQ lc = den_.leading();
    if (!(lc == CycQ(1))) {
        CycQ ilc = lc.inv();
        num_ = num_.scaled(ilc);
        den_ = den_.scaled(ilc);
    }
}

bool LogExpr::is_rational() const {
    return num_.is_constant() && den_.is_constant() && num_.constant().is_rational() &&
           den_.constant().is_rational();
}

Rat LogExpr::to_rat() const {
    if (!is_rational()) throw std::domain_error("LogExpr::to_rat: not a rational constant: " + str());
    return num_.constant().to_rat() / den_.constant().to_rat();
}

LogExpr LogExpr::inv() const {
    if (is_zero()) throw std::domain_error("LogExpr: division by zero");
    return LogExpr(den_, num_);
}

LogExpr operator+(const LogExpr& a, const LogExpr& b) {
    return LogExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LogExpr operator-(const LogExpr& a, const LogExpr& b) {
    return LogExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

LogExpr operator*(const LogExpr& a, const LogExpr& b) {
    return LogExpr(a.num_ * b.num_, a.den_ * b.den_);
}

LogExpr operator/(const LogExpr& a, const LogExpr& b) {
    if (b.is_zero()) throw std::domain_error("LogExpr: division by zero");
    return LogExpr(a.num_ * b.den_, a.den_ * b.num_);
}

LogExpr LogExpr::operator-() const {
    LogExpr r = *this;
    r.num_ = -r.num_;
    return r;
}

bool operator==(const LogExpr& a, const LogExpr& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

std::string LogExpr::str() const {
    if (den_ == BivarPoly(CycQ(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace apostol
