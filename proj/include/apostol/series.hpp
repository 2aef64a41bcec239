#pragma once

#include "apostol/rat.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace apostol {

/// Default truncation order for family computations; the CLI can override it
/// through APOSTOL_LAB_TRUNCATION.
int default_truncation();

/// Truncated power series sum a_n t^n, n <= T, over an exact ring R.
/// Ordinary coefficients are stored; EGF values are extracted by egf(n).
/// R must be a field type with R(long), is_zero(), inv() and the usual
/// operators (Rat, CycQ and LogExpr all qualify).
template <typename R>
class TruncSeries {
public:
    explicit TruncSeries(int T) : c_(static_cast<size_t>(T) + 1, R(0)) {
        if (T < 0) throw std::invalid_argument("TruncSeries: negative truncation");
    }
    TruncSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("TruncSeries: empty coefficient vector");
    }

    static TruncSeries zero(int T) { return TruncSeries(T); }
    static TruncSeries one(int T) {
        TruncSeries s(T);
        s.c_[0] = R(1);
        return s;
    }
    static TruncSeries t(int T) {
        TruncSeries s(T);
        if (T >= 1) s.c_[1] = R(1);
        return s;
    }
    static TruncSeries constant(const R& v, int T) {
        TruncSeries s(T);
        s.c_[0] = v;
        return s;
    }
    /// e^{scale * t}: coefficients scale^n / n!.
    static TruncSeries exp_t(const R& scale, int T) {
        TruncSeries s(T);
        R cur(1);
        s.c_[0] = cur;
        for (int n = 1; n <= T; ++n) {
            cur = cur * scale / R(n);
            s.c_[static_cast<size_t>(n)] = cur;
        }
        return s;
    }

    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    const R& coeff(int n) const {
        if (n < 0 || n > trunc())
            throw std::out_of_range("TruncSeries: coefficient index beyond truncation");
        return c_[static_cast<size_t>(n)];
    }
    R& coeff_ref(int n) { return c_[static_cast<size_t>(n)]; }

    /// EGF coefficient n! * a_n.
    R egf(int n) const {
        R f(1);
        for (int i = 2; i <= n; ++i) f = f * R(i);
        return coeff(n) * f;
    }

    /// Index of the first nonzero coefficient; trunc()+1 when all zero.
    int order() const {
        for (int n = 0; n <= trunc(); ++n)
            if (!c_[static_cast<size_t>(n)].is_zero()) return n;
        return trunc() + 1;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        int T = std::min(a.trunc(), b.trunc());
        TruncSeries r(T);
        for (int n = 0; n <= T; ++n) r.c_[n] = a.c_[n] + b.c_[n];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        int T = std::min(a.trunc(), b.trunc());
        TruncSeries r(T);
        for (int n = 0; n <= T; ++n) r.c_[n] = a.c_[n] - b.c_[n];
        return r;
    }
    /// Cauchy product truncated at min(T).
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        int T = std::min(a.trunc(), b.trunc());
        TruncSeries r(T);
        for (int i = 0; i <= T; ++i) {
            if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; i + j <= T; ++j)
                r.c_[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
        return r;
    }
    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& c : r.c_) c = R(0) - c;
        return r;
    }
    TruncSeries scaled(const R& s) const {
        TruncSeries r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }
    /// Multiplication by t^k (drops the top k coefficients).
    TruncSeries shift_up(int k) const {
        TruncSeries r(trunc());
        for (int n = k; n <= trunc(); ++n) r.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n - k)];
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        int T = std::min(a.trunc(), b.trunc());
        for (int n = 0; n <= T; ++n)
            if (!(a.c_[static_cast<size_t>(n)] == b.c_[static_cast<size_t>(n)])) return false;
        return true;
    }

    /// f / g. When g has a zero constant term the common factor t^k
    /// (k = order of g) is cancelled first; f must share it. The result is
    /// truncated at min(T) - k.
    friend TruncSeries div(const TruncSeries& f, const TruncSeries& g) {
        int k = g.order();
        if (k > g.trunc())
            throw std::domain_error("TruncSeries: division by zero series");
        TruncSeries fn = f, gn = g;
        if (k > 0) {
            if (f.order() < k)
                throw std::domain_error(
                    "TruncSeries: divisor vanishes at t=0 and numerator does not share the factor t^" +
                    std::to_string(k));
            fn = f.shift_down(k);
            gn = g.shift_down(k);
        }
        int T = std::min(fn.trunc(), gn.trunc());
        R g0 = gn.c_[0];
        R ig0 = g0.inv();
        TruncSeries r(T);
        for (int n = 0; n <= T; ++n) {
            R acc = fn.c_[static_cast<size_t>(n)];
            for (int j = 1; j <= n; ++j)
                acc = acc - gn.c_[static_cast<size_t>(j)] * r.c_[static_cast<size_t>(n - j)];
            r.c_[static_cast<size_t>(n)] = acc * ig0;
        }
        return r;
    }

    /// Composition f(g(t)); g must have zero constant term.
    TruncSeries compose(const TruncSeries& g) const {
        if (!g.c_[0].is_zero())
            throw std::domain_error("TruncSeries::compose: inner series has nonzero constant term");
        int T = std::min(trunc(), g.trunc());
        // Horner over the truncated outer coefficients.
        TruncSeries r = constant(coeff(T), T);
        for (int n = T - 1; n >= 0; --n) {
            r = r * g.truncated(T);
            r.c_[0] = r.c_[0] + c_[static_cast<size_t>(n)];
        }
        return r;
    }

    /// log(1 + g); g must have zero constant term.
    friend TruncSeries log1p(const TruncSeries& g) {
        if (!g.c_[0].is_zero())
            throw std::domain_error("TruncSeries::log1p: argument has nonzero constant term");
        int T = g.trunc();
        TruncSeries r(T), pw = one(T);
        for (int k = 1; k <= T; ++k) {
            pw = pw * g;
            R c = R(k % 2 == 1 ? 1 : -1) / R(k);
            for (int n = 0; n <= T; ++n)
                r.c_[static_cast<size_t>(n)] += pw.c_[static_cast<size_t>(n)] * c;
        }
        return r;
    }

    /// (1 + g)^alpha = sum binom(alpha, n) g^n; g must have zero constant term.
    friend TruncSeries binomial_series(const R& alpha, const TruncSeries& g) {
        if (!g.c_[0].is_zero())
            throw std::domain_error("TruncSeries::binomial_series: argument has nonzero constant term");
        int T = g.trunc();
        TruncSeries r = one(T), pw = one(T);
        R b(1);
        for (int n = 1; n <= T; ++n) {
            pw = pw * g;
            b = b * (alpha - R(n - 1)) / R(n);
            for (int m = 0; m <= T; ++m)
                r.c_[static_cast<size_t>(m)] += pw.c_[static_cast<size_t>(m)] * b;
        }
        return r;
    }

    TruncSeries truncated(int T) const {
        if (T >= trunc()) return *this;
        return TruncSeries(std::vector<R>(c_.begin(), c_.begin() + T + 1));
    }
    /// Division by t^k; the first k coefficients must vanish. Truncation drops by k.
    TruncSeries shift_down(int k) const {
        for (int n = 0; n < k; ++n)
            if (!c_[static_cast<size_t>(n)].is_zero())
                throw std::domain_error("TruncSeries::shift_down: nonzero low-order coefficient");
        return TruncSeries(std::vector<R>(c_.begin() + k, c_.end()));
    }

private:
    std::vector<R> c_;
};

}  // namespace apostol
