#include "apostol/dirichlet.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace apostol {

namespace {

long mod_pow(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

long gcd_l(long a, long b) { return std::gcd(a, b); }

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

/// Order of u in (Z/m)^x.
long unit_order(long u, long m) {
    long cur = u % m, k = 1;
    while (cur != 1 % m) {
        cur = cur * u % m;
        ++k;
    }
    return k;
}

long primitive_root(long m) {
    long phi = euler_phi(m);
    for (long g = 2; g < m; ++g) {
        if (gcd_l(g, m) != 1) continue;
        if (unit_order(g, m) == phi) return g;
    }
    throw std::logic_error("primitive_root: none found (modulus not cyclic?)");
}

// CRT lift: x == a mod m, x == 1 mod n, gcd(m, n) = 1.
long crt_lift(long a, long m, long n) {
    long d = m * n;
    for (long x = a % m; x < d; x += m)
        if (x % n == 1 % n) return x;
    throw std::logic_error("crt_lift failed");
}

struct CyclicFactor {
    long gen;    // generator of the component, lifted mod d
    long order;  // component order
};

/// Cyclic decomposition of (Z/d)^x with explicit lifted generators.
std::vector<CyclicFactor> unit_group_factors(int d) {
    std::vector<std::pair<long, long>> prime_powers;  // (p, p^e)
    long n = d;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        long pe = 1;
        while (n % p == 0) {
            n /= p;
            pe *= p;
        }
        prime_powers.push_back({p, pe});
    }
    if (n > 1) prime_powers.push_back({n, n});
    std::sort(prime_powers.begin(), prime_powers.end());

    std::vector<CyclicFactor> factors;
    for (auto [p, pe] : prime_powers) {
        long rest = d / pe;
        if (p == 2) {
            if (pe == 2) continue;  // (Z/2)^x trivial
            if (pe == 4) {
                factors.push_back({crt_lift(3, pe, rest), 2});
            } else {
                // (Z/2^e)^x = <-1> x <5>
                factors.push_back({crt_lift(pe - 1, pe, rest), 2});
                factors.push_back({crt_lift(5, pe, rest), pe / 4});
            }
        } else {
            long g = primitive_root(pe);
            factors.push_back({crt_lift(g, pe, rest), euler_phi(pe)});
        }
    }
    return factors;
}

}  // namespace

bool DirichletChar::is_real() const {
    for (const auto& v : values)
        if (!v.is_rational()) return false;
    return true;
}

DirichletChar trivial_character() {
    DirichletChar chi;
    chi.modulus = 1;
    chi.order = 1;
    chi.principal = true;
    chi.values = {CycQ(1)};
    chi.spec = "trivial";
    return chi;
}

std::vector<DirichletChar> enumerate_characters(int d) {
    if (d < 1) throw std::invalid_argument("enumerate_characters: d must be >= 1");
    if (d == 1) return {trivial_character()};

    auto factors = unit_group_factors(d);
    long M = 1;  // group exponent
    for (const auto& f : factors) M = std::lcm(M, f.order);

    // Discrete log of every unit in generator coordinates, by enumeration.
    size_t r = factors.size();
    std::vector<long> exps(r, 0);
    std::vector<std::vector<long>> unit_dlog(static_cast<size_t>(d));  // empty = non-unit
    bool done = factors.empty();
    if (done) {
        unit_dlog[1 % d] = {};
        // group trivial (d = 2): lone unit 1
    }
    while (!done) {
        long u = 1;
        for (size_t i = 0; i < r; ++i) u = u * mod_pow(factors[i].gen, exps[i], d) % d;
        unit_dlog[static_cast<size_t>(u)] = exps;
        size_t i = r;
        while (i > 0) {
            --i;
            if (++exps[i] < factors[i].order) break;
            exps[i] = 0;
            if (i == 0) done = true;
        }
    }

    std::vector<DirichletChar> out;
    std::vector<long> k(r, 0);
    while (true) {
        DirichletChar chi;
        chi.modulus = d;
        chi.principal = std::all_of(k.begin(), k.end(), [](long v) { return v == 0; });
        // chi(g_i) = zeta_{n_i}^{k_i}; order = lcm of n_i / gcd(n_i, k_i).
        long m = 1;
        for (size_t i = 0; i < r; ++i) m = std::lcm(m, factors[i].order / gcd_l(factors[i].order, k[i]));
        chi.order = static_cast<int>(m);
        chi.values.assign(static_cast<size_t>(d), CycQ(0));
        for (long u = 0; u < d; ++u) {
            if (gcd_l(u, d) != 1) continue;
            const auto& e = unit_dlog[static_cast<size_t>(u)];
            long a = 0;  // exponent of zeta_M
            for (size_t i = 0; i < r; ++i) a = (a + e[i] * k[i] % M * (M / factors[i].order)) % M;
            // zeta_M^a lies in Q(zeta_m): a is a multiple of M/m.
            chi.values[static_cast<size_t>(u)] = CycQ::zeta_pow(chi.order, a / (M / m));
        }
        chi.spec = "mod:" + std::to_string(d) + ":" + std::to_string(out.size());
        out.push_back(std::move(chi));
        size_t i = r;
        bool carry = true;
        while (i > 0 && carry) {
            --i;
            carry = (++k[i] == factors[i].order);
            if (carry) k[i] = 0;
        }
        if (carry) break;
        if (r == 0) break;
    }
    return out;
}

int kronecker_symbol(long a, long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    // factor out 2s from n
    int k2 = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++k2;
    }
    if (k2 > 0) {
        if (a % 2 == 0) return 0;
        long am8 = ((a % 8) + 8) % 8;
        int k2sym = (am8 == 1 || am8 == 7) ? 1 : -1;  // (a/2) via a mod 8
        if (k2 % 2 == 1) sign *= k2sym;
    }
    a %= n;
    if (a < 0) a += n;
    // now Jacobi symbol (a/n), n odd positive
    int result = sign;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool is_fundamental_discriminant(long D) {
    if (D == 1) return false;
    auto squarefree = [](long n) {
        for (long p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) return false;
        return true;
    };
    long m = D < 0 ? -D : D;
    long r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(m);
    if (r == 0) {
        long q = D / 4;
        long qr = ((q % 4) + 4) % 4;
        return (qr == 2 || qr == 3) && squarefree(q < 0 ? -q : q);
    }
    return false;
}

DirichletChar kronecker_character(long D) {
    if (!is_fundamental_discriminant(D))
        throw std::invalid_argument("kronecker_character: " + std::to_string(D) +
                                    " is not a fundamental discriminant");
    long d = D < 0 ? -D : D;
    DirichletChar chi;
    chi.modulus = static_cast<int>(d);
    chi.order = 2;
    chi.principal = false;
    chi.values.assign(static_cast<size_t>(d), CycQ(0));
    bool all_one = true;
    for (long j = 0; j < d; ++j) {
        int v = kronecker_symbol(D, j);
        chi.values[static_cast<size_t>(j)] = CycQ(v);
        if (v == -1) all_one = false;
    }
    if (all_one) chi.order = 1;
    chi.spec = "kronecker:" + std::to_string(D);
    return chi;
}

int conductor(const DirichletChar& chi) {
    int d = chi.modulus;
    for (int f = 1; f <= d; ++f) {
        if (d % f != 0) continue;
        bool factors_through = true;
        for (long a = 1; a < d && factors_through; ++a) {
            if (a % f == 1 % f && gcd_l(a, d) == 1 && !(chi(a) == CycQ(1)))
                factors_through = false;
        }
        if (factors_through) return f;
    }
    return d;
}

DirichletChar parse_character(const std::string& spec) {
    if (spec == "trivial") return trivial_character();
    auto starts = [&](const std::string& p) { return spec.rfind(p, 0) == 0; };
    try {
        if (starts("kronecker:")) return kronecker_character(std::stol(spec.substr(10)));
        if (starts("mod:")) {
            auto rest = spec.substr(4);
            auto colon = rest.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("missing index");
            int d = std::stoi(rest.substr(0, colon));
            size_t idx = static_cast<size_t>(std::stoul(rest.substr(colon + 1)));
            auto chars = enumerate_characters(d);
            if (idx >= chars.size())
                throw std::invalid_argument("character index out of range for modulus " +
                                            std::to_string(d));
            return chars[idx];
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_character: bad character spec: " + spec);
    }
    throw std::invalid_argument("parse_character: bad character spec: " + spec);
}

}  // namespace apostol
