#pragma once

#include "apostol/cyclotomic.hpp"

#include <string>
#include <vector>

namespace apostol {

/// Dirichlet character mod d stored as its full value table (values at
/// 0..d-1, exact cyclotomic numbers in Q(zeta_order)).
struct DirichletChar {
    int modulus = 1;
    int order = 1;            // least m with chi^m principal
    bool principal = true;
    std::vector<CycQ> values; // length modulus
    std::string spec;         // CLI spec string this character answers to

    const CycQ& operator()(long j) const {
        long r = j % modulus;
        if (r < 0) r += modulus;
        return values[static_cast<size_t>(r)];
    }
    bool is_real() const;
    /// Value as a rational; requires a real character.
    Rat real_value(long j) const { return (*this)(j).to_rat(); }
};

/// The trivial character mod 1 (chi(0) = 1, conductor 1).
DirichletChar trivial_character();

/// All phi(d) characters mod d, ordered lexicographically in the
/// generator-exponent tuples of the CRT decomposition of (Z/d)^x.
std::vector<DirichletChar> enumerate_characters(int d);

/// Kronecker symbol (D/.) as a character mod |D|; D must be a fundamental
/// discriminant.
DirichletChar kronecker_character(long D);

/// Kronecker symbol (a/n), full generality.
int kronecker_symbol(long a, long n);

bool is_fundamental_discriminant(long D);

/// Smallest f | modulus such that chi factors through a character mod f.
int conductor(const DirichletChar& chi);

/// Parses "trivial", "kronecker:D" or "mod:d:index".
DirichletChar parse_character(const std::string& spec);

}  // namespace apostol
