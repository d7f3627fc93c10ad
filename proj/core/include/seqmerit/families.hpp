#pragma once

#include <string>
#include <vector>

#include "seqmerit/sequence.hpp"

namespace seqmerit {

Sequence all_ones(int n);

// 1, -1, 1, -1, ...
Sequence alternating(int n);

// Catalog representative with every aperiodic sidelobe of magnitude <= 1,
// s_0 first. Known lengths: 2, 3, 4, 5, 7, 11, 13; no longer length is known
// and none is believed to exist.
Sequence barker(int n);

std::vector<int> barker_lengths();

// Trial-division primality test restricted to odd primes (2 is excluded on
// purpose: the sequence constructions below need an odd modulus).
bool is_odd_prime(int p);

// Binary character sequence mod an odd prime p: s_k = +1 when k is a nonzero
// quadratic residue, -1 when a non-residue, and s_0 = +1 by convention (so
// the +1 support for p = 3 mod 4 is a (p, (p+1)/2, (p+1)/4) difference set).
Sequence legendre(int p);

// Quadratic-phase sequence with entries e^{i pi k(k+1)/n}, k = 0..n-1. Since
// k(k+1) is even the entries are n-th roots of unity for every n.
Sequence chirp(int n);

// The same quadratic-phase construction restricted to odd n >= 3, where the
// periodic autocorrelation vanishes at every nonzero lag.
Sequence turyn_perfect(int n);

// Name/parameter pair for CLI-driven generation.
struct FamilyDescriptor {
    std::string name; // all-ones | alternating | barker | legendre | chirp | turyn-perfect
    int parameter = 0;
};

std::vector<std::string> family_names();
Sequence make_family(const FamilyDescriptor& descriptor);

} // namespace seqmerit
