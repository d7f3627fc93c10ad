#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "seqmerit/errors.hpp"

namespace seqmerit {

// Absolute tolerance for membership in the m-th roots of unity: |e^m - 1|.
inline constexpr double kAlphabetTol = 1e-9;

enum class Alphabet {
    PlusMinusOne, // entries exactly +1 or -1
    RootsOfUnity, // entries are m-th roots of unity within kAlphabetTol
    Complex,      // unconstrained complex entries
};

std::string alphabet_name(Alphabet a, int root_order = 0);

// An immutable finite sequence s_0, ..., s_{n-1} of complex numbers with an
// alphabet tag. Entries are 0-indexed throughout the library.
class Sequence {
public:
    static Sequence binary(std::vector<int> signs);
    static Sequence roots_of_unity(std::vector<std::complex<double>> entries, int order);
    static Sequence complex_values(std::vector<std::complex<double>> entries);

    int length() const { return static_cast<int>(entries_.size()); }
    Alphabet alphabet() const { return alphabet_; }
    // m for the roots-of-unity alphabet, 0 otherwise.
    int root_order() const { return root_order_; }
    const std::vector<std::complex<double>>& entries() const { return entries_; }
    std::complex<double> operator[](int k) const { return entries_[static_cast<size_t>(k)]; }

    bool is_binary() const { return alphabet_ == Alphabet::PlusMinusOne; }
    // The +1/-1 pattern of a binary sequence. Throws DomainError otherwise.
    std::vector<int> signs() const;

    bool operator==(const Sequence& other) const = default;

private:
    Sequence(std::vector<std::complex<double>> entries, Alphabet alphabet, int root_order);

    std::vector<std::complex<double>> entries_;
    Alphabet alphabet_;
    int root_order_;
};

// One of the 8 sidelobe-preserving transforms: entry order reversal,
// entrywise multiplication by (-1)^k, and global negation. Application
// order is fixed as reverse, then alternate, then negate, so that orbit
// enumeration is deterministic.
struct SymmetryElement {
    bool reverse = false;
    bool alternate = false;
    bool negate = false;

    bool operator==(const SymmetryElement&) const = default;
};

// All 8 elements, indexed by bits (reverse=1, alternate=2, negate=4).
const std::array<SymmetryElement, 8>& symmetry_group();

Sequence apply_symmetry(const Sequence& s, SymmetryElement g);

// Lexicographic ordering of binary sequences with -1 < +1; shorter compares
// less on a tie prefix.
bool lex_less(const Sequence& a, const Sequence& b);

// The lexicographic minimum over the 8-element symmetry orbit. Binary only.
Sequence canonical_form(const Sequence& s);

// Distinct images of s under the symmetry group, sorted lexicographically.
// Orbit sizes divide 8 (e.g. skew-symmetric sequences collapse to 4).
std::vector<Sequence> symmetry_orbit(const Sequence& s);

// '+' -> +1, '-' -> -1. Throws ParseError naming the offending index.
Sequence parse_pm_string(std::string_view text);
std::string render_pm_string(const Sequence& s);

} // namespace seqmerit
