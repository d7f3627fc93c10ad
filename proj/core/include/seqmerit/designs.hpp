#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqmerit/sequence.hpp"

namespace seqmerit {

// Cyclic (v, k, lambda) difference set: a k-subset of Z_v whose nonzero
// differences a-b (mod v) each occur exactly lambda times. Verified sets
// always satisfy the counting identity k(k-1) = lambda(v-1).
struct DifferenceSet {
    int v = 0;
    std::vector<int> members; // sorted residues in [0, v)
    int k = 0;
    long long lambda = 0;
};

struct DifferenceSetCheck {
    bool verified = false;
    std::optional<DifferenceSet> set;   // present when verified
    std::string rejection_reason;       // names two residues with unequal counts
};

// Tallies every nonzero difference of the candidate set; accepts iff the
// tally is constant.
DifferenceSetCheck verify_difference_set(const std::vector<int>& members, int v);

// Binary length-v sequence with +1 exactly on the members. The complement
// convention differs only by global negation, which leaves the periodic
// autocorrelation unchanged.
Sequence characteristic_sequence(const DifferenceSet& ds);

// Constant off-peak periodic autocorrelation. For the characteristic
// sequence of a (v, k, lambda) difference set the level is v - 4(k - lambda).
struct TwoLevelCheck {
    bool two_level = false;
    long long gamma = 0;          // meaningful when two_level
    std::string rejection_reason; // names two lags with different values
};

TwoLevelCheck two_level_gamma(const Sequence& s);

enum class MenonSign { Plus, Minus };

struct DesignParams {
    long long v = 0;
    long long k = 0;
    long long lambda = 0;

    bool operator==(const DesignParams&) const = default;
};

// Menon (Hadamard) difference-set parameters (4u^2, 2u^2 +- u, u^2 +- u);
// a set with these parameters is equivalent to a circulant Hadamard matrix
// of order 4u^2.
DesignParams menon_params(long long u, MenonSign sign);

// theta(0) != 0 and every off-peak |theta(t)| <= 1e-9 * theta(0).
bool is_perfect(const Sequence& s);

// A circulant +-1 matrix H with H H^T = n I exists exactly when its
// generating row is a perfect binary sequence.
bool circulant_hadamard_check(const Sequence& row);

// All aperiodic sidelobes in {-1, 0, +1}? Whether a two-level periodic
// structure forces this is an open claim; this predicate only tests it.
bool has_unit_aperiodic_sidelobes(const Sequence& s);

// The +1-position set of the length-n Barker sequence (or its complement,
// or a cyclic shift of either) verified as a difference set with the
// expected parameters: (7,4,2), (11,5,2), (13,9,6).
DifferenceSet barker_difference_set_link(int n);

// Exhaustive scan of all 2^n binary rows for perfect ones.
struct HadamardScan {
    int n = 0;
    long long rows_scanned = 0;
    std::vector<Sequence> perfect_rows; // sorted lexicographically
};

HadamardScan hadamard_scan(int n, bool allow_large = false);

} // namespace seqmerit
