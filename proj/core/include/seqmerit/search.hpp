#pragma once

#include <optional>
#include <vector>

#include "seqmerit/merit.hpp"
#include "seqmerit/sequence.hpp"

namespace seqmerit {

enum class SearchMode { Enumerate, Count, Records };

struct SearchSpec {
    int n = 0;
    double c = 0.0; // sidelobe bound; binary sidelobes are integers, so floor(c) is what binds
    SearchMode mode = SearchMode::Enumerate;
    bool symmetry_reduction = false;
    bool allow_large = false; // override the n > 34 feasibility guard
    int workers = 0;          // 0 = hardware concurrency
};

// Exhaustive enumeration of the binary sequences of length n whose aperiodic
// sidelobes all satisfy |rho(t)| <= c, by depth-first prefix extension. A
// partial assignment is cut as soon as some lag's settled part cannot be
// pulled back within the bound by its unassigned terms:
// |partial rho(t)| - (#unassigned terms of lag t) > c.
struct SearchResult {
    // Survivors sorted lexicographically; canonical orbit representatives
    // only when symmetry_reduction is on.
    std::vector<Sequence> sequences;
    // Total survivor count; with symmetry_reduction this is the sum of orbit
    // sizes over the representatives and equals the unreduced count.
    unsigned long long count = 0;
};

SearchResult enumerate_bounded(const SearchSpec& spec);

// Unpruned reference scan of all 2^n sequences, full autocorrelation each
// time. Ground truth for enumerate_bounded; refuses n > 24.
std::vector<Sequence> brute_force_oracle(int n, double c);

// Best merit factor per length with a canonical witness, by exhaustive scan
// over B_n with exact rational comparison.
struct MeritRecord {
    int n = 0;
    Rational best_merit;
    Sequence witness; // canonical form
    long long sidelobe_energy = 0;
};

std::vector<MeritRecord> merit_records(int n_max, bool allow_large = false);

// Survivor count at (n, c) plus verification that every survivor's merit
// factor clears the lower bound n^2 / (2(n-1)c^2).
struct BoundCheckReport {
    int n = 0;
    double c = 0.0;
    unsigned long long survivor_count = 0;
    double merit_bound = 0.0;
    std::optional<Rational> min_merit; // over survivors; empty when none
    bool all_hold = true;
    unsigned long long violations = 0;
};

BoundCheckReport bound_check_report(const SearchSpec& spec);

} // namespace seqmerit
