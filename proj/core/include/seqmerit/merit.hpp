#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <string>

#include "seqmerit/sequence.hpp"

namespace seqmerit {

// Merit quantities of +1/-1 sequences are integers and ratios of integers;
// they are kept exact so equality checks need no tolerances.
using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

// 2 * sum_{t>=1} |rho(t)|^2.
double sidelobe_energy(const Sequence& s);
long long sidelobe_energy_exact(const Sequence& s);

// rho(0)^2 + 2 * sum_{t>=1} |rho(t)|^2.
double l4_norm_fourth(const Sequence& s);
long long l4_norm_fourth_exact(const Sequence& s);

// F = rho(0)^2 / (2 sum_{t>=1} |rho(t)|^2). Returns +infinity when the
// sidelobe energy vanishes (possible only off the +1/-1 alphabet); callers
// that need the distinction use merit_is_infinite or MeritReport.
double merit_factor_discrete(const Sequence& s);
Rational merit_factor_discrete_exact(const Sequence& s);
bool merit_is_infinite(const Sequence& s);

// The same merit factor through the L4 integral:
// F = rho(0)^2 / (integral |s|^4 - rho(0)^2).
struct AnalyticRoute {
    static AnalyticRoute exact() { return {true, 0}; }
    static AnalyticRoute qmc(int nodes) { return {false, nodes}; }

    bool use_exact;
    int qmc_nodes; // golden-ratio node count when use_exact is false
};
double merit_factor_analytic(const Sequence& s, AnalyticRoute route);

// Smallest merit factor over the +1/-1 sequences of length n,
// 3n^2 / (2n^3 - 3n^2 + n), attained by the all-ones and alternating
// sequences.
Rational minimal_merit_factor(int n);

// L4 fourth power of a unit-sidelobe (Barker) sequence: n^2 + n for even n,
// n^2 + n - 1 for odd n.
long long barker_l4_prediction(int n);

// Merit factor of a unit-sidelobe (Barker) sequence: n for even n,
// n^2/(n-1) for odd n.
Rational barker_merit_prediction(int n);

// Lower bound on the merit factor of any length-n sequence whose aperiodic
// sidelobes are bounded by c: n^2 / (2(n-1)c^2), with the weaker tail
// n / (2c^2) reported alongside.
struct MeritLowerBound {
    double bound;
    double weak_bound;
};
MeritLowerBound merit_lower_bound(int n, double c);

// Merit factor and L4 norm with every computed route and their pairwise
// deviations. Serializes to JSON with sorted keys.
struct MeritReport {
    int n = 0;
    double merit_factor = 0.0; // discrete-route value; +inf when flagged
    bool infinite_merit = false;
    double l4_fourth = 0.0;
    double sidelobe_energy = 0.0;
    std::optional<Rational> merit_exact; // +1/-1 alphabet only
    std::optional<long long> l4_exact;

    double merit_analytic_exact = 0.0;
    std::optional<double> merit_analytic_qmc;
    std::optional<int> qmc_nodes;

    // |discrete - analytic| / max(|discrete|, 1), per analytic route.
    double deviation_exact_route = 0.0;
    std::optional<double> deviation_qmc_route;
};

MeritReport make_merit_report(const Sequence& s, std::optional<int> qmc_nodes = std::nullopt);
std::string to_json_text(const MeritReport& report);
// One row per sequence: n, merit_factor, l4_fourth, sidelobe_energy, routes.
std::string merit_csv_header();
std::string merit_csv_row(const MeritReport& report);

} // namespace seqmerit
