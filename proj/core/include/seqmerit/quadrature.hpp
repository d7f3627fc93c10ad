#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqmerit/sequence.hpp"

namespace seqmerit {

enum class NodeGenerator {
    GoldenRatio,
    Equispaced,
    Explicit,
};

std::string generator_name(NodeGenerator g);

// Exact star discrepancy of a nonempty point set in [0,1): after sorting
// ascending, D*_N = max_i max(i/N - x_(i), x_(i) - (i-1)/N).
double star_discrepancy(const std::vector<double>& points);

// Exact two-sided (extreme) discrepancy, taken over all subintervals [a,b)
// rather than only anchored ones: D_N = max_i (i/N - x_(i)) +
// max_i (x_(i) - (i-1)/N). Always within [D*_N, 2 D*_N].
double extreme_discrepancy(const std::vector<double>& points);

// Minimum over distinct pairs of the circular distance ||x_i - x_j||
// (distance to the nearest integer). A single node has no pair; the value 1
// is returned by convention so 1/delta terms stay finite.
double min_separation(const std::vector<double>& points);

// Finite point set in [0,1) with its discrepancy and separation precomputed.
class NodeSet {
public:
    // frac(m * (1+sqrt(5))/2) for m = 1..count.
    static NodeSet golden_ratio(int count);
    // j/count for j = 0..count-1.
    static NodeSet equispaced(int count);
    // Arbitrary distinct points in [0,1).
    static NodeSet explicit_points(std::vector<double> points);
    // frac(m * alpha) for m = 1..count; carries the explicit tag since only
    // the golden ratio has a named generator.
    static NodeSet kronecker(double alpha, int count);

    const std::vector<double>& points() const { return points_; }
    int size() const { return static_cast<int>(points_.size()); }
    double star_discrepancy() const { return star_discrepancy_; }
    double extreme_discrepancy() const { return extreme_discrepancy_; }
    double min_separation() const { return min_separation_; }
    NodeGenerator generator() const { return generator_; }

private:
    NodeSet(std::vector<double> points, NodeGenerator generator);

    std::vector<double> points_;
    NodeGenerator generator_;
    double star_discrepancy_;
    double extreme_discrepancy_;
    double min_separation_;
};

// integral_0^1 |s(e^{i2pix})|^4 dx, computed exactly as the average over
// M = 4n-3 equispaced points: |s|^4 on the circle is a trigonometric
// polynomial with frequencies in [-(2n-2), 2n-2], and an M-point equispaced
// average is exact once M >= 2n-1 rules out aliasing onto frequency zero;
// M = 4n-3 leaves margin.
double exact_l4_integral(const Sequence& s);

enum class QuadratureMethod { Exact, Qmc };

std::string method_name(QuadratureMethod m);

struct QuadratureResult {
    double value = 0.0;
    QuadratureMethod method = QuadratureMethod::Qmc;
    int node_count = 0;
    // Koksma-Hlawka product V * D*_N for the qmc method, 0 for exact.
    double error_bound = 0.0;
    // The crude variation bound (peak of |f|^2)^2 <= (rho(0)+2 sum|rho(t)|)^2
    // used in error_bound, and a tighter grid-sampled sup|d/dx |f|^4| bound
    // reported alongside for diagnostics only.
    double variation_bound = 0.0;
    std::optional<double> sampled_variation;
    double discrepancy = 0.0;
};

// exact_l4_integral wrapped with its provenance for reporting.
QuadratureResult exact_l4_result(const Sequence& s);

// (1/N) sum_m |fourier_eval(s, x_m)|^4 with the Koksma-Hlawka error bound.
QuadratureResult qmc_l4_integral(const Sequence& s, const NodeSet& nodes);

// sum_r |S(x_r)|^2 <= (n + 1/delta) * sum_k |a_k|^2 with S = fourier_eval.
// holds is a theorem; false signals an implementation bug.
struct SieveReport {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

SieveReport large_sieve_check(const Sequence& a, const NodeSet& nodes);

// |sum_m e^{i2pi x_m}| <= 2 N D_N with D_N the two-sided discrepancy; holds
// is a theorem up to roundoff. The two-sided form is essential: with the
// anchored (star) discrepancy the same constant fails, e.g. the pair
// {0.49, 0.51} has |sum| = 2 cos(0.02 pi) > 2 N D*_N = 1.96. Proof sketch
// for the two-sided form: integrate e^{i2pi x} against the empirical-minus-
// uniform measure by parts, recentre the remainder (the exponential has mean
// zero, so sup|R - c| <= D_N/2 for the midrange c), and average over the
// phase of the sum (int |cos| = 2/pi), giving 2pi * (2/pi) * D_N/2 = 2 D_N
// per node.
struct WeylReport {
    double sum_magnitude = 0.0;
    double bound = 0.0;
    bool holds = false;
};

WeylReport weyl_sum_check(const NodeSet& nodes);

// Mean and max of |spectrum_at(s, x) - rho(0)| over the nodes: how far the
// squared spectrum strays from its average value.
struct SpectrumDeviationStats {
    double mean_deviation = 0.0;
    double max_deviation = 0.0;
};

SpectrumDeviationStats spectrum_deviation_stats(const Sequence& s, const NodeSet& nodes);

} // namespace seqmerit
