#include "seqmerit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "seqmerit/autocorr.hpp"
#include "seqmerit/errors.hpp"

namespace seqmerit {

namespace {

constexpr double kHoldsSlack = 1e-9; // roundoff guard for theorem checks

void require_unit_interval(const std::vector<double>& points)
{
    if (points.empty()) {
        throw DomainError("node set must be nonempty");
    }
    for (double p : points) {
        if (!(p >= 0.0 && p < 1.0)) {
            throw DomainError("node points must lie in [0, 1)");
        }
    }
}

double fractional_part(double x)
{
    double f = x - std::floor(x);
    if (f >= 1.0) { // guard against floor roundoff at integer boundaries
        f = 0.0;
    }
    return f;
}

std::vector<double> kronecker_points(double alpha, int count)
{
    if (count < 1) {
        throw DomainError("node count must be positive");
    }
    if (!std::isfinite(alpha)) {
        throw DomainError("kronecker step must be finite");
    }
    std::vector<double> points(static_cast<std::size_t>(count));
    double value = 0.0;
    for (int m = 1; m <= count; ++m) {
        value = fractional_part(value + alpha); // incremental frac avoids m*alpha blowup
        points[static_cast<std::size_t>(m - 1)] = value;
    }
    return points;
}

// Crude variation bound for g = |f|^4: sup|f|^2 <= rho(0) + 2 sum|rho(t)|.
double crude_variation_bound(const std::vector<std::complex<double>>& rho)
{
    double spectrum_peak = rho[0].real();
    for (std::size_t t = 1; t < rho.size(); ++t) {
        spectrum_peak += 2.0 * std::abs(rho[t]);
    }
    return spectrum_peak * spectrum_peak;
}

// sup over a fine grid of |d/dx |f(x)|^4| = |2 |f|^2 (|f|^2)'|, with
// (|f|^2)'(x) = sum_{t>=1} -4 pi t Im(conj(rho(t)) e^{i2pi t x}).
double sampled_variation_bound(const Sequence& s, const std::vector<std::complex<double>>& rho)
{
    const int grid = std::max<int>(1024, 16 * static_cast<int>(s.length()));
    double sup = 0.0;
    for (int j = 0; j < grid; ++j) {
        const double x = static_cast<double>(j) / grid;
        double power = rho[0].real();
        double slope = 0.0;
        for (std::size_t t = 1; t < rho.size(); ++t) {
            const auto phase = std::polar(1.0, 2.0 * std::numbers::pi * t * x);
            const auto term = std::conj(rho[t]) * phase;
            power += 2.0 * term.real();
            slope += -4.0 * std::numbers::pi * static_cast<double>(t) * term.imag();
        }
        sup = std::max(sup, std::abs(2.0 * power * slope));
    }
    return sup;
}

} // namespace

std::string generator_name(NodeGenerator g)
{
    switch (g) {
    case NodeGenerator::GoldenRatio: return "golden-ratio";
    case NodeGenerator::Equispaced: return "equispaced";
    case NodeGenerator::Explicit: return "explicit";
    }
    throw DomainError("unknown node generator");
}

std::string method_name(QuadratureMethod m)
{
    return m == QuadratureMethod::Exact ? "exact" : "qmc";
}

double star_discrepancy(const std::vector<double>& points)
{
    require_unit_interval(points);
    std::vector<double> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double rank = static_cast<double>(i + 1);
        worst = std::max(worst, rank / n - sorted[i]);
        worst = std::max(worst, sorted[i] - (rank - 1.0) / n);
    }
    return worst;
}

double extreme_discrepancy(const std::vector<double>& points)
{
    require_unit_interval(points);
    std::vector<double> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());
    // The empirical-minus-uniform remainder R is sawtooth-shaped; over all
    // intervals [a,b) the worst deviation is its oscillation, attained as the
    // sum of the one-sided maxima.
    double above = 0.0;
    double below = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double rank = static_cast<double>(i + 1);
        above = std::max(above, rank / n - sorted[i]);
        below = std::max(below, sorted[i] - (rank - 1.0) / n);
    }
    return above + below;
}

double min_separation(const std::vector<double>& points)
{
    require_unit_interval(points);
    if (points.size() == 1) {
        return 1.0;
    }
    std::vector<double> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    double gap = 1.0 - sorted.back() + sorted.front(); // wrap-around pair
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        gap = std::min(gap, sorted[i] - sorted[i - 1]);
    }
    return std::min(gap, 0.5); // circular distance never exceeds 1/2
}

NodeSet::NodeSet(std::vector<double> points, NodeGenerator generator)
    : points_(std::move(points))
    , generator_(generator)
    , star_discrepancy_(seqmerit::star_discrepancy(points_))
    , extreme_discrepancy_(seqmerit::extreme_discrepancy(points_))
    , min_separation_(seqmerit::min_separation(points_))
{
    if (points_.size() > 1 && min_separation_ <= 0.0) {
        throw DomainError("node points must be distinct");
    }
}

NodeSet NodeSet::golden_ratio(int count)
{
    return NodeSet(kronecker_points((1.0 + std::sqrt(5.0)) / 2.0, count),
                   NodeGenerator::GoldenRatio);
}

NodeSet NodeSet::equispaced(int count)
{
    if (count < 1) {
        throw DomainError("node count must be positive");
    }
    std::vector<double> points(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        points[static_cast<std::size_t>(j)] = static_cast<double>(j) / count;
    }
    return NodeSet(std::move(points), NodeGenerator::Equispaced);
}

NodeSet NodeSet::explicit_points(std::vector<double> points)
{
    return NodeSet(std::move(points), NodeGenerator::Explicit);
}

NodeSet NodeSet::kronecker(double alpha, int count)
{
    return NodeSet(kronecker_points(alpha, count), NodeGenerator::Explicit);
}

double exact_l4_integral(const Sequence& s)
{
    const int m = 4 * static_cast<int>(s.length()) - 3;
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
        const double x = static_cast<double>(j) / m;
        const double power = std::norm(fourier_eval(s, x));
        sum += power * power;
    }
    return sum / m;
}

QuadratureResult exact_l4_result(const Sequence& s)
{
    QuadratureResult result;
    result.value = exact_l4_integral(s);
    result.method = QuadratureMethod::Exact;
    result.node_count = 4 * static_cast<int>(s.length()) - 3;
    result.error_bound = 0.0;
    result.variation_bound = 0.0;
    result.discrepancy = 0.0;
    return result;
}

QuadratureResult qmc_l4_integral(const Sequence& s, const NodeSet& nodes)
{
    const auto rho = aperiodic_autocorrelation(s);
    double sum = 0.0;
    for (double x : nodes.points()) {
        const double power = std::norm(fourier_eval(s, x));
        sum += power * power;
    }
    QuadratureResult result;
    result.value = sum / nodes.size();
    result.method = QuadratureMethod::Qmc;
    result.node_count = nodes.size();
    result.discrepancy = nodes.star_discrepancy();
    result.variation_bound = crude_variation_bound(rho);
    result.sampled_variation = sampled_variation_bound(s, rho);
    result.error_bound = result.variation_bound * result.discrepancy;
    return result;
}

SieveReport large_sieve_check(const Sequence& a, const NodeSet& nodes)
{
    if (!(nodes.min_separation() > 0.0)) {
        throw DomainError("large sieve requires distinct nodes");
    }
    double lhs = 0.0;
    for (double x : nodes.points()) {
        lhs += std::norm(fourier_eval(a, x));
    }
    double coefficient_energy = 0.0;
    for (const auto& entry : a.entries()) {
        coefficient_energy += std::norm(entry);
    }
    const double rhs =
        (static_cast<double>(a.length()) + 1.0 / nodes.min_separation()) * coefficient_energy;
    return SieveReport{lhs, rhs, lhs <= rhs * (1.0 + kHoldsSlack)};
}

WeylReport weyl_sum_check(const NodeSet& nodes)
{
    std::complex<double> sum = 0.0;
    for (double x : nodes.points()) {
        sum += std::polar(1.0, 2.0 * std::numbers::pi * x);
    }
    const double magnitude = std::abs(sum);
    const double bound = 2.0 * nodes.size() * nodes.extreme_discrepancy();
    return WeylReport{magnitude, bound, magnitude <= bound * (1.0 + kHoldsSlack) + kHoldsSlack};
}

SpectrumDeviationStats spectrum_deviation_stats(const Sequence& s, const NodeSet& nodes)
{
    const auto rho = aperiodic_autocorrelation(s);
    const double mean_value = rho[0].real();
    SpectrumDeviationStats stats;
    for (double x : nodes.points()) {
        const double deviation = std::abs(spectrum_at(s, x) - mean_value);
        stats.mean_deviation += deviation;
        stats.max_deviation = std::max(stats.max_deviation, deviation);
    }
    stats.mean_deviation /= nodes.size();
    return stats;
}

} // namespace seqmerit
