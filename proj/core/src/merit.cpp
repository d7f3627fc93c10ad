#include "seqmerit/merit.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "seqmerit/autocorr.hpp"
#include "seqmerit/errors.hpp"
#include "seqmerit/quadrature.hpp"

namespace seqmerit {

namespace {

long long checked_square(long long v)
{
    return v * v;
}

} // namespace

std::string to_string(const Rational& r)
{
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) {
        out << '/' << r.denominator();
    }
    return out.str();
}

double sidelobe_energy(const Sequence& s)
{
    const auto rho = aperiodic_autocorrelation(s);
    double energy = 0.0;
    for (std::size_t t = 1; t < rho.size(); ++t) {
        energy += std::norm(rho[t]);
    }
    return 2.0 * energy;
}

long long sidelobe_energy_exact(const Sequence& s)
{
    if (!s.is_binary()) {
        throw DomainError("exact sidelobe energy requires a +1/-1 sequence");
    }
    const auto signs = s.signs();
    const auto rho = aperiodic_autocorrelation(std::span<const int>(signs));
    long long energy = 0;
    for (std::size_t t = 1; t < rho.size(); ++t) {
        energy += checked_square(rho[t]);
    }
    return 2 * energy;
}

double l4_norm_fourth(const Sequence& s)
{
    const auto rho = aperiodic_autocorrelation(s);
    double energy = 0.0;
    for (std::size_t t = 1; t < rho.size(); ++t) {
        energy += std::norm(rho[t]);
    }
    return rho[0].real() * rho[0].real() + 2.0 * energy;
}

long long l4_norm_fourth_exact(const Sequence& s)
{
    if (!s.is_binary()) {
        throw DomainError("exact L4 norm requires a +1/-1 sequence");
    }
    const auto n = static_cast<long long>(s.length());
    return n * n + sidelobe_energy_exact(s);
}

double merit_factor_discrete(const Sequence& s)
{
    const auto rho = aperiodic_autocorrelation(s);
    const double peak = rho[0].real();
    const double energy = sidelobe_energy(s);
    if (energy == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return peak * peak / energy;
}

Rational merit_factor_discrete_exact(const Sequence& s)
{
    if (!s.is_binary()) {
        throw DomainError("exact merit factor requires a +1/-1 sequence");
    }
    const auto n = static_cast<long long>(s.length());
    const long long energy = sidelobe_energy_exact(s);
    if (energy == 0) {
        throw DomainError("merit factor is infinite: all sidelobes vanish");
    }
    return Rational(n * n, energy);
}

bool merit_is_infinite(const Sequence& s)
{
    return sidelobe_energy(s) == 0.0;
}

double merit_factor_analytic(const Sequence& s, AnalyticRoute route)
{
    const auto rho = aperiodic_autocorrelation(s);
    const double peak = rho[0].real();
    const double l4 = route.use_exact
        ? exact_l4_integral(s)
        : qmc_l4_integral(s, NodeSet::golden_ratio(route.qmc_nodes)).value;
    const double denom = l4 - peak * peak;
    if (denom <= 0.0) {
        if (route.use_exact) {
            return std::numeric_limits<double>::infinity();
        }
        throw RouteError("quadrature estimate of the L4 integral does not exceed the "
                         "squared peak; use the exact analytic route");
    }
    return peak * peak / denom;
}

Rational minimal_merit_factor(int n)
{
    if (n < 2) {
        throw DomainError("minimal merit factor requires length >= 2");
    }
    const auto nn = static_cast<long long>(n);
    return Rational(3 * nn * nn, 2 * nn * nn * nn - 3 * nn * nn + nn);
}

long long barker_l4_prediction(int n)
{
    if (n < 1) {
        throw DomainError("length must be positive");
    }
    const auto nn = static_cast<long long>(n);
    return n % 2 == 0 ? nn * nn + nn : nn * nn + nn - 1;
}

Rational barker_merit_prediction(int n)
{
    if (n < 2) {
        throw DomainError("unit-sidelobe merit prediction requires length >= 2");
    }
    const auto nn = static_cast<long long>(n);
    return n % 2 == 0 ? Rational(nn) : Rational(nn * nn, nn - 1);
}

MeritLowerBound merit_lower_bound(int n, double c)
{
    if (n < 2) {
        throw DomainError("merit lower bound requires length >= 2");
    }
    if (!(c > 0.0)) {
        throw DomainError("sidelobe bound must be positive");
    }
    const double nd = n;
    return MeritLowerBound{
        nd * nd / (2.0 * (nd - 1.0) * c * c),
        nd / (2.0 * c * c),
    };
}

MeritReport make_merit_report(const Sequence& s, std::optional<int> qmc_nodes)
{
    MeritReport report;
    report.n = static_cast<int>(s.length());
    report.infinite_merit = merit_is_infinite(s);
    report.merit_factor = merit_factor_discrete(s);
    report.l4_fourth = l4_norm_fourth(s);
    report.sidelobe_energy = sidelobe_energy(s);
    if (s.is_binary()) {
        report.l4_exact = l4_norm_fourth_exact(s);
        if (!report.infinite_merit) {
            report.merit_exact = merit_factor_discrete_exact(s);
        }
    }
    report.merit_analytic_exact = merit_factor_analytic(s, AnalyticRoute::exact());
    const auto relative_deviation = [&](double other) {
        const double scale = std::isfinite(report.merit_factor)
            ? std::max(std::abs(report.merit_factor), 1.0)
            : 1.0;
        if (report.infinite_merit) {
            return std::isinf(other) ? 0.0 : std::numeric_limits<double>::infinity();
        }
        return std::abs(report.merit_factor - other) / scale;
    };
    report.deviation_exact_route = relative_deviation(report.merit_analytic_exact);
    if (qmc_nodes) {
        report.qmc_nodes = qmc_nodes;
        report.merit_analytic_qmc = merit_factor_analytic(s, AnalyticRoute::qmc(*qmc_nodes));
        report.deviation_qmc_route = relative_deviation(*report.merit_analytic_qmc);
    }
    return report;
}

std::string to_json_text(const MeritReport& report)
{
    nlohmann::json j;
    j["n"] = report.n;
    if (report.infinite_merit) {
        j["merit_factor"] = nullptr;
    } else {
        j["merit_factor"] = report.merit_factor;
    }
    j["infinite_merit"] = report.infinite_merit;
    j["l4_fourth"] = report.l4_fourth;
    j["sidelobe_energy"] = report.sidelobe_energy;
    if (report.merit_exact) {
        j["merit_exact"] = to_string(*report.merit_exact);
    }
    if (report.l4_exact) {
        j["l4_exact"] = *report.l4_exact;
    }
    j["merit_analytic_exact"] = report.merit_analytic_exact;
    j["deviation_exact_route"] = report.deviation_exact_route;
    if (report.merit_analytic_qmc) {
        j["merit_analytic_qmc"] = *report.merit_analytic_qmc;
        j["qmc_nodes"] = *report.qmc_nodes;
        j["deviation_qmc_route"] = *report.deviation_qmc_route;
    }
    return j.dump(2);
}

std::string merit_csv_header()
{
    return "n,merit_factor,merit_exact,l4_fourth,sidelobe_energy,merit_analytic_exact";
}

std::string merit_csv_row(const MeritReport& report)
{
    std::ostringstream out;
    out.precision(17);
    out << report.n << ',';
    if (report.infinite_merit) {
        out << "inf";
    } else {
        out << report.merit_factor;
    }
    out << ',';
    if (report.merit_exact) {
        out << to_string(*report.merit_exact);
    }
    out << ',' << report.l4_fourth << ',' << report.sidelobe_energy << ','
        << report.merit_analytic_exact;
    return out.str();
}

} // namespace seqmerit
