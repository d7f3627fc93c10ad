#include <doctest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "seqmerit/errors.hpp"
#include "seqmerit/families.hpp"
#include "seqmerit/merit.hpp"

using namespace seqmerit;

namespace {

Sequence random_binary(std::mt19937& rng, int n)
{
    std::vector<int> signs(static_cast<std::size_t>(n));
    std::bernoulli_distribution coin;
    for (auto& s : signs) {
        s = coin(rng) ? 1 : -1;
    }
    return Sequence::binary(std::move(signs));
}

} // namespace

TEST_CASE("rational rendering")
{
    CHECK(to_string(Rational(169, 12)) == "169/12");
    CHECK(to_string(Rational(4, 1)) == "4");
    CHECK(to_string(Rational(507, 3900)) == "13/100"); // boost reduces
}

TEST_CASE("exact merit factors of small sequences")
{
    CHECK(merit_factor_discrete_exact(all_ones(2)) == Rational(2));
    CHECK(merit_factor_discrete_exact(all_ones(4)) == Rational(4, 7));
    CHECK(merit_factor_discrete_exact(Sequence::binary({1, 1, 1, -1})) == Rational(4));
    CHECK(merit_factor_discrete_exact(barker(13)) == Rational(169, 12));
    CHECK_THROWS_AS(merit_factor_discrete_exact(chirp(8)), DomainError);
}

TEST_CASE("sidelobe energy and L4 identities")
{
    CHECK(sidelobe_energy_exact(Sequence::binary({1, 1, 1, -1})) == 4);
    CHECK(l4_norm_fourth_exact(Sequence::binary({1, 1})) == 6);
    CHECK(l4_norm_fourth_exact(barker(13)) == 181);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = random_binary(rng, 2 + static_cast<int>(rng() % 30));
        const long long n = s.length();
        CHECK(l4_norm_fourth_exact(s) == n * n + sidelobe_energy_exact(s));
        CHECK(l4_norm_fourth(s) == doctest::Approx(static_cast<double>(l4_norm_fourth_exact(s))));
    }
}

TEST_CASE("all-ones L4 fourth power has the closed form n(2n^2+1)/3")
{
    for (int n = 1; n <= 32; ++n) {
        const long long nn = n;
        CHECK(l4_norm_fourth_exact(all_ones(n)) == nn * (2 * nn * nn + 1) / 3);
    }
}

TEST_CASE("discrete merit factor agrees with the exact rational")
{
    std::mt19937 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = random_binary(rng, 2 + static_cast<int>(rng() % 30));
        CHECK(merit_factor_discrete(s)
              == doctest::Approx(boost::rational_cast<double>(merit_factor_discrete_exact(s))));
    }
}

TEST_CASE("minimal merit factor closed form")
{
    CHECK(minimal_merit_factor(4) == Rational(4, 7));
    CHECK(minimal_merit_factor(2) == Rational(2));
    CHECK(minimal_merit_factor(13) == Rational(507, 3900));
    CHECK_THROWS_AS(minimal_merit_factor(1), DomainError);
    for (int n = 2; n <= 32; ++n) {
        CHECK(merit_factor_discrete_exact(all_ones(n)) == minimal_merit_factor(n));
        CHECK(merit_factor_discrete_exact(alternating(n)) == minimal_merit_factor(n));
    }
}

TEST_CASE("unit-sidelobe predictions")
{
    CHECK(barker_l4_prediction(4) == 20);
    CHECK(barker_l4_prediction(13) == 181);
    CHECK(barker_l4_prediction(2) == 6);
    CHECK(barker_merit_prediction(4) == Rational(4));
    CHECK(barker_merit_prediction(13) == Rational(169, 12));
    CHECK(barker_merit_prediction(5) == Rational(25, 4));
    CHECK_THROWS_AS(barker_merit_prediction(1), DomainError);
}

TEST_CASE("merit lower bound for bounded sidelobes")
{
    const auto b13 = merit_lower_bound(13, 1.0);
    CHECK(b13.bound == doctest::Approx(169.0 / 24.0));
    CHECK(b13.weak_bound == doctest::Approx(6.5));
    CHECK(boost::rational_cast<double>(merit_factor_discrete_exact(barker(13))) >= b13.bound);
    const auto b2 = merit_lower_bound(2, 1.0);
    CHECK(b2.bound == doctest::Approx(2.0));
    CHECK_THROWS_AS(merit_lower_bound(1, 1.0), DomainError);
    CHECK_THROWS_AS(merit_lower_bound(4, 0.0), DomainError);
}

TEST_CASE("analytic route reproduces the discrete merit factor")
{
    CHECK(merit_factor_analytic(barker(13), AnalyticRoute::exact())
          == doctest::Approx(169.0 / 12.0).epsilon(1e-9));
    CHECK(merit_factor_analytic(all_ones(2), AnalyticRoute::exact()) == doctest::Approx(2.0));
    std::mt19937 rng(47);
    const auto s = random_binary(rng, 32);
    const double discrete = merit_factor_discrete(s);
    CHECK(merit_factor_analytic(s, AnalyticRoute::exact())
          == doctest::Approx(discrete).epsilon(1e-9));
    CHECK(merit_factor_analytic(s, AnalyticRoute::qmc(100000))
          == doctest::Approx(discrete).epsilon(1e-2));
}

TEST_CASE("length-1 sequences have infinite merit")
{
    const auto single = Sequence::binary({1});
    CHECK(merit_is_infinite(single));
    CHECK(std::isinf(merit_factor_discrete(single)));
    CHECK_THROWS_AS(merit_factor_discrete_exact(single), DomainError);
}

TEST_CASE("merit report serializes consistently")
{
    const auto report = make_merit_report(barker(13), 1000);
    CHECK(report.n == 13);
    CHECK(report.merit_exact.has_value());
    CHECK(*report.merit_exact == Rational(169, 12));
    CHECK(report.l4_exact.has_value());
    CHECK(*report.l4_exact == 181);
    CHECK(report.deviation_exact_route < 1e-9);
    CHECK(report.merit_analytic_qmc.has_value());

    const auto j = nlohmann::json::parse(to_json_text(report));
    CHECK(j["n"] == 13);
    CHECK(j["merit_exact"] == "169/12");
    CHECK(j["l4_exact"] == 181);
    CHECK(j["infinite_merit"] == false);
    CHECK(j["qmc_nodes"] == 1000);

    const auto infinite = nlohmann::json::parse(to_json_text(make_merit_report(all_ones(1))));
    CHECK(infinite["infinite_merit"] == true);
    CHECK(infinite["merit_factor"].is_null());
}

TEST_CASE("merit CSV row shape")
{
    CHECK(merit_csv_header() == "n,merit_factor,merit_exact,l4_fourth,sidelobe_energy,"
                                "merit_analytic_exact");
    const auto row = merit_csv_row(make_merit_report(Sequence::binary({1, 1})));
    CHECK(row.rfind("2,2,2,6,2,", 0) == 0);
}
