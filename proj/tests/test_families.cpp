#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "seqmerit/autocorr.hpp"
#include "seqmerit/errors.hpp"
#include "seqmerit/families.hpp"
#include "seqmerit/merit.hpp"
#include "seqmerit/designs.hpp"
#include "seqmerit/quadrature.hpp"

using namespace seqmerit;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("all-ones and alternating generators")
{
    CHECK(all_ones(3).signs() == std::vector<int>{1, 1, 1});
    CHECK(alternating(4).signs() == std::vector<int>{1, -1, 1, -1});
    CHECK(alternating(1).signs() == std::vector<int>{1});
    CHECK_THROWS_AS(all_ones(0), DomainError);
    CHECK_THROWS_AS(alternating(0), DomainError);
}

TEST_CASE("barker catalog holds exactly the seven known lengths")
{
    CHECK(barker_lengths() == std::vector<int>{2, 3, 4, 5, 7, 11, 13});
    CHECK(barker(2).signs() == std::vector<int>{1, 1});
    CHECK(barker(3).signs() == std::vector<int>{1, 1, -1});
    CHECK(barker(4).signs() == std::vector<int>{1, 1, 1, -1});
    CHECK(barker(5).signs() == std::vector<int>{1, 1, 1, -1, 1});
    CHECK(barker(7).signs() == std::vector<int>{1, 1, 1, -1, -1, 1, -1});
    CHECK(barker(11).signs() == std::vector<int>{1, 1, 1, -1, -1, -1, 1, -1, -1, 1, -1});
    CHECK(barker(13).signs() == std::vector<int>{1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1});
    CHECK_THROWS_AS(barker(6), DomainError);
    CHECK_THROWS_AS(barker(14), DomainError);
    CHECK_THROWS_AS(barker(1), DomainError);
}

TEST_CASE("every catalog entry has unit-bounded sidelobes with the parity pattern")
{
    for (int n : barker_lengths()) {
        const auto s = barker(n);
        const auto rho = aperiodic_autocorrelation(s);
        CHECK(max_sidelobe(s) <= 1.0 + kTol);
        for (int t = 1; t < n; ++t) {
            const double m = std::abs(rho[static_cast<std::size_t>(t)]);
            // |rho(t)| is 0 when n-t is even and 1 when n-t is odd.
            if ((n - t) % 2 == 0) {
                CHECK(m == doctest::Approx(0.0));
            } else {
                CHECK(m == doctest::Approx(1.0));
            }
        }
    }
}

TEST_CASE("legendre sequences: construction and small cases")
{
    // p = 5: squares mod 5 are {1, 4}.
    CHECK(legendre(5).signs() == std::vector<int>{1, 1, -1, -1, 1});
    // p = 7: squares mod 7 are {1, 2, 4}.
    CHECK(legendre(7).signs() == std::vector<int>{1, 1, 1, -1, 1, -1, -1});
    CHECK_THROWS_AS(legendre(4), DomainError);
    CHECK_THROWS_AS(legendre(2), DomainError);
    CHECK_THROWS_AS(legendre(1), DomainError);
    CHECK_THROWS_AS(legendre(9), DomainError);
}

TEST_CASE("legendre periodic autocorrelation depends on p mod 4")
{
    // p = 3 (mod 4): two-level with constant off-peak value -1.
    for (int p : {7, 11, 19, 23}) {
        const auto check = two_level_gamma(legendre(p));
        REQUIRE(check.two_level);
        CHECK(check.gamma == -1);
    }
    // p = 1 (mod 4): not two-level; for p = 5 the off-peak values differ.
    const auto theta = periodic_autocorrelation(legendre(5));
    CHECK(theta[1].real() == doctest::Approx(1.0));
    CHECK(theta[2].real() == doctest::Approx(-3.0));
    CHECK_FALSE(two_level_gamma(legendre(5)).two_level);
}

TEST_CASE("legendre aperiodic sidelobes stay below 3 sqrt(p) log p")
{
    for (int p = 3; p <= 199; ++p) {
        if (!is_odd_prime(p)) {
            continue;
        }
        const auto s = legendre(p);
        const double bound = 3.0 * std::sqrt(static_cast<double>(p)) *
                             std::log(static_cast<double>(p));
        CHECK(max_sidelobe(s) <= bound);
    }
}

TEST_CASE("chirp sequences use exact roots of unity")
{
    const auto c2 = chirp(2);
    CHECK(c2.length() == 2);
    CHECK(c2.entries()[0] == std::complex<double>(1.0, 0.0));
    CHECK(std::abs(c2.entries()[1] - std::complex<double>(-1.0, 0.0)) < kTol);

    const auto c16 = chirp(16);
    for (const auto& v : c16.entries()) {
        CHECK(std::abs(std::abs(v) - 1.0) < kTol);
    }
    // Quadratic phase flattens the spectrum: the integral of |f|^4 stays
    // within 25% of the perfectly flat value n^2.
    CHECK(exact_l4_integral(c16) / 256.0 == doctest::Approx(1.0).epsilon(0.25));

    CHECK_THROWS_AS(chirp(0), DomainError);
}

TEST_CASE("chirp sidelobe energy ratio trends to zero")
{
    double prev = 1e300;
    for (int n : {8, 16, 32, 64, 128}) {
        const auto s = chirp(n);
        const double ratio = sidelobe_energy(s) / (static_cast<double>(n) * n);
        CHECK(ratio < prev);
        prev = ratio;
    }
    CHECK(prev <= 0.25);
}

TEST_CASE("odd-length quadratic-phase sequences are perfect")
{
    const auto t3 = turyn_perfect(3);
    REQUIRE(t3.length() == 3);
    // Exponents k(k+1)/2 mod 3 for k = 0,1,2 are 0, 1, 0.
    const std::complex<double> xi = std::polar(1.0, 2.0 * M_PI / 3.0);
    CHECK(std::abs(t3.entries()[0] - std::complex<double>(1.0, 0.0)) < kTol);
    CHECK(std::abs(t3.entries()[1] - xi) < kTol);
    CHECK(std::abs(t3.entries()[2] - std::complex<double>(1.0, 0.0)) < kTol);

    for (int n : {3, 5, 7, 9, 15, 25, 49}) {
        CHECK(is_perfect(turyn_perfect(n)));
    }
    CHECK_THROWS_AS(turyn_perfect(4), DomainError);
    CHECK_THROWS_AS(turyn_perfect(1), DomainError);
}

TEST_CASE("family dispatch by name")
{
    const auto names = family_names();
    CHECK(std::find(names.begin(), names.end(), "barker") != names.end());
    CHECK(std::find(names.begin(), names.end(), "legendre") != names.end());

    CHECK(make_family({"all-ones", 4}).signs() == all_ones(4).signs());
    CHECK(make_family({"alternating", 5}).signs() == alternating(5).signs());
    CHECK(make_family({"barker", 13}).signs() == barker(13).signs());
    CHECK(make_family({"legendre", 7}).signs() == legendre(7).signs());
    CHECK(make_family({"chirp", 5}).entries() == chirp(5).entries());
    CHECK(make_family({"turyn-perfect", 5}).entries() == turyn_perfect(5).entries());
    CHECK_THROWS_AS(make_family({"nonesuch", 4}), DomainError);
}

TEST_CASE("prime detection helper")
{
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(199));
    CHECK_FALSE(is_odd_prime(2));
    CHECK_FALSE(is_odd_prime(1));
    CHECK_FALSE(is_odd_prime(9));
    CHECK_FALSE(is_odd_prime(91)); // 7 * 13
}
