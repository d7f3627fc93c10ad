#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "seqmerit/sequence.hpp"

namespace seqmerit {

// rho(t) = sum_{k=0}^{n-t-1} s_k * conj(s_{k+t}), t = 0..n-1.
std::vector<std::complex<double>> aperiodic_autocorrelation(const Sequence& s);

// theta(t) = sum_{k=0}^{n-1} s_k * conj(s_{k+t mod n}), t = 0..n-1.
std::vector<std::complex<double>> periodic_autocorrelation(const Sequence& s);

// Exact integer paths for +1/-1 patterns; used wherever merit quantities
// must be computed in integer/rational arithmetic.
std::vector<long long> aperiodic_autocorrelation(std::span<const int> signs);
std::vector<long long> periodic_autocorrelation(std::span<const int> signs);

// O(n log n) aperiodic path via a zero-padded FFT (Wiener-Khinchin).
// Agrees with the direct path to 1e-9; the direct path is the reference.
std::vector<std::complex<double>> aperiodic_autocorrelation_fft(const Sequence& s);

// s(z) = sum_k s_k z^k at z = e^{i 2 pi x}.
std::complex<double> fourier_eval(const Sequence& s, double x);

// |s(z)|^2 at z = e^{i 2 pi x}. Evaluated both directly and through the
// autocorrelation expansion
//     |s(z)|^2 = rho(0) + sum_{t>=1} 2 Re(conj(rho(t)) z^t);
// the two must agree within 1e-9 * rho(0) or a ConsistencyError is thrown.
// Returns the direct value.
double spectrum_at(const Sequence& s, double x);

// max_{t != 0 mod n} |rho(t)|. Throws DomainError for n = 1.
double max_sidelobe(const Sequence& s);
long long max_sidelobe(std::span<const int> signs);

// Aperiodic and periodic autocorrelations materialized together, with the
// defining identities rho(0) = theta(0) and
// theta(t) = rho(t) + conj(rho(n-t)) checked at construction.
struct AutocorrelationProfile {
    std::vector<std::complex<double>> aperiodic;
    std::vector<std::complex<double>> periodic;
    double peak = 0.0;         // rho(0)
    double max_sidelobe = 0.0; // max_{t != 0} |rho(t)|, 0 when n = 1

    static AutocorrelationProfile of(const Sequence& s);

    // Columns: t, re(rho), im(rho), re(theta), im(theta).
    std::string to_csv() const;
};

} // namespace seqmerit
