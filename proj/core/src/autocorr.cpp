#include "seqmerit/autocorr.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

namespace seqmerit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// FFTW's planner mutates global state; planning is serialized so the public
// functions stay safe for concurrent use.
std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

std::vector<std::complex<double>> aperiodic_autocorrelation(const Sequence& s) {
    const int n = s.length();
    std::vector<std::complex<double>> rho(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
        std::complex<double> acc{0.0, 0.0};
        for (int k = 0; k + t < n; ++k) {
            acc += s[k] * std::conj(s[k + t]);
        }
        rho[static_cast<size_t>(t)] = acc;
    }
    return rho;
}

std::vector<std::complex<double>> periodic_autocorrelation(const Sequence& s) {
    const int n = s.length();
    std::vector<std::complex<double>> theta(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
        std::complex<double> acc{0.0, 0.0};
        for (int k = 0; k < n; ++k) {
            acc += s[k] * std::conj(s[(k + t) % n]);
        }
        theta[static_cast<size_t>(t)] = acc;
    }
    return theta;
}

std::vector<long long> aperiodic_autocorrelation(std::span<const int> signs) {
    const int n = static_cast<int>(signs.size());
    std::vector<long long> rho(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
        long long acc = 0;
        for (int k = 0; k + t < n; ++k) {
            acc += static_cast<long long>(signs[static_cast<size_t>(k)]) *
                   signs[static_cast<size_t>(k + t)];
        }
        rho[static_cast<size_t>(t)] = acc;
    }
    return rho;
}

std::vector<long long> periodic_autocorrelation(std::span<const int> signs) {
    const int n = static_cast<int>(signs.size());
    std::vector<long long> theta(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
        long long acc = 0;
        for (int k = 0; k < n; ++k) {
            acc += static_cast<long long>(signs[static_cast<size_t>(k)]) *
                   signs[static_cast<size_t>((k + t) % n)];
        }
        theta[static_cast<size_t>(t)] = acc;
    }
    return theta;
}

std::vector<std::complex<double>> aperiodic_autocorrelation_fft(const Sequence& s) {
    const int n = s.length();
    const int padded = 2 * n;

    std::vector<std::complex<double>> in(static_cast<size_t>(padded), {0.0, 0.0});
    std::vector<std::complex<double>> spectrum(static_cast<size_t>(padded));
    std::vector<std::complex<double>> circular(static_cast<size_t>(padded));
    for (int k = 0; k < n; ++k) {
        in[static_cast<size_t>(k)] = s[k];
    }

    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_plan forward = fftw_plan_dft_1d(
            padded, reinterpret_cast<fftw_complex*>(in.data()),
            reinterpret_cast<fftw_complex*>(spectrum.data()), FFTW_FORWARD, FFTW_ESTIMATE);
        fftw_execute(forward);
        fftw_destroy_plan(forward);

        for (auto& v : spectrum) {
            v = std::complex<double>{std::norm(v), 0.0};
        }

        fftw_plan backward = fftw_plan_dft_1d(
            padded, reinterpret_cast<fftw_complex*>(spectrum.data()),
            reinterpret_cast<fftw_complex*>(circular.data()), FFTW_BACKWARD, FFTW_ESTIMATE);
        fftw_execute(backward);
        fftw_destroy_plan(backward);
    }

    // circular[t]/padded = sum_k s_{k+t} conj(s_k); rho(t) is its conjugate.
    std::vector<std::complex<double>> rho(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
        rho[static_cast<size_t>(t)] =
            std::conj(circular[static_cast<size_t>(t)]) / static_cast<double>(padded);
    }
    return rho;
}

std::complex<double> fourier_eval(const Sequence& s, double x) {
    const int n = s.length();
    const std::complex<double> z = std::polar(1.0, kTwoPi * x);
    // Horner evaluation of s_0 + s_1 z + ... + s_{n-1} z^{n-1}.
    std::complex<double> acc = s[n - 1];
    for (int k = n - 2; k >= 0; --k) {
        acc = acc * z + s[k];
    }
    return acc;
}

double spectrum_at(const Sequence& s, double x) {
    const double direct = std::norm(fourier_eval(s, x));

    const auto rho = aperiodic_autocorrelation(s);
    const std::complex<double> z = std::polar(1.0, kTwoPi * x);
    double expanded = rho[0].real();
    std::complex<double> zt{1.0, 0.0};
    for (size_t t = 1; t < rho.size(); ++t) {
        zt *= z;
        expanded += 2.0 * (std::conj(rho[t]) * zt).real();
    }

    const double tol = 1e-9 * rho[0].real();
    if (std::abs(direct - expanded) > tol) {
        std::ostringstream msg;
        msg << "spectrum routes disagree at x=" << x << ": direct=" << direct
            << " expansion=" << expanded << " (tol " << tol << ")";
        throw ConsistencyError(msg.str());
    }
    return direct;
}

double max_sidelobe(const Sequence& s) {
    if (s.length() < 2) {
        throw DomainError("max_sidelobe is undefined for length-1 sequences");
    }
    const auto rho = aperiodic_autocorrelation(s);
    double best = 0.0;
    for (size_t t = 1; t < rho.size(); ++t) {
        best = std::max(best, std::abs(rho[t]));
    }
    return best;
}

long long max_sidelobe(std::span<const int> signs) {
    if (signs.size() < 2) {
        throw DomainError("max_sidelobe is undefined for length-1 sequences");
    }
    const auto rho = aperiodic_autocorrelation(signs);
    long long best = 0;
    for (size_t t = 1; t < rho.size(); ++t) {
        best = std::max(best, std::llabs(rho[t]));
    }
    return best;
}

AutocorrelationProfile AutocorrelationProfile::of(const Sequence& s) {
    AutocorrelationProfile profile;
    profile.aperiodic = aperiodic_autocorrelation(s);
    profile.periodic = periodic_autocorrelation(s);

    const int n = s.length();
    const double peak = profile.aperiodic[0].real();
    const double tol = 1e-9 * std::max(1.0, peak);

    if (std::abs(profile.aperiodic[0].imag()) > tol || peak < 0.0 ||
        std::abs(profile.aperiodic[0] - profile.periodic[0]) > tol) {
        throw ConsistencyError("autocorrelation peak identity rho(0) = theta(0) failed");
    }
    for (int t = 1; t < n; ++t) {
        const auto expected = profile.aperiodic[static_cast<size_t>(t)] +
                              std::conj(profile.aperiodic[static_cast<size_t>(n - t)]);
        if (std::abs(profile.periodic[static_cast<size_t>(t)] - expected) > tol) {
            throw ConsistencyError("identity theta(t) = rho(t) + conj(rho(n-t)) failed at t=" +
                                   std::to_string(t));
        }
    }

    profile.peak = peak;
    profile.max_sidelobe = 0.0;
    for (int t = 1; t < n; ++t) {
        profile.max_sidelobe =
            std::max(profile.max_sidelobe, std::abs(profile.aperiodic[static_cast<size_t>(t)]));
    }
    return profile;
}

std::string AutocorrelationProfile::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "t,re_rho,im_rho,re_theta,im_theta\n";
    for (size_t t = 0; t < aperiodic.size(); ++t) {
        out << t << ',' << aperiodic[t].real() << ',' << aperiodic[t].imag() << ','
            << periodic[t].real() << ',' << periodic[t].imag() << '\n';
    }
    return out.str();
}

} // namespace seqmerit
