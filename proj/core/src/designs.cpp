#include "seqmerit/designs.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "seqmerit/autocorr.hpp"
#include "seqmerit/errors.hpp"
#include "seqmerit/families.hpp"

namespace seqmerit {

namespace {

std::vector<int> sorted_unique_members(const std::vector<int>& members, int v)
{
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= v) {
            throw DomainError("difference-set members must be residues in [0, v)");
        }
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw DomainError("difference-set members must be distinct");
        }
    }
    return sorted;
}

std::vector<int> cyclic_shift(const std::vector<int>& members, int v, int shift)
{
    std::vector<int> shifted;
    shifted.reserve(members.size());
    for (int m : members) {
        shifted.push_back((m + shift) % v);
    }
    std::sort(shifted.begin(), shifted.end());
    return shifted;
}

std::vector<int> complement_set(const std::vector<int>& members, int v)
{
    std::set<int> present(members.begin(), members.end());
    std::vector<int> complement;
    for (int r = 0; r < v; ++r) {
        if (!present.contains(r)) {
            complement.push_back(r);
        }
    }
    return complement;
}

} // namespace

DifferenceSetCheck verify_difference_set(const std::vector<int>& members, int v)
{
    if (v < 2) {
        throw DomainError("difference-set modulus must be at least 2");
    }
    const auto sorted = sorted_unique_members(members, v);
    std::vector<long long> counts(static_cast<std::size_t>(v), 0);
    for (int a : sorted) {
        for (int b : sorted) {
            if (a != b) {
                ++counts[static_cast<std::size_t>(((a - b) % v + v) % v)];
            }
        }
    }
    for (int r = 2; r < v; ++r) {
        if (counts[static_cast<std::size_t>(r)] != counts[1]) {
            DifferenceSetCheck check;
            std::ostringstream reason;
            reason << "difference counts are not constant: residue 1 occurs " << counts[1]
                   << " times but residue " << r << " occurs "
                   << counts[static_cast<std::size_t>(r)] << " times";
            check.rejection_reason = reason.str();
            return check;
        }
    }
    DifferenceSetCheck check;
    check.verified = true;
    check.set = DifferenceSet{v, sorted, static_cast<int>(sorted.size()), counts[1]};
    return check;
}

Sequence characteristic_sequence(const DifferenceSet& ds)
{
    std::vector<int> signs(static_cast<std::size_t>(ds.v), -1);
    for (int m : ds.members) {
        signs.at(static_cast<std::size_t>(m)) = 1;
    }
    return Sequence::binary(std::move(signs));
}

TwoLevelCheck two_level_gamma(const Sequence& s)
{
    if (!s.is_binary()) {
        throw DomainError("two-level test requires a +1/-1 sequence");
    }
    if (s.length() < 2) {
        throw DomainError("two-level test requires length >= 2");
    }
    const auto signs = s.signs();
    const auto theta = periodic_autocorrelation(std::span<const int>(signs));
    for (std::size_t t = 2; t < theta.size(); ++t) {
        if (theta[t] != theta[1]) {
            TwoLevelCheck check;
            std::ostringstream reason;
            reason << "periodic autocorrelation is not two-level: lag 1 gives " << theta[1]
                   << " but lag " << t << " gives " << theta[t];
            check.rejection_reason = reason.str();
            return check;
        }
    }
    return TwoLevelCheck{true, theta[1], {}};
}

DesignParams menon_params(long long u, MenonSign sign)
{
    if (u < 1) {
        throw DomainError("Menon parameter u must be positive");
    }
    const long long shift = sign == MenonSign::Plus ? u : -u;
    return DesignParams{4 * u * u, 2 * u * u + shift, u * u + shift};
}

bool is_perfect(const Sequence& s)
{
    const auto theta = periodic_autocorrelation(s);
    const double peak = theta[0].real();
    if (peak == 0.0) {
        return false;
    }
    for (std::size_t t = 1; t < theta.size(); ++t) {
        if (std::abs(theta[t]) > 1e-9 * peak) {
            return false;
        }
    }
    return true;
}

bool circulant_hadamard_check(const Sequence& row)
{
    if (!row.is_binary()) {
        throw DomainError("circulant Hadamard rows must be +1/-1 sequences");
    }
    return is_perfect(row);
}

bool has_unit_aperiodic_sidelobes(const Sequence& s)
{
    if (!s.is_binary()) {
        throw DomainError("unit-sidelobe test requires a +1/-1 sequence");
    }
    const auto signs = s.signs();
    const auto rho = aperiodic_autocorrelation(std::span<const int>(signs));
    for (std::size_t t = 1; t < rho.size(); ++t) {
        if (rho[t] < -1 || rho[t] > 1) {
            return false;
        }
    }
    return true;
}

DifferenceSet barker_difference_set_link(int n)
{
    if (n != 7 && n != 11 && n != 13) {
        throw DomainError("difference-set link is defined for Barker lengths 7, 11, 13");
    }
    const DesignParams expected = n == 7    ? DesignParams{7, 4, 2}
                                  : n == 11 ? DesignParams{11, 5, 2}
                                            : DesignParams{13, 9, 6};
    const auto row = barker(n);
    const auto signs = row.signs();
    std::vector<int> plus_positions;
    for (std::size_t k = 0; k < signs.size(); ++k) {
        if (signs[k] == 1) {
            plus_positions.push_back(static_cast<int>(k));
        }
    }
    const auto candidates = {plus_positions, complement_set(plus_positions, n)};
    for (const auto& base : candidates) {
        for (int shift = 0; shift < n; ++shift) {
            const auto check = verify_difference_set(cyclic_shift(base, n, shift), n);
            if (check.verified && check.set->v == expected.v && check.set->k == expected.k
                && check.set->lambda == expected.lambda) {
                return *check.set;
            }
        }
    }
    throw ConsistencyError("no orientation of the Barker +1-position set forms a difference "
                           "set with the expected parameters");
}

HadamardScan hadamard_scan(int n, bool allow_large)
{
    if (n < 1) {
        throw DomainError("scan length must be positive");
    }
    if (n > 20 && !allow_large) {
        throw DomainError("refusing to scan 2^n rows for n > 20; pass allow_large to override");
    }
    HadamardScan scan;
    scan.n = n;
    scan.rows_scanned = 1LL << n;
    std::vector<int> signs(static_cast<std::size_t>(n));
    for (long long mask = 0; mask < (1LL << n); ++mask) {
        for (int k = 0; k < n; ++k) {
            signs[static_cast<std::size_t>(k)] = (mask >> k) & 1 ? 1 : -1;
        }
        const auto theta = periodic_autocorrelation(std::span<const int>(signs));
        bool perfect = true;
        for (std::size_t t = 1; t < theta.size(); ++t) {
            if (theta[t] != 0) {
                perfect = false;
                break;
            }
        }
        if (perfect) {
            scan.perfect_rows.push_back(Sequence::binary(signs));
        }
    }
    std::sort(scan.perfect_rows.begin(), scan.perfect_rows.end(),
              [](const Sequence& a, const Sequence& b) { return lex_less(a, b); });
    return scan;
}

} // namespace seqmerit
