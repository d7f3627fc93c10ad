#include "seqmerit/families.hpp"

#include <complex>
#include <map>
#include <numbers>
#include <sstream>

#include "seqmerit/errors.hpp"

namespace seqmerit {

namespace {

const std::map<int, const char*> kBarkerCatalog = {
    {2, "++"},
    {3, "++-"},
    {4, "+++-"},
    {5, "+++-+"},
    {7, "+++--+-"},
    {11, "+++---+--+-"},
    {13, "+++++--++-+-+"},
};

// Entries e^{i pi k(k+1)/n} = zeta^{k(k+1)/2} with zeta the principal n-th
// root of unity; the exponent is reduced mod n before evaluating so the
// phase stays accurate for large k.
Sequence quadratic_phase(int n)
{
    std::vector<std::complex<double>> entries(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const long long exponent = (static_cast<long long>(k) * (k + 1) / 2) % n;
        entries[static_cast<std::size_t>(k)] =
            std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(exponent) / n);
    }
    return Sequence::roots_of_unity(std::move(entries), n);
}

void require_positive_length(int n)
{
    if (n < 1) {
        throw DomainError("sequence length must be positive");
    }
}

} // namespace

bool is_odd_prime(int p)
{
    if (p < 3 || p % 2 == 0) {
        return false;
    }
    for (int d = 3; static_cast<long long>(d) * d <= p; d += 2) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

Sequence all_ones(int n)
{
    require_positive_length(n);
    return Sequence::binary(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Sequence alternating(int n)
{
    require_positive_length(n);
    std::vector<int> signs(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        signs[static_cast<std::size_t>(k)] = k % 2 == 0 ? 1 : -1;
    }
    return Sequence::binary(std::move(signs));
}

Sequence barker(int n)
{
    const auto found = kBarkerCatalog.find(n);
    if (found == kBarkerCatalog.end()) {
        std::ostringstream message;
        message << "no Barker sequence of length " << n
                << " is known (known lengths: 2, 3, 4, 5, 7, 11, 13; none beyond 13 is "
                   "believed to exist)";
        throw DomainError(message.str());
    }
    return parse_pm_string(found->second);
}

std::vector<int> barker_lengths()
{
    std::vector<int> lengths;
    lengths.reserve(kBarkerCatalog.size());
    for (const auto& [n, text] : kBarkerCatalog) {
        lengths.push_back(n);
    }
    return lengths;
}

Sequence legendre(int p)
{
    if (!is_odd_prime(p)) {
        throw DomainError("legendre sequence requires an odd prime modulus");
    }
    std::vector<char> residue(static_cast<std::size_t>(p), 0);
    for (int i = 1; i < p; ++i) {
        residue[static_cast<std::size_t>((static_cast<long long>(i) * i) % p)] = 1;
    }
    std::vector<int> signs(static_cast<std::size_t>(p));
    signs[0] = 1;
    for (int k = 1; k < p; ++k) {
        signs[static_cast<std::size_t>(k)] = residue[static_cast<std::size_t>(k)] ? 1 : -1;
    }
    return Sequence::binary(std::move(signs));
}

Sequence chirp(int n)
{
    require_positive_length(n);
    return quadratic_phase(n);
}

Sequence turyn_perfect(int n)
{
    if (n < 3 || n % 2 == 0) {
        throw DomainError("the quadratic-phase construction is perfect only for odd length >= 3");
    }
    return quadratic_phase(n);
}

std::vector<std::string> family_names()
{
    return {"all-ones", "alternating", "barker", "legendre", "chirp", "turyn-perfect"};
}

Sequence make_family(const FamilyDescriptor& descriptor)
{
    if (descriptor.name == "all-ones") {
        return all_ones(descriptor.parameter);
    }
    if (descriptor.name == "alternating") {
        return alternating(descriptor.parameter);
    }
    if (descriptor.name == "barker") {
        return barker(descriptor.parameter);
    }
    if (descriptor.name == "legendre") {
        return legendre(descriptor.parameter);
    }
    if (descriptor.name == "chirp") {
        return chirp(descriptor.parameter);
    }
    if (descriptor.name == "turyn-perfect") {
        return turyn_perfect(descriptor.parameter);
    }
    throw DomainError("unknown family '" + descriptor.name
                      + "' (expected all-ones, alternating, barker, legendre, chirp, or "
                        "turyn-perfect)");
}

} // namespace seqmerit
