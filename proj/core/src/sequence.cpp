#include "seqmerit/sequence.hpp"

#include <algorithm>
#include <cmath>

namespace seqmerit {

std::string alphabet_name(Alphabet a, int root_order) {
    switch (a) {
    case Alphabet::PlusMinusOne:
        return "pm1";
    case Alphabet::RootsOfUnity:
        return "roots:" + std::to_string(root_order);
    case Alphabet::Complex:
        return "complex";
    }
    return "complex";
}

Sequence::Sequence(std::vector<std::complex<double>> entries, Alphabet alphabet, int root_order)
    : entries_(std::move(entries)), alphabet_(alphabet), root_order_(root_order) {}

Sequence Sequence::binary(std::vector<int> signs) {
    if (signs.empty()) {
        throw DomainError("binary sequence must have length >= 1");
    }
    std::vector<std::complex<double>> entries;
    entries.reserve(signs.size());
    for (size_t k = 0; k < signs.size(); ++k) {
        if (signs[k] != 1 && signs[k] != -1) {
            throw DomainError("binary entry at index " + std::to_string(k) +
                              " is not +1 or -1");
        }
        entries.emplace_back(static_cast<double>(signs[k]), 0.0);
    }
    return Sequence(std::move(entries), Alphabet::PlusMinusOne, 0);
}

Sequence Sequence::roots_of_unity(std::vector<std::complex<double>> entries, int order) {
    if (entries.empty()) {
        throw DomainError("sequence must have length >= 1");
    }
    if (order < 1) {
        throw DomainError("root-of-unity order must be >= 1");
    }
    for (size_t k = 0; k < entries.size(); ++k) {
        std::complex<double> power{1.0, 0.0};
        for (int j = 0; j < order; ++j) {
            power *= entries[k];
        }
        if (std::abs(power - std::complex<double>{1.0, 0.0}) > kAlphabetTol) {
            throw DomainError("entry at index " + std::to_string(k) + " is not a " +
                              std::to_string(order) + "-th root of unity");
        }
    }
    return Sequence(std::move(entries), Alphabet::RootsOfUnity, order);
}

Sequence Sequence::complex_values(std::vector<std::complex<double>> entries) {
    if (entries.empty()) {
        throw DomainError("sequence must have length >= 1");
    }
    return Sequence(std::move(entries), Alphabet::Complex, 0);
}

std::vector<int> Sequence::signs() const {
    if (!is_binary()) {
        throw DomainError("operation requires the +1/-1 alphabet, got " +
                          alphabet_name(alphabet_, root_order_));
    }
    std::vector<int> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) {
        out.push_back(e.real() > 0.0 ? 1 : -1);
    }
    return out;
}

const std::array<SymmetryElement, 8>& symmetry_group() {
    static const std::array<SymmetryElement, 8> group = [] {
        std::array<SymmetryElement, 8> g{};
        for (int i = 0; i < 8; ++i) {
            g[static_cast<size_t>(i)] = SymmetryElement{
                .reverse = (i & 1) != 0,
                .alternate = (i & 2) != 0,
                .negate = (i & 4) != 0,
            };
        }
        return g;
    }();
    return group;
}

Sequence apply_symmetry(const Sequence& s, SymmetryElement g) {
    const int n = s.length();
    std::vector<std::complex<double>> out(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        std::complex<double> v = g.reverse ? s[n - 1 - k] : s[k];
        if (g.alternate && (k & 1)) {
            v = -v;
        }
        if (g.negate) {
            v = -v;
        }
        out[static_cast<size_t>(k)] = v;
    }
    switch (s.alphabet()) {
    case Alphabet::PlusMinusOne: {
        std::vector<int> signs(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
            signs[static_cast<size_t>(k)] = out[static_cast<size_t>(k)].real() > 0.0 ? 1 : -1;
        }
        return Sequence::binary(std::move(signs));
    }
    case Alphabet::RootsOfUnity: {
        // Negation of an m-th root of unity stays in the 2m-th roots.
        const int order = s.root_order();
        const int new_order = (g.negate || g.alternate) && (order % 2 != 0) ? 2 * order : order;
        return Sequence::roots_of_unity(std::move(out), new_order);
    }
    case Alphabet::Complex:
        break;
    }
    return Sequence::complex_values(std::move(out));
}

bool lex_less(const Sequence& a, const Sequence& b) {
    const auto sa = a.signs();
    const auto sb = b.signs();
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

Sequence canonical_form(const Sequence& s) {
    if (!s.is_binary()) {
        throw DomainError("canonical_form requires the +1/-1 alphabet, got " +
                          alphabet_name(s.alphabet(), s.root_order()));
    }
    const auto& group = symmetry_group();
    Sequence best = apply_symmetry(s, group[0]);
    for (size_t i = 1; i < group.size(); ++i) {
        Sequence candidate = apply_symmetry(s, group[i]);
        if (lex_less(candidate, best)) {
            best = std::move(candidate);
        }
    }
    return best;
}

std::vector<Sequence> symmetry_orbit(const Sequence& s) {
    std::vector<Sequence> orbit;
    for (const auto& g : symmetry_group()) {
        Sequence image = apply_symmetry(s, g);
        if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) {
            orbit.push_back(std::move(image));
        }
    }
    if (s.is_binary()) {
        std::sort(orbit.begin(), orbit.end(), lex_less);
    }
    return orbit;
}

Sequence parse_pm_string(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty sequence string");
    }
    std::vector<int> signs;
    signs.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case '+':
            signs.push_back(1);
            break;
        case '-':
            signs.push_back(-1);
            break;
        default:
            throw ParseError("illegal character '" + std::string(1, text[i]) +
                             "' at index " + std::to_string(i) +
                             " (expected '+' or '-')");
        }
    }
    return Sequence::binary(std::move(signs));
}

std::string render_pm_string(const Sequence& s) {
    const auto signs = s.signs();
    std::string out;
    out.reserve(signs.size());
    for (int v : signs) {
        out.push_back(v > 0 ? '+' : '-');
    }
    return out;
}

} // namespace seqmerit
