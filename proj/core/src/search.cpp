#include "seqmerit/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <set>
#include <thread>

#include "seqmerit/autocorr.hpp"
#include "seqmerit/errors.hpp"

namespace seqmerit {

namespace {

long long integral_bound(double c)
{
    if (!(c >= 0.0)) {
        throw DomainError("sidelobe bound must be nonnegative");
    }
    // Binary sidelobes are integers, so |rho(t)| <= c binds at floor(c).
    return static_cast<long long>(std::floor(c));
}

// Depth-first prefix extension over sign vectors with the settled-part prune.
// partial_[t] tracks the sum of the lag-t products whose both indices are
// assigned; once position `pos` is assigned, every lag t <= pos has exactly
// n-1-pos unassigned terms left, so the subtree dies when
// max_t |partial_[t]| > c + (n-1-pos).
class BoundedSearch {
public:
    BoundedSearch(int n, long long c)
        : n_(n)
        , c_(c)
        , signs_(static_cast<std::size_t>(n), 0)
        , partial_(static_cast<std::size_t>(n), 0)
    {
    }

    // Installs sign values for positions [0, prefix.size()); returns false
    // when the prefix itself is already cut.
    bool load_prefix(const std::vector<int>& prefix)
    {
        for (int pos = 0; pos < static_cast<int>(prefix.size()); ++pos) {
            if (!assign(pos, prefix[static_cast<std::size_t>(pos)])) {
                unwind(pos);
                return false;
            }
        }
        return true;
    }

    template <typename Collector>
    void run(int start_pos, Collector&& collect)
    {
        descend(start_pos, collect);
    }

private:
    bool assign(int pos, int value)
    {
        signs_[static_cast<std::size_t>(pos)] = value;
        long long worst = 0;
        for (int t = 1; t <= pos; ++t) {
            auto& slot = partial_[static_cast<std::size_t>(t)];
            slot += signs_[static_cast<std::size_t>(pos - t)] * value;
            worst = std::max(worst, std::llabs(slot));
        }
        return worst <= c_ + (n_ - 1 - pos);
    }

    void retract(int pos)
    {
        const int value = signs_[static_cast<std::size_t>(pos)];
        for (int t = 1; t <= pos; ++t) {
            partial_[static_cast<std::size_t>(t)] -=
                signs_[static_cast<std::size_t>(pos - t)] * value;
        }
    }

    // Rolls back positions [0, upto] after a failed prefix load; position
    // `upto` has its partial sums already applied by the failed assign.
    void unwind(int upto)
    {
        for (int pos = upto; pos >= 0; --pos) {
            retract(pos);
        }
    }

    template <typename Collector>
    void descend(int pos, Collector& collect)
    {
        if (pos == n_) {
            collect(signs_);
            return;
        }
        for (int value : {+1, -1}) {
            if (assign(pos, value)) {
                descend(pos + 1, collect);
            }
            retract(pos);
        }
    }

    int n_;
    long long c_;
    std::vector<int> signs_;
    std::vector<long long> partial_;
};

std::vector<std::vector<int>> survivor_prefixes(int n, long long c, int depth, bool fix_first)
{
    std::vector<std::vector<int>> prefixes;
    const int free_bits = fix_first ? depth - 1 : depth;
    for (long long mask = 0; mask < (1LL << free_bits); ++mask) {
        std::vector<int> prefix(static_cast<std::size_t>(depth));
        for (int pos = 0; pos < depth; ++pos) {
            if (fix_first && pos == 0) {
                prefix[0] = 1;
            } else {
                const int bit = fix_first ? pos - 1 : pos;
                prefix[static_cast<std::size_t>(pos)] = (mask >> bit) & 1 ? 1 : -1;
            }
        }
        BoundedSearch probe(n, c);
        if (probe.load_prefix(prefix)) {
            prefixes.push_back(std::move(prefix));
        }
    }
    return prefixes;
}

std::vector<std::vector<int>> collect_survivors(int n, long long c, bool fix_first, int workers)
{
    const int depth = std::min(8, n / 2);
    const auto prefixes = survivor_prefixes(n, c, depth, fix_first);

    const auto explore_prefixes = [n, c, depth](const std::vector<std::vector<int>>& batch) {
        std::vector<std::vector<int>> found;
        for (const auto& prefix : batch) {
            BoundedSearch search(n, c);
            if (!search.load_prefix(prefix)) {
                throw ConsistencyError("prefix survived probing but failed reload");
            }
            search.run(depth, [&](const std::vector<int>& signs) { found.push_back(signs); });
        }
        return found;
    };

    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
    }
    workers = std::max(1, std::min<int>(workers, static_cast<int>(prefixes.size())));
    if (workers <= 1 || prefixes.size() <= 1) {
        return explore_prefixes(prefixes);
    }

    // Deterministic split: worker w owns prefixes w, w+W, w+2W, ...; the
    // merge below re-sorts, so ownership order never shows in the output.
    std::vector<std::vector<std::vector<int>>> batches(static_cast<std::size_t>(workers));
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        batches[i % static_cast<std::size_t>(workers)].push_back(prefixes[i]);
    }
    std::vector<std::future<std::vector<std::vector<int>>>> futures;
    futures.reserve(batches.size());
    for (auto& batch : batches) {
        futures.push_back(
            std::async(std::launch::async, explore_prefixes, std::cref(batch)));
    }
    std::vector<std::vector<int>> merged;
    for (auto& future : futures) {
        auto part = future.get();
        merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
    }
    return merged;
}

void validate_spec(const SearchSpec& spec)
{
    if (spec.n < 1) {
        throw DomainError("search length must be at least 1");
    }
    if (spec.n > 34 && !spec.allow_large) {
        throw DomainError("refusing search length > 34; set allow_large "
                          "(--allow-large) to override");
    }
    integral_bound(spec.c); // validates nonnegativity
}

} // namespace

SearchResult enumerate_bounded(const SearchSpec& spec)
{
    validate_spec(spec);
    const long long c = integral_bound(spec.c);
    SearchResult result;

    if (spec.n == 1) {
        // No off-peak lags, so both length-1 sequences pass every bound.
        result.count = 2;
        if (spec.mode != SearchMode::Count) {
            if (spec.symmetry_reduction) {
                result.sequences.push_back(canonical_form(Sequence::binary({1})));
            } else {
                result.sequences.push_back(Sequence::binary({-1}));
                result.sequences.push_back(Sequence::binary({1}));
            }
        }
        return result;
    }

    if (!spec.symmetry_reduction) {
        auto survivors = collect_survivors(spec.n, c, false, spec.workers);
        std::sort(survivors.begin(), survivors.end());
        result.count = survivors.size();
        if (spec.mode != SearchMode::Count) {
            result.sequences.reserve(survivors.size());
            for (auto& signs : survivors) {
                result.sequences.push_back(Sequence::binary(std::move(signs)));
            }
        }
        return result;
    }

    // Negation is a survivor-set bijection between the s_0 = +1 and
    // s_0 = -1 halves, so searching one half sees every orbit.
    const auto half = collect_survivors(spec.n, c, true, spec.workers);
    if (spec.mode == SearchMode::Count) {
        result.count = 2 * static_cast<unsigned long long>(half.size());
        return result;
    }
    std::set<std::vector<int>> seen;
    std::vector<Sequence> canonicals;
    canonicals.reserve(half.size());
    for (const auto& signs : half) {
        auto canonical = canonical_form(Sequence::binary(signs));
        if (seen.insert(canonical.signs()).second) {
            canonicals.push_back(std::move(canonical));
        }
    }
    unsigned long long orbit_total = 0;
    for (const auto& rep : canonicals) {
        orbit_total += symmetry_orbit(rep).size();
    }
    if (orbit_total != 2 * static_cast<unsigned long long>(half.size())) {
        throw ConsistencyError("orbit sizes do not add up to the survivor count");
    }
    std::sort(canonicals.begin(), canonicals.end(),
              [](const Sequence& a, const Sequence& b) { return lex_less(a, b); });
    result.sequences = std::move(canonicals);
    result.count = orbit_total;
    return result;
}

std::vector<Sequence> brute_force_oracle(int n, double c)
{
    if (n < 1) {
        throw DomainError("oracle length must be at least 1");
    }
    if (n > 24) {
        throw DomainError("the unpruned oracle refuses n > 24");
    }
    const long long bound = integral_bound(c);
    std::vector<Sequence> survivors;
    std::vector<int> signs(static_cast<std::size_t>(n));
    for (long long mask = 0; mask < (1LL << n); ++mask) {
        for (int k = 0; k < n; ++k) {
            signs[static_cast<std::size_t>(k)] = (mask >> k) & 1 ? 1 : -1;
        }
        const auto rho = aperiodic_autocorrelation(std::span<const int>(signs));
        bool ok = true;
        for (std::size_t t = 1; t < rho.size(); ++t) {
            if (std::llabs(rho[t]) > bound) {
                ok = false;
                break;
            }
        }
        if (ok) {
            survivors.push_back(Sequence::binary(signs));
        }
    }
    std::sort(survivors.begin(), survivors.end(),
              [](const Sequence& a, const Sequence& b) { return lex_less(a, b); });
    return survivors;
}

std::vector<MeritRecord> merit_records(int n_max, bool allow_large)
{
    if (n_max < 2) {
        throw DomainError("records require n_max >= 2");
    }
    if (n_max > 24 && !allow_large) {
        throw DomainError("refusing records for n_max > 24; set allow_large "
                          "(--allow-large) to override");
    }
    std::vector<MeritRecord> records;
    records.reserve(static_cast<std::size_t>(n_max - 1));
    for (int n = 2; n <= n_max; ++n) {
        // Gray-code walk over the s_0 = +1 half (negation leaves every
        // rho(t) unchanged), maintaining rho and E = sum_t rho(t)^2 under
        // single-sign flips.
        std::vector<int> signs(static_cast<std::size_t>(n), 1);
        std::vector<long long> rho(static_cast<std::size_t>(n));
        long long energy = 0;
        for (int t = 1; t < n; ++t) {
            rho[static_cast<std::size_t>(t)] = n - t;
            energy += static_cast<long long>(n - t) * (n - t);
        }
        long long best_energy = energy;
        Sequence best_witness = canonical_form(Sequence::binary(signs));

        const unsigned long long states = 1ULL << (n - 1);
        for (unsigned long long step = 1; step < states; ++step) {
            const int pos = std::countr_zero(step) + 1;
            const int old_value = signs[static_cast<std::size_t>(pos)];
            for (int t = 1; t < n; ++t) {
                long long neighbor = 0;
                if (pos + t < n) {
                    neighbor += signs[static_cast<std::size_t>(pos + t)];
                }
                if (pos - t >= 0) {
                    neighbor += signs[static_cast<std::size_t>(pos - t)];
                }
                if (neighbor == 0) {
                    continue;
                }
                auto& slot = rho[static_cast<std::size_t>(t)];
                const long long updated = slot - 2 * old_value * neighbor;
                energy += updated * updated - slot * slot;
                slot = updated;
            }
            signs[static_cast<std::size_t>(pos)] = -old_value;

            if (energy < best_energy) {
                best_energy = energy;
                best_witness = canonical_form(Sequence::binary(signs));
            } else if (energy == best_energy) {
                auto candidate = canonical_form(Sequence::binary(signs));
                if (lex_less(candidate, best_witness)) {
                    best_witness = std::move(candidate);
                }
            }
        }
        records.push_back(MeritRecord{
            n,
            Rational(static_cast<long long>(n) * n, 2 * best_energy),
            std::move(best_witness),
            2 * best_energy,
        });
    }
    return records;
}

BoundCheckReport bound_check_report(const SearchSpec& spec)
{
    SearchSpec enumerate_spec = spec;
    enumerate_spec.mode = SearchMode::Enumerate;
    const auto result = enumerate_bounded(enumerate_spec);

    BoundCheckReport report;
    report.n = spec.n;
    report.c = spec.c;
    report.survivor_count = result.count;
    const double nd = spec.n;
    report.merit_bound = spec.c > 0.0
        ? nd * nd / (2.0 * (nd - 1.0) * spec.c * spec.c)
        : std::numeric_limits<double>::infinity();

    const bool integral = spec.c > 0.0 && spec.c == std::floor(spec.c);
    const long long cint = integral ? static_cast<long long>(spec.c) : 0;
    // Merit is symmetry-invariant, so representatives cover all survivors.
    for (const auto& survivor : result.sequences) {
        if (merit_is_infinite(survivor)) {
            continue; // no sidelobes at all: clears every bound
        }
        const Rational merit = merit_factor_discrete_exact(survivor);
        if (!report.min_merit || merit < *report.min_merit) {
            report.min_merit = merit;
        }
        const bool holds = integral
            ? merit >= Rational(static_cast<long long>(spec.n) * spec.n,
                                2 * (static_cast<long long>(spec.n) - 1) * cint * cint)
            : boost::rational_cast<double>(merit) >= report.merit_bound * (1.0 - 1e-12);
        if (!holds) {
            report.all_hold = false;
            ++report.violations;
        }
    }
    return report;
}

} // namespace seqmerit
