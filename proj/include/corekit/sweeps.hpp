#pragma once

// Property sweeps over k and over seeded random partitions. Each sweep
// returns how many of its cases held.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "corekit/abacus.hpp"
#include "corekit/bijection.hpp"
#include "corekit/catalan.hpp"
#include "corekit/partition.hpp"
#include "corekit/simulcores.hpp"

namespace corekit {

inline constexpr std::uint64_t kDefaultSeed = 0xC0DE5EEDULL;

struct SuiteResult {
    std::string name;
    Int passed = 0;
    Int total = 0;

    bool ok() const noexcept { return passed == total; }
};

/// A partition of a uniformly chosen n in [0, max_size]: the n cells are cut
/// into parts at random gaps, with a random cut density so both long and
/// short partitions show up.
template <class Rng>
Partition random_partition(Rng& rng, Int max_size) {
    const Int n = std::uniform_int_distribution<Int>(0, max_size)(rng);
    if (n == 0) return {};
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::bernoulli_distribution cut(density);
    std::vector<Int> parts;
    Int run = 1;
    for (Int i = 1; i < n; ++i) {
        if (cut(rng)) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

inline SuiteResult sweep_theorem3(Int k_max) {
    SuiteResult r{"theorem3"};
    for (Int k = 1; k <= k_max; ++k, ++r.total)
        if (theorem3_check(k)) ++r.passed;
    return r;
}

/// Closed form against the abacus, and the append step for k >= 3.
inline SuiteResult sweep_theorem6(Int k_max) {
    SuiteResult r{"theorem6"};
    for (Int k = 1; k <= k_max; ++k, ++r.total) {
        bool ok = kappa_bar_abacus(k).beads().to_partition() == kappa_triple(k);
        if (k >= 3) ok = ok && append_step(kappa_bar_abacus(k - 1)) == kappa_bar_abacus(k);
        if (ok) ++r.passed;
    }
    return r;
}

/// Empty 2k-core, palindromic staircase quotient, size = 2k * sum 2T(j).
inline SuiteResult sweep_remarks(Int k_max) {
    SuiteResult r{"remarks"};
    for (Int k = 1; k <= k_max; ++k, ++r.total) {
        const Partition pair = kappa_pair(k);
        Int staircase_total = 0;
        for (Int j = 0; j < k; ++j) staircase_total += 2 * triangular(j);
        const bool ok = t_core(pair, 2 * k).empty() && t_quotient(pair, 2 * k) == palindromic_staircases(k) &&
                        size(pair) == 2 * k * staircase_total;
        if (ok) ++r.passed;
    }
    return r;
}

inline SuiteResult sweep_bijection(Int k_max) {
    SuiteResult r{"bijection"};
    for (Int k = 1; k <= k_max; ++k, ++r.total) {
        const BijectionReport report = verify_bijection(build_bijection(k), k);
        const bool counts = report.part1_cells == (k - 1) * triangular(k - 1) &&
                            report.part3_cells == (k >= 2 ? size(kappa_triple(k - 1)) : 0);
        Int part2 = 0;
        for (Int j = 1; j < k; ++j) part2 += triangular(j);
        if (report.ok() && counts && report.part2_cells == part2) ++r.passed;
    }
    return r;
}

/// Size identity with the factor t, core/quotient round trip, and that the
/// core really is a t-core, on random partitions.
inline SuiteResult sweep_eq1(std::uint64_t seed, Int trials = 1000, Int max_size = 200, Int max_t = 12) {
    SuiteResult r{"eq1"};
    std::mt19937_64 rng(seed);
    for (Int n = 0; n < trials; ++n, ++r.total) {
        const Partition p = random_partition(rng, max_size);
        const Int t = std::uniform_int_distribution<Int>(2, max_t)(rng);
        const QuotientDecomposition d = decompose(p, t);
        Int quotient_total = 0;
        for (const auto& q : d.quotient) quotient_total += size(q);
        const bool ok = size(p) == size(d.core) + t * quotient_total && is_t_core(d.core, t) &&
                        reconstruct(d.core, d.quotient, t) == p;
        if (ok) ++r.passed;
    }
    return r;
}

/// kappa_pair(k) against the semigroup-gap maximal core; for small k also
/// against exhaustive enumeration of pair and triple cores.
inline SuiteResult sweep_maximal(Int k_max, const EnumerationLimits& limits = {}, Int enumerate_up_to = 4) {
    SuiteResult r{"maximal"};
    for (Int k = 1; k <= k_max; ++k, ++r.total) {
        const Partition pair = kappa_pair(k);
        bool ok = true;
        if (k == 1) {
            ok = pair.empty() && kappa_triple(k).empty();
        } else {
            ok = pair == maximal_core(2 * k - 1, 2 * k + 1) && conjugate(pair) == pair;
            if (k <= enumerate_up_to) {
                const auto pairs = enumerate_cores(CoreFamilySpec{2 * k - 1, 2 * k + 1}, limits);
                ok = ok && pairs.maximal_cores() == std::vector<Partition>{pair};
                for (const auto& c : pairs.cores) ok = ok && contains(pair, c);

                const Partition triple = kappa_triple(k);
                const auto triples = enumerate_cores(CoreFamilySpec{2 * k - 1, 2 * k, 2 * k + 1}, limits);
                const auto top = triples.maximal_cores();
                ok = ok && top.size() == 2 && std::find(top.begin(), top.end(), triple) != top.end() &&
                     std::find(top.begin(), top.end(), conjugate(triple)) != top.end() &&
                     triple.num_parts() > conjugate(triple).num_parts();
            }
        }
        if (ok) ++r.passed;
    }
    return r;
}

} // namespace corekit
