#pragma once

#include <string>
#include <vector>

#include "corekit/abacus.hpp"
#include "corekit/beta_set.hpp"
#include "corekit/error.hpp"
#include "corekit/partition.hpp"

namespace corekit {

namespace detail {

inline void require_k(Int k) {
    if (k < 1) throw InvalidArgument("k must be at least 1, got " + std::to_string(k));
}

} // namespace detail

/// 4k^2(k+1)(k-1)/6, the size of the maximal (2k-1,2k+1)-core.
inline constexpr Int kappa_pair_size_formula(Int k) noexcept { return 4 * k * k * (k + 1) * (k - 1) / 6; }

/// k^2(k+1)(k-1)/6, the size of a maximal (2k-1,2k,2k+1)-core.
inline constexpr Int kappa_triple_size_formula(Int k) noexcept { return k * k * (k + 1) * (k - 1) / 6; }

/// The 2k-abacus of the maximal (2k-1,2k,2k+1)-core with more parts: rows
/// 0..k-2, row j holds j+1 spacers, 2k-2(j+1) beads, j+1 spacers.
inline TAbacus kappa_bar_abacus(Int k) {
    detail::require_k(k);
    const Int t = 2 * k;
    std::vector<Int> beads;
    for (Int j = 0; j + 2 <= k; ++j)
        for (Int p = t * j + j + 1; p <= t * j + t - j - 2; ++p) beads.push_back(p);
    return TAbacus(t, BetaSet(std::move(beads)));
}

/// Closed form: ((k-1)^2)^2, ((k-2)^2)^4, ..., 4^(2k-4), 1^(2k-2).
inline Partition kappa_triple(Int k) {
    detail::require_k(k);
    std::vector<Int> parts;
    for (Int m = 1; m < k; ++m) parts.insert(parts.end(), static_cast<std::size_t>(2 * m), (k - m) * (k - m));
    return Partition(std::move(parts));
}

/// Builds the abacus for k from the one for k-1: shift every bead one runner
/// right and one row up, then fill row 0 with beads 1..2k-2.
inline TAbacus append_step(const TAbacus& previous) {
    const Int old_t = previous.t();
    if (old_t % 2 != 0 || old_t < 4)
        throw ShapeMismatch("append_step needs a 2k-abacus with k >= 2, got t=" + std::to_string(old_t));
    const Int k = old_t / 2 + 1;
    if (!(previous == kappa_bar_abacus(k - 1)))
        throw ShapeMismatch("input is not the triple-core abacus for k=" + std::to_string(k - 1));

    const Int t = 2 * k;
    std::vector<Int> beads;
    for (Int p = 1; p <= t - 2; ++p) beads.push_back(p);
    for (Int b : previous.beads().beads()) {
        const Int runner = previous.runner(b) + 1;
        const Int row = previous.row(b) + 1;
        beads.push_back(row * t + runner);
    }
    return TAbacus(t, BetaSet(std::move(beads)));
}

/// tau_{k-1}, ..., tau_1, tau_0, tau_0, tau_1, ..., tau_{k-1}.
inline std::vector<Partition> palindromic_staircases(Int k) {
    detail::require_k(k);
    std::vector<Partition> out;
    for (Int j = k - 1; j >= 0; --j) out.push_back(staircase(j));
    for (Int j = 0; j < k; ++j) out.push_back(staircase(j));
    return out;
}

/// The maximal (2k-1,2k+1)-core, built from empty 2k-core and the
/// palindromic staircase 2k-quotient.
inline Partition kappa_pair(Int k) {
    detail::require_k(k);
    return reconstruct(Partition{}, palindromic_staircases(k), 2 * k);
}

/// Compares |kappa_pair| with 4|kappa_triple| on the constructed partitions,
/// and each against its closed form.
inline bool theorem3_check(Int k) {
    const Int pair = size(kappa_pair(k));
    const Int triple = size(kappa_triple(k));
    return pair == 4 * triple && pair == kappa_pair_size_formula(k) && triple == kappa_triple_size_formula(k);
}

struct CatalanCorePair {
    Int k = 1;
    Partition kappa_pair;
    Partition kappa_triple;
    TAbacus abacus_triple{2, {}};
};

inline CatalanCorePair make_catalan_core_pair(Int k) {
    return {k, kappa_pair(k), kappa_triple(k), kappa_bar_abacus(k)};
}

} // namespace corekit
