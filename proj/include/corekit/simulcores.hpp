#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "corekit/abacus.hpp"
#include "corekit/beta_set.hpp"
#include "corekit/error.hpp"
#include "corekit/partition.hpp"

namespace corekit {

/// The moduli of a simultaneous-core condition. Sorted, duplicates collapsed.
class CoreFamilySpec {
public:
    explicit CoreFamilySpec(std::vector<Int> moduli) : moduli_(std::move(moduli)) {
        if (moduli_.empty()) throw InvalidArgument("a core family needs at least one modulus");
        for (Int m : moduli_)
            if (m < 2) throw InvalidArgument("moduli must be at least 2, got " + std::to_string(m));
        std::sort(moduli_.begin(), moduli_.end());
        moduli_.erase(std::unique(moduli_.begin(), moduli_.end()), moduli_.end());
    }

    CoreFamilySpec(std::initializer_list<Int> moduli) : CoreFamilySpec(std::vector<Int>(moduli)) {}

    const std::vector<Int>& moduli() const noexcept { return moduli_; }

    Int gcd() const {
        Int g = 0;
        for (Int m : moduli_) g = std::gcd(g, m);
        return g;
    }

    friend bool operator==(const CoreFamilySpec&, const CoreFamilySpec&) = default;

private:
    std::vector<Int> moduli_;
};

/// No hook of length t. Checked on the abacus: every bead at b >= t needs a
/// bead at b - t.
inline bool is_t_core(const Partition& p, Int t) {
    detail::require_t(t);
    const BetaSet beads = first_column_hooks(p);
    for (Int b : beads.beads())
        if (b >= t && !beads.has(b - t)) return false;
    return true;
}

inline bool is_simultaneous_core(const Partition& p, const CoreFamilySpec& spec) {
    return std::all_of(spec.moduli().begin(), spec.moduli().end(),
                       [&](Int t) { return is_t_core(p, t); });
}

inline bool has_finitely_many(const CoreFamilySpec& spec) { return spec.gcd() == 1; }

/// (s^2 - 1)(t^2 - 1) / 24, the size of the largest (s,t)-core.
inline Int maximal_core_size(Int s, Int t) { return (s * s - 1) * (t * t - 1) / 24; }

namespace detail {

inline void require_coprime_pair(Int s, Int t) {
    require_t(s);
    require_t(t);
    if (std::gcd(s, t) != 1)
        throw InvalidArgument("s and t must be coprime, got (" + std::to_string(s) + "," +
                              std::to_string(t) + ")");
}

} // namespace detail

/// binom(s+t, s) / (s+t).
inline Int count_st_cores(Int s, Int t) {
    detail::require_coprime_pair(s, t);
    // binom(n, k) built up as binom(n-k+i, i), which stays integral at every step.
    const Int n = s + t;
    const Int k = std::min(s, t);
    Int binom = 1;
    for (Int i = 1; i <= k; ++i) {
        Int next = 0;
        if (__builtin_mul_overflow(binom, n - k + i, &next))
            throw ResourceBound("binomial coefficient overflows 64 bits");
        binom = next / i;
    }
    return binom / n;
}

/// Nonnegative integers not of the form a*s + b*t with a, b >= 0.
inline std::vector<Int> semigroup_gaps(Int s, Int t) {
    detail::require_coprime_pair(s, t);
    const Int limit = s * t;  // every integer >= (s-1)(t-1) is representable
    std::vector<bool> representable(static_cast<std::size_t>(limit), false);
    for (Int a = 0; a < limit; a += s)
        for (Int x = a; x < limit; x += t) representable[static_cast<std::size_t>(x)] = true;
    std::vector<Int> gaps;
    for (Int x = 0; x < limit; ++x)
        if (!representable[static_cast<std::size_t>(x)]) gaps.push_back(x);
    return gaps;
}

/// The (s,t)-core whose abacus is the gap set of the semigroup <s,t>.
inline Partition maximal_core(Int s, Int t) { return BetaSet(semigroup_gaps(s, t)).to_partition(); }

/// Witness for an infinite family: the partition ((d-1)n, (d-1)(n-1), ..., d-1)
/// with d = gcd. Its beads jd - 1 fill runner d-1 of the d-abacus, so it is an
/// m-core for every multiple m of d.
inline Partition infinite_witness(const CoreFamilySpec& spec, Int n) {
    const Int d = spec.gcd();
    if (d == 1) throw InvalidArgument("moduli are coprime; the family is finite");
    if (n < 1) throw InvalidArgument("witness index must be at least 1");
    std::vector<Int> parts;
    for (Int i = n; i >= 1; --i) parts.push_back((d - 1) * i);
    return Partition(std::move(parts));
}

struct EnumerationLimits {
    Int max_bound = 250;
};

struct EnumerationResult {
    CoreFamilySpec spec;
    Int bound = 0;
    std::vector<Partition> cores;  // by size, then lexicographic

    Int count() const noexcept { return static_cast<Int>(cores.size()); }
    Int max_size() const { return cores.empty() ? 0 : size(cores.back()); }

    std::vector<Partition> maximal_cores() const {
        std::vector<Partition> out;
        const Int top = max_size();
        for (const auto& c : cores)
            if (size(c) == top) out.push_back(c);
        return out;
    }
};

/// Size bound every simultaneous core obeys: the smallest maximal-core size
/// over coprime pairs of moduli. Throws InfiniteFamily when gcd > 1.
inline Int enumeration_bound(const CoreFamilySpec& spec) {
    if (!has_finitely_many(spec))
        throw InfiniteFamily("infinitely many simultaneous cores (gcd=" + std::to_string(spec.gcd()) + ")",
                             spec.gcd());
    const auto& m = spec.moduli();
    Int bound = -1;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (std::gcd(m[i], m[j]) == 1) {
                const Int b = maximal_core_size(m[i], m[j]);
                if (bound < 0 || b < bound) bound = b;
            }
    // TODO: moduli with gcd 1 but no coprime pair (e.g. {6,10,15}) need a
    // semigroup Frobenius bound instead.
    if (bound < 0)
        throw ResourceBound("no coprime pair among the moduli; no size bound available");
    return bound;
}

namespace detail {

/// Depth-first search over abaci with all beads in [1, bound]. A bead at x is
/// allowed only if x - m is a bead for every modulus m <= x (the abacus
/// t-core criterion; position 0 is never a first-column hook). Partitions
/// larger than `bound` are pruned: adding a new top bead only grows the size.
class CoreSearch {
public:
    CoreSearch(const CoreFamilySpec& spec, Int bound)
        : moduli_(spec.moduli()), bound_(bound), bead_(static_cast<std::size_t>(bound + 1), false) {}

    std::vector<Partition> run() {
        visit(1, 0);
        return std::move(found_);
    }

private:
    void visit(Int next, Int current_size) {
        if (next > bound_) {
            found_.push_back(BetaSet(beads_).to_partition());
            return;
        }
        visit(next + 1, current_size);
        if (!allowed(next)) return;
        const Int grown = current_size + next - static_cast<Int>(beads_.size());
        if (grown > bound_) return;
        bead_[static_cast<std::size_t>(next)] = true;
        beads_.push_back(next);
        visit(next + 1, grown);
        beads_.pop_back();
        bead_[static_cast<std::size_t>(next)] = false;
    }

    bool allowed(Int x) const {
        for (Int m : moduli_) {
            if (x < m) continue;
            if (x == m || !bead_[static_cast<std::size_t>(x - m)]) return false;
        }
        return true;
    }

    const std::vector<Int>& moduli_;
    Int bound_;
    std::vector<bool> bead_;
    std::vector<Int> beads_;
    std::vector<Partition> found_;
};

} // namespace detail

/// Every simultaneous core for `spec`, sorted by size then lexicographically.
inline EnumerationResult enumerate_cores(const CoreFamilySpec& spec, const EnumerationLimits& limits = {}) {
    const Int bound = enumeration_bound(spec);
    if (bound > limits.max_bound)
        throw ResourceBound("enumeration bound " + std::to_string(bound) + " exceeds ceiling " +
                            std::to_string(limits.max_bound));
    std::vector<Partition> cores = detail::CoreSearch(spec, bound).run();
    std::sort(cores.begin(), cores.end(), [](const Partition& a, const Partition& b) {
        const Int sa = size(a), sb = size(b);
        return sa != sb ? sa < sb : a < b;
    });
    return {spec, bound, std::move(cores)};
}

} // namespace corekit
