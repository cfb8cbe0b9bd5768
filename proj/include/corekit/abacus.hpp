#pragma once

#include <string>
#include <vector>

#include "corekit/beta_set.hpp"
#include "corekit/error.hpp"
#include "corekit/partition.hpp"

namespace corekit {

namespace detail {

inline void require_t(Int t) {
    if (t < 2) throw InvalidArgument("t must be at least 2, got " + std::to_string(t));
}

} // namespace detail

/// Bead positions folded onto t runners: position p sits on runner p mod t,
/// row p / t (row 0 at the bottom).
class TAbacus {
public:
    TAbacus(Int t, BetaSet beads) : t_(t), beads_(std::move(beads)) { detail::require_t(t_); }

    Int t() const noexcept { return t_; }
    const BetaSet& beads() const noexcept { return beads_; }

    Int runner(Int position) const noexcept { return position % t_; }
    Int row(Int position) const noexcept { return position / t_; }
    Int position(Int runner, Int row) const noexcept { return row * t_ + runner; }

    /// Number of rows up to and including the highest bead.
    Int height() const noexcept { return beads_.empty() ? 0 : row(beads_.max()) + 1; }

    /// Occupied rows of one runner, ascending.
    std::vector<Int> runner_rows(Int r) const {
        std::vector<Int> rows;
        for (Int b : beads_.beads())
            if (runner(b) == r) rows.push_back(row(b));
        return rows;
    }

    /// True iff no runner has a spacer below a bead.
    bool is_pushed_down() const {
        for (Int r = 0; r < t_; ++r) {
            const auto rows = runner_rows(r);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i] != static_cast<Int>(i)) return false;
        }
        return true;
    }

    friend bool operator==(const TAbacus&, const TAbacus&) = default;

private:
    Int t_;
    BetaSet beads_;
};

/// A t-core together with its t-quotient.
struct QuotientDecomposition {
    Int t = 2;
    Partition core;
    std::vector<Partition> quotient;

    friend bool operator==(const QuotientDecomposition&, const QuotientDecomposition&) = default;
};

inline TAbacus to_t_abacus(const Partition& p, Int t) {
    detail::require_t(t);
    return TAbacus(t, first_column_hooks(p));
}

/// Push every bead down its runner as far as it goes and read the result.
inline Partition t_core(const Partition& p, Int t) {
    detail::require_t(t);
    const BetaSet beads = first_column_hooks(p);
    std::vector<Int> per_runner(static_cast<std::size_t>(t), 0);
    for (Int b : beads.beads()) ++per_runner[static_cast<std::size_t>(b % t)];
    std::vector<Int> pushed;
    pushed.reserve(static_cast<std::size_t>(beads.count()));
    for (Int r = 0; r < t; ++r)
        for (Int i = 0; i < per_runner[static_cast<std::size_t>(r)]; ++i) pushed.push_back(i * t + r);
    return BetaSet(std::move(pushed)).to_partition();
}

namespace detail {

/// First-column hooks padded up to a multiple of t beads. Quotients are read
/// from this normalized abacus so that (core, quotient) determines p.
inline BetaSet normalized_beads(const Partition& p, Int t) {
    const BetaSet beads = first_column_hooks(p);
    return beads.padded((t - beads.count() % t) % t);
}

} // namespace detail

/// Each runner read as its own abacus, rows renumbered from 0.
inline std::vector<Partition> t_quotient(const Partition& p, Int t) {
    detail::require_t(t);
    const TAbacus abacus(t, detail::normalized_beads(p, t));
    std::vector<Partition> quotient;
    quotient.reserve(static_cast<std::size_t>(t));
    for (Int r = 0; r < t; ++r) quotient.push_back(BetaSet(abacus.runner_rows(r)).to_partition());
    return quotient;
}

inline QuotientDecomposition decompose(const Partition& p, Int t) {
    return {t, t_core(p, t), t_quotient(p, t)};
}

/// Inverse of decompose: lay each quotient's beads on the matching runner of
/// the core's (normalized) abacus.
inline Partition reconstruct(const Partition& core, const std::vector<Partition>& quotient, Int t) {
    detail::require_t(t);
    if (static_cast<Int>(quotient.size()) != t)
        throw ArityError("quotient has " + std::to_string(quotient.size()) + " entries, expected " +
                         std::to_string(t));
    BetaSet core_beads = detail::normalized_beads(core, t);
    if (!TAbacus(t, core_beads).is_pushed_down())
        throw NotATCore("core " + format_exponential(core) + " is not a " + std::to_string(t) + "-core");

    // Every runner needs at least as many beads as its quotient has parts;
    // a full extra row keeps the bead count a multiple of t.
    auto beads_on = [&](Int r) {
        Int n = 0;
        for (Int b : core_beads.beads())
            if (b % t == r) ++n;
        return n;
    };
    for (;;) {
        bool enough = true;
        for (Int r = 0; r < t; ++r)
            if (beads_on(r) < quotient[static_cast<std::size_t>(r)].num_parts()) enough = false;
        if (enough) break;
        core_beads = core_beads.padded(t);
    }

    std::vector<Int> beads;
    for (Int r = 0; r < t; ++r) {
        const Partition& q = quotient[static_cast<std::size_t>(r)];
        const Int m = beads_on(r);
        for (Int i = 0; i < m; ++i) {
            const Int row = q.part(i) + m - 1 - i;
            beads.push_back(row * t + r);
        }
    }
    return BetaSet(std::move(beads)).to_partition();
}

/// Remove the rim hook attached to cell c. Works directly on the diagram:
/// rows c.row..L-1 drop to one less than the row below, row L keeps c.col
/// cells, where L is the bottom row of c's column.
inline Partition remove_one_hook(const Partition& p, const Cell& c) {
    if (!p.contains_cell(c))
        throw CellOutOfDiagram("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                               ") is not in the diagram");
    const Int last = column_length(p, c.col) - 1;
    std::vector<Int> parts(p.parts().begin(), p.parts().end());
    for (Int i = c.row; i < last; ++i) parts[static_cast<std::size_t>(i)] = p.part(i + 1) - 1;
    parts[static_cast<std::size_t>(last)] = c.col;
    return Partition(std::move(parts));
}

} // namespace corekit
