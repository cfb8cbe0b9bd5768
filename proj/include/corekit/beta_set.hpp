#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "corekit/error.hpp"
#include "corekit/partition.hpp"

namespace corekit {

/// A finite set of distinct nonnegative integers, stored ascending. As the
/// abacus of a partition these are the bead positions; all other positions
/// are spacers.
class BetaSet {
public:
    BetaSet() = default;

    explicit BetaSet(std::vector<Int> beads) : beads_(std::move(beads)) {
        std::sort(beads_.begin(), beads_.end());
        if (!beads_.empty() && beads_.front() < 0)
            throw InvalidArgument("bead positions must be nonnegative");
        if (std::adjacent_find(beads_.begin(), beads_.end()) != beads_.end())
            throw InvalidArgument("bead positions must be distinct");
    }

    BetaSet(std::initializer_list<Int> beads) : BetaSet(std::vector<Int>(beads)) {}

    std::span<const Int> beads() const noexcept { return beads_; }
    Int count() const noexcept { return static_cast<Int>(beads_.size()); }
    bool empty() const noexcept { return beads_.empty(); }
    Int max() const noexcept { return beads_.empty() ? -1 : beads_.back(); }

    bool has(Int position) const {
        return std::binary_search(beads_.begin(), beads_.end(), position);
    }

    /// The partition whose abacus this is. A bead at position p with b beads
    /// below it contributes the part p - b; zero parts are dropped.
    Partition to_partition() const {
        std::vector<Int> parts;
        parts.reserve(beads_.size());
        for (std::size_t i = beads_.size(); i-- > 0;) {
            const Int part = beads_[i] - static_cast<Int>(i);
            if (part > 0) parts.push_back(part);
        }
        return Partition(std::move(parts));
    }

    /// Same partition, `extra` more beads: every bead moves up by `extra` and
    /// positions 0..extra-1 are filled.
    BetaSet padded(Int extra) const {
        if (extra < 0) throw InvalidArgument("padding must be nonnegative");
        std::vector<Int> out;
        out.reserve(beads_.size() + static_cast<std::size_t>(extra));
        for (Int p = 0; p < extra; ++p) out.push_back(p);
        for (Int b : beads_) out.push_back(b + extra);
        return BetaSet(std::move(out));
    }

    friend bool operator==(const BetaSet&, const BetaSet&) = default;

private:
    std::vector<Int> beads_;
};

/// Hook lengths of the first column: {λ_i + r - i}, one per part.
inline BetaSet first_column_hooks(const Partition& p) {
    std::vector<Int> beads;
    const Int r = p.num_parts();
    beads.reserve(static_cast<std::size_t>(r));
    for (Int i = 0; i < r; ++i) beads.push_back(p.part(i) + r - 1 - i);
    return BetaSet(std::move(beads));
}

} // namespace corekit
