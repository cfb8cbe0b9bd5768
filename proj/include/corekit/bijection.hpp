#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "corekit/catalan.hpp"
#include "corekit/error.hpp"
#include "corekit/partition.hpp"

// Cell-level correspondence between k copies of the quotient half
// (tau_{k-1}, ..., tau_1, tau_0) and the rows of kappa_triple(k).
//
// The sources split three ways. Part 2 is all of copy 1. Part 1 is slot 0
// (tau_{k-1}) of copies 2..k. Part 3 is everything else, which is k-1
// copies of the quotient half for k-1 and is handled by recursion.
//
// kappa_triple(k) is kappa_triple(k-1) plus two more rows of each square
// (k-q)^2, q = 1..k-1. Of those two, for odd q one row goes to Part 2 and
// one to Part 1; for even q both go to Part 1. Every square row is cut into
// two staircases along its anti-diagonal.

namespace corekit {

enum class Region { Part1, Part2, Part3 };

inline std::string_view region_name(Region r) {
    switch (r) {
    case Region::Part1: return "P1";
    case Region::Part2: return "P2";
    case Region::Part3: return "P3";
    }
    return "?";
}

inline Region parse_region(std::string_view name) {
    if (name == "P1") return Region::Part1;
    if (name == "P2") return Region::Part2;
    if (name == "P3") return Region::Part3;
    throw InvalidArgument("unknown region '" + std::string(name) + "'");
}

/// (tau_{k-1}, ..., tau_1, tau_0). Slot s holds tau_{k-1-s}.
struct QuotientHalf {
    Int k = 1;
    std::vector<Partition> partitions;

    Int total_size() const {
        Int n = 0;
        for (const auto& p : partitions) n += size(p);
        return n;
    }
};

inline QuotientHalf q_half(Int k) {
    detail::require_k(k);
    QuotientHalf half{k, {}};
    for (Int j = k - 1; j >= 0; --j) half.partitions.push_back(staircase(j));
    return half;
}

/// Part sizes (triangular numbers) of the three-way split, each descending.
struct PartsSplit {
    std::vector<Int> part1;
    std::vector<Int> part2;
    std::vector<Int> part3;
};

inline PartsSplit split_parts(Int k) {
    detail::require_k(k);
    PartsSplit split;
    split.part1.assign(static_cast<std::size_t>(k - 1), triangular(k - 1));
    for (Int j = k - 1; j >= 1; --j) split.part2.push_back(triangular(j));
    for (Int j = k - 2; j >= 1; --j) split.part3.insert(split.part3.end(), static_cast<std::size_t>(k - 1), triangular(j));
    return split;
}

struct RegionLabeling {
    Int k = 1;
    std::vector<Region> labels;  // one per row of kappa_triple(k)
};

inline RegionLabeling label_rows(Int k) {
    detail::require_k(k);
    RegionLabeling labeling{k, {}};
    for (Int q = 1; q < k; ++q) {
        const bool odd = q % 2 == 1;
        if (odd) labeling.labels.push_back(Region::Part2);
        labeling.labels.insert(labeling.labels.end(), odd ? 1 : 2, Region::Part1);
        labeling.labels.insert(labeling.labels.end(), static_cast<std::size_t>(2 * q - 2), Region::Part3);
    }

    const Partition kappa = kappa_triple(k);
    if (static_cast<Int>(labeling.labels.size()) != kappa.num_parts())
        throw InternalInconsistency("labeling has the wrong number of rows");
    std::vector<Int> part3_rows;
    for (Int i = 0; i < kappa.num_parts(); ++i)
        if (labeling.labels[static_cast<std::size_t>(i)] == Region::Part3) part3_rows.push_back(kappa.part(i));
    if (k >= 2) {
        const Partition inner = kappa_triple(k - 1);
        if (!std::equal(part3_rows.begin(), part3_rows.end(), inner.parts().begin(), inner.parts().end()))
            throw InternalInconsistency("Part 3 rows do not match kappa_triple(" + std::to_string(k - 1) + ")");
    }
    return labeling;
}

// Square splitting. An m*m row is read as an m x m block, cell (i, j) at
// column i*m + j. Cells with i + j <= m-1 form tau_m in place; the rest,
// rotated by a half turn, form tau_{m-1}.

enum class SquarePiece { Large, Small };

struct SquareCell {
    SquarePiece piece = SquarePiece::Large;
    Cell staircase_cell;
};

struct SquareSplit {
    Int m = 1;
    std::vector<SquareCell> cells;  // row-major over the block

    const SquareCell& at(Int i, Int j) const { return cells[static_cast<std::size_t>(i * m + j)]; }
};

inline SquareSplit square_split(Int m) {
    if (m < 1) throw InvalidArgument("square side must be at least 1, got " + std::to_string(m));
    SquareSplit split{m, {}};
    split.cells.reserve(static_cast<std::size_t>(m * m));
    for (Int i = 0; i < m; ++i)
        for (Int j = 0; j < m; ++j) {
            if (i + j <= m - 1)
                split.cells.push_back({SquarePiece::Large, {i, j}});
            else
                split.cells.push_back({SquarePiece::Small, {m - 1 - i, m - 1 - j}});
        }
    return split;
}

/// Block cell of a staircase cell; inverse of square_split.
inline Cell square_block_cell(Int m, SquarePiece piece, const Cell& c) {
    return piece == SquarePiece::Large ? c : Cell{m - 1 - c.row, m - 1 - c.col};
}

// Repacking three copies of each tau_1..tau_{k-2} into k-2 blocks of
// T(k-1) cells. Triangles are taken largest first, cells row-major, and
// poured into blocks in order; a triangle may straddle two blocks.

struct PoolCell {
    Int side = 1;  // the triangle is tau_side
    Int copy = 0;  // 0, 1, 2
    Cell cell;
};

struct RepackPlan {
    Int k = 3;
    Int block_size = 0;
    std::vector<std::vector<PoolCell>> blocks;
};

inline RepackPlan repack_prop2(Int k) {
    detail::require_k(k);
    RepackPlan plan{k, triangular(k - 1), {}};
    if (k <= 2) return plan;
    plan.blocks.assign(static_cast<std::size_t>(k - 2), {});
    std::size_t block = 0;
    for (Int side = k - 2; side >= 1; --side)
        for (Int copy = 0; copy < 3; ++copy)
            for (const Cell& c : cells(staircase(side))) {
                if (static_cast<Int>(plan.blocks[block].size()) == plan.block_size) ++block;
                if (block >= plan.blocks.size())
                    throw InternalInconsistency("repacking overflowed its blocks");
                plan.blocks[block].push_back({side, copy, c});
            }
    for (const auto& b : plan.blocks)
        if (static_cast<Int>(b.size()) != plan.block_size)
            throw InternalInconsistency("repacking left a block short");
    return plan;
}

// The cell map.

struct SourceCell {
    Int copy = 1;  // 1..k
    Int slot = 0;  // 0..k-1, holding tau_{k-1-slot}
    Cell cell;

    friend auto operator<=>(const SourceCell&, const SourceCell&) = default;
};

struct CellMapEntry {
    SourceCell source;
    Cell target;
    Region region = Region::Part1;

    friend bool operator==(const CellMapEntry&, const CellMapEntry&) = default;
};

struct CellMap {
    Int k = 1;
    std::vector<CellMapEntry> entries;  // sorted by target, row-major
};

/// Which part a source cell belongs to under the three-way split.
inline Region source_region(const SourceCell& s) {
    if (s.copy == 1) return Region::Part2;
    if (s.slot == 0) return Region::Part1;
    return Region::Part3;
}

inline CellMap build_bijection(Int k) {
    detail::require_k(k);
    CellMap map{k, {}};
    if (k == 1) return map;

    const Partition kappa = kappa_triple(k);
    const RegionLabeling labeling = label_rows(k);

    // Square rank q of each row: the q-th largest square, (k-q)^2.
    std::vector<Int> rank;
    for (Int q = 1; q < k; ++q) rank.insert(rank.end(), static_cast<std::size_t>(2 * q), q);

    std::vector<Int> part1_rows, part2_rows, part3_rows;
    for (Int i = 0; i < kappa.num_parts(); ++i) {
        switch (labeling.labels[static_cast<std::size_t>(i)]) {
        case Region::Part1: part1_rows.push_back(i); break;
        case Region::Part2: part2_rows.push_back(i); break;
        case Region::Part3: part3_rows.push_back(i); break;
        }
    }
    auto side_of = [&](Int row) { return k - rank[static_cast<std::size_t>(row)]; };

    // Part 3: the k-1 map, rows embedded top to bottom.
    for (const CellMapEntry& e : build_bijection(k - 1).entries) {
        const SourceCell src{e.source.copy + 1, e.source.slot + 1, e.source.cell};
        const Cell dst{part3_rows.at(static_cast<std::size_t>(e.target.row)), e.target.col};
        map.entries.push_back({src, dst, Region::Part3});
    }

    // Part 2: copy 1. The square of side m takes tau_m and tau_{m-1}.
    for (Int row : part2_rows) {
        const Int m = side_of(row);
        const SquareSplit split = square_split(m);
        for (Int i = 0; i < m; ++i)
            for (Int j = 0; j < m; ++j) {
                const SquareCell& sc = split.at(i, j);
                const Int piece_side = sc.piece == SquarePiece::Large ? m : m - 1;
                map.entries.push_back({{1, k - 1 - piece_side, sc.staircase_cell}, {row, i * m + j}, Region::Part2});
            }
    }

    // Part 1. The first Part 1 row is the largest square; its tau_{k-1} half
    // is copy 2 verbatim. Every other piece goes to the pool.
    struct PoolPiece {
        Int side;
        Int row;
        SquarePiece piece;
    };
    std::vector<PoolPiece> pool;
    for (std::size_t n = 0; n < part1_rows.size(); ++n) {
        const Int row = part1_rows[n];
        const Int m = side_of(row);
        if (n == 0) {
            if (m != k - 1) throw InternalInconsistency("first Part 1 row is not the largest square");
            for (const Cell& c : cells(staircase(m))) {
                const Cell b = square_block_cell(m, SquarePiece::Large, c);
                map.entries.push_back({{2, 0, c}, {row, b.row * m + b.col}, Region::Part1});
            }
        } else {
            pool.push_back({m, row, SquarePiece::Large});
        }
        if (m - 1 >= 1) pool.push_back({m - 1, row, SquarePiece::Small});
    }
    std::stable_sort(pool.begin(), pool.end(), [](const PoolPiece& a, const PoolPiece& b) {
        return a.side != b.side ? a.side > b.side : a.row < b.row;
    });
    std::map<Int, std::vector<PoolPiece>> by_side;
    for (const auto& p : pool) by_side[p.side].push_back(p);
    for (Int side = 1; side <= k - 2; ++side)
        if (by_side[side].size() != 3)
            throw InternalInconsistency("pool does not hold three copies of tau_" + std::to_string(side));

    const RepackPlan plan = repack_prop2(k);
    const std::vector<Cell> receiver = cells(staircase(k - 1));
    for (std::size_t b = 0; b < plan.blocks.size(); ++b) {
        const Int copy = 3 + static_cast<Int>(b);
        for (std::size_t idx = 0; idx < plan.blocks[b].size(); ++idx) {
            const PoolCell& pc = plan.blocks[b][idx];
            const PoolPiece& piece = by_side[pc.side][static_cast<std::size_t>(pc.copy)];
            const Int m = side_of(piece.row);
            const Cell blk = square_block_cell(m, piece.piece, pc.cell);
            map.entries.push_back({{copy, 0, receiver[idx]}, {piece.row, blk.row * m + blk.col}, Region::Part1});
        }
    }

    std::sort(map.entries.begin(), map.entries.end(),
              [](const CellMapEntry& a, const CellMapEntry& b) { return a.target < b.target; });
    return map;
}

struct BijectionReport {
    bool total = false;
    bool injective = false;
    bool surjective = false;
    bool region_consistent = false;
    Int part1_cells = 0;
    Int part2_cells = 0;
    Int part3_cells = 0;

    bool ok() const noexcept { return total && injective && surjective && region_consistent; }
};

inline BijectionReport verify_bijection(const CellMap& map, Int k) {
    BijectionReport report;
    if (k < 1) return report;
    const Partition kappa = kappa_triple(k);
    const RegionLabeling labeling = label_rows(k);

    std::set<SourceCell> expected_sources;
    for (Int copy = 1; copy <= k; ++copy)
        for (Int slot = 0; slot < k; ++slot)
            for (const Cell& c : cells(staircase(k - 1 - slot))) expected_sources.insert({copy, slot, c});

    std::multiset<SourceCell> seen_sources;
    std::set<Cell> seen_targets;
    bool sources_valid = true, targets_valid = true, no_collision = true, regions_ok = true;
    for (const CellMapEntry& e : map.entries) {
        if (!expected_sources.count(e.source)) sources_valid = false;
        seen_sources.insert(e.source);
        if (!kappa.contains_cell(e.target)) {
            targets_valid = false;
            regions_ok = false;
        } else if (labeling.labels[static_cast<std::size_t>(e.target.row)] != e.region) {
            regions_ok = false;
        }
        if (source_region(e.source) != e.region) regions_ok = false;
        if (!seen_targets.insert(e.target).second) no_collision = false;
        switch (e.region) {
        case Region::Part1: ++report.part1_cells; break;
        case Region::Part2: ++report.part2_cells; break;
        case Region::Part3: ++report.part3_cells; break;
        }
    }

    bool each_source_once = sources_valid;
    for (const SourceCell& s : expected_sources)
        if (seen_sources.count(s) != 1) each_source_once = false;

    report.total = each_source_once;
    report.injective = no_collision;
    report.surjective = targets_valid && static_cast<Int>(seen_targets.size()) == size(kappa);
    report.region_consistent = regions_ok;
    return report;
}

} // namespace corekit
