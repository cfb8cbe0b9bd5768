#pragma once

// ASCII renderings of diagrams and abaci. Every line ends in '\n' and
// carries no trailing whitespace.

#include <algorithm>
#include <string>
#include <vector>

#include "corekit/abacus.hpp"
#include "corekit/bijection.hpp"
#include "corekit/error.hpp"
#include "corekit/partition.hpp"

namespace corekit {

struct RenderConfig {
    std::string part1_glyph = "o";
    std::string part2_glyph = ".";
    std::string part3_glyph = "*";
    Int cell_width = 2;

    void validate() const {
        if (cell_width < 1) throw InvalidArgument("cell width must be at least 1");
        if (part1_glyph == part2_glyph || part1_glyph == part3_glyph || part2_glyph == part3_glyph)
            throw InvalidArgument("region glyphs must be distinct");
    }

    const std::string& glyph(Region r) const {
        switch (r) {
        case Region::Part1: return part1_glyph;
        case Region::Part2: return part2_glyph;
        case Region::Part3: return part3_glyph;
        }
        return part1_glyph;
    }
};

namespace detail {

inline void rtrim(std::string& s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
}

/// One line of glyphs, each followed by width-1 spaces.
inline std::string glyph_row(const std::vector<std::string>& glyphs, Int width) {
    std::string line;
    for (const auto& g : glyphs) {
        line += g;
        line.append(static_cast<std::size_t>(width - 1), ' ');
    }
    rtrim(line);
    return line + '\n';
}

} // namespace detail

inline std::string render_young(const Partition& p, const std::string& glyph = "#", Int width = 2) {
    if (p.empty()) return "(empty)\n";
    std::string out;
    for (Int part : p.parts())
        out += detail::glyph_row(std::vector<std::string>(static_cast<std::size_t>(part), glyph), width);
    return out;
}

/// The diagram of kappa_triple(map.k) with each cell drawn by the region of
/// the map entry landing on it; cells nobody maps to show as '?'.
inline std::string render_cell_map(const CellMap& map, const RenderConfig& config = {}) {
    config.validate();
    const Partition kappa = kappa_triple(map.k);
    if (kappa.empty()) return "(empty)\n";
    std::vector<std::vector<std::string>> grid;
    for (Int part : kappa.parts()) grid.emplace_back(static_cast<std::size_t>(part), "?");
    for (const CellMapEntry& e : map.entries)
        if (kappa.contains_cell(e.target))
            grid[static_cast<std::size_t>(e.target.row)][static_cast<std::size_t>(e.target.col)] = config.glyph(e.region);
    std::string out;
    for (const auto& row : grid) out += detail::glyph_row(row, config.cell_width);
    return out;
}

/// Abacus grid, highest row first. Each position prints as its number,
/// beads in brackets; columns are right-aligned to their widest entry and
/// separated by one space. At least `min_rows` rows are drawn.
inline std::string render_abacus(const TAbacus& abacus, Int min_rows = 1) {
    const Int t = abacus.t();
    const Int rows = std::max(abacus.height(), min_rows);
    std::vector<std::vector<std::string>> tokens(static_cast<std::size_t>(rows));
    std::vector<std::size_t> width(static_cast<std::size_t>(t), 0);
    for (Int r = 0; r < rows; ++r) {
        auto& line = tokens[static_cast<std::size_t>(rows - 1 - r)];
        for (Int c = 0; c < t; ++c) {
            const Int p = abacus.position(c, r);
            std::string tok = std::to_string(p);
            if (abacus.beads().has(p)) tok = "[" + tok + "]";
            width[static_cast<std::size_t>(c)] = std::max(width[static_cast<std::size_t>(c)], tok.size());
            line.push_back(std::move(tok));
        }
    }
    std::string out;
    for (const auto& line : tokens) {
        std::string text;
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c > 0) text += ' ';
            text.append(width[c] - line[c].size(), ' ');
            text += line[c];
        }
        out += text + '\n';
    }
    return out;
}

/// The m x m block of square_split(m): Part 1 glyph for the tau_m piece,
/// Part 3 glyph for the tau_{m-1} piece.
inline std::string render_square_split(const SquareSplit& split, const RenderConfig& config = {}) {
    config.validate();
    std::string out;
    for (Int i = 0; i < split.m; ++i) {
        std::vector<std::string> row;
        for (Int j = 0; j < split.m; ++j)
            row.push_back(split.at(i, j).piece == SquarePiece::Large ? config.part1_glyph : config.part3_glyph);
        out += detail::glyph_row(row, config.cell_width);
    }
    return out;
}

inline std::string render_quotient(const QuotientDecomposition& d) {
    std::string out = "core=" + format_exponential(d.core) + "\nquotient=";
    for (std::size_t i = 0; i < d.quotient.size(); ++i) {
        if (i > 0) out += ',';
        out += format_exponential(d.quotient[i]);
    }
    return out + '\n';
}

} // namespace corekit
