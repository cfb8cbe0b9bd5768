#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corekit/error.hpp"

namespace corekit {

using Int = std::int64_t;

/// A cell of a Young diagram, 0-indexed, English orientation (row 0 on top).
struct Cell {
    Int row = 0;
    Int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// An integer partition: weakly decreasing positive parts. The empty
/// partition has no parts. Trailing zeros passed to the constructor are
/// dropped; anything else that breaks the ordering is rejected.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw InvalidArgument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw InvalidArgument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

    std::span<const Int> parts() const noexcept { return parts_; }
    Int num_parts() const noexcept { return static_cast<Int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based); 0 past the last part.
    Int part(Int i) const noexcept {
        return (i >= 0 && i < num_parts()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    Int largest_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    bool contains_cell(const Cell& c) const noexcept {
        return c.row >= 0 && c.col >= 0 && c.col < part(c.row);
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<Int> parts_;
};

inline Int size(const Partition& p) {
    return std::accumulate(p.parts().begin(), p.parts().end(), Int{0});
}

/// Column lengths of p.
inline Partition conjugate(const Partition& p) {
    std::vector<Int> cols(static_cast<std::size_t>(p.largest_part()), 0);
    for (Int part : p.parts())
        for (Int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

/// True iff the diagram of `inner` fits inside the diagram of `outer`.
inline bool contains(const Partition& outer, const Partition& inner) {
    if (inner.num_parts() > outer.num_parts()) return false;
    for (Int i = 0; i < inner.num_parts(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

/// Number of cells in column `col`.
inline Int column_length(const Partition& p, Int col) {
    Int len = 0;
    while (len < p.num_parts() && p.part(len) > col) ++len;
    return len;
}

inline Int hook_length(const Partition& p, const Cell& c) {
    if (!p.contains_cell(c))
        throw CellOutOfDiagram("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                               ") is not in the diagram");
    const Int arm = p.part(c.row) - c.col - 1;
    const Int leg = column_length(p, c.col) - c.row - 1;
    return arm + leg + 1;
}

/// Every cell of p in row-major order.
inline std::vector<Cell> cells(const Partition& p) {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size(p)));
    for (Int i = 0; i < p.num_parts(); ++i)
        for (Int j = 0; j < p.part(i); ++j) out.push_back({i, j});
    return out;
}

/// The staircase (j, j-1, ..., 1); staircase(0) is empty.
inline Partition staircase(Int j) {
    if (j < 0) throw InvalidArgument("staircase index must be nonnegative");
    std::vector<Int> parts;
    for (Int p = j; p >= 1; --p) parts.push_back(p);
    return Partition(std::move(parts));
}

inline constexpr Int triangular(Int j) noexcept { return j * (j + 1) / 2; }

// Exponential notation, e.g. "(8,6,5^2,3,2^3,1)".

inline std::string format_exponential(const Partition& p) {
    std::string out = "(";
    const auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (i > 0) out += ',';
        out += std::to_string(parts[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    out += ')';
    return out;
}

namespace detail {

class ExponentialParser {
public:
    explicit ExponentialParser(std::string_view text) : text_(text) {}

    Partition parse() {
        skip_ws();
        expect('(');
        std::vector<Int> parts;
        skip_ws();
        if (peek() == ')') {
            ++pos_;
        } else {
            Int previous = std::numeric_limits<Int>::max();
            for (;;) {
                skip_ws();
                const std::size_t base_pos = pos_;
                if (peek() == '-') throw ParseError("negative base", pos_);
                const Int base = number("base");
                if (base == 0) throw ParseError("zero base", base_pos);
                if (base > previous) throw ParseError("bases must be weakly decreasing", base_pos);
                previous = base;
                Int exponent = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    skip_ws();
                    const std::size_t exp_pos = pos_;
                    if (peek() == '-') throw ParseError("negative exponent", pos_);
                    exponent = number("exponent");
                    if (exponent == 0) throw ParseError("zero exponent", exp_pos);
                    if (exponent > kMaxParts - static_cast<Int>(parts.size()))
                        throw ParseError("too many parts", exp_pos);
                }
                parts.insert(parts.end(), static_cast<std::size_t>(exponent), base);
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                expect(')');
                break;
            }
        }
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
        return Partition(std::move(parts));
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    Int number(const char* what) {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(std::string("expected ") + what, pos_);
        const std::size_t start = pos_;
        Int value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            const Int digit = peek() - '0';
            if (value > (std::numeric_limits<Int>::max() - digit) / 10)
                throw ParseError(std::string(what) + " out of range", start);
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    static constexpr Int kMaxParts = Int{1} << 24;

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Partition parse_exponential(std::string_view text) {
    return detail::ExponentialParser(text).parse();
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << format_exponential(p);
}

inline std::ostream& operator<<(std::ostream& os, const Cell& c) {
    return os << '(' << c.row << ',' << c.col << ')';
}

} // namespace corekit
