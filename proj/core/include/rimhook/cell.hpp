#pragma once

#include <compare>
#include <string>

namespace rimhook {

/// A lattice position inside (or around) a Young diagram. Rows are 1-indexed
/// and grow downward, columns are 1-indexed and grow rightward, so the cell
/// (1,1) is the top-left corner of a diagram.
struct Cell {
    int row = 0;
    int col = 0;

    constexpr Cell north() const { return {row - 1, col}; }
    constexpr Cell east() const { return {row, col + 1}; }
    constexpr Cell south() const { return {row + 1, col}; }
    constexpr Cell west() const { return {row, col - 1}; }

    /// Content of the cell: column minus row. Constant along diagonals.
    constexpr int content() const { return col - row; }

    // Default comparison is plain (row, col) order; it exists so cells can be
    // stored in ordered containers. The combinatorial orders live below.
    friend constexpr bool operator==(const Cell&, const Cell&) = default;
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Reverse lexicographic order on cells: greater columns come first, and
/// within a column greater rows come first. Total order on the cells of one
/// shape; comparing cells of different shapes is not meaningful.
constexpr std::strong_ordering rev_lex_compare(Cell u, Cell v) {
    if (u.col != v.col) {
        return u.col > v.col ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (u.row != v.row) {
        return u.row > v.row ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

constexpr bool rev_lex_less(Cell u, Cell v) { return rev_lex_compare(u, v) < 0; }

/// Content order on cells: greater contents come first, ties broken toward
/// the greater row. Same single-shape precondition as rev_lex_compare.
constexpr std::strong_ordering content_compare(Cell u, Cell v) {
    if (u.content() != v.content()) {
        return u.content() > v.content() ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
    if (u.row != v.row) {
        return u.row > v.row ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

constexpr bool content_less(Cell u, Cell v) { return content_compare(u, v) < 0; }

/// "i,j" form used by the CLI and in diagnostics.
std::string to_string(Cell u);

}  // namespace rimhook
