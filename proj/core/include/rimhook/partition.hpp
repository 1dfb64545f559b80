#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rimhook/cell.hpp"

namespace rimhook {

/// Classifies a cell of a shape by how rim-hooks pass through it. The label
/// depends only on the cell's content relative to the contents of the shape's
/// inner and outer corners.
enum class Region : unsigned char {
    InnerDiag,  ///< content of an inner corner; a rim-hook through here turns (E and S both on it)
    OuterDiag,  ///< content of an outer corner; rim-hooks may begin or end here
    EastRun,    ///< a rim-hook through here continues East
    SouthRun,   ///< a rim-hook through here continues South
};

/// True for cells where a rim-hook (or compatible path) must contain the East
/// neighbour.
constexpr bool forces_east(Region r) {
    return r == Region::InnerDiag || r == Region::EastRun;
}

/// True for cells where a rim-hook must contain the South neighbour.
constexpr bool forces_south(Region r) {
    return r == Region::InnerDiag || r == Region::SouthRun;
}

char region_label(Region r);  // 'I', 'O', 'A' or 'B'

/// An integer partition identified with its Young diagram. Immutable after
/// construction; the conjugate, the corner lists and the region classification
/// are computed once and cached.
class Partition {
  public:
    /// The empty partition: no parts, no cells.
    Partition() = default;

    /// Throws std::invalid_argument unless parts are weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    /// Parses the textual form "4,3,1". Empty input gives the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// λ_i for 1-indexed i; zero beyond the last part.
    int part(int i) const;
    /// λ'_j for 1-indexed j; zero beyond the first row.
    int conjugate_part(int j) const;

    std::uint64_t cell_count() const { return cell_count_; }
    bool contains(Cell u) const {
        return u.row >= 1 && u.col >= 1 && u.row <= length() && u.col <= parts_[u.row - 1];
    }

    /// All cells in row-major order.
    std::vector<Cell> cells() const;

    Partition conjugate() const;

    /// Number of cells due East and due South of u, including u itself.
    /// Throws std::out_of_range when u is not a cell of the diagram.
    int hook_length(Cell u) const;
    /// The cells counted by hook_length, in row-major order.
    std::vector<Cell> hook_cells(Cell u) const;

    /// Corners, listed top-right to bottom-left (contents descending).
    const std::vector<Cell>& inner_corners() const { return inner_corners_; }
    const std::vector<Cell>& outer_corners() const { return outer_corners_; }
    /// Corner contents sorted ascending. For a nonempty shape they interleave
    /// strictly: o_1 < i_1 < o_2 < ... < i_r < o_{r+1}.
    const std::vector<int>& inner_corner_contents() const { return inner_contents_; }
    const std::vector<int>& outer_corner_contents() const { return outer_contents_; }

    /// Region of a cell of the diagram. Throws std::out_of_range otherwise.
    Region region_of(Cell u) const;

    int min_content() const { return empty() ? 0 : 1 - length(); }
    int max_content() const { return empty() ? 0 : parts_[0] - 1; }
    /// Number of occupied diagonals.
    int diagonal_count() const { return empty() ? 0 : max_content() - min_content() + 1; }

    /// Textual form "4,3,1"; empty string for the empty partition.
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

  private:
    std::vector<int> parts_;
    std::vector<int> conjugate_;
    std::uint64_t cell_count_ = 0;
    std::vector<Cell> inner_corners_;
    std::vector<Cell> outer_corners_;
    std::vector<int> inner_contents_;
    std::vector<int> outer_contents_;
    std::vector<Region> region_by_content_;  // indexed by content - min_content()

    void build_derived();
};

}  // namespace rimhook
