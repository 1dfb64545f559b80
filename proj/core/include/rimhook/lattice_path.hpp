#pragma once

#include <vector>

#include "rimhook/cell.hpp"

namespace rimhook {

enum class PathOrientation : unsigned char { NorthEast, SouthWest };

/// A sequence of cells in which each successor is the North or East
/// (respectively South or West) neighbour of its predecessor. The head and
/// tail are orientation independent: the head is always the end of smaller
/// content, the tail the end of larger content.
class LatticePath {
  public:
    LatticePath() = default;  // the empty path; head/tail are undefined for it

    /// Throws std::invalid_argument when a step does not match the orientation.
    LatticePath(std::vector<Cell> cells, PathOrientation orientation);

    const std::vector<Cell>& cells() const { return cells_; }
    PathOrientation orientation() const { return orientation_; }
    bool empty() const { return cells_.empty(); }
    std::size_t cell_count() const { return cells_.size(); }

    /// Number of steps: cell_count() - 1.
    int length() const { return static_cast<int>(cells_.size()) - 1; }

    /// Throws std::out_of_range on the empty path.
    Cell head() const;
    Cell tail() const;

    bool contains(Cell u) const;

    /// Same cells walked the other way; head, tail and length are preserved.
    LatticePath reversed() const;

    /// The cells listed head-to-tail regardless of stored orientation.
    std::vector<Cell> cells_north_east() const;

    friend bool operator==(const LatticePath& a, const LatticePath& b) {
        return a.cells_north_east() == b.cells_north_east();
    }

  private:
    std::vector<Cell> cells_;
    PathOrientation orientation_ = PathOrientation::NorthEast;
};

}  // namespace rimhook
