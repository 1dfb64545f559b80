#include "rimhook/lattice_path.hpp"

#include <algorithm>
#include <stdexcept>

namespace rimhook {

LatticePath::LatticePath(std::vector<Cell> cells, PathOrientation orientation)
    : cells_(std::move(cells)), orientation_(orientation) {
    for (std::size_t k = 1; k < cells_.size(); ++k) {
        const Cell prev = cells_[k - 1];
        const Cell cur = cells_[k];
        const bool ok = orientation_ == PathOrientation::NorthEast
                            ? (cur == prev.north() || cur == prev.east())
                            : (cur == prev.south() || cur == prev.west());
        if (!ok) {
            throw std::invalid_argument("lattice path: step " + std::to_string(k) + " from " +
                                        to_string(prev) + " to " + to_string(cur) +
                                        " does not match the orientation");
        }
    }
}

Cell LatticePath::head() const {
    if (cells_.empty()) throw std::out_of_range("empty path has no head");
    return orientation_ == PathOrientation::NorthEast ? cells_.front() : cells_.back();
}

Cell LatticePath::tail() const {
    if (cells_.empty()) throw std::out_of_range("empty path has no tail");
    return orientation_ == PathOrientation::NorthEast ? cells_.back() : cells_.front();
}

bool LatticePath::contains(Cell u) const {
    return std::find(cells_.begin(), cells_.end(), u) != cells_.end();
}

LatticePath LatticePath::reversed() const {
    std::vector<Cell> cells(cells_.rbegin(), cells_.rend());
    const auto flipped = orientation_ == PathOrientation::NorthEast ? PathOrientation::SouthWest
                                                                    : PathOrientation::NorthEast;
    return LatticePath(std::move(cells), flipped);
}

std::vector<Cell> LatticePath::cells_north_east() const {
    if (orientation_ == PathOrientation::NorthEast) return cells_;
    return {cells_.rbegin(), cells_.rend()};
}

}  // namespace rimhook
