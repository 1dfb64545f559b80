#include "rimhook/rim_hook.hpp"

#include <algorithm>
#include <stdexcept>

namespace rimhook {

RimHook::RimHook(const Partition& shape, Cell corner) : corner_(corner) {
    if (!shape.contains(corner)) {
        throw std::out_of_range("cell " + to_string(corner) + " is outside the shape");
    }
    // Rim cells in row r are the columns c with part(r+1) <= c <= part(r);
    // clamping at the corner's column and walking rows bottom-up yields the
    // hook as a North-East path from (λ'_j, j) to (i, λ_i).
    std::vector<Cell> cells;
    const int bottom_row = shape.conjugate_part(corner.col);
    for (int r = bottom_row; r >= corner.row; --r) {
        const int from = std::max(corner.col, shape.part(r + 1));
        for (int c = from; c <= shape.part(r); ++c) cells.push_back({r, c});
    }
    path_ = LatticePath(std::move(cells), PathOrientation::NorthEast);
}

bool RimHook::belongs_to(const Partition& shape) const {
    if (!shape.contains(corner_)) return false;
    return RimHook(shape, corner_) == *this;
}

std::strong_ordering rim_hook_compare(const RimHook& f, const RimHook& h) {
    const int fa = f.head().content();
    const int ha = h.head().content();
    if (fa != ha) return fa > ha ? std::strong_ordering::less : std::strong_ordering::greater;
    const int fw = f.tail().content();
    const int hw = h.tail().content();
    if (fw != hw) return fw < hw ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool rim_hook_less(const RimHook& f, const RimHook& h) { return rim_hook_compare(f, h) < 0; }

std::vector<RimHook> all_rim_hooks(const Partition& shape) {
    std::vector<RimHook> hooks;
    hooks.reserve(shape.cell_count());
    for (Cell u : shape.cells()) hooks.emplace_back(shape, u);
    std::sort(hooks.begin(), hooks.end(), rim_hook_less);
    return hooks;
}

}  // namespace rimhook
