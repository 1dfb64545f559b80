// Shared helpers and independent brute-force oracles for the test suites.
// Everything here favours directness over speed; these are the cross-checks
// the library is measured against.
#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "rimhook/extraction.hpp"
#include "rimhook/insertion.hpp"
#include "rimhook/rim_hook.hpp"
#include "rimhook/rpp.hpp"
#include "rimhook/series.hpp"

namespace testsupport {

using namespace rimhook;

/// Every partition whose diagram fits in a max_rows x max_cols box, the empty
/// partition included.
inline std::vector<Partition> partitions_in_box(int max_rows, int max_cols) {
    std::vector<Partition> out{Partition()};
    std::vector<int> parts;
    const std::function<void(int)> extend = [&](int limit) {
        if (static_cast<int>(parts.size()) == max_rows) return;
        for (int p = 1; p <= limit; ++p) {
            parts.push_back(p);
            out.emplace_back(parts);
            extend(p);
            parts.pop_back();
        }
    };
    extend(max_cols);
    return out;
}

/// Calls fn for every function from the diagram to {0, ..., max_entry},
/// monotone or not.
inline void for_all_fillings(const Partition& shape, Entry max_entry,
                             const std::function<void(const Grid&)>& fn) {
    Grid grid(static_cast<std::size_t>(shape.length()));
    for (int i = 1; i <= shape.length(); ++i) {
        grid[static_cast<std::size_t>(i - 1)].assign(
            static_cast<std::size_t>(shape.part(i)), 0);
    }
    const std::vector<Cell> cells = shape.cells();
    const std::function<void(std::size_t)> assign = [&](std::size_t k) {
        if (k == cells.size()) {
            fn(grid);
            return;
        }
        const Cell u = cells[k];
        for (Entry v = 0; v <= max_entry; ++v) {
            grid[static_cast<std::size_t>(u.row - 1)][static_cast<std::size_t>(u.col - 1)] = v;
            assign(k + 1);
        }
    };
    assign(0);
}

/// Direct double-loop monotonicity check, independent of
/// ReversePlanePartition::check.
inline bool monotone_filling(const Partition& shape, const Grid& grid) {
    auto value = [&](Cell u) {
        return grid[static_cast<std::size_t>(u.row - 1)][static_cast<std::size_t>(u.col - 1)];
    };
    for (Cell u : shape.cells()) {
        if (value(u) < 0) return false;
        if (shape.contains(u.east()) && value(u) > value(u.east())) return false;
        if (shape.contains(u.south()) && value(u) > value(u.south())) return false;
    }
    return true;
}

/// All valid fillings with entries bounded by max_entry, generated directly
/// from the row/column lower bounds.
inline std::vector<ReversePlanePartition> rpps_with_entries_up_to(const Partition& shape,
                                                                  Entry max_entry) {
    std::vector<ReversePlanePartition> out;
    Grid grid(static_cast<std::size_t>(shape.length()));
    for (int i = 1; i <= shape.length(); ++i) {
        grid[static_cast<std::size_t>(i - 1)].assign(
            static_cast<std::size_t>(shape.part(i)), 0);
    }
    auto value = [&](Cell u) -> Entry {
        if (u.row < 1 || u.col < 1) return 0;
        return grid[static_cast<std::size_t>(u.row - 1)][static_cast<std::size_t>(u.col - 1)];
    };
    const std::vector<Cell> cells = shape.cells();  // row-major: W and N come first
    const std::function<void(std::size_t)> assign = [&](std::size_t k) {
        if (k == cells.size()) {
            out.push_back(ReversePlanePartition::validated(shape, grid));
            return;
        }
        const Cell u = cells[k];
        for (Entry v = std::max(value(u.west()), value(u.north())); v <= max_entry; ++v) {
            grid[static_cast<std::size_t>(u.row - 1)][static_cast<std::size_t>(u.col - 1)] = v;
            assign(k + 1);
        }
        grid[static_cast<std::size_t>(u.row - 1)][static_cast<std::size_t>(u.col - 1)] = 0;
    };
    assign(0);
    return out;
}

/// Every North-East path in the shape with the given tail and step count,
/// enumerated by walking predecessors backwards from the tail.
inline std::vector<LatticePath> ne_paths_with_tail(const Partition& shape, Cell tail,
                                                   int length) {
    std::vector<LatticePath> out;
    std::vector<Cell> cells{tail};  // reversed: tail first
    const std::function<void()> grow = [&] {
        if (static_cast<int>(cells.size()) == length + 1) {
            std::vector<Cell> forward(cells.rbegin(), cells.rend());
            out.emplace_back(std::move(forward), PathOrientation::NorthEast);
            return;
        }
        for (Cell prev : {cells.back().south(), cells.back().west()}) {
            if (!shape.contains(prev)) continue;
            cells.push_back(prev);
            grow();
            cells.pop_back();
        }
    };
    if (shape.contains(tail)) grow();
    return out;
}

/// Multisets of rim-hooks of the shape with total cell count exactly `total`,
/// each returned sorted weakly increasing.
inline std::vector<std::vector<RimHook>> hook_multisets_of_total(const Partition& shape,
                                                                 int total) {
    const std::vector<RimHook> hooks = all_rim_hooks(shape);
    std::vector<std::vector<RimHook>> out;
    std::vector<RimHook> chosen;
    const std::function<void(std::size_t, int)> pick = [&](std::size_t from, int left) {
        if (left == 0) {
            out.push_back(chosen);
            return;
        }
        for (std::size_t i = from; i < hooks.size(); ++i) {
            if (hooks[i].cell_count() > left) continue;
            chosen.push_back(hooks[i]);
            pick(i, left - hooks[i].cell_count());
            chosen.pop_back();
        }
    };
    pick(0, total);
    return out;
}

inline std::vector<Cell> corners_of(const std::vector<RimHook>& hooks) {
    std::vector<Cell> out;
    out.reserve(hooks.size());
    for (const RimHook& h : hooks) out.push_back(h.corner());
    return out;
}

}  // namespace testsupport
