#include "rimhook/insertion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rimhook {

std::optional<Cell> compatibility_violation(const ReversePlanePartition& rpp,
                                            const LatticePath& path) {
    const std::vector<Cell> cells = path.cells_north_east();
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const Cell u = cells[k];
        const bool has_next = k + 1 < cells.size();
        if (forces_east(rpp.shape().region_of(u))) {
            if (!has_next || cells[k + 1] != u.east() || rpp.at(u.east()) != rpp.at(u)) {
                return u;
            }
        }
        if (has_next && cells[k + 1] == u.north() && rpp.at(u.north()) != rpp.at(u)) {
            return u;
        }
    }
    return std::nullopt;
}

InsertionPathResult insertion_path(const ReversePlanePartition& rpp, const RimHook& hook) {
    const Partition& shape = rpp.shape();
    std::vector<Cell> cells{hook.tail()};
    for (int step = 1; step <= hook.length(); ++step) {
        const Cell cur = cells.back();
        // The off-shape South entry is infinite, so the equality test below is
        // automatically false there and the walk can only leave the shape
        // through the West edge.
        if (forces_south(shape.region_of(cur)) && rpp.entry(cur.south()) == rpp.at(cur)) {
            cells.push_back(cur.south());
        } else {
            const Cell west = cur.west();
            if (!shape.contains(west)) {
                return {std::nullopt, step, cur};
            }
            cells.push_back(west);
        }
    }
    return {LatticePath(std::move(cells), PathOrientation::SouthWest), -1, {}};
}

const char* InsertionOutcome::failure_name(Failure f) {
    switch (f) {
        case Failure::None: return "inserted";
        case Failure::PathLeftShape: return "path-left-shape";
        case Failure::CompatibilityViolation: return "compatibility-violation";
        case Failure::NotAnRpp: return "not-an-rpp";
    }
    return "?";
}

InsertionOutcome insert(const RimHook& hook, const ReversePlanePartition& rpp) {
    if (!hook.belongs_to(rpp.shape())) {
        throw std::invalid_argument("rim-hook of " + to_string(hook.corner()) +
                                    " does not belong to shape " + rpp.shape().str());
    }

    InsertionOutcome outcome;
    InsertionPathResult walk = insertion_path(rpp, hook);
    if (!walk.path) {
        outcome.failure = InsertionOutcome::Failure::PathLeftShape;
        outcome.offending = walk.failed_from;
        outcome.failed_step = walk.failed_step;
        return outcome;
    }

    // The walk only steps South on equal entries, so condition (2) holds by
    // construction; a failure here is a step-rule bug.
    const std::vector<Cell> ne = walk.path->cells_north_east();
    for (std::size_t k = 0; k + 1 < ne.size(); ++k) {
        if (ne[k + 1] == ne[k].north() && rpp.at(ne[k].north()) != rpp.at(ne[k])) {
            throw std::logic_error("insertion walk broke the vertical-equality condition at " +
                                   to_string(ne[k]));
        }
    }

    if (auto violation = compatibility_violation(rpp, *walk.path)) {
        outcome.failure = InsertionOutcome::Failure::CompatibilityViolation;
        outcome.offending = *violation;
        return outcome;
    }

    Grid grid = add_path(rpp, *walk.path);
    if (auto violation = ReversePlanePartition::check(rpp.shape(), grid)) {
        outcome.failure = InsertionOutcome::Failure::NotAnRpp;
        outcome.offending = violation->cell;
        return outcome;
    }

    outcome.path = std::move(*walk.path);
    outcome.result = ReversePlanePartition::validated(rpp.shape(), grid);
    return outcome;
}

ReversePlanePartition build_rpp(const Partition& shape, std::vector<RimHook> hooks) {
    for (const RimHook& h : hooks) {
        if (!h.belongs_to(shape)) {
            throw std::invalid_argument("rim-hook of " + to_string(h.corner()) +
                                        " does not belong to shape " + shape.str());
        }
    }
    std::stable_sort(hooks.begin(), hooks.end(), rim_hook_less);

    ReversePlanePartition rpp = ReversePlanePartition::zero(shape);
    for (auto it = hooks.rbegin(); it != hooks.rend(); ++it) {
        InsertionOutcome outcome = insert(*it, rpp);
        if (!outcome.inserted()) {
            std::string cell = outcome.offending ? to_string(*outcome.offending) : "?";
            throw std::logic_error(
                std::string("sorted insertion unexpectedly failed: hook ") +
                to_string(it->corner()) + " into shape " + shape.str() + ", " +
                InsertionOutcome::failure_name(outcome.failure) + " at " + cell);
        }
        rpp = std::move(*outcome.result);
    }
    return rpp;
}

}  // namespace rimhook
