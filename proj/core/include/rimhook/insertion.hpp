#pragma once

#include <optional>
#include <vector>

#include "rimhook/rim_hook.hpp"
#include "rimhook/rpp.hpp"

namespace rimhook {

/// A path P is compatible with a filling when
///   (1) every path cell u with forces_east(region) has its East neighbour on
///       the path carrying the same entry, and
///   (2) vertically adjacent path cells carry equal entries.
/// Returns the first cell (in head-to-tail order) violating either condition,
/// or nullopt when the path is compatible.
std::optional<Cell> compatibility_violation(const ReversePlanePartition& rpp,
                                            const LatticePath& path);

inline bool is_compatible(const ReversePlanePartition& rpp, const LatticePath& path) {
    return !compatibility_violation(rpp, path).has_value();
}

struct InsertionPathResult {
    /// South-West path starting at the hook's tail, present when the walk
    /// stayed inside the shape for all steps.
    std::optional<LatticePath> path;
    int failed_step = -1;  ///< 1-based step index at which the walk left the shape
    Cell failed_from{};    ///< cell from which the failing West step was taken
};

/// Walks from tail(h) for length(h) steps: South when the current cell forces
/// South and its South neighbour carries an equal entry, West otherwise. The
/// off-shape entry conventions make a South step off the shape impossible; a
/// West step off the shape fails the walk.
InsertionPathResult insertion_path(const ReversePlanePartition& rpp, const RimHook& hook);

struct InsertionOutcome {
    enum class Failure {
        None,
        PathLeftShape,           ///< the walk stepped West out of the shape
        CompatibilityViolation,  ///< the walked path violates condition (1)
        NotAnRpp,                ///< adding the path breaks monotonicity
    };

    Failure failure = Failure::None;
    bool inserted() const { return failure == Failure::None; }

    std::optional<LatticePath> path;                 // on success
    std::optional<ReversePlanePartition> result;     // on success
    std::optional<Cell> offending;                   // on failure
    int failed_step = -1;                            // PathLeftShape only

    static const char* failure_name(Failure f);
};

/// Attempts to insert the hook: builds the walk, checks compatibility, adds
/// the path and validates. On success the result has size() == rpp.size() +
/// hook.cell_count(). Throws std::invalid_argument when the hook does not
/// belong to the filling's shape.
InsertionOutcome insert(const RimHook& hook, const ReversePlanePartition& rpp);

/// Sorts the hooks weakly increasing and inserts them into the zero filling
/// from the largest down to the smallest. Every step succeeds for hooks of the
/// given shape; a failure indicates a library bug and throws std::logic_error.
ReversePlanePartition build_rpp(const Partition& shape, std::vector<RimHook> hooks);

}  // namespace rimhook
