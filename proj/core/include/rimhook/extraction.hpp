#pragma once

#include <vector>

#include "rimhook/insertion.hpp"
#include "rimhook/rim_hook.hpp"
#include "rimhook/rpp.hpp"

namespace rimhook {

/// Cells where an extraction path may start: outer-diagonal cells whose entry
/// exceeds their West neighbour, and east-run cells whose entry exceeds both
/// their West and North neighbours (boundary entries count as 0). Sorted in
/// content order, minimum first.
std::vector<Cell> candidates(const ReversePlanePartition& rpp);

/// North-East path starting at a candidate cell. From the current cell: North
/// when the cell does not force East and the North entry equals the current
/// one; East when the cell forces East, or when the North entry is smaller and
/// East is still inside the shape; the path ends when the North entry is
/// smaller and East leaves the shape. Throws std::invalid_argument when the
/// start cell is not a candidate, std::logic_error when the walk reaches a
/// state the step rule cannot handle (impossible for valid fillings).
LatticePath extraction_path(const ReversePlanePartition& rpp, Cell candidate);

/// The unique rim-hook with the same tail and length as the extraction path of
/// the candidate.
RimHook hook_at(const ReversePlanePartition& rpp, Cell candidate);

/// True when the hook is extractable: it matches hook_at of some candidate
/// whose extraction path is compatible and whose removal leaves a valid
/// filling. Equivalently, some filling inserts into rpp via this hook.
bool is_factor(const RimHook& hook, const ReversePlanePartition& rpp);

struct ExtractionStep {
    Cell candidate;            ///< content-order minimum of candidates(rpp)
    LatticePath path;          ///< its extraction path
    RimHook hook;              ///< the extracted rim-hook
    ReversePlanePartition reduced;  ///< rpp with the path subtracted
};

/// Extracts along the content-order minimal candidate. Throws
/// std::invalid_argument on the zero filling and std::logic_error when an
/// internal invariant fails (no candidates on a nonzero filling, incompatible
/// path, or invalid reduction).
ExtractionStep extract_min(const ReversePlanePartition& rpp);

/// Repeated extract_min until the zero filling. The returned sequence is
/// weakly increasing under rim_hook_compare and build_rpp of it reproduces the
/// input.
std::vector<RimHook> lex_factorize(ReversePlanePartition rpp);

}  // namespace rimhook
