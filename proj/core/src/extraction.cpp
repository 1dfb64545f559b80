#include "rimhook/extraction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rimhook {

namespace {

bool is_candidate(const ReversePlanePartition& rpp, Cell u) {
    switch (rpp.shape().region_of(u)) {
        case Region::OuterDiag:
            return rpp.at(u) > rpp.entry(u.west());
        case Region::EastRun:
            return rpp.at(u) > rpp.entry(u.west()) && rpp.at(u) > rpp.entry(u.north());
        default:
            return false;
    }
}

}  // namespace

std::vector<Cell> candidates(const ReversePlanePartition& rpp) {
    std::vector<Cell> out;
    for (Cell u : rpp.shape().cells()) {
        if (is_candidate(rpp, u)) out.push_back(u);
    }
    std::sort(out.begin(), out.end(), content_less);
    return out;
}

LatticePath extraction_path(const ReversePlanePartition& rpp, Cell candidate) {
    const Partition& shape = rpp.shape();
    if (!shape.contains(candidate) || !is_candidate(rpp, candidate)) {
        throw std::invalid_argument("cell " + to_string(candidate) +
                                    " is not an extraction candidate");
    }

    std::vector<Cell> cells{candidate};
    while (true) {
        const Cell cur = cells.back();
        const Entry value = rpp.at(cur);
        const Entry north = rpp.entry(cur.north());
        if (forces_east(shape.region_of(cur))) {
            if (!shape.contains(cur.east())) {
                throw std::logic_error("extraction walk forced East out of the shape at " +
                                       to_string(cur));
            }
            cells.push_back(cur.east());
        } else if (north == value) {
            if (!shape.contains(cur.north())) {
                throw std::logic_error("extraction walk forced North out of the shape at " +
                                       to_string(cur));
            }
            cells.push_back(cur.north());
        } else if (north < value) {
            if (!shape.contains(cur.east())) break;
            cells.push_back(cur.east());
        } else {
            // north > value contradicts column monotonicity of the filling.
            throw std::logic_error("extraction walk met a malformed filling at " +
                                   to_string(cur));
        }
    }
    return LatticePath(std::move(cells), PathOrientation::NorthEast);
}

namespace {

RimHook hook_from_extraction(const ReversePlanePartition& rpp, const LatticePath& path) {
    const Partition& shape = rpp.shape();
    const Cell tail = path.tail();
    // The walk terminates at a row end, so the corner row is the tail's row;
    // the corner column is fixed by matching the hook length, which is
    // strictly decreasing along the row.
    for (int j = shape.part(tail.row); j >= 1; --j) {
        if (shape.hook_length({tail.row, j}) == path.length() + 1) {
            return RimHook(shape, {tail.row, j});
        }
    }
    throw std::logic_error("no rim-hook matches the extraction path ending at " +
                           to_string(tail));
}

}  // namespace

RimHook hook_at(const ReversePlanePartition& rpp, Cell candidate) {
    return hook_from_extraction(rpp, extraction_path(rpp, candidate));
}

bool is_factor(const RimHook& hook, const ReversePlanePartition& rpp) {
    if (!hook.belongs_to(rpp.shape())) {
        throw std::invalid_argument("rim-hook of " + to_string(hook.corner()) +
                                    " does not belong to shape " + rpp.shape().str());
    }
    for (Cell u : candidates(rpp)) {
        const LatticePath path = extraction_path(rpp, u);
        if (path.tail() != hook.tail() || path.length() != hook.length()) continue;
        if (!is_compatible(rpp, path)) continue;
        if (ReversePlanePartition::check(rpp.shape(), subtract_path(rpp, path))) continue;
        return true;
    }
    return false;
}

ExtractionStep extract_min(const ReversePlanePartition& rpp) {
    if (rpp.is_zero()) {
        throw std::invalid_argument("the zero filling has no factors to extract");
    }
    const std::vector<Cell> cand = candidates(rpp);
    if (cand.empty()) {
        throw std::logic_error("nonzero filling without extraction candidates");
    }
    const Cell u = cand.front();  // content-order minimum

    LatticePath path = extraction_path(rpp, u);
    if (auto violation = compatibility_violation(rpp, path)) {
        throw std::logic_error("minimal extraction path is incompatible at " +
                               to_string(*violation));
    }
    Grid grid = subtract_path(rpp, path);
    if (auto violation = ReversePlanePartition::check(rpp.shape(), grid)) {
        throw std::logic_error("minimal extraction does not leave a valid filling: " +
                               violation->message);
    }
    RimHook hook = hook_from_extraction(rpp, path);
    ReversePlanePartition reduced = ReversePlanePartition::validated(rpp.shape(), grid);
    return {u, std::move(path), std::move(hook), std::move(reduced)};
}

std::vector<RimHook> lex_factorize(ReversePlanePartition rpp) {
    std::vector<RimHook> factors;
    while (!rpp.is_zero()) {
        ExtractionStep step = extract_min(rpp);
        factors.push_back(std::move(step.hook));
        rpp = std::move(step.reduced);
    }
    return factors;
}

}  // namespace rimhook
