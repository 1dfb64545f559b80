#include "rimhook/rpp.hpp"

#include <algorithm>

#include "detail/checked.hpp"

namespace rimhook {

namespace {

std::string violation_message(RppViolation::Kind kind, Cell cell) {
    switch (kind) {
        case RppViolation::Kind::ShapeMismatch:
            return "grid rows do not match the shape";
        case RppViolation::Kind::NegativeEntry:
            return "negative entry at " + to_string(cell);
        case RppViolation::Kind::EntryTooLarge:
            return "entry at " + to_string(cell) + " exceeds the supported range";
        case RppViolation::Kind::RowDecrease:
            return "row decreases at " + to_string(cell);
        case RppViolation::Kind::ColumnDecrease:
            return "column decreases at " + to_string(cell);
    }
    return "invalid filling";
}

RppViolation make_violation(RppViolation::Kind kind, Cell cell) {
    return {kind, cell, violation_message(kind, cell)};
}

}  // namespace

RppError::RppError(RppViolation violation)
    : std::runtime_error(violation.message), violation_(std::move(violation)) {}

Entry TraceVector::at(int k) const {
    const int idx = k - min_diagonal_;
    if (idx < 0 || idx >= diagonal_count()) return 0;
    return sums_[static_cast<std::size_t>(idx)];
}

std::uint64_t TraceVector::total() const {
    std::uint64_t sum = 0;
    for (Entry e : sums_) sum = detail::add_checked(sum, static_cast<std::uint64_t>(e));
    return sum;
}

std::optional<RppViolation> ReversePlanePartition::check(const Partition& shape,
                                                         const Grid& rows) {
    if (static_cast<int>(rows.size()) != shape.length()) {
        return make_violation(RppViolation::Kind::ShapeMismatch, {static_cast<int>(rows.size()),
                                                                  0});
    }
    for (int i = 1; i <= shape.length(); ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != shape.part(i)) {
            return make_violation(RppViolation::Kind::ShapeMismatch, {i, 0});
        }
    }

    auto value = [&](Cell u) { return rows[static_cast<std::size_t>(u.row - 1)]
                                          [static_cast<std::size_t>(u.col - 1)]; };

    // Scan in reverse lexicographic order so the reported cell is the
    // rev-lex-first violation.
    std::vector<Cell> cells = shape.cells();
    std::sort(cells.begin(), cells.end(), rev_lex_less);
    for (Cell u : cells) {
        const Entry e = value(u);
        if (e < 0) return make_violation(RppViolation::Kind::NegativeEntry, u);
        if (e > kMaxEntry) return make_violation(RppViolation::Kind::EntryTooLarge, u);
        if (shape.contains(u.east()) && e > value(u.east())) {
            return make_violation(RppViolation::Kind::RowDecrease, u);
        }
        if (shape.contains(u.south()) && e > value(u.south())) {
            return make_violation(RppViolation::Kind::ColumnDecrease, u);
        }
    }
    return std::nullopt;
}

ReversePlanePartition ReversePlanePartition::validated(Partition shape, const Grid& rows) {
    if (auto violation = check(shape, rows)) throw RppError(*violation);
    std::vector<Entry> entries;
    entries.reserve(shape.cell_count());
    std::uint64_t size = 0;
    for (const auto& row : rows) {
        for (Entry e : row) {
            entries.push_back(e);
            size = detail::add_checked(size, static_cast<std::uint64_t>(e));
        }
    }
    return ReversePlanePartition(std::move(shape), std::move(entries), size);
}

ReversePlanePartition ReversePlanePartition::zero(Partition shape) {
    std::vector<Entry> entries(shape.cell_count(), 0);
    return ReversePlanePartition(std::move(shape), std::move(entries), 0);
}

ReversePlanePartition::ReversePlanePartition(Partition shape, std::vector<Entry> entries,
                                             std::uint64_t size)
    : shape_(std::move(shape)), entries_(std::move(entries)), size_(size) {
    row_offsets_.reserve(static_cast<std::size_t>(shape_.length()) + 1);
    std::size_t offset = 0;
    row_offsets_.push_back(0);
    for (int i = 1; i <= shape_.length(); ++i) {
        offset += static_cast<std::size_t>(shape_.part(i));
        row_offsets_.push_back(offset);
    }
}

Entry ReversePlanePartition::entry(Cell u) const {
    if (u.row <= 0 || u.col <= 0) return 0;
    if (!shape_.contains(u)) return kInfiniteEntry;
    return at(u);
}

Entry ReversePlanePartition::at(Cell u) const {
    if (!shape_.contains(u)) {
        throw std::out_of_range("cell " + to_string(u) + " is outside the shape");
    }
    return entries_[row_offsets_[static_cast<std::size_t>(u.row - 1)] +
                    static_cast<std::size_t>(u.col - 1)];
}

TraceVector ReversePlanePartition::trace() const {
    if (shape_.empty()) return {};
    std::vector<Entry> sums(static_cast<std::size_t>(shape_.diagonal_count()), 0);
    for (Cell u : shape_.cells()) {
        sums[static_cast<std::size_t>(u.content() - shape_.min_content())] += at(u);
    }
    return TraceVector(shape_.min_content(), std::move(sums));
}

Grid ReversePlanePartition::rows() const {
    Grid out(static_cast<std::size_t>(shape_.length()));
    for (int i = 1; i <= shape_.length(); ++i) {
        auto& row = out[static_cast<std::size_t>(i - 1)];
        row.assign(entries_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[i - 1]),
                   entries_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[i]));
    }
    return out;
}

namespace {

Grid shift_path(const ReversePlanePartition& rpp, const LatticePath& path, Entry delta) {
    Grid grid = rpp.rows();
    for (Cell u : path.cells()) {
        if (!rpp.shape().contains(u)) {
            throw std::out_of_range("path cell " + to_string(u) + " is outside the shape");
        }
        grid[static_cast<std::size_t>(u.row - 1)][static_cast<std::size_t>(u.col - 1)] += delta;
    }
    return grid;
}

}  // namespace

Grid add_path(const ReversePlanePartition& rpp, const LatticePath& path) {
    return shift_path(rpp, path, +1);
}

Grid subtract_path(const ReversePlanePartition& rpp, const LatticePath& path) {
    return shift_path(rpp, path, -1);
}

}  // namespace rimhook
