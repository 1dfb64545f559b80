#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rimhook/lattice_path.hpp"
#include "rimhook/partition.hpp"

namespace rimhook {

using Entry = std::int64_t;
using Grid = std::vector<std::vector<Entry>>;

/// Value reported for cells in the positive quadrant but outside the shape.
/// It compares greater than every storable entry and is never stored.
inline constexpr Entry kInfiniteEntry = std::numeric_limits<Entry>::max();

/// Largest storable entry. Entries are conceptually unbounded nonnegative
/// integers; this implementation caps them so that arithmetic cannot wrap,
/// and rejects anything larger instead of truncating.
inline constexpr Entry kMaxEntry = Entry{1} << 62;

struct RppViolation {
    enum class Kind {
        ShapeMismatch,    ///< grid rows do not match the shape's parts
        NegativeEntry,
        EntryTooLarge,    ///< above kMaxEntry
        RowDecrease,      ///< entry exceeds its East neighbour
        ColumnDecrease,   ///< entry exceeds its South neighbour
    };
    Kind kind = Kind::ShapeMismatch;
    Cell cell{};  // first offending cell in reverse lexicographic order
    std::string message;
};

class RppError : public std::runtime_error {
  public:
    explicit RppError(RppViolation violation);
    const RppViolation& violation() const { return violation_; }

  private:
    RppViolation violation_;
};

/// Per-diagonal entry sums of a filling: index k holds the sum over the cells
/// of content k. The range of diagonals is fixed by the shape.
class TraceVector {
  public:
    TraceVector() = default;
    TraceVector(int min_diagonal, std::vector<Entry> sums)
        : min_diagonal_(min_diagonal), sums_(std::move(sums)) {}

    int min_diagonal() const { return min_diagonal_; }
    int diagonal_count() const { return static_cast<int>(sums_.size()); }
    /// Sum on diagonal k; zero outside the stored range.
    Entry at(int k) const;
    const std::vector<Entry>& sums() const { return sums_; }
    std::uint64_t total() const;

    friend bool operator==(const TraceVector&, const TraceVector&) = default;

  private:
    int min_diagonal_ = 0;
    std::vector<Entry> sums_;
};

/// A filling of a shape by nonnegative integers that weakly increases along
/// rows and columns. Boundary conventions: entries are 0 above the first row
/// and left of the first column, and unbounded (kInfiniteEntry) at positive
/// positions outside the shape.
class ReversePlanePartition {
  public:
    /// Scans the candidate filling and returns the first violation in reverse
    /// lexicographic cell order, or nullopt when the filling is valid.
    static std::optional<RppViolation> check(const Partition& shape, const Grid& rows);

    /// Throws RppError when check() reports a violation.
    static ReversePlanePartition validated(Partition shape, const Grid& rows);

    static ReversePlanePartition zero(Partition shape);

    const Partition& shape() const { return shape_; }

    /// Entry with the boundary conventions applied; total on Z^2.
    Entry entry(Cell u) const;
    /// Entry of a cell of the shape; throws std::out_of_range otherwise.
    Entry at(Cell u) const;

    /// Sum of all entries.
    std::uint64_t size() const { return size_; }
    bool is_zero() const { return size_ == 0; }

    TraceVector trace() const;

    Grid rows() const;

    friend bool operator==(const ReversePlanePartition& a, const ReversePlanePartition& b) {
        return a.shape_ == b.shape_ && a.entries_ == b.entries_;
    }

  private:
    ReversePlanePartition(Partition shape, std::vector<Entry> entries, std::uint64_t size);

    Partition shape_;
    std::vector<Entry> entries_;     // row-major, ragged rows flattened
    std::vector<std::size_t> row_offsets_;
    std::uint64_t size_ = 0;
};

/// Entries on the path shifted by +1 (respectively -1), everything else
/// unchanged. The result is a plain grid; callers validate it. Subtraction may
/// produce negative entries, which validation then reports. Throws
/// std::out_of_range when the path leaves the shape.
Grid add_path(const ReversePlanePartition& rpp, const LatticePath& path);
Grid subtract_path(const ReversePlanePartition& rpp, const LatticePath& path);

}  // namespace rimhook
