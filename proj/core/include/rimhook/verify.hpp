#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rimhook/partition.hpp"
#include "rimhook/series.hpp"

namespace rimhook {

/// Outcome of one verification pass over a shape. Disagreement is a report
/// outcome, never an exception.
struct CheckReport {
    std::string check;        ///< which identity or property was exercised
    std::string shape;        ///< textual shape
    int bound = 0;            ///< size / total-degree bound
    bool ok = false;
    std::uint64_t cases = 0;  ///< comparisons or fillings examined
    std::string discrepancy;  ///< empty when ok; describes the first mismatch

    /// Line form "shape; N=...; check; ok|disagree[; first-discrepancy(...)]".
    std::string text() const;
};

/// hook_product coefficients against count_rpp_by_size, degree by degree.
/// Counting may be split over `threads` workers; the report is identical
/// regardless of the thread count.
CheckReport verify_size_series(const Partition& shape, int max_size, int threads = 1);

/// trace_product against trace_sum_over_rpp, table for table.
CheckReport verify_trace_series(const Partition& shape, int max_degree);

/// For every filling with size <= max_size: factorize, rebuild, compare.
CheckReport verify_round_trip(const Partition& shape, int max_size);

/// For every filling: the factor sizes of its factorization sum to its size.
CheckReport verify_factor_sizes(const Partition& shape, int max_size);

/// For every filling: the content-interval indicator vectors of its factors
/// sum to its trace. This is the mechanism behind the trace identity.
CheckReport verify_trace_intervals(const Partition& shape, int max_size);

/// The checks run by `verify` in the CLI: size series, round trip and factor
/// sizes, plus the two trace checks when with_trace is set.
std::vector<CheckReport> verify_shape(const Partition& shape, int max_size, bool with_trace,
                                      int threads = 1);

}  // namespace rimhook
