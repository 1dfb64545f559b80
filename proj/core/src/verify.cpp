#include "rimhook/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "rimhook/extraction.hpp"
#include "rimhook/insertion.hpp"

namespace rimhook {

namespace {

std::string shape_text(const Partition& shape) {
    return shape.empty() ? "-" : shape.str();
}

CheckReport base_report(const char* check, const Partition& shape, int bound) {
    CheckReport report;
    report.check = check;
    report.shape = shape_text(shape);
    report.bound = bound;
    report.ok = true;
    return report;
}

// Runs `body(n)` for every size 0..max_size, optionally spread over workers.
void for_each_size(int max_size, int threads, const std::function<void(int)>& body) {
    if (threads <= 1 || max_size == 0) {
        for (int n = 0; n <= max_size; ++n) body(n);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int n = next.fetch_add(1); n <= max_size; n = next.fetch_add(1)) body(n);
    };
    std::vector<std::thread> pool;
    const int count = std::min(threads, max_size + 1);
    pool.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace

std::string CheckReport::text() const {
    std::string line = shape + "; N=" + std::to_string(bound) + "; " + check + "; " +
                       (ok ? "ok" : "disagree") + "; cases=" + std::to_string(cases);
    if (!ok) line += "; " + discrepancy;
    return line;
}

CheckReport verify_size_series(const Partition& shape, int max_size, int threads) {
    CheckReport report = base_report("hook-product", shape, max_size);
    const TruncatedSeries product = hook_product(shape, max_size);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_size) + 1, 0);
    for_each_size(max_size, threads, [&](int n) {
        counts[static_cast<std::size_t>(n)] = count_rpp_by_size(shape, n);
    });
    report.cases = static_cast<std::uint64_t>(max_size) + 1;
    for (int n = 0; n <= max_size; ++n) {
        if (counts[static_cast<std::size_t>(n)] != product.coeff(n)) {
            report.ok = false;
            report.discrepancy = "first-discrepancy(degree=" + std::to_string(n) +
                                 ", expected=" + std::to_string(counts[n]) +
                                 ", got=" + std::to_string(product.coeff(n)) + ")";
            break;
        }
    }
    return report;
}

CheckReport verify_trace_series(const Partition& shape, int max_degree) {
    CheckReport report = base_report("trace-product", shape, max_degree);
    const TraceMonomialTable product = trace_product(shape, max_degree);
    const TraceMonomialTable oracle = trace_sum_over_rpp(shape, max_degree);
    report.cases = std::max(product.terms().size(), oracle.terms().size());
    if (product == oracle) return report;

    report.ok = false;
    for (const auto& [key, c] : oracle.terms()) {
        if (product.coeff(key) != c) {
            report.discrepancy = "first-discrepancy(key=" + oracle.key_str(key) +
                                 ", expected=" + std::to_string(c) +
                                 ", got=" + std::to_string(product.coeff(key)) + ")";
            return report;
        }
    }
    for (const auto& [key, c] : product.terms()) {
        if (oracle.coeff(key) != c) {
            report.discrepancy = "first-discrepancy(key=" + product.key_str(key) +
                                 ", expected=0, got=" + std::to_string(c) + ")";
            return report;
        }
    }
    report.discrepancy = "tables differ";
    return report;
}

CheckReport verify_round_trip(const Partition& shape, int max_size) {
    CheckReport report = base_report("round-trip", shape, max_size);
    for (int n = 0; n <= max_size && report.ok; ++n) {
        enumerate_rpp(shape, n, [&](const ReversePlanePartition& rpp) {
            if (!report.ok) return;
            ++report.cases;
            const std::vector<RimHook> factors = lex_factorize(rpp);
            for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
                if (rim_hook_less(factors[i + 1], factors[i])) {
                    report.ok = false;
                    report.discrepancy = "factorization of size-" + std::to_string(n) +
                                         " filling is not weakly increasing";
                    return;
                }
            }
            if (build_rpp(shape, factors) != rpp) {
                report.ok = false;
                report.discrepancy = "rebuild mismatch on a size-" + std::to_string(n) +
                                     " filling";
            }
        });
    }
    return report;
}

CheckReport verify_factor_sizes(const Partition& shape, int max_size) {
    CheckReport report = base_report("factor-sizes", shape, max_size);
    for (int n = 0; n <= max_size && report.ok; ++n) {
        enumerate_rpp(shape, n, [&](const ReversePlanePartition& rpp) {
            if (!report.ok) return;
            ++report.cases;
            std::uint64_t total = 0;
            for (const RimHook& h : lex_factorize(rpp)) {
                total += static_cast<std::uint64_t>(h.cell_count());
            }
            if (total != rpp.size()) {
                report.ok = false;
                report.discrepancy = "first-discrepancy(degree=" + std::to_string(n) +
                                     ", expected=" + std::to_string(rpp.size()) +
                                     ", got=" + std::to_string(total) + ")";
            }
        });
    }
    return report;
}

CheckReport verify_trace_intervals(const Partition& shape, int max_size) {
    CheckReport report = base_report("trace-intervals", shape, max_size);
    for (int n = 0; n <= max_size && report.ok; ++n) {
        enumerate_rpp(shape, n, [&](const ReversePlanePartition& rpp) {
            if (!report.ok) return;
            ++report.cases;
            std::vector<Entry> sums(static_cast<std::size_t>(shape.diagonal_count()), 0);
            for (const RimHook& h : lex_factorize(rpp)) {
                for (int k = h.min_diagonal(); k <= h.max_diagonal(); ++k) {
                    sums[static_cast<std::size_t>(k - shape.min_content())] += 1;
                }
            }
            if (TraceVector(shape.min_content(), sums) != rpp.trace()) {
                report.ok = false;
                report.discrepancy = "factor content intervals do not add up to the trace of a "
                                     "size-" + std::to_string(n) + " filling";
            }
        });
    }
    return report;
}

std::vector<CheckReport> verify_shape(const Partition& shape, int max_size, bool with_trace,
                                      int threads) {
    std::vector<CheckReport> reports;
    reports.push_back(verify_size_series(shape, max_size, threads));
    reports.push_back(verify_round_trip(shape, max_size));
    reports.push_back(verify_factor_sizes(shape, max_size));
    if (with_trace) {
        reports.push_back(verify_trace_series(shape, max_size));
        reports.push_back(verify_trace_intervals(shape, max_size));
    }
    return reports;
}

}  // namespace rimhook
