#include "rimhook/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "detail/checked.hpp"

namespace rimhook {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries& TruncatedSeries::add(const TruncatedSeries& other) {
    if (other.order() != order()) throw std::invalid_argument("series orders differ");
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] = detail::add_checked(coeffs_[n], other.coeffs_[n]);
    }
    return *this;
}

TruncatedSeries TruncatedSeries::multiplied(const TruncatedSeries& other) const {
    if (other.order() != order()) throw std::invalid_argument("series orders differ");
    TruncatedSeries out(order());
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a] == 0) continue;
        for (std::size_t b = 0; a + b < coeffs_.size(); ++b) {
            out.coeffs_[a + b] = detail::add_checked(
                out.coeffs_[a + b], detail::mul_checked(coeffs_[a], other.coeffs_[b]));
        }
    }
    return out;
}

TruncatedSeries& TruncatedSeries::multiply_geometric(int m) {
    if (m < 1) throw std::invalid_argument("geometric factor step must be positive");
    for (std::size_t n = static_cast<std::size_t>(m); n < coeffs_.size(); ++n) {
        coeffs_[n] = detail::add_checked(coeffs_[n], coeffs_[n - static_cast<std::size_t>(m)]);
    }
    return *this;
}

TruncatedSeries hook_product(const Partition& shape, int order) {
    TruncatedSeries out = TruncatedSeries::one(order);
    for (Cell u : shape.cells()) out.multiply_geometric(shape.hook_length(u));
    return out;
}

namespace {

// Backtracking enumeration of fillings with a fixed entry sum. Cells are
// assigned in column-major order (reverse lexicographic, from the maximum
// down), so each cell's West and North neighbours are already fixed and give
// its lower bound. Partial assignments are pruned when the forced minima of
// the free cells exceed the remaining budget; each leftover budget unit can
// always be absorbed by the final cell, so the search never dead-ends.
class RppEnumerator {
  public:
    RppEnumerator(const Partition& shape, int target,
                  const std::function<void(const ReversePlanePartition&)>& yield)
        : shape_(shape), target_(target), yield_(yield) {
        const int columns = shape.empty() ? 0 : shape.part(1);
        positions_.reserve(shape_.cell_count());
        col_starts_.assign(static_cast<std::size_t>(columns) + 1, 0);
        for (int c = 1; c <= columns; ++c) {
            col_starts_[static_cast<std::size_t>(c - 1)] = positions_.size();
            for (int r = 1; r <= shape_.conjugate_part(c); ++r) {
                positions_.push_back({r, c});
            }
        }
        col_starts_.back() = positions_.size();
        values_.assign(positions_.size(), 0);
        minima_.assign(positions_.size(), 0);
    }

    void run() {
        if (target_ < 0) return;
        descend(0, 0);
    }

  private:
    std::size_t index_of(Cell u) const {
        return col_starts_[static_cast<std::size_t>(u.col - 1)] +
               static_cast<std::size_t>(u.row - 1);
    }

    // West and North neighbours always precede their cell in column-major
    // order, so values below an index are already decided.
    Entry decided(Cell u, std::size_t limit, std::size_t from) const {
        if (u.row < 1 || u.col < 1) return 0;
        const std::size_t idx = index_of(u);
        if (idx >= limit) return 0;
        return idx < from ? values_[idx] : minima_[idx];
    }

    // Sum of the forced minima of cells from `from` on, given values_[0..from).
    long long forced_remainder(std::size_t from) {
        long long total = 0;
        for (std::size_t k = from; k < positions_.size(); ++k) {
            const Cell u = positions_[k];
            minima_[k] = std::max(decided(u.west(), k, from), decided(u.north(), k, from));
            total += minima_[k];
        }
        return total;
    }

    void descend(std::size_t k, long long sum) {
        if (k == positions_.size()) {
            if (sum == target_) emit();
            return;
        }
        const Cell u = positions_[k];
        const Entry lower = std::max(decided(u.west(), k, k), decided(u.north(), k, k));
        for (Entry v = lower;; ++v) {
            values_[k] = v;
            const long long rest = forced_remainder(k + 1);
            if (sum + v + rest > target_) break;
            descend(k + 1, sum + v);
        }
    }

    void emit() {
        Grid grid(static_cast<std::size_t>(shape_.length()));
        for (int i = 1; i <= shape_.length(); ++i) {
            grid[static_cast<std::size_t>(i - 1)].resize(
                static_cast<std::size_t>(shape_.part(i)));
        }
        for (std::size_t k = 0; k < positions_.size(); ++k) {
            const Cell u = positions_[k];
            grid[static_cast<std::size_t>(u.row - 1)][static_cast<std::size_t>(u.col - 1)] =
                values_[k];
        }
        yield_(ReversePlanePartition::validated(shape_, grid));
    }

    const Partition& shape_;
    const int target_;
    const std::function<void(const ReversePlanePartition&)>& yield_;
    std::vector<Cell> positions_;
    std::vector<std::size_t> col_starts_;
    std::vector<Entry> values_;
    std::vector<Entry> minima_;
};

}  // namespace

void enumerate_rpp(const Partition& shape, int n,
                   const std::function<void(const ReversePlanePartition&)>& yield) {
    RppEnumerator(shape, n, yield).run();
}

std::vector<ReversePlanePartition> list_rpp(const Partition& shape, int n) {
    std::vector<ReversePlanePartition> out;
    enumerate_rpp(shape, n, [&](const ReversePlanePartition& rpp) { out.push_back(rpp); });
    return out;
}

std::uint64_t count_rpp_by_size(const Partition& shape, int n) {
    std::uint64_t count = 0;
    enumerate_rpp(shape, n, [&](const ReversePlanePartition&) { ++count; });
    return count;
}

bool TraceMonomialTable::DegreeLexLess::operator()(const Exponents& a,
                                                   const Exponents& b) const {
    const long long da = std::accumulate(a.begin(), a.end(), 0LL);
    const long long db = std::accumulate(b.begin(), b.end(), 0LL);
    if (da != db) return da < db;
    return a < b;
}

TraceMonomialTable::TraceMonomialTable(int min_diagonal, int diagonal_count, int max_degree)
    : min_diagonal_(min_diagonal), diagonal_count_(diagonal_count), max_degree_(max_degree) {
    if (diagonal_count < 0 || max_degree < 0) {
        throw std::invalid_argument("diagonal count and degree bound must be nonnegative");
    }
}

void TraceMonomialTable::add(const Exponents& key, Coefficient c) {
    if (static_cast<int>(key.size()) != diagonal_count_) {
        throw std::invalid_argument("exponent vector has the wrong length");
    }
    const long long degree = std::accumulate(key.begin(), key.end(), 0LL);
    if (degree > max_degree_) return;
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, 0);
    it->second = detail::add_checked(it->second, c);
}

Coefficient TraceMonomialTable::coeff(const Exponents& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
}

TraceMonomialTable& TraceMonomialTable::multiply_geometric(const Exponents& step) {
    if (static_cast<int>(step.size()) != diagonal_count_) {
        throw std::invalid_argument("exponent vector has the wrong length");
    }
    if (std::accumulate(step.begin(), step.end(), 0LL) < 1) {
        throw std::invalid_argument("geometric factor step must have positive degree");
    }
    // Keys are visited in ascending total degree; each propagated key is
    // strictly larger, so it is reached later in the same sweep and the
    // geometric series accumulates exactly, as in the univariate recurrence.
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        Exponents next = it->first;
        long long degree = 0;
        for (std::size_t d = 0; d < next.size(); ++d) {
            next[d] += step[d];
            degree += next[d];
        }
        if (degree > max_degree_) continue;
        auto [pos, inserted] = terms_.try_emplace(std::move(next), 0);
        pos->second = detail::add_checked(pos->second, it->second);
    }
    return *this;
}

TruncatedSeries TraceMonomialTable::specialize_to_size() const {
    TruncatedSeries out(max_degree_);
    for (const auto& [key, c] : terms_) {
        const long long degree = std::accumulate(key.begin(), key.end(), 0LL);
        out.set_coeff(static_cast<int>(degree),
                      detail::add_checked(out.coeff(static_cast<int>(degree)), c));
    }
    return out;
}

std::string TraceMonomialTable::key_str(const Exponents& key) const {
    std::string out;
    for (std::size_t d = 0; d < key.size(); ++d) {
        if (key[d] == 0) continue;
        if (!out.empty()) out += '*';
        out += "q[" + std::to_string(min_diagonal_ + static_cast<int>(d)) + "]";
        if (key[d] != 1) out += "^" + std::to_string(key[d]);
    }
    return out.empty() ? "1" : out;
}

TraceMonomialTable trace_product(const Partition& shape, int max_degree) {
    TraceMonomialTable table(shape.min_content(), shape.diagonal_count(), max_degree);
    table.add(TraceMonomialTable::Exponents(
                  static_cast<std::size_t>(shape.diagonal_count()), 0),
              1);
    for (Cell u : shape.cells()) {
        // The rim-hook of (i,j) covers the content interval
        // [j - conjugate_part(j), part(i) - i].
        const int lo = u.col - shape.conjugate_part(u.col);
        const int hi = shape.part(u.row) - u.row;
        TraceMonomialTable::Exponents step(static_cast<std::size_t>(shape.diagonal_count()), 0);
        for (int k = lo; k <= hi; ++k) {
            step[static_cast<std::size_t>(k - shape.min_content())] = 1;
        }
        table.multiply_geometric(step);
    }
    return table;
}

TraceMonomialTable trace_sum_over_rpp(const Partition& shape, int max_degree) {
    TraceMonomialTable table(shape.min_content(), shape.diagonal_count(), max_degree);
    for (int n = 0; n <= max_degree; ++n) {
        enumerate_rpp(shape, n, [&](const ReversePlanePartition& rpp) {
            const TraceVector trace = rpp.trace();
            TraceMonomialTable::Exponents key(
                static_cast<std::size_t>(shape.diagonal_count()), 0);
            for (std::size_t d = 0; d < key.size(); ++d) {
                key[d] = static_cast<int>(trace.sums()[d]);
            }
            table.add(key, 1);
        });
    }
    return table;
}

}  // namespace rimhook
