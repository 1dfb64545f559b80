#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rimhook/partition.hpp"
#include "rimhook/rpp.hpp"

namespace rimhook {

using Coefficient = std::uint64_t;

/// A power series in one variable with nonnegative integer coefficients,
/// truncated after degree order(). All arithmetic is exact below the
/// truncation and throws std::overflow_error instead of wrapping.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order);  // the zero series
    static TruncatedSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Coefficient coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<Coefficient>& coeffs() const { return coeffs_; }
    void set_coeff(int n, Coefficient c) { coeffs_.at(static_cast<std::size_t>(n)) = c; }

    TruncatedSeries& add(const TruncatedSeries& other);
    TruncatedSeries multiplied(const TruncatedSeries& other) const;

    /// Multiplies by 1 / (1 - q^m) for m >= 1, via the in-place recurrence
    /// c_n += c_{n-m} taken in ascending n.
    TruncatedSeries& multiply_geometric(int m);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  private:
    std::vector<Coefficient> coeffs_;
};

/// Coefficients of prod over cells of 1 / (1 - q^{hook_length}) up to the
/// given order. By the size generating identity, coefficient n counts the
/// fillings of the shape with entry sum n.
TruncatedSeries hook_product(const Partition& shape, int order);

/// Exact number of fillings with entry sum n, by direct backtracking search.
/// Independent of hook_product; the two are each other's cross-check.
std::uint64_t count_rpp_by_size(const Partition& shape, int n);

/// Yields every filling with entry sum n in a fixed deterministic order.
void enumerate_rpp(const Partition& shape, int n,
                   const std::function<void(const ReversePlanePartition&)>& yield);

std::vector<ReversePlanePartition> list_rpp(const Partition& shape, int n);

/// A multivariate series graded by total degree: monomials in one variable per
/// diagonal of the shape, with nonnegative integer coefficients, truncated
/// above total degree max_degree(). Keys are fixed-length exponent vectors
/// over the shape's full diagonal range.
class TraceMonomialTable {
  public:
    using Exponents = std::vector<int>;

    /// Total degree first, then lexicographic.
    struct DegreeLexLess {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using Terms = std::map<Exponents, Coefficient, DegreeLexLess>;

    TraceMonomialTable(int min_diagonal, int diagonal_count, int max_degree);

    int min_diagonal() const { return min_diagonal_; }
    int diagonal_count() const { return diagonal_count_; }
    int max_degree() const { return max_degree_; }
    const Terms& terms() const { return terms_; }

    void add(const Exponents& key, Coefficient c);  // ignores keys above max_degree()
    Coefficient coeff(const Exponents& key) const;

    /// Multiplies by 1 / (1 - q^step) where q^step is the monomial with the
    /// given exponents (total degree >= 1 required).
    TraceMonomialTable& multiply_geometric(const Exponents& step);

    /// Sends every diagonal variable to the single variable q.
    TruncatedSeries specialize_to_size() const;

    /// Renders an exponent key as e.g. "q[-1]*q[2]^3"; "1" for the constant.
    std::string key_str(const Exponents& key) const;

    friend bool operator==(const TraceMonomialTable& a, const TraceMonomialTable& b) {
        return a.min_diagonal_ == b.min_diagonal_ && a.diagonal_count_ == b.diagonal_count_ &&
               a.max_degree_ == b.max_degree_ && a.terms_ == b.terms_;
    }

  private:
    int min_diagonal_ = 0;
    int diagonal_count_ = 0;
    int max_degree_ = 0;
    Terms terms_;
};

/// Expansion of prod over cells of 1 / (1 - q^{I(u)}) truncated at total
/// degree, where q^{I(u)} is the product of the diagonal variables on the
/// content interval covered by the cell's rim-hook.
TraceMonomialTable trace_product(const Partition& shape, int max_degree);

/// Sum of the trace monomials of every filling with entry sum at most
/// max_degree, via enumeration. Independent route to the same table as
/// trace_product.
TraceMonomialTable trace_sum_over_rpp(const Partition& shape, int max_degree);

}  // namespace rimhook
