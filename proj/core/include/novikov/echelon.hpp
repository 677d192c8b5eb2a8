#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "novikov/rational.hpp"

namespace novikov {

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Fully reduced row echelon basis of a subspace of Q^dim, grown one vector at a time.
/// Every stored row has a 1 at its pivot and 0 at every other pivot column.
class EchelonBasis {
public:
    EchelonBasis() = default;
    explicit EchelonBasis(std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] const SparseRow& row(std::size_t i) const { return rows_[i]; }
    [[nodiscard]] std::uint32_t pivot(std::size_t i) const { return pivots_[i]; }
    [[nodiscard]] std::optional<std::size_t> row_with_pivot(std::uint32_t col) const;
    [[nodiscard]] Rational entry(std::size_t i, std::uint32_t col) const;

    /// Reduces `v` in place to its normal form modulo the span.
    void reduce(std::vector<Rational>& v) const;
    [[nodiscard]] bool contains(std::vector<Rational> v) const;
    /// Returns true when the rank grew.
    bool insert(std::vector<Rational> v);
    bool insert(const SparseRow& v);

    [[nodiscard]] std::vector<std::vector<Rational>> dense_rows() const;

private:
    std::size_t dim_ = 0;
    std::vector<SparseRow> rows_;
    std::vector<std::uint32_t> pivots_;
    std::vector<std::int32_t> pivot_row_;
};

} // namespace novikov
