#include "novikov/echelon.hpp"

#include <algorithm>

#include "novikov/errors.hpp"

namespace novikov {

EchelonBasis::EchelonBasis(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

std::optional<std::size_t> EchelonBasis::row_with_pivot(std::uint32_t col) const {
    if (col >= dim_ || pivot_row_[col] < 0) return std::nullopt;
    return static_cast<std::size_t>(pivot_row_[col]);
}

Rational EchelonBasis::entry(std::size_t i, std::uint32_t col) const {
    const auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, std::uint32_t c) { return e.first < c; });
    if (it == r.end() || it->first != col) return Rational(0);
    return it->second;
}

void EchelonBasis::reduce(std::vector<Rational>& v) const {
    if (v.size() != dim_) throw ShapeError("echelon reduce: vector length mismatch");
    for (std::uint32_t j = 0; j < dim_; ++j) {
        if (v[j].is_zero() || pivot_row_[j] < 0) continue;
        const Rational c = v[j];
        for (const auto& [col, val] : rows_[static_cast<std::size_t>(pivot_row_[j])]) v[col].sub_mul(c, val);
    }
}

bool EchelonBasis::contains(std::vector<Rational> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

bool EchelonBasis::insert(const SparseRow& v) {
    std::vector<Rational> d(dim_);
    for (const auto& [c, x] : v) d[c] += x;
    return insert(std::move(d));
}

bool EchelonBasis::insert(std::vector<Rational> v) {
    reduce(v);
    std::uint32_t q = 0;
    while (q < dim_ && v[q].is_zero()) ++q;
    if (q == dim_) return false;
    const Rational inv = v[q].inverse();
    SparseRow fresh;
    for (std::uint32_t j = q; j < dim_; ++j) {
        if (!v[j].is_zero()) fresh.emplace_back(j, v[j] * inv);
    }
    for (auto& r : rows_) {
        auto it = std::lower_bound(r.begin(), r.end(), q,
                                   [](const auto& e, std::uint32_t c) { return e.first < c; });
        if (it == r.end() || it->first != q) continue;
        const Rational c = it->second;
        SparseRow merged;
        merged.reserve(r.size() + fresh.size());
        auto a = r.begin();
        auto b = fresh.begin();
        while (a != r.end() || b != fresh.end()) {
            if (b == fresh.end() || (a != r.end() && a->first < b->first)) {
                merged.push_back(*a++);
            } else if (a == r.end() || b->first < a->first) {
                merged.emplace_back(b->first, -(c * b->second));
                ++b;
            } else {
                Rational x = a->second;
                x.sub_mul(c, b->second);
                if (!x.is_zero()) merged.emplace_back(a->first, std::move(x));
                ++a;
                ++b;
            }
        }
        r = std::move(merged);
    }
    pivot_row_[q] = static_cast<std::int32_t>(rows_.size());
    pivots_.push_back(q);
    rows_.push_back(std::move(fresh));
    return true;
}

std::vector<std::vector<Rational>> EchelonBasis::dense_rows() const {
    std::vector<std::vector<Rational>> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
        std::vector<Rational> d(dim_);
        for (const auto& [c, x] : r) d[c] = x;
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace novikov
