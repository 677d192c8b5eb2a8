#include "novikov/matrix.hpp"

#include <bit>
#include <cstdint>

namespace novikov {

RrefResult rref(RationalMatrix m) {
    RrefResult out;
    std::size_t lead_row = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
        std::size_t p = lead_row;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != lead_row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(lead_row, j));
        Rational inv = m(lead_row, c).inverse();
        for (std::size_t j = c; j < cols; ++j) m(lead_row, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead_row || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (!m(lead_row, j).is_zero()) m(i, j).sub_mul(f, m(lead_row, j));
            }
        }
        out.pivots.push_back(c);
        ++lead_row;
    }
    out.rank = lead_row;
    out.reduced = RationalMatrix(lead_row, cols);
    for (std::size_t i = 0; i < lead_row; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.reduced(i, j) = m(i, j);
    return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

RationalMatrix nullspace(const RationalMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    RationalMatrix basis(0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = Rational(1);
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
        basis.append_row(v);
    }
    return basis;
}

Rational determinant(RationalMatrix m) {
    if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Rational inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j).sub_mul(f, m(c, j));
        }
    }
    return det;
}

ParamPoly poly_det(const PolyMatrix& m) {
    if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n > kPolyDetMaxSize) {
        throw ResourceError("poly_det supports size <= " + std::to_string(kPolyDetMaxSize));
    }
    if (n == 0) return ParamPoly(1);
    // minor[S] = det of rows 0..|S|-1 restricted to the column subset S.
    std::vector<ParamPoly> minor(std::size_t{1} << n);
    minor[0] = ParamPoly(1);
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
        const int r = std::popcount(s) - 1;
        ParamPoly acc;
        int sign_pos = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if ((s & (1U << c)) == 0) continue;
            const std::uint32_t rest = s & ~(1U << c);
            if (!m(static_cast<std::size_t>(r), c).is_zero() && !minor[rest].is_zero()) {
                ParamPoly t = m(static_cast<std::size_t>(r), c) * minor[rest];
                if ((r + sign_pos) % 2 == 0) acc += t;
                else acc -= t;
            }
            ++sign_pos;
        }
        minor[s] = std::move(acc);
    }
    return minor[(std::size_t{1} << n) - 1];
}

RationalMatrix specialize(const PolyMatrix& m, const ParamAssignment& values) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(values);
    return r;
}

} // namespace novikov
