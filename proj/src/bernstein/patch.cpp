#include "hankel/bernstein/patch.hpp"

#include <stdexcept>
#include <vector>

namespace hankel::bernstein {

Box::Box(Rational plo, Rational phi, Rational xlo, Rational xhi)
    : p_lo(std::move(plo)), p_hi(std::move(phi)), x_lo(std::move(xlo)), x_hi(std::move(xhi)) {
    if (!(p_lo < p_hi) || !(x_lo < x_hi)) {
        throw std::invalid_argument("Box: requires p_lo < p_hi and x_lo < x_hi, got " + to_string());
    }
}

std::array<Box, 4> Box::quadrants() const {
    const Rational pm = p_mid();
    const Rational xm = x_mid();
    return {Box(p_lo, pm, x_lo, xm), Box(p_lo, pm, xm, x_hi), Box(pm, p_hi, x_lo, xm), Box(pm, p_hi, xm, x_hi)};
}

std::string Box::to_string() const {
    return "[" + p_lo.to_string() + "," + p_hi.to_string() + "]x[" + x_lo.to_string() + "," + x_hi.to_string() +
           "]";
}

BernsteinPatch to_bernstein(const BiPoly& f, const Box& box) { return to_bernstein(f, box, f.deg_p(), f.deg_x()); }

BernsteinPatch to_bernstein(const BiPoly& f, const Box& box, std::size_t m, std::size_t n) {
    const BiPoly g = f.with_bidegree(m, n).substitute_affine(box.p_lo, box.p_width(), box.x_lo, box.x_width());
    // b_ij = sum_{k<=i, l<=j} C(i,k) C(j,l) / (C(m,k) C(n,l)) a_kl
    BernsteinPatch patch{box, RationalMatrix(m + 1, n + 1)};
    std::vector<Rational> row_weight((m + 1) * (m + 1));
    std::vector<Rational> col_weight((n + 1) * (n + 1));
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t k = 0; k <= i; ++k) {
            row_weight[i * (m + 1) + k] =
                binomial(static_cast<unsigned>(i), static_cast<unsigned>(k)) /
                binomial(static_cast<unsigned>(m), static_cast<unsigned>(k));
        }
    }
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t l = 0; l <= j; ++l) {
            col_weight[j * (n + 1) + l] =
                binomial(static_cast<unsigned>(j), static_cast<unsigned>(l)) /
                binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
        }
    }
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            Rational acc;
            for (std::size_t k = 0; k <= i; ++k) {
                for (std::size_t l = 0; l <= j; ++l) {
                    const Rational& a = g.matrix()(k, l);
                    if (!a.is_zero()) acc += row_weight[i * (m + 1) + k] * col_weight[j * (n + 1) + l] * a;
                }
            }
            patch.bcoeffs(i, j) = acc;
        }
    }
    return patch;
}

Enclosure enclosure(const BernsteinPatch& patch) {
    const auto& d = patch.bcoeffs.data();
    Enclosure e{d.front(), d.front()};
    for (const auto& v : d) {
        if (v < e.min) e.min = v;
        if (e.max < v) e.max = v;
    }
    return e;
}

namespace {

/// de Casteljau split of one coefficient sequence at t = 1/2.
void split_half(const std::vector<Rational>& in, std::vector<Rational>& left, std::vector<Rational>& right) {
    const std::size_t deg = in.size() - 1;
    std::vector<Rational> work = in;
    left.assign(deg + 1, Rational());
    right.assign(deg + 1, Rational());
    const Rational half(1, 2);
    left[0] = work[0];
    right[deg] = work[deg];
    for (std::size_t r = 1; r <= deg; ++r) {
        for (std::size_t k = 0; k + r <= deg; ++k) work[k] = (work[k] + work[k + 1]) * half;
        left[r] = work[0];
        right[deg - r] = work[deg - r];
    }
}

/// Splits the matrix along rows (p direction).
std::array<RationalMatrix, 2> split_rows(const RationalMatrix& b) {
    const std::size_t rows = b.rows();
    const std::size_t cols = b.cols();
    std::array<RationalMatrix, 2> out{RationalMatrix(rows, cols), RationalMatrix(rows, cols)};
    std::vector<Rational> col(rows);
    std::vector<Rational> lo;
    std::vector<Rational> hi;
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) col[i] = b(i, j);
        split_half(col, lo, hi);
        for (std::size_t i = 0; i < rows; ++i) {
            out[0](i, j) = lo[i];
            out[1](i, j) = hi[i];
        }
    }
    return out;
}

/// Splits the matrix along columns (x direction).
std::array<RationalMatrix, 2> split_cols(const RationalMatrix& b) {
    const std::size_t rows = b.rows();
    const std::size_t cols = b.cols();
    std::array<RationalMatrix, 2> out{RationalMatrix(rows, cols), RationalMatrix(rows, cols)};
    std::vector<Rational> row(cols);
    std::vector<Rational> lo;
    std::vector<Rational> hi;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) row[j] = b(i, j);
        split_half(row, lo, hi);
        for (std::size_t j = 0; j < cols; ++j) {
            out[0](i, j) = lo[j];
            out[1](i, j) = hi[j];
        }
    }
    return out;
}

}  // namespace

std::array<BernsteinPatch, 4> subdivide(const BernsteinPatch& patch) {
    const auto boxes = patch.box.quadrants();
    const auto p_halves = split_rows(patch.bcoeffs);
    const auto lo = split_cols(p_halves[0]);
    const auto hi = split_cols(p_halves[1]);
    return {BernsteinPatch{boxes[0], lo[0]}, BernsteinPatch{boxes[1], lo[1]}, BernsteinPatch{boxes[2], hi[0]},
            BernsteinPatch{boxes[3], hi[1]}};
}

Rational evaluate(const BernsteinPatch& patch, const Rational& p, const Rational& x) {
    if (!patch.box.contains(p, x)) {
        throw std::invalid_argument("evaluate: point outside patch box " + patch.box.to_string());
    }
    const Rational u = (p - patch.box.p_lo) / patch.box.p_width();
    const Rational v = (x - patch.box.x_lo) / patch.box.x_width();
    const std::size_t m = patch.deg_p();
    const std::size_t n = patch.deg_x();
    auto basis = [](std::size_t deg, const Rational& t) {
        std::vector<Rational> b(deg + 1);
        const Rational s = Rational(1) - t;
        for (std::size_t k = 0; k <= deg; ++k) {
            b[k] = binomial(static_cast<unsigned>(deg), static_cast<unsigned>(k)) *
                   pow(t, static_cast<unsigned>(k)) * pow(s, static_cast<unsigned>(deg - k));
        }
        return b;
    };
    const auto bu = basis(m, u);
    const auto bv = basis(n, v);
    Rational acc;
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= n; ++j) acc += patch.bcoeffs(i, j) * bu[i] * bv[j];
    }
    return acc;
}

Rational bound_above(const BiPoly& f, const Box& box, int depth) {
    if (depth < 0) {
        throw std::invalid_argument("bound_above: depth must be nonnegative");
    }
    std::vector<BernsteinPatch> level{to_bernstein(f, box)};
    for (int d = 0; d < depth; ++d) {
        std::vector<BernsteinPatch> next;
        next.reserve(level.size() * 4);
        for (const auto& patch : level) {
            for (auto& child : subdivide(patch)) next.push_back(std::move(child));
        }
        level = std::move(next);
    }
    Rational best = enclosure(level.front()).max;
    for (const auto& patch : level) best = max(best, enclosure(patch).max);
    return best;
}

}  // namespace hankel::bernstein
