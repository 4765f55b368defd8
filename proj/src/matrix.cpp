#include "constakit/matrix.hpp"

namespace constakit {

std::size_t row_reduce(FMatrix& m) {
    const FieldSpec& F = *m.field();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pivot_row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::uint32_t tmp = m.at(sel, j);
                m.set(sel, j, m.at(pivot_row, j));
                m.set(pivot_row, j, tmp);
            }
        }
        std::uint32_t inv = F.inv(m.at(pivot_row, col));
        for (std::size_t j = col; j < m.cols(); ++j) {
            m.set(pivot_row, j, F.mul(m.at(pivot_row, j), inv));
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row) continue;
            std::uint32_t factor = m.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < m.cols(); ++j) {
                m.set(i, j, F.sub(m.at(i, j), F.mul(factor, m.at(pivot_row, j))));
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t rank(const FMatrix& m) {
    FMatrix copy = m;
    return row_reduce(copy);
}

FMatrix gram(const FMatrix& g) {
    const FieldSpec& F = *g.field();
    FMatrix out(g.field(), g.rows(), g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t k = i; k < g.rows(); ++k) {
            std::uint32_t acc = 0;
            for (std::size_t j = 0; j < g.cols(); ++j) {
                acc = F.add(acc, F.mul(g.at(i, j), g.at(k, j)));
            }
            out.set(i, k, acc);
            out.set(k, i, acc);
        }
    }
    return out;
}

FMatrix nullspace(const FMatrix& g) {
    const FieldSpec& F = *g.field();
    FMatrix red = g;
    std::size_t rk = row_reduce(red);

    std::vector<std::size_t> pivot_col_of_row(rk);
    std::vector<bool> is_pivot(red.cols(), false);
    for (std::size_t i = 0, col = 0; i < rk; ++i) {
        while (col < red.cols() && red.at(i, col) == 0) ++col;
        pivot_col_of_row[i] = col;
        is_pivot[col] = true;
    }

    FMatrix out(g.field(), red.cols() - rk, red.cols());
    std::size_t row = 0;
    for (std::size_t free_col = 0; free_col < red.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        out.set(row, free_col, 1);
        for (std::size_t i = 0; i < rk; ++i) {
            out.set(row, pivot_col_of_row[i], F.neg(red.at(i, free_col)));
        }
        ++row;
    }
    return out;
}

}  // namespace constakit
