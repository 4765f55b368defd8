#pragma once

#include <cstdint>
#include <vector>

#include "constakit/field.hpp"

namespace constakit {

// Dense row-major matrix of packed field values.
class FMatrix {
  public:
    FMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
        if (!field_) fail(errc::bad_argument, "matrix requires a field");
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint32_t v) { a_[i * cols_ + j] = v; }

    bool is_zero() const {
        for (auto v : a_) {
            if (v != 0) return false;
        }
        return true;
    }

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

// In-place reduced row echelon form; returns the rank.
std::size_t row_reduce(FMatrix& m);

std::size_t rank(const FMatrix& m);

// G * G^T
FMatrix gram(const FMatrix& g);

// Row basis of { v : G v^T = 0 }, (cols - rank) rows.
FMatrix nullspace(const FMatrix& g);

}  // namespace constakit
