#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "parityflow/bitvec.hpp"

namespace parityflow {

// Dense matrix over F2, one BitVec per row.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    BitVec& row(std::size_t i) { return rows_[i]; }
    const BitVec& row(std::size_t i) const { return rows_[i]; }
    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool b) { rows_[i].set(j, b); }
    bool operator==(const BitMatrix&) const = default;

    BitMatrix transposed() const;
    BitMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    bool is_zero() const;

    // Row-vector times matrix.
    BitVec left_mul(const BitVec& v) const;
    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);

    // Gauss-Jordan inverse; empty if singular or not square.
    std::optional<BitMatrix> inverse() const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

}  // namespace parityflow
