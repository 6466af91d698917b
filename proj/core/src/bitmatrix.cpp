#include "parityflow/bitmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace parityflow {

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i) rows_[i].for_each_set([&](std::size_t j) { t.set(j, i, true); });
    return t;
}

BitMatrix BitMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    BitMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b.set(i, j, get(r0 + i, c0 + j));
    return b;
}

bool BitMatrix::is_zero() const {
    for (const auto& r : rows_)
        if (r.any()) return false;
    return true;
}

BitVec BitMatrix::left_mul(const BitVec& v) const {
    if (v.size() != rows()) throw std::invalid_argument("vector/matrix dimension mismatch");
    BitVec out(cols_);
    v.for_each_set([&](std::size_t i) { out ^= rows_[i]; });
    return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) c.row(i) = b.left_mul(a.row(i));
    return c;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
    std::size_t n = rows();
    if (n != cols_) return std::nullopt;
    BitMatrix m = *this;
    BitMatrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !m.get(p, c)) ++p;
        if (p == n) return std::nullopt;
        std::swap(m.rows_[p], m.rows_[c]);
        std::swap(inv.rows_[p], inv.rows_[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && m.get(r, c)) {
                m.rows_[r] ^= m.rows_[c];
                inv.rows_[r] ^= inv.rows_[c];
            }
        }
    }
    return inv;
}

}  // namespace parityflow
