#include "homcon/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace homcon {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) >> 6), bits_(rows * wpr_, 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

std::size_t F2Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<std::uint64_t> work = bits_;
  auto row = [&](std::size_t i) { return work.data() + i * wpr_; };
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t w = col >> 6;
    std::uint64_t mask = std::uint64_t(1) << (col & 63);
    std::size_t pivot = r;
    while (pivot < rows_ && !(row(pivot)[w] & mask)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r)
      for (std::size_t k = 0; k < wpr_; ++k) std::swap(row(pivot)[k], row(r)[k]);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (row(i)[w] & mask)
        for (std::size_t k = w; k < wpr_; ++k) row(i)[k] ^= row(r)[k];
    }
    ++r;
  }
  return r;
}

F2Matrix F2Matrix::transposed() const {
  F2Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t w = 0; w < wpr_; ++w) {
      std::uint64_t word = bits_[i * wpr_ + w];
      while (word) {
        int b = std::countr_zero(word);
        word &= word - 1;
        out.set((w << 6) + b, i, true);
      }
    }
  return out;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("F2Matrix multiply: dimension mismatch (" +
                                std::to_string(cols_) + " vs " + std::to_string(rhs.rows_) + ")");
  F2Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t* dst = out.bits_.data() + i * out.wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) {
      std::uint64_t word = bits_[i * wpr_ + w];
      while (word) {
        int b = std::countr_zero(word);
        word &= word - 1;
        const std::uint64_t* src = rhs.bits_.data() + ((w << 6) + b) * rhs.wpr_;
        for (std::size_t k = 0; k < rhs.wpr_; ++k) dst[k] ^= src[k];
      }
    }
  }
  return out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("F2Matrix add: dimension mismatch");
  F2Matrix out = *this;
  for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] ^= rhs.bits_[k];
  return out;
}

bool F2Matrix::operator==(const F2Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && bits_ == rhs.bits_;
}

bool F2Matrix::is_zero() const {
  for (std::uint64_t w : bits_)
    if (w) return false;
  return true;
}

std::size_t F2Matrix::row_weight(std::size_t i) const {
  std::size_t n = 0;
  for (std::size_t w = 0; w < wpr_; ++w) n += std::popcount(bits_[i * wpr_ + w]);
  return n;
}

std::size_t F2Matrix::weight() const {
  std::size_t n = 0;
  for (std::uint64_t w : bits_) n += std::popcount(w);
  return n;
}

}  // namespace homcon
