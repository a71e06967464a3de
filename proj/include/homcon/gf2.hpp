#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace homcon {

// Dense matrix over GF(2), rows packed into 64-bit words. All operations are
// pure: rank() eliminates on a private copy, arithmetic returns new values.
// Immutable after construction in practice, so values are freely shareable
// across threads.
class F2Matrix {
public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);
  static F2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (j & 63);
    if (v)
      bits_[i * wpr_ + (j >> 6)] |= mask;
    else
      bits_[i * wpr_ + (j >> 6)] &= ~mask;
  }
  void flip(std::size_t i, std::size_t j) {
    bits_[i * wpr_ + (j >> 6)] ^= std::uint64_t(1) << (j & 63);
  }

  // GF(2) rank by word-parallel Gaussian elimination on a copy.
  std::size_t rank() const;

  F2Matrix transposed() const;
  F2Matrix operator*(const F2Matrix& rhs) const;  // throws on shape mismatch
  F2Matrix operator+(const F2Matrix& rhs) const;  // entrywise XOR
  bool operator==(const F2Matrix& rhs) const;
  bool is_zero() const;

  // Number of set entries in row i / in the whole matrix.
  std::size_t row_weight(std::size_t i) const;
  std::size_t weight() const;

private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;  // wpr_: words per row
  std::vector<std::uint64_t> bits_;
};

}  // namespace homcon
