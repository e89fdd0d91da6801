#ifndef AWTC_BITLINALG_HPP
#define AWTC_BITLINALG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace awtc {

/// Dense bit vector over GF(2), packed into 64-bit words.
/// Bit 0 is the first coordinate; to_uint() treats bit 0 as the LSB.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}
    static BitVector from_uint(std::uint64_t value, std::size_t len);
    static BitVector from_string(const std::string& bits);  // e.g. "0110"

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }
    bool operator==(const BitVector& o) const { return len_ == o.len_ && words_ == o.words_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }
    bool operator<(const BitVector& o) const;  // lexicographic on bits, for deterministic ordering

    bool is_zero() const;
    std::size_t weight() const;  // popcount
    std::uint64_t to_uint() const;
    std::string to_string() const;

    /// Parity of <*this, o> over GF(2).
    bool dot(const BitVector& o) const;

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

std::size_t hamming_distance(const BitVector& a, const BitVector& b);

/// Dense GF(2) matrix, stored as one BitVector per row.
/// Treated as immutable after construction.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}
    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVector>& rows);
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }
    const BitVector& row(std::size_t r) const { return data_[r]; }
    void set_row(std::size_t r, const BitVector& v);
    BitVector column(std::size_t c) const;

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    BitMatrix transposed() const;
    /// Vertical stack [this; below].
    BitMatrix stacked(const BitMatrix& below) const;

    /// Matrix text format: first line "rows cols", then rows of 0/1 characters.
    std::string to_text() const;
    static BitMatrix from_text(const std::string& text);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> data_;
};

/// v * M over GF(2); v has length M.rows().
BitVector vec_mat_mul(const BitVector& v, const BitMatrix& m);

/// GF(2) rank, via deterministic elimination (leftmost pivot, topmost row).
std::size_t rank(const BitMatrix& m);

/// rows(m) - rank(m): dimension of {v : v*M = 0}.
std::size_t nullity(const BitMatrix& m);

/// Submatrix with the columns in `cols` (0-based, strictly increasing), in order.
BitMatrix select_columns(const BitMatrix& m, const std::vector<int>& cols);

/// Exact number of v with v*A = b: 0 if unsolvable, else 2^nullity(A).
std::uint64_t count_solutions(const BitMatrix& a, const BitVector& b);

/// Some v with v*A = b, or nullopt if none exists.
std::optional<BitVector> solve_one(const BitMatrix& a, const BitVector& b);

/// Basis of {v : v*A = 0}; each vector has length A.rows().
std::vector<BitVector> kernel_basis(const BitMatrix& a);

/// A smallest set (0-based column indices, increasing) of at most `budget`
/// columns of m that sums to zero over GF(2), found by weight-ordered
/// exhaustive search; nullopt if none exists within budget.
/// Caller bounds instance size (intended for cols <= 24, budget <= 8).
std::optional<std::vector<int>> min_dependent_columns(const BitMatrix& m, std::size_t budget);

}  // namespace awtc

#endif
