#include "awtc/bitlinalg.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace awtc {

BitVector BitVector::from_uint(std::uint64_t value, std::size_t len) {
    if (len < 64 && len > 0 && (value >> len) != 0)
        throw std::invalid_argument("BitVector::from_uint: value does not fit in len bits");
    BitVector v(len);
    if (len > 0) v.words_[0] = len >= 64 ? value : (value & ((std::uint64_t{1} << len) - 1));
    return v;
}

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i, true);
        else if (bits[i] != '0') throw std::invalid_argument("BitVector::from_string: expected 0/1");
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

bool BitVector::operator<(const BitVector& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    for (std::size_t i = 0; i < len_; ++i) {
        bool a = get(i), b = o.get(i);
        if (a != b) return b;
    }
    return false;
}

bool BitVector::is_zero() const {
    for (auto w : words_) if (w != 0) return false;
    return true;
}

std::size_t BitVector::weight() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

std::uint64_t BitVector::to_uint() const {
    if (len_ > 64) throw std::length_error("BitVector::to_uint: longer than 64 bits");
    return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) if (get(i)) s[i] = '1';
    return s;
}

bool BitVector::dot(const BitVector& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVector dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1;
}

std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
    return (a ^ b).weight();
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].set(i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
    BitMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != m.cols_) throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
    m.data_ = rows;
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<BitVector> vs;
    vs.reserve(rows.size());
    for (const auto& s : rows) vs.push_back(BitVector::from_string(s));
    return from_rows(vs);
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: length mismatch");
    data_[r] = v;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.set(r, data_[r].get(c));
    return v;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (data_[r].get(c)) t.data_[c].set(r, true);
    return t;
}

BitMatrix BitMatrix::stacked(const BitMatrix& below) const {
    if (cols_ != below.cols_) throw std::invalid_argument("BitMatrix::stacked: column mismatch");
    std::vector<BitVector> rows = data_;
    rows.insert(rows.end(), below.data_.begin(), below.data_.end());
    return from_rows(rows);
}

std::string BitMatrix::to_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) os << data_[r].to_string() << '\n';
    return os.str();
}

BitMatrix BitMatrix::from_text(const std::string& text) {
    std::istringstream is(text);
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw std::invalid_argument("matrix text: missing header");
    std::vector<std::string> lines;
    lines.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string line;
        if (!(is >> line) || line.size() != cols)
            throw std::invalid_argument("matrix text: bad row");
        lines.push_back(line);
    }
    return from_strings(lines);
}

BitVector vec_mat_mul(const BitVector& v, const BitMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vec_mat_mul: dimension mismatch");
    BitVector out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (v.get(r)) out ^= m.row(r);
    return out;
}

namespace {

// Row echelon form in place. Deterministic: scans columns left to right,
// picks the topmost unused row with a 1 in the pivot column, and clears the
// column in all other rows (reduced form). Returns pivot (col, row) pairs.
struct Echelon {
    std::vector<BitVector> rows;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (col, row index in `rows`)
};

Echelon echelon_form(std::vector<BitVector> rows, std::size_t cols) {
    Echelon e;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t p = next;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[next], rows[p]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
        e.pivots.emplace_back(c, next);
        ++next;
    }
    e.rows = std::move(rows);
    return e;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return echelon_form(std::move(rows), m.cols()).pivots.size();
}

std::size_t nullity(const BitMatrix& m) { return m.rows() - rank(m); }

BitMatrix select_columns(const BitMatrix& m, const std::vector<int>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] < 0 || static_cast<std::size_t>(cols[i]) >= m.cols())
            throw std::out_of_range("select_columns: column index out of range");
        if (i > 0 && cols[i] <= cols[i - 1])
            throw std::invalid_argument("select_columns: indices must be strictly increasing");
    }
    BitMatrix out(m.rows(), cols.size());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (m.get(r, cols[j])) out.set(r, j, true);
    return out;
}

namespace {

// Echelon form of A's rows augmented with combination tracking: each kept row
// equals comb * A for the recorded combination over the original rows.
struct TrackedEchelon {
    std::vector<BitVector> rows;   // reduced rows, length = A.cols()
    std::vector<BitVector> combs;  // matching combinations, length = A.rows()
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

TrackedEchelon tracked_echelon(const BitMatrix& a) {
    TrackedEchelon e;
    e.rows.reserve(a.rows());
    e.combs.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        e.rows.push_back(a.row(r));
        BitVector c(a.rows());
        c.set(r, true);
        e.combs.push_back(c);
    }
    std::size_t next = 0;
    for (std::size_t c = 0; c < a.cols() && next < e.rows.size(); ++c) {
        std::size_t p = next;
        while (p < e.rows.size() && !e.rows[p].get(c)) ++p;
        if (p == e.rows.size()) continue;
        std::swap(e.rows[next], e.rows[p]);
        std::swap(e.combs[next], e.combs[p]);
        for (std::size_t r = 0; r < e.rows.size(); ++r)
            if (r != next && e.rows[r].get(c)) {
                e.rows[r] ^= e.rows[next];
                e.combs[r] ^= e.combs[next];
            }
        e.pivots.emplace_back(c, next);
        ++next;
    }
    return e;
}

}  // namespace

std::uint64_t count_solutions(const BitMatrix& a, const BitVector& b) {
    if (b.size() != a.cols()) throw std::invalid_argument("count_solutions: dimension mismatch");
    auto sol = solve_one(a, b);
    if (!sol) return 0;
    std::size_t nul = nullity(a);
    if (nul >= 64) throw std::overflow_error("count_solutions: solution count overflows 64 bits");
    return std::uint64_t{1} << nul;
}

std::optional<BitVector> solve_one(const BitMatrix& a, const BitVector& b) {
    if (b.size() != a.cols()) throw std::invalid_argument("solve_one: dimension mismatch");
    auto e = tracked_echelon(a);
    BitVector rem = b;
    BitVector comb(a.rows());
    for (auto [col, row] : e.pivots) {
        if (rem.get(col)) {
            rem ^= e.rows[row];
            comb ^= e.combs[row];
        }
    }
    if (!rem.is_zero()) return std::nullopt;
    return comb;
}

std::vector<BitVector> kernel_basis(const BitMatrix& a) {
    auto e = tracked_echelon(a);
    std::vector<BitVector> basis;
    for (std::size_t r = e.pivots.size(); r < e.rows.size(); ++r)
        basis.push_back(e.combs[r]);
    return basis;
}

std::optional<std::vector<int>> min_dependent_columns(const BitMatrix& m, std::size_t budget) {
    const std::size_t n = m.cols();
    budget = std::min(budget, n);
    std::vector<BitVector> cols;
    cols.reserve(n);
    for (std::size_t c = 0; c < n; ++c) cols.push_back(m.column(c));

    for (std::size_t w = 1; w <= budget; ++w) {
        // Lexicographically first combination of size w; sums checked in order.
        std::vector<int> idx(w);
        for (std::size_t i = 0; i < w; ++i) idx[i] = static_cast<int>(i);
        while (true) {
            BitVector acc(m.rows());
            for (int c : idx) acc ^= cols[c];
            if (acc.is_zero()) return idx;
            // next combination
            int i = static_cast<int>(w) - 1;
            while (i >= 0 && idx[i] == static_cast<int>(n - w + i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace awtc
