#include "awtc/codes.hpp"

#include <limits>
#include <stdexcept>

#include "awtc/rng.hpp"

namespace awtc {

std::uint64_t PseudolinearCode::pair_index(const BitVector& m, const BitVector& w) const {
    if (static_cast<int>(m.size()) != mbits || static_cast<int>(w.size()) != wbits)
        throw std::invalid_argument("pair_index: dimension mismatch");
    return (m.to_uint() << wbits) | w.to_uint();
}

BitVector encode_linear(const LinearCode& c, const BitVector& m, const BitVector& w) {
    if (static_cast<int>(m.size()) != c.mbits || static_cast<int>(w.size()) != c.wbits)
        throw std::invalid_argument("encode_linear: dimension mismatch");
    return vec_mat_mul(m, c.G_M) ^ vec_mat_mul(w, c.G_W);
}

BitVector encode_pseudolinear(const PseudolinearCode& c, const BitVector& m, const BitVector& w) {
    BitVector h = bch_column(c.field, c.pair_index(m, w), c.t);
    return vec_mat_mul(h, c.G);
}

PseudolinearCode sample_pseudolinear(int n, int mbits, int wbits, int k, std::uint64_t seed) {
    int b = mbits + wbits;
    if (b < 1 || b > 16) throw std::invalid_argument("sample_pseudolinear: need mbits + wbits in [1, 16]");
    if (k < 1) throw std::invalid_argument("sample_pseudolinear: need k >= 1");
    PseudolinearCode c;
    c.n = n;
    c.mbits = mbits;
    c.wbits = wbits;
    c.k = k;
    c.field = Field(b);
    c.t = (k + 1) / 2;
    auto rng = make_rng(seed, "pseudolinear-G", 0);
    BitMatrix g(static_cast<std::size_t>(c.t) * b, n);
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t col = 0; col < g.cols(); ++col) g.set(r, col, fair_bit(rng));
    c.G = g;
    return c;
}

BitVector coset_encode(const CosetCode& c, const BitVector& m, std::mt19937_64& rng) {
    if (static_cast<int>(m.size()) != c.mbits)
        throw std::invalid_argument("coset_encode: dimension mismatch");
    BitMatrix ht = c.H.transposed();  // n x mbits; solving x * H^T = m
    auto x0 = solve_one(ht, m);
    if (!x0) throw std::logic_error("coset_encode: no solution (H not full row rank?)");
    BitVector x = *x0;
    for (const BitVector& basis : kernel_basis(ht))
        if (fair_bit(rng)) x ^= basis;
    return x;
}

BitVector coset_decode(const CosetCode& c, const BitVector& x) {
    if (static_cast<int>(x.size()) != c.n)
        throw std::invalid_argument("coset_decode: dimension mismatch");
    return vec_mat_mul(x, c.H.transposed());
}

NormalizeResult normalize_linear(const LinearCode& c) {
    NormalizeResult res;
    LinearCode code = c;
    std::size_t rw = rank(c.G_W);
    if (rw < static_cast<std::size_t>(c.wbits)) {
        // shrink the key: full-rank basis of rowspace(G_W), same codeword set
        std::vector<BitVector> rows;
        for (int r = 0; r < c.wbits; ++r) rows.push_back(c.G_W.row(r));
        std::vector<BitVector> basis;
        {
            std::vector<BitVector> work = rows;
            std::size_t next = 0;
            for (std::size_t col = 0; col < c.G_W.cols() && next < work.size(); ++col) {
                std::size_t p = next;
                while (p < work.size() && !work[p].get(col)) ++p;
                if (p == work.size()) continue;
                std::swap(work[next], work[p]);
                for (std::size_t r2 = 0; r2 < work.size(); ++r2)
                    if (r2 != next && work[r2].get(col)) work[r2] ^= work[next];
                ++next;
                if (next == work.size()) break;
            }
            for (std::size_t r2 = 0; r2 < next; ++r2) basis.push_back(work[r2]);
        }
        code.G_W = basis.empty() ? BitMatrix(0, c.G_W.cols()) : BitMatrix::from_rows(basis);
        code.wbits = static_cast<int>(basis.size());
        res.note = "key redundancy removed: wbits " + std::to_string(c.wbits) + " -> " +
                   std::to_string(code.wbits);
    }
    std::size_t rs = rank(code.stacked_G());
    if (rs < static_cast<std::size_t>(code.mbits + code.wbits)) {
        res.unreliable = true;
        res.note = "stacked G rank-deficient with full-rank G_W: P_error^max >= 1/2";
        return res;
    }
    res.code = code;
    return res;
}

namespace {

void check_materializable(int mbits, int wbits) {
    if (mbits + wbits > 20)
        throw std::invalid_argument("materialize: mbits + wbits > 20 (enumeration cap)");
}

}  // namespace

Codebook materialize(const LinearCode& c) {
    check_materializable(c.mbits, c.wbits);
    Codebook cb{c.n, c.mbits, c.wbits, {}};
    cb.entries.reserve(std::size_t{1} << (c.mbits + c.wbits));
    for (std::uint32_t m = 0; m < (1u << c.mbits); ++m)
        for (std::uint32_t w = 0; w < (1u << c.wbits); ++w) {
            BitVector mv = BitVector::from_uint(m, c.mbits);
            BitVector wv = BitVector::from_uint(w, c.wbits);
            cb.entries.push_back({m, w, encode_linear(c, mv, wv)});
        }
    return cb;
}

Codebook materialize(const PseudolinearCode& c) {
    check_materializable(c.mbits, c.wbits);
    Codebook cb{c.n, c.mbits, c.wbits, {}};
    cb.entries.reserve(std::size_t{1} << (c.mbits + c.wbits));
    for (std::uint32_t m = 0; m < (1u << c.mbits); ++m)
        for (std::uint32_t w = 0; w < (1u << c.wbits); ++w) {
            BitVector mv = BitVector::from_uint(m, c.mbits);
            BitVector wv = BitVector::from_uint(w, c.wbits);
            cb.entries.push_back({m, w, encode_pseudolinear(c, mv, wv)});
        }
    return cb;
}

Codebook materialize(const CosetCode& c) {
    int wbits = c.n - c.mbits;
    check_materializable(c.mbits, wbits);
    BitMatrix ht = c.H.transposed();
    auto basis = kernel_basis(ht);
    if (static_cast<int>(basis.size()) != wbits)
        throw std::logic_error("materialize(CosetCode): H not full row rank");
    Codebook cb{c.n, c.mbits, wbits, {}};
    for (std::uint32_t m = 0; m < (1u << c.mbits); ++m) {
        auto x0 = solve_one(ht, BitVector::from_uint(m, c.mbits));
        if (!x0) throw std::logic_error("materialize(CosetCode): unsolvable syndrome");
        for (std::uint32_t w = 0; w < (1u << wbits); ++w) {
            BitVector x = *x0;
            for (int j = 0; j < wbits; ++j)
                if ((w >> j) & 1) x ^= basis[j];
            cb.entries.push_back({m, w, x});
        }
    }
    return cb;
}

DecodeResult min_distance_decode(const Codebook& cb, const BitVector& y) {
    if (cb.entries.empty()) throw std::invalid_argument("min_distance_decode: empty codebook");
    DecodeResult best;
    std::size_t best_d = std::numeric_limits<std::size_t>::max();
    for (const auto& e : cb.entries) {
        std::size_t d = hamming_distance(e.x, y);
        if (d < best_d) {
            best = {e.m, e.w, d, false};
            best_d = d;
        } else if (d == best_d && e.m != best.m) {
            best.tie = true;
        }
    }
    best.distance = best_d;
    return best;
}

std::size_t code_min_distance(const Codebook& cb) {
    if (cb.entries.size() < 2) throw std::invalid_argument("code_min_distance: need >= 2 codewords");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < cb.entries.size(); ++i)
        for (std::size_t j = i + 1; j < cb.entries.size(); ++j)
            best = std::min(best, hamming_distance(cb.entries[i].x, cb.entries[j].x));
    return best;
}

std::size_t min_nonzero_weight(const Codebook& cb) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& e : cb.entries) {
        std::size_t w = e.x.weight();
        if (w > 0) best = std::min(best, w);
    }
    return best;
}

}  // namespace awtc
