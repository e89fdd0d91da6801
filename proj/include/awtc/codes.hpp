#ifndef AWTC_CODES_HPP
#define AWTC_CODES_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "awtc/bitlinalg.hpp"
#include "awtc/gf2m.hpp"

namespace awtc {

/// Stochastic linear wiretap code: x(m,w) = m G_M + w G_W.
struct LinearCode {
    int n = 0;
    int mbits = 0;  // message length
    int wbits = 0;  // key length
    BitMatrix G_M;  // mbits x n
    BitMatrix G_W;  // wbits x n

    BitMatrix stacked_G() const { return G_M.stacked(G_W); }
};

/// Ozarow-Wyner coset code: transmit a uniform solution of x H^T = m.
struct CosetCode {
    int n = 0;
    int mbits = 0;
    BitMatrix H;  // mbits x n, full row rank
};

/// Pseudolinear code: x(m,w) = h(index(m,w)) G with h the BCH syndrome map.
/// index(m,w) packs m into the high bits, w into the low bits.
struct PseudolinearCode {
    int n = 0;
    int mbits = 0;
    int wbits = 0;
    int k = 0;
    Field field = Field(1);  // extension degree b = mbits + wbits
    int t = 0;    // ceil(k/2); G has t*b rows
    BitMatrix G;  // (t*b) x n

    std::uint64_t pair_index(const BitVector& m, const BitVector& w) const;
};

BitVector encode_linear(const LinearCode& c, const BitVector& m, const BitVector& w);
BitVector encode_pseudolinear(const PseudolinearCode& c, const BitVector& m, const BitVector& w);

/// Random pseudolinear code: H fixed by (b, k), G filled with fair bits.
/// Deterministic given seed. Requires b = mbits + wbits <= 16.
PseudolinearCode sample_pseudolinear(int n, int mbits, int wbits, int k, std::uint64_t seed);

/// Uniform sample of {x : x H^T = m}: a particular solution plus a uniform
/// null-space element. Requires H full row rank.
BitVector coset_encode(const CosetCode& c, const BitVector& m, std::mt19937_64& rng);

/// Syndrome decoding: m = x H^T (noiseless channel).
BitVector coset_decode(const CosetCode& c, const BitVector& x);

struct NormalizeResult {
    /// Present when normalization succeeds (possibly with reduced wbits).
    std::optional<LinearCode> code;
    /// Set when G_W is full rank but the stacked G is rank-deficient:
    /// two messages share every codeword, so P_error^max >= 1/2.
    bool unreliable = false;
    std::string note;
};

/// Key-redundancy removal: if G_W is rank-deficient, replace it with a
/// full-rank matrix spanning the same row space (shrinking wbits, same
/// codeword set). If the stacked G is then still rank-deficient, the code is
/// reported unreliable instead.
NormalizeResult normalize_linear(const LinearCode& c);

struct CodebookEntry {
    std::uint32_t m = 0;
    std::uint32_t w = 0;
    BitVector x;
};

/// Fully materialized code: one entry per (m,w), m and w as packed integers.
struct Codebook {
    int n = 0;
    int mbits = 0;
    int wbits = 0;
    std::vector<CodebookEntry> entries;  // ordered by (m, w)
};

/// Materialization is the verification method; capped at mbits + wbits <= 20.
Codebook materialize(const LinearCode& c);
Codebook materialize(const PseudolinearCode& c);
/// Coset codebook: key w indexes the null-space combination (wbits = n - mbits).
Codebook materialize(const CosetCode& c);

struct DecodeResult {
    std::uint32_t m = 0;
    std::uint32_t w = 0;
    std::size_t distance = 0;
    bool tie = false;  // tie between distinct messages: counted as an error
};

/// Min-distance decoding over the full codebook; a distance tie between
/// distinct messages is declared failure rather than broken arbitrarily.
DecodeResult min_distance_decode(const Codebook& cb, const BitVector& y);

/// Minimum pairwise Hamming distance of the codeword list (requires >= 2).
std::size_t code_min_distance(const Codebook& cb);

/// Minimum nonzero codeword weight; equals code_min_distance for linear
/// codebooks and serves as the cross-check path.
std::size_t min_nonzero_weight(const Codebook& cb);

}  // namespace awtc

#endif
