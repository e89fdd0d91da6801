#ifndef AWTC_CHANNEL_HPP
#define AWTC_CHANNEL_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "awtc/bitlinalg.hpp"

namespace awtc {

/// The adversary's read coordinates: strictly increasing 0-based indices.
/// Serialized 1-based in CLI artifacts.
struct ReadSet {
    std::vector<int> indices;

    std::size_t size() const { return indices.size(); }
    bool operator==(const ReadSet&) const = default;
    bool operator<(const ReadSet& o) const { return indices < o.indices; }
    void validate(std::size_t n) const;
};

/// Bit-flip coordinates, 0-based distinct; |indices| is the flips spent.
struct FlipSet {
    std::vector<int> indices;
    void validate(std::size_t n, std::size_t budget) const;
};

/// Length-|s| subvector of x at the read coordinates, in index order.
BitVector observe(const BitVector& x, const ReadSet& s);

/// x with the bits at f complemented (an involution).
BitVector apply_flips(const BitVector& x, const FlipSet& f);

/// Restartable lexicographic enumeration of all C(n, k) size-k subsets of
/// {0,...,n-1}. Copyable, so parallel workers can partition the stream.
class CombinationGen {
  public:
    CombinationGen(int n, int k);
    /// Fills `out` with the next combination; false when exhausted.
    bool next(std::vector<int>& out);
    void reset();

  private:
    int n_, k_;
    bool done_;
    bool first_;
    std::vector<int> state_;
};

/// All C(n, rn) read sets in lexicographic order.
/// Intended for small instances; use CombinationGen directly to stream.
std::vector<ReadSet> enumerate_read_sets(int n, int rn);

std::uint64_t binomial(int n, int k);

/// Discrete memoryless channel: row-stochastic |U| x |V| transition matrix.
class Dmc {
  public:
    Dmc(int in_size, int out_size, std::vector<double> row_major);
    static Dmc bsc(double p);
    static Dmc identity(int size);

    int in_size() const { return in_; }
    int out_size() const { return out_; }
    double prob(int u, int v) const { return p_[static_cast<std::size_t>(u) * out_ + v]; }

  private:
    int in_, out_;
    std::vector<double> p_;
};

/// Product likelihood of the n-shot memoryless channel.
double dmc_product_likelihood(const Dmc& ch, const std::vector<int>& u, const std::vector<int>& v);

/// One output sequence drawn from the product law; deterministic given rng state.
std::vector<int> dmc_sample(const Dmc& ch, const std::vector<int>& u, std::mt19937_64& rng);

}  // namespace awtc

#endif
