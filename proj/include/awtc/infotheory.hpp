#ifndef AWTC_INFOTHEORY_HPP
#define AWTC_INFOTHEORY_HPP

#include <utility>
#include <vector>

#include "awtc/channel.hpp"

namespace awtc {

/// Exact dense PMF over a finite domain. Entries >= 0, sum 1 within 1e-12.
class Pmf {
  public:
    explicit Pmf(std::vector<double> p);
    static Pmf uniform(int size);

    int size() const { return static_cast<int>(p_.size()); }
    double operator[](int i) const { return p_[i]; }
    const std::vector<double>& probs() const { return p_; }

  private:
    std::vector<double> p_;
};

/// Joint PMF over a product of two finite domains, row-major.
class JointPmf {
  public:
    JointPmf(int rows, int cols, std::vector<double> row_major);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double at(int r, int c) const { return p_[static_cast<std::size_t>(r) * cols_ + c]; }

    Pmf row_marginal() const;
    Pmf col_marginal() const;

  private:
    int rows_, cols_;
    std::vector<double> p_;
};

/// Binary entropy in bits, with 0 log 0 = 0.
double h2(double x);

/// I(row; col) in bits.
double mutual_information(const JointPmf& j);

/// D(P||Q) in bits; +infinity if supp(P) is not contained in supp(Q).
double relative_entropy(const Pmf& p, const Pmf& q);

/// Renyi divergence of order alpha (> 0, != 1) in bits; requires
/// supp(P) subset of supp(Q).
double renyi_divergence(const Pmf& p, const Pmf& q, double alpha);

/// log2[ Q_{V|U}(v|u) / Q_V(v) ] with Q_V the output marginal of (qu, ch).
double information_density(const Pmf& qu, const Dmc& ch, int u, int v);
/// Sequence version: sum of per-symbol information densities.
double information_density(const Pmf& qu, const Dmc& ch, const std::vector<int>& u,
                           const std::vector<int>& v);

/// Output marginal Q_V of input law qu through ch.
Pmf output_marginal(const Pmf& qu, const Dmc& ch);

/// I(U;V) in bits for input law qu through ch.
double channel_mutual_information(const Pmf& qu, const Dmc& ch);

struct CapacityResult {
    double capacity_bits;
    Pmf input;
};

/// Blahut-Arimoto: max_P I(input; output) for the row-stochastic transition,
/// to within `tol` bits (certified by the standard max-vs-avg divergence gap).
CapacityResult blahut_arimoto(const std::vector<std::vector<double>>& transition,
                              double tol = 1e-9, int max_iters = 100000);

/// Semantic-secrecy capacity bounds of the (p,r)-AWTC II, bits per use:
/// lower = max{1 - H2(p) - r, 0};
/// upper = 1 - H2(p) - r - min_{x in [0,1]} f(x),
/// f(x) = H2((2p-1)x + 1 - p) - H2(p) - r H2(x),
/// the min found by dense grid (step 1e-4) refined by golden section to 1e-8.
std::pair<double, double> capacity_bounds(double p, double r);

/// Asymptotic Plotkin rate threshold 1 - 2*delta (the o(1) slack at finite n
/// is not quantified and is reported separately by callers).
double plotkin_bound(double delta);

/// Elias-Bassalygo rate threshold max{1 - H2((1 - sqrt(1-2r))/2), 0},
/// clamped to 0 for r >= 1/2 (continuous extension).
double eb_threshold(double r);

}  // namespace awtc

#endif
