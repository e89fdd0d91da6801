#ifndef AWTC_SOFTCOVER_HPP
#define AWTC_SOFTCOVER_HPP

#include <cstdint>
#include <vector>

#include "awtc/channel.hpp"
#include "awtc/infotheory.hpp"

namespace awtc {

/// Key-indexed codebook of input sequences over a finite alphabet (multiset).
struct CodebookU {
    int n = 0;
    int usize = 2;  // |U|
    std::vector<std::vector<int>> words;  // one length-n sequence per key
};

struct SoftCoverDiagnostics {
    double divergence = 0;  // D(P_V || Q_V^n), bits
    double p2_mass = 0;     // total mass of the atypical part P_{V,2}
    double delta1_max = 0;  // max_v P_{V,1}(v) / Q_V^n(v)
    double eps = 0;
    double lemma4_rhs = 0;  // H2(p2_mass) + D(P_{V,1}||Q^n) + D(P_{V,2}||Q^n)
};

/// Exact mixture (1/|W|) sum_w Q^n_{V|U}(. | u(w)), dense over V^n
/// (index base-|V|, first symbol least significant). Requires |V|^n <= 2^24.
std::vector<double> induced_output_pmf(const CodebookU& cb, const Dmc& ch);

/// Exact D(induced || Q_V^n) in bits, compensated summation.
double soft_cover_divergence(const CodebookU& cb, const Dmc& ch, const Pmf& qu);

/// Typical/atypical split at the information-density threshold
/// i(u;v) < (I(U;V) + eps) n (strict), with the Lemma-style three-term
/// divergence bound evaluated numerically.
SoftCoverDiagnostics typical_split(const CodebookU& cb, const Dmc& ch, const Pmf& qu, double eps);

/// 2^keybits codewords over {0,1}^n that are exactly uniform and k-wise
/// independent: the pseudolinear sampler with keys mapped to nonzero
/// syndrome-map indices (extension degree keybits + 1). Deterministic given
/// seed. Requires keybits <= 15.
CodebookU sample_kwise_codebook(int n, int keybits, int k, std::uint64_t seed);

/// 2^keybits codewords drawn i.i.d. from Q_U^n (mutual independence implies
/// k-wise independence; used as the comparison arm and for non-uniform Q_U).
CodebookU sample_iid_codebook(int n, int keybits, const Pmf& qu, std::uint64_t seed);

struct TailExperimentResult {
    double exceed_fraction = 0;  // fraction of codebooks with divergence > threshold
    std::vector<double> divergences;  // per-trial exact values
};

/// Fraction of independently sampled k-wise codebooks whose exact divergence
/// exceeds `threshold`. Deterministic given seed.
TailExperimentResult divergence_tail_experiment(int n, int keybits, int k, const Dmc& ch,
                                                double threshold, int trials,
                                                std::uint64_t seed);

/// alpha_{lambda,eps} = lambda (I(U;V) + eps - D_{lambda+1}(Q_{UV} || Q_U Q_V)).
double alpha_lambda_eps(const Pmf& qu, const Dmc& ch, double lambda, double eps);

struct SchmidtBound {
    bool applicable = false;  // k >= k*
    std::uint64_t kstar = 0;
    double bound = 1.0;  // clamped at 1 when applicable; raw value in `raw`
    double raw = 0;
};

/// Schmidt-Siegel-Srinivasan tail bound for sums of k-wise independent
/// variables in [0,1]: C(|W|,k*) (mu/|W|)^{k*} / C(mu(1+tau), k*) with
/// k* = ceil(mu tau / (1 - mu/|W|)), evaluated in log space with
/// real-argument generalized binomials.
SchmidtBound schmidt_bound(double w_size, double mu, double tau, std::uint64_t k);

/// Bellare-Rompel tail bound 8 ((k mu + k^2) / (mu tau)^2)^{k/2}, clamped at 1.
/// Requires even k >= 4.
double bellare_bound(std::uint64_t k, double mu, double tau);

struct ProofConstants {
    double alpha = 0;
    double eta = 0;
    double pi1 = 0;
    double qn = 0;
    double mutual_info = 0;
    bool pi1_positive = false;  // flagged, not silently fixed
};

/// The proof-constant chain: alpha from alpha_lambda_eps, eta =
/// (R' - I - eps + 2(beta - alpha))/2, pi1 = alpha - beta, and
/// q_n = 2 log2 e + pi1 n + n log2 max_v 1/Q_V(v).
ProofConstants proof_constants(double key_rate, const Pmf& qu, const Dmc& ch, double eps,
                               double lambda, double beta, int n);

}  // namespace awtc

#endif
