#ifndef AWTC_LEAKAGE_HPP
#define AWTC_LEAKAGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "awtc/codes.hpp"
#include "awtc/infotheory.hpp"

namespace awtc {

struct LeakageReport {
    ReadSet read_set;
    double uniform_mi = 0;   // I_S(M;Z) with uniform M: a certified lower bound
    double capacity_mi = 0;  // max over P_M, via Blahut-Arimoto
    std::optional<std::vector<int>> certificate;  // dependent-column set, if any
    bool exact = true;  // false when the read-set max was sampled (lower bound only)
};

/// Exact joint P(m, z) = P_M(m) * 2^{-wbits} * |{w : observe(x(m,w), s) = z}|.
/// Requires mbits + wbits <= 20 and |s| <= 16.
JointPmf induced_joint(const Codebook& cb, const ReadSet& s, const Pmf& pm);

/// Mutual information of induced_joint with uniform P_M (brute-force oracle).
double leakage_uniform(const Codebook& cb, const ReadSet& s);

/// Rank formula: rank(G(s)) - rank(G_W(s)) bits, for normalized linear codes.
double lemma1_leakage(const LinearCode& c, const ReadSet& s);

enum class SearchMode { Exhaustive, Sampled };

/// Semantic leakage: max over read sets of size rn of the channel capacity of
/// P(z|m). Exhaustive mode is exact within BA tolerance; sampled mode draws
/// `budget` random read sets and is a labeled lower bound.
LeakageReport sem_leakage(const Codebook& cb, int rn, SearchMode mode,
                          std::uint64_t budget = 0, std::uint64_t seed = 0);

/// The linear-code impossibility attack: pick an index set V of (mbits+wbits)
/// independent columns of G (leftmost greedy), then S* in V of size rn
/// minimizing rank(G_W(S*)); exhaustive over subsets of V when C(|V|, rn) is
/// small, otherwise guided by a minimal dependent column set of G_W(V).
/// Requires stacked G full rank and rn < mbits + wbits.
LeakageReport converse_attack(const LinearCode& c, int rn);

/// Ozarow-Wyner equivocation: min over index sets I of size n - rn of
/// rank(H(I)).
std::size_t ozarow_equivocation(const BitMatrix& h, int rn);

/// Coset-code leakage lower bound mbits - equivocation, clamped at 0.
double coset_leakage_lb(const CosetCode& c, int rn);

}  // namespace awtc

#endif
