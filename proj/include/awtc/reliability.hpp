#ifndef AWTC_RELIABILITY_HPP
#define AWTC_RELIABILITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "awtc/codes.hpp"
#include "awtc/leakage.hpp"

namespace awtc {

/// Searchable adversary strategy classes. The true worst case over z-adaptive
/// randomized adversaries is not searchable; every report names its strategy
/// and is a lower bound on the worst case.
enum class AdversaryKind { None, ObliviousExhaustive, ZAwareGreedy, Random };

struct AdversaryStrategy {
    AdversaryKind kind = AdversaryKind::None;
    int pn = 0;  // flip budget, always enforced
    int rn = 0;  // read budget (z-aware strategies)
    std::uint64_t seed = 0;

    std::string name() const;
};

struct ReliabilityReport {
    std::vector<double> per_message_error;
    double max_error = 0;
    int trials = 0;
    std::string strategy;

    std::string to_csv() const;  // deterministic serialization, for byte-identity checks
};

/// Empirical decoding-error probability under min-distance decoding.
/// Per message m: fraction of (w, adversary action) trials with decode != m.
/// ObliviousExhaustive enumerates every flip set of size <= pn per (m,w) and
/// scores an error if any of them defeats the decoder (worst case);
/// ZAwareGreedy flips up to pn of the positions where the nearest rival
/// codeword differs. Deterministic given seed.
ReliabilityReport error_prob(const Codebook& cb, const AdversaryStrategy& strategy, int trials,
                             std::uint64_t seed);

struct Theorem2Sample {
    std::uint64_t code_seed = 0;
    double leakage = 0;       // sem-leakage capacity value at read budget rn
    bool leakage_exact = false;
    double max_error = 0;     // under the configured strategy
};

struct Theorem2Report {
    std::vector<Theorem2Sample> samples;
    double joint_success_fraction = 0;  // leakage <= leak_threshold and error <= delta
    double leak_threshold = 0;
    double delta = 0;
};

/// Joint secrecy + reliability experiment over sampled pseudolinear codes.
Theorem2Report theorem2_experiment(int n, int mbits, int wbits, int k, int pn, int rn,
                                   int code_samples, int trials, std::uint64_t seed,
                                   double leak_threshold = 0.0625, double delta = 0.05,
                                   SearchMode mode = SearchMode::Exhaustive,
                                   std::uint64_t sampled_budget = 64);

}  // namespace awtc

#endif
