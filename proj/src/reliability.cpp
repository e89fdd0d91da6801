#include "awtc/reliability.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "awtc/rng.hpp"

namespace awtc {

std::string AdversaryStrategy::name() const {
    switch (kind) {
        case AdversaryKind::None: return "none";
        case AdversaryKind::ObliviousExhaustive: return "oblivious-exhaustive";
        case AdversaryKind::ZAwareGreedy: return "z-aware-greedy";
        case AdversaryKind::Random: return "random";
    }
    return "?";
}

std::string ReliabilityReport::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "strategy,trials,max_error\n" << strategy << ',' << trials << ',' << max_error << '\n';
    os << "m,error\n";
    for (std::size_t m = 0; m < per_message_error.size(); ++m)
        os << m << ',' << per_message_error[m] << '\n';
    return os.str();
}

namespace {

bool decode_fails(const Codebook& cb, const BitVector& y, std::uint32_t m) {
    DecodeResult d = min_distance_decode(cb, y);
    return d.tie || d.m != m;
}

/// Worst case over all flip sets of size <= pn (enumerated by weight).
bool oblivious_worst_case_fails(const Codebook& cb, const BitVector& x, std::uint32_t m, int pn) {
    const int n = cb.n;
    for (int w = 0; w <= pn; ++w) {
        CombinationGen gen(n, w);
        std::vector<int> idx;
        while (gen.next(idx)) {
            if (decode_fails(cb, apply_flips(x, FlipSet{idx}), m)) return true;
        }
    }
    return false;
}

/// Flip up to pn positions towards the nearest codeword of a different message.
BitVector greedy_attack(const Codebook& cb, const BitVector& x, std::uint32_t m, int pn) {
    const CodebookEntry* rival = nullptr;
    std::size_t best = x.size() + 1;
    for (const auto& e : cb.entries) {
        if (e.m == m) continue;
        std::size_t d = hamming_distance(e.x, x);
        if (d < best) {
            best = d;
            rival = &e;
        }
    }
    if (!rival) return x;
    BitVector y = x;
    int spent = 0;
    for (std::size_t i = 0; i < x.size() && spent < pn; ++i)
        if (x.get(i) != rival->x.get(i)) {
            y.flip(i);
            ++spent;
        }
    return y;
}

}  // namespace

ReliabilityReport error_prob(const Codebook& cb, const AdversaryStrategy& strategy, int trials,
                             std::uint64_t seed) {
    const int nm = 1 << cb.mbits;
    const int nw = 1 << cb.wbits;
    ReliabilityReport rep;
    rep.strategy = strategy.name();
    rep.per_message_error.assign(nm, 0.0);

    if (strategy.kind == AdversaryKind::None || strategy.kind == AdversaryKind::ObliviousExhaustive) {
        // exhaustive over keys; no sampled randomness
        rep.trials = nw;
        for (const auto& e : cb.entries) {
            bool fail;
            if (strategy.kind == AdversaryKind::None || strategy.pn == 0)
                fail = decode_fails(cb, e.x, e.m);
            else
                fail = oblivious_worst_case_fails(cb, e.x, e.m, strategy.pn);
            if (fail) rep.per_message_error[e.m] += 1.0 / nw;
        }
    } else {
        rep.trials = trials;
        for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(nm); ++m) {
            auto rng = make_rng(seed, "reliability-trial", (std::uint64_t{m} << 32));
            int fails = 0;
            for (int t = 0; t < trials; ++t) {
                std::uint32_t w = static_cast<std::uint32_t>(uniform_below(rng, nw));
                const auto& e = cb.entries[static_cast<std::size_t>(m) * nw + w];
                BitVector y = e.x;
                if (strategy.kind == AdversaryKind::ZAwareGreedy) {
                    y = greedy_attack(cb, e.x, m, strategy.pn);
                } else {  // Random: flip a uniform subset of size pn
                    std::vector<int> pool(cb.n);
                    for (int i = 0; i < cb.n; ++i) pool[i] = i;
                    for (int i = 0; i < strategy.pn && i < cb.n; ++i)
                        std::swap(pool[i], pool[i + uniform_below(rng, cb.n - i)]);
                    std::vector<int> idx(pool.begin(),
                                         pool.begin() + std::min(strategy.pn, cb.n));
                    std::sort(idx.begin(), idx.end());
                    y = apply_flips(e.x, FlipSet{idx});
                }
                if (decode_fails(cb, y, m)) ++fails;
            }
            rep.per_message_error[m] = trials > 0 ? static_cast<double>(fails) / trials : 0.0;
        }
    }
    rep.max_error = *std::max_element(rep.per_message_error.begin(), rep.per_message_error.end());
    return rep;
}

Theorem2Report theorem2_experiment(int n, int mbits, int wbits, int k, int pn, int rn,
                                   int code_samples, int trials, std::uint64_t seed,
                                   double leak_threshold, double delta, SearchMode mode,
                                   std::uint64_t sampled_budget) {
    Theorem2Report rep;
    rep.leak_threshold = leak_threshold;
    rep.delta = delta;
    int success = 0;
    for (int s = 0; s < code_samples; ++s) {
        std::uint64_t code_seed = derive_seed(seed, "theorem2-code", s);
        PseudolinearCode code = sample_pseudolinear(n, mbits, wbits, k, code_seed);
        Codebook cb = materialize(code);

        Theorem2Sample sample;
        sample.code_seed = code_seed;
        LeakageReport leak = sem_leakage(cb, rn, mode, sampled_budget,
                                         derive_seed(seed, "theorem2-readsets", s));
        sample.leakage = leak.capacity_mi;
        sample.leakage_exact = leak.exact;

        AdversaryStrategy strat{pn == 0 ? AdversaryKind::None : AdversaryKind::ZAwareGreedy, pn,
                                rn, derive_seed(seed, "theorem2-adv", s)};
        ReliabilityReport rel = error_prob(cb, strat, trials, strat.seed);
        sample.max_error = rel.max_error;

        if (sample.leakage <= leak_threshold && sample.max_error <= delta) ++success;
        rep.samples.push_back(sample);
    }
    rep.joint_success_fraction =
        code_samples > 0 ? static_cast<double>(success) / code_samples : 0.0;
    return rep;
}

}  // namespace awtc
