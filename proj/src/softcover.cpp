#include "awtc/softcover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "awtc/codes.hpp"
#include "awtc/rng.hpp"

namespace awtc {

namespace {

/// Kahan compensated accumulator for the exact divergence paths.
struct Kahan {
    double sum = 0, c = 0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

std::size_t pow_size(int base, int n) {
    std::size_t s = 1;
    for (int i = 0; i < n; ++i) {
        s *= base;
        if (s > (std::size_t{1} << 24)) throw std::invalid_argument("softcover: instance too large");
    }
    return s;
}

std::vector<int> unrank(std::size_t idx, int base, int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = static_cast<int>(idx % base);
        idx /= base;
    }
    return v;
}

double product_qv(const Pmf& qv, const std::vector<int>& v) {
    double prod = 1.0;
    for (int s : v) prod *= qv[s];
    return prod;
}

}  // namespace

std::vector<double> induced_output_pmf(const CodebookU& cb, const Dmc& ch) {
    const std::size_t nv = pow_size(ch.out_size(), cb.n);
    std::vector<double> pv(nv, 0.0);
    const double pw = 1.0 / cb.words.size();
    for (const auto& u : cb.words) {
        if (static_cast<int>(u.size()) != cb.n)
            throw std::invalid_argument("induced_output_pmf: codeword length mismatch");
        for (std::size_t vi = 0; vi < nv; ++vi)
            pv[vi] += pw * dmc_product_likelihood(ch, u, unrank(vi, ch.out_size(), cb.n));
    }
    return pv;
}

double soft_cover_divergence(const CodebookU& cb, const Dmc& ch, const Pmf& qu) {
    const std::size_t nv = pow_size(ch.out_size(), cb.n);
    std::vector<double> pv = induced_output_pmf(cb, ch);
    Pmf qv = output_marginal(qu, ch);
    Kahan acc;
    for (std::size_t vi = 0; vi < nv; ++vi) {
        if (pv[vi] > 0) {
            double q = product_qv(qv, unrank(vi, ch.out_size(), cb.n));
            acc.add(pv[vi] * std::log2(pv[vi] / q));
        }
    }
    return std::max(acc.sum, 0.0);
}

SoftCoverDiagnostics typical_split(const CodebookU& cb, const Dmc& ch, const Pmf& qu,
                                   double eps) {
    // eps = 0 is the boundary case: the strict inequality then classifies an
    // exactly-threshold pair as atypical
    if (eps < 0) throw std::invalid_argument("typical_split: eps must be >= 0");
    const std::size_t nv = pow_size(ch.out_size(), cb.n);
    Pmf qv = output_marginal(qu, ch);
    const double i_uv = channel_mutual_information(qu, ch);
    const double threshold = (i_uv + eps) * cb.n;  // strict inequality below
    const double pw = 1.0 / cb.words.size();

    std::vector<double> p1(nv, 0.0), p2(nv, 0.0);
    for (const auto& u : cb.words) {
        for (std::size_t vi = 0; vi < nv; ++vi) {
            std::vector<int> v = unrank(vi, ch.out_size(), cb.n);
            double lik = dmc_product_likelihood(ch, u, v);
            if (lik == 0) continue;
            double qvn = product_qv(qv, v);
            double density = std::log2(lik / qvn);
            if (density < threshold)
                p1[vi] += pw * lik;
            else
                p2[vi] += pw * lik;
        }
    }

    SoftCoverDiagnostics diag;
    diag.eps = eps;
    Kahan mass2, d1, d2, dtot;
    double delta1_max = 0;
    for (std::size_t vi = 0; vi < nv; ++vi) {
        std::vector<int> v = unrank(vi, ch.out_size(), cb.n);
        double qvn = product_qv(qv, v);
        mass2.add(p2[vi]);
        if (qvn > 0) delta1_max = std::max(delta1_max, p1[vi] / qvn);
        // extended relative entropy for the possibly sub-normalized parts
        if (p1[vi] > 0) d1.add(p1[vi] * std::log2(p1[vi] / qvn));
        if (p2[vi] > 0) d2.add(p2[vi] * std::log2(p2[vi] / qvn));
        double ptot = p1[vi] + p2[vi];
        if (ptot > 0) dtot.add(ptot * std::log2(ptot / qvn));
    }
    diag.p2_mass = std::clamp(mass2.sum, 0.0, 1.0);
    diag.delta1_max = delta1_max;
    diag.divergence = std::max(dtot.sum, 0.0);
    diag.lemma4_rhs = h2(diag.p2_mass) + d1.sum + d2.sum;
    return diag;
}

CodebookU sample_kwise_codebook(int n, int keybits, int k, std::uint64_t seed) {
    if (keybits < 0 || keybits > 15)
        throw std::invalid_argument("sample_kwise_codebook: keybits must be in [0, 15]");
    // Keys map to nonzero syndrome indices 1..2^keybits of a field one degree
    // larger, so every codeword is uniform (the zero index encodes to the
    // all-zero word and is skipped).
    const int b = keybits + 1;
    Field field(b);
    const int t = (k + 1) / 2;
    auto rng = make_rng(seed, "kwise-G", 0);
    BitMatrix g(static_cast<std::size_t>(t) * b, n);
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) g.set(r, c, fair_bit(rng));

    CodebookU cb;
    cb.n = n;
    cb.usize = 2;
    cb.words.reserve(std::size_t{1} << keybits);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << keybits); ++w) {
        BitVector h = bch_column(field, w + 1, t);
        BitVector x = vec_mat_mul(h, g);
        std::vector<int> word(n);
        for (int i = 0; i < n; ++i) word[i] = x.get(i) ? 1 : 0;
        cb.words.push_back(std::move(word));
    }
    return cb;
}

CodebookU sample_iid_codebook(int n, int keybits, const Pmf& qu, std::uint64_t seed) {
    auto rng = make_rng(seed, "iid-codebook", 0);
    CodebookU cb;
    cb.n = n;
    cb.usize = qu.size();
    cb.words.reserve(std::size_t{1} << keybits);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << keybits); ++w) {
        std::vector<int> word(n);
        for (int i = 0; i < n; ++i) {
            double x = uniform_unit(rng);
            double acc = 0;
            int pick = qu.size() - 1;
            for (int s = 0; s < qu.size(); ++s) {
                acc += qu[s];
                if (x < acc) {
                    pick = s;
                    break;
                }
            }
            word[i] = pick;
        }
        cb.words.push_back(std::move(word));
    }
    return cb;
}

TailExperimentResult divergence_tail_experiment(int n, int keybits, int k, const Dmc& ch,
                                                double threshold, int trials,
                                                std::uint64_t seed) {
    if (ch.in_size() != 2)
        throw std::invalid_argument("divergence_tail_experiment: binary input only");
    Pmf qu = Pmf::uniform(2);
    TailExperimentResult res;
    res.divergences.reserve(trials);
    int exceed = 0;
    for (int trial = 0; trial < trials; ++trial) {
        CodebookU cb = sample_kwise_codebook(n, keybits, k, derive_seed(seed, "tail-trial", trial));
        double d = soft_cover_divergence(cb, ch, qu);
        res.divergences.push_back(d);
        if (d > threshold) ++exceed;
    }
    res.exceed_fraction = trials > 0 ? static_cast<double>(exceed) / trials : 0.0;
    return res;
}

double alpha_lambda_eps(const Pmf& qu, const Dmc& ch, double lambda, double eps) {
    if (lambda <= 0) throw std::invalid_argument("alpha_lambda_eps: lambda must be > 0");
    const int nu = ch.in_size(), nv = ch.out_size();
    std::vector<double> joint(static_cast<std::size_t>(nu) * nv), prod(joint.size());
    Pmf qv = output_marginal(qu, ch);
    for (int u = 0; u < nu; ++u)
        for (int v = 0; v < nv; ++v) {
            joint[static_cast<std::size_t>(u) * nv + v] = qu[u] * ch.prob(u, v);
            prod[static_cast<std::size_t>(u) * nv + v] = qu[u] * qv[v];
        }
    double i_uv = channel_mutual_information(qu, ch);
    double renyi = renyi_divergence(Pmf(joint), Pmf(prod), lambda + 1);
    return lambda * (i_uv + eps - renyi);
}

namespace {

/// Generalized binomial coefficient log2 C(x, k) for real x >= k, via lgamma.
double log2_binomial(double x, double k) {
    return (std::lgamma(x + 1) - std::lgamma(k + 1) - std::lgamma(x - k + 1)) / std::log(2.0);
}

}  // namespace

SchmidtBound schmidt_bound(double w_size, double mu, double tau, std::uint64_t k) {
    if (mu <= 0 || tau <= 0 || w_size <= 0)
        throw std::invalid_argument("schmidt_bound: need mu, tau, |W| > 0");
    if (mu > w_size) throw std::invalid_argument("schmidt_bound: mu exceeds |W|");
    SchmidtBound out;
    double denom = 1 - mu / w_size;
    if (denom <= 0) {
        out.kstar = static_cast<std::uint64_t>(w_size);  // degenerate mu = |W|
    } else {
        out.kstar = static_cast<std::uint64_t>(std::ceil(mu * tau / denom));
    }
    out.applicable = k >= out.kstar;
    double ks = static_cast<double>(out.kstar);
    if (mu * (1 + tau) < ks) {
        // C(mu(1+tau), k*) undefined below k*: the bound degenerates; report vacuous
        out.raw = 1.0;
        out.bound = 1.0;
        return out;
    }
    double log2b = log2_binomial(w_size, ks) + ks * std::log2(mu / w_size) -
                   log2_binomial(mu * (1 + tau), ks);
    out.raw = std::exp2(log2b);
    // without independence order >= k* the inequality is not licensed
    out.bound = out.applicable ? std::min(out.raw, 1.0) : 1.0;
    return out;
}

double bellare_bound(std::uint64_t k, double mu, double tau) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("bellare_bound: need even k >= 4");
    if (mu <= 0 || tau <= 0) throw std::invalid_argument("bellare_bound: need mu, tau > 0");
    double val = 8 * std::pow((k * mu + static_cast<double>(k) * k) / ((mu * tau) * (mu * tau)),
                              k / 2.0);
    return std::min(val, 1.0);
}

ProofConstants proof_constants(double key_rate, const Pmf& qu, const Dmc& ch, double eps,
                               double lambda, double beta, int n) {
    ProofConstants pc;
    pc.mutual_info = channel_mutual_information(qu, ch);
    pc.alpha = alpha_lambda_eps(qu, ch, lambda, eps);
    pc.eta = (key_rate - pc.mutual_info - eps + 2 * (beta - pc.alpha)) / 2;
    pc.pi1 = pc.alpha - beta;
    pc.pi1_positive = pc.pi1 > 0;
    Pmf qv = output_marginal(qu, ch);
    double max_inv = 0;
    for (int v = 0; v < qv.size(); ++v)
        if (qv[v] > 0) max_inv = std::max(max_inv, 1.0 / qv[v]);
    pc.qn = 2 * std::log2(std::exp(1.0)) + pc.pi1 * n + n * std::log2(max_inv);
    return pc;
}

}  // namespace awtc
