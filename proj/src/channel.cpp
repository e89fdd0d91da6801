#include "awtc/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "awtc/rng.hpp"

namespace awtc {

void ReadSet::validate(std::size_t n) const {
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0 || static_cast<std::size_t>(indices[i]) >= n)
            throw std::out_of_range("ReadSet: index out of range");
        if (i > 0 && indices[i] <= indices[i - 1])
            throw std::invalid_argument("ReadSet: indices must be strictly increasing");
    }
}

void FlipSet::validate(std::size_t n, std::size_t budget) const {
    if (indices.size() > budget) throw std::invalid_argument("FlipSet: exceeds flip budget");
    std::vector<bool> seen(n, false);
    for (int i : indices) {
        if (i < 0 || static_cast<std::size_t>(i) >= n)
            throw std::out_of_range("FlipSet: index out of range");
        if (seen[i]) throw std::invalid_argument("FlipSet: duplicate index");
        seen[i] = true;
    }
}

BitVector observe(const BitVector& x, const ReadSet& s) {
    s.validate(x.size());
    BitVector z(s.indices.size());
    for (std::size_t i = 0; i < s.indices.size(); ++i)
        if (x.get(s.indices[i])) z.set(i, true);
    return z;
}

BitVector apply_flips(const BitVector& x, const FlipSet& f) {
    BitVector y = x;
    for (int i : f.indices) y.flip(i);
    return y;
}

CombinationGen::CombinationGen(int n, int k) : n_(n), k_(k), done_(false), first_(true) {
    if (k < 0 || k > n) throw std::invalid_argument("CombinationGen: need 0 <= k <= n");
    reset();
}

void CombinationGen::reset() {
    state_.resize(k_);
    for (int i = 0; i < k_; ++i) state_[i] = i;
    done_ = false;
    first_ = true;
}

bool CombinationGen::next(std::vector<int>& out) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        out = state_;
        return true;
    }
    int i = k_ - 1;
    while (i >= 0 && state_[i] == n_ - k_ + i) --i;
    if (i < 0) {
        done_ = true;
        return false;
    }
    ++state_[i];
    for (int j = i + 1; j < k_; ++j) state_[j] = state_[j - 1] + 1;
    out = state_;
    return true;
}

std::vector<ReadSet> enumerate_read_sets(int n, int rn) {
    std::vector<ReadSet> out;
    CombinationGen gen(n, rn);
    std::vector<int> idx;
    while (gen.next(idx)) out.push_back(ReadSet{idx});
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Dmc::Dmc(int in_size, int out_size, std::vector<double> row_major)
    : in_(in_size), out_(out_size), p_(std::move(row_major)) {
    if (in_ < 1 || out_ < 1 || p_.size() != static_cast<std::size_t>(in_) * out_)
        throw std::invalid_argument("Dmc: dimension mismatch");
    for (int u = 0; u < in_; ++u) {
        double sum = 0;
        for (int v = 0; v < out_; ++v) {
            double q = prob(u, v);
            if (q < 0) throw std::invalid_argument("Dmc: negative entry");
            sum += q;
        }
        if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("Dmc: row not stochastic");
    }
}

Dmc Dmc::bsc(double p) {
    if (p < 0 || p > 1) throw std::invalid_argument("Dmc::bsc: p out of range");
    return Dmc(2, 2, {1 - p, p, p, 1 - p});
}

Dmc Dmc::identity(int size) {
    std::vector<double> m(static_cast<std::size_t>(size) * size, 0.0);
    for (int i = 0; i < size; ++i) m[static_cast<std::size_t>(i) * size + i] = 1.0;
    return Dmc(size, size, std::move(m));
}

double dmc_product_likelihood(const Dmc& ch, const std::vector<int>& u,
                              const std::vector<int>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dmc_product_likelihood: length mismatch");
    double prod = 1.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] >= ch.in_size() || v[i] < 0 || v[i] >= ch.out_size())
            throw std::out_of_range("dmc_product_likelihood: symbol out of alphabet");
        prod *= ch.prob(u[i], v[i]);
    }
    return prod;
}

std::vector<int> dmc_sample(const Dmc& ch, const std::vector<int>& u, std::mt19937_64& rng) {
    std::vector<int> v(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] >= ch.in_size())
            throw std::out_of_range("dmc_sample: symbol out of alphabet");
        double x = uniform_unit(rng);
        double acc = 0;
        int pick = ch.out_size() - 1;
        for (int cand = 0; cand < ch.out_size(); ++cand) {
            acc += ch.prob(u[i], cand);
            if (x < acc) {
                pick = cand;
                break;
            }
        }
        v[i] = pick;
    }
    return v;
}

}  // namespace awtc
