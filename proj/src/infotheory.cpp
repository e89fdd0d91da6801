#include "awtc/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace awtc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double xlog2x(double x) { return x > 0 ? x * std::log2(x) : 0.0; }
}  // namespace

Pmf::Pmf(std::vector<double> p) : p_(std::move(p)) {
    double sum = 0;
    for (double x : p_) {
        if (x < 0) throw std::invalid_argument("Pmf: negative entry");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("Pmf: does not sum to 1");
}

Pmf Pmf::uniform(int size) {
    return Pmf(std::vector<double>(size, 1.0 / size));
}

JointPmf::JointPmf(int rows, int cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), p_(std::move(row_major)) {
    if (rows < 1 || cols < 1 || p_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("JointPmf: dimension mismatch");
    double sum = 0;
    for (double x : p_) {
        if (x < 0) throw std::invalid_argument("JointPmf: negative entry");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("JointPmf: does not sum to 1");
}

Pmf JointPmf::row_marginal() const {
    std::vector<double> m(rows_, 0.0);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m[r] += at(r, c);
    return Pmf(std::move(m));
}

Pmf JointPmf::col_marginal() const {
    std::vector<double> m(cols_, 0.0);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m[c] += at(r, c);
    return Pmf(std::move(m));
}

double h2(double x) {
    if (x < 0 || x > 1) throw std::domain_error("h2: argument outside [0,1]");
    return -xlog2x(x) - xlog2x(1 - x);
}

double mutual_information(const JointPmf& j) {
    Pmf pm = j.row_marginal();
    Pmf pz = j.col_marginal();
    double mi = 0;
    for (int r = 0; r < j.rows(); ++r)
        for (int c = 0; c < j.cols(); ++c) {
            double p = j.at(r, c);
            if (p > 0) mi += p * std::log2(p / (pm[r] * pz[c]));
        }
    return std::max(mi, 0.0);
}

double relative_entropy(const Pmf& p, const Pmf& q) {
    if (p.size() != q.size()) throw std::invalid_argument("relative_entropy: domain mismatch");
    double d = 0;
    for (int i = 0; i < p.size(); ++i) {
        if (p[i] > 0) {
            if (q[i] <= 0) return kInf;
            d += p[i] * std::log2(p[i] / q[i]);
        }
    }
    return d;
}

double renyi_divergence(const Pmf& p, const Pmf& q, double alpha) {
    if (p.size() != q.size()) throw std::invalid_argument("renyi_divergence: domain mismatch");
    if (alpha <= 0 || alpha == 1) throw std::domain_error("renyi_divergence: need alpha > 0, != 1");
    double sum = 0;
    for (int i = 0; i < p.size(); ++i) {
        if (p[i] > 0) {
            if (q[i] <= 0) throw std::domain_error("renyi_divergence: support violation");
            sum += p[i] * std::pow(p[i] / q[i], alpha - 1);
        }
    }
    return std::log2(sum) / (alpha - 1);
}

Pmf output_marginal(const Pmf& qu, const Dmc& ch) {
    if (qu.size() != ch.in_size()) throw std::invalid_argument("output_marginal: domain mismatch");
    std::vector<double> qv(ch.out_size(), 0.0);
    for (int u = 0; u < ch.in_size(); ++u)
        for (int v = 0; v < ch.out_size(); ++v) qv[v] += qu[u] * ch.prob(u, v);
    return Pmf(std::move(qv));
}

double channel_mutual_information(const Pmf& qu, const Dmc& ch) {
    std::vector<double> joint(static_cast<std::size_t>(ch.in_size()) * ch.out_size());
    for (int u = 0; u < ch.in_size(); ++u)
        for (int v = 0; v < ch.out_size(); ++v)
            joint[static_cast<std::size_t>(u) * ch.out_size() + v] = qu[u] * ch.prob(u, v);
    return mutual_information(JointPmf(ch.in_size(), ch.out_size(), std::move(joint)));
}

double information_density(const Pmf& qu, const Dmc& ch, int u, int v) {
    Pmf qv = output_marginal(qu, ch);
    if (qv[v] <= 0) throw std::domain_error("information_density: zero-probability output");
    return std::log2(ch.prob(u, v) / qv[v]);
}

double information_density(const Pmf& qu, const Dmc& ch, const std::vector<int>& u,
                           const std::vector<int>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("information_density: length mismatch");
    Pmf qv = output_marginal(qu, ch);
    double sum = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (qv[v[i]] <= 0) throw std::domain_error("information_density: zero-probability output");
        sum += std::log2(ch.prob(u[i], v[i]) / qv[v[i]]);
    }
    return sum;
}

CapacityResult blahut_arimoto(const std::vector<std::vector<double>>& transition, double tol,
                              int max_iters) {
    const int nin = static_cast<int>(transition.size());
    if (nin == 0) throw std::invalid_argument("blahut_arimoto: empty transition");
    const int nout = static_cast<int>(transition[0].size());
    for (const auto& row : transition) {
        if (static_cast<int>(row.size()) != nout)
            throw std::invalid_argument("blahut_arimoto: ragged transition");
        double sum = 0;
        for (double x : row) {
            if (x < 0) throw std::invalid_argument("blahut_arimoto: negative entry");
            sum += x;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("blahut_arimoto: row not stochastic");
    }

    std::vector<double> r(nin, 1.0 / nin);
    std::vector<double> d(nin, 0.0);
    double cap = 0;
    for (int iter = 0; iter < max_iters; ++iter) {
        std::vector<double> q(nout, 0.0);
        for (int x = 0; x < nin; ++x)
            for (int y = 0; y < nout; ++y) q[y] += r[x] * transition[x][y];
        // per-input divergence D(P(.|x) || q)
        double dmax = -kInf, davg = 0;
        for (int x = 0; x < nin; ++x) {
            double dx = 0;
            for (int y = 0; y < nout; ++y) {
                double p = transition[x][y];
                if (p > 0) dx += p * std::log2(p / q[y]);
            }
            d[x] = dx;
            dmax = std::max(dmax, dx);
            davg += r[x] * dx;
        }
        cap = davg;
        if (dmax - davg <= tol) break;  // standard capacity gap bound
        double norm = 0;
        for (int x = 0; x < nin; ++x) {
            r[x] *= std::exp2(d[x]);
            norm += r[x];
        }
        for (int x = 0; x < nin; ++x) r[x] /= norm;
    }
    // repair tiny numerical drift before constructing the Pmf
    double norm = 0;
    for (double x : r) norm += x;
    for (double& x : r) x /= norm;
    return {std::max(cap, 0.0), Pmf(std::move(r))};
}

namespace {

double f_gap(double x, double p, double r) {
    return h2((2 * p - 1) * x + 1 - p) - h2(p) - r * h2(x);
}

double min_f(double p, double r) {
    // dense grid, then golden-section refinement around the best bracket
    const double step = 1e-4;
    double best_x = 0, best = kInf;
    for (int i = 0; i <= 10000; ++i) {
        double x = i * step;
        double v = f_gap(x, p, r);
        if (v < best) {
            best = v;
            best_x = x;
        }
    }
    double lo = std::max(0.0, best_x - step), hi = std::min(1.0, best_x + step);
    const double invphi = (std::sqrt(5.0) - 1) / 2;
    double a = lo, b = hi;
    double c = b - invphi * (b - a), dd = a + invphi * (b - a);
    double fc = f_gap(c, p, r), fd = f_gap(dd, p, r);
    while (b - a > 1e-8) {
        if (fc < fd) {
            b = dd;
            dd = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f_gap(c, p, r);
        } else {
            a = c;
            c = dd;
            fc = fd;
            dd = a + invphi * (b - a);
            fd = f_gap(dd, p, r);
        }
    }
    return std::min({best, fc, fd});
}

}  // namespace

std::pair<double, double> capacity_bounds(double p, double r) {
    if (p < 0 || p > 0.5 || r < 0 || r > 1)
        throw std::domain_error("capacity_bounds: need p in [0,1/2], r in [0,1]");
    double base = 1 - h2(p) - r;
    double lower = std::max(base, 0.0);
    double upper = base - min_f(p, r);
    return {lower, upper};
}

double plotkin_bound(double delta) {
    if (delta <= 0 || delta > 0.5) throw std::domain_error("plotkin_bound: need delta in (0, 1/2]");
    return 1 - 2 * delta;
}

double eb_threshold(double r) {
    if (r < 0 || r > 1) throw std::domain_error("eb_threshold: need r in [0,1]");
    if (r >= 0.5) return 0.0;
    double x = (1 - std::sqrt(1 - 2 * r)) / 2;
    return std::max(1 - h2(x), 0.0);
}

}  // namespace awtc
