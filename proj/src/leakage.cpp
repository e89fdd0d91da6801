#include "awtc/leakage.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "awtc/rng.hpp"

namespace awtc {

JointPmf induced_joint(const Codebook& cb, const ReadSet& s, const Pmf& pm) {
    if (cb.mbits + cb.wbits > 20) throw std::invalid_argument("induced_joint: instance too large");
    if (s.size() > 16) throw std::invalid_argument("induced_joint: read set too large");
    if (pm.size() != (1 << cb.mbits)) throw std::invalid_argument("induced_joint: P_M size mismatch");
    const int nm = 1 << cb.mbits;
    const int nz = 1 << s.size();
    std::vector<double> joint(static_cast<std::size_t>(nm) * nz, 0.0);
    const double pw = 1.0 / (1u << cb.wbits);
    for (const auto& e : cb.entries) {
        std::uint64_t z = observe(e.x, s).to_uint();
        joint[static_cast<std::size_t>(e.m) * nz + z] += pm[e.m] * pw;
    }
    return JointPmf(nm, nz, std::move(joint));
}

double leakage_uniform(const Codebook& cb, const ReadSet& s) {
    return mutual_information(induced_joint(cb, s, Pmf::uniform(1 << cb.mbits)));
}

double lemma1_leakage(const LinearCode& c, const ReadSet& s) {
    BitMatrix gs = select_columns(c.stacked_G(), s.indices);
    BitMatrix gws = select_columns(c.G_W, s.indices);
    return static_cast<double>(rank(gs)) - static_cast<double>(rank(gws));
}

namespace {

/// Conditional law P(z|m) over observed patterns as a BA transition matrix.
std::vector<std::vector<double>> conditional_z_given_m(const Codebook& cb, const ReadSet& s) {
    const int nm = 1 << cb.mbits;
    const int nz = 1 << s.size();
    std::vector<std::vector<double>> cond(nm, std::vector<double>(nz, 0.0));
    const double pw = 1.0 / (1u << cb.wbits);
    for (const auto& e : cb.entries) {
        std::uint64_t z = observe(e.x, s).to_uint();
        cond[e.m][z] += pw;
    }
    return cond;
}

LeakageReport evaluate_read_set(const Codebook& cb, const ReadSet& s) {
    LeakageReport rep;
    rep.read_set = s;
    rep.uniform_mi = leakage_uniform(cb, s);
    rep.capacity_mi = blahut_arimoto(conditional_z_given_m(cb, s)).capacity_bits;
    // capacity dominates any fixed input law; repair BA's tolerance slack
    rep.capacity_mi = std::max(rep.capacity_mi, rep.uniform_mi);
    return rep;
}

}  // namespace

LeakageReport sem_leakage(const Codebook& cb, int rn, SearchMode mode, std::uint64_t budget,
                          std::uint64_t seed) {
    if (rn < 0 || rn > cb.n) throw std::invalid_argument("sem_leakage: rn out of range");
    std::optional<LeakageReport> best;
    auto consider = [&](const ReadSet& s) {
        LeakageReport rep = evaluate_read_set(cb, s);
        // deterministic max with lexicographic tie-break on s
        if (!best || rep.capacity_mi > best->capacity_mi + 1e-12 ||
            (std::abs(rep.capacity_mi - best->capacity_mi) <= 1e-12 && rep.read_set < best->read_set))
            best = rep;
    };
    if (mode == SearchMode::Exhaustive) {
        if (binomial(cb.n, rn) > 2000000)
            throw std::invalid_argument("sem_leakage: instance too large for exhaustive mode");
        CombinationGen gen(cb.n, rn);
        std::vector<int> idx;
        while (gen.next(idx)) consider(ReadSet{idx});
    } else {
        auto rng = make_rng(seed, "sem-leakage-sampled", 0);
        for (std::uint64_t trial = 0; trial < budget; ++trial) {
            // uniform random rn-subset via partial Fisher-Yates
            std::vector<int> pool(cb.n);
            for (int i = 0; i < cb.n; ++i) pool[i] = i;
            for (int i = 0; i < rn; ++i)
                std::swap(pool[i], pool[i + uniform_below(rng, cb.n - i)]);
            std::vector<int> idx(pool.begin(), pool.begin() + rn);
            std::sort(idx.begin(), idx.end());
            consider(ReadSet{idx});
        }
    }
    if (!best) throw std::logic_error("sem_leakage: no read set evaluated");
    best->exact = (mode == SearchMode::Exhaustive);
    return *best;
}

LeakageReport converse_attack(const LinearCode& c, int rn) {
    const int total = c.mbits + c.wbits;
    BitMatrix g = c.stacked_G();
    if (rank(g) != static_cast<std::size_t>(total))
        throw std::invalid_argument("converse_attack: G must have full row rank");
    if (rn >= total)
        throw std::invalid_argument("converse_attack: rn >= mbits + wbits (Corollary path applies)");

    // V: leftmost greedy independent column set of G, |V| = mbits + wbits
    std::vector<int> v_set;
    {
        std::vector<BitVector> picked;
        for (int col = 0; col < c.n && static_cast<int>(v_set.size()) < total; ++col) {
            std::vector<BitVector> trial = picked;
            trial.push_back(g.column(col));
            if (rank(BitMatrix::from_rows(trial)) == trial.size()) {
                picked = trial;
                v_set.push_back(col);
            }
        }
        if (static_cast<int>(v_set.size()) != total)
            throw std::logic_error("converse_attack: failed to find independent column set");
    }

    BitMatrix gw_v = select_columns(c.G_W, v_set);  // wbits x |V|

    // choose S* subset of V of size rn minimizing rank(G_W(S*))
    std::vector<int> best_local;  // indices into v_set
    std::size_t best_rank = static_cast<std::size_t>(rn) + 1;
    if (binomial(total, rn) <= 1000000) {
        CombinationGen gen(total, rn);
        std::vector<int> idx;
        while (gen.next(idx)) {
            std::size_t rk = rank(select_columns(gw_v, idx));
            if (rk < best_rank) {
                best_rank = rk;
                best_local = idx;
            }
        }
    } else {
        // dual-code guidance: a minimal dependent column set of G_W(V) within
        // budget rn forces rank(G_W(S*)) <= rn - 1
        auto dep = min_dependent_columns(gw_v, rn);
        std::set<int> chosen;
        if (dep) chosen.insert(dep->begin(), dep->end());
        for (int i = 0; i < total && static_cast<int>(chosen.size()) < rn; ++i) chosen.insert(i);
        best_local.assign(chosen.begin(), chosen.end());
        best_local.resize(rn);
        best_rank = rank(select_columns(gw_v, best_local));
    }

    std::vector<int> s_star;
    for (int i : best_local) s_star.push_back(v_set[i]);
    std::sort(s_star.begin(), s_star.end());

    LeakageReport rep;
    rep.read_set = ReadSet{s_star};
    rep.uniform_mi = static_cast<double>(rn) - static_cast<double>(best_rank);
    rep.capacity_mi = rep.uniform_mi;  // integer-bit leakage; Sem >= uniform value
    auto cert = min_dependent_columns(select_columns(c.G_W, s_star), rn);
    if (cert) {
        // report certificate in original column coordinates
        std::vector<int> mapped;
        for (int i : *cert) mapped.push_back(s_star[i]);
        rep.certificate = mapped;
    }
    return rep;
}

std::size_t ozarow_equivocation(const BitMatrix& h, int rn) {
    const int n = static_cast<int>(h.cols());
    if (rn < 0 || rn > n) throw std::invalid_argument("ozarow_equivocation: rn out of range");
    const int isize = n - rn;
    if (binomial(n, isize) > 2000000)
        throw std::invalid_argument("ozarow_equivocation: instance too large");
    std::size_t best = h.rows();
    CombinationGen gen(n, isize);
    std::vector<int> idx;
    while (gen.next(idx)) best = std::min(best, rank(select_columns(h, idx)));
    return best;
}

double coset_leakage_lb(const CosetCode& c, int rn) {
    double lb = static_cast<double>(c.mbits) -
                static_cast<double>(ozarow_equivocation(c.H, rn));
    return std::max(lb, 0.0);
}

}  // namespace awtc
