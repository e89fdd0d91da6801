#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "awtc/codes.hpp"
#include "awtc/infotheory.hpp"
#include "awtc/leakage.hpp"
#include "awtc/reliability.hpp"
#include "awtc/rng.hpp"
#include "awtc/softcover.hpp"

using json = nlohmann::ordered_json;
using namespace awtc;

namespace {

/// Writes to a temp file then renames, so readers never see partial output.
/// Path "-" streams to stdout instead.
void write_artifact(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + tmp);
        os << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

/// 0-based internal indices become 1-based in every artifact.
std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out(v);
    for (int& i : out) ++i;
    return out;
}

Dmc parse_channel(const std::string& spec) {
    if (spec.rfind("bsc:", 0) == 0) return Dmc::bsc(std::stod(spec.substr(4)));
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream is(spec.substr(5));
        if (!is) throw std::runtime_error("cannot open channel file " + spec.substr(5));
        int in = 0, out = 0;
        if (!(is >> in >> out)) throw std::runtime_error("malformed channel file header");
        std::vector<double> p(static_cast<std::size_t>(in) * out);
        for (double& x : p)
            if (!(is >> x)) throw std::runtime_error("malformed channel file body");
        return Dmc(in, out, std::move(p));
    }
    throw std::runtime_error("channel spec must be bsc:<p> or file:<path>");
}

json load_code_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open code file " + path);
    json j;
    is >> j;
    return j;
}

LinearCode load_linear(const std::string& path) {
    json j = load_code_json(path);
    LinearCode c;
    c.n = j.at("n");
    c.mbits = j.at("mbits");
    c.wbits = j.at("wbits");
    c.G_M = BitMatrix::from_text(j.at("G_M"));
    c.G_W = BitMatrix::from_text(j.at("G_W"));
    if (c.G_M.rows() != static_cast<std::size_t>(c.mbits) ||
        c.G_M.cols() != static_cast<std::size_t>(c.n) ||
        c.G_W.rows() != static_cast<std::size_t>(c.wbits) ||
        c.G_W.cols() != static_cast<std::size_t>(c.n))
        throw std::runtime_error("code file dimensions disagree with header");
    return c;
}

CosetCode load_coset(const std::string& path) {
    json j = load_code_json(path);
    CosetCode c;
    c.n = j.at("n");
    c.mbits = j.at("mbits");
    c.H = BitMatrix::from_text(j.at("H"));
    if (c.H.rows() != static_cast<std::size_t>(c.mbits) ||
        c.H.cols() != static_cast<std::size_t>(c.n))
        throw std::runtime_error("code file dimensions disagree with header");
    if (rank(c.H) != static_cast<std::size_t>(c.mbits))
        throw std::runtime_error("H must have full row rank");
    return c;
}

/// The small worked example used throughout the docs: x = m*101 + w*011.
LinearCode bundled_example() {
    return LinearCode{3, 1, 1, BitMatrix::from_strings({"101"}),
                      BitMatrix::from_strings({"011"})};
}

LinearCode sample_linear(int n, int mbits, int wbits, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        auto rng = make_rng(seed, "linear-G", attempt);
        LinearCode c{n, mbits, wbits, BitMatrix(mbits, n), BitMatrix(wbits, n)};
        for (int r = 0; r < mbits; ++r)
            for (int j = 0; j < n; ++j) c.G_M.set(r, j, fair_bit(rng));
        for (int r = 0; r < wbits; ++r)
            for (int j = 0; j < n; ++j) c.G_W.set(r, j, fair_bit(rng));
        if (rank(c.stacked_G()) == static_cast<std::size_t>(mbits + wbits)) return c;
        if (attempt > 10000) throw std::runtime_error("no full-rank code at these parameters");
    }
}

BitMatrix sample_parity(int n, int mbits, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        auto rng = make_rng(seed, "coset-H", attempt);
        BitMatrix h(mbits, n);
        for (int r = 0; r < mbits; ++r)
            for (int j = 0; j < n; ++j) h.set(r, j, fair_bit(rng));
        if (rank(h) == static_cast<std::size_t>(mbits)) return h;
        if (attempt > 10000) throw std::runtime_error("no full-rank H at these parameters");
    }
}

std::string csv_config(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ostringstream os;
    for (const auto& [k, v] : kv) os << "# " << k << "=" << v << "\n";
    return os.str();
}

struct CommonOpts {
    int n = 0, mbits = 0, wbits = 0, k = 2, rn = 0, pn = 0, trials = 100;
    std::uint64_t seed = 0;
    double p = 0, eps = 0;
    std::string channel = "bsc:0.3";
    std::string mode = "exhaustive";
    std::string out = "-";
    std::string code_path;
};

SearchMode parse_mode(const std::string& mode) {
    if (mode == "exhaustive") return SearchMode::Exhaustive;
    if (mode == "sampled") return SearchMode::Sampled;
    throw std::runtime_error("mode must be exhaustive or sampled");
}

// --- subcommands ---

int run_fig1(const CommonOpts& o) {
    std::ostringstream os;
    os << csv_config({{"subcommand", "fig1-data"}, {"p", fmt(o.p)}});
    os << "r,lower,upper,plotkin_threshold,eb_threshold\n";
    for (int i = 0; i <= 100; ++i) {
        double r = i / 100.0;
        auto [lo, hi] = capacity_bounds(o.p, r);
        // plotkin_bound's domain is (0, 1/2]; extend by its limits for plotting
        double plotkin = r <= 0 ? 1.0 : (r > 0.5 ? 0.0 : plotkin_bound(r));
        os << fmt(r) << ',' << fmt(lo) << ',' << fmt(hi) << ',' << fmt(plotkin) << ','
           << fmt(eb_threshold(r)) << '\n';
    }
    write_artifact(o.out, os.str());
    return 0;
}

json leakage_report_json(const LeakageReport& rep) {
    json r;
    r["read_set"] = one_based(rep.read_set.indices);
    r["uniform_mi"] = rep.uniform_mi;
    r["capacity_mi"] = rep.capacity_mi;
    r["exact"] = rep.exact;
    if (rep.certificate)
        r["certificate"] = one_based(*rep.certificate);
    else
        r["certificate"] = nullptr;
    return r;
}

int run_leakage_exact(const CommonOpts& o) {
    LinearCode c = o.code_path.empty() ? bundled_example() : load_linear(o.code_path);
    if (o.rn > c.n) throw std::runtime_error("rn exceeds n");
    auto norm = normalize_linear(c);
    if (!norm.code) throw std::runtime_error("degenerate code: " + norm.note);
    auto cb = materialize(*norm.code);
    LeakageReport rep = sem_leakage(cb, o.rn, parse_mode(o.mode), o.trials,
                                    derive_seed(o.seed, "leakage-exact", 0));
    json out;
    out["config"] = {{"subcommand", "leakage-exact"},
                     {"code", o.code_path.empty() ? "builtin-example" : o.code_path},
                     {"n", c.n},        {"mbits", c.mbits}, {"wbits", norm.code->wbits},
                     {"rn", o.rn},      {"mode", o.mode},   {"trials", o.trials},
                     {"seed", o.seed}};
    out["report"] = leakage_report_json(rep);
    write_artifact(o.out, out.dump(2) + "\n");
    return 0;
}

int run_attack_linear(const CommonOpts& o) {
    LinearCode c =
        o.code_path.empty() ? sample_linear(o.n, o.mbits, o.wbits, o.seed) : load_linear(o.code_path);
    if (o.rn > c.n) throw std::runtime_error("rn exceeds n");
    LeakageReport rep = converse_attack(c, o.rn);
    json out;
    out["config"] = {{"subcommand", "attack-linear"},
                     {"code", o.code_path.empty() ? "sampled" : o.code_path},
                     {"n", c.n},   {"mbits", c.mbits}, {"wbits", c.wbits},
                     {"rn", o.rn}, {"seed", o.seed}};
    out["code"] = {{"G_M", c.G_M.to_text()}, {"G_W", c.G_W.to_text()}};
    out["report"] = leakage_report_json(rep);
    write_artifact(o.out, out.dump(2) + "\n");
    return 0;
}

int run_coset_attack(const CommonOpts& o) {
    CosetCode c;
    if (o.code_path.empty()) {
        c.n = o.n;
        c.mbits = o.mbits;
        c.H = sample_parity(o.n, o.mbits, o.seed);
    } else {
        c = load_coset(o.code_path);
    }
    if (o.rn > c.n) throw std::runtime_error("rn exceeds n");
    std::size_t eq = ozarow_equivocation(c.H, o.rn);
    json out;
    out["config"] = {{"subcommand", "coset-attack"},
                     {"code", o.code_path.empty() ? "sampled" : o.code_path},
                     {"n", c.n},   {"mbits", c.mbits},
                     {"rn", o.rn}, {"seed", o.seed}};
    out["code"] = {{"H", c.H.to_text()}};
    out["report"] = {{"equivocation_bits", eq}, {"leakage_lb", coset_leakage_lb(c, o.rn)}};
    write_artifact(o.out, out.dump(2) + "\n");
    return 0;
}

/// Meet in the middle over the syndrome columns: a repeated XOR among subsets
/// of size <= t witnesses a dependent set of size <= 2t.
int run_kwise_check(const CommonOpts& o) {
    const int b = o.mbits + o.wbits;
    if (b < 1 || b > 8) throw std::runtime_error("kwise-check needs 1 <= mbits + wbits <= 8");
    const int t = (o.k + 1) / 2;
    if (t > 3) throw std::runtime_error("kwise-check supports k <= 6");
    Field field(b);
    const int ncols = static_cast<int>(field.order());
    std::vector<std::uint64_t> cols(ncols + 1, 0);
    for (int j = 1; j <= ncols; ++j) cols[j] = bch_column(field, j, t).to_uint();

    // value in the high bits, packed 1-based column triple in the low 24 bits
    std::vector<std::pair<std::uint64_t, std::uint32_t>> sums;
    sums.emplace_back(0, 0);
    for (int j1 = 1; j1 <= ncols; ++j1) {
        sums.emplace_back(cols[j1], static_cast<std::uint32_t>(j1));
        if (t < 2) continue;
        for (int j2 = j1 + 1; j2 <= ncols; ++j2) {
            sums.emplace_back(cols[j1] ^ cols[j2],
                              static_cast<std::uint32_t>(j1 | (j2 << 8)));
            if (t < 3) continue;
            for (int j3 = j2 + 1; j3 <= ncols; ++j3)
                sums.emplace_back(cols[j1] ^ cols[j2] ^ cols[j3],
                                  static_cast<std::uint32_t>(j1 | (j2 << 8) | (j3 << 16)));
        }
    }
    std::sort(sums.begin(), sums.end());
    std::vector<int> violation;
    for (std::size_t i = 1; i < sums.size() && violation.empty(); ++i) {
        if (sums[i].first != sums[i - 1].first) continue;
        // symmetric difference of the two subsets is a dependent set
        std::vector<int> a, bset;
        for (auto packed : {sums[i - 1].second, sums[i].second})
            for (int shift = 0; shift < 24; shift += 8) {
                int j = (packed >> shift) & 0xFF;
                if (j) (packed == sums[i - 1].second ? a : bset).push_back(j);
            }
        for (int j : a)
            if (std::find(bset.begin(), bset.end(), j) == bset.end()) violation.push_back(j);
        for (int j : bset)
            if (std::find(a.begin(), a.end(), j) == a.end()) violation.push_back(j);
        std::sort(violation.begin(), violation.end());
    }
    json out;
    out["config"] = {{"subcommand", "kwise-check"}, {"b", b}, {"k", o.k}, {"t", t}};
    out["report"] = {{"columns", ncols},
                     {"subsets_checked", sums.size()},
                     {"independent", violation.empty()}};
    if (!violation.empty()) out["report"]["violation"] = violation;  // already 1-based
    write_artifact(o.out, out.dump(2) + "\n");
    return violation.empty() ? 0 : 1;
}

int run_softcover(const CommonOpts& o, const std::vector<int>& nlist, int keybits) {
    if (o.k % 2 != 0 || o.k < 4)
        throw std::runtime_error("softcover-run requires even k >= 4");
    Dmc ch = parse_channel(o.channel);
    if (ch.in_size() != 2)
        throw std::runtime_error("softcover-run uses the exact binary-input sampler");
    Pmf qu = Pmf::uniform(2);

    std::ostringstream os;
    std::ostringstream nspec;
    for (std::size_t i = 0; i < nlist.size(); ++i) nspec << (i ? "," : "") << nlist[i];
    os << csv_config({{"subcommand", "softcover-run"},
                      {"n", nspec.str()},
                      {"keybits", std::to_string(keybits)},
                      {"k", std::to_string(o.k)},
                      {"channel", o.channel},
                      {"eps", fmt(o.eps)},
                      {"trials", std::to_string(o.trials)},
                      {"seed", std::to_string(o.seed)}});
    os << "n,trial,divergence,p2_mass,delta1_max\n";

    std::vector<double> mean_div;
    for (int n : nlist) {
        double total = 0;
        for (int trial = 0; trial < o.trials; ++trial) {
            std::uint64_t s =
                derive_seed(o.seed, "softcover-run", (std::uint64_t{static_cast<std::uint32_t>(n)} << 32) | trial);
            CodebookU cb = sample_kwise_codebook(n, keybits, o.k, s);
            auto d = typical_split(cb, ch, qu, o.eps);
            total += d.divergence;
            os << n << ',' << trial << ',' << fmt(d.divergence) << ',' << fmt(d.p2_mass) << ','
               << fmt(d.delta1_max) << '\n';
        }
        mean_div.push_back(o.trials > 0 ? total / o.trials : 0.0);
    }
    // least-squares slope of ln(mean) against n: an empirical decay exponent,
    // reported without any claim about the true constant
    if (nlist.size() >= 2 &&
        std::all_of(mean_div.begin(), mean_div.end(), [](double d) { return d > 0; })) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < nlist.size(); ++i) {
            double x = nlist[i], y = std::log(mean_div[i]);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
        }
        double m = nlist.size();
        double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        os << "# empirical_decay_exponent=" << fmt(-slope) << "\n";
    }
    write_artifact(o.out, os.str());
    return 0;
}

int run_reliability(const CommonOpts& o) {
    if (o.pn > o.n || o.rn > o.n) throw std::runtime_error("pn and rn must not exceed n");
    PseudolinearCode code =
        sample_pseudolinear(o.n, o.mbits, o.wbits, o.k, derive_seed(o.seed, "reliability-sim", 0));
    Codebook cb = materialize(code);

    std::ostringstream os;
    os << csv_config({{"subcommand", "reliability-sim"},
                      {"n", std::to_string(o.n)},
                      {"mbits", std::to_string(o.mbits)},
                      {"wbits", std::to_string(o.wbits)},
                      {"k", std::to_string(o.k)},
                      {"pn", std::to_string(o.pn)},
                      {"rn", std::to_string(o.rn)},
                      {"trials", std::to_string(o.trials)},
                      {"seed", std::to_string(o.seed)}});
    os << "code_sample,strategy,trials,max_error\n";
    std::vector<AdversaryStrategy> strategies = {
        {AdversaryKind::None, 0, 0, 0},
        {AdversaryKind::ObliviousExhaustive, o.pn, 0, 0},
        {AdversaryKind::ZAwareGreedy, o.pn, o.rn, derive_seed(o.seed, "reliability-sim", 1)},
        {AdversaryKind::Random, o.pn, 0, derive_seed(o.seed, "reliability-sim", 2)},
    };
    for (const auto& s : strategies) {
        ReliabilityReport rep = error_prob(cb, s, o.trials, s.seed);
        os << 0 << ',' << rep.strategy << ',' << rep.trials << ',' << fmt(rep.max_error) << '\n';
    }
    write_artifact(o.out, os.str());
    return 0;
}

int run_theorem2(const CommonOpts& o, int code_samples, double leak_threshold, double delta) {
    if (o.pn > o.n || o.rn > o.n) throw std::runtime_error("pn and rn must not exceed n");
    Theorem2Report rep =
        theorem2_experiment(o.n, o.mbits, o.wbits, o.k, o.pn, o.rn, code_samples, o.trials,
                            o.seed, leak_threshold, delta, parse_mode(o.mode));
    std::ostringstream os;
    os << csv_config({{"subcommand", "theorem2-run"},
                      {"n", std::to_string(o.n)},
                      {"mbits", std::to_string(o.mbits)},
                      {"wbits", std::to_string(o.wbits)},
                      {"k", std::to_string(o.k)},
                      {"pn", std::to_string(o.pn)},
                      {"rn", std::to_string(o.rn)},
                      {"code_samples", std::to_string(code_samples)},
                      {"trials", std::to_string(o.trials)},
                      {"leak_threshold", fmt(leak_threshold)},
                      {"delta", fmt(delta)},
                      {"mode", o.mode},
                      {"seed", std::to_string(o.seed)}});
    os << "sample,code_seed,leakage,leakage_exact,max_error\n";
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
        const auto& s = rep.samples[i];
        os << i << ',' << s.code_seed << ',' << fmt(s.leakage) << ','
           << (s.leakage_exact ? 1 : 0) << ',' << fmt(s.max_error) << '\n';
    }
    os << "# joint_success_fraction=" << fmt(rep.joint_success_fraction) << "\n";
    write_artifact(o.out, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiretap-code experiment runner"};
    app.require_subcommand(1);
    CommonOpts o;
    std::vector<int> nlist;
    int keybits = 4;
    int code_samples = 20;
    double leak_threshold = 0.0625, delta = 0.05;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed);
        sub->add_option("--out", o.out);
    };

    auto* fig1 = app.add_subcommand("fig1-data", "Capacity bound curves on an r grid");
    fig1->add_option("--p", o.p)->check(CLI::Range(0.0, 0.5));
    add_common(fig1);

    auto* lex = app.add_subcommand("leakage-exact", "Read-set leakage of a linear code");
    lex->add_option("--code", o.code_path);
    lex->add_option("--rn", o.rn)->required()->check(CLI::NonNegativeNumber);
    lex->add_option("--mode", o.mode);
    lex->add_option("--trials", o.trials);
    add_common(lex);

    auto* atk = app.add_subcommand("attack-linear", "Dependent-column attack on a linear code");
    atk->add_option("--code", o.code_path);
    atk->add_option("--n", o.n);
    atk->add_option("--mbits", o.mbits);
    atk->add_option("--wbits", o.wbits);
    atk->add_option("--rn", o.rn)->required()->check(CLI::NonNegativeNumber);
    add_common(atk);

    auto* cst = app.add_subcommand("coset-attack", "Equivocation attack on a coset code");
    cst->add_option("--code", o.code_path);
    cst->add_option("--n", o.n);
    cst->add_option("--mbits", o.mbits);
    cst->add_option("--rn", o.rn)->required()->check(CLI::NonNegativeNumber);
    add_common(cst);

    auto* kw = app.add_subcommand("kwise-check", "Syndrome-column independence certificate");
    kw->add_option("--mbits", o.mbits);
    kw->add_option("--wbits", o.wbits);
    kw->add_option("--k", o.k)->required();
    add_common(kw);

    auto* sc = app.add_subcommand("softcover-run", "Soft-covering divergence experiment");
    sc->add_option("--n", nlist)->required();
    sc->add_option("--keybits", keybits)->required();
    sc->add_option("--k", o.k)->required();
    sc->add_option("--channel", o.channel);
    sc->add_option("--eps", o.eps)->check(CLI::NonNegativeNumber);
    sc->add_option("--trials", o.trials);
    add_common(sc);

    auto* rel = app.add_subcommand("reliability-sim", "Decoding error under adversary strategies");
    rel->add_option("--n", o.n)->required();
    rel->add_option("--mbits", o.mbits)->required();
    rel->add_option("--wbits", o.wbits)->required();
    rel->add_option("--k", o.k);
    rel->add_option("--pn", o.pn)->check(CLI::NonNegativeNumber);
    rel->add_option("--rn", o.rn)->check(CLI::NonNegativeNumber);
    rel->add_option("--trials", o.trials);
    add_common(rel);

    auto* th2 = app.add_subcommand("theorem2-run", "Joint secrecy + reliability experiment");
    th2->add_option("--n", o.n)->required();
    th2->add_option("--mbits", o.mbits)->required();
    th2->add_option("--wbits", o.wbits)->required();
    th2->add_option("--k", o.k);
    th2->add_option("--pn", o.pn)->check(CLI::NonNegativeNumber);
    th2->add_option("--rn", o.rn)->check(CLI::NonNegativeNumber);
    th2->add_option("--code-samples", code_samples);
    th2->add_option("--trials", o.trials);
    th2->add_option("--leak-threshold", leak_threshold);
    th2->add_option("--delta", delta);
    th2->add_option("--mode", o.mode);
    add_common(th2);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fig1) return run_fig1(o);
        if (*lex) return run_leakage_exact(o);
        if (*atk) return run_attack_linear(o);
        if (*cst) return run_coset_attack(o);
        if (*kw) return run_kwise_check(o);
        if (*sc) return run_softcover(o, nlist, keybits);
        if (*rel) return run_reliability(o);
        if (*th2) return run_theorem2(o, code_samples, leak_threshold, delta);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
