// Batch front end: loads an instance, runs one operation or sweep, emits a
// verification report and exits 0 iff every asserted inequality passes.

#include "treelab/generators.hpp"
#include "treelab/io.hpp"
#include "treelab/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace treelab;

namespace {

struct Config {
    std::string cmd;
    std::string input;
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 1;
    std::size_t k = 2;
    std::string eps = "1/2";
    long c = 0;
    unsigned n = 1;
    unsigned e = 0;
    std::string q = "1/2";
    std::size_t depth = 4;
};

std::string need_input(const Config& cfg) {
    if (cfg.input.empty()) throw std::runtime_error("missing input: --input is required");
    return read_file(cfg.input);
}

std::map<BitString, Rational> parse_costs(const std::string& text) {
    std::map<BitString, Rational> costs;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("cost entries are 'σ=p/q'");
        costs.emplace(BitString::parse(tok.substr(0, eq)), Rational::parse(tok.substr(eq + 1)));
    }
    return costs;
}

/// "Q: τ…" header plus lines "σ τ : g₁ g₂ …".
std::pair<LevelSet, std::map<std::pair<BitString, BitString>, ClopenSet>>
parse_divergence(const std::string& text) {
    std::vector<BitString> q;
    std::map<std::pair<BitString, BitString>, ClopenSet> h;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks[0] == "Q:") {
            for (std::size_t i = 1; i < toks.size(); ++i) q.push_back(BitString::parse(toks[i]));
            continue;
        }
        if (toks.size() < 4 || toks[2] != ":")
            throw std::invalid_argument("divergence line: expected 'σ τ : g…'");
        std::vector<BitString> gens;
        for (std::size_t i = 3; i < toks.size(); ++i) gens.push_back(BitString::parse(toks[i]));
        h.emplace(std::make_pair(BitString::parse(toks[0]), BitString::parse(toks[1])),
                  ClopenSet(gens));
    }
    return {LevelSet(std::move(q)), std::move(h)};
}

void run_measure(const Config& cfg, Report& rep) {
    ClopenSet v(parse_strings(need_input(cfg)));
    rep.add("measure", v.measure().to_rational().str(), "1", "<=",
            v.measure().to_rational() <= Rational(1));
}

void run_concat(const Config& cfg, Report& rep) {
    auto q = parse_strings(need_input(cfg));
    Rational base = ClopenSet(q).measure().to_rational();
    Rational lhs = concat_power(q, cfg.n).measure().to_rational();
    Rational rhs(1);
    for (unsigned i = 0; i < cfg.n; ++i) rhs *= base;
    rep.add("mu(Q^" + std::to_string(cfg.n) + ")", lhs.str(), rhs.str(), "==", lhs == rhs);
}

void run_kernel(const Config& cfg, Report& rep) {
    StringHypergraph h = parse_hypergraph(need_input(cfg));
    KernelGraph kg = kernel(h);
    Rational sw = h.total_edge_weight(), kw = kg.graph.total_edge_weight();
    rep.add("weight-conservation", sw.str(), kw.str(), "==", sw == kw);
    bool same_cover = h.vertex_clopen() == kg.graph.vertex_clopen();
    rep.add("vertex-cover", serialize(h.vertex_clopen()), serialize(kg.graph.vertex_clopen()),
            "==", same_cover);
    KernelGraph kg2 = kernel(kg.graph);
    bool idem = kg2.graph.vertices() == kg.graph.vertices() &&
                kg2.graph.total_edge_weight() == kw;
    rep.add("idempotent", "kernel(kernel(H))", "kernel(H)", "==", idem);
}

void run_fatness(const Config& cfg, Report& rep) {
    StringHypergraph h = parse_hypergraph(need_input(cfg));
    FatnessReport fr = fatness_sum(h, cfg.k);
    rep.add("fatness", fr.sum.str(), fr.bound.str(), ">=", fr.holds);
}

void run_light(const Config& cfg, Report& rep) {
    StringHypergraph h = parse_hypergraph(need_input(cfg));
    auto tau = light_vertex(h, cfg.k);
    if (!tau) {
        rep.add("light-vertex", "none", "some", "==", false);
        return;
    }
    Rational g = extension_edge_weight(h, *tau);
    Rational bound = h.total_edge_weight() * Rational(static_cast<long>(cfg.k)) *
                     Rational::pow2(-static_cast<long>(tau->length()));
    rep.add("light-vertex " + tau->str(), g.str(), bound.str(), ">=", g >= bound);
}

void run_cover(const Config& cfg, Report& rep) {
    StagedExpander phi = parse_expander(need_input(cfg));
    Rational eps = Rational::parse(cfg.eps);
    CoveringRun run = covering_enumerate(phi, cfg.k, eps);
    Rational mv = run.v.measure().to_rational();
    rep.add("mu(V)", mv.str(), eps.str(), "<=", mv <= eps);
    Rational d = run.d_measure.to_rational();
    rep.add("mu(D)", d.str(), run.delta.str(), "<=", d <= run.delta);
    for (std::size_t i = 0; i < run.trace.size(); ++i) {
        const auto& st = run.trace[i];
        Rational df = st.delta_f.to_rational();
        Rational dv = (st.mu_v_after - st.mu_v_before).to_rational();
        Rational bound = run.delta * Rational(static_cast<long>(cfg.k)) * dv;
        rep.add("step-" + std::to_string(i) + " " + st.tau.str(), df.str(), bound.str(),
                ">=", df >= bound);
    }
}

void run_difftest(const Config& cfg, Report& rep) {
    StagedExpander phi = parse_expander(need_input(cfg));
    for (const auto& comp : difference_test(phi, static_cast<unsigned>(cfg.k))) {
        Rational mv = comp.run.v.measure().to_rational();
        rep.add("V_" + std::to_string(comp.k), mv.str(), comp.eps.str(), "<=", comp.v_bound_ok);
        Rational d = comp.run.d_measure.to_rational();
        rep.add("D_" + std::to_string(comp.k), d.str(), comp.run.delta.str(), "<=",
                comp.d_bound_ok);
    }
}

void run_hitcost(const Config& cfg, Report& rep) {
    HittingInstance inst = parse_hitting(need_input(cfg));
    Rational cost = hitting_cost(inst);
    rep.add("hitting-cost", cost.str(), "1", "<=", cost <= Rational(1));
}

void run_costtree(const Config& cfg, Report& rep) {
    auto costs = parse_costs(need_input(cfg));
    Rational q = Rational::parse(cfg.q);
    FinTree t = cost_tree(costs, q, cfg.depth);
    Rational bar = Rational(1) - q;
    for (const auto& sigma : t.deepest_level().members()) {
        auto it = costs.find(sigma);
        Rational c = it == costs.end() ? Rational(0) : it->second;
        rep.add("leaf " + sigma.str(), c.str(), bar.str(), ">", c > bar);
    }
    if (t.empty()) rep.add("empty-tree", "0", "0", "==", true);
}

void run_divpart(const Config& cfg, Report& rep) {
    auto [q, h] = parse_divergence(need_input(cfg));
    DivergencePartition dp =
        divergence_partition(static_cast<unsigned>(cfg.k), cfg.e, cfg.n, q, h);
    rep.add("union-count", std::to_string(dp.union_count), dp.count_bound.str(), "<=",
            BigInt(static_cast<long>(dp.union_count)) <= dp.count_bound);
    rep.add("count-bound", dp.count_bound.str(), dp.count_limit.str(), "<",
            dp.count_bound < dp.count_limit);
    for (const auto& [tau, mass] : dp.m_prime_mass) {
        Rational m = mass.to_rational();
        rep.add("mass(M'_" + tau.str() + ")", m.str(), "1/2", ">", m > Rational(1, 2));
    }
}

void run_denseext(const Config& cfg, Report& rep) {
    Condition p = parse_condition(need_input(cfg));
    LevelSet e = p.t.level(cfg.e);
    LDF out = dense_ext(p.d, e, p.t);
    rep.add("extends", "e", "d", "<=", ldf_extends(out, p.d));
    DenseStatus st = dense_status(p.t, out);
    rep.add("density-slack", st.max_slack.str(), "0", ">", st.max_slack.sign() > 0);
}

void run_condense(const Config& cfg, Report& rep) {
    Condition p = parse_condition(need_input(cfg));
    auto res = condense(p, cfg.n);
    if (!res) {
        rep.add("condense", "insufficient-depth", "result", "==", false);
        return;
    }
    rep.add("conclusion", res->conclusion_lhs.str(), res->conclusion_rhs.str(), "<",
            res->conclusion_lhs < res->conclusion_rhs);
    rep.add("extends", "q", "p", "<=", condition_extends(res->q, p));
}

void run_branch(const Config& cfg, Report& rep) {
    Condition p = parse_condition(need_input(cfg));
    Condition q = branch(p);
    rep.add("extends", "q", "p", "<=", condition_extends(q, p));
    for (const auto& sigma : p.f.members()) {
        std::size_t ext = 0;
        for (const auto& tau : q.f.members())
            if (sigma.is_prefix_of(tau)) ++ext;
        rep.add("split " + sigma.str(), std::to_string(ext), "2", ">=", ext >= 2);
    }
}

void sweep_divcount(Report& rep) {
    for (unsigned k = 1; k <= 12; ++k)
        for (unsigned e = 0; e < k; ++e)
            for (unsigned n = 0; e + n + 2 < k; ++n) {
                auto [lhs, rhs] = divergence_count_bound(k, e, n);
                rep.add("k=" + std::to_string(k) + " e=" + std::to_string(e) +
                            " n=" + std::to_string(n),
                        lhs.str(), rhs.str(), "<", lhs < rhs);
            }
}

void sweep_fatness(const Config& cfg, Report& rep) {
    Rng rng(cfg.seed);
    std::size_t cases = cfg.n == 0 ? 100 : cfg.n;
    for (std::size_t i = 0; i < cases; ++i) {
        StringHypergraph h = random_k_fat_hypergraph(rng, cfg.k, 8, 12);
        FatnessReport fr = fatness_sum(h, cfg.k);
        rep.add("instance-" + std::to_string(i), fr.sum.str(), fr.bound.str(), ">=", fr.holds);
        FatnessReport kfr = fatness_sum(kernel(h), cfg.k);
        rep.add("kernel-" + std::to_string(i), kfr.sum.str(), kfr.bound.str(), ">=", kfr.holds);
    }
}

} // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"exact-arithmetic laboratory for finite tree combinatorics"};
    app.add_option("--cmd", cfg.cmd,
                   "measure|concat|kernel|fatness|light|cover|difftest|hitcost|costtree|"
                   "divpart|denseext|condense|branch|divcount-sweep|fatness-sweep")
        ->required();
    app.add_option("--input", cfg.input, "input instance file");
    app.add_option("--out", cfg.out, "report output path (default stdout)");
    app.add_option("--format", cfg.format, "json|tsv")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--seed", cfg.seed, "seed for generated corpora");
    app.add_option("--k", cfg.k, "arity / fatness parameter");
    app.add_option("--eps", cfg.eps, "rational epsilon, e.g. 1/2");
    app.add_option("--c", cfg.c, "deficiency constant");
    app.add_option("--n", cfg.n, "power / schedule / case-count parameter");
    app.add_option("--e", cfg.e, "divergence parameter e, or target level");
    app.add_option("--q", cfg.q, "rational threshold, e.g. 3/4");
    app.add_option("--depth", cfg.depth, "depth bound");
    CLI11_PARSE(app, argc, argv);

    Report rep;
    rep.command = cfg.cmd;
    rep.params["seed"] = std::to_string(cfg.seed);
    rep.params["k"] = std::to_string(cfg.k);
    rep.params["eps"] = cfg.eps;
    rep.params["c"] = std::to_string(cfg.c);
    rep.params["n"] = std::to_string(cfg.n);
    rep.params["e"] = std::to_string(cfg.e);
    rep.params["q"] = cfg.q;
    rep.params["depth"] = std::to_string(cfg.depth);
    if (!cfg.input.empty()) rep.params["input"] = cfg.input;

    try {
        if (cfg.cmd == "measure") run_measure(cfg, rep);
        else if (cfg.cmd == "concat") run_concat(cfg, rep);
        else if (cfg.cmd == "kernel") run_kernel(cfg, rep);
        else if (cfg.cmd == "fatness") run_fatness(cfg, rep);
        else if (cfg.cmd == "light") run_light(cfg, rep);
        else if (cfg.cmd == "cover") run_cover(cfg, rep);
        else if (cfg.cmd == "difftest") run_difftest(cfg, rep);
        else if (cfg.cmd == "hitcost") run_hitcost(cfg, rep);
        else if (cfg.cmd == "costtree") run_costtree(cfg, rep);
        else if (cfg.cmd == "divpart") run_divpart(cfg, rep);
        else if (cfg.cmd == "denseext") run_denseext(cfg, rep);
        else if (cfg.cmd == "condense") run_condense(cfg, rep);
        else if (cfg.cmd == "branch") run_branch(cfg, rep);
        else if (cfg.cmd == "divcount-sweep") sweep_divcount(rep);
        else if (cfg.cmd == "fatness-sweep") sweep_fatness(cfg, rep);
        else {
            std::cerr << "unknown command: " << cfg.cmd << "\n";
            return 2;
        }
    } catch (const std::invalid_argument& ex) {
        std::cerr << "precondition violation: " << ex.what() << "\n";
        return 2;
    } catch (const std::runtime_error& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    }

    std::string rendered = rep.render(cfg.format);
    if (cfg.out.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write report: " << cfg.out << "\n";
            return 2;
        }
        out << rendered;
    }
    return rep.pass() ? 0 : 1;
}
