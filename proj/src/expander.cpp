#include "treelab/expander.hpp"

#include <map>
#include <stdexcept>

namespace treelab {

StagedExpander::StagedExpander(std::vector<ExpanderEntry> entries)
    : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.output.size() < e.k)
            throw std::invalid_argument("StagedExpander: output smaller than arity");
        max_stage_ = std::max(max_stage_, e.stage);
    }
    // decided oracle prefixes form an antichain per arity
    for (std::size_t i = 0; i < entries_.size(); ++i)
        for (std::size_t j = i + 1; j < entries_.size(); ++j) {
            const auto &a = entries_[i], &b = entries_[j];
            if (a.k == b.k && a.oracle.comparable(b.oracle))
                throw std::invalid_argument("StagedExpander: comparable oracle prefixes at one arity");
        }
}

std::vector<const ExpanderEntry*> StagedExpander::active(std::size_t k, unsigned s) const {
    std::vector<const ExpanderEntry*> out;
    for (const auto& e : entries_)
        if (e.k == k && e.stage <= s) out.push_back(&e);
    return out;
}

bool is_free(const LevelSet& m, const ClopenSet& v) {
    for (const auto& s : m.members())
        if (!is_free(s, v)) return false;
    return true;
}

StringHypergraph expander_hypergraph(const StagedExpander& phi, std::size_t k, unsigned s,
                                     const ClopenSet& v) {
    std::map<std::set<BitString>, Rational> weights;
    for (const auto* e : phi.active(k, s)) {
        if (!is_free(e->output, v)) continue;
        weights[e->output.members()] +=
            Dyadic::cylinder(static_cast<unsigned>(e->oracle.length())).to_rational();
    }
    std::vector<Edge> edges;
    for (auto& [verts, w] : weights) edges.push_back({verts, w});
    return StringHypergraph(std::move(edges));
}

namespace {

// μ(F_s): oracle mass of active entries whose output is not V-free.
// Oracle prefixes are an antichain, so plain summation is exact.
Dyadic non_free_mass(const std::vector<const ExpanderEntry*>& active, const ClopenSet& v) {
    Dyadic m;
    for (const auto* e : active)
        if (!is_free(e->output, v))
            m += Dyadic::cylinder(static_cast<unsigned>(e->oracle.length()));
    return m;
}

Dyadic total_mass(const std::vector<const ExpanderEntry*>& active) {
    Dyadic m;
    for (const auto* e : active) m += Dyadic::cylinder(static_cast<unsigned>(e->oracle.length()));
    return m;
}

} // namespace

CoveringRun covering_enumerate(const StagedExpander& phi, std::size_t k, const Rational& eps) {
    if (k == 0 || eps.sign() <= 0)
        throw std::invalid_argument("covering_enumerate: need k >= 1 and ε > 0");
    CoveringRun run;
    run.delta = Rational(1) / (Rational(static_cast<long>(k)) * eps);

    for (unsigned s = 0; s <= phi.max_stage(); ++s) {
        auto active = phi.active(k, s);
        while (true) {
            Dyadic h = total_mass(active);
            Dyadic f = non_free_mass(active, run.v);
            Dyadic p = h - f;
            if (p.to_rational() <= run.delta) break;

            StringHypergraph g = expander_hypergraph(phi, k, s, run.v);
            auto tau = light_vertex(g, k, run.delta);
            if (!tau)
                throw std::logic_error("covering_enumerate: light vertex missing on k-fat graph");

            CoveringStep step;
            step.stage = s;
            step.tau = *tau;
            step.p_before = p;
            step.mu_v_before = run.v.measure();
            step.g_tau = extension_edge_weight(g, *tau);
            run.v = run.v.with(*tau);
            Dyadic f2 = non_free_mass(active, run.v);
            step.delta_f = f2 - f;
            step.p_after = h - f2;
            step.mu_v_after = run.v.measure();
            run.trace.push_back(std::move(step));
        }
    }

    auto final_active = phi.active(k, phi.max_stage());
    std::vector<BitString> h_gens, f_gens;
    for (const auto* e : final_active) {
        h_gens.push_back(e->oracle);
        if (!is_free(e->output, run.v)) f_gens.push_back(e->oracle);
    }
    run.h_final = ClopenSet(std::move(h_gens));
    run.f_final = ClopenSet(std::move(f_gens));
    run.d_measure = total_mass(final_active) - non_free_mass(final_active, run.v);
    return run;
}

std::vector<DifferenceComponent> difference_test(const StagedExpander& phi, unsigned k_max,
                                                 const std::vector<Rational>& eps_schedule) {
    std::vector<DifferenceComponent> out;
    for (unsigned k = 0; k <= k_max; ++k) {
        DifferenceComponent c;
        c.k = k;
        c.arity = std::size_t(1) << (2 * k); // n_k = 2^{2k}
        c.eps = k < eps_schedule.size() ? eps_schedule[k] : Rational(1, BigInt(1) << k);
        c.run = covering_enumerate(phi, c.arity, c.eps);
        c.v_bound_ok = c.run.v.measure().to_rational() <= c.eps;
        c.d_bound_ok = c.run.d_measure.to_rational() <=
                       Rational(1) / (Rational(static_cast<long>(c.arity)) * c.eps);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace treelab
