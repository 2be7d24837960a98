#include "treelab/hitting.hpp"

#include <algorithm>
#include <stdexcept>

namespace treelab {

std::vector<LevelSet> HittingInstance::effective_family() const {
    std::vector<LevelSet> out;
    for (const auto& d : family) {
        if (base.height() > d.height()) continue;
        if (level_relation(base, d).is_prefix) out.push_back(d);
    }
    return out;
}

bool is_hitting_set(const ClopenSet& v, const HittingInstance& inst) {
    for (const auto& d : inst.effective_family()) {
        bool hit = false;
        for (const auto& sigma : d.members())
            if (v.contains_cylinder(sigma)) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

Dyadic hitting_max_cost(const ClopenSet& v, const LevelSet& q) {
    Dyadic m;
    for (const auto& tau : q.members()) m = std::max(m, v.relative_measure(tau));
    return m;
}

namespace {

void hitting_search(const std::vector<LevelSet>& edges, std::size_t idx, const ClopenSet& v,
                    const LevelSet& q, Dyadic& best) {
    if (hitting_max_cost(v, q) >= best) return;
    if (idx == edges.size()) {
        best = hitting_max_cost(v, q);
        return;
    }
    const auto& d = edges[idx];
    for (const auto& sigma : d.members())
        if (v.contains_cylinder(sigma)) { // edge already hit, no extra cost
            hitting_search(edges, idx + 1, v, q, best);
            return;
        }
    for (const auto& sigma : d.members())
        hitting_search(edges, idx + 1, v.with(sigma), q, best);
}

} // namespace

Rational hitting_cost(const HittingInstance& inst) {
    auto edges = inst.effective_family();
    if (edges.empty()) return Rational(0);
    // most constrained edges first
    std::sort(edges.begin(), edges.end(),
              [](const LevelSet& a, const LevelSet& b) { return a.size() < b.size(); });
    Dyadic best(2); // above any possible cost
    hitting_search(edges, 0, ClopenSet(), inst.base, best);
    return best.to_rational();
}

Dyadic robustness(const LevelSet& q, const FinTree& w) {
    if (w.level(q.height()) != q)
        throw std::invalid_argument("robustness: Q is not a level of W");
    if (!w.is_pruned())
        throw std::invalid_argument("robustness: W must be pruned");
    ClopenSet leaves = w.deepest_level().clopen();
    Dyadic m(2);
    for (const auto& tau : q.members()) m = std::min(m, leaves.relative_measure(tau));
    return m;
}

Dyadic family_robustness(const WitnessFamily& fam) {
    Dyadic best;
    for (const auto& w : fam.witnesses) best = std::max(best, robustness(fam.base, w));
    return best;
}

FinTree cost_tree(const std::map<BitString, Rational>& costs, const Rational& q,
                  std::size_t depth) {
    if (q.sign() <= 0 || q >= Rational(1))
        throw std::invalid_argument("cost_tree: need 0 < q < 1");
    Rational bar = Rational(1) - q;
    std::vector<BitString> picked;
    for (const auto& [sigma, cost] : costs)
        if (sigma.length() <= depth && cost > bar) picked.push_back(sigma);
    return FinTree::closure(picked);
}

std::pair<BigInt, BigInt> divergence_count_bound(unsigned k, unsigned e, unsigned n) {
    if (k <= e + n + 2)
        throw std::invalid_argument("divergence_count_bound: need k > e+n+2");
    BigInt lhs = (BigInt(1) << (k - e - n - 1)) + (BigInt(1) << n) * (BigInt(1) << (k - e - n - 2));
    BigInt rhs = BigInt(1) << (k - e);
    return {lhs, rhs};
}

namespace {

struct Group {
    std::set<BitString> sigmas; // the σ's a refined point belongs to
    std::size_t count = 0;      // refined cylinders with exactly this σ-set
};

// Exact max-coverage search for D_τ. Groups are visited in descending mass
// order; a branch is cut unless it can still strictly beat the incumbent,
// so the first optimum found in this fixed order is the one reported.
struct DSearch {
    std::size_t cap; // |D| = 2^{k-e-n-2}
    const std::vector<Group>* groups;
    std::size_t best_covered = 0;
    std::set<BitString> best_union;
    bool found = false;

    void run(std::size_t idx, std::set<BitString> u, std::size_t covered,
             std::size_t remaining) {
        if (found && covered + remaining <= best_covered) return;
        if (idx == groups->size()) {
            best_covered = covered;
            best_union = std::move(u);
            found = true;
            return;
        }
        const Group& g = (*groups)[idx];
        std::set<BitString> merged = u;
        merged.insert(g.sigmas.begin(), g.sigmas.end());
        if (merged.size() <= cap)
            run(idx + 1, std::move(merged), covered + g.count, remaining - g.count);
        run(idx + 1, std::move(u), covered, remaining - g.count);
    }
};

} // namespace

DivergencePartition divergence_partition(
    unsigned k, unsigned e, unsigned n, const LevelSet& q,
    const std::map<std::pair<BitString, BitString>, ClopenSet>& h) {
    if (k <= e + n + 2)
        throw std::invalid_argument("divergence_partition: need k > e+n+2");
    if (q.size() != (std::size_t(1) << n))
        throw std::invalid_argument("divergence_partition: |Q| must be 2^n");
    for (const auto& [key, set] : h) {
        if (key.first.length() != k)
            throw std::invalid_argument("divergence_partition: σ must have length k");
        if (!q.contains(key.second))
            throw std::invalid_argument("divergence_partition: τ outside Q");
        for (const auto& g : set.generators())
            if (!key.second.is_prefix_of(g))
                throw std::invalid_argument("divergence_partition: H(σ,τ) must lie inside ⟦τ⟧");
    }

    DivergencePartition out;
    Rational light_bar = Rational::pow2(-static_cast<long>(e + n + 4));
    std::size_t cap = std::size_t(1) << (k - e - n - 2);

    auto sigmas = BitString::level(k);
    auto h_of = [&](const BitString& sigma, const BitString& tau) -> const ClopenSet* {
        auto it = h.find({sigma, tau});
        return it == h.end() ? nullptr : &it->second;
    };

    for (const auto& sigma : sigmas) {
        Rational mx;
        for (const auto& tau : q.members()) {
            const ClopenSet* hs = h_of(sigma, tau);
            if (hs) mx = std::max(mx, hs->relative_measure(tau).to_rational());
        }
        if (mx < light_bar) out.g.insert(sigma);
    }

    for (const auto& tau : q.members()) {
        // common refinement depth for this τ
        std::size_t depth = tau.length();
        for (const auto& sigma : sigmas) {
            const ClopenSet* hs = h_of(sigma, tau);
            if (hs) depth = std::max(depth, hs->max_length());
        }
        std::size_t rel = depth - tau.length();

        std::map<std::set<BitString>, std::size_t> group_index;
        std::size_t m_prime_count = 0;
        for (const auto& w : BitString::level(rel)) {
            BitString x = tau * w;
            std::set<BitString> owners;
            for (const auto& sigma : sigmas) {
                const ClopenSet* hs = h_of(sigma, tau);
                if (hs && hs->contains_refined(x)) owners.insert(sigma);
            }
            if (owners.size() > cap) continue; // x ∈ M_τ, excluded from M'_τ
            ++m_prime_count;
            if (!owners.empty()) ++group_index[owners];
        }
        out.m_prime_mass[tau] =
            Dyadic(BigInt(static_cast<long>(m_prime_count)), static_cast<unsigned>(rel));

        std::vector<Group> groups;
        for (const auto& [sg, cnt] : group_index) groups.push_back({sg, cnt});
        std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
            if (a.count != b.count) return a.count > b.count;
            return a.sigmas < b.sigmas;
        });
        std::size_t total = 0;
        for (const auto& g : groups) total += g.count;

        DSearch search{cap, &groups};
        search.run(0, {}, 0, total);
        std::set<BitString> d_tau = search.best_union;
        for (const auto& sigma : sigmas) { // pad to full size, lex-least first
            if (d_tau.size() == cap) break;
            d_tau.insert(sigma);
        }
        out.d[tau] = std::move(d_tau);
    }

    std::set<BitString> uni;
    for (const auto& sigma : sigmas)
        if (!out.g.count(sigma)) uni.insert(sigma);
    for (const auto& [tau, d_tau] : out.d) uni.insert(d_tau.begin(), d_tau.end());
    out.union_count = uni.size();
    auto [lhs, rhs] = divergence_count_bound(k, e, n);
    out.count_bound = lhs;
    out.count_limit = rhs;
    out.count_ok = BigInt(static_cast<long>(out.union_count)) <= lhs && lhs < rhs;
    return out;
}

} // namespace treelab
