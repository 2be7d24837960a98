#include "treelab/density.hpp"

#include <stdexcept>

namespace treelab {

void LDF::validate() const {
    if (domain.empty()) throw std::invalid_argument("LDF: empty domain");
    for (const auto& sigma : domain.members()) {
        auto it = values.find(sigma);
        if (it == values.end()) throw std::invalid_argument("LDF: missing value");
        if (it->second.sign() < 0 || it->second >= Rational(1))
            throw std::invalid_argument("LDF: values must lie in [0,1)");
    }
    if (values.size() != domain.size())
        throw std::invalid_argument("LDF: value outside domain");
}

LDF LDF::plus(const Rational& eps) const {
    LDF out{domain, {}};
    for (const auto& [sigma, v] : values) out.values.emplace(sigma, v + eps);
    return out;
}

bool ldf_extends(const LDF& e, const LDF& d) {
    if (d.domain.height() > e.domain.height()) return false;
    if (!level_relation(d.domain, e.domain).is_prefix) return false;
    for (const auto& sigma : d.domain.members()) {
        Rational lhs = d.at(sigma) * Rational::pow2(-static_cast<long>(sigma.length()));
        Rational rhs;
        for (const auto& tau : e.domain.members())
            if (sigma.is_prefix_of(tau))
                rhs += e.at(tau) * Rational::pow2(-static_cast<long>(tau.length()));
        if (lhs > rhs) return false;
    }
    return true;
}

DenseStatus dense_status(const LevelSet& e, const LDF& d) {
    DenseStatus st;
    if (d.domain.height() > e.height() || !level_relation(d.domain, e).is_prefix)
        return st; // not even weakly dense without the prefix relation
    ClopenSet ec = e.clopen();
    std::optional<Rational> slack;
    for (const auto& sigma : d.domain.members()) {
        Rational mass = ec.relative_measure(sigma).to_rational();
        Rational s = mass - d.at(sigma);
        if (!slack || s < *slack) slack = s;
    }
    st.max_slack = slack.value_or(Rational(0));
    st.weak = st.max_slack.sign() >= 0;
    return st;
}

DenseStatus dense_status(const FinTree& t, const LDF& d) {
    return dense_status(t.deepest_level(), d);
}

LDF dense_ext(const LDF& d, const LevelSet& e, const FinTree& t) {
    d.validate();
    if (!level_relation(d.domain, e).is_prefix)
        throw std::invalid_argument("dense_ext: domain(d) must be a prefix of E");
    if (t.level(e.height()) != e)
        throw std::invalid_argument("dense_ext: E must be a level of T");
    if (!t.is_pruned())
        throw std::invalid_argument("dense_ext: T must be pruned");

    std::optional<Rational> eps;
    for (const auto& sigma : d.domain.members()) {
        Rational s = t.relative_leaf_measure(sigma).to_rational() - d.at(sigma);
        if (!eps || s < *eps) eps = s;
    }
    if (!eps || eps->sign() <= 0)
        throw std::invalid_argument("dense_ext: T is not d-dense");

    Rational half = *eps / Rational(2);
    LDF out{e, {}};
    for (const auto& tau : e.members()) {
        Rational v = t.relative_leaf_measure(tau).to_rational() - half;
        if (v.sign() < 0) v = Rational(0);
        out.values.emplace(tau, v);
    }

    if (!ldf_extends(out, d)) throw std::logic_error("dense_ext: extension postcondition failed");
    if (dense_status(t, out).max_slack.sign() <= 0)
        throw std::logic_error("dense_ext: density postcondition failed");
    return out;
}

void Condition::validate() const {
    d.validate();
    if (d.domain != f) throw std::invalid_argument("Condition: d must have domain F");
    if (t.level(f.height()) != f)
        throw std::invalid_argument("Condition: F must be a level of T");
    if (!t.is_pruned()) throw std::invalid_argument("Condition: T must be pruned");
    if (dense_status(t, d).max_slack.sign() <= 0)
        throw std::invalid_argument("Condition: T must be d-dense");
}

bool condition_extends(const Condition& q, const Condition& p) {
    if (!ldf_extends(q.d, p.d)) return false;
    for (const auto& node : q.t.nodes())
        if (!p.t.contains(node)) return false;
    return true;
}

std::optional<CondenseResult> condense(const Condition& p, unsigned n, unsigned grid_bits) {
    p.validate();
    std::size_t lp = p.f.height();

    std::map<BitString, Rational> mu; // μ_σ([T_p]) per F_p member
    for (const auto& sigma : p.f.members())
        mu.emplace(sigma, p.t.relative_leaf_measure(sigma).to_rational());

    for (unsigned g = 1; g <= grid_bits; ++g) {
        for (BigInt i = (BigInt(1) << g) - 1; i > 0; --i) {
            if ((i & 1) == 0) continue; // coarser grid, already tried
            Rational delta(i, BigInt(1) << g);
            bool feasible = true;
            for (const auto& sigma : p.f.members())
                if (mu.at(sigma) * (Rational(1) - delta) <= p.d.at(sigma)) { feasible = false; break; }
            if (!feasible) continue;

            Rational eps = delta / Rational(static_cast<long>(n) + 2);
            for (std::size_t lq = lp + 1; lq <= p.t.depth(); ++lq) {
                std::vector<BitString> fq;
                for (const auto& tau : p.t.level_strings(lq))
                    if (Rational(1) - p.t.relative_leaf_measure(tau).to_rational() < eps)
                        fq.push_back(tau);
                if (fq.empty()) continue;

                // counting condition from the Lebesgue-density step
                bool counts = true;
                for (const auto& sigma : p.f.members()) {
                    long ext = 0;
                    for (const auto& tau : fq)
                        if (sigma.is_prefix_of(tau)) ++ext;
                    Rational lhs = (Rational(1) - delta) * Rational(ext) *
                                   Rational::pow2(-static_cast<long>(lq));
                    Rational rhs = p.d.at(sigma) * Rational::pow2(-static_cast<long>(lp));
                    if (lhs <= rhs) { counts = false; break; }
                }
                if (!counts) continue;

                CondenseResult res;
                res.delta = delta;
                res.eps = eps;
                res.lq = lq;
                res.q.f = LevelSet(fq);
                res.q.t = p.t.restrict(res.q.f).pruned();
                res.q.d.domain = res.q.f;
                for (const auto& tau : fq) res.q.d.values.emplace(tau, Rational(1) - delta);
                res.q.validate();

                std::optional<Rational> worst;
                for (const auto& tau : fq) {
                    Rational gap = Rational(1) - res.q.t.relative_leaf_measure(tau).to_rational();
                    if (!worst || gap > *worst) worst = gap;
                }
                res.conclusion_lhs = *worst;
                res.conclusion_rhs = delta / Rational(static_cast<long>(n) + 1);
                if (res.conclusion_lhs >= res.conclusion_rhs)
                    throw std::logic_error("condense: conclusion inequality failed");
                return res;
            }
        }
    }
    return std::nullopt; // insufficient depth
}

Condition branch(const Condition& p) {
    p.validate();
    for (std::size_t l = p.f.height() + 1; l <= p.t.depth(); ++l) {
        LevelSet fq = p.t.level(l);
        bool splits = true;
        for (const auto& sigma : p.f.members()) {
            std::size_t ext = 0;
            for (const auto& tau : fq.members())
                if (sigma.is_prefix_of(tau)) ++ext;
            if (ext < 2) { splits = false; break; }
        }
        if (!splits) continue;
        Condition q{fq, p.t, dense_ext(p.d, fq, p.t)};
        q.validate();
        return q;
    }
    throw std::invalid_argument("branch: no branching level within tree depth");
}

} // namespace treelab
