#include "treelab/hypergraph.hpp"

#include <map>
#include <stdexcept>

namespace treelab {

StringHypergraph::StringHypergraph(std::set<BitString> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
        if (e.vertices.empty())
            throw std::invalid_argument("StringHypergraph: empty edge");
        if (e.weight.sign() < 0)
            throw std::invalid_argument("StringHypergraph: negative edge weight");
        for (const auto& v : e.vertices)
            if (!vertices_.count(v))
                throw std::invalid_argument("StringHypergraph: edge vertex outside vertex set");
    }
}

StringHypergraph::StringHypergraph(std::vector<Edge> edges) {
    for (const auto& e : edges)
        vertices_.insert(e.vertices.begin(), e.vertices.end());
    *this = StringHypergraph(vertices_, std::move(edges));
}

Rational StringHypergraph::edge_weight_of(const BitString& v) const {
    Rational s;
    for (const auto& e : edges_)
        if (e.vertices.count(v)) s += e.weight;
    return s;
}

Rational StringHypergraph::total_edge_weight() const {
    Rational s;
    for (const auto& e : edges_) s += e.weight;
    return s;
}

bool StringHypergraph::is_k_fat(std::size_t k) const {
    for (const auto& e : edges_)
        if (e.vertices.size() < k) return false;
    return true;
}

KernelGraph kernel(const StringHypergraph& h) {
    // prefix-minimal antichain of the vertex set
    std::set<BitString> vmin;
    for (const auto& v : h.vertices()) {
        bool minimal = true;
        for (const auto& u : h.vertices())
            if (u != v && u.is_prefix_of(v)) { minimal = false; break; }
        if (minimal) vmin.insert(v);
    }
    auto project = [&](const BitString& v) {
        for (const auto& u : vmin)
            if (u.is_prefix_of(v)) return u;
        throw std::logic_error("kernel: vertex without minimal prefix");
    };

    std::map<std::set<BitString>, std::size_t> index;
    std::vector<Edge> kedges;
    std::vector<std::size_t> provenance, source_sizes;
    for (const auto& e : h.edges()) {
        std::set<BitString> proj;
        for (const auto& v : e.vertices) proj.insert(project(v));
        auto [it, fresh] = index.try_emplace(proj, kedges.size());
        if (fresh) {
            kedges.push_back({proj, e.weight});
            source_sizes.push_back(e.vertices.size());
        } else {
            kedges[it->second].weight += e.weight;
            source_sizes[it->second] = std::min(source_sizes[it->second], e.vertices.size());
        }
        provenance.push_back(it->second);
    }
    std::map<BitString, Rational> transfer;
    for (const auto& u : vmin) {
        Rational s;
        for (const auto& v : h.vertices())
            if (u.is_prefix_of(v)) s += h.edge_weight_of(v);
        transfer.emplace(u, std::move(s));
    }
    return KernelGraph{StringHypergraph(vmin, std::move(kedges)),
                       std::move(provenance), std::move(source_sizes), std::move(transfer)};
}

static FatnessReport fatness_figures(const StringHypergraph& g, std::size_t k) {
    FatnessReport r;
    for (const auto& v : g.vertices()) r.sum += g.edge_weight_of(v);
    r.bound = Rational(static_cast<long>(k)) * g.total_edge_weight();
    r.holds = r.sum >= r.bound;
    return r;
}

FatnessReport fatness_sum(const StringHypergraph& h, std::size_t k) {
    if (!h.is_k_fat(k))
        throw std::invalid_argument("fatness_sum: hypergraph is not k-fat");
    return fatness_figures(h, k);
}

FatnessReport fatness_sum(const KernelGraph& kg, std::size_t k) {
    for (std::size_t sz : kg.source_sizes)
        if (sz < k)
            throw std::invalid_argument("fatness_sum: kernel of a non-k-fat hypergraph");
    // the kernel's edge-weight function is the transfer sum, so a source edge
    // whose vertices share a projection still counts once per source vertex
    FatnessReport r;
    for (const auto& [v, w] : kg.transfer_ewt) r.sum += w;
    r.bound = Rational(static_cast<long>(k)) * kg.graph.total_edge_weight();
    r.holds = r.sum >= r.bound;
    return r;
}

Rational extension_edge_weight(const StringHypergraph& h, const BitString& tau) {
    Rational s;
    for (const auto& e : h.edges()) {
        for (const auto& v : e.vertices)
            if (tau.is_prefix_of(v)) { s += e.weight; break; }
    }
    return s;
}

std::optional<BitString> light_vertex(const StringHypergraph& h, std::size_t k,
                                      std::optional<Rational> threshold) {
    Rational delta = threshold ? *threshold : h.total_edge_weight();
    std::set<BitString> candidates; // shortlex-ordered: shortest first, then lex
    for (const auto& v : h.vertices())
        for (const auto& p : v.prefixes()) candidates.insert(p);
    Rational dk = delta * Rational(static_cast<long>(k));
    for (const auto& tau : candidates) {
        Rational need = dk * Rational(1, BigInt(1) << tau.length());
        if (extension_edge_weight(h, tau) >= need) return tau;
    }
    return std::nullopt;
}

} // namespace treelab
