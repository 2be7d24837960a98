#include "treelab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace treelab {

namespace {

const std::string kArrowUtf8 = "\xe2\x86\x92"; // →

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        if (!tokens(line).empty()) out.push_back(line);
    }
    return out;
}

bool is_arrow(const std::string& tok) { return tok == kArrowUtf8 || tok == "->"; }

Edge parse_edge_line(const std::string& line) {
    auto toks = tokens(line);
    std::size_t first = 0;
    Rational w(1);
    if (!toks.empty() && toks[0].rfind("w=", 0) == 0) {
        w = Rational::parse(toks[0].substr(2));
        if (toks.size() < 2 || toks[1] != ":")
            throw std::invalid_argument("edge line: expected ':' after weight");
        first = 2;
    }
    Edge e;
    e.weight = w;
    for (std::size_t i = first; i < toks.size(); ++i)
        e.vertices.insert(BitString::parse(toks[i]));
    if (e.vertices.empty()) throw std::invalid_argument("edge line: no vertices");
    return e;
}

std::string join(const std::set<BitString>& xs) {
    std::string out;
    for (const auto& x : xs) {
        if (!out.empty()) out += ' ';
        out += x.str();
    }
    return out;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<BitString> parse_strings(const std::string& text) {
    std::vector<BitString> out;
    for (const auto& line : lines_of(text))
        for (const auto& tok : tokens(line)) out.push_back(BitString::parse(tok));
    return out;
}

PrefixMachine parse_machine(const std::string& text) {
    std::map<BitString, BitString> table;
    for (const auto& line : lines_of(text)) {
        auto toks = tokens(line);
        if (toks.size() != 3 || !is_arrow(toks[1]))
            throw std::invalid_argument("machine line: expected 'program → output'");
        if (!table.emplace(BitString::parse(toks[0]), BitString::parse(toks[2])).second)
            throw std::invalid_argument("machine line: duplicate program");
    }
    return PrefixMachine(std::move(table));
}

std::string serialize(const PrefixMachine& m) {
    std::string out;
    for (const auto& [p, o] : m.table())
        out += p.str() + " " + kArrowUtf8 + " " + o.str() + "\n";
    return out;
}

StringHypergraph parse_hypergraph(const std::string& text) {
    std::vector<Edge> edges;
    for (const auto& line : lines_of(text)) edges.push_back(parse_edge_line(line));
    return StringHypergraph(std::move(edges));
}

std::string serialize(const StringHypergraph& h) {
    std::string out;
    for (const auto& e : h.edges())
        out += "w=" + e.weight.str() + " : " + join(e.vertices) + "\n";
    return out;
}

HittingInstance parse_hitting(const std::string& text) {
    HittingInstance inst;
    bool have_q = false;
    for (const auto& line : lines_of(text)) {
        auto toks = tokens(line);
        if (toks[0] == "Q:") {
            std::vector<BitString> q;
            for (std::size_t i = 1; i < toks.size(); ++i)
                q.push_back(BitString::parse(toks[i]));
            inst.base = LevelSet(std::move(q));
            have_q = true;
            continue;
        }
        Edge e = parse_edge_line(line);
        inst.family.emplace_back(
            std::vector<BitString>(e.vertices.begin(), e.vertices.end()));
    }
    if (!have_q) throw std::invalid_argument("hitting instance: missing 'Q:' header");
    return inst;
}

std::string serialize(const HittingInstance& inst) {
    std::string out = "Q: " + join(inst.base.members()) + "\n";
    for (const auto& d : inst.family) out += "w=1 : " + join(d.members()) + "\n";
    return out;
}

StagedExpander parse_expander(const std::string& text) {
    std::vector<ExpanderEntry> entries;
    for (const auto& line : lines_of(text)) {
        auto toks = tokens(line);
        if (toks.size() < 5 || !is_arrow(toks[3]))
            throw std::invalid_argument("expander line: expected 's k σ → τ…'");
        ExpanderEntry e;
        e.stage = static_cast<unsigned>(std::stoul(toks[0]));
        e.k = std::stoul(toks[1]);
        e.oracle = BitString::parse(toks[2]);
        std::vector<BitString> out;
        for (std::size_t i = 4; i < toks.size(); ++i)
            out.push_back(BitString::parse(toks[i]));
        e.output = LevelSet(std::move(out));
        entries.push_back(std::move(e));
    }
    return StagedExpander(std::move(entries));
}

std::string serialize(const StagedExpander& phi) {
    std::string out;
    for (const auto& e : phi.entries())
        out += std::to_string(e.stage) + " " + std::to_string(e.k) + " " +
               e.oracle.str() + " " + kArrowUtf8 + " " + join(e.output.members()) + "\n";
    return out;
}

Condition parse_condition(const std::string& text) {
    std::vector<BitString> f, leaves;
    LDF d;
    for (const auto& line : lines_of(text)) {
        auto toks = tokens(line);
        if (toks[0] == "F:") {
            for (std::size_t i = 1; i < toks.size(); ++i)
                f.push_back(BitString::parse(toks[i]));
        } else if (toks[0] == "T:") {
            for (std::size_t i = 1; i < toks.size(); ++i)
                leaves.push_back(BitString::parse(toks[i]));
        } else if (toks[0] == "d:") {
            for (std::size_t i = 1; i < toks.size(); ++i) {
                auto eq = toks[i].find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("condition: d entries are 'σ=p/q'");
                d.values.emplace(BitString::parse(toks[i].substr(0, eq)),
                                 Rational::parse(toks[i].substr(eq + 1)));
            }
        } else {
            throw std::invalid_argument("condition: unknown section " + toks[0]);
        }
    }
    Condition p{LevelSet(std::move(f)), FinTree::closure(leaves), std::move(d)};
    p.d.domain = p.f;
    p.validate();
    return p;
}

std::string serialize(const Condition& p) {
    std::string out = "F: " + join(p.f.members()) + "\n";
    out += "T: " + join(p.t.deepest_level().members()) + "\n";
    out += "d:";
    for (const auto& sigma : p.f.members())
        out += " " + sigma.str() + "=" + p.d.at(sigma).str();
    return out + "\n";
}

std::string serialize(const LevelSet& q) { return join(q.members()); }

std::string serialize(const ClopenSet& v) { return join(v.generators()); }

} // namespace treelab
