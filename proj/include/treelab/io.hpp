#pragma once

#include "treelab/clopen.hpp"
#include "treelab/complexity.hpp"
#include "treelab/density.hpp"
#include "treelab/expander.hpp"
#include "treelab/hitting.hpp"
#include "treelab/hypergraph.hpp"

#include <string>
#include <vector>

namespace treelab {

/// Whole-file slurp; throws with the path in the message when unreadable.
std::string read_file(const std::string& path);

/// Whitespace-separated bit strings; "ε" (or "e") is the empty string.
std::vector<BitString> parse_strings(const std::string& text);

/// Machine table, one "program → output" pair per line ("->" accepted).
PrefixMachine parse_machine(const std::string& text);
std::string serialize(const PrefixMachine& m);

/// One edge per line: "w=p/q : σ₁ σ₂ …".
StringHypergraph parse_hypergraph(const std::string& text);
std::string serialize(const StringHypergraph& h);

/// Hypergraph text format plus a "Q: τ₁ τ₂ …" header line; edge weights are
/// carried but ignored by the hitting computations.
HittingInstance parse_hitting(const std::string& text);
std::string serialize(const HittingInstance& inst);

/// One entry per line: "s k σ → τ₁ τ₂ …".
StagedExpander parse_expander(const std::string& text);
std::string serialize(const StagedExpander& phi);

/// Three sections: "F:" members, "T:" leaves of the deepest level,
/// "d:" entries "σ=p/q".
Condition parse_condition(const std::string& text);
std::string serialize(const Condition& p);

std::string serialize(const LevelSet& q);
std::string serialize(const ClopenSet& v);

} // namespace treelab
