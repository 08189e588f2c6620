#pragma once

#include <string>
#include <vector>

#include "hrg/grammar.hpp"

namespace hrg {

bool is_empty_production(const Production& p);
/// One edge and every node external (the edge may carry any label).
bool is_chain_production(const Production& p);
/// A chain production whose edge is a nonterminal.
bool is_unit_production(const Grammar& g, const Production& p);

/// Set to "true" in the metadata when eliminate_empty had to keep an empty
/// production for the start symbol.
inline constexpr const char* kStartExceptionKey = "start_exception";
/// Indices of empty productions rewriting the start symbol.
std::vector<std::size_t> start_exceptions(const Grammar& g);

/// Fresh start that never occurs on a right-hand side; every rhs keeps at most two edges.
Grammar binarize(const Grammar& g);

/// Generates exactly the repetition-free members of L(g).
Grammar to_repetition_free(const Grammar& g);

/// Removes productions whose rhs has no edges and only external nodes.
Grammar eliminate_empty(const Grammar& g);

struct ChainEntry {
    Label lhs;
    Hypergraph rhs;
};

/// All chain graphs reachable from each nonterminal through unit productions,
/// including the handle itself.
std::vector<ChainEntry> chain_closure(const Grammar& g);

/// Replaces unit productions by their compositions with non-unit ones.
Grammar eliminate_chain(const Grammar& g);

enum class NormalizeStep { binarize, repfree, noempty, nochain };

NormalizeStep parse_step(const std::string& name);
std::string step_name(NormalizeStep s);
Grammar normalize(const Grammar& g, const std::vector<NormalizeStep>& steps);
/// binarize, repfree, noempty, nochain
Grammar full_pipeline(const Grammar& g);

}  // namespace hrg
