#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hrg/grammar.hpp"

namespace hrg {

struct RelabelResult {
    Grammar grammar;
    /// Some terminal in use has a type other than {1,2}.
    bool trivially_not_string_generating = false;
    Label offending;
};

/// Every terminal becomes the single label `a` of type {1,2}.
RelabelResult relabel_terminals(const Grammar& g);

/// Internal nodes whose in- or out-degree differs from one.  Every edge must
/// carry `label` with type {1,2}.
std::set<NodeId> bad_nodes(const Hypergraph& h, const Label& label = "a");

/// Loops and parallel or antiparallel pairs count as cycles.
bool has_undirected_cycle(const Hypergraph& h, const Label& label = "a");

/// Contracts internal (1,1)-degree nodes between two distinct edges until none
/// is left, always taking the first such node in canonical order.
Hypergraph pi_minimal(const Hypergraph& h, const Label& label = "a");

/// Inverse of a contraction: splits edge `e` into two through a new internal node.
Hypergraph pi_expand(const Hypergraph& h, const EdgeId& e);

struct GoodSummary {
    Label lhs;
    Hypergraph rhs;
};

struct StringGenWitness {
    Hypergraph graph;
    std::optional<Production> production;
    std::vector<Hypergraph> summaries;
};

struct StringGenResult {
    bool string_generating = false;
    std::string reason;
    std::optional<StringGenWitness> witness;
    std::vector<GoodSummary> fixpoint;
};

StringGenResult check_string_generating(const Grammar& g);
inline bool is_string_generating(const Grammar& g) { return check_string_generating(g).string_generating; }

}  // namespace hrg
