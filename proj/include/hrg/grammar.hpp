#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hrg/hypergraph.hpp"

namespace hrg {

using Alphabet = std::map<Label, Type>;

struct Production {
    Label lhs;
    Hypergraph rhs;

    bool operator==(const Production&) const = default;
};

// Free-form annotations carried through serialization (string values only).
using Metadata = std::map<std::string, std::string>;

struct Grammar {
    Alphabet nonterminals;
    Alphabet terminals;
    std::vector<Production> productions;
    Label start;
    Metadata metadata;

    bool is_nonterminal(const Label& l) const { return nonterminals.count(l) > 0; }
    bool is_terminal(const Label& l) const { return terminals.count(l) > 0; }
    /// Type of a declared label; throws InputError otherwise.
    const Type& type_of(const Label& l) const;
};

/// Human-readable problems; empty means the grammar is well-formed.
std::vector<std::string> validate(const Grammar& g);
/// Throws InputError carrying the first problem.
void check(const Grammar& g);

/// A fresh label not declared in g, built from `base`.
Label fresh_label(const Grammar& g, const Label& base);

bool is_terminal_graph(const Grammar& g, const Hypergraph& h);
std::vector<EdgeId> nonterminal_edges(const Grammar& g, const Hypergraph& h);

Hypergraph derive_step(const Hypergraph& h, const EdgeId& e, const Production& p);

struct DerivationStep {
    std::size_t production;
    EdgeId edge;
};
using DerivationTrace = std::vector<DerivationStep>;

Hypergraph start_graph(const Grammar& g);
/// Throws InputError on an unreplayable step.
Hypergraph replay(const Grammar& g, const DerivationTrace& trace);

struct LanguageBounds {
    std::size_t max_edges = 8;
    std::size_t max_nodes = 12;
    std::size_t max_steps = 50;
};

struct LanguageResult {
    std::vector<Hypergraph> graphs;  // canonical representatives, ordered by key
    std::vector<std::string> keys;
    bool truncated = false;  // some sentential form was dropped because of a bound
    bool saturated = false;  // nothing was dropped: graphs is the whole language
    bool exact = false;      // graphs holds every member within the size bounds

    bool contains(const Hypergraph& h) const;
};

LanguageResult enumerate_language(const Grammar& g, const LanguageBounds& bounds);

struct UselessResult {
    Grammar grammar;
    bool start_unproductive = false;
};

UselessResult eliminate_useless(const Grammar& g);
std::set<Label> productive_nonterminals(const Grammar& g);

std::size_t order(const Grammar& g);

/// Least number of terminal edges any terminal graph derived from each
/// productive nonterminal can have.
std::map<Label, std::size_t> min_terminal_edges(const Grammar& g);

/// Nonterminals whose derived graphs never identify two distinct host nodes.
std::set<Label> non_merging_nonterminals(const Grammar& g);

/// A shortest derivation of a graph isomorphic to `target`, searched
/// breadth-first over canonical forms.  `admit` filters sentential forms.
std::optional<DerivationTrace> find_derivation(const Grammar& g, const Hypergraph& target,
                                               const std::function<bool(const Hypergraph&)>& admit,
                                               std::size_t max_steps, bool* exhausted = nullptr);

}  // namespace hrg
