#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hrg {

using NodeId = std::string;
using EdgeId = std::string;
using Selector = std::string;
using Label = std::string;
using Word = std::vector<Label>;

// Orders all-digit selectors numerically and puts them before any other selector.
struct SelectorLess {
    bool operator()(const Selector& a, const Selector& b) const;
};

using Type = std::set<Selector, SelectorLess>;

/// Malformed input: unknown ids, bad documents, out-of-range values.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Edge {
    Label label;
    std::map<Selector, NodeId, SelectorLess> att;

    Type type() const;
    bool operator==(const Edge&) const = default;
};

using Attachment = std::map<Selector, NodeId, SelectorLess>;

struct Hypergraph {
    std::set<NodeId> nodes;
    std::map<EdgeId, Edge> edges;
    Attachment ext;

    Type type() const;
    std::size_t size() const { return nodes.size() + edges.size(); }

    void add_node(const NodeId& v);
    void add_edge(const EdgeId& id, Label label, Attachment att);

    /// Throws InputError if att/ext reference unknown nodes.
    void check_references() const;

    bool operator==(const Hypergraph&) const = default;
};

Type make_type(std::initializer_list<const char*> selectors);
/// Selectors "1".."n".
Type numeric_type(std::size_t n);
std::string selectors_to_string(const Type& t);

Hypergraph handle(const Label& label, const Type& type);

Hypergraph quotient(const Hypergraph& h, const std::vector<std::pair<NodeId, NodeId>>& relation);

Hypergraph replace(const Hypergraph& h, const EdgeId& e, const Hypergraph& k);

Hypergraph string_graph(const Word& w);
Hypergraph q_string_graph(const Word& w, std::size_t q);

/// Splits "aba" into single-character labels.
Word chars(const std::string& s);
std::string word_to_string(const Word& w);

bool is_repetition_free(const Hypergraph& h);
std::optional<Word> is_string_graph(const Hypergraph& h);

/// Node classes of ext: selectors pointing at the same node share a block.
std::vector<std::vector<Selector>> ext_kernel(const Hypergraph& h);

struct CanonicalForm {
    std::string key;
    Hypergraph graph;
    // node id in the input -> position in the canonical order
    std::map<NodeId, std::size_t> position;
};

CanonicalForm canonical_form(const Hypergraph& h);
std::string canonical_key(const Hypergraph& h);
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace hrg
