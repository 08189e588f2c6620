#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hrg/grammar.hpp"

namespace hrg {

/// A terminal, or a reference to component `component` of argument `arg` (both 1-based).
struct McfToken {
    bool variable = false;
    Label terminal;
    std::size_t arg = 0;
    std::size_t component = 0;

    static McfToken term(Label t) { return {false, std::move(t), 0, 0}; }
    static McfToken var(std::size_t p, std::size_t q) { return {true, "", p, q}; }
    /// "$p.q" for variables, the bare terminal otherwise.
    std::string text() const;
    bool operator==(const McfToken&) const = default;
};

/// Parses "$p.q" as a variable and anything else as a terminal.
McfToken parse_token(const std::string& s);

struct McfRule {
    Label lhs;
    std::vector<Label> args;
    std::vector<std::vector<McfToken>> outputs;

    bool operator==(const McfRule&) const = default;
};

struct Mcfg {
    std::map<Label, std::size_t> nonterminals;  // label -> dimension
    std::set<Label> terminals;
    std::vector<McfRule> rules;
    Label start;

    std::size_t dim(const Label& l) const;
    bool is_lcfrs() const;
};

std::vector<std::string> validate(const Mcfg& g);
void check(const Mcfg& g);

/// Every variable of the rule's arguments occurs exactly once.
bool information_lossless(const Mcfg& g, const McfRule& r);

using StringTuple = std::vector<Word>;
using YieldSets = std::map<Label, std::set<StringTuple>>;

/// The members of each yield set whose total length is at most `bound`.
YieldSets yield_enumerate(const Mcfg& g, std::size_t bound);
/// Words of the start symbol with length at most `bound`.
std::set<Word> mcfg_language(const Mcfg& g, std::size_t bound);

std::set<Label> productive_nonterminals(const Mcfg& g);
bool language_empty(const Mcfg& g);

/// Nonterminal of dimension d becomes a label of type [2dq]; the result
/// generates the q-string graphs of the words of g.
Grammar lcfrs_to_hrg(const Mcfg& g, std::size_t q);

/// Adds a collector component to every nonterminal plus a new start S~ -> x1 b x2,
/// giving an LCFRS whose b-initial words correspond to the empty word of g.
Mcfg mcfg_mark(const Mcfg& g);

}  // namespace hrg
