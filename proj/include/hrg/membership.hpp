#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hrg/grammar.hpp"
#include "hrg/permgroup.hpp"

namespace hrg {

enum class Verdict { no, yes, unknown };
std::string verdict_name(Verdict v);

/// Every rhs has injective ext and attachments.
bool is_repetition_free(const Grammar& g);

struct BruteForceBounds {
    std::size_t max_steps = 50;
    std::size_t edge_slack = 2;
    /// Extra nodes allowed in sentential forms beyond |V_H|; by default derived
    /// from the grammar (twice the order plus the largest rhs).
    std::optional<std::size_t> node_slack;
};

/// Bounded exhaustive search; `unknown` when a bound cut the search.
Verdict member_bruteforce(const Grammar& g, const Hypergraph& h, const BruteForceBounds& bounds = {});

/// Sentential-form filter for derivation searches towards `target`: rejects a
/// form holding more edges of some terminal label than the target has.  Keeps
/// a reference to g.
std::function<bool(const Hypergraph&)> terminal_budget(const Grammar& g, const Hypergraph& target);

/// Exact decision through the normal form.
bool member_exptime(const Grammar& g, const Hypergraph& h);

struct CertificateStep {
    enum class Kind { plain, block };
    Kind kind = Kind::plain;
    EdgeId edge;
    std::size_t production = 0;  // plain: index into the preprocessed grammar
    Label source;                // block: label of the rewritten edge
    Label sink;                  // block: label after the chain sequence
    Permutation sigma;           // block: product of `word`
    std::vector<Permutation> word;

    bool operator==(const CertificateStep&) const = default;
};

struct MembershipCertificate {
    std::vector<CertificateStep> steps;
    bool operator==(const MembershipCertificate&) const = default;
};

/// binarize, empty elimination, then every nonterminal except the start gets
/// selectors 1..k in selector order.
Grammar np_preprocess(const Grammar& g);

/// (4R+3)(|V_H|+|E_H|) with R the order of the preprocessed grammar.
std::size_t certificate_step_bound(const Grammar& preprocessed, const Hypergraph& h);

/// Chain productions X -> F(Y, s) with X, Y nonterminals of type [t] and s bijective.
PermNFA permutative_automaton(const Grammar& preprocessed, const Label& from, const Label& to);

/// Throws ContractViolation unless g is repetition-free.
std::optional<MembershipCertificate> member_np(const Grammar& g, const Hypergraph& h);

struct CertificateCheck {
    bool ok = false;
    std::size_t failing_step = 0;  // steps.size() when the final graph is wrong
    std::string reason;
};

CertificateCheck verify_certificate(const Grammar& g, const Hypergraph& h, const MembershipCertificate& cert);

}  // namespace hrg
