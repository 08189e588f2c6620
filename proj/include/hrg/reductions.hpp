#pragma once

#include <array>
#include <vector>

#include "hrg/grammar.hpp"
#include "hrg/mcfg.hpp"
#include "hrg/permgroup.hpp"

namespace hrg {

/// S -> F(S, f) for every map f, plus S -> the a-handle; all types are [n].
Grammar chain_grammar(const std::vector<Transformation>& maps, std::size_t n);

/// Renames the two terminals of g to a and b.
Mcfg relabel_two_letters(const Mcfg& g, const Label& as_a, const Label& as_b);

enum class ExptimeVariant { prime, double_prime, triple_prime };
ExptimeVariant parse_variant(const std::string& s);

/// The reduction grammars built on the 6-string translation of g.  g must be an
/// LCFRS over exactly {a, b} with a nonempty language.
Grammar gamma_prime(const Mcfg& g);
Grammar gamma_double_prime(const Mcfg& g);
Grammar gamma_triple_prime(const Mcfg& g);
Grammar exptime_reduction(const Mcfg& g, ExptimeVariant v);

struct X3CInstance {
    std::size_t q = 0;
    std::vector<std::array<int, 3>> sets;

    /// Throws InputError unless every set has three distinct members of [3q].
    void check() const;
};

struct X3CReduction {
    Grammar grammar;
    Hypergraph target;  // SG(a1 b a2 b ... a3q)
};

X3CReduction x3c_grammar(const X3CInstance& inst);

}  // namespace hrg
