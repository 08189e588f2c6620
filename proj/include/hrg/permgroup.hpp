#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hrg/hypergraph.hpp"

namespace hrg {

/// A total map [n] -> [n], stored 0-based.
class Transformation {
public:
    Transformation() = default;
    explicit Transformation(std::vector<int> zero_based);
    static Transformation from_one_based(const std::vector<int>& image);
    static Transformation identity(std::size_t n);

    std::size_t size() const { return image_.size(); }
    int operator()(int j) const { return image_[static_cast<std::size_t>(j)]; }
    const std::vector<int>& image() const { return image_; }
    std::vector<int> one_based() const;

    bool is_bijective() const;
    bool is_identity() const;
    Transformation inverse() const;  // bijections only
    std::string to_cycle_string() const;

    auto operator<=>(const Transformation&) const = default;

private:
    std::vector<int> image_;
};

using Permutation = Transformation;

/// (f o g)(j) = f(g(j)).
Transformation compose(const Transformation& f, const Transformation& g);

std::set<Transformation> monoid_closure(const std::vector<Transformation>& gens, std::size_t n);

/// Stabiliser chain over the fixed base 1,2,...,n with explicit transversals.
class StabilizerChain {
public:
    StabilizerChain(const std::vector<Permutation>& gens, std::size_t n);
    bool contains(const Permutation& p) const;
    unsigned long long order() const;

private:
    struct Level {
        std::vector<Permutation> generators;
        std::map<int, Permutation> transversal;  // point -> u with u(base) = point
    };
    void rebuild_orbit(std::size_t i);
    // Returns the level at which sifting stopped (n when it reached the identity) and the residue.
    std::pair<std::size_t, Permutation> sift(Permutation p, std::size_t from) const;

    std::size_t n_;
    std::vector<Level> levels_;
};

bool group_member(const std::vector<Permutation>& gens, const Permutation& sigma);

struct PermTransition {
    std::string from;
    Permutation label;
    std::string to;
};

struct PermNFA {
    std::vector<std::string> states;
    std::set<std::string> initial;
    std::set<std::string> final;
    std::vector<PermTransition> transitions;
    std::size_t n = 0;

    /// Throws InputError when states or permutations are inconsistent.
    void check() const;
    bool accepts(const std::vector<Permutation>& word) const;
};

/// Product of a word: w1 o w2 o ... o wk (identity for the empty word).
Permutation word_product(const std::vector<Permutation>& word, std::size_t n);

std::optional<std::vector<Permutation>> ratsym(const PermNFA& a, const Permutation& sigma);

/// Every (state, product) reachable from `from` with a shortest witness word.
std::map<std::pair<std::string, Permutation>, std::vector<Permutation>> reachable_products(
    const PermNFA& a, const std::set<std::string>& from);

/// F(label, f): nodes 1..n, one edge with att(j)=f(j), ext(j)=j.
Hypergraph function_graph(const Label& label, const Transformation& f);

}  // namespace hrg
