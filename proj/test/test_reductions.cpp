#include <doctest.h>

#include "hrg/io.hpp"
#include "hrg/membership.hpp"
#include "hrg/reductions.hpp"
#include "hrg/stringgen.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace hrg;

namespace {

Mcfg corpus(const char* name) { return mcfg_from_json(read_document(std::string(HRG_CORPUS_DIR "/") + name)); }

std::set<std::string> keys(const std::vector<Hypergraph>& gs) {
    std::set<std::string> out;
    for (const auto& g : gs) out.insert(canonical_key(g));
    return out;
}

Permutation p1(std::vector<int> img) { return Transformation::from_one_based(img); }

// All interleavings of u and v.
void shuffle_into(const Word& u, const Word& v, Word& acc, std::set<Word>& out, std::size_t i = 0, std::size_t j = 0) {
    if (i == u.size() && j == v.size()) {
        out.insert(acc);
        return;
    }
    if (i < u.size()) {
        acc.push_back(u[i]);
        shuffle_into(u, v, acc, out, i + 1, j);
        acc.pop_back();
    }
    if (j < v.size()) {
        acc.push_back(v[j]);
        shuffle_into(u, v, acc, out, i, j + 1);
        acc.pop_back();
    }
}

Word with_separators(const Word& xs) {
    Word w;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) w.push_back("b");
        w.push_back(xs[i]);
    }
    return w;
}

Word triple_word(const std::array<int, 3>& s) {
    std::array<int, 3> t = s;
    std::sort(t.begin(), t.end());
    return {"a" + std::to_string(t[0]), "a" + std::to_string(t[1]), "a" + std::to_string(t[2])};
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("chain grammars") {
    auto sym = chain_grammar({p1({2, 1, 3}), p1({2, 3, 1})}, 3);
    CHECK(sym.type_of("S") == numeric_type(3));
    CHECK(sym.type_of("a") == numeric_type(3));
    CHECK(enumerate_language(sym, {1, 3, 20}).graphs.size() == 6);

    auto none = enumerate_language(chain_grammar({}, 2), {1, 2, 20});
    REQUIRE(none.graphs.size() == 1);
    CHECK(isomorphic(none.graphs[0], function_graph("a", Transformation::identity(2))));

    auto constant = enumerate_language(chain_grammar({p1({1, 1})}, 2), {1, 2, 20});
    std::set<std::string> expected;
    for (const auto& img : oracle::closure({{0, 0}}, 2)) expected.insert(canonical_key(function_graph("a", Transformation(img))));
    CHECK(keys(constant.graphs) == expected);
    CHECK(expected.size() == 2);

    CHECK_THROWS_AS(chain_grammar({p1({1, 2, 3})}, 2), InputError);
}

TEST_CASE("relabelling two-letter grammars") {
    Mcfg g = corpus("lang_ab.mcfg");
    Mcfg renamed = relabel_two_letters(g, "b", "a");
    CHECK(mcfg_language(renamed, 4) == std::set<Word>{chars("ba")});
    CHECK_THROWS_AS(relabel_two_letters(corpus("g2.mcfg"), "a", "b"), InputError);
}

TEST_CASE("two-letter reduction languages") {
    const LanguageBounds b{6, 20, 60};
    const auto xy = string_graph({"x", "y"}), yx = string_graph({"y", "x"});
    auto ab = enumerate_language(gamma_prime(corpus("lang_ab.mcfg")), b);
    auto ba = enumerate_language(gamma_prime(corpus("lang_ba.mcfg")), b);
    auto both = enumerate_language(gamma_prime(corpus("lang_ab_ba.mcfg")), b);
    CHECK(keys(ab.graphs) == keys({xy}));
    CHECK(keys(ba.graphs) == keys({yx}));
    CHECK(keys(both.graphs) == keys({xy, yx}));
    for (const char* f : {"lang_ab.mcfg", "lang_ba.mcfg", "lang_ab_ba.mcfg", "lang_aa.mcfg"})
        CHECK(is_string_generating(gamma_prime(corpus(f))));
}

TEST_CASE("two-letter reduction rejects bad input") {
    CHECK_THROWS_AS(gamma_prime(corpus("g2.mcfg")), InputError);
    Mcfg empty = corpus("lang_ab.mcfg");
    empty.rules.clear();
    CHECK_THROWS_AS(gamma_prime(empty), InputError);
    CHECK_THROWS_AS(gamma_double_prime(corpus("g1.mcfg")), InputError);
    CHECK_THROWS_AS(parse_variant("quadruple"), InputError);
    CHECK(parse_variant("double") == ExptimeVariant::double_prime);
}

TEST_CASE("gluing variant") {
    auto ba = gamma_double_prime(corpus("lang_ba.mcfg"));
    CHECK_FALSE(is_string_generating(ba));
    // K: one node carrying both ends, an x-loop and a y-loop.
    auto lang = enumerate_language(ba, {6, 20, 60});
    REQUIRE(lang.exact);
    REQUIRE(lang.graphs.size() == 1);
    const Hypergraph& k = lang.graphs[0];
    CHECK(k.nodes.size() == 1);
    CHECK(k.edges.size() == 2);
    CHECK_FALSE(is_string_graph(k).has_value());

    CHECK(is_string_generating(gamma_double_prime(corpus("lang_ab.mcfg"))));
    auto aa = enumerate_language(gamma_double_prime(corpus("lang_aa.mcfg")), {6, 20, 60});
    CHECK(keys(aa.graphs) == keys({string_graph({"x", "y"})}));
}

TEST_CASE("erasing variant") {
    auto ba = gamma_triple_prime(corpus("lang_ba.mcfg"));
    CHECK(member_exptime(ba, string_graph({})));
    auto ab = gamma_triple_prime(corpus("lang_ab.mcfg"));
    CHECK_FALSE(member_exptime(ab, string_graph({})));
    // SG(xy) with both edges erased: three nodes, no edges, ends on the outer two.
    Hypergraph erased = string_graph({"x", "y"});
    erased.edges.clear();
    auto lang = enumerate_language(ab, {6, 20, 60});
    CHECK(lang.contains(erased));
    CHECK(member_exptime(ab, erased));
}

TEST_CASE("reduction verdicts track the empty and b-initial words") {
    auto r = gen::rng(70);
    std::size_t tried = 0, finite = 0;
    for (int i = 0; i < 80 && tried < 12; ++i) {
        Mcfg g = gen::lcfrs(r, 2);
        if (language_empty(g)) continue;
        ++tried;
        const auto words = mcfg_language(g, 6);
        const bool has_eps = words.count(Word{}) > 0;
        const bool b_initial = std::any_of(words.begin(), words.end(), [](const Word& w) { return !w.empty() && w[0] == "b"; });
        // The six-track image of the empty word glues nothing, so it is the one
        // member that can break the string shape of the reduction grammar.
        CHECK(is_string_generating(gamma_prime(g)) == !has_eps);
        const bool sg2 = is_string_generating(gamma_double_prime(g));
        if (has_eps || b_initial) CHECK_FALSE(sg2);
        if (mcfg_language(g, 12) == words) {
            ++finite;
            CHECK(sg2 == !(has_eps || b_initial));
        }
    }
    CHECK(tried >= 8);
    CHECK(finite >= 2);
}

TEST_CASE("exact cover grammar shape") {
    X3CInstance inst{1, {{1, 2, 3}}};
    auto red = x3c_grammar(inst);
    CHECK(*is_string_graph(red.target) == Word{"a1", "b", "a2", "b", "a3"});
    CHECK(is_repetition_free(red.grammar));
    CHECK(is_string_generating(red.grammar));
    CHECK(red.grammar.is_nonterminal("S"));
    CHECK(red.grammar.is_nonterminal("S0"));
    CHECK(red.grammar.is_nonterminal("S1"));
    CHECK(red.grammar.is_terminal("b"));

    auto lang = enumerate_language(red.grammar, {8, 10, 30});
    REQUIRE(lang.exact);
    std::set<Word> words;
    for (const auto& h : lang.graphs) words.insert(*is_string_graph(h));
    CHECK(words == std::set<Word>{with_separators(triple_word({1, 2, 3}))});

    CHECK_THROWS_AS(x3c_grammar({1, {{1, 2, 4}}}), InputError);
    CHECK_THROWS_AS(x3c_grammar({1, {{1, 1, 2}}}), InputError);
    CHECK_THROWS_AS(x3c_grammar({0, {}}), InputError);
}

TEST_CASE("exact cover membership matches exhaustive search") {
    const std::vector<X3CInstance> cases{
        {1, {{1, 2, 3}}},
        {2, {{1, 2, 3}, {4, 5, 6}}},
        {2, {{1, 2, 3}, {3, 4, 5}}},
        {2, {{1, 5, 6}, {2, 3, 4}, {1, 2, 3}}},
        {2, {{1, 2, 4}, {2, 5, 6}, {3, 4, 6}}},
    };
    for (const auto& inst : cases) {
        auto red = x3c_grammar(inst);
        const bool cover = oracle::exact_cover(inst.q, inst.sets);
        CHECK(member_bruteforce(red.grammar, red.target) == (cover ? Verdict::yes : Verdict::no));
        CHECK(member_exptime(red.grammar, red.target) == cover);
        auto cert = member_np(red.grammar, red.target);
        CHECK(cert.has_value() == cover);
        if (cert) CHECK(verify_certificate(red.grammar, red.target, *cert).ok);
    }
}

TEST_CASE("two-set language is the shuffle of the chosen triples") {
    X3CInstance inst{2, {{1, 2, 3}, {3, 4, 5}}};
    auto red = x3c_grammar(inst);
    auto lang = enumerate_language(red.grammar, {14, 20, 60});
    REQUIRE(lang.exact);
    std::set<Word> got;
    for (const auto& h : lang.graphs) {
        auto w = is_string_graph(h);
        REQUIRE(w);
        got.insert(*w);
    }
    std::set<Word> expected;
    for (const auto& s : inst.sets)
        for (const auto& t : inst.sets) {
            std::set<Word> mixed;
            Word acc;
            shuffle_into(triple_word(s), triple_word(t), acc, mixed);
            for (const auto& m : mixed) expected.insert(with_separators(m));
        }
    CHECK(got == expected);
}

}  // TEST_SUITE
