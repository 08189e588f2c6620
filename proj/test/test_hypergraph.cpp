#include <doctest.h>

#include "hrg/hypergraph.hpp"
#include "hrg/permgroup.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace hrg;

TEST_SUITE("hypergraph") {

TEST_CASE("handle shapes") {
    auto h = handle("S", make_type({"1", "2"}));
    CHECK(h.nodes.size() == 2);
    REQUIRE(h.edges.size() == 1);
    const Edge& e = h.edges.begin()->second;
    CHECK(e.label == "S");
    CHECK(e.att == h.ext);
    CHECK(h.ext.size() == 2);

    auto empty = handle("a", Type{});
    CHECK(empty.nodes.empty());
    CHECK(empty.edges.size() == 1);
    CHECK(empty.edges.begin()->second.att.empty());
    CHECK(empty.ext.empty());

    auto three = handle("A", numeric_type(3));
    CHECK(three.nodes.size() == 3);
    for (const auto& [s, v] : three.ext) CHECK(three.edges.begin()->second.att.at(s) == v);
}

TEST_CASE("selector order puts numbers first, numerically") {
    Type t{"10", "2", "x", "1"};
    std::vector<Selector> got(t.begin(), t.end());
    CHECK(got == std::vector<Selector>{"1", "2", "10", "x"});
}

TEST_CASE("quotient") {
    auto sg = string_graph(chars("ab"));
    CHECK(isomorphic(quotient(sg, {}), sg));

    Hypergraph two;
    two.add_node("u");
    two.add_node("v");
    CHECK(quotient(two, {{"u", "v"}}).nodes.size() == 1);

    auto q = quotient(sg, {{"v0", "v2"}});
    CHECK(q.nodes == std::set<NodeId>{"v0", "v1"});
    CHECK(q.ext.at("1") == "v0");
    CHECK(q.ext.at("2") == "v0");
    CHECK(q.edges.at("e1").att.at("1") == "v0");
    CHECK(q.edges.at("e1").att.at("2") == "v1");
    CHECK(q.edges.at("e2").att.at("1") == "v1");
    CHECK(q.edges.at("e2").att.at("2") == "v0");

    CHECK_THROWS_AS(quotient(sg, {{"v0", "nope"}}), InputError);
}

TEST_CASE("replace") {
    auto s = handle("S", numeric_type(2));
    CHECK(isomorphic(replace(s, "e", string_graph(chars("ab"))), string_graph(chars("ab"))));

    auto host = string_graph({"x", "A", "y"});
    auto out = replace(host, "e2", string_graph(chars("bb")));
    auto w = is_string_graph(out);
    REQUIRE(w);
    CHECK(word_to_string(*w) == "xbby");

    CHECK_THROWS_AS(replace(s, "e", handle("T", numeric_type(3))), ContractViolation);
    CHECK_THROWS_AS(replace(s, "missing", string_graph({})), InputError);
}

TEST_CASE("composition law on small maps") {
    auto r = gen::rng(1);
    for (int round = 0; round < 60; ++round) {
        const std::size_t n = gen::pick(r, 1, 5);
        auto f = gen::transformation(r, n);
        auto g = gen::transformation(r, n);
        auto k = replace(function_graph("S", f), "e", function_graph("S", g));
        CHECK(isomorphic(k, function_graph("S", compose(f, g))));
        CHECK(oracle::isomorphic(k, function_graph("S", Transformation(oracle::compose(f.image(), g.image())))));
    }
}

TEST_CASE("string graphs") {
    auto e = string_graph({});
    CHECK(e.nodes == std::set<NodeId>{"v0"});
    CHECK(e.edges.empty());
    CHECK(e.ext.at("1") == "v0");
    CHECK(e.ext.at("2") == "v0");

    auto a = string_graph(chars("a"));
    CHECK(a.nodes.size() == 2);
    CHECK(a.edges.size() == 1);

    auto aba = string_graph(chars("aba"));
    CHECK(aba.nodes.size() == 4);
    CHECK(aba.edges.at("e1").label == "a");
    CHECK(aba.edges.at("e2").label == "b");
    CHECK(aba.edges.at("e3").label == "a");
    CHECK(aba.edges.at("e1").att.at("2") == aba.edges.at("e2").att.at("1"));
}

TEST_CASE("q-string graphs") {
    for (const char* w : {"", "a", "ab"}) CHECK(isomorphic(q_string_graph(chars(w), 1), string_graph(chars(w))));

    auto six = q_string_graph(chars("aba"), 6);
    CHECK(six.nodes.size() == 24);
    CHECK(six.edges.size() == 3);
    for (const auto& [id, edge] : six.edges) CHECK(edge.type() == numeric_type(12));

    auto empty3 = q_string_graph({}, 3);
    CHECK(empty3.nodes.size() == 3);
    CHECK(empty3.edges.empty());
    CHECK(empty3.ext.size() == 6);
    for (std::size_t j = 1; j <= 3; ++j) CHECK(empty3.ext.at(std::to_string(j)) == empty3.ext.at(std::to_string(j + 3)));

    CHECK_THROWS_AS(q_string_graph(chars("a"), 0), InputError);
}

TEST_CASE("repetition-freeness") {
    CHECK(is_repetition_free(string_graph(chars("ab"))));
    CHECK_FALSE(is_repetition_free(string_graph({})));
    CHECK_FALSE(is_repetition_free(function_graph("S", Transformation({0, 0}))));
}

TEST_CASE("string graph recognition") {
    auto w = is_string_graph(string_graph(chars("aba")));
    REQUIRE(w);
    CHECK(word_to_string(*w) == "aba");

    Hypergraph loop;
    loop.add_node("v");
    loop.add_edge("l", "x", {{"1", "v"}, {"2", "v"}});
    loop.ext = {{"1", "v"}, {"2", "v"}};
    CHECK_FALSE(is_string_graph(loop));

    CHECK_FALSE(is_string_graph(q_string_graph(chars("aba"), 6)));

    auto r = gen::rng(2);
    for (int round = 0; round < 40; ++round) {
        Word word;
        const std::size_t len = gen::pick(r, 0, 8);
        for (std::size_t i = 0; i < len; ++i) word.push_back(gen::pick(r, 0, 1) ? "a" : "b");
        auto back = is_string_graph(string_graph(word));
        REQUIRE(back);
        CHECK(*back == word);
    }
}

TEST_CASE("isomorphism examples") {
    auto h = string_graph(chars("abba"));
    auto r = gen::rng(3);
    CHECK(isomorphic(h, gen::shuffled(r, h)));
    CHECK_FALSE(isomorphic(string_graph(chars("ab")), string_graph(chars("ba"))));
    CHECK_FALSE(isomorphic(function_graph("S", Transformation({1, 0, 2})), function_graph("S", Transformation({0, 2, 1}))));
}

TEST_CASE("isomorphism agrees with the bijection oracle") {
    auto r = gen::rng(4);
    std::vector<Hypergraph> pool;
    for (int i = 0; i < 40; ++i) {
        auto g = gen::hypergraph(r, gen::pick(r, 1, 5), gen::pick(r, 0, 4));
        pool.push_back(g);
        pool.push_back(gen::shuffled(r, g));
    }
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) {
            const bool fast = isomorphic(pool[i], pool[j]);
            CHECK(fast == oracle::isomorphic(pool[i], pool[j]));
            CHECK(fast == (canonical_key(pool[i]) == canonical_key(pool[j])));
        }
    // Transitivity over the pool.
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j)
            for (std::size_t k = 0; k < pool.size(); k += 7)
                if (isomorphic(pool[i], pool[j]) && isomorphic(pool[j], pool[k])) CHECK(isomorphic(pool[i], pool[k]));
}

TEST_CASE("canonical graph is isomorphic to its source") {
    auto r = gen::rng(5);
    for (int i = 0; i < 50; ++i) {
        auto g = gen::hypergraph(r, gen::pick(r, 1, 6), gen::pick(r, 0, 5));
        CHECK(oracle::isomorphic(g, canonical_form(g).graph));
    }
}

TEST_CASE("replacement arithmetic, order independence, repetition-freeness") {
    auto r = gen::rng(6);
    for (int round = 0; round < 50; ++round) {
        // Host with two nonterminal edges A (type 2) and B (type 1).
        Hypergraph host = gen::hypergraph(r, gen::pick(r, 2, 4), gen::pick(r, 0, 2));
        std::vector<NodeId> ns(host.nodes.begin(), host.nodes.end());
        const bool free = gen::pick(r, 0, 1);
        std::vector<NodeId> ab = free ? gen::distinct(r, ns, 2) : std::vector<NodeId>{ns[0], ns[gen::pick(r, 0, ns.size() - 1)]};
        host.add_edge("ea", "A", {{"1", ab[0]}, {"2", ab[1]}});
        host.add_edge("eb", "B", {{"1", ns[gen::pick(r, 0, ns.size() - 1)]}});
        Hypergraph k1 = gen::hypergraph(r, gen::pick(r, 1, 4), gen::pick(r, 0, 3));
        Hypergraph k2 = gen::hypergraph(r, gen::pick(r, 1, 3), gen::pick(r, 0, 2), false);
        k2.ext["1"] = *k2.nodes.begin();

        auto one = replace(host, "ea", k1);
        CHECK(one.edges.size() == host.edges.size() - 1 + k1.edges.size());
        CHECK(one.nodes.size() <= host.nodes.size() + k1.nodes.size());

        auto left = replace(one, "eb", k2);
        auto right = replace(replace(host, "eb", k2), "ea", k1);
        CHECK(isomorphic(left, right));

        if (is_repetition_free(host) && is_repetition_free(k1)) CHECK(is_repetition_free(one));
    }
}

}  // TEST_SUITE
