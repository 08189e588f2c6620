#include "hrg/reductions.hpp"

#include <algorithm>

namespace hrg {

Grammar chain_grammar(const std::vector<Transformation>& maps, std::size_t n) {
    Grammar g;
    g.start = "S";
    g.nonterminals["S"] = numeric_type(n);
    g.terminals["a"] = numeric_type(n);
    for (const auto& f : maps) {
        if (f.size() != n) throw InputError("chain_grammar: map of size " + std::to_string(f.size()) + ", expected " + std::to_string(n));
        g.productions.push_back({"S", function_graph("S", f)});
    }
    g.productions.push_back({"S", handle("a", numeric_type(n))});
    return g;
}

Mcfg relabel_two_letters(const Mcfg& g, const Label& as_a, const Label& as_b) {
    if (g.terminals != std::set<Label>{as_a, as_b} || as_a == as_b)
        throw InputError("relabel_two_letters: terminals must be exactly {" + as_a + ", " + as_b + "}");
    auto rename = [&](const Label& l) { return l == as_a ? Label("a") : l == as_b ? Label("b") : l; };
    Mcfg out = g;
    out.terminals = {"a", "b"};
    for (auto& r : out.rules)
        for (auto& comp : r.outputs)
            for (auto& t : comp)
                if (!t.variable) t.terminal = rename(t.terminal);
    check(out);
    return out;
}

ExptimeVariant parse_variant(const std::string& s) {
    if (s == "prime") return ExptimeVariant::prime;
    if (s == "double") return ExptimeVariant::double_prime;
    if (s == "triple") return ExptimeVariant::triple_prime;
    throw InputError("unknown variant '" + s + "' (expected prime, double or triple)");
}

namespace {

// Edgeless hypergraph of type [12] whose ext sends selector i to node block[i-1].
Hypergraph gluing(const std::vector<int>& block) {
    Hypergraph h;
    for (std::size_t i = 0; i < block.size(); ++i) {
        const NodeId v = "v" + std::to_string(block[i]);
        h.add_node(v);
        h.ext[std::to_string(i + 1)] = v;
    }
    return h;
}

Grammar reduction_base(const Mcfg& g, ExptimeVariant v) {
    check(g);
    if (g.terminals != std::set<Label>{"a", "b"}) throw InputError("the LCFRS must have terminals exactly {a, b}");
    if (!g.is_lcfrs()) throw InputError("the grammar is not an LCFRS");
    if (language_empty(g)) throw InputError("the LCFRS generates the empty language");
    for (const auto& reserved : {"x", "y"})
        if (g.nonterminals.count(reserved)) throw InputError(std::string("nonterminal name '") + reserved + "' is reserved");

    Grammar out = lcfrs_to_hrg(g, 6);
    const Type twelve = numeric_type(12);
    const Type two = numeric_type(2);
    out.terminals.clear();
    out.nonterminals["a"] = twelve;
    out.nonterminals["b"] = twelve;
    const Label start = fresh_label(out, g.start + "'");
    out.nonterminals[start] = two;

    out.productions.push_back({"a", gluing({1, 1, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3})});
    if (v == ExptimeVariant::prime)
        out.productions.push_back({"b", gluing({1, 2, 3, 1, 2, 3, 3, 3, 3, 3, 3, 3})});
    else
        out.productions.push_back({"b", gluing(std::vector<int>(12, 1))});

    Hypergraph h0;
    Attachment att;
    for (int j = 1; j <= 6; ++j) {
        h0.add_node("L" + std::to_string(j));
        h0.add_node("R" + std::to_string(j));
        att[std::to_string(j)] = "L" + std::to_string(j);
        att[std::to_string(j + 6)] = "R" + std::to_string(j);
    }
    h0.add_edge("s", g.start, std::move(att));
    h0.add_edge("x", "x", {{"1", "L2"}, {"2", "L3"}});
    h0.add_edge("y", "y", {{"1", "L4"}, {"2", "L5"}});
    h0.ext["1"] = "L1";
    h0.ext["2"] = "L6";
    out.productions.push_back({start, std::move(h0)});
    out.start = start;

    if (v == ExptimeVariant::triple_prime) {
        out.nonterminals["x"] = two;
        out.nonterminals["y"] = two;
        Hypergraph erase;
        erase.add_node("v1");
        erase.add_node("v2");
        erase.ext["1"] = "v1";
        erase.ext["2"] = "v2";
        out.productions.push_back({"x", erase});
        out.productions.push_back({"y", erase});
    } else {
        out.terminals["x"] = two;
        out.terminals["y"] = two;
    }
    check(out);
    return out;
}

}  // namespace

Grammar gamma_prime(const Mcfg& g) { return reduction_base(g, ExptimeVariant::prime); }
Grammar gamma_double_prime(const Mcfg& g) { return reduction_base(g, ExptimeVariant::double_prime); }
Grammar gamma_triple_prime(const Mcfg& g) { return reduction_base(g, ExptimeVariant::triple_prime); }
Grammar exptime_reduction(const Mcfg& g, ExptimeVariant v) { return reduction_base(g, v); }

void X3CInstance::check() const {
    if (q == 0) throw InputError("x3c: q must be positive");
    for (const auto& s : sets) {
        for (int x : s)
            if (x < 1 || x > static_cast<int>(3 * q))
                throw InputError("x3c: element " + std::to_string(x) + " is outside [1, " + std::to_string(3 * q) + "]");
        if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) throw InputError("x3c: a set repeats an element");
    }
}

X3CReduction x3c_grammar(const X3CInstance& inst) {
    inst.check();
    const std::size_t q = inst.q;
    auto sel = [](std::size_t i, std::size_t j) { return "s" + std::to_string(i) + "_" + std::to_string(j); };
    auto level = [](std::size_t m) { return "S" + std::to_string(m); };
    auto slots = [&](std::size_t m) {
        Type t;
        for (std::size_t i = 1; i <= 3 * m; ++i)
            for (std::size_t j = 1; j <= 2; ++j) t.insert(sel(i, j));
        return t;
    };

    X3CReduction r;
    Grammar& g = r.grammar;
    g.start = "S";
    g.nonterminals["S"] = numeric_type(2);
    for (std::size_t m = 0; m <= q; ++m) g.nonterminals[level(m)] = slots(m);
    for (std::size_t k = 1; k <= 3 * q; ++k) g.terminals["a" + std::to_string(k)] = numeric_type(2);
    g.terminals["b"] = numeric_type(2);

    {
        Hypergraph k0;
        Attachment att;
        for (const auto& s : slots(q)) {
            k0.add_node(s);
            att[s] = s;
        }
        k0.add_edge("e1", level(q), std::move(att));
        for (std::size_t k = 2; k <= 3 * q; ++k)
            k0.add_edge("e" + std::to_string(k), "b", {{"1", sel(k - 1, 2)}, {"2", sel(k, 1)}});
        k0.ext["1"] = sel(1, 1);
        k0.ext["2"] = sel(3 * q, 2);
        g.productions.push_back({"S", std::move(k0)});
    }

    std::vector<std::array<int, 3>> sets = inst.sets;
    for (auto& s : sets) std::sort(s.begin(), s.end());
    for (std::size_t m = 1; m <= q; ++m) {
        const std::size_t width = 3 * m;
        for (std::size_t i1 = 1; i1 <= width; ++i1)
            for (std::size_t i2 = i1 + 1; i2 <= width; ++i2)
                for (std::size_t i3 = i2 + 1; i3 <= width; ++i3)
                    for (const auto& set : sets) {
                        Hypergraph k;
                        for (const auto& s : slots(m)) {
                            k.add_node(s);
                            k.ext[s] = s;
                        }
                        const std::size_t picked[3] = {i1, i2, i3};
                        for (int c = 0; c < 3; ++c)
                            k.add_edge("e" + std::to_string(c + 1), "a" + std::to_string(set[c]),
                                       {{"1", sel(picked[c], 1)}, {"2", sel(picked[c], 2)}});
                        // the remaining slots in increasing order feed the smaller level
                        Attachment rest;
                        std::size_t next = 1;
                        for (std::size_t i = 1; i <= width; ++i) {
                            if (i == i1 || i == i2 || i == i3) continue;
                            rest[sel(next, 1)] = sel(i, 1);
                            rest[sel(next, 2)] = sel(i, 2);
                            ++next;
                        }
                        k.add_edge("e0", level(m - 1), std::move(rest));
                        g.productions.push_back({level(m), std::move(k)});
                    }
    }
    g.productions.push_back({level(0), Hypergraph{}});
    check(g);

    Word w;
    for (std::size_t k = 1; k <= 3 * q; ++k) {
        if (k > 1) w.push_back("b");
        w.push_back("a" + std::to_string(k));
    }
    r.target = string_graph(w);
    return r;
}

}  // namespace hrg
