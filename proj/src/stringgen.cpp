#include "hrg/stringgen.hpp"

#include <functional>
#include <numeric>
#include <unordered_set>

namespace hrg {

namespace {

const Type& arrow_type() {
    static const Type t = make_type({"1", "2"});
    return t;
}

void require_arrows(const Hypergraph& h, const Label& label) {
    for (const auto& [id, e] : h.edges)
        if (e.label != label || e.type() != arrow_type())
            throw ContractViolation("edge '" + id + "' is not a " + label + "-edge of type {1,2}");
}

std::set<NodeId> external_nodes(const Hypergraph& h) {
    std::set<NodeId> out;
    for (const auto& [s, v] : h.ext) out.insert(v);
    return out;
}

template <class F>
void for_each_combination(const std::vector<std::size_t>& sizes, F&& f) {
    for (auto s : sizes)
        if (s == 0) return;
    std::vector<std::size_t> idx(sizes.size(), 0);
    while (true) {
        f(idx);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == sizes[k]) idx[k++] = 0;
        if (k == idx.size()) return;
    }
}

}  // namespace

RelabelResult relabel_terminals(const Grammar& g) {
    RelabelResult r;
    r.grammar = g;
    Grammar& out = r.grammar;
    Label a = "a";
    if (g.is_nonterminal(a)) {
        Grammar probe = g;
        probe.terminals.clear();
        a = fresh_label(probe, "a");
    }
    std::set<Label> used;
    for (const auto& p : g.productions)
        for (const auto& [id, e] : p.rhs.edges)
            if (g.is_terminal(e.label)) used.insert(e.label);
    for (const auto& l : used) {
        if (g.terminals.at(l) != arrow_type()) {
            r.trivially_not_string_generating = true;
            r.offending = l;
            return r;
        }
    }
    out.terminals = {{a, arrow_type()}};
    for (auto& p : out.productions)
        for (auto& [id, e] : p.rhs.edges)
            if (!g.is_nonterminal(e.label)) e.label = a;
    return r;
}

std::set<NodeId> bad_nodes(const Hypergraph& h, const Label& label) {
    require_arrows(h, label);
    std::map<NodeId, int> in, out;
    for (const auto& [id, e] : h.edges) {
        ++out[e.att.at("1")];
        ++in[e.att.at("2")];
    }
    const auto ext = external_nodes(h);
    std::set<NodeId> bad;
    for (const auto& v : h.nodes)
        if (!ext.count(v) && (in[v] != 1 || out[v] != 1)) bad.insert(v);
    return bad;
}

bool has_undirected_cycle(const Hypergraph& h, const Label& label) {
    require_arrows(h, label);
    std::vector<NodeId> ids(h.nodes.begin(), h.nodes.end());
    std::vector<std::size_t> parent(ids.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto index = [&](const NodeId& v) {
        return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    for (const auto& [id, e] : h.edges) {
        const auto x = find(index(e.att.at("1")));
        const auto y = find(index(e.att.at("2")));
        if (x == y) return true;
        parent[x] = y;
    }
    return false;
}

Hypergraph pi_minimal(const Hypergraph& h, const Label& label) {
    if (!bad_nodes(h, label).empty()) throw ContractViolation("pi_minimal needs a graph without bad nodes");
    Hypergraph cur = h;
    while (true) {
        const auto ext = external_nodes(cur);
        std::map<NodeId, EdgeId> in, out;
        std::map<NodeId, int> in_deg, out_deg;
        for (const auto& [id, e] : cur.edges) {
            out[e.att.at("1")] = id;
            ++out_deg[e.att.at("1")];
            in[e.att.at("2")] = id;
            ++in_deg[e.att.at("2")];
        }
        const auto cf = canonical_form(cur);
        std::optional<NodeId> pick;
        std::size_t best = 0;
        for (const auto& v : cur.nodes) {
            if (ext.count(v) || in_deg[v] != 1 || out_deg[v] != 1 || in[v] == out[v]) continue;
            const std::size_t pos = cf.position.at(v);
            if (!pick || pos < best) {
                pick = v;
                best = pos;
            }
        }
        if (!pick) return cur;
        const EdgeId first = in[*pick];
        const EdgeId second = out[*pick];
        const NodeId target = cur.edges.at(second).att.at("2");
        cur.edges.erase(second);
        cur.edges.at(first).att["2"] = target;
        cur.nodes.erase(*pick);
    }
}

Hypergraph pi_expand(const Hypergraph& h, const EdgeId& e) {
    Hypergraph out = h;
    Edge& edge = out.edges.at(e);
    if (edge.type() != arrow_type()) throw ContractViolation("pi_expand needs an edge of type {1,2}");
    std::size_t c = 0;
    NodeId mid;
    do mid = "_m" + std::to_string(c++);
    while (out.nodes.count(mid));
    c = 0;
    EdgeId fresh;
    do fresh = "_x" + std::to_string(c++);
    while (out.edges.count(fresh));
    const NodeId target = edge.att.at("2");
    const Label label = edge.label;
    edge.att["2"] = mid;
    out.add_node(mid);
    out.add_edge(fresh, label, {{"1", mid}, {"2", target}});
    return out;
}

StringGenResult check_string_generating(const Grammar& input) {
    check(input);
    StringGenResult result;
    const UselessResult useful = eliminate_useless(input);
    if (useful.start_unproductive) {
        result.string_generating = true;
        result.reason = "the language is empty";
        return result;
    }
    const RelabelResult relabeled = relabel_terminals(useful.grammar);
    if (relabeled.trivially_not_string_generating) {
        result.reason = "terminal '" + relabeled.offending + "' is not of type {1,2}";
        return result;
    }
    const Grammar& g = relabeled.grammar;
    if (g.type_of(g.start) != arrow_type()) {
        result.reason = "the start symbol is not of type {1,2}";
        return result;
    }
    const Label a = g.terminals.begin()->first;

    std::map<Label, std::map<std::string, Hypergraph>> summaries;
    std::unordered_set<std::string> done;
    bool changed = true;
    while (changed) {
        changed = false;
        // snapshot, so each round reads a fixed P_n
        const auto current = summaries;
        for (std::size_t pi = 0; pi < g.productions.size(); ++pi) {
            const Production& p = g.productions[pi];
            const auto nts = nonterminal_edges(g, p.rhs);
            std::vector<std::vector<std::pair<std::string, const Hypergraph*>>> options;
            std::vector<std::size_t> sizes;
            for (const auto& e : nts) {
                options.emplace_back();
                auto it = current.find(p.rhs.edges.at(e).label);
                if (it != current.end())
                    for (const auto& [k, graph] : it->second) options.back().emplace_back(k, &graph);
                sizes.push_back(options.back().size());
            }
            bool aborted = false;
            for_each_combination(sizes, [&](const std::vector<std::size_t>& pick) {
                if (aborted) return;
                std::string memo = std::to_string(pi);
                for (std::size_t i = 0; i < nts.size(); ++i) memo += "\n" + options[i][pick[i]].first;
                if (!done.insert(memo).second) return;
                Hypergraph h = p.rhs;
                std::vector<Hypergraph> used;
                for (std::size_t i = 0; i < nts.size(); ++i) {
                    h = replace(h, nts[i], *options[i][pick[i]].second);
                    used.push_back(*options[i][pick[i]].second);
                }
                if (!bad_nodes(h, a).empty() || has_undirected_cycle(h, a)) {
                    result.reason = bad_nodes(h, a).empty() ? "a derivable graph has an undirected cycle"
                                                            : "a derivable graph has a bad node";
                    result.witness = StringGenWitness{h, p, std::move(used)};
                    aborted = true;
                    return;
                }
                auto cf = canonical_form(pi_minimal(h, a));
                if (summaries[p.lhs].emplace(cf.key, std::move(cf.graph)).second) changed = true;
            });
            if (aborted) return result;
        }
    }

    for (const auto& [lhs, graphs] : summaries)
        for (const auto& [k, graph] : graphs) result.fixpoint.push_back({lhs, graph});

    const std::string empty_word = canonical_key(string_graph({}));
    const std::string one_letter = canonical_key(string_graph({a}));
    for (const auto& [k, graph] : summaries[g.start]) {
        if (k != empty_word && k != one_letter) {
            result.reason = "a start summary is neither SG() nor SG(a)";
            result.witness = StringGenWitness{graph, std::nullopt, {}};
            return result;
        }
    }
    result.string_generating = true;
    result.reason = "every start summary is SG() or SG(a)";
    return result;
}

}  // namespace hrg
