#include "hrg/grammar.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

namespace hrg {

const Type& Grammar::type_of(const Label& l) const {
    if (auto it = nonterminals.find(l); it != nonterminals.end()) return it->second;
    if (auto it = terminals.find(l); it != terminals.end()) return it->second;
    throw InputError("undeclared label '" + l + "'");
}

std::vector<std::string> validate(const Grammar& g) {
    std::vector<std::string> problems;
    for (const auto& [l, t] : g.nonterminals)
        if (g.terminals.count(l)) problems.push_back("label '" + l + "' is both terminal and nonterminal");
    if (!g.nonterminals.count(g.start)) problems.push_back("start symbol '" + g.start + "' is not a declared nonterminal");
    for (std::size_t i = 0; i < g.productions.size(); ++i) {
        const auto& p = g.productions[i];
        const std::string where = "productions[" + std::to_string(i) + "]";
        auto lhs = g.nonterminals.find(p.lhs);
        if (lhs == g.nonterminals.end()) {
            problems.push_back(where + ": lhs '" + p.lhs + "' is not a nonterminal");
        } else if (lhs->second != p.rhs.type()) {
            problems.push_back(where + ": rhs type " + selectors_to_string(p.rhs.type()) + " differs from type " +
                               selectors_to_string(lhs->second) + " of '" + p.lhs + "'");
        }
        try {
            p.rhs.check_references();
        } catch (const InputError& e) {
            problems.push_back(where + ": " + e.what());
        }
        for (const auto& [id, e] : p.rhs.edges) {
            const Type* t = nullptr;
            if (auto it = g.nonterminals.find(e.label); it != g.nonterminals.end()) t = &it->second;
            if (auto it = g.terminals.find(e.label); it != g.terminals.end()) t = &it->second;
            if (!t) {
                problems.push_back(where + ": edge '" + id + "' has undeclared label '" + e.label + "'");
            } else if (*t != e.type()) {
                problems.push_back(where + ": edge '" + id + "' attaches selectors " + selectors_to_string(e.type()) +
                                   " but '" + e.label + "' has type " + selectors_to_string(*t));
            }
        }
    }
    return problems;
}

void check(const Grammar& g) {
    auto problems = validate(g);
    if (!problems.empty()) throw InputError(problems.front());
}

Label fresh_label(const Grammar& g, const Label& base) {
    if (!g.nonterminals.count(base) && !g.terminals.count(base)) return base;
    for (std::size_t i = 1;; ++i) {
        Label l = base + std::to_string(i);
        if (!g.nonterminals.count(l) && !g.terminals.count(l)) return l;
    }
}

bool is_terminal_graph(const Grammar& g, const Hypergraph& h) {
    return std::all_of(h.edges.begin(), h.edges.end(), [&](const auto& kv) { return !g.is_nonterminal(kv.second.label); });
}

std::vector<EdgeId> nonterminal_edges(const Grammar& g, const Hypergraph& h) {
    std::vector<EdgeId> out;
    for (const auto& [id, e] : h.edges)
        if (g.is_nonterminal(e.label)) out.push_back(id);
    return out;
}

Hypergraph derive_step(const Hypergraph& h, const EdgeId& e, const Production& p) {
    auto it = h.edges.find(e);
    if (it == h.edges.end()) throw InputError("derive: no edge '" + e + "'");
    if (it->second.label != p.lhs)
        throw InputError("derive: edge '" + e + "' is labelled '" + it->second.label + "', production rewrites '" +
                         p.lhs + "'");
    return replace(h, e, p.rhs);
}

Hypergraph start_graph(const Grammar& g) { return handle(g.start, g.type_of(g.start)); }

Hypergraph replay(const Grammar& g, const DerivationTrace& trace) {
    Hypergraph h = start_graph(g);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& step = trace[i];
        if (step.production >= g.productions.size())
            throw InputError("trace step " + std::to_string(i) + ": no production " + std::to_string(step.production));
        h = derive_step(h, step.edge, g.productions[step.production]);
    }
    return h;
}

bool LanguageResult::contains(const Hypergraph& h) const {
    return std::binary_search(keys.begin(), keys.end(), canonical_key(h));
}

std::set<Label> productive_nonterminals(const Grammar& g) {
    std::set<Label> productive;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            if (productive.count(p.lhs)) continue;
            bool ok = true;
            for (const auto& [id, e] : p.rhs.edges)
                if (g.is_nonterminal(e.label) && !productive.count(e.label)) ok = false;
            if (ok) {
                productive.insert(p.lhs);
                changed = true;
            }
        }
    }
    return productive;
}

std::map<Label, std::size_t> min_terminal_edges(const Grammar& g) {
    constexpr auto inf = std::numeric_limits<std::size_t>::max();
    std::map<Label, std::size_t> best;
    for (const auto& [l, t] : g.nonterminals) best[l] = inf;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            std::size_t total = 0;
            for (const auto& [id, e] : p.rhs.edges) {
                if (!g.is_nonterminal(e.label)) {
                    ++total;
                } else if (best[e.label] == inf) {
                    total = inf;
                    break;
                } else {
                    total += best[e.label];
                }
            }
            if (total < best[p.lhs]) {
                best[p.lhs] = total;
                changed = true;
            }
        }
    }
    for (auto it = best.begin(); it != best.end();) it = it->second == inf ? best.erase(it) : std::next(it);
    return best;
}

std::set<Label> non_merging_nonterminals(const Grammar& g) {
    std::set<Label> keep;
    for (const auto& [l, t] : g.nonterminals) keep.insert(l);
    for (const auto& p : g.productions) {
        std::set<NodeId> seen;
        for (const auto& [s, v] : p.rhs.ext)
            if (!seen.insert(v).second) keep.erase(p.lhs);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            if (!keep.count(p.lhs)) continue;
            for (const auto& [id, e] : p.rhs.edges)
                if (g.is_nonterminal(e.label) && !keep.count(e.label)) {
                    keep.erase(p.lhs);
                    changed = true;
                    break;
                }
        }
    }
    return keep;
}

namespace {

// Sound filters: a form failing them cannot derive a terminal graph
// within the given size limits.
struct FormFilter {
    const Grammar& g;
    std::map<Label, std::size_t> min_terminal;
    std::set<Label> non_merging;

    explicit FormFilter(const Grammar& gr)
        : g(gr), min_terminal(min_terminal_edges(gr)), non_merging(non_merging_nonterminals(gr)) {}

    enum class Fate { live, unproductive, too_big };

    // too_big means every terminal graph below h exceeds a bound.
    Fate judge(const Hypergraph& h, std::size_t max_edges, std::size_t max_nodes) const {
        std::size_t lower = 0;
        bool merging = false;
        for (const auto& [id, e] : h.edges) {
            if (!g.is_nonterminal(e.label)) {
                ++lower;
                continue;
            }
            auto it = min_terminal.find(e.label);
            if (it == min_terminal.end()) return Fate::unproductive;
            lower += it->second;
            if (!non_merging.count(e.label)) merging = true;
        }
        if (lower > max_edges) return Fate::too_big;
        if (!merging && h.nodes.size() > max_nodes) return Fate::too_big;
        return Fate::live;
    }
};

std::vector<std::vector<std::size_t>> productions_by_lhs(const Grammar& g, const std::vector<Label>& order) {
    std::vector<std::vector<std::size_t>> out(order.size());
    for (std::size_t i = 0; i < g.productions.size(); ++i) {
        auto it = std::lower_bound(order.begin(), order.end(), g.productions[i].lhs);
        if (it != order.end() && *it == g.productions[i].lhs) out[it - order.begin()].push_back(i);
    }
    return out;
}

}  // namespace

LanguageResult enumerate_language(const Grammar& g, const LanguageBounds& bounds) {
    check(g);
    const FormFilter filter(g);
    std::vector<Label> labels;
    for (const auto& [l, t] : g.nonterminals) labels.push_back(l);
    const auto by_lhs = productions_by_lhs(g, labels);
    auto prods_for = [&](const Label& l) -> const std::vector<std::size_t>& {
        return by_lhs[std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()];
    };

    LanguageResult result;
    std::map<std::string, Hypergraph> found;
    std::unordered_set<std::string> visited;

    std::vector<Hypergraph> frontier;
    {
        Hypergraph s = start_graph(g);
        visited.insert(canonical_key(s));
        frontier.push_back(std::move(s));
    }
    std::size_t steps = 0;
    bool lossy = false;  // a cut that may hide a graph within the bounds
    while (!frontier.empty()) {
        std::vector<Hypergraph> next;
        for (const auto& form : frontier) {
            if (is_terminal_graph(g, form)) {
                auto cf = canonical_form(form);
                found.emplace(cf.key, std::move(cf.graph));
                continue;
            }
            if (steps == bounds.max_steps) {
                result.truncated = true;
                lossy = true;
                continue;
            }
            // derivations commute, so rewriting one edge per form loses nothing
            {
                const EdgeId e = nonterminal_edges(g, form).front();
                for (std::size_t pi : prods_for(form.edges.at(e).label)) {
                    Hypergraph child = derive_step(form, e, g.productions[pi]);
                    const auto fate = filter.judge(child, bounds.max_edges, bounds.max_nodes);
                    if (fate == FormFilter::Fate::unproductive) continue;
                    if (fate == FormFilter::Fate::too_big) {
                        result.truncated = true;
                        continue;
                    }
                    if (child.edges.size() > bounds.max_edges || child.nodes.size() > bounds.max_nodes) {
                        result.truncated = true;
                        lossy = true;
                        continue;
                    }
                    if (!visited.insert(canonical_key(child)).second) continue;
                    next.push_back(std::move(child));
                }
            }
        }
        frontier = std::move(next);
        ++steps;
    }
    result.saturated = !result.truncated;
    result.exact = !lossy;
    for (auto& [k, h] : found) {
        result.keys.push_back(k);
        result.graphs.push_back(std::move(h));
    }
    return result;
}

UselessResult eliminate_useless(const Grammar& g) {
    UselessResult out;
    out.grammar = g;
    const auto productive = productive_nonterminals(g);
    auto usable = [&](const Production& p) {
        if (!productive.count(p.lhs)) return false;
        for (const auto& [id, e] : p.rhs.edges)
            if (g.is_nonterminal(e.label) && !productive.count(e.label)) return false;
        return true;
    };
    out.grammar.productions.clear();
    if (!productive.count(g.start)) {
        out.start_unproductive = true;
        out.grammar.nonterminals = {{g.start, g.type_of(g.start)}};
        return out;
    }
    std::set<Label> reachable{g.start};
    std::deque<Label> queue{g.start};
    while (!queue.empty()) {
        Label a = queue.front();
        queue.pop_front();
        for (const auto& p : g.productions) {
            if (p.lhs != a || !usable(p)) continue;
            for (const auto& [id, e] : p.rhs.edges)
                if (g.is_nonterminal(e.label) && reachable.insert(e.label).second) queue.push_back(e.label);
        }
    }
    for (const auto& p : g.productions)
        if (reachable.count(p.lhs) && usable(p)) out.grammar.productions.push_back(p);
    for (auto it = out.grammar.nonterminals.begin(); it != out.grammar.nonterminals.end();)
        it = reachable.count(it->first) ? std::next(it) : out.grammar.nonterminals.erase(it);
    return out;
}

std::size_t order(const Grammar& g) {
    std::size_t r = 0;
    for (const auto& [l, t] : g.nonterminals) r = std::max(r, t.size());
    return r;
}

std::optional<DerivationTrace> find_derivation(const Grammar& g, const Hypergraph& target,
                                               const std::function<bool(const Hypergraph&)>& admit,
                                               std::size_t max_steps, bool* exhausted) {
    const std::string goal = canonical_key(target);
    struct Node {
        Hypergraph form;
        std::size_t parent;
        DerivationStep step;
        std::size_t depth;
    };
    std::vector<Node> nodes;
    std::unordered_set<std::string> visited;
    auto trace_to = [&](std::size_t i) {
        DerivationTrace t;
        while (i != 0) {
            t.push_back(nodes[i].step);
            i = nodes[i].parent;
        }
        std::reverse(t.begin(), t.end());
        return t;
    };
    Hypergraph s = start_graph(g);
    const std::string sk = canonical_key(s);
    if (exhausted) *exhausted = false;
    if (sk == goal) return DerivationTrace{};
    visited.insert(sk);
    nodes.push_back({std::move(s), 0, {0, ""}, 0});
    bool cut = false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto edges = nonterminal_edges(g, nodes[i].form);
        if (edges.empty()) continue;
        if (nodes[i].depth == max_steps) {
            cut = true;
            continue;
        }
        const Hypergraph form = nodes[i].form;
        const std::size_t depth = nodes[i].depth;
        const EdgeId& e = edges.front();
        const Label lab = form.edges.at(e).label;
        for (std::size_t pi = 0; pi < g.productions.size(); ++pi) {
            if (g.productions[pi].lhs != lab) continue;
            Hypergraph child = derive_step(form, e, g.productions[pi]);
            if (!admit(child)) continue;
            const std::string key = canonical_key(child);
            if (!visited.insert(key).second) continue;
            nodes.push_back({std::move(child), i, {pi, e}, depth + 1});
            if (key == goal) return trace_to(nodes.size() - 1);
        }
    }
    if (exhausted) *exhausted = !cut;
    return std::nullopt;
}

}  // namespace hrg
