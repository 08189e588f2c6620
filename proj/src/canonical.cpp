// Canonical labelling by colour refinement plus individualisation.
// Exhaustive over the search tree, which is fine at desk scale.

#include <algorithm>
#include <map>

#include "hrg/hypergraph.hpp"

namespace hrg {

namespace {

struct Interned {
    std::vector<NodeId> node_ids;
    std::vector<Label> labels;
    std::vector<Selector> selectors;
    struct E {
        int label;
        std::vector<std::pair<int, int>> att;  // (selector, node), sorted by selector
    };
    std::vector<E> edges;
    std::vector<std::pair<int, int>> ext;
    std::vector<std::vector<std::pair<int, int>>> incidence;  // node -> (edge, selector)
    std::vector<bool> isolated_internal;
};

Interned intern(const Hypergraph& h) {
    Interned g;
    g.node_ids.assign(h.nodes.begin(), h.nodes.end());
    std::map<NodeId, int> node_index;
    for (std::size_t i = 0; i < g.node_ids.size(); ++i) node_index[g.node_ids[i]] = static_cast<int>(i);

    std::set<Label> labels;
    std::set<Selector> selectors;
    for (const auto& [id, e] : h.edges) {
        labels.insert(e.label);
        for (const auto& [s, v] : e.att) selectors.insert(s);
    }
    for (const auto& [s, v] : h.ext) selectors.insert(s);
    g.labels.assign(labels.begin(), labels.end());
    g.selectors.assign(selectors.begin(), selectors.end());
    auto label_id = [&](const Label& l) {
        return static_cast<int>(std::lower_bound(g.labels.begin(), g.labels.end(), l) - g.labels.begin());
    };
    auto sel_id = [&](const Selector& s) {
        return static_cast<int>(std::lower_bound(g.selectors.begin(), g.selectors.end(), s) - g.selectors.begin());
    };

    g.incidence.resize(g.node_ids.size());
    for (const auto& [id, e] : h.edges) {
        Interned::E ie{label_id(e.label), {}};
        for (const auto& [s, v] : e.att) ie.att.emplace_back(sel_id(s), node_index.at(v));
        std::sort(ie.att.begin(), ie.att.end());
        const int ei = static_cast<int>(g.edges.size());
        for (const auto& [s, v] : ie.att) g.incidence[v].emplace_back(ei, s);
        g.edges.push_back(std::move(ie));
    }
    for (const auto& [s, v] : h.ext) g.ext.emplace_back(sel_id(s), node_index.at(v));
    std::sort(g.ext.begin(), g.ext.end());

    g.isolated_internal.assign(g.node_ids.size(), true);
    for (std::size_t v = 0; v < g.node_ids.size(); ++v)
        if (!g.incidence[v].empty()) g.isolated_internal[v] = false;
    for (const auto& [s, v] : g.ext) g.isolated_internal[v] = false;
    return g;
}

using Colouring = std::vector<int>;
using Signature = std::vector<int>;

int rank_signatures(const std::vector<Signature>& sigs, Colouring& out) {
    std::vector<Signature> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    out.resize(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i)
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
    return static_cast<int>(sorted.size());
}

Colouring initial_colouring(const Interned& g) {
    const std::size_t n = g.node_ids.size();
    std::vector<Signature> sigs(n);
    for (const auto& [s, v] : g.ext) sigs[v].push_back(s);
    for (std::size_t v = 0; v < n; ++v) {
        sigs[v].push_back(-1);
        std::vector<std::pair<int, int>> inc;
        for (const auto& [e, s] : g.incidence[v]) inc.emplace_back(g.edges[e].label, s);
        std::sort(inc.begin(), inc.end());
        for (const auto& [l, s] : inc) {
            sigs[v].push_back(l);
            sigs[v].push_back(s);
        }
    }
    Colouring c;
    rank_signatures(sigs, c);
    return c;
}

int count_colours(const Colouring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

void refine(const Interned& g, Colouring& colour) {
    const std::size_t n = g.node_ids.size();
    int colours = count_colours(colour);
    while (true) {
        std::vector<Signature> sigs(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<Signature> parts;
            for (const auto& [e, s] : g.incidence[v]) {
                Signature p{g.edges[e].label, s};
                for (const auto& [s2, u] : g.edges[e].att) {
                    p.push_back(s2);
                    p.push_back(colour[u]);
                }
                parts.push_back(std::move(p));
            }
            std::sort(parts.begin(), parts.end());
            Signature& sig = sigs[v];
            sig.push_back(colour[v]);
            for (const auto& p : parts) {
                sig.push_back(-1);
                sig.insert(sig.end(), p.begin(), p.end());
            }
        }
        Colouring next;
        const int k = rank_signatures(sigs, next);
        colour = std::move(next);
        if (k == colours) return;
        colours = k;
    }
}

Signature encode(const Interned& g, const Colouring& pos) {
    Signature out{static_cast<int>(g.node_ids.size()), static_cast<int>(g.ext.size())};
    for (const auto& [s, v] : g.ext) {
        out.push_back(s);
        out.push_back(pos[v]);
    }
    std::vector<Signature> edges;
    for (const auto& e : g.edges) {
        Signature es{e.label, static_cast<int>(e.att.size())};
        for (const auto& [s, v] : e.att) {
            es.push_back(s);
            es.push_back(pos[v]);
        }
        edges.push_back(std::move(es));
    }
    std::sort(edges.begin(), edges.end());
    out.push_back(static_cast<int>(edges.size()));
    for (const auto& es : edges) out.insert(out.end(), es.begin(), es.end());
    return out;
}

struct Search {
    const Interned& g;
    std::optional<Signature> best;
    Colouring best_pos;

    void run(Colouring colour) {
        refine(g, colour);
        const std::size_t n = g.node_ids.size();
        std::vector<int> cell_size(n, 0);
        for (int c : colour) ++cell_size[c];
        int target = -1;
        for (std::size_t c = 0; c < n; ++c)
            if (cell_size[c] > 1) {
                target = static_cast<int>(c);
                break;
            }
        if (target < 0) {
            Signature enc = encode(g, colour);
            if (!best || enc < *best) {
                best = std::move(enc);
                best_pos = colour;
            }
            return;
        }
        bool all_isolated = true;
        for (std::size_t v = 0; v < n; ++v)
            if (colour[v] == target && !g.isolated_internal[v]) all_isolated = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (colour[v] != target) continue;
            Colouring next(n);
            for (std::size_t u = 0; u < n; ++u) next[u] = 2 * colour[u] + ((u == v) ? 0 : 1);
            std::vector<Signature> sigs(n);
            for (std::size_t u = 0; u < n; ++u) sigs[u] = {next[u]};
            rank_signatures(sigs, next);
            run(std::move(next));
            if (all_isolated) break;  // isolated internal nodes are interchangeable
        }
    }
};

void append_text(std::string& out, const std::string& s) {
    out += std::to_string(s.size());
    out += ':';
    out += s;
}

}  // namespace

CanonicalForm canonical_form(const Hypergraph& h) {
    const Interned g = intern(h);
    Search search{g, std::nullopt, {}};
    search.run(initial_colouring(g));
    const Colouring& pos = search.best_pos;

    CanonicalForm cf;
    const std::size_t n = g.node_ids.size();
    std::vector<NodeId> name(n);
    for (std::size_t v = 0; v < n; ++v) {
        name[v] = "n" + std::to_string(pos[v]);
        cf.position[g.node_ids[v]] = static_cast<std::size_t>(pos[v]);
        cf.graph.nodes.insert(name[v]);
    }
    for (const auto& [s, v] : g.ext) cf.graph.ext[g.selectors[s]] = name[v];

    std::vector<std::pair<Signature, std::size_t>> order;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        Signature es{g.edges[i].label};
        for (const auto& [s, v] : g.edges[i].att) {
            es.push_back(s);
            es.push_back(pos[v]);
        }
        order.emplace_back(std::move(es), i);
    }
    std::sort(order.begin(), order.end());

    std::string key = std::to_string(n) + "|";
    std::vector<std::pair<int, int>> ext_sorted;
    for (const auto& [s, v] : g.ext) ext_sorted.emplace_back(s, pos[v]);
    std::sort(ext_sorted.begin(), ext_sorted.end());
    for (const auto& [s, p] : ext_sorted) {
        append_text(key, g.selectors[s]);
        key += "=" + std::to_string(p) + ",";
    }
    key += "|";
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& e = g.edges[order[k].second];
        Attachment att;
        append_text(key, g.labels[e.label]);
        key += "(";
        for (const auto& [s, v] : e.att) {
            att[g.selectors[s]] = name[v];
            append_text(key, g.selectors[s]);
            key += "=" + std::to_string(pos[v]) + ",";
        }
        key += ")";
        cf.graph.edges.emplace("e" + std::to_string(k), Edge{g.labels[e.label], std::move(att)});
    }
    cf.key = std::move(key);
    return cf;
}

std::string canonical_key(const Hypergraph& h) { return canonical_form(h).key; }

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size() || a.type() != b.type()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace hrg
