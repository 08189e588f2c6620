#include "hrg/normalize.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace hrg {

bool is_empty_production(const Production& p) {
    if (!p.rhs.edges.empty()) return false;
    std::set<NodeId> external;
    for (const auto& [s, v] : p.rhs.ext) external.insert(v);
    return external.size() == p.rhs.nodes.size();
}

bool is_chain_production(const Production& p) {
    if (p.rhs.edges.size() != 1) return false;
    std::set<NodeId> external;
    for (const auto& [s, v] : p.rhs.ext) external.insert(v);
    return external.size() == p.rhs.nodes.size();
}

bool is_unit_production(const Grammar& g, const Production& p) {
    return is_chain_production(p) && g.is_nonterminal(p.rhs.edges.begin()->second.label);
}

std::vector<std::size_t> start_exceptions(const Grammar& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.productions.size(); ++i)
        if (g.productions[i].lhs == g.start && is_empty_production(g.productions[i])) out.push_back(i);
    return out;
}

namespace {

// A partition of an ordered selector list: block index per position, blocks
// numbered by first occurrence.
using Pattern = std::vector<int>;

class NodeClasses {
public:
    explicit NodeClasses(const Hypergraph& h) : ids_(h.nodes.begin(), h.nodes.end()), parent_(ids_.size()) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t index(const NodeId& v) const {
        return static_cast<std::size_t>(std::lower_bound(ids_.begin(), ids_.end(), v) - ids_.begin());
    }
    std::size_t find(std::size_t x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }
    std::size_t find(const NodeId& v) const { return find(index(v)); }
    void unite(const NodeId& a, const NodeId& b) {
        auto x = find(a), y = find(b);
        if (x != y) parent_[std::max(x, y)] = std::min(x, y);
    }
    std::vector<std::pair<NodeId, NodeId>> relation() const {
        std::vector<std::pair<NodeId, NodeId>> out;
        for (std::size_t i = 0; i < ids_.size(); ++i)
            if (find(i) != i) out.emplace_back(ids_[i], ids_[find(i)]);
        return out;
    }

private:
    std::vector<NodeId> ids_;
    std::vector<std::size_t> parent_;
};

Pattern pattern_of(const Attachment& m, const NodeClasses& uf) {
    Pattern p;
    std::map<std::size_t, int> block;
    for (const auto& [s, v] : m) {
        auto r = uf.find(v);
        auto it = block.find(r);
        if (it == block.end()) it = block.emplace(r, static_cast<int>(block.size())).first;
        p.push_back(it->second);
    }
    return p;
}

bool discrete(const Pattern& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

void glue_by_pattern(NodeClasses& uf, const Attachment& m, const Pattern& p) {
    std::map<int, NodeId> first;
    std::size_t i = 0;
    for (const auto& [s, v] : m) {
        auto [it, fresh] = first.emplace(p[i++], v);
        if (!fresh) uf.unite(it->second, v);
    }
}

// Enumerates one choice per slot; `choose` is called with the index vector.
void for_each_choice(const std::vector<std::size_t>& sizes, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(sizes.size(), 0);
    for (auto s : sizes)
        if (s == 0) return;
    while (true) {
        f(idx);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == sizes[k]) idx[k++] = 0;
        if (k == idx.size()) return;
    }
}

std::string pattern_text(const Type& t, const Pattern& p) {
    std::vector<std::string> blocks;
    std::size_t i = 0;
    for (const auto& s : t) {
        const auto b = static_cast<std::size_t>(p[i++]);
        if (blocks.size() <= b) blocks.resize(b + 1);
        blocks[b] += (blocks[b].empty() ? "" : ",") + s;
    }
    std::string out;
    for (std::size_t b = 0; b < blocks.size(); ++b) out += (b ? "|" : "") + blocks[b];
    return out;
}

// First selector of every block, which names the block in the collapsed type.
std::vector<Selector> block_representatives(const Type& t, const Pattern& p) {
    std::vector<Selector> reps;
    std::size_t i = 0;
    for (const auto& s : t) {
        if (static_cast<std::size_t>(p[i]) == reps.size()) reps.push_back(s);
        ++i;
    }
    return reps;
}

std::vector<Pattern> to_vector(const std::set<Pattern>& s) { return {s.begin(), s.end()}; }

class ProductionSet {
public:
    explicit ProductionSet(std::vector<Production>& out) : out_(out) {
        for (const auto& p : out_) seen_.insert(p.lhs + "\n" + canonical_key(p.rhs));
    }
    void add(Production p) {
        if (seen_.insert(p.lhs + "\n" + canonical_key(p.rhs)).second) out_.push_back(std::move(p));
    }

private:
    std::vector<Production>& out_;
    std::unordered_set<std::string> seen_;
};

}  // namespace

Grammar binarize(const Grammar& g) {
    check(g);
    Grammar out = g;
    out.productions.clear();
    const Label start = fresh_label(g, g.start + "'");
    out.nonterminals[start] = g.type_of(g.start);
    out.start = start;
    out.productions.push_back({start, handle(g.start, g.type_of(g.start))});

    std::size_t counter = 0;
    for (const auto& p : g.productions) {
        Hypergraph rhs = p.rhs;
        while (rhs.edges.size() > 2) {
            auto it = rhs.edges.begin();
            const EdgeId id1 = it->first;
            const Edge e1 = it->second;
            ++it;
            const EdgeId id2 = it->first;
            const Edge e2 = it->second;

            Label fresh;
            do fresh = "B" + std::to_string(++counter);
            while (out.nonterminals.count(fresh) || out.terminals.count(fresh));

            // one selector per distinct attachment node keeps the split repetition-free
            Hypergraph part;
            Attachment att;
            std::set<NodeId> covered;
            Type t;
            auto collect = [&](int i, const Edge& e) {
                for (const auto& [s, v] : e.att) {
                    if (!covered.insert(v).second) continue;
                    const Selector sel = "(" + std::to_string(i) + "," + s + ")";
                    t.insert(sel);
                    att[sel] = v;
                    part.ext[sel] = v;
                    part.nodes.insert(v);
                }
            };
            collect(1, e1);
            collect(2, e2);
            part.edges.emplace(id1, e1);
            part.edges.emplace(id2, e2);
            out.nonterminals[fresh] = t;
            out.productions.push_back({fresh, std::move(part)});

            rhs.edges.erase(id1);
            rhs.edges.erase(id2);
            rhs.edges.emplace(id1, Edge{fresh, att});
        }
        out.productions.push_back({p.lhs, std::move(rhs)});
    }
    // keep the productions of each lhs in their original relative order, start wrapper first
    std::stable_sort(out.productions.begin() + 1, out.productions.end(), [&](const Production& a, const Production& b) {
        const bool fa = !g.nonterminals.count(a.lhs);
        const bool fb = !g.nonterminals.count(b.lhs);
        return fa < fb;
    });
    return out;
}

namespace {

using PatternSets = std::map<Label, std::set<Pattern>>;

// Patterns of ext that derivations from each nonterminal can produce on their own.
PatternSets own_patterns(const Grammar& g) {
    PatternSets own;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            std::vector<EdgeId> nts = nonterminal_edges(g, p.rhs);
            std::vector<std::vector<Pattern>> options;
            std::vector<std::size_t> sizes;
            for (const auto& e : nts) {
                options.push_back(to_vector(own[p.rhs.edges.at(e).label]));
                sizes.push_back(options.back().size());
            }
            for_each_choice(sizes, [&](const std::vector<std::size_t>& pick) {
                NodeClasses uf(p.rhs);
                for (std::size_t i = 0; i < nts.size(); ++i)
                    glue_by_pattern(uf, p.rhs.edges.at(nts[i]).att, options[i][pick[i]]);
                if (own[p.lhs].insert(pattern_of(p.rhs.ext, uf)).second) changed = true;
            });
        }
    }
    return own;
}

}  // namespace

Grammar to_repetition_free(const Grammar& g) {
    check(g);
    const PatternSets own = own_patterns(g);

    using Key = std::tuple<Label, Pattern, Pattern>;
    std::map<Key, Label> names;
    Grammar out = g;
    out.nonterminals.clear();
    out.productions.clear();
    std::deque<Key> queue;

    auto name_of = [&](const Key& k) -> Label {
        if (auto it = names.find(k); it != names.end()) return it->second;
        const auto& [a, imposed, self] = k;
        const Type& t = g.type_of(a);
        Label l = a;
        if (!discrete(imposed))
            l = fresh_label(g, a + "<" + pattern_text(t, imposed) + ";" + pattern_text(t, self) + ">");
        names.emplace(k, l);
        Type collapsed;
        for (const auto& s : block_representatives(t, imposed)) collapsed.insert(s);
        out.nonterminals[l] = collapsed;
        queue.push_back(k);
        return l;
    };

    const Pattern start_pattern = [&] {
        Pattern p(g.type_of(g.start).size());
        std::iota(p.begin(), p.end(), 0);
        return p;
    }();
    out.start = name_of({g.start, start_pattern, start_pattern});
    ProductionSet emitted(out.productions);

    while (!queue.empty()) {
        const Key key = queue.front();
        queue.pop_front();
        const auto& [a, imposed, self] = key;
        const Label lhs_name = names.at(key);
        const Type& lhs_type = g.type_of(a);
        const auto lhs_reps = block_representatives(lhs_type, imposed);

        for (const auto& p : g.productions) {
            if (p.lhs != a) continue;
            const std::vector<EdgeId> nts = nonterminal_edges(g, p.rhs);
            std::vector<std::vector<Pattern>> options;
            std::vector<std::size_t> sizes;
            for (const auto& e : nts) {
                auto it = own.find(p.rhs.edges.at(e).label);
                options.push_back(it == own.end() ? std::vector<Pattern>{} : to_vector(it->second));
                sizes.push_back(options.back().size());
            }
            for_each_choice(sizes, [&](const std::vector<std::size_t>& pick) {
                NodeClasses uf(p.rhs);
                for (std::size_t i = 0; i < nts.size(); ++i)
                    glue_by_pattern(uf, p.rhs.edges.at(nts[i]).att, options[i][pick[i]]);
                if (pattern_of(p.rhs.ext, uf) != self) return;
                glue_by_pattern(uf, p.rhs.ext, imposed);
                if (pattern_of(p.rhs.ext, uf) != imposed) return;
                for (const auto& [id, e] : p.rhs.edges) {
                    if (g.is_nonterminal(e.label)) continue;
                    std::set<std::size_t> seen;
                    for (const auto& [s, v] : e.att)
                        if (!seen.insert(uf.find(v)).second) return;
                }

                Hypergraph rhs = quotient(p.rhs, uf.relation());
                Attachment ext;
                for (const auto& s : lhs_reps) ext[s] = rhs.ext.at(s);
                rhs.ext = std::move(ext);
                for (std::size_t i = 0; i < nts.size(); ++i) {
                    Edge& e = rhs.edges.at(nts[i]);
                    const Type& child_type = g.type_of(e.label);
                    const Pattern child_imposed = pattern_of(p.rhs.edges.at(nts[i]).att, uf);
                    const Label child = name_of({e.label, child_imposed, options[i][pick[i]]});
                    Attachment att;
                    for (const auto& s : block_representatives(child_type, child_imposed)) att[s] = e.att.at(s);
                    e = Edge{child, std::move(att)};
                }
                emitted.add({lhs_name, std::move(rhs)});
            });
        }
    }
    out.metadata["derived_by"] = "repfree";
    return eliminate_useless(out).grammar;
}

Grammar eliminate_empty(const Grammar& g) {
    check(g);
    PatternSets empty;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            // only an all-nonterminal rhs can vanish completely
            bool has_terminal = false;
            for (const auto& [id, e] : p.rhs.edges)
                if (!g.is_nonterminal(e.label)) has_terminal = true;
            if (has_terminal) continue;
            const std::vector<EdgeId> nts = nonterminal_edges(g, p.rhs);
            std::vector<std::vector<Pattern>> options;
            std::vector<std::size_t> sizes;
            for (const auto& e : nts) {
                options.push_back(to_vector(empty[p.rhs.edges.at(e).label]));
                sizes.push_back(options.back().size());
            }
            for_each_choice(sizes, [&](const std::vector<std::size_t>& pick) {
                NodeClasses uf(p.rhs);
                for (std::size_t i = 0; i < nts.size(); ++i)
                    glue_by_pattern(uf, p.rhs.edges.at(nts[i]).att, options[i][pick[i]]);
                std::set<std::size_t> external;
                for (const auto& [s, v] : p.rhs.ext) external.insert(uf.find(v));
                std::set<std::size_t> all;
                for (const auto& v : p.rhs.nodes) all.insert(uf.find(v));
                if (external != all) return;
                if (empty[p.lhs].insert(pattern_of(p.rhs.ext, uf)).second) changed = true;
            });
        }
    }

    Grammar out = g;
    out.productions.clear();
    ProductionSet emitted(out.productions);
    for (const auto& p : g.productions) {
        const std::vector<EdgeId> nts = nonterminal_edges(g, p.rhs);
        // option 0 keeps the edge; option k > 0 erases it with the (k-1)-th pattern
        std::vector<std::vector<Pattern>> options;
        std::vector<std::size_t> sizes;
        for (const auto& e : nts) {
            auto it = empty.find(p.rhs.edges.at(e).label);
            options.push_back(it == empty.end() ? std::vector<Pattern>{} : to_vector(it->second));
            sizes.push_back(options.back().size() + 1);
        }
        for_each_choice(sizes, [&](const std::vector<std::size_t>& pick) {
            Hypergraph rhs = p.rhs;
            NodeClasses uf(p.rhs);
            for (std::size_t i = 0; i < nts.size(); ++i) {
                if (pick[i] == 0) continue;
                glue_by_pattern(uf, p.rhs.edges.at(nts[i]).att, options[i][pick[i] - 1]);
                rhs.edges.erase(nts[i]);
            }
            rhs = quotient(rhs, uf.relation());
            Production candidate{p.lhs, std::move(rhs)};
            if (is_empty_production(candidate)) return;
            emitted.add(std::move(candidate));
        });
    }
    if (auto it = empty.find(g.start); it != empty.end() && !it->second.empty()) {
        const Type& t = g.type_of(g.start);
        for (const auto& pat : it->second) {
            Hypergraph h;
            std::size_t i = 0;
            for (const auto& s : t) {
                const NodeId v = "v" + std::to_string(pat[i++]);
                h.nodes.insert(v);
                h.ext[s] = v;
            }
            emitted.add({g.start, std::move(h)});
        }
        out.metadata[kStartExceptionKey] = "true";
    }
    return out;
}

std::vector<ChainEntry> chain_closure(const Grammar& g) {
    std::vector<ChainEntry> out;
    for (const auto& [a, t] : g.nonterminals) {
        std::unordered_set<std::string> seen;
        std::vector<Hypergraph> found{handle(a, t)};
        seen.insert(canonical_key(found.front()));
        for (std::size_t i = 0; i < found.size(); ++i) {
            const auto& [id, e] = *found[i].edges.begin();
            for (const auto& p : g.productions) {
                if (p.lhs != e.label || !is_unit_production(g, p)) continue;
                Hypergraph next = replace(found[i], id, p.rhs);
                if (seen.insert(canonical_key(next)).second) found.push_back(std::move(next));
            }
        }
        for (auto& h : found) out.push_back({a, std::move(h)});
    }
    return out;
}

Grammar eliminate_chain(const Grammar& g) {
    check(g);
    Grammar out = g;
    out.productions.clear();
    ProductionSet emitted(out.productions);
    const auto closure = chain_closure(g);
    for (const auto& entry : closure) {
        const auto& [id, e] = *entry.rhs.edges.begin();
        const bool trivial = entry.rhs == handle(entry.lhs, g.type_of(entry.lhs));
        for (const auto& p : g.productions) {
            if (p.lhs != e.label || is_unit_production(g, p)) continue;
            emitted.add({entry.lhs, trivial ? p.rhs : replace(entry.rhs, id, p.rhs)});
        }
    }
    return out;
}

NormalizeStep parse_step(const std::string& name) {
    if (name == "binarize") return NormalizeStep::binarize;
    if (name == "repfree") return NormalizeStep::repfree;
    if (name == "noempty") return NormalizeStep::noempty;
    if (name == "nochain") return NormalizeStep::nochain;
    throw InputError("unknown normalization step '" + name + "'");
}

std::string step_name(NormalizeStep s) {
    switch (s) {
        case NormalizeStep::binarize: return "binarize";
        case NormalizeStep::repfree: return "repfree";
        case NormalizeStep::noempty: return "noempty";
        case NormalizeStep::nochain: return "nochain";
    }
    return "";
}

Grammar normalize(const Grammar& g, const std::vector<NormalizeStep>& steps) {
    Grammar cur = g;
    std::string applied = g.metadata.count("steps") ? g.metadata.at("steps") : "";
    for (auto s : steps) {
        switch (s) {
            case NormalizeStep::binarize: cur = binarize(cur); break;
            case NormalizeStep::repfree: cur = to_repetition_free(cur); break;
            case NormalizeStep::noempty: cur = eliminate_empty(cur); break;
            case NormalizeStep::nochain: cur = eliminate_chain(cur); break;
        }
        applied += (applied.empty() ? "" : ",") + step_name(s);
    }
    cur.metadata.erase("derived_by");
    if (!applied.empty()) cur.metadata["steps"] = applied;
    return cur;
}

Grammar full_pipeline(const Grammar& g) {
    return normalize(g, {NormalizeStep::binarize, NormalizeStep::repfree, NormalizeStep::noempty, NormalizeStep::nochain});
}

}  // namespace hrg
