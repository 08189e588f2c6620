#include "hrg/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace hrg {

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

bool SelectorLess::operator()(const Selector& a, const Selector& b) const {
    const bool da = all_digits(a);
    const bool db = all_digits(b);
    if (da && db) {
        // compare by magnitude without overflow: strip leading zeros, then length, then text
        auto strip = [](const std::string& s) {
            auto p = s.find_first_not_of('0');
            return p == std::string::npos ? std::string("0") : s.substr(p);
        };
        const auto sa = strip(a);
        const auto sb = strip(b);
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
        return a < b;
    }
    if (da != db) return da;
    return a < b;
}

Type Edge::type() const {
    Type t;
    for (const auto& [s, v] : att) t.insert(s);
    return t;
}

Type Hypergraph::type() const {
    Type t;
    for (const auto& [s, v] : ext) t.insert(s);
    return t;
}

void Hypergraph::add_node(const NodeId& v) { nodes.insert(v); }

void Hypergraph::add_edge(const EdgeId& id, Label label, Attachment att) {
    if (edges.count(id)) throw InputError("duplicate edge id '" + id + "'");
    edges.emplace(id, Edge{std::move(label), std::move(att)});
}

void Hypergraph::check_references() const {
    for (const auto& [id, e] : edges)
        for (const auto& [s, v] : e.att)
            if (!nodes.count(v))
                throw InputError("edge '" + id + "' selector '" + s + "' attaches unknown node '" + v + "'");
    for (const auto& [s, v] : ext)
        if (!nodes.count(v)) throw InputError("ext selector '" + s + "' points to unknown node '" + v + "'");
}

Type make_type(std::initializer_list<const char*> selectors) {
    Type t;
    for (const char* s : selectors) t.insert(s);
    return t;
}

Type numeric_type(std::size_t n) {
    Type t;
    for (std::size_t i = 1; i <= n; ++i) t.insert(std::to_string(i));
    return t;
}

std::string selectors_to_string(const Type& t) {
    std::string out = "{";
    bool first = true;
    for (const auto& s : t) {
        if (!first) out += ",";
        out += s;
        first = false;
    }
    return out + "}";
}

Hypergraph handle(const Label& label, const Type& type) {
    Hypergraph h;
    Attachment att;
    for (const auto& s : type) {
        h.add_node(s);
        att[s] = s;
        h.ext[s] = s;
    }
    h.add_edge("e", label, std::move(att));
    return h;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

Hypergraph quotient(const Hypergraph& h, const std::vector<std::pair<NodeId, NodeId>>& relation) {
    std::vector<NodeId> ids(h.nodes.begin(), h.nodes.end());
    std::map<NodeId, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
    UnionFind uf(ids.size());
    for (const auto& [u, v] : relation) {
        auto iu = index.find(u);
        auto iv = index.find(v);
        if (iu == index.end()) throw InputError("quotient: unknown node '" + u + "'");
        if (iv == index.end()) throw InputError("quotient: unknown node '" + v + "'");
        uf.unite(iu->second, iv->second);
    }
    // ids are sorted and unite keeps the smaller index as root, so every root
    // is the lexicographically least member of its class
    auto rep = [&](const NodeId& v) { return ids[uf.find(index.at(v))]; };
    Hypergraph out;
    for (const auto& v : ids) out.nodes.insert(rep(v));
    for (const auto& [id, e] : h.edges) {
        Edge ne{e.label, {}};
        for (const auto& [s, v] : e.att) ne.att[s] = rep(v);
        out.edges.emplace(id, std::move(ne));
    }
    for (const auto& [s, v] : h.ext) out.ext[s] = rep(v);
    return out;
}

Hypergraph replace(const Hypergraph& h, const EdgeId& e, const Hypergraph& k) {
    auto it = h.edges.find(e);
    if (it == h.edges.end()) throw InputError("replace: no edge '" + e + "'");
    const Edge& target = it->second;
    if (target.type() != k.type())
        throw ContractViolation("replace: edge '" + e + "' has type " + selectors_to_string(target.type()) +
                                " but replacement has type " + selectors_to_string(k.type()));

    Hypergraph out = h;
    out.edges.erase(e);

    std::map<NodeId, NodeId> node_name;
    std::size_t counter = 0;
    for (const auto& v : k.nodes) {
        NodeId fresh;
        do fresh = "_n" + std::to_string(counter++);
        while (out.nodes.count(fresh));
        node_name[v] = fresh;
        out.nodes.insert(fresh);
    }
    counter = 0;
    for (const auto& [id, ke] : k.edges) {
        EdgeId fresh;
        do fresh = "_e" + std::to_string(counter++);
        while (out.edges.count(fresh) || h.edges.count(fresh));
        Edge ne{ke.label, {}};
        for (const auto& [s, v] : ke.att) ne.att[s] = node_name.at(v);
        out.edges.emplace(fresh, std::move(ne));
    }
    std::vector<std::pair<NodeId, NodeId>> glue;
    for (const auto& [s, v] : target.att) glue.emplace_back(v, node_name.at(k.ext.at(s)));
    return quotient(out, glue);
}

Hypergraph string_graph(const Word& w) {
    Hypergraph h;
    for (std::size_t i = 0; i <= w.size(); ++i) h.add_node("v" + std::to_string(i));
    for (std::size_t i = 1; i <= w.size(); ++i)
        h.add_edge("e" + std::to_string(i), w[i - 1],
                   {{"1", "v" + std::to_string(i - 1)}, {"2", "v" + std::to_string(i)}});
    h.ext["1"] = "v0";
    h.ext["2"] = "v" + std::to_string(w.size());
    return h;
}

Hypergraph q_string_graph(const Word& w, std::size_t q) {
    if (q == 0) throw InputError("q-string graph needs q >= 1");
    auto node = [](std::size_t i, std::size_t j) { return "v" + std::to_string(i) + "_" + std::to_string(j); };
    Hypergraph h;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 1; j <= q; ++j) h.add_node(node(i, j));
    for (std::size_t i = 1; i <= n; ++i) {
        Attachment att;
        for (std::size_t j = 1; j <= q; ++j) {
            att[std::to_string(j)] = node(i - 1, j);
            att[std::to_string(q + j)] = node(i, j);
        }
        h.add_edge("s" + std::to_string(i), w[i - 1], std::move(att));
    }
    for (std::size_t j = 1; j <= q; ++j) {
        h.ext[std::to_string(j)] = node(0, j);
        h.ext[std::to_string(q + j)] = node(n, j);
    }
    return h;
}

Word chars(const std::string& s) {
    Word w;
    for (char c : s) w.emplace_back(1, c);
    return w;
}

std::string word_to_string(const Word& w) {
    const bool single = std::all_of(w.begin(), w.end(), [](const Label& l) { return l.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single && i > 0) out += ' ';
        out += w[i];
    }
    return out;
}

bool is_repetition_free(const Hypergraph& h) {
    auto injective = [](const Attachment& m) {
        std::set<NodeId> seen;
        for (const auto& [s, v] : m)
            if (!seen.insert(v).second) return false;
        return true;
    };
    if (!injective(h.ext)) return false;
    for (const auto& [id, e] : h.edges)
        if (!injective(e.att)) return false;
    return true;
}

std::optional<Word> is_string_graph(const Hypergraph& h) {
    const Type two = make_type({"1", "2"});
    if (h.type() != two) return std::nullopt;
    if (h.nodes.size() != h.edges.size() + 1) return std::nullopt;
    std::map<NodeId, const Edge*> out_edge;
    std::map<NodeId, int> in_degree;
    for (const auto& [id, e] : h.edges) {
        if (e.type() != two) return std::nullopt;
        const auto& from = e.att.at("1");
        if (out_edge.count(from)) return std::nullopt;
        out_edge[from] = &e;
        if (++in_degree[e.att.at("2")] > 1) return std::nullopt;
    }
    Word w;
    std::set<NodeId> visited;
    NodeId cur = h.ext.at("1");
    visited.insert(cur);
    while (out_edge.count(cur)) {
        const Edge* e = out_edge.at(cur);
        w.push_back(e->label);
        cur = e->att.at("2");
        if (!visited.insert(cur).second) return std::nullopt;
    }
    if (cur != h.ext.at("2") || w.size() != h.edges.size()) return std::nullopt;
    return w;
}

std::vector<std::vector<Selector>> ext_kernel(const Hypergraph& h) {
    std::map<NodeId, std::vector<Selector>> blocks;
    std::vector<NodeId> order;
    for (const auto& [s, v] : h.ext) {
        if (!blocks.count(v)) order.push_back(v);
        blocks[v].push_back(s);
    }
    std::vector<std::vector<Selector>> out;
    for (const auto& v : order) out.push_back(blocks[v]);
    return out;
}

}  // namespace hrg
