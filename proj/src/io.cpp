#include "hrg/io.hpp"

#include <fstream>
#include <sstream>

namespace hrg {

Json parse_document(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // locate the byte offset reported by the parser
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed document");
    }
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_document(const std::string& path) { return parse_document(read_text(path), path); }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
    throw InputError(path + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) field_error(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) field_error(path, std::string("missing field '") + key + "'");
    return *it;
}

std::string as_string(const Json& j, const std::string& path) {
    if (!j.is_string()) field_error(path, "expected a string");
    return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path) {
    if (!j.is_array()) field_error(path, "expected a list");
    return j;
}

std::size_t as_index(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned()) field_error(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

Attachment attachment_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) field_error(path, "expected a mapping from selectors to nodes");
    Attachment a;
    for (auto it = j.begin(); it != j.end(); ++it) a[it.key()] = as_string(it.value(), path + "." + it.key());
    return a;
}

Json attachment_to_json(const Attachment& a) {
    Json j = Json::object();
    for (const auto& [s, v] : a) j[s] = v;
    return j;
}

Type type_from_json(const Json& j, const std::string& path) {
    as_array(j, path);
    Type t;
    for (std::size_t i = 0; i < j.size(); ++i)
        if (!t.insert(as_string(j[i], path + "[" + std::to_string(i) + "]")).second)
            field_error(path, "selector listed twice");
    return t;
}

Alphabet alphabet_from_json(const Json& j, const std::string& path) {
    as_array(j, path);
    Alphabet a;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        const Label l = as_string(member(j[i], "label", p), p + ".label");
        if (!a.emplace(l, type_from_json(member(j[i], "type", p), p + ".type")).second)
            field_error(p, "label '" + l + "' declared twice");
    }
    return a;
}

Json alphabet_to_json(const Alphabet& a) {
    Json j = Json::array();
    for (const auto& [l, t] : a) j.push_back(Json{{"label", l}, {"type", to_json(t)}});
    return j;
}

}  // namespace

Json to_json(const Type& t) {
    Json j = Json::array();
    for (const auto& s : t) j.push_back(s);
    return j;
}

Json to_json(const Hypergraph& h) {
    Json nodes = Json::array();
    for (const auto& v : h.nodes) nodes.push_back(v);
    Json edges = Json::array();
    for (const auto& [id, e] : h.edges) edges.push_back(Json{{"id", id}, {"label", e.label}, {"att", attachment_to_json(e.att)}});
    return Json{{"nodes", nodes}, {"edges", edges}, {"ext", attachment_to_json(h.ext)}};
}

Hypergraph hypergraph_from_json(const Json& j, const std::string& path) {
    Hypergraph h;
    const Json& nodes = as_array(member(j, "nodes", path), path + ".nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::string v = as_string(nodes[i], path + ".nodes[" + std::to_string(i) + "]");
        if (!h.nodes.insert(v).second) field_error(path + ".nodes", "node '" + v + "' listed twice");
    }
    const Json& edges = as_array(member(j, "edges", path), path + ".edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string p = path + ".edges[" + std::to_string(i) + "]";
        const EdgeId id = as_string(member(edges[i], "id", p), p + ".id");
        const Label l = as_string(member(edges[i], "label", p), p + ".label");
        Attachment att = attachment_from_json(member(edges[i], "att", p), p + ".att");
        for (const auto& [s, v] : att)
            if (!h.nodes.count(v)) field_error(p + ".att." + s, "unknown node '" + v + "'");
        if (h.edges.count(id)) field_error(p + ".id", "edge '" + id + "' listed twice");
        h.edges.emplace(id, Edge{l, std::move(att)});
    }
    h.ext = j.contains("ext") ? attachment_from_json(j.at("ext"), path + ".ext") : Attachment{};
    for (const auto& [s, v] : h.ext)
        if (!h.nodes.count(v)) field_error(path + ".ext." + s, "unknown node '" + v + "'");
    return h;
}

Json to_json(const Grammar& g) {
    Json productions = Json::array();
    for (const auto& p : g.productions) productions.push_back(Json{{"lhs", p.lhs}, {"rhs", to_json(p.rhs)}});
    Json j{{"nonterminals", alphabet_to_json(g.nonterminals)},
           {"terminals", alphabet_to_json(g.terminals)},
           {"start", g.start},
           {"productions", productions}};
    if (!g.metadata.empty()) {
        Json m = Json::object();
        for (const auto& [k, v] : g.metadata) m[k] = v;
        j["metadata"] = m;
    }
    return j;
}

Grammar grammar_from_json(const Json& j) {
    Grammar g;
    g.nonterminals = alphabet_from_json(member(j, "nonterminals", "grammar"), "nonterminals");
    g.terminals = alphabet_from_json(member(j, "terminals", "grammar"), "terminals");
    g.start = as_string(member(j, "start", "grammar"), "start");
    const Json& prods = as_array(member(j, "productions", "grammar"), "productions");
    for (std::size_t i = 0; i < prods.size(); ++i) {
        const std::string p = "productions[" + std::to_string(i) + "]";
        g.productions.push_back({as_string(member(prods[i], "lhs", p), p + ".lhs"),
                                 hypergraph_from_json(member(prods[i], "rhs", p), p + ".rhs")});
    }
    if (j.contains("metadata")) {
        const Json& m = j.at("metadata");
        if (!m.is_object()) field_error("metadata", "expected an object");
        for (auto it = m.begin(); it != m.end(); ++it) g.metadata[it.key()] = as_string(it.value(), "metadata." + it.key());
    }
    const auto problems = validate(g);
    if (!problems.empty()) throw InputError(problems.front());
    return g;
}

Json to_json(const Transformation& f) { return Json(f.one_based()); }

Transformation transformation_from_json(const Json& j, const std::string& path) {
    as_array(j, path);
    std::vector<int> image;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) field_error(path + "[" + std::to_string(i) + "]", "expected an integer");
        const int v = j[i].get<int>();
        if (v < 1 || v > static_cast<int>(j.size()))
            field_error(path + "[" + std::to_string(i) + "]", "image " + std::to_string(v) + " is outside 1.." + std::to_string(j.size()));
        image.push_back(v);
    }
    return Transformation::from_one_based(image);
}

Json to_json(const PermNFA& a) {
    Json transitions = Json::array();
    for (const auto& t : a.transitions) transitions.push_back(Json{{"from", t.from}, {"label", to_json(t.label)}, {"to", t.to}});
    return Json{{"n", a.n}, {"states", a.states}, {"initial", a.initial}, {"final", a.final}, {"transitions", transitions}};
}

PermNFA nfa_from_json(const Json& j) {
    PermNFA a;
    const Json& states = as_array(member(j, "states", "automaton"), "states");
    for (std::size_t i = 0; i < states.size(); ++i) a.states.push_back(as_string(states[i], "states[" + std::to_string(i) + "]"));
    for (const char* key : {"initial", "final"}) {
        const Json& s = as_array(member(j, key, "automaton"), key);
        auto& target = std::string(key) == "initial" ? a.initial : a.final;
        for (std::size_t i = 0; i < s.size(); ++i) target.insert(as_string(s[i], std::string(key) + "[" + std::to_string(i) + "]"));
    }
    const Json& ts = as_array(member(j, "transitions", "automaton"), "transitions");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string p = "transitions[" + std::to_string(i) + "]";
        a.transitions.push_back({as_string(member(ts[i], "from", p), p + ".from"),
                                 transformation_from_json(member(ts[i], "label", p), p + ".label"),
                                 as_string(member(ts[i], "to", p), p + ".to")});
    }
    if (j.contains("n")) a.n = as_index(j.at("n"), "n");
    else if (!a.transitions.empty()) a.n = a.transitions.front().label.size();
    a.check();
    return a;
}

Json to_json(const DerivationTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t) steps.push_back(Json{{"production", s.production}, {"edge", s.edge}});
    return Json{{"steps", steps}};
}

DerivationTrace trace_from_json(const Json& j) {
    DerivationTrace t;
    const Json& steps = as_array(member(j, "steps", "trace"), "steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string p = "steps[" + std::to_string(i) + "]";
        t.push_back({as_index(member(steps[i], "production", p), p + ".production"),
                     as_string(member(steps[i], "edge", p), p + ".edge")});
    }
    return t;
}

Json to_json(const MembershipCertificate& c) {
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        if (s.kind == CertificateStep::Kind::plain) {
            steps.push_back(Json{{"kind", "plain"}, {"edge", s.edge}, {"production", s.production}});
            continue;
        }
        Json word = Json::array();
        for (const auto& w : s.word) word.push_back(to_json(w));
        steps.push_back(Json{{"kind", "block"},
                             {"edge", s.edge},
                             {"source", s.source},
                             {"sink", s.sink},
                             {"sigma", to_json(s.sigma)},
                             {"word", word}});
    }
    return Json{{"steps", steps}};
}

MembershipCertificate certificate_from_json(const Json& j) {
    MembershipCertificate c;
    const Json& steps = as_array(member(j, "steps", "certificate"), "steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string p = "steps[" + std::to_string(i) + "]";
        CertificateStep s;
        const std::string kind = as_string(member(steps[i], "kind", p), p + ".kind");
        s.edge = as_string(member(steps[i], "edge", p), p + ".edge");
        if (kind == "plain") {
            s.kind = CertificateStep::Kind::plain;
            s.production = as_index(member(steps[i], "production", p), p + ".production");
        } else if (kind == "block") {
            s.kind = CertificateStep::Kind::block;
            s.source = as_string(member(steps[i], "source", p), p + ".source");
            s.sink = as_string(member(steps[i], "sink", p), p + ".sink");
            s.sigma = transformation_from_json(member(steps[i], "sigma", p), p + ".sigma");
            const Json& word = as_array(member(steps[i], "word", p), p + ".word");
            for (std::size_t k = 0; k < word.size(); ++k)
                s.word.push_back(transformation_from_json(word[k], p + ".word[" + std::to_string(k) + "]"));
        } else {
            field_error(p + ".kind", "expected 'plain' or 'block'");
        }
        c.steps.push_back(std::move(s));
    }
    return c;
}

Json to_json(const Mcfg& g) {
    Json nts = Json::array();
    for (const auto& [l, d] : g.nonterminals) nts.push_back(Json{{"label", l}, {"dim", d}});
    Json rules = Json::array();
    for (const auto& r : g.rules) {
        Json outputs = Json::array();
        for (const auto& comp : r.outputs) {
            Json c = Json::array();
            for (const auto& t : comp) c.push_back(t.text());
            outputs.push_back(c);
        }
        rules.push_back(Json{{"lhs", r.lhs}, {"args", r.args}, {"outputs", outputs}});
    }
    return Json{{"nonterminals", nts}, {"terminals", g.terminals}, {"start", g.start}, {"rules", rules}};
}

Mcfg mcfg_from_json(const Json& j) {
    Mcfg g;
    const Json& nts = as_array(member(j, "nonterminals", "mcfg"), "nonterminals");
    for (std::size_t i = 0; i < nts.size(); ++i) {
        const std::string p = "nonterminals[" + std::to_string(i) + "]";
        const Label l = as_string(member(nts[i], "label", p), p + ".label");
        if (!g.nonterminals.emplace(l, as_index(member(nts[i], "dim", p), p + ".dim")).second)
            field_error(p, "nonterminal '" + l + "' declared twice");
    }
    const Json& ts = as_array(member(j, "terminals", "mcfg"), "terminals");
    for (std::size_t i = 0; i < ts.size(); ++i) g.terminals.insert(as_string(ts[i], "terminals[" + std::to_string(i) + "]"));
    g.start = as_string(member(j, "start", "mcfg"), "start");
    const Json& rules = as_array(member(j, "rules", "mcfg"), "rules");
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const std::string p = "rules[" + std::to_string(i) + "]";
        McfRule r;
        r.lhs = as_string(member(rules[i], "lhs", p), p + ".lhs");
        const Json& args = as_array(member(rules[i], "args", p), p + ".args");
        for (std::size_t k = 0; k < args.size(); ++k) r.args.push_back(as_string(args[k], p + ".args[" + std::to_string(k) + "]"));
        const Json& outputs = as_array(member(rules[i], "outputs", p), p + ".outputs");
        for (std::size_t c = 0; c < outputs.size(); ++c) {
            const std::string pc = p + ".outputs[" + std::to_string(c) + "]";
            const Json& comp = as_array(outputs[c], pc);
            std::vector<McfToken> tokens;
            for (std::size_t k = 0; k < comp.size(); ++k) {
                const std::string pt = pc + "[" + std::to_string(k) + "]";
                try {
                    tokens.push_back(parse_token(as_string(comp[k], pt)));
                } catch (const InputError& e) {
                    field_error(pt, e.what());
                }
            }
            r.outputs.push_back(std::move(tokens));
        }
        g.rules.push_back(std::move(r));
    }
    check(g);
    return g;
}

Json to_json(const StringGenResult& r) {
    Json j{{"string_generating", r.string_generating}, {"reason", r.reason}};
    if (r.witness) {
        Json w{{"graph", to_json(r.witness->graph)}};
        if (r.witness->production)
            w["production"] = Json{{"lhs", r.witness->production->lhs}, {"rhs", to_json(r.witness->production->rhs)}};
        Json used = Json::array();
        for (const auto& s : r.witness->summaries) used.push_back(to_json(s));
        w["summaries"] = used;
        j["witness"] = w;
    }
    return j;
}

}  // namespace hrg
