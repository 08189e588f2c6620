#include "hrg/mcfg.hpp"

#include <functional>

namespace hrg {

std::string McfToken::text() const {
    if (!variable) return terminal;
    return "$" + std::to_string(arg) + "." + std::to_string(component);
}

McfToken parse_token(const std::string& s) {
    if (s.empty()) throw InputError("empty token");
    if (s[0] != '$') return McfToken::term(s);
    const auto dot = s.find('.');
    auto number = [&](const std::string& part) -> std::size_t {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("malformed variable token '" + s + "', expected $p.q");
        return std::stoul(part);
    };
    if (dot == std::string::npos) throw InputError("malformed variable token '" + s + "', expected $p.q");
    return McfToken::var(number(s.substr(1, dot - 1)), number(s.substr(dot + 1)));
}

std::size_t Mcfg::dim(const Label& l) const {
    auto it = nonterminals.find(l);
    if (it == nonterminals.end()) throw InputError("undeclared nonterminal '" + l + "'");
    return it->second;
}

bool Mcfg::is_lcfrs() const {
    for (const auto& r : rules)
        if (!information_lossless(*this, r)) return false;
    return true;
}

std::vector<std::string> validate(const Mcfg& g) {
    std::vector<std::string> problems;
    if (!g.nonterminals.count(g.start)) problems.push_back("start symbol '" + g.start + "' is not declared");
    else if (g.nonterminals.at(g.start) != 1) problems.push_back("start symbol must have dimension 1");
    for (const auto& [l, d] : g.nonterminals)
        if (g.terminals.count(l)) problems.push_back("'" + l + "' is both terminal and nonterminal");
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
        const McfRule& r = g.rules[i];
        const std::string where = "rule " + std::to_string(i + 1) + ": ";
        if (!g.nonterminals.count(r.lhs)) {
            problems.push_back(where + "undeclared lhs '" + r.lhs + "'");
            continue;
        }
        bool args_ok = true;
        for (const auto& a : r.args)
            if (!g.nonterminals.count(a)) {
                problems.push_back(where + "undeclared argument '" + a + "'");
                args_ok = false;
            }
        if (!args_ok) continue;
        if (r.outputs.size() != g.nonterminals.at(r.lhs))
            problems.push_back(where + "has " + std::to_string(r.outputs.size()) + " components but dim(" + r.lhs +
                               ") = " + std::to_string(g.nonterminals.at(r.lhs)));
        std::set<std::pair<std::size_t, std::size_t>> used;
        for (std::size_t c = 0; c < r.outputs.size(); ++c) {
            for (std::size_t k = 0; k < r.outputs[c].size(); ++k) {
                const McfToken& t = r.outputs[c][k];
                const std::string at = where + "component " + std::to_string(c + 1) + ", token " + std::to_string(k + 1) + ": ";
                if (!t.variable) {
                    if (!g.terminals.count(t.terminal)) problems.push_back(at + "undeclared terminal '" + t.terminal + "'");
                    continue;
                }
                if (t.arg < 1 || t.arg > r.args.size()) {
                    problems.push_back(at + "argument index out of range in " + t.text());
                    continue;
                }
                if (t.component < 1 || t.component > g.nonterminals.at(r.args[t.arg - 1])) {
                    problems.push_back(at + "component index out of range in " + t.text());
                    continue;
                }
                if (!used.emplace(t.arg, t.component).second)
                    problems.push_back(at + "variable " + t.text() + " used more than once");
            }
        }
    }
    return problems;
}

void check(const Mcfg& g) {
    const auto problems = validate(g);
    if (!problems.empty()) throw InputError(problems.front());
}

bool information_lossless(const Mcfg& g, const McfRule& r) {
    std::size_t expected = 0;
    for (const auto& a : r.args) expected += g.dim(a);
    std::set<std::pair<std::size_t, std::size_t>> used;
    for (const auto& comp : r.outputs)
        for (const auto& t : comp)
            if (t.variable) used.emplace(t.arg, t.component);
    return used.size() == expected;
}

YieldSets yield_enumerate(const Mcfg& g, std::size_t bound) {
    check(g);
    using Mask = unsigned long;
    using Key = std::pair<Label, Mask>;
    auto full = [&](const Label& l) { return (Mask{1} << g.dim(l)) - 1; };

    // Tuples are tracked per projection onto a component subset, so that
    // components discarded by a rule never constrain the bound.
    auto arg_masks = [&](const McfRule& r, Mask m) {
        std::vector<Mask> out(r.args.size(), 0);
        for (std::size_t c = 0; c < r.outputs.size(); ++c) {
            if (!(m >> c & 1)) continue;
            for (const auto& t : r.outputs[c])
                if (t.variable) out[t.arg - 1] |= Mask{1} << (t.component - 1);
        }
        return out;
    };

    std::set<Key> demanded;
    std::vector<Key> pending;
    for (const auto& [l, d] : g.nonterminals) {
        demanded.insert({l, full(l)});
        pending.push_back({l, full(l)});
    }
    while (!pending.empty()) {
        const Key k = pending.back();
        pending.pop_back();
        for (const auto& r : g.rules) {
            if (r.lhs != k.first) continue;
            const auto masks = arg_masks(r, k.second);
            for (std::size_t p = 0; p < r.args.size(); ++p)
                if (demanded.insert({r.args[p], masks[p]}).second) pending.push_back({r.args[p], masks[p]});
        }
    }

    std::map<Key, std::set<StringTuple>> proj;
    auto tuple_length = [](const StringTuple& t) {
        std::size_t n = 0;
        for (const auto& w : t) n += w.size();
        return n;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& key : demanded) {
            const auto& [lhs, mask] = key;
            for (const auto& r : g.rules) {
                if (r.lhs != lhs) continue;
                const auto masks = arg_masks(r, mask);
                std::vector<std::vector<const StringTuple*>> options(r.args.size());
                bool feasible = true;
                for (std::size_t p = 0; p < r.args.size() && feasible; ++p) {
                    auto it = proj.find({r.args[p], masks[p]});
                    if (it == proj.end() || it->second.empty()) {
                        feasible = false;
                        break;
                    }
                    for (const auto& t : it->second) options[p].push_back(&t);
                }
                if (!feasible) continue;
                std::size_t terminals = 0;
                for (std::size_t c = 0; c < r.outputs.size(); ++c)
                    if (mask >> c & 1)
                        for (const auto& t : r.outputs[c])
                            if (!t.variable) ++terminals;
                if (terminals > bound) continue;

                std::vector<const StringTuple*> chosen(r.args.size());
                std::function<void(std::size_t, std::size_t)> go = [&](std::size_t p, std::size_t length) {
                    if (p == r.args.size()) {
                        StringTuple out(r.outputs.size());
                        for (std::size_t c = 0; c < r.outputs.size(); ++c) {
                            if (!(mask >> c & 1)) continue;
                            for (const auto& t : r.outputs[c]) {
                                if (!t.variable) {
                                    out[c].push_back(t.terminal);
                                    continue;
                                }
                                const Word& w = (*chosen[t.arg - 1])[t.component - 1];
                                out[c].insert(out[c].end(), w.begin(), w.end());
                            }
                        }
                        if (proj[key].insert(std::move(out)).second) changed = true;
                        return;
                    }
                    for (const StringTuple* t : options[p]) {
                        const std::size_t n = length + tuple_length(*t);
                        if (n > bound) continue;
                        chosen[p] = t;
                        go(p + 1, n);
                    }
                };
                go(0, terminals);
            }
        }
    }

    YieldSets out;
    for (const auto& [l, d] : g.nonterminals) out[l] = proj[{l, full(l)}];
    return out;
}

std::set<Word> mcfg_language(const Mcfg& g, std::size_t bound) {
    std::set<Word> words;
    const YieldSets yields = yield_enumerate(g, bound);
    for (const auto& t : yields.at(g.start)) words.insert(t.front());
    return words;
}

std::set<Label> productive_nonterminals(const Mcfg& g) {
    std::set<Label> live;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            if (live.count(r.lhs)) continue;
            bool ok = true;
            for (const auto& a : r.args) ok = ok && live.count(a);
            if (ok) {
                live.insert(r.lhs);
                changed = true;
            }
        }
    }
    return live;
}

bool language_empty(const Mcfg& g) { return !productive_nonterminals(g).count(g.start); }

Grammar lcfrs_to_hrg(const Mcfg& g, std::size_t q) {
    if (q == 0) throw InputError("lcfrs_to_hrg needs q >= 1");
    check(g);
    for (std::size_t i = 0; i < g.rules.size(); ++i)
        if (!information_lossless(g, g.rules[i]))
            throw ContractViolation("rule " + std::to_string(i) + " is not information-lossless");

    Grammar out;
    for (const auto& [l, d] : g.nonterminals) out.nonterminals[l] = numeric_type(2 * d * q);
    for (const auto& t : g.terminals) out.terminals[t] = numeric_type(2 * q);
    out.start = g.start;

    auto sel = [](std::size_t n) { return std::to_string(n); };
    for (const auto& r : g.rules) {
        Hypergraph h;
        std::vector<Attachment> arg_att(r.args.size());
        for (std::size_t i = 1; i <= r.outputs.size(); ++i) {
            const auto& comp = r.outputs[i - 1];
            auto node = [&](std::size_t pos, std::size_t j) {
                return "n" + std::to_string(i) + "_" + std::to_string(pos) + "_" + std::to_string(j);
            };
            for (std::size_t pos = 0; pos <= comp.size(); ++pos)
                for (std::size_t j = 1; j <= q; ++j) h.add_node(node(pos, j));
            const std::size_t base = (i - 1) * 2 * q;
            for (std::size_t j = 1; j <= q; ++j) {
                h.ext[sel(base + j)] = node(0, j);
                h.ext[sel(base + q + j)] = node(comp.size(), j);
            }
            for (std::size_t k = 1; k <= comp.size(); ++k) {
                const McfToken& t = comp[k - 1];
                if (!t.variable) {
                    Attachment att;
                    for (std::size_t j = 1; j <= q; ++j) {
                        att[sel(j)] = node(k - 1, j);
                        att[sel(q + j)] = node(k, j);
                    }
                    h.add_edge("t" + std::to_string(i) + "_" + std::to_string(k), t.terminal, std::move(att));
                    continue;
                }
                const std::size_t at = (t.component - 1) * 2 * q;
                for (std::size_t j = 1; j <= q; ++j) {
                    arg_att[t.arg - 1][sel(at + j)] = node(k - 1, j);
                    arg_att[t.arg - 1][sel(at + q + j)] = node(k, j);
                }
            }
        }
        for (std::size_t p = 0; p < r.args.size(); ++p)
            h.add_edge("x" + std::to_string(p + 1), r.args[p], std::move(arg_att[p]));
        out.productions.push_back({r.lhs, std::move(h)});
    }
    check(out);
    return out;
}

Mcfg mcfg_mark(const Mcfg& g) {
    check(g);
    Mcfg out;
    for (const auto& [l, d] : g.nonterminals) out.nonterminals[l] = d + 1;
    out.terminals = g.terminals;
    out.terminals.insert("b");
    Label start = g.start + "~";
    while (out.nonterminals.count(start) || out.terminals.count(start)) start += "~";
    out.nonterminals[start] = 1;
    out.start = start;

    for (const auto& r : g.rules) {
        McfRule m = r;
        std::set<std::pair<std::size_t, std::size_t>> used;
        for (const auto& comp : r.outputs)
            for (const auto& t : comp)
                if (t.variable) used.emplace(t.arg, t.component);
        std::vector<McfToken> collector;
        for (std::size_t p = 1; p <= r.args.size(); ++p) collector.push_back(McfToken::var(p, g.dim(r.args[p - 1]) + 1));
        for (std::size_t p = 1; p <= r.args.size(); ++p)
            for (std::size_t c = 1; c <= g.dim(r.args[p - 1]); ++c)
                if (!used.count({p, c})) collector.push_back(McfToken::var(p, c));
        m.outputs.push_back(std::move(collector));
        out.rules.push_back(std::move(m));
    }
    out.rules.push_back({start, {g.start}, {{McfToken::var(1, 1), McfToken::term("b"), McfToken::var(1, 2)}}});
    return out;
}

}  // namespace hrg
