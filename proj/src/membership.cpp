#include "hrg/membership.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "hrg/normalize.hpp"

namespace hrg {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::no: return "no";
        case Verdict::yes: return "yes";
        case Verdict::unknown: return "unknown";
    }
    return "";
}

bool is_repetition_free(const Grammar& g) {
    return std::all_of(g.productions.begin(), g.productions.end(),
                       [](const Production& p) { return is_repetition_free(p.rhs); });
}

namespace {

bool uses_only_terminals(const Grammar& g, const Hypergraph& h) {
    for (const auto& [id, e] : h.edges) {
        auto it = g.terminals.find(e.label);
        if (it == g.terminals.end() || it->second != e.type()) return false;
    }
    return true;
}

std::size_t terminal_edge_count(const Grammar& g, const Hypergraph& h) {
    std::size_t n = 0;
    for (const auto& [id, e] : h.edges)
        if (!g.is_nonterminal(e.label)) ++n;
    return n;
}

std::map<Label, std::size_t> label_counts(const Hypergraph& h) {
    std::map<Label, std::size_t> n;
    for (const auto& [id, e] : h.edges) ++n[e.label];
    return n;
}

// Terminal edges are never removed, so a form carrying more edges of some
// terminal label than the target can be dropped.
bool too_many_terminals(const Grammar& g, const Hypergraph& f, const std::map<Label, std::size_t>& target) {
    std::map<Label, std::size_t> n;
    for (const auto& [id, e] : f.edges) {
        if (g.is_nonterminal(e.label)) continue;
        auto it = target.find(e.label);
        if (it == target.end() || ++n[e.label] > it->second) return true;
    }
    return false;
}

// Nodes that are neither external nor attached to anything; they survive every
// later derivation step unchanged.
std::size_t isolated_internal(const Hypergraph& h) {
    std::set<NodeId> touched;
    for (const auto& [s, v] : h.ext) touched.insert(v);
    for (const auto& [id, e] : h.edges)
        for (const auto& [s, v] : e.att) touched.insert(v);
    return h.nodes.size() - touched.size();
}

// Least value of (terminal edges + isolated internal nodes) over terminal graphs
// derivable from each nonterminal; absent for unproductive ones.
std::map<Label, std::size_t> min_weight(const Grammar& g) {
    std::map<Label, std::size_t> w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            std::size_t total = terminal_edge_count(g, p.rhs) + isolated_internal(p.rhs);
            bool ok = true;
            for (const auto& [id, e] : p.rhs.edges) {
                if (!g.is_nonterminal(e.label)) continue;
                auto it = w.find(e.label);
                if (it == w.end()) {
                    ok = false;
                    break;
                }
                total += it->second;
            }
            if (!ok) continue;
            auto it = w.find(p.lhs);
            if (it == w.end() || total < it->second) {
                w[p.lhs] = total;
                changed = true;
            }
        }
    }
    return w;
}

// Terminal labels that can occur in some graph derived from each nonterminal
// (over-approximated: productivity is ignored).
std::map<Label, std::set<Label>> producible_terminals(const Grammar& g) {
    std::map<Label, std::set<Label>> out;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            auto& mine = out[p.lhs];
            const std::size_t before = mine.size();
            for (const auto& [id, e] : p.rhs.edges) {
                if (!g.is_nonterminal(e.label)) {
                    mine.insert(e.label);
                } else if (e.label != p.lhs) {
                    auto it = out.find(e.label);
                    if (it != out.end()) mine.insert(it->second.begin(), it->second.end());
                }
            }
            changed |= mine.size() != before;
        }
    }
    return out;
}

// The target still needs an edge of some terminal label that neither the form
// holds enough of nor any of its nonterminal edges can produce.
bool short_of_terminals(const Grammar& g, const Hypergraph& f, const std::map<Label, std::size_t>& target,
                        const std::map<Label, std::set<Label>>& producible) {
    std::map<Label, std::size_t> have;
    std::set<Label> reachable;
    for (const auto& [id, e] : f.edges) {
        if (!g.is_nonterminal(e.label)) {
            ++have[e.label];
        } else if (auto it = producible.find(e.label); it != producible.end()) {
            reachable.insert(it->second.begin(), it->second.end());
        }
    }
    for (const auto& [label, need] : target)
        if (have[label] < need && !reachable.count(label)) return true;
    return false;
}

// Terminal-count vectors (capped at the target's counts) each nonterminal can
// derive.  A form is hopeless when its own counts plus one vector per
// nonterminal edge cannot add up to exactly the target's counts.  Disabled when
// the vector space gets large; the other prunes still apply then.
class CountReach {
public:
    CountReach(const Grammar& g, const std::map<Label, std::size_t>& target) : g_(g) {
        std::size_t size = 1;
        for (const auto& [label, n] : target) {
            labels_.push_back(label);
            radix_.push_back(n + 1);
            size *= n + 1;
            if (size > max_space) return;
        }
        size_ = size;
        digits_.resize(size_ * labels_.size());
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t k = 0, rest = i; k < labels_.size(); rest /= radix_[k], ++k)
                digits_[i * labels_.size() + k] = rest % radix_[k];
        if (auto goal = encode(target)) goal_ = *goal;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& p : g.productions) {
                auto own = encode_terminals(p.rhs);
                if (!own) continue;
                std::vector<char> acc(size_, 0);
                acc[*own] = 1;
                for (const auto& [id, e] : p.rhs.edges) {
                    if (!g.is_nonterminal(e.label)) continue;
                    auto it = reach_.find(e.label);
                    acc = it == reach_.end() ? std::vector<char>(size_, 0) : add(acc, it->second);
                }
                auto& mine = reach_.try_emplace(p.lhs, std::vector<char>(size_, 0)).first->second;
                for (std::size_t i = 0; i < size_; ++i)
                    if (acc[i] && !mine[i]) mine[i] = changed = true;
            }
        }
        enabled_ = true;
    }

    // Memoized on the form's own counts and its multiset of nonterminal labels.
    bool hopeless(const Hypergraph& f) const {
        if (!enabled_) return false;
        auto own = encode_terminals(f);
        if (!own) return true;
        std::vector<Label> pending;
        for (const auto& [id, e] : f.edges)
            if (g_.is_nonterminal(e.label)) pending.push_back(e.label);
        std::sort(pending.begin(), pending.end());
        std::string key = std::to_string(*own);
        for (const auto& l : pending) key += '\0' + l;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<char> acc(size_, 0);
        acc[*own] = 1;
        bool dead = false;
        for (const auto& l : pending) {
            auto it = reach_.find(l);
            if (it == reach_.end()) {
                dead = true;
                break;
            }
            acc = add(acc, it->second);
        }
        dead = dead || !acc[goal_];
        memo_.emplace(std::move(key), dead);
        return dead;
    }

private:
    static constexpr std::size_t max_space = 4096;

    std::optional<std::size_t> encode(const std::map<Label, std::size_t>& counts) const {
        std::size_t code = 0;
        for (std::size_t i = labels_.size(); i-- > 0;) {
            auto it = counts.find(labels_[i]);
            const std::size_t n = it == counts.end() ? 0 : it->second;
            if (n >= radix_[i]) return std::nullopt;
            code = code * radix_[i] + n;
        }
        for (const auto& [label, n] : counts)
            if (n > 0 && std::find(labels_.begin(), labels_.end(), label) == labels_.end()) return std::nullopt;
        return code;
    }

    std::optional<std::size_t> encode_terminals(const Hypergraph& h) const {
        std::map<Label, std::size_t> counts;
        for (const auto& [id, e] : h.edges)
            if (!g_.is_nonterminal(e.label)) ++counts[e.label];
        return encode(counts);
    }

    // Capped sumset; sums overflowing any coordinate are dropped.
    std::vector<char> add(const std::vector<char>& a, const std::vector<char>& b) const {
        std::vector<std::size_t> right;
        for (std::size_t j = 0; j < size_; ++j)
            if (b[j]) right.push_back(j);
        std::vector<char> out(size_, 0);
        const std::size_t width = labels_.size();
        for (std::size_t i = 0; i < size_; ++i) {
            if (!a[i]) continue;
            for (std::size_t j : right) {
                std::size_t code = 0, scale = 1;
                bool fits = true;
                for (std::size_t k = 0; k < width && fits; ++k) {
                    const std::size_t d = digits_[i * width + k] + digits_[j * width + k];
                    fits = d < radix_[k];
                    code += d * scale;
                    scale *= radix_[k];
                }
                if (fits) out[code] = 1;
            }
        }
        return out;
    }

    const Grammar& g_;
    std::vector<Label> labels_;
    std::vector<std::size_t> radix_;
    std::size_t size_ = 0;
    std::vector<std::size_t> digits_;  // digit k of code i at i * labels + k
    std::size_t goal_ = 0;
    std::map<Label, std::vector<char>> reach_;
    mutable std::unordered_map<std::string, bool> memo_;
    bool enabled_ = false;
};

}  // namespace

std::function<bool(const Hypergraph&)> terminal_budget(const Grammar& g, const Hypergraph& target) {
    return [&g, wanted = label_counts(target)](const Hypergraph& f) { return !too_many_terminals(g, f, wanted); };
}

namespace {

Verdict bruteforce_at(const Grammar& g, const Hypergraph& h, const BruteForceBounds& bounds) {
    std::size_t widest = 0;
    for (const auto& p : g.productions) widest = std::max(widest, p.rhs.nodes.size());
    const std::size_t node_slack = bounds.node_slack.value_or(2 * order(g) + widest);
    const std::size_t max_edges = h.edges.size() + bounds.edge_slack;
    const std::size_t max_nodes = h.nodes.size() + node_slack;

    const auto least = min_terminal_edges(g);
    const auto keeps_nodes = non_merging_nonterminals(g);
    const auto wanted = label_counts(h);
    const auto producible = producible_terminals(g);
    const CountReach counts(g, wanted);
    // Silent prunes are sound: such a form never derives H.
    auto hopeless = [&](const Hypergraph& f) {
        if (too_many_terminals(g, f, wanted) || short_of_terminals(g, f, wanted, producible) ||
            counts.hopeless(f))
            return true;
        std::size_t lower = 0;
        bool merging = false;
        for (const auto& [id, e] : f.edges) {
            if (!g.is_nonterminal(e.label)) {
                ++lower;
                continue;
            }
            auto it = least.find(e.label);
            if (it == least.end()) return true;
            lower += it->second;
            if (!keeps_nodes.count(e.label)) merging = true;
        }
        return lower > h.edges.size() || (!merging && f.nodes.size() > h.nodes.size());
    };

    const std::string goal = canonical_key(h);
    std::unordered_set<std::string> seen;
    std::vector<Hypergraph> frontier{start_graph(g)};
    seen.insert(canonical_key(frontier.front()));
    if (*seen.begin() == goal) return Verdict::yes;
    bool cut = false;
    for (std::size_t depth = 0; !frontier.empty(); ++depth) {
        std::vector<Hypergraph> next;
        for (const auto& form : frontier) {
            const auto nts = nonterminal_edges(g, form);
            if (nts.empty()) continue;
            if (depth == bounds.max_steps) {
                cut = true;
                continue;
            }
            const EdgeId& e = nts.front();
            const Label& lab = form.edges.at(e).label;
            for (const auto& p : g.productions) {
                if (p.lhs != lab) continue;
                Hypergraph child = derive_step(form, e, p);
                if (hopeless(child)) continue;
                if (child.edges.size() > max_edges || child.nodes.size() > max_nodes) {
                    cut = true;
                    continue;
                }
                std::string key = canonical_key(child);
                if (key == goal) return Verdict::yes;
                if (seen.insert(std::move(key)).second) next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return cut ? Verdict::unknown : Verdict::no;
}

}  // namespace

// Deepens the edge slack: yes and no are final at any slack (no means nothing
// was cut), and small slacks find most members much faster.
Verdict member_bruteforce(const Grammar& g, const Hypergraph& h, const BruteForceBounds& bounds) {
    check(g);
    if (!uses_only_terminals(g, h)) return Verdict::no;
    BruteForceBounds level = bounds;
    for (std::size_t slack = std::min<std::size_t>(2, bounds.edge_slack);; slack = std::min(2 * slack, bounds.edge_slack)) {
        level.edge_slack = slack;
        const Verdict v = bruteforce_at(g, h, level);
        if (v != Verdict::unknown || slack == bounds.edge_slack) return v;
    }
}

bool member_exptime(const Grammar& g, const Hypergraph& h) {
    check(g);
    if (!uses_only_terminals(g, h)) return false;
    const bool repetition_free_target = is_repetition_free(h);
    if (!repetition_free_target && is_repetition_free(g)) return false;

    const std::vector<NormalizeStep> steps =
        repetition_free_target
            ? std::vector<NormalizeStep>{NormalizeStep::binarize, NormalizeStep::repfree, NormalizeStep::noempty,
                                         NormalizeStep::nochain}
            : std::vector<NormalizeStep>{NormalizeStep::binarize, NormalizeStep::noempty, NormalizeStep::nochain};
    const Grammar normal = normalize(g, steps);
    const auto weight = min_weight(normal);
    const std::size_t budget = h.edges.size() + isolated_internal(h);
    const std::size_t iso_target = isolated_internal(h);
    const auto wanted = label_counts(h);

    // With no empty or unit productions left, every nonterminal edge still owes
    // at least one terminal edge or isolated node, so these bounds make the
    // search space finite.
    auto admit = [&](const Hypergraph& f) {
        const std::size_t iso = isolated_internal(f);
        if (iso > iso_target || too_many_terminals(normal, f, wanted)) return false;
        std::size_t terminal = 0;
        std::size_t w = iso;
        for (const auto& [id, e] : f.edges) {
            if (!normal.is_nonterminal(e.label)) {
                ++terminal;
                ++w;
                continue;
            }
            auto it = weight.find(e.label);
            if (it == weight.end()) return false;
            w += it->second;
        }
        if (terminal > h.edges.size() || w > budget) return false;
        if (repetition_free_target && f.nodes.size() > h.nodes.size()) return false;
        return true;
    };
    return find_derivation(normal, h, admit, std::numeric_limits<std::size_t>::max()).has_value();
}

Grammar np_preprocess(const Grammar& g) {
    Grammar p = eliminate_empty(binarize(g));
    for (auto& [label, type] : p.nonterminals) {
        if (label == p.start) continue;
        std::map<Selector, Selector> rename;
        for (const auto& s : type) rename.emplace(s, std::to_string(rename.size() + 1));
        auto remap = [&](const Attachment& a) {
            Attachment out;
            for (const auto& [s, v] : a) out[rename.at(s)] = v;
            return out;
        };
        for (auto& prod : p.productions) {
            if (prod.lhs == label) prod.rhs.ext = remap(prod.rhs.ext);
            for (auto& [id, e] : prod.rhs.edges)
                if (e.label == label) e.att = remap(e.att);
        }
        type = numeric_type(type.size());
    }
    return p;
}

std::size_t certificate_step_bound(const Grammar& preprocessed, const Hypergraph& h) {
    return (4 * order(preprocessed) + 3) * (h.nodes.size() + h.edges.size());
}

namespace {

struct Permutative {
    Label sink;
    Permutation sigma;
};

std::optional<Permutative> as_permutative(const Grammar& g, const Production& p) {
    if (!is_chain_production(p) || !g.is_nonterminal(p.lhs)) return std::nullopt;
    const Edge& e = p.rhs.edges.begin()->second;
    if (!g.is_nonterminal(e.label)) return std::nullopt;
    const Type& t = g.type_of(p.lhs);
    const Type numeric = numeric_type(t.size());
    if (t != numeric || g.type_of(e.label) != numeric) return std::nullopt;
    std::map<NodeId, int> position;
    for (const auto& [s, v] : p.rhs.ext)
        if (!position.emplace(v, std::stoi(s) - 1).second) return std::nullopt;
    std::vector<int> image(t.size());
    std::set<NodeId> hit;
    for (const auto& [s, v] : e.att) {
        if (!hit.insert(v).second) return std::nullopt;
        image[static_cast<std::size_t>(std::stoi(s) - 1)] = position.at(v);
    }
    if (hit.size() != t.size()) return std::nullopt;
    return Permutative{e.label, Permutation(std::move(image))};
}

PermNFA automaton_of_size(const Grammar& g, std::size_t t) {
    PermNFA a;
    a.n = t;
    const Type numeric = numeric_type(t);
    for (const auto& [l, type] : g.nonterminals)
        if (type == numeric) a.states.push_back(l);
    for (const auto& p : g.productions) {
        auto perm = as_permutative(g, p);
        if (perm && perm->sigma.size() == t) a.transitions.push_back({p.lhs, perm->sigma, perm->sink});
    }
    return a;
}

}  // namespace

PermNFA permutative_automaton(const Grammar& preprocessed, const Label& from, const Label& to) {
    PermNFA a = automaton_of_size(preprocessed, preprocessed.type_of(from).size());
    a.initial = {from};
    a.final = {to};
    return a;
}

std::optional<MembershipCertificate> member_np(const Grammar& g, const Hypergraph& h) {
    check(g);
    if (!is_repetition_free(g)) throw ContractViolation("member_np requires a repetition-free grammar");
    if (!uses_only_terminals(g, h) || !is_repetition_free(h)) return std::nullopt;

    const Grammar pre = np_preprocess(g);
    const auto productive = productive_nonterminals(pre);
    std::vector<bool> is_perm(pre.productions.size());
    for (std::size_t i = 0; i < pre.productions.size(); ++i)
        is_perm[i] = as_permutative(pre, pre.productions[i]).has_value();

    std::map<std::size_t, PermNFA> automata;
    std::map<Label, std::map<std::pair<std::string, Permutation>, std::vector<Permutation>>> reach;
    auto blocks_from = [&](const Label& x) -> const auto& {
        auto it = reach.find(x);
        if (it != reach.end()) return it->second;
        const std::size_t t = pre.type_of(x).size();
        auto at = automata.find(t);
        if (at == automata.end()) at = automata.emplace(t, automaton_of_size(pre, t)).first;
        bool has_numeric_type = pre.type_of(x) == numeric_type(t);
        auto products = has_numeric_type ? reachable_products(at->second, {x})
                                         : std::map<std::pair<std::string, Permutation>, std::vector<Permutation>>{};
        return reach.emplace(x, std::move(products)).first->second;
    };

    const std::size_t vh = h.nodes.size();
    const std::size_t eh = h.edges.size();
    const auto wanted = label_counts(h);
    auto admit = [&](const Hypergraph& f) {
        if (f.nodes.size() > vh || too_many_terminals(pre, f, wanted)) return false;
        std::size_t terminal = 0;
        for (const auto& [id, e] : f.edges) {
            if (!pre.is_nonterminal(e.label)) {
                ++terminal;
            } else if (!productive.count(e.label)) {
                return false;
            }
        }
        // every nonterminal edge still owes an edge or a fresh node
        return terminal <= eh && f.edges.size() + f.nodes.size() <= eh + vh;
    };

    struct State {
        Hypergraph form;
        std::optional<EdgeId> pending;  // edge just produced by a block
        std::size_t parent;
        CertificateStep step;
        std::size_t cost;
        std::string key;
    };
    auto key_of = [](const Hypergraph& f, const std::optional<EdgeId>& pending) {
        if (!pending) return canonical_key(f);
        Hypergraph marked = f;
        marked.edges.at(*pending).label += "\x1f*";
        return canonical_key(marked);
    };

    const std::string goal = canonical_key(h);
    std::vector<State> states;
    std::unordered_map<std::string, std::size_t> best;
    std::deque<std::size_t> queue;
    {
        Hypergraph s = start_graph(pre);
        std::string k = key_of(s, std::nullopt);
        best.emplace(k, 0);
        states.push_back({std::move(s), std::nullopt, 0, {}, 0, std::move(k)});
        queue.push_back(0);
    }
    auto offer = [&](State st, bool front) {
        auto it = best.find(st.key);
        if (it != best.end() && it->second <= st.cost) return;
        best[st.key] = st.cost;
        states.push_back(std::move(st));
        if (front) queue.push_front(states.size() - 1);
        else queue.push_back(states.size() - 1);
    };

    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        if (best.at(states[i].key) < states[i].cost) continue;
        const auto nts = nonterminal_edges(pre, states[i].form);
        if (nts.empty()) {
            if (states[i].key != goal) continue;
            MembershipCertificate cert;
            for (std::size_t k = i; k != 0; k = states[k].parent) cert.steps.push_back(states[k].step);
            std::reverse(cert.steps.begin(), cert.steps.end());
            return cert;
        }
        const Hypergraph form = states[i].form;
        const std::size_t cost = states[i].cost;
        const EdgeId e = states[i].pending.value_or(nts.front());
        const Label x = form.edges.at(e).label;

        for (std::size_t pi = 0; pi < pre.productions.size(); ++pi) {
            if (is_perm[pi] || pre.productions[pi].lhs != x) continue;
            Hypergraph child = derive_step(form, e, pre.productions[pi]);
            if (!admit(child)) continue;
            CertificateStep step;
            step.kind = CertificateStep::Kind::plain;
            step.edge = e;
            step.production = pi;
            std::string k = key_of(child, std::nullopt);
            offer({std::move(child), std::nullopt, i, std::move(step), cost + 1, std::move(k)}, false);
        }
        if (states[i].pending) continue;
        for (const auto& [target, word] : blocks_from(x)) {
            const auto& [y, sigma] = target;
            if (word.empty() || (y == x && sigma.is_identity())) continue;
            Hypergraph child = replace(form, e, function_graph(y, sigma));
            if (!admit(child)) continue;
            EdgeId fresh;
            for (const auto& [id, edge] : child.edges)
                if (!form.edges.count(id)) fresh = id;
            CertificateStep step;
            step.kind = CertificateStep::Kind::block;
            step.edge = e;
            step.source = x;
            step.sink = y;
            step.sigma = sigma;
            step.word = word;
            std::string k = key_of(child, fresh);
            offer({std::move(child), fresh, i, std::move(step), cost, std::move(k)}, true);
        }
    }
    return std::nullopt;
}

CertificateCheck verify_certificate(const Grammar& g, const Hypergraph& h, const MembershipCertificate& cert) {
    Grammar pre;
    try {
        check(g);
        pre = np_preprocess(g);
    } catch (const std::exception& ex) {
        return {false, 0, std::string("grammar rejected: ") + ex.what()};
    }
    Hypergraph form = start_graph(pre);
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const CertificateStep& s = cert.steps[i];
        auto fail = [&](const std::string& why) { return CertificateCheck{false, i, why}; };
        auto it = form.edges.find(s.edge);
        if (it == form.edges.end()) return fail("no edge '" + s.edge + "'");
        if (s.kind == CertificateStep::Kind::plain) {
            if (s.production >= pre.productions.size()) return fail("production index out of range");
            if (pre.productions[s.production].lhs != it->second.label) return fail("production does not match edge label");
            form = derive_step(form, s.edge, pre.productions[s.production]);
            continue;
        }
        if (it->second.label != s.source) return fail("block source does not match edge label");
        if (!pre.is_nonterminal(s.source) || !pre.is_nonterminal(s.sink)) return fail("block endpoints must be nonterminals");
        const std::size_t t = pre.type_of(s.source).size();
        if (pre.type_of(s.source) != numeric_type(t) || pre.type_of(s.sink) != numeric_type(t))
            return fail("block endpoints have incompatible types");
        if (s.word.empty()) return fail("empty witness word");
        if (s.sigma.size() != t || !s.sigma.is_bijective()) return fail("sigma is not a permutation of the right size");
        for (const auto& w : s.word)
            if (w.size() != t || !w.is_bijective()) return fail("witness letter is not a permutation of the right size");
        if (!permutative_automaton(pre, s.source, s.sink).accepts(s.word)) return fail("witness word is not accepted");
        if (word_product(s.word, t) != s.sigma) return fail("witness word does not multiply to sigma");
        form = replace(form, s.edge, function_graph(s.sink, s.sigma));
    }
    if (!is_terminal_graph(pre, form) || !isomorphic(form, h))
        return {false, cert.steps.size(), "derived graph is not isomorphic to the target"};
    return {true, cert.steps.size(), ""};
}

}  // namespace hrg
