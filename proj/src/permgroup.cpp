#include "hrg/permgroup.hpp"

#include <algorithm>
#include <deque>

namespace hrg {

Transformation::Transformation(std::vector<int> zero_based) : image_(std::move(zero_based)) {
    const int n = static_cast<int>(image_.size());
    for (int v : image_)
        if (v < 0 || v >= n) throw InputError("transformation image out of range");
}

Transformation Transformation::from_one_based(const std::vector<int>& image) {
    std::vector<int> z;
    z.reserve(image.size());
    for (int v : image) z.push_back(v - 1);
    return Transformation(std::move(z));
}

Transformation Transformation::identity(std::size_t n) {
    std::vector<int> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = static_cast<int>(i);
    return Transformation(std::move(z));
}

std::vector<int> Transformation::one_based() const {
    std::vector<int> out;
    for (int v : image_) out.push_back(v + 1);
    return out;
}

bool Transformation::is_bijective() const {
    std::vector<bool> hit(image_.size(), false);
    for (int v : image_) {
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool Transformation::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != static_cast<int>(i)) return false;
    return true;
}

Transformation Transformation::inverse() const {
    if (!is_bijective()) throw ContractViolation("inverse of a non-bijective transformation");
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
    return Transformation(std::move(inv));
}

std::string Transformation::to_cycle_string() const {
    if (!is_bijective()) {
        std::string s = "[";
        for (std::size_t i = 0; i < image_.size(); ++i) s += (i ? " " : "") + std::to_string(image_[i] + 1);
        return s + "]";
    }
    std::vector<bool> seen(image_.size(), false);
    std::string out;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i] || image_[i] == static_cast<int>(i)) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            out += (first ? "" : " ") + std::to_string(j + 1);
            first = false;
            j = static_cast<std::size_t>(image_[j]);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Transformation compose(const Transformation& f, const Transformation& g) {
    if (f.size() != g.size())
        throw InputError("compose: sizes " + std::to_string(f.size()) + " and " + std::to_string(g.size()) + " differ");
    std::vector<int> out(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) out[j] = f(g(static_cast<int>(j)));
    return Transformation(std::move(out));
}

std::set<Transformation> monoid_closure(const std::vector<Transformation>& gens, std::size_t n) {
    for (const auto& f : gens)
        if (f.size() != n) throw InputError("monoid_closure: generator of wrong size");
    std::set<Transformation> seen{Transformation::identity(n)};
    std::deque<Transformation> queue{Transformation::identity(n)};
    while (!queue.empty()) {
        Transformation x = queue.front();
        queue.pop_front();
        for (const auto& f : gens) {
            Transformation y = compose(x, f);
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return seen;
}

StabilizerChain::StabilizerChain(const std::vector<Permutation>& gens, std::size_t n) : n_(n), levels_(n) {
    for (const auto& g : gens) {
        if (g.size() != n) throw InputError("group generator of wrong size");
        if (!g.is_bijective()) throw InputError("group generator " + g.to_cycle_string() + " is not a permutation");
        if (!g.is_identity() && n_ > 0) levels_[0].generators.push_back(g);
    }
    for (std::size_t i = 0; i < n_; ++i) rebuild_orbit(i);
    // Schreier generators of every level must sift through the levels below it.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n_ && !changed; ++i) {
            const auto transversal = levels_[i].transversal;
            const auto generators = levels_[i].generators;
            for (const auto& [p, u] : transversal) {
                for (const auto& s : generators) {
                    const Permutation su = compose(s, u);
                    const Permutation& back = transversal.at(su(static_cast<int>(i)));
                    const Permutation h = compose(back.inverse(), su);
                    auto [stop, residue] = sift(h, i + 1);
                    if (stop == n_) continue;
                    for (std::size_t k = i + 1; k <= stop; ++k) {
                        levels_[k].generators.push_back(residue);
                        rebuild_orbit(k);
                    }
                    changed = true;
                    break;
                }
                if (changed) break;
            }
        }
    }
}

void StabilizerChain::rebuild_orbit(std::size_t i) {
    Level& level = levels_[i];
    level.transversal.clear();
    const int base = static_cast<int>(i);
    level.transversal.emplace(base, Permutation::identity(n_));
    std::deque<int> queue{base};
    while (!queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        const Permutation u = level.transversal.at(p);
        for (const auto& s : level.generators) {
            int q = s(p);
            if (!level.transversal.count(q)) {
                level.transversal.emplace(q, compose(s, u));
                queue.push_back(q);
            }
        }
    }
}

std::pair<std::size_t, Permutation> StabilizerChain::sift(Permutation p, std::size_t from) const {
    for (std::size_t i = from; i < n_; ++i) {
        const int image = p(static_cast<int>(i));
        auto it = levels_[i].transversal.find(image);
        if (it == levels_[i].transversal.end()) return {i, p};
        p = compose(it->second.inverse(), p);
    }
    return {n_, p};
}

bool StabilizerChain::contains(const Permutation& p) const {
    if (p.size() != n_) throw InputError("membership query of wrong size");
    if (!p.is_bijective()) throw InputError("membership query " + p.to_cycle_string() + " is not a permutation");
    return sift(p, 0).first == n_;
}

unsigned long long StabilizerChain::order() const {
    unsigned long long o = 1;
    for (const auto& l : levels_) o *= l.transversal.size();
    return o;
}

bool group_member(const std::vector<Permutation>& gens, const Permutation& sigma) {
    return StabilizerChain(gens, sigma.size()).contains(sigma);
}

void PermNFA::check() const {
    std::set<std::string> known(states.begin(), states.end());
    for (const auto& s : initial)
        if (!known.count(s)) throw InputError("initial state '" + s + "' is not declared");
    for (const auto& s : final)
        if (!known.count(s)) throw InputError("final state '" + s + "' is not declared");
    for (const auto& t : transitions) {
        if (!known.count(t.from) || !known.count(t.to))
            throw InputError("transition " + t.from + " -> " + t.to + " uses an undeclared state");
        if (t.label.size() != n) throw InputError("transition label of wrong size");
        if (!t.label.is_bijective()) throw InputError("transition label " + t.label.to_cycle_string() + " is not a permutation");
    }
}

bool PermNFA::accepts(const std::vector<Permutation>& word) const {
    std::set<std::string> current = initial;
    for (const auto& sigma : word) {
        std::set<std::string> next;
        for (const auto& t : transitions)
            if (current.count(t.from) && t.label == sigma) next.insert(t.to);
        current = std::move(next);
    }
    for (const auto& s : current)
        if (final.count(s)) return true;
    return false;
}

Permutation word_product(const std::vector<Permutation>& word, std::size_t n) {
    Permutation p = Permutation::identity(n);
    for (const auto& s : word) p = compose(p, s);
    return p;
}

std::map<std::pair<std::string, Permutation>, std::vector<Permutation>> reachable_products(
    const PermNFA& a, const std::set<std::string>& from) {
    using Key = std::pair<std::string, Permutation>;
    std::map<Key, std::vector<Permutation>> witness;
    std::deque<Key> queue;
    for (const auto& s : from) {
        Key k{s, Permutation::identity(a.n)};
        if (witness.emplace(k, std::vector<Permutation>{}).second) queue.push_back(k);
    }
    while (!queue.empty()) {
        const Key k = queue.front();
        queue.pop_front();
        for (const auto& t : a.transitions) {
            if (t.from != k.first) continue;
            Key next{t.to, compose(k.second, t.label)};
            if (witness.count(next)) continue;
            auto w = witness.at(k);
            w.push_back(t.label);
            witness.emplace(next, std::move(w));
            queue.push_back(next);
        }
    }
    return witness;
}

std::optional<std::vector<Permutation>> ratsym(const PermNFA& a, const Permutation& sigma) {
    a.check();
    if (sigma.size() != a.n) throw InputError("ratsym: target has the wrong size");
    const auto reach = reachable_products(a, a.initial);
    const std::vector<Permutation>* best = nullptr;
    for (const auto& f : a.final) {
        auto it = reach.find({f, sigma});
        if (it != reach.end() && (!best || it->second.size() < best->size())) best = &it->second;
    }
    if (!best) return std::nullopt;
    return *best;
}

Hypergraph function_graph(const Label& label, const Transformation& f) {
    Hypergraph h;
    Attachment att;
    for (std::size_t j = 1; j <= f.size(); ++j) {
        const std::string s = std::to_string(j);
        h.add_node(s);
        h.ext[s] = s;
        att[s] = std::to_string(f(static_cast<int>(j - 1)) + 1);
    }
    h.add_edge("e", label, std::move(att));
    return h;
}

}  // namespace hrg
