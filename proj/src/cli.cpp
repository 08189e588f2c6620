#include "hrg/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "hrg/io.hpp"
#include "hrg/membership.hpp"
#include "hrg/normalize.hpp"
#include "hrg/reductions.hpp"
#include "hrg/stringgen.hpp"

namespace hrg {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::logic_error&) {
        throw InputError("malformed " + what + " '" + s + "'");
    }
}

// "aba" is read letter by letter; "a1 b a2" is split at spaces.
Word word_from_argument(const std::string& s) {
    if (s.find(' ') == std::string::npos) return chars(s);
    return split(s, ' ');
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) out << text;
    else write_text(path, text);
}

struct Options {
    std::string input;
    std::string output;
    std::string graph_file;
    std::string word;
    bool word_given = false;
    std::string mode = "exptime";
    std::size_t max_steps = 50;
    std::size_t max_edges = 8;
    std::size_t max_nodes = 12;
    std::string steps = "binarize,repfree,noempty,nochain";
    std::string trace_out;
    std::string trace_in;
    std::size_t q = 1;
    std::size_t n = 0;
    std::string maps;
    std::string variant = "prime";
    std::string sets;
    std::string target_out;
};

Hypergraph target_graph(const Options& o) {
    if (!o.graph_file.empty() && o.word_given) throw InputError("give either --graph or --string, not both");
    if (!o.graph_file.empty()) return hypergraph_from_json(read_document(o.graph_file), o.graph_file);
    if (o.word_given) return string_graph(word_from_argument(o.word));
    throw InputError("a target is required: --graph FILE or --string WORD");
}

int cmd_validate(const Options& o, std::ostream& out) {
    const Json doc = read_document(o.input);
    if (doc.contains("rules")) {
        const Mcfg g = mcfg_from_json(doc);
        out << "ok: mcfg with " << g.rules.size() << " rules" << (g.is_lcfrs() ? ", information-lossless" : "") << "\n";
    } else if (doc.contains("transitions")) {
        const PermNFA a = nfa_from_json(doc);
        out << "ok: automaton with " << a.states.size() << " states\n";
    } else if (doc.contains("productions")) {
        const Grammar g = grammar_from_json(doc);
        out << "ok: grammar with " << g.productions.size() << " productions, order " << order(g)
            << (is_repetition_free(g) ? ", repetition-free" : "") << "\n";
    } else {
        const Hypergraph h = hypergraph_from_json(doc, o.input);
        out << "ok: hypergraph with " << h.nodes.size() << " nodes and " << h.edges.size() << " edges\n";
    }
    return exit_yes;
}

int cmd_member(const Options& o, std::ostream& out) {
    const Grammar g = grammar_from_json(read_document(o.input));
    const Hypergraph h = target_graph(o);
    if (o.mode == "brute") {
        BruteForceBounds b;
        b.max_steps = o.max_steps;
        const Verdict v = member_bruteforce(g, h, b);
        out << (v == Verdict::yes ? "member" : v == Verdict::no ? "non-member" : "unknown") << "\n";
        if (!o.trace_out.empty() && v == Verdict::yes) {
            auto trace = find_derivation(g, h, terminal_budget(g, h), o.max_steps);
            if (trace) write_text(o.trace_out, dump(to_json(*trace)));
        }
        return v == Verdict::yes ? exit_yes : v == Verdict::no ? exit_no : exit_unknown;
    }
    if (o.mode == "exptime") {
        const bool yes = member_exptime(g, h);
        out << (yes ? "member" : "non-member") << "\n";
        return yes ? exit_yes : exit_no;
    }
    if (o.mode == "np") {
        const auto cert = member_np(g, h);
        out << (cert ? "member" : "non-member") << "\n";
        if (cert) {
            const CertificateCheck c = verify_certificate(g, h, *cert);
            out << "certificate: " << cert->steps.size() << " steps, bound "
                << certificate_step_bound(np_preprocess(g), h) << ", " << (c.ok ? "verified" : "REJECTED: " + c.reason) << "\n";
            if (!o.trace_out.empty()) write_text(o.trace_out, dump(to_json(*cert)));
        }
        return cert ? exit_yes : exit_no;
    }
    throw InputError("unknown mode '" + o.mode + "' (expected exptime, np or brute)");
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const Grammar g = grammar_from_json(read_document(o.input));
    const LanguageResult r = enumerate_language(g, {o.max_edges, o.max_nodes, o.max_steps});
    Json graphs = Json::array();
    for (const auto& h : r.graphs) {
        Json entry{{"graph", to_json(h)}};
        if (auto w = is_string_graph(h)) entry["word"] = word_to_string(*w);
        graphs.push_back(entry);
    }
    emit(o.output, dump(Json{{"saturated", r.saturated}, {"exact", r.exact}, {"count", r.graphs.size()}, {"graphs", graphs}}), out);
    return exit_yes;
}

int cmd_normalize(const Options& o, std::ostream& out) {
    const Grammar g = grammar_from_json(read_document(o.input));
    std::vector<NormalizeStep> steps;
    for (const auto& s : split(o.steps, ',')) steps.push_back(parse_step(s));
    emit(o.output, dump(to_json(normalize(g, steps))), out);
    return exit_yes;
}

int cmd_stringgen(const Options& o, std::ostream& out) {
    const Grammar g = grammar_from_json(read_document(o.input));
    const StringGenResult r = check_string_generating(g);
    out << (r.string_generating ? "string-generating" : "not string-generating") << ": " << r.reason << "\n";
    if (r.witness) out << dump(to_json(r));
    return r.string_generating ? exit_yes : exit_no;
}

int cmd_derive(const Options& o, std::ostream& out) {
    const Grammar g = grammar_from_json(read_document(o.input));
    if (!o.trace_in.empty()) {
        const Hypergraph h = replay(g, trace_from_json(read_document(o.trace_in)));
        emit(o.output, dump(to_json(h)), out);
        return exit_yes;
    }
    const Hypergraph h = target_graph(o);
    bool exhausted = false;
    const auto trace = find_derivation(g, h, terminal_budget(g, h), o.max_steps, &exhausted);
    if (!trace) {
        out << (exhausted ? "no derivation exists" : "no derivation within the step bound") << "\n";
        return exhausted ? exit_no : exit_unknown;
    }
    const std::string text = dump(to_json(*trace));
    emit(o.trace_out.empty() ? o.output : o.trace_out, text, out);
    return exit_yes;
}

std::vector<Transformation> parse_maps(const std::string& s, std::size_t& n) {
    std::vector<Transformation> maps;
    for (const auto& part : split(s, ';')) {
        std::vector<int> image;
        for (const auto& x : split(part, ',')) image.push_back(parse_int(x, "map image"));
        if (n == 0) n = image.size();
        if (image.size() != n) throw InputError("map '" + part + "' does not have " + std::to_string(n) + " entries");
        for (int v : image)
            if (v < 1 || v > static_cast<int>(n)) throw InputError("map '" + part + "' leaves 1.." + std::to_string(n));
        maps.push_back(Transformation::from_one_based(image));
    }
    return maps;
}

X3CInstance parse_sets(std::size_t q, const std::string& s) {
    X3CInstance inst;
    inst.q = q;
    for (const auto& part : split(s, ';')) {
        const auto xs = split(part, ',');
        if (xs.size() != 3) throw InputError("set '" + part + "' does not have three elements");
        inst.sets.push_back({parse_int(xs[0], "set element"), parse_int(xs[1], "set element"), parse_int(xs[2], "set element")});
    }
    inst.check();
    return inst;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hyperedge replacement grammar workbench"};
    app.require_subcommand(1);
    Options o;

    auto* validate_cmd = app.add_subcommand("validate", "Check a grammar, graph, MCFG or automaton file");
    validate_cmd->add_option("file", o.input)->required();

    auto* member_cmd = app.add_subcommand("member", "Decide whether a graph is generated");
    member_cmd->add_option("grammar", o.input)->required();
    member_cmd->add_option("--graph", o.graph_file, "Target hypergraph file");
    member_cmd->add_option("--string", o.word, "Target string graph")->each([&](const std::string&) { o.word_given = true; });
    member_cmd->add_option("--mode", o.mode, "exptime, np or brute")->check(CLI::IsMember({"exptime", "np", "brute"}));
    member_cmd->add_option("--max-steps", o.max_steps, "Step bound for brute force");
    member_cmd->add_option("--trace", o.trace_out, "Write the derivation or certificate here");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List the language up to bounds");
    enumerate_cmd->add_option("grammar", o.input)->required();
    enumerate_cmd->add_option("--max-edges", o.max_edges);
    enumerate_cmd->add_option("--max-nodes", o.max_nodes);
    enumerate_cmd->add_option("--max-steps", o.max_steps);
    enumerate_cmd->add_option("-o,--output", o.output);

    auto* normalize_cmd = app.add_subcommand("normalize", "Apply normalization steps");
    normalize_cmd->add_option("grammar", o.input)->required();
    normalize_cmd->add_option("--steps", o.steps, "Comma-separated: binarize,repfree,noempty,nochain");
    normalize_cmd->add_option("-o,--output", o.output);

    auto* stringgen_cmd = app.add_subcommand("stringgen", "Decide whether only string graphs are generated");
    stringgen_cmd->add_option("grammar", o.input)->required();

    auto* translate_cmd = app.add_subcommand("translate", "MCFG/LCFRS translations");
    translate_cmd->require_subcommand(1);
    auto* lcfrs_cmd = translate_cmd->add_subcommand("lcfrs2hrg", "LCFRS to HRG over q-string graphs");
    lcfrs_cmd->add_option("mcfg", o.input)->required();
    lcfrs_cmd->add_option("--q", o.q);
    lcfrs_cmd->add_option("-o,--output", o.output);
    auto* mark_cmd = translate_cmd->add_subcommand("mark", "Collector construction for the empty-word problem");
    mark_cmd->add_option("mcfg", o.input)->required();
    mark_cmd->add_option("-o,--output", o.output);

    auto* gen_cmd = app.add_subcommand("gen", "Generate reduction grammars");
    gen_cmd->require_subcommand(1);
    auto* chain_cmd = gen_cmd->add_subcommand("chain", "Chain grammar of a set of maps");
    chain_cmd->add_option("--n", o.n, "Size of the ground set");
    chain_cmd->add_option("--maps", o.maps, "1-based images, e.g. \"2,1,3;1,1,3\"");
    chain_cmd->add_option("-o,--output", o.output);
    auto* exptime_cmd = gen_cmd->add_subcommand("exptime", "Reduction grammar from an LCFRS over {a,b}");
    exptime_cmd->add_option("mcfg", o.input)->required();
    exptime_cmd->add_option("--variant", o.variant)->check(CLI::IsMember({"prime", "double", "triple"}));
    exptime_cmd->add_option("-o,--output", o.output);
    auto* x3c_cmd = gen_cmd->add_subcommand("x3c", "Exact-cover grammar and target");
    x3c_cmd->add_option("--q", o.q)->required();
    x3c_cmd->add_option("--sets", o.sets, "e.g. \"1,2,3;4,5,6\"")->required();
    x3c_cmd->add_option("-o,--output", o.output);
    x3c_cmd->add_option("--target-out", o.target_out, "Write the target string graph here");

    auto* derive_cmd = app.add_subcommand("derive", "Find or replay a derivation");
    derive_cmd->add_option("grammar", o.input)->required();
    derive_cmd->add_option("--graph", o.graph_file);
    derive_cmd->add_option("--string", o.word)->each([&](const std::string&) { o.word_given = true; });
    derive_cmd->add_option("--max-steps", o.max_steps);
    derive_cmd->add_option("--emit-trace", o.trace_out, "Write the found trace here");
    derive_cmd->add_option("--replay", o.trace_in, "Replay a trace file and print the result");
    derive_cmd->add_option("-o,--output", o.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_yes : exit_error;
    }

    try {
        if (*validate_cmd) return cmd_validate(o, out);
        if (*member_cmd) return cmd_member(o, out);
        if (*enumerate_cmd) return cmd_enumerate(o, out);
        if (*normalize_cmd) return cmd_normalize(o, out);
        if (*stringgen_cmd) return cmd_stringgen(o, out);
        if (*derive_cmd) return cmd_derive(o, out);
        if (*lcfrs_cmd) {
            emit(o.output, dump(to_json(lcfrs_to_hrg(mcfg_from_json(read_document(o.input)), o.q))), out);
            return exit_yes;
        }
        if (*mark_cmd) {
            emit(o.output, dump(to_json(mcfg_mark(mcfg_from_json(read_document(o.input))))), out);
            return exit_yes;
        }
        if (*chain_cmd) {
            std::size_t n = o.n;
            const auto maps = parse_maps(o.maps, n);
            if (n == 0) throw InputError("--n is required when no maps are given");
            emit(o.output, dump(to_json(chain_grammar(maps, n))), out);
            return exit_yes;
        }
        if (*exptime_cmd) {
            emit(o.output, dump(to_json(exptime_reduction(mcfg_from_json(read_document(o.input)), parse_variant(o.variant)))), out);
            return exit_yes;
        }
        if (*x3c_cmd) {
            const X3CReduction r = x3c_grammar(parse_sets(o.q, o.sets));
            emit(o.output, dump(to_json(r.grammar)), out);
            if (!o.target_out.empty()) write_text(o.target_out, dump(to_json(r.target)));
            return exit_yes;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}

}  // namespace hrg
