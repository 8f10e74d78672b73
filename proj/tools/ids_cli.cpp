#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ids/errors.hpp"
#include "ids/graph_io.hpp"
#include "ids/identify.hpp"
#include "ids/oracle.hpp"
#include "ids/reductions.hpp"
#include "ids/solver.hpp"

using nlohmann::ordered_json;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

// All user-facing indices are 1-based; conversion happens here and only here.
std::vector<int> to1(const std::vector<int>& xs) {
    std::vector<int> out = xs;
    for (int& x : out) ++x;
    return out;
}

std::string format_set(const std::vector<int>& xs) {
    std::string s = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

void print_warnings(const std::vector<std::string>& ws) {
    for (const auto& w : ws) std::cerr << "warning: " << w << "\n";
}

int env_guard_default() {
    if (const char* env = std::getenv("IDS_GUARD")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
        std::cerr << "warning: ignoring invalid IDS_GUARD value '" << env << "'\n";
    }
    return ids::oracle::kDefaultGuard;
}

ordered_json iterations_json(const ids::SolveTrace& tr) {
    ordered_json its = ordered_json::array();
    for (const auto& it : tr.iterations) {
        ordered_json o;
        o["pivot"] = it.pivot + 1;
        o["blocker"] = to1(it.blocker);
        o["deleted_right"] = to1(it.deleted_right);
        its.push_back(std::move(o));
    }
    return its;
}

void emit_record(const std::string& command, ordered_json args, const std::string& digest,
                 ordered_json outcome, double ms) {
    ordered_json j;
    j["command"] = command;
    j["args"] = std::move(args);
    j["input_digest"] = digest;
    j["outcome"] = std::move(outcome);
    j["wall_time_ms"] = ms;
    std::cout << j.dump(2) << "\n";
}

ids::BipartiteGraph load_bip(const std::string& path, std::string* digest) {
    std::string bytes = ids::io::read_file(path);
    *digest = ids::io::fnv1a64_hex(bytes);
    std::istringstream ss(bytes);
    auto parsed = ids::io::parse_bip(ss);
    print_warnings(parsed.warnings);
    return std::move(parsed.graph);
}

ids::MCQInstance load_mcq(const std::string& path, std::string* digest) {
    std::string bytes = ids::io::read_file(path);
    *digest = ids::io::fnv1a64_hex(bytes);
    std::istringstream ss(bytes);
    auto parsed = ids::io::parse_mcq(ss);
    print_warnings(parsed.warnings);
    return std::move(parsed.instance);
}

// "-" means stdout.
void write_text(const std::string& path, const std::string& data, const char* what) {
    if (path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ids::InputError(std::string("cannot open ") + what + " for writing: " + path);
    f << data;
}

double parse_probability(const std::string& tok) {
    size_t pos = 0;
    double p = 0;
    try {
        p = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw ids::InputError("probability '" + tok + "' is not a number");
    }
    if (pos != tok.size() || !(p >= 0.0 && p <= 1.0))
        throw ids::InputError("probability '" + tok + "' must lie in [0, 1]");
    return p;
}

int cmd_check(const std::string& file, bool json) {
    Timer t;
    std::string digest;
    ids::BipartiteGraph g = load_bip(file, &digest);
    ids::IdentifiabilityReport rep = ids::is_identifiable(g);
    if (json) {
        ordered_json outcome;
        outcome["identifiable"] = rep.identifiable;
        outcome["edgeless"] = rep.edgeless;
        outcome["witness_vertex"] =
            rep.failing_vertex ? ordered_json(*rep.failing_vertex + 1) : ordered_json(nullptr);
        emit_record("check", ordered_json{{"file", file}}, digest, std::move(outcome), t.ms());
    } else if (rep.identifiable) {
        std::cout << "identifiable\n";
    } else if (rep.edgeless) {
        std::cout << "not identifiable, edgeless\n";
    } else {
        std::cout << "not identifiable, witness vertex " << *rep.failing_vertex + 1 << "\n";
    }
    return rep.identifiable ? 0 : 1;
}

int cmd_maxids(const std::string& file, bool trace, bool json) {
    Timer t;
    std::string digest;
    ids::BipartiteGraph g = load_bip(file, &digest);
    ids::SolveTrace tr = ids::max_identifiable_subgraph(g);
    bool found = tr.outcome == ids::SolveOutcome::found;
    if (json) {
        ordered_json outcome;
        outcome["outcome"] = found ? "found" : "none";
        outcome["j"] = found ? ordered_json(to1(*tr.result)) : ordered_json(nullptr);
        outcome["iterations"] = iterations_json(tr);
        outcome["matchings_run"] = tr.matchings_run;
        emit_record("maxids", ordered_json{{"file", file}, {"trace", trace}}, digest,
                    std::move(outcome), t.ms());
    } else {
        if (trace) {
            for (size_t i = 0; i < tr.iterations.size(); ++i) {
                const auto& it = tr.iterations[i];
                std::cout << "iteration " << i + 1 << ": pivot " << it.pivot + 1
                          << ", K = " << format_set(to1(it.blocker))
                          << ", deleted R = " << format_set(to1(it.deleted_right)) << "\n";
            }
        }
        if (found)
            std::cout << "J = " << format_set(to1(*tr.result)) << "\n";
        else
            std::cout << "none\n";
    }
    return found ? 0 : 1;
}

int cmd_minids(const std::string& file, int k, int guard, bool json) {
    Timer t;
    std::string digest;
    ids::BipartiteGraph g = load_bip(file, &digest);
    auto j = ids::oracle::solve_min_ids_exact(g, k, guard);
    if (json) {
        ordered_json outcome;
        outcome["outcome"] = j ? "found" : "none";
        outcome["j"] = j ? ordered_json(to1(*j)) : ordered_json(nullptr);
        emit_record("minids", ordered_json{{"file", file}, {"k", k}, {"guard", guard}}, digest,
                    std::move(outcome), t.ms());
    } else if (j) {
        std::cout << "J = " << format_set(to1(*j)) << "\n";
    } else {
        std::cout << "none\n";
    }
    return j ? 0 : 1;
}

std::string graph_bytes(const ids::BipartiteGraph& g, const std::vector<std::string>& comments) {
    std::ostringstream ss;
    ids::io::write_bip(ss, g, comments);
    return ss.str();
}

void print_summary(const std::string& out_path, const std::string& summary) {
    // Keep the summary off stdout when the graph itself goes there.
    (out_path == "-" ? std::cerr : std::cout) << summary << "\n";
}

int cmd_gen_random(int nl, int nr, const std::string& p_tok, std::uint64_t seed,
                   const std::string& out, bool json) {
    Timer t;
    if (nl < 1 || nr < 1) throw ids::InputError("gen random: minimum size 1 per side");
    double p = parse_probability(p_tok);
    ids::BipartiteGraph g = ids::gen_random_bipartite(nl, nr, p, seed);
    std::string spec_line = "random nl=" + std::to_string(nl) + " nr=" + std::to_string(nr) +
                            " p=" + p_tok + " seed=" + std::to_string(seed);
    write_text(out, graph_bytes(g, {"generated: " + spec_line}), "output file");
    if (json) {
        if (out == "-") throw ids::InputError("gen random: --json needs --out FILE");
        ordered_json outcome;
        outcome["n_left"] = g.n_left;
        outcome["n_right"] = g.n_right;
        outcome["edges"] = g.edge_count;
        outcome["out"] = out;
        emit_record("gen-random",
                    ordered_json{{"nl", nl}, {"nr", nr}, {"p", p_tok}, {"seed", seed}, {"out", out}},
                    ids::io::fnv1a64_hex(spec_line), std::move(outcome), t.ms());
    } else {
        print_summary(out, "|L|=" + std::to_string(g.n_left) + " |R|=" + std::to_string(g.n_right) +
                               " |E|=" + std::to_string(g.edge_count));
    }
    return 0;
}

int cmd_gen_reduction(bool nl_minus_k, const std::string& file, const std::string& out,
                      const std::string& labels, bool json) {
    Timer t;
    std::string digest;
    ids::MCQInstance inst = load_mcq(file, &digest);
    ids::ReductionOutput red =
        nl_minus_k ? ids::mcq_to_minids_nl_minus_k(inst) : ids::mcq_to_minids_k(inst);
    const char* name = nl_minus_k ? "mcq-nlk" : "mcq-k";
    write_text(out, graph_bytes(red.graph, {std::string("generated: ") + name + " from " + file}),
               "output file");
    if (!labels.empty()) {
        std::ostringstream ss;
        ids::io::write_labels(ss, red);
        write_text(labels, ss.str(), "label file");
    }
    if (red.dropped_same_color_edges > 0)
        std::cerr << "note: dropped " << red.dropped_same_color_edges << " same-color edge(s)\n";
    if (json) {
        if (out == "-") throw ids::InputError(std::string("gen ") + name + ": --json needs --out FILE");
        ordered_json outcome;
        outcome["n_left"] = red.graph.n_left;
        outcome["n_right"] = red.graph.n_right;
        outcome["edges"] = red.graph.edge_count;
        outcome["k_prime"] = red.k_prime;
        outcome["dropped_same_color_edges"] = red.dropped_same_color_edges;
        outcome["out"] = out;
        outcome["labels"] = labels.empty() ? ordered_json(nullptr) : ordered_json(labels);
        emit_record(std::string("gen-") + name,
                    ordered_json{{"file", file}, {"out", out}, {"labels", labels}}, digest,
                    std::move(outcome), t.ms());
    } else {
        print_summary(out, "|L|=" + std::to_string(red.graph.n_left) +
                               " |R|=" + std::to_string(red.graph.n_right) +
                               " |E|=" + std::to_string(red.graph.edge_count) +
                               " k'=" + std::to_string(red.k_prime));
    }
    return 0;
}

int cmd_bench(int nl, int nr, const std::vector<std::string>& p_toks, int seeds,
              const std::string& csv) {
    if (nl < 1 || nr < 1) throw ids::InputError("bench: minimum size 1 per side");
    if (seeds < 1) throw ids::InputError("bench: need at least one seed");
    std::vector<double> ps;
    for (const auto& tok : p_toks) ps.push_back(parse_probability(tok));

    std::ostringstream rows;
    rows << "nl,nr,p,seed,iterations,matchings_run,wall_ms,outcome\n";
    for (size_t pi = 0; pi < ps.size(); ++pi) {
        for (int seed = 1; seed <= seeds; ++seed) {
            ids::BipartiteGraph g =
                ids::gen_random_bipartite(nl, nr, ps[pi], static_cast<std::uint64_t>(seed));
            Timer t;
            ids::SolveTrace tr = ids::max_identifiable_subgraph(g);
            char ms[32];
            std::snprintf(ms, sizeof ms, "%.3f", t.ms());
            rows << nl << "," << nr << "," << p_toks[pi] << "," << seed << ","
                 << tr.iterations.size() << "," << tr.matchings_run << "," << ms << ","
                 << (tr.outcome == ids::SolveOutcome::found ? "found" : "none") << "\n";
        }
    }
    write_text(csv, rows.str(), "csv file");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "identifiable l-subgraph toolkit: test the identifiability predicate, extract the unique "
        "maximum identifiable l-subgraph, solve small minimization instances exactly, and "
        "generate multicolored-clique hardness gadgets"};
    app.require_subcommand(1);

    std::string file, out = "-", labels, csv = "-";
    bool trace = false, json = false;
    int k = 0, guard = env_guard_default();
    int nl = 0, nr = 0, seeds = 1;
    std::string p_tok = "0.5";
    std::vector<std::string> p_toks;
    std::uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "decide whether a graph is identifiable");
    check->add_option("file", file, "graph file (p bip format)")->required();
    check->add_flag("--json", json, "emit a JSON run record");

    auto* maxids = app.add_subcommand("maxids", "extract the maximum identifiable l-subgraph");
    maxids->add_option("file", file, "graph file (p bip format)")->required();
    maxids->add_flag("--trace", trace, "print each iteration's pivot, blocker, and deleted R-set");
    maxids->add_flag("--json", json, "emit a JSON run record (always embeds the trace)");

    auto* minids = app.add_subcommand(
        "minids", "exact minimum identifiable l-subgraph within |J| <= k (exponential; guarded)");
    minids->add_option("file", file, "graph file (p bip format)")->required();
    minids->add_option("-k,--k", k, "size bound on J")->required()->check(CLI::NonNegativeNumber);
    minids->add_option("--guard", guard,
                       "refuse graphs with |L| above this bound (default 20, or IDS_GUARD)");
    minids->add_flag("--json", json, "emit a JSON run record");

    auto* gen = app.add_subcommand("gen", "generate graphs");
    gen->require_subcommand(1);
    auto* gen_random = gen->add_subcommand("random", "seeded random bipartite graph");
    gen_random->add_option("--nl", nl, "left-side size")->required();
    gen_random->add_option("--nr", nr, "right-side size")->required();
    gen_random->add_option("--p", p_tok, "edge probability in [0, 1]")->required();
    gen_random->add_option("--seed", seed, "64-bit seed (default 1)");
    gen_random->add_option("--out", out, "output file, '-' for stdout (default)");
    gen_random->add_flag("--json", json, "emit a JSON run record (needs --out FILE)");

    auto* gen_k = gen->add_subcommand(
        "mcq-k", "reduce a multicolored-clique instance to min-identifiable-subgraph at k'=2k");
    gen_k->add_option("file", file, "instance file (p mcq format)")->required();
    gen_k->add_option("--out", out, "output graph file, '-' for stdout (default)");
    gen_k->add_option("--labels", labels, "also write the label sidecar here");
    gen_k->add_flag("--json", json, "emit a JSON run record (needs --out FILE)");

    auto* gen_nlk = gen->add_subcommand(
        "mcq-nlk", "reduce a multicolored-clique instance to the |L|-k variant");
    gen_nlk->add_option("file", file, "instance file (p mcq format)")->required();
    gen_nlk->add_option("--out", out, "output graph file, '-' for stdout (default)");
    gen_nlk->add_option("--labels", labels, "also write the label sidecar here");
    gen_nlk->add_flag("--json", json, "emit a JSON run record (needs --out FILE)");

    auto* bench = app.add_subcommand("bench", "solve seeded random graphs and emit CSV timings");
    bench->add_option("--nl", nl, "left-side size")->required();
    bench->add_option("--nr", nr, "right-side size")->required();
    bench->add_option("--p-sweep", p_toks, "comma-separated edge probabilities")
        ->required()
        ->delimiter(',');
    bench->add_option("--seeds", seeds, "number of seeds per probability (seeds run 1..N)");
    bench->add_option("--csv", csv, "output file, '-' for stdout (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // 0 covers --help; everything else is a usage error
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(file, json);
        if (app.got_subcommand(maxids)) return cmd_maxids(file, trace, json);
        if (app.got_subcommand(minids)) return cmd_minids(file, k, guard, json);
        if (gen->got_subcommand(gen_random)) return cmd_gen_random(nl, nr, p_tok, seed, out, json);
        if (gen->got_subcommand(gen_k)) return cmd_gen_reduction(false, file, out, labels, json);
        if (gen->got_subcommand(gen_nlk)) return cmd_gen_reduction(true, file, out, labels, json);
        if (app.got_subcommand(bench)) return cmd_bench(nl, nr, p_toks, seeds, csv);
    } catch (const ids::GuardError& e) {
        std::cerr << "error: " << e.what()
                  << " (raise it with --guard or the IDS_GUARD environment variable)\n";
        return 2;
    } catch (const ids::ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ids::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
