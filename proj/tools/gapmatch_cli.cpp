// Command-line front end: match, analyze, generate, bench.
//
// Exit codes for `match`: 0 = matched, 1 = not matched, 2 = error
// (including unmet algorithm preconditions).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gapmatch/errors.hpp"
#include "gapmatch/generators.hpp"
#include "gapmatch/io.hpp"
#include "gapmatch/matchers.hpp"

namespace {

using namespace gapmatch;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int run_match(const std::string& path, const std::string& algorithm, bool want_witness,
              bool as_json, const MatchOptions& opts) {
    const InstanceFile file = parse_instance(read_file(path));
    const Instance& inst = file.instance;

    MatchResult result;
    if (algorithm == "auto") {
        result = dispatch(inst, opts);
    } else if (algorithm == "oracle") {
        result = oracle_match(inst, opts.oracle_step_budget);
    } else if (algorithm == "tuple-enum") {
        result = match_tuple_enum(inst, opts);
    } else if (algorithm == "nfa-product") {
        result = match_nfa_product(inst, opts);
    } else if (algorithm == "vsn-dp") {
        result = match_vsn_dp(inst, opts);
    } else if (algorithm == "tree-matmul") {
        result = match_tree_matmul(inst, opts);
    } else {
        throw std::runtime_error("unknown algorithm: " + algorithm);
    }

    if (!want_witness) result.witness.reset();
    std::cout << (as_json ? report_json(inst, result) : report_text(inst, result));
    return result.matched ? 0 : 1;
}

int run_analyze(const std::string& path, bool as_json) {
    const InstanceFile file = parse_instance(read_file(path));
    const AnalysisReport report = analyze(file.instance);
    std::cout << (as_json ? to_json(report) : to_text(report));
    return 0;
}

struct GenerateParams {
    std::string kind;
    std::size_t n = 4;
    std::size_t k = 2;
    std::size_t m = 4;
    std::size_t d = 3;
    double density = 0.5;
    std::uint64_t seed = 1;
    std::string variant = "direct";
    std::optional<std::size_t> gap_d;
    bool with_oracle_answer = false;
    std::string out;
};

int run_generate(const GenerateParams& params) {
    std::optional<Instance> inst;
    bool answer = false;
    if (params.kind == "clique") {
        const SourceGraph g = random_graph(params.n, params.density, params.seed);
        if (params.variant == "direct") {
            inst = gen_clique(g, params.k);
        } else if (params.variant == "turing") {
            if (!params.gap_d)
                throw std::runtime_error("turing variant needs --gap-d in {0} u [n-1]");
            inst = gen_clique_turing(g, params.k, *params.gap_d);
        } else {
            throw std::runtime_error("unknown clique variant: " + params.variant);
        }
        if (params.with_oracle_answer) answer = brute_clique(g, params.k);
    } else if (params.kind == "sat") {
        const CnfExact1 f = random_cnf(params.n, params.m, params.seed);
        inst = gen_sat(f);
        if (params.with_oracle_answer) answer = brute_1in3(f);
    } else if (params.kind == "ov3") {
        const OvTriple t = random_ov(params.n, params.d, params.seed);
        inst = gen_ov3(t);
        if (params.with_oracle_answer) answer = brute_ov3(t);
    } else {
        throw std::runtime_error("unknown generator kind: " + params.kind);
    }

    std::ostringstream metadata;
    metadata << "{\"generator\": \"" << params.kind << "\", \"seed\": " << params.seed;
    if (params.with_oracle_answer) metadata << ", \"expected\": " << (answer ? "true" : "false");
    metadata << "}";
    write_output(params.out, serialize_instance(*inst, metadata.str()));
    return 0;
}

int run_bench(const std::string& suite, const std::vector<std::size_t>& sizes,
              const std::string& out, const MatchOptions& opts) {
    std::ostringstream csv;
    csv << "n,K,algorithm,millis,multiplications\n";
    auto record = [&](const Instance& inst, const MatchResult& r) {
        csv << inst.n() << ',' << inst.constraints().count() << ',' << to_string(r.algorithm)
            << ',' << r.stats.millis << ',' << r.stats.multiplications << '\n';
    };

    if (suite == "ov3") {
        // The hard family: 3-OV instances of growing n.
        for (std::size_t size : sizes) {
            const OvTriple t = random_ov(size, 4, 7);
            const Instance inst = gen_ov3(t);
            record(inst, match_tree_matmul(inst, opts));
        }
    } else if (suite == "tree-matmul") {
        // Random non-intersecting sets over same-letter strings: the tree
        // pipeline's load scales with n while the multiplication count stays
        // pinned at 2 (K - 1) with the synthetic root included.
        for (std::size_t size : sizes) {
            Alphabet alphabet;
            const Symbol a = alphabet.intern("a");
            const Pos m = 34;
            std::vector<GapConstraint> cs;
            cs.push_back({1, m, SemilinearSet::at_least(m - 2)});
            for (Pos i = 1; i + 1 <= m && cs.size() < 32; ++i)
                cs.push_back({i, static_cast<Pos>(i + 1), SemilinearSet::all()});
            Instance inst(Word(std::vector<Symbol>(size, a)),
                          Word(std::vector<Symbol>(m, a)), ConstraintSet(std::move(cs)),
                          std::move(alphabet));
            record(inst, match_tree_matmul(inst, opts));
        }
    } else {
        throw std::runtime_error("unknown bench suite: " + suite);
    }
    write_output(out, csv.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subsequence matching under generalised gap constraints"};
    app.require_subcommand(1);

    MatchOptions opts;

    std::string match_file, match_algorithm = "auto";
    bool match_witness = false, match_json = false;
    auto* match_cmd = app.add_subcommand("match", "decide one instance file");
    match_cmd->add_option("file", match_file, "instance file (JSON)")->required();
    match_cmd->add_option("--algorithm", match_algorithm,
                          "auto|oracle|tuple-enum|nfa-product|vsn-dp|tree-matmul");
    match_cmd->add_flag("--witness", match_witness, "print a witness embedding when available");
    match_cmd->add_flag("--json", match_json, "machine-readable report");
    match_cmd->add_option("--oracle-budget", opts.oracle_step_budget,
                          "oracle step budget (default 10^7)");
    match_cmd->add_option("--state-budget", opts.nfa_state_budget,
                          "NFA macro-state budget (default 10^6)");
    match_cmd->add_option("--vsn-limit", opts.vsn_limit,
                          "dispatch: max ordering width for the boundary DP (default 4)");

    std::string analyze_file;
    bool analyze_json = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "constraint-structure report");
    analyze_cmd->add_option("file", analyze_file, "instance file (JSON)")->required();
    analyze_cmd->add_flag("--json", analyze_json, "machine-readable report");

    GenerateParams gen;
    auto* generate_cmd = app.add_subcommand("generate", "emit a reduction-based instance");
    generate_cmd->add_option("kind", gen.kind, "clique|sat|ov3")->required();
    generate_cmd->add_option("--n", gen.n, "vertices / variables / vectors per set");
    generate_cmd->add_option("--k", gen.k, "clique size");
    generate_cmd->add_option("--m", gen.m, "clause count (sat)");
    generate_cmd->add_option("--d", gen.d, "vector dimension (ov3)");
    generate_cmd->add_option("--density", gen.density, "edge probability (clique)");
    generate_cmd->add_option("--seed", gen.seed, "deterministic source seed");
    generate_cmd->add_option("--variant", gen.variant, "clique: direct|turing");
    std::size_t gap_d_value = 0;
    auto* gap_d_opt = generate_cmd->add_option("--gap-d", gap_d_value,
                                               "turing variant row-gap value d");
    generate_cmd->add_flag("--with-oracle-answer", gen.with_oracle_answer,
                           "embed the brute-force verdict as metadata");
    generate_cmd->add_option("-o,--out", gen.out, "output file (default stdout)");

    std::string bench_suite;
    std::vector<std::size_t> bench_sizes{256, 512, 1024};
    std::string bench_out;
    auto* bench_cmd = app.add_subcommand("bench", "runtime table over growing sizes");
    bench_cmd->add_option("suite", bench_suite, "ov3|tree-matmul")->required();
    bench_cmd->add_option("--sizes", bench_sizes, "sizes to sweep")->delimiter(',');
    bench_cmd->add_option("-o,--out", bench_out, "CSV output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (match_cmd->parsed())
            return run_match(match_file, match_algorithm, match_witness, match_json, opts);
        if (analyze_cmd->parsed()) return run_analyze(analyze_file, analyze_json);
        if (generate_cmd->parsed()) {
            if (gap_d_opt->count()) gen.gap_d = gap_d_value;
            return run_generate(gen);
        }
        if (bench_cmd->parsed()) return run_bench(bench_suite, bench_sizes, bench_out, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
