#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "nucleuslab/api.hpp"

namespace {

struct CliOptions {
    std::string family;
    int D = 1;
    long q = 2;
    int N = 2;
    std::string input;
    std::string output;
    int base_vertex = 0;
    std::vector<std::string> only;
    bool large = false;
    std::string format = "json";
};

int emit(const nlab::RunResult& result, const CliOptions& opt) {
    std::string text = result.output.dump(2);
    text += "\n";
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << opt.output << "\n";
            return 2;
        }
        out << text;
    }
    return result.exit_code;
}

nlab::RunConfig make_config(const CliOptions& opt, bool family_required) {
    nlab::RunConfig config;
    if (!opt.input.empty()) {
        std::ifstream in(opt.input, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot read " + opt.input);
        config.graph_json.assign(std::istreambuf_iterator<char>(in), {});
    } else if (!opt.family.empty()) {
        config.family = nlab::parse_family_spec(opt.family, opt.D, opt.q, opt.N);
    } else if (family_required) {
        throw std::invalid_argument("pass --family or --in");
    }
    config.base_vertex = opt.base_vertex;
    config.only = opt.only;
    config.large = opt.large;
    return config;
}

void add_common(CLI::App* cmd, CliOptions& opt, bool with_input) {
    cmd->add_option("--family", opt.family, "hypercube, hamming, odd, B, C, D, 2A-even, 2A-odd");
    cmd->add_option("--D", opt.D, "diameter parameter");
    cmd->add_option("--q", opt.q, "prime power for the dual polar families");
    cmd->add_option("--N", opt.N, "alphabet size for Hamming graphs");
    cmd->add_option("--out", opt.output, "output path (default: stdout)");
    cmd->add_option("--format", opt.format, "output format (json)")
        ->check(CLI::IsMember({"json"}));
    if (with_input) {
        cmd->add_option("--in", opt.input, "graph JSON produced by generate (alternative to --family)");
        cmd->add_option("--base-vertex", opt.base_vertex, "base vertex index (default 0)");
        cmd->add_flag("--large", opt.large, "allow instances beyond the default size budget");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact subconstituent-algebra computations on Q-polynomial distance-regular graphs"};
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App* generate = app.add_subcommand("generate", "construct a graph and write its JSON document");
    add_common(generate, opt, false);
    CLI::App* analyze = app.add_subcommand("analyze", "intersection array, spectrum, Krein data, dual eigenvalues");
    add_common(analyze, opt, true);
    CLI::App* nucleus = app.add_subcommand("nucleus", "nucleus subspaces, decomposition, and projective-geometry report");
    add_common(nucleus, opt, true);
    CLI::App* verify = app.add_subcommand("verify", "run every certification; exit 0 only if all pass");
    add_common(verify, opt, true);
    verify->add_option("--only", opt.only, "restrict the report to checks whose name matches");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) {
            if (opt.family.empty()) throw std::invalid_argument("generate needs --family");
            return emit(nlab::run_generate(make_config(opt, true)), opt);
        }
        if (analyze->parsed()) return emit(nlab::run_analyze(make_config(opt, true)), opt);
        if (nucleus->parsed()) return emit(nlab::run_nucleus(make_config(opt, true)), opt);
        if (verify->parsed()) return emit(nlab::run_verify(make_config(opt, true)), opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
