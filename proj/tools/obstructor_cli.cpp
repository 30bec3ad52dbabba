// Command-line front end: analyze a model, sweep degree boxes, probe the
// boundary map, or query the projective-line cohomology oracle.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "obstructor/report.hpp"

namespace {

using namespace obstructor;

constexpr int kExitInputError = 2;

std::vector<int> parse_int_list(const std::string& csv, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(item, &pos);
            if (pos != item.size())
                throw std::invalid_argument("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(what + ": '" + item +
                                        "' is not an integer");
        }
    }
    if (out.empty())
        throw std::invalid_argument(what + ": empty list");
    return out;
}

int default_window() {
    if (const char* env = std::getenv("OBSTRUCTOR_WINDOW")) {
        try {
            const int w = std::stoi(env);
            if (w > 0)
                return w;
        } catch (const std::exception&) {
        }
        std::cerr << "OBSTRUCTOR_WINDOW: ignoring invalid value '" << env << "'\n";
    }
    return kDefaultWindow;
}

ModelSpec spec_from_flags(const std::string& degrees_csv,
                          const std::string& flags_csv,
                          const std::string& balanced_csv,
                          const std::string& spec_path, int genus) {
    if (!spec_path.empty()) {
        std::ifstream in(spec_path);
        if (!in)
            throw std::invalid_argument("spec file: cannot open '" + spec_path + "'");
        Json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw std::invalid_argument("spec file: invalid JSON: " +
                                        std::string(e.what()));
        }
        return parse_model_spec(j);
    }

    ModelSpec spec;
    spec.genus = genus;
    if (!balanced_csv.empty()) {
        const auto qd = parse_int_list(balanced_csv, "--balanced");
        if (qd.size() != 2 || qd[0] < 1)
            throw std::invalid_argument("--balanced: expected 'rank,degree' with rank >= 1");
        spec.degrees.assign(static_cast<std::size_t>(qd[0]), qd[1]);
    } else if (!degrees_csv.empty()) {
        spec.degrees = parse_int_list(degrees_csv, "--degrees");
    } else {
        throw std::invalid_argument("model.degrees: provide --degrees, --balanced or a spec file");
    }
    if (!flags_csv.empty()) {
        std::vector<Triviality> flags;
        std::stringstream ss(flags_csv);
        std::string item;
        std::size_t i = 0;
        while (std::getline(ss, item, ',')) {
            const std::string path = "model.triviality[" + std::to_string(i++) + "]";
            if (item == "trivial")
                flags.push_back(Triviality::Trivial);
            else if (item == "nontrivial")
                flags.push_back(Triviality::NonTrivial);
            else if (item == "unknown")
                flags.push_back(Triviality::Unknown);
            else
                throw std::invalid_argument(path + ": expected trivial|nontrivial|unknown");
        }
        if (flags.size() != spec.degrees.size())
            throw std::invalid_argument("model.triviality: length mismatch with degrees");
        for (std::size_t k = 0; k < flags.size(); ++k)
            if (spec.degrees[k] != 0 && flags[k] == Triviality::Trivial)
                throw std::invalid_argument("model.triviality[" + std::to_string(k) +
                                            "]: a bundle of nonzero degree cannot be trivial");
        spec.flags = std::move(flags);
    }
    return spec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Obstruction calculator for split vector bundles on curves"};
    app.require_subcommand(1);

    int window = default_window();
    bool json_out = false;
    app.add_option("--window", window, "Laurent exponent window (default 64)");
    app.add_flag("--json", json_out, "machine-readable output");

    std::string degrees_csv, flags_csv, balanced_csv, spec_path;
    int genus = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "classify one model");
    analyze_cmd->add_option("--genus", genus, "curve genus (default 0)");
    analyze_cmd->add_option("--degrees", degrees_csv, "summand degrees, comma separated");
    analyze_cmd->add_option("--flags", flags_csv,
                            "per-summand triviality (trivial|nontrivial|unknown)");
    analyze_cmd->add_option("--balanced", balanced_csv, "'rank,degree' shorthand");
    analyze_cmd->add_option("--spec", spec_path, "JSON spec file");
    bool check_alpha = false;
    analyze_cmd->add_flag("--check-alpha", check_alpha,
                          "also run the boundary-map probe (genus 0, rank 3)");

    auto* sweep_cmd = app.add_subcommand("sweep", "classify a degree box");
    int sweep_genus = 0, sweep_rank = 3;
    std::string box_csv;
    bool sweep_balanced = false, sweep_alpha = false;
    sweep_cmd->add_option("--genus", sweep_genus, "curve genus (default 0)");
    sweep_cmd->add_option("--rank", sweep_rank, "bundle rank (default 3)");
    sweep_cmd->add_option("--box", box_csv, "'lo,hi' degree range (required)");
    sweep_cmd->add_flag("--balanced", sweep_balanced, "sweep balanced bundles only");
    sweep_cmd->add_flag("--check-alpha", sweep_alpha,
                        "cross-check verdicts against the boundary map");

    auto* exotic_cmd = app.add_subcommand(
        "exotic", "probe the boundary map of a rank-3 genus-0 model");
    std::string exotic_degrees, exotic_spec;
    exotic_cmd->add_option("--degrees", exotic_degrees, "three degrees, comma separated");
    exotic_cmd->add_option("--spec", exotic_spec, "JSON spec file");

    auto* oracle_cmd = app.add_subcommand(
        "oracle", "exact cohomology of O(d) on the projective line");
    int oracle_degree = 0;
    oracle_cmd->add_option("--degree,-d", oracle_degree, "bundle degree")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) {
            const ModelSpec spec =
                spec_from_flags(degrees_csv, flags_csv, balanced_csv, spec_path, genus);
            AnalyzeOptions opts;
            opts.window = window;
            opts.check_alpha = check_alpha;
            const AnalysisDocument doc = analyze(spec, opts);
            std::cout << (json_out ? doc.to_json().dump(2) + "\n" : doc.to_text());
            return exit_code(doc.verdict.status);
        }
        if (*sweep_cmd) {
            if (box_csv.empty())
                throw std::invalid_argument("--box: a bounded degree range is required");
            const auto box = parse_int_list(box_csv, "--box");
            if (box.size() != 2)
                throw std::invalid_argument("--box: expected 'lo,hi'");
            SweepOptions opts;
            opts.genus = sweep_genus;
            opts.rank = sweep_rank;
            opts.lo = box[0];
            opts.hi = box[1];
            opts.balanced = sweep_balanced;
            opts.check_alpha = sweep_alpha;
            opts.window = window;
            const SweepResult result = sweep(opts);
            std::cout << (json_out ? result.to_json().dump(2) + "\n" : result.to_text());
            return 0;
        }
        if (*exotic_cmd) {
            const ModelSpec spec =
                spec_from_flags(exotic_degrees, "", "", exotic_spec, 0);
            const ExoticProbe probe = exotic_probe(spec, window);
            std::cout << (json_out ? probe.to_json().dump(2) + "\n" : probe.to_text());
            return exit_code(probe.empirical);
        }
        if (*oracle_cmd) {
            const OracleInfo info = oracle_info(oracle_degree, window);
            std::cout << (json_out ? info.to_json().dump(2) + "\n" : info.to_text());
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitInputError;
}
