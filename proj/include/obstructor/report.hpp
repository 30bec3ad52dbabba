#ifndef OBSTRUCTOR_REPORT_HPP
#define OBSTRUCTOR_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "obstructor/obstruction_engine.hpp"

namespace obstructor {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "obstructor";
inline constexpr const char* kToolVersion = "0.1.0";

// Hash of the chart/frame/gluing conventions baked into the tool; reports
// carry it so that coordinate data is only ever compared like with like.
std::string convention_fingerprint();

// Raw model description as given on the command line or in a spec file.
// Triviality flags are optional and only meaningful for degree-0 summands
// on positive-genus curves.
struct ModelSpec {
    int genus = 0;
    std::vector<int> degrees;
    std::optional<std::vector<Triviality>> flags;

    friend bool operator==(const ModelSpec& a, const ModelSpec& b) {
        return a.genus == b.genus && a.degrees == b.degrees && a.flags == b.flags;
    }
};

// Throws std::invalid_argument with a field path on malformed input.
ModelSpec parse_model_spec(const Json& j);
Json emit_model_spec(const ModelSpec& spec);

// Canonical form: summands sorted by (degree, flag); flags normalized
// (always present in the canonical spec, one per summand).
ModelSpec canonical_spec(const ModelSpec& spec);

Model model_from_spec(const ModelSpec& spec);

struct AnalyzeOptions {
    int window = kDefaultWindow;
    bool check_alpha = false;
};

// Full analysis of one model: obstruction table, verdict, optional witness
// and optional empirical boundary-map summary. Identical input produces
// byte-identical output in both renderings.
struct AnalysisDocument {
    ModelSpec spec;  // canonical echo
    ObstructionReport obstructions;
    GoodnessVerdict verdict;
    std::optional<AlphaSweep> alpha;

    Json to_json() const;
    std::string to_text() const;
};

AnalysisDocument analyze(const ModelSpec& spec, const AnalyzeOptions& opts = {});

struct SweepOptions {
    int genus = 0;
    int rank = 3;
    int lo = 0;
    int hi = -1;              // lo > hi means empty box
    bool balanced = false;    // sweep a single degree instead of a box
    bool check_alpha = false;
    int window = kDefaultWindow;
};

struct SweepRow {
    std::vector<int> degrees;
    Goodness status;
    ClassifyRule rule;
    std::optional<bool> alpha_nonzero;  // present under check_alpha
};

struct SweepResult {
    SweepOptions options;
    std::vector<SweepRow> rows;
    int count_good = 0;
    int count_exotic = 0;
    int count_inconclusive = 0;
    int alpha_mismatches = 0;  // rows where the verdict and the boundary map disagree

    Json to_json() const;
    std::string to_text() const;
};

SweepResult sweep(const SweepOptions& opts);

// Degree sweep of the empirical boundary map for rank-3 genus-0 models.
struct ExoticProbe {
    ModelSpec spec;
    AlphaSweep alpha;
    Goodness empirical;  // supports-exotic iff some class is nonzero
    GoodnessVerdict verdict;

    Json to_json() const;
    std::string to_text() const;
};

ExoticProbe exotic_probe(const ModelSpec& spec, int window = kDefaultWindow);

struct OracleInfo {
    int degree;
    CechDims dims;
    std::vector<std::string> h0_basis;
    std::vector<std::string> h1_basis;

    Json to_json() const;
    std::string to_text() const;
};

OracleInfo oracle_info(int degree, int window = kDefaultWindow);

// Scripting contract: good 0, supports-exotic 10, inconclusive 20.
int exit_code(Goodness g);

} // namespace obstructor

#endif
