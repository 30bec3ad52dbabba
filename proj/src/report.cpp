#include "obstructor/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace obstructor {

namespace {

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char byte : text) {
        h ^= byte;
        h *= 1099511628211ull;
    }
    return h;
}

std::string conventions_text() {
    return transition_convention(0) +
           "; odd frames glued by theta_a^(0) = z^(-d_a) * theta_a^(1); "
           "gluing cocycle rho_0 . rho_1^(-1) written in the chart-0 frame; "
           "level-2 lifts act on the coordinate and fix the frame";
}

Triviality parse_triviality(const std::string& s, const std::string& path) {
    if (s == "trivial")
        return Triviality::Trivial;
    if (s == "nontrivial")
        return Triviality::NonTrivial;
    if (s == "unknown")
        return Triviality::Unknown;
    throw std::invalid_argument(path + ": expected trivial|nontrivial|unknown, got '" + s + "'");
}

std::string sheaf_str(const SplitBundle& e) {
    std::string out;
    for (const auto& l : e.components()) {
        if (!out.empty())
            out += " + ";
        out += "O(" + std::to_string(l.degree()) + ")";
        if (l.degree() == 0 && l.triviality() != Triviality::Trivial)
            out += "[" + to_string(l.triviality()) + "]";
    }
    return out;
}

Json dims_json(const CohomologyDims& d) {
    Json j;
    if (d.is_exact()) {
        j["h0"] = d.h0();
        j["h1"] = d.h1();
        j["exact"] = true;
    } else {
        j["h0"] = Json::array({d.h0_lo(), d.h0_hi()});
        j["h1"] = Json::array({d.h1_lo(), d.h1_hi()});
        j["exact"] = false;
    }
    j["chi"] = d.chi();
    return j;
}

Json class_json(const CechClass& c, int component) {
    Json j;
    j["component"] = component + 1;
    j["degree"] = c.bundle_degree;
    Json coords = Json::array();
    for (const auto& r : c.coordinates)
        coords.push_back(r.str());
    j["coordinates"] = coords;
    return j;
}

Json witness_json(const ExoticWitness& w) {
    const auto pair = slot_pair(w.pair_slot);
    Json j;
    j["pair"] = Json::array({pair[0] + 1, pair[1] + 1});
    j["coefficient"] = w.coefficient.str();
    Json classes = Json::array();
    for (int a = 0; a < 3; ++a)
        classes.push_back(class_json(w.classes[a], a));
    j["classes"] = classes;
    return j;
}

Json alpha_json(const AlphaSweep& a) {
    Json j;
    j["sections"] = a.dim_q2_sections;
    j["space"] = a.dim_q3_space;
    j["rank"] = a.rank;
    j["nonzero"] = a.nonzero;
    return j;
}

} // namespace

std::string convention_fingerprint() {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(conventions_text())));
    return std::string(buf);
}

ModelSpec parse_model_spec(const Json& j) {
    if (!j.is_object())
        throw std::invalid_argument("model: expected an object");
    ModelSpec spec;

    if (!j.contains("genus"))
        throw std::invalid_argument("model.genus: missing");
    if (!j["genus"].is_number_integer() || j["genus"].get<int>() < 0)
        throw std::invalid_argument("model.genus: expected a non-negative integer");
    spec.genus = j["genus"].get<int>();

    if (!j.contains("degrees") || !j["degrees"].is_array() || j["degrees"].empty())
        throw std::invalid_argument("model.degrees: expected a non-empty array");
    for (std::size_t i = 0; i < j["degrees"].size(); ++i) {
        if (!j["degrees"][i].is_number_integer())
            throw std::invalid_argument("model.degrees[" + std::to_string(i) +
                                        "]: expected an integer");
        spec.degrees.push_back(j["degrees"][i].get<int>());
    }

    if (j.contains("triviality") && !j["triviality"].is_null()) {
        if (!j["triviality"].is_array() ||
            j["triviality"].size() != spec.degrees.size())
            throw std::invalid_argument(
                "model.triviality: expected an array matching degrees");
        std::vector<Triviality> flags;
        for (std::size_t i = 0; i < j["triviality"].size(); ++i) {
            const std::string path = "model.triviality[" + std::to_string(i) + "]";
            if (!j["triviality"][i].is_string())
                throw std::invalid_argument(path + ": expected a string");
            const Triviality t =
                parse_triviality(j["triviality"][i].get<std::string>(), path);
            if (spec.degrees[i] != 0 && t == Triviality::Trivial)
                throw std::invalid_argument(
                    path + ": a bundle of nonzero degree cannot be trivial");
            flags.push_back(t);
        }
        spec.flags = std::move(flags);
    }

    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "genus" && key != "degrees" && key != "triviality")
            throw std::invalid_argument("model." + key + ": unknown field");
    }
    return spec;
}

Json emit_model_spec(const ModelSpec& raw) {
    const ModelSpec spec = canonical_spec(raw);
    Json j;
    j["genus"] = spec.genus;
    j["degrees"] = spec.degrees;
    Json flags = Json::array();
    for (const auto& t : *spec.flags)
        flags.push_back(to_string(t));
    j["triviality"] = flags;
    return j;
}

ModelSpec canonical_spec(const ModelSpec& spec) {
    const Curve curve(spec.genus);
    std::vector<LineBundleClass> comps;
    for (std::size_t i = 0; i < spec.degrees.size(); ++i) {
        Triviality t = spec.flags ? (*spec.flags)[i] : Triviality::Unknown;
        comps.push_back(LineBundleClass(spec.degrees[i], t).normalized_for(curve));
    }
    std::sort(comps.begin(), comps.end());
    ModelSpec out;
    out.genus = spec.genus;
    std::vector<Triviality> flags;
    for (const auto& l : comps) {
        out.degrees.push_back(l.degree());
        flags.push_back(l.triviality());
    }
    out.flags = std::move(flags);
    return out;
}

Model model_from_spec(const ModelSpec& spec) {
    if (spec.flags && spec.flags->size() != spec.degrees.size())
        throw std::invalid_argument("model.triviality: length mismatch");
    const Curve curve(spec.genus);
    std::vector<LineBundleClass> comps;
    for (std::size_t i = 0; i < spec.degrees.size(); ++i) {
        Triviality t = spec.flags ? (*spec.flags)[i] : Triviality::Unknown;
        comps.emplace_back(spec.degrees[i], t);
    }
    return Model(curve, SplitBundle(std::move(comps)));
}

AnalysisDocument analyze(const ModelSpec& raw, const AnalyzeOptions& opts) {
    const ModelSpec spec = canonical_spec(raw);
    const Model m = model_from_spec(spec);
    if (m.bundle.rank() < 2)
        throw std::invalid_argument(
            "model.degrees: rank must be at least 2 for an obstruction analysis");

    AnalysisDocument doc;
    doc.spec = spec;
    doc.obstructions = obstruction_report(m);
    doc.verdict = classify(m, opts.window);
    if (opts.check_alpha && m.curve.genus == 0 && m.bundle.rank() == 3)
        doc.alpha = alpha_sweep(m, opts.window);
    return doc;
}

Json AnalysisDocument::to_json() const {
    Json j;
    j["tool"] = Json{{"name", kToolName},
                     {"version", kToolVersion},
                     {"conventions", convention_fingerprint()}};
    j["model"] = emit_model_spec(spec);
    Json levels = Json::array();
    for (const auto& level : obstructions.levels) {
        Json lj;
        lj["k"] = level.k;
        std::vector<int> degs;
        for (const auto& l : level.sheaf.components())
            degs.push_back(l.degree());
        lj["sheaf"] = degs;
        lj["dims"] = dims_json(level.dims);
        if (!level.note.empty())
            lj["note"] = level.note;
        levels.push_back(std::move(lj));
    }
    j["obstructions"] = levels;
    Json vj;
    vj["status"] = to_string(verdict.status);
    vj["rule"] = to_string(verdict.rule);
    vj["detail"] = verdict.detail;
    if (!verdict.failed_rules.empty())
        vj["failed_rules"] = verdict.failed_rules;
    j["verdict"] = vj;
    if (verdict.witness)
        j["witness"] = witness_json(*verdict.witness);
    if (alpha)
        j["alpha"] = alpha_json(*alpha);
    return j;
}

std::string AnalysisDocument::to_text() const {
    std::ostringstream out;
    out << "model: genus " << spec.genus << ", E = ";
    {
        const Model m = model_from_spec(spec);
        out << sheaf_str(m.bundle) << "\n";
    }
    out << "obstruction sheaves:\n";
    for (const auto& level : obstructions.levels) {
        out << "  k=" << level.k << ": " << sheaf_str(level.sheaf) << "  ["
            << level.dims.str() << "]\n";
        if (!level.note.empty())
            out << "       note: " << level.note << "\n";
    }
    out << "verdict: " << to_string(verdict.status) << "  [rule "
        << to_string(verdict.rule) << "] " << verdict.detail << "\n";
    for (const auto& f : verdict.failed_rules)
        out << "  - " << f << "\n";
    if (verdict.witness) {
        const auto pair = slot_pair(verdict.witness->pair_slot);
        out << "witness: theta_" << pair[0] + 1 << " theta_" << pair[1] + 1
            << " d/dz with coefficient " << verdict.witness->coefficient.str()
            << "; classes:";
        for (int a = 0; a < 3; ++a) {
            const auto& c = verdict.witness->classes[a];
            out << " [component " << a + 1 << ", O(" << c.bundle_degree << "): ";
            if (c.coordinates.empty()) {
                out << "-";
            } else {
                for (std::size_t i = 0; i < c.coordinates.size(); ++i)
                    out << (i ? ", " : "") << c.coordinates[i].str();
            }
            out << "]";
        }
        out << "\n";
    }
    if (alpha) {
        out << "boundary map: " << alpha->dim_q2_sections << " basis sections -> "
            << alpha->dim_q3_space << "-dimensional space, rank " << alpha->rank
            << (alpha->nonzero ? ", nonzero" : ", zero") << "\n";
    }
    out << "tool: " << kToolName << " " << kToolVersion << " (conventions "
        << convention_fingerprint() << ")\n";
    return out.str();
}

SweepResult sweep(const SweepOptions& opts) {
    if (opts.rank < 2)
        throw std::invalid_argument("sweep: rank must be at least 2");
    if (opts.rank > 8)
        throw std::invalid_argument("sweep: rank capped at 8");
    if (opts.hi - opts.lo > 24)
        throw std::invalid_argument("sweep: box too large");

    SweepResult result;
    result.options = opts;

    std::vector<std::vector<int>> tuples;
    if (opts.lo <= opts.hi) {
        if (opts.balanced) {
            for (int d = opts.lo; d <= opts.hi; ++d)
                tuples.push_back(std::vector<int>(opts.rank, d));
        } else {
            std::vector<int> tuple(opts.rank, opts.lo);
            while (true) {
                tuples.push_back(tuple);
                int pos = opts.rank - 1;
                while (pos >= 0 && tuple[pos] == opts.hi)
                    --pos;
                if (pos < 0)
                    break;
                ++tuple[pos];
                for (int j = pos + 1; j < opts.rank; ++j)
                    tuple[j] = opts.lo;
            }
        }
    }

    for (const auto& degrees : tuples) {
        ModelSpec spec;
        spec.genus = opts.genus;
        spec.degrees = degrees;
        const Model m = model_from_spec(spec);
        const auto verdict = classify(m, opts.window);

        SweepRow row;
        row.degrees = degrees;
        row.status = verdict.status;
        row.rule = verdict.rule;
        if (opts.check_alpha && opts.genus == 0 && opts.rank == 3) {
            const auto a = alpha_sweep(m, opts.window);
            row.alpha_nonzero = a.nonzero;
            const bool verdict_exotic = verdict.status == Goodness::SupportsExotic;
            if (a.nonzero != verdict_exotic)
                ++result.alpha_mismatches;
        }
        switch (verdict.status) {
        case Goodness::Good: ++result.count_good; break;
        case Goodness::SupportsExotic: ++result.count_exotic; break;
        case Goodness::Inconclusive: ++result.count_inconclusive; break;
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

Json SweepResult::to_json() const {
    Json j;
    j["tool"] = Json{{"name", kToolName},
                     {"version", kToolVersion},
                     {"conventions", convention_fingerprint()}};
    j["genus"] = options.genus;
    j["rank"] = options.rank;
    j["balanced"] = options.balanced;
    j["box"] = Json::array({options.lo, options.hi});
    Json rows_json = Json::array();
    for (const auto& row : rows) {
        Json rj;
        rj["degrees"] = row.degrees;
        rj["status"] = to_string(row.status);
        rj["rule"] = to_string(row.rule);
        if (row.alpha_nonzero)
            rj["alpha_nonzero"] = *row.alpha_nonzero;
        rows_json.push_back(std::move(rj));
    }
    j["rows"] = rows_json;
    Json summary;
    summary["good"] = count_good;
    summary["supports_exotic"] = count_exotic;
    summary["inconclusive"] = count_inconclusive;
    if (options.check_alpha)
        summary["alpha_mismatches"] = alpha_mismatches;
    j["summary"] = summary;
    return j;
}

std::string SweepResult::to_text() const {
    std::ostringstream out;
    for (const auto& row : rows) {
        out << "(";
        for (std::size_t i = 0; i < row.degrees.size(); ++i)
            out << (i ? "," : "") << row.degrees[i];
        out << ") " << to_string(row.status) << " [" << to_string(row.rule) << "]";
        if (row.alpha_nonzero)
            out << " alpha=" << (*row.alpha_nonzero ? "nonzero" : "zero");
        out << "\n";
    }
    out << "summary: " << rows.size() << " models, " << count_good << " good, "
        << count_exotic << " supports-exotic, " << count_inconclusive
        << " inconclusive";
    if (options.check_alpha)
        out << ", " << alpha_mismatches << " boundary-map mismatches";
    out << "\n";
    return out.str();
}

ExoticProbe exotic_probe(const ModelSpec& raw, int window) {
    const ModelSpec spec = canonical_spec(raw);
    const Model m = model_from_spec(spec);
    ExoticProbe probe;
    probe.spec = spec;
    probe.alpha = alpha_sweep(m, window);
    probe.empirical =
        probe.alpha.nonzero ? Goodness::SupportsExotic : Goodness::Good;
    probe.verdict = classify(m, window);
    return probe;
}

Json ExoticProbe::to_json() const {
    Json j;
    j["tool"] = Json{{"name", kToolName},
                     {"version", kToolVersion},
                     {"conventions", convention_fingerprint()}};
    j["model"] = emit_model_spec(spec);
    j["alpha"] = alpha_json(alpha);
    Json rows = Json::array();
    for (const auto& row : alpha.matrix) {
        Json coords = Json::array();
        for (const auto& c : row)
            coords.push_back(c.str());
        rows.push_back(std::move(coords));
    }
    j["matrix"] = rows;
    j["empirical"] = to_string(empirical);
    j["verdict"] = to_string(verdict.status);
    j["agreement"] = (empirical == Goodness::SupportsExotic) ==
                     (verdict.status == Goodness::SupportsExotic);
    return j;
}

std::string ExoticProbe::to_text() const {
    std::ostringstream out;
    out << "model: genus " << spec.genus << ", degrees (";
    for (std::size_t i = 0; i < spec.degrees.size(); ++i)
        out << (i ? "," : "") << spec.degrees[i];
    out << ")\n";
    out << "level-2 sections: " << alpha.dim_q2_sections
        << ", level-3 obstruction space: " << alpha.dim_q3_space
        << ", boundary-map rank: " << alpha.rank << "\n";
    out << "empirical: " << to_string(empirical)
        << "  (degree rule says " << to_string(verdict.status) << ")\n";
    return out.str();
}

OracleInfo oracle_info(int degree, int window) {
    OracleInfo info;
    info.degree = degree;
    info.dims = cech_dims(degree, window);
    for (int e = 0; e <= degree; ++e)
        info.h0_basis.push_back(e == 0 ? "1" : (e == 1 ? "z" : "z^" + std::to_string(e)));
    for (int e : h1_basis_exponents(degree))
        info.h1_basis.push_back("z^" + std::to_string(e));
    return info;
}

Json OracleInfo::to_json() const {
    Json j;
    j["degree"] = degree;
    j["h0"] = dims.h0;
    j["h1"] = dims.h1;
    j["h0_basis"] = h0_basis;
    j["h1_basis"] = h1_basis;
    return j;
}

std::string OracleInfo::to_text() const {
    std::ostringstream out;
    out << "O(" << degree << ") on the projective line: h0 = " << dims.h0
        << ", h1 = " << dims.h1 << "\n";
    out << "h0 basis (chart 0):";
    if (h0_basis.empty())
        out << " (none)";
    for (const auto& b : h0_basis)
        out << " " << b;
    out << "\nh1 basis (overlap):";
    if (h1_basis.empty())
        out << " (none)";
    for (const auto& b : h1_basis)
        out << " " << b;
    out << "\n";
    return out.str();
}

int exit_code(Goodness g) {
    switch (g) {
    case Goodness::Good: return 0;
    case Goodness::SupportsExotic: return 10;
    case Goodness::Inconclusive: return 20;
    }
    return 20;
}

} // namespace obstructor
