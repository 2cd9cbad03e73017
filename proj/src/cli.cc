// Copyright 2026 The PQW Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pqw/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "pqw/errors.h"
#include "pqw/graphs.h"
#include "pqw/noise.h"
#include "pqw/protocol.h"
#include "pqw/verify.h"

namespace pqw {

using json = nlohmann::ordered_json;

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

namespace {

// JSON numbers carry the same 12 significant digits as the CSV columns, so
// reports do not depend on the last bits of floating-point rounding.
json num(double value) {
    return std::strtod(format_number(value).c_str(), nullptr);
}

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Argument parsing helpers.

struct NamedGraph {
    std::string name;
    Graph graph;
    // Correction the catalog pairs with this graph, if any.
    std::optional<std::string> specific_correction;
};

std::vector<NamedGraph> select_graphs(const std::string &selector) {
    std::vector<NamedGraph> out;
    auto add_catalog = [&](const std::vector<std::string> &names) {
        for (const auto &name : names) {
            const CatalogEntry &entry = catalog_entry(name);
            out.push_back({entry.name, entry.graph, entry.specific_correction});
        }
    };
    if (selector == "all") {
        add_catalog(universal_suite_names());
    } else if (selector == "specific") {
        add_catalog(specific_suite_names());
    } else if (selector.starts_with("@")) {
        out.push_back({selector.substr(1), Graph::load_edge_list(selector.substr(1)), std::nullopt});
    } else {
        add_catalog({selector});
    }
    return out;
}

CorrectionKind resolve_correction(const std::string &requested, const NamedGraph &graph) {
    if (requested != "specific") {
        return parse_correction_kind(requested);
    }
    if (!graph.specific_correction) {
        throw UsageError("graph '" + graph.name + "' has no topology-specific correction");
    }
    return parse_correction_kind(*graph.specific_correction);
}

std::vector<double> parse_p_grid(const std::string &text) {
    auto parse_real = [&](const std::string &s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != s.size()) {
            throw UsageError("cannot parse '" + s + "' as a number in --p");
        }
        return v;
    };
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ':')) {
            parts.push_back(part);
        }
        if (parts.size() != 3) {
            throw UsageError("--p range must be start:stop:step");
        }
        double start = parse_real(parts[0]);
        double stop = parse_real(parts[1]);
        double step = parse_real(parts[2]);
        if (!(step > 0.0) || stop < start) {
            throw UsageError("--p range needs step > 0 and stop >= start");
        }
        auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; i++) {
            // Round away the drift of start + i*step so printed grids are exact.
            grid.push_back(std::strtod(format_number(start + static_cast<double>(i) * step).c_str(), nullptr));
        }
    } else {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            grid.push_back(parse_real(part));
        }
    }
    if (grid.empty()) {
        throw UsageError("--p is empty");
    }
    return grid;
}

std::size_t default_jobs() {
    const char *env = std::getenv("PQW_JOBS");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    char *end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 0) {
        throw UsageError(std::string("PQW_JOBS must be a non-negative integer, got '") + env + "'");
    }
    return static_cast<std::size_t>(value);
}

// A state for the lc command plus the labels used to name its qubits in cuts.
struct NamedState {
    StateVector state;
    std::vector<std::string> labels;
};

NamedState resolve_state(const std::string &name) {
    if (name.size() > 3 && name.starts_with("GHZ") &&
        name.find_first_not_of("0123456789", 3) == std::string::npos) {
        std::size_t n = std::stoul(name.substr(3));
        if (n < 1 || n > 24) {
            throw UsageError("GHZ size must be between 1 and 24");
        }
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < n; k++) {
            labels.push_back(k < 26 ? std::string(1, static_cast<char>('A' + k)) : "q" + std::to_string(k));
        }
        return {ghz_state(n), labels};
    }
    Graph g = name == "L4"                ? catalog_lookup("P4")
              : name.starts_with("@")     ? Graph::load_edge_list(name.substr(1))
                                          : catalog_lookup(name);
    return {graph_state(g), g.vertices()};
}

std::vector<std::size_t> parse_cut_side(const std::string &side, const std::vector<std::string> &labels) {
    std::vector<std::string> names;
    if (side.find(',') != std::string::npos) {
        std::stringstream ss(side);
        std::string part;
        while (std::getline(ss, part, ',')) {
            names.push_back(part);
        }
    } else {
        for (char c : side) {
            names.emplace_back(1, c);
        }
    }
    std::vector<std::size_t> out;
    for (const auto &n : names) {
        auto it = std::find(labels.begin(), labels.end(), n);
        if (it == labels.end()) {
            throw UsageError("cut names unknown qubit '" + n + "'");
        }
        out.push_back(static_cast<std::size_t>(it - labels.begin()));
    }
    return out;
}

Bipartition parse_cut(const std::string &text, const std::vector<std::string> &labels) {
    auto bar = text.find('|');
    std::string a = text.substr(0, bar);
    std::vector<std::size_t> side_a = parse_cut_side(a, labels);
    Bipartition cut = Bipartition::from_side_a(side_a, labels.size());
    if (bar != std::string::npos) {
        std::vector<std::size_t> side_b = parse_cut_side(text.substr(bar + 1), labels);
        std::sort(side_b.begin(), side_b.end());
        if (side_b != cut.side_b()) {
            throw UsageError("cut '" + text + "' does not split the qubits into two complementary sides");
        }
    }
    return cut;
}

std::string cut_name(const Bipartition &cut, const std::vector<std::string> &labels) {
    bool single = std::all_of(labels.begin(), labels.end(), [](const std::string &l) { return l.size() == 1; });
    auto side = [&](const std::vector<std::size_t> &qubits) {
        std::string s;
        for (std::size_t q : qubits) {
            if (!single && !s.empty()) {
                s += ',';
            }
            s += labels[q];
        }
        return s;
    };
    return side(cut.side_a()) + "|" + side(cut.side_b());
}

std::map<std::string, std::uint64_t> read_counts(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open counts file '" + path + "'");
    }
    json doc = json::parse(in);
    if (!doc.is_object() || doc.empty()) {
        throw UsageError("counts file must be a non-empty JSON object of bitstring -> count");
    }
    std::map<std::string, std::uint64_t> counts;
    std::size_t width = doc.begin().key().size();
    for (const auto &[key, value] : doc.items()) {
        if (key.empty() || key.size() != width || key.find_first_not_of("01") != std::string::npos) {
            throw UsageError("counts key '" + key + "' is not a bitstring of width " + std::to_string(width));
        }
        if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
            throw UsageError("count for '" + key + "' is not a non-negative integer");
        }
        counts[key] = value.get<std::uint64_t>();
    }
    return counts;
}

std::map<std::string, double> read_distribution(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open ideal distribution '" + path + "'");
    }
    json doc = json::parse(in);
    if (!doc.is_object() || doc.empty()) {
        throw UsageError("ideal file must be a non-empty JSON object of bitstring -> probability");
    }
    std::map<std::string, double> out;
    for (const auto &[key, value] : doc.items()) {
        if (!value.is_number()) {
            throw UsageError("ideal probability for '" + key + "' is not a number");
        }
        out[key] = value.get<double>();
    }
    return out;
}

// Writes `text` to `path`, or to `out` when `path` is empty.
void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot write '" + path + "'");
    }
    file << text;
}

// ---------------------------------------------------------------------------
// Subcommands.

struct VerifyArgs {
    std::string graph = "P4";
    std::string correction = "universal";
    std::string format = "json";
    std::string out_path;
    std::optional<std::size_t> jobs;
    double fidelity_tol = kFidelityTolerance;
    double probability_tol = kProbabilityTolerance;
    bool summary = false;
};

int cmd_verify(const VerifyArgs &args, std::ostream &out) {
    VerifyOptions options;
    options.fidelity_tolerance = args.fidelity_tol;
    options.probability_tolerance = args.probability_tol;
    options.jobs = args.jobs.value_or(default_jobs());

    std::vector<VerificationReport> reports;
    for (const NamedGraph &g : select_graphs(args.graph)) {
        reports.push_back(verify_all_outcomes(g.graph, resolve_correction(args.correction, g), g.name, options));
    }
    bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.pass; });

    std::string text;
    if (args.format == "csv") {
        text = "graph,correction,index,probability,fidelity\n";
        for (const auto &r : reports) {
            for (const auto &rec : r.records) {
                text += r.graph_name + "," + std::string(correction_kind_name(r.correction)) + "," +
                        std::to_string(rec.index) + "," + format_number(rec.probability) + "," +
                        format_number(rec.fidelity) + "\n";
            }
        }
    } else {
        json doc;
        doc["command"] = "verify";
        doc["fidelity_tolerance"] = args.fidelity_tol;
        doc["probability_tolerance"] = args.probability_tol;
        doc["reports"] = json::array();
        for (const auto &r : reports) {
            json j;
            j["graph"] = r.graph_name;
            j["correction"] = correction_kind_name(r.correction);
            j["outcomes"] = r.outcome_count;
            j["min_fidelity"] = num(r.min_fidelity);
            j["max_fidelity"] = num(r.max_fidelity);
            j["max_probability_deviation"] = num(r.max_probability_deviation);
            j["pass"] = r.pass;
            if (!args.summary) {
                j["records"] = json::array();
                for (const auto &rec : r.records) {
                    j["records"].push_back(
                        {{"index", rec.index}, {"probability", num(rec.probability)}, {"fidelity", num(rec.fidelity)}});
                }
            }
            doc["reports"].push_back(std::move(j));
        }
        doc["pass"] = all_pass;
        text = doc.dump(2) + "\n";
    }
    emit(text, args.out_path, out);
    if (!args.out_path.empty()) {
        for (const auto &r : reports) {
            out << r.graph_name << " " << correction_kind_name(r.correction) << " " << r.outcome_count
                << " outcomes " << (r.pass ? "PASS" : "FAIL") << "\n";
        }
    }
    return all_pass ? kExitOk : kExitVerificationFailed;
}

struct NoiseArgs {
    std::string graph = "P4";
    std::string channel = "dep";
    std::string p = "0:0.5:0.05";
    std::string correction = "universal";
    std::string insertion = "post_prep";
    std::string compare;
    std::string format = "csv";
    std::string out_path;
    std::optional<std::size_t> jobs;
    std::size_t max_qubits = 12;
};

int cmd_noise(const NoiseArgs &args, std::ostream &out) {
    NoiseOptions options;
    options.insertion = parse_noise_insertion(args.insertion);
    options.jobs = args.jobs.value_or(default_jobs());
    options.max_total_qubits = args.max_qubits;
    ChannelKind channel = parse_channel_kind(args.channel);
    std::vector<double> grid = parse_p_grid(args.p);
    for (double p : grid) {
        NoiseChannel check(channel, p);  // validates p
    }

    if (!args.compare.empty()) {
        if (args.compare != "fig4") {
            throw UsageError("unknown --compare mode '" + args.compare + "' (expected fig4)");
        }
        if (channel != ChannelKind::depolarizing) {
            throw UsageError("--compare fig4 uses the depolarizing channel");
        }
        // Bell pair (one noisy qubit), GHZ4 (two) and the four-path protocol (six).
        NoiseReport l4 = noise_sweep(catalog_lookup("P4"), channel, grid, CorrectionKind::universal, options, "P4");
        std::string text;
        if (args.format == "json") {
            json doc;
            doc["command"] = "noise";
            doc["compare"] = "fig4";
            doc["channel"] = channel_kind_name(channel);
            doc["points"] = json::array();
            for (std::size_t i = 0; i < grid.size(); i++) {
                doc["points"].push_back({{"p", num(grid[i])},
                                         {"F_bell_analytic", num(f_star_dep(grid[i], 1))},
                                         {"F_ghz4_analytic", num(f_star_dep(grid[i], 2))},
                                         {"F_l4_analytic", num(f_star_dep(grid[i], 6))},
                                         {"F_l4_exact", num(l4.fidelities[i])}});
            }
            text = doc.dump(2) + "\n";
        } else {
            text = "p,F_bell_analytic,F_ghz4_analytic,F_l4_analytic,F_l4_exact\n";
            for (std::size_t i = 0; i < grid.size(); i++) {
                text += format_number(grid[i]) + "," + format_number(f_star_dep(grid[i], 1)) + "," +
                        format_number(f_star_dep(grid[i], 2)) + "," + format_number(f_star_dep(grid[i], 6)) + "," +
                        format_number(l4.fidelities[i]) + "\n";
            }
        }
        emit(text, args.out_path, out);
        return kExitOk;
    }

    auto graphs = select_graphs(args.graph);
    if (graphs.size() != 1) {
        throw UsageError("noise takes a single graph");
    }
    const NamedGraph &g = graphs.front();
    NoiseReport report = noise_sweep(g.graph, channel, grid, resolve_correction(args.correction, g), options, g.name);
    std::string text;
    if (args.format == "json") {
        json doc;
        doc["command"] = "noise";
        doc["graph"] = report.graph_name;
        doc["channel"] = channel_kind_name(report.channel);
        doc["correction"] = correction_kind_name(report.correction);
        doc["insertion"] = noise_insertion_name(report.insertion);
        doc["k"] = report.k;
        doc["points"] = json::array();
        for (std::size_t i = 0; i < grid.size(); i++) {
            json point{{"p", num(grid[i])}, {"F_exact", num(report.fidelities[i])}};
            point["F_analytic"] = report.analytic ? num((*report.analytic)[i]) : json(nullptr);
            doc["points"].push_back(std::move(point));
        }
        text = doc.dump(2) + "\n";
    } else {
        text = "p,F_exact,F_analytic\n";
        for (std::size_t i = 0; i < grid.size(); i++) {
            text += format_number(grid[i]) + "," + format_number(report.fidelities[i]) + "," +
                    (report.analytic ? format_number((*report.analytic)[i]) : "") + "\n";
        }
    }
    emit(text, args.out_path, out);
    return kExitOk;
}

struct LcArgs {
    std::string a;
    std::string b;
    std::vector<std::string> cuts;
    std::string out_path;
};

int cmd_lc(const LcArgs &args, std::ostream &out) {
    NamedState a = resolve_state(args.a);
    NamedState b = resolve_state(args.b);
    if (a.state.num_qubits() != b.state.num_qubits()) {
        throw UsageError("states '" + args.a + "' and '" + args.b + "' have different qubit counts");
    }
    std::vector<Bipartition> cuts;
    for (const auto &c : args.cuts) {
        cuts.push_back(parse_cut(c, a.labels));
    }
    LcReport report = lc_check(a.state, b.state, cuts);
    json doc;
    doc["command"] = "lc";
    doc["a"] = args.a;
    doc["b"] = args.b;
    doc["cuts"] = json::array();
    for (const auto &row : report.cuts) {
        doc["cuts"].push_back({{"cut", cut_name(row.cut, a.labels)}, {"rank_a", row.rank_a}, {"rank_b", row.rank_b}});
    }
    doc["verdict"] = report.inequivalent ? "inequivalent" : "undetermined";
    emit(doc.dump(2) + "\n", args.out_path, out);
    return kExitOk;
}

struct CountsArgs {
    std::string counts_path;
    std::string ideal_path;
    std::optional<double> fidelity;
    std::optional<std::size_t> k;
    bool unsquared = false;
    std::string out_path;
};

int cmd_counts(const CountsArgs &args, std::ostream &out) {
    json doc;
    doc["command"] = "counts";
    double f = 0.0;
    if (args.fidelity) {
        if (!args.counts_path.empty()) {
            throw UsageError("--fidelity and --counts are mutually exclusive");
        }
        if (!args.k) {
            throw UsageError("--fidelity needs --k");
        }
        f = *args.fidelity;
        doc["fidelity"] = num(f);
    } else {
        if (args.counts_path.empty()) {
            throw UsageError("counts needs --counts FILE or --fidelity F");
        }
        auto counts = read_counts(args.counts_path);
        auto ideal = args.ideal_path.empty() ? uniform_distribution(counts.begin()->first.size())
                                             : read_distribution(args.ideal_path);
        std::uint64_t shots = 0;
        for (const auto &[key, n] : counts) {
            shots += n;
        }
        f = bhattacharyya_fidelity(counts, ideal, !args.unsquared);
        doc["shots"] = shots;
        doc["ideal"] = args.ideal_path.empty() ? "uniform" : args.ideal_path;
        doc[args.unsquared ? "F_cl_unsquared" : "F_cl"] = num(f);
    }
    if (args.k) {
        doc["k"] = *args.k;
        doc["p_eff"] = num(extract_p_eff(f, *args.k));
    }
    emit(doc.dump(2) + "\n", args.out_path, out);
    return kExitOk;
}

struct PhaseLemmaArgs {
    std::string graph = "all";
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

int cmd_phase_lemma(const PhaseLemmaArgs &args, std::ostream &out) {
    bool all = true;
    for (const NamedGraph &g : select_graphs(args.graph)) {
        bool ok = phase_lemma_check(g.graph, args.samples, args.seed);
        all = all && ok;
        out << g.name << " " << g.graph.outcome_count() << " outcomes " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return all ? kExitOk : kExitVerificationFailed;
}

int cmd_graphs(std::ostream &out) {
    out << "name,vertices,edges,outcomes,suite,specific_correction\n";
    for (const auto &entry : catalog()) {
        out << entry.name << "," << entry.graph.num_vertices() << "," << entry.graph.num_edges() << ","
            << entry.expected_outcome_count << "," << (entry.in_universal_suite ? "universal" : "") << ","
            << entry.specific_correction.value_or("") << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulation and verification of phase-quantum-walk graph-state distribution.", "pqw"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    auto add_jobs = [](CLI::App *sub, std::optional<std::size_t> &jobs) {
        sub->add_option("--jobs", jobs, "Worker threads (0 = all cores; default $PQW_JOBS or all cores)");
    };

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Check every measurement outcome of the protocol");
    verify_cmd->add_option("--graph", verify.graph, "Catalog name, 'all' (18-graph suite), 'specific' (topology-specific suite) or @edge-list-file")
        ->capture_default_str();
    verify_cmd->add_option("--correction", verify.correction, "universal, l4, c4, tree or specific")
        ->check(CLI::IsMember({"universal", "l4", "c4", "tree", "specific"}))
        ->capture_default_str();
    verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    verify_cmd->add_option("--out", verify.out_path, "Write the report here instead of stdout");
    verify_cmd->add_option("--fidelity-tol", verify.fidelity_tol)->check(CLI::NonNegativeNumber)->capture_default_str();
    verify_cmd->add_option("--probability-tol", verify.probability_tol)
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_cmd->add_flag("--summary", verify.summary, "Omit per-outcome records from JSON");
    add_jobs(verify_cmd, verify.jobs);

    NoiseArgs noise;
    auto *noise_cmd = app.add_subcommand("noise", "Exact fidelity under per-resource-qubit noise");
    noise_cmd->add_option("--graph", noise.graph)->capture_default_str();
    noise_cmd->add_option("--channel", noise.channel)->check(CLI::IsMember({"dep", "pd", "ad"}))->capture_default_str();
    noise_cmd->add_option("--p", noise.p, "start:stop:step (inclusive) or a comma-separated list")
        ->capture_default_str();
    noise_cmd->add_option("--correction", noise.correction)
        ->check(CLI::IsMember({"universal", "l4", "c4", "tree", "specific"}))
        ->capture_default_str();
    noise_cmd->add_option("--insertion", noise.insertion)
        ->check(CLI::IsMember({"post_prep", "pre_measure"}))
        ->capture_default_str();
    noise_cmd->add_option("--compare", noise.compare, "fig4: Bell, GHZ4 and four-path depolarizing curves");
    noise_cmd->add_option("--format", noise.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    noise_cmd->add_option("--out", noise.out_path);
    noise_cmd->add_option("--max-qubits", noise.max_qubits, "Total-qubit budget")->capture_default_str();
    add_jobs(noise_cmd, noise.jobs);

    LcArgs lc;
    auto *lc_cmd = app.add_subcommand("lc", "Compare Schmidt ranks of two states across bipartitions");
    lc_cmd->add_option("--a", lc.a, "L4, GHZ<n>, a catalog name or @edge-list-file")->required();
    lc_cmd->add_option("--b", lc.b)->required();
    lc_cmd->add_option("--cut", lc.cuts, "e.g. AC|BD; repeatable")->required();
    lc_cmd->add_option("--out", lc.out_path);

    CountsArgs counts;
    std::optional<double> fidelity_arg;
    std::optional<std::size_t> k_arg;
    auto *counts_cmd = app.add_subcommand("counts", "Classical fidelity and effective error rate from counts");
    counts_cmd->add_option("--counts", counts.counts_path, "JSON object: bitstring -> count");
    counts_cmd->add_option("--ideal", counts.ideal_path, "JSON object: bitstring -> probability (default uniform)");
    counts_cmd->add_option("--fidelity", fidelity_arg, "Use this fidelity directly");
    counts_cmd->add_option("--k", k_arg, "Noisy qubit count for p_eff")->check(CLI::PositiveNumber);
    counts_cmd->add_flag("--unsquared", counts.unsquared, "Report sum sqrt(p q) without squaring");
    counts_cmd->add_option("--out", counts.out_path);

    PhaseLemmaArgs lemma;
    auto *lemma_cmd = app.add_subcommand("phase-lemma", "Check tableau signs against far-side parities");
    lemma_cmd->add_option("--graph", lemma.graph)->capture_default_str();
    lemma_cmd->add_option("--samples", lemma.samples, "Extra random outcomes")->capture_default_str();
    lemma_cmd->add_option("--seed", lemma.seed)->capture_default_str();

    auto *graphs_cmd = app.add_subcommand("graphs", "List the graph catalog");

    std::vector<const char *> argv{"pqw"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify_cmd->parsed()) {
            return cmd_verify(verify, out);
        }
        if (noise_cmd->parsed()) {
            return cmd_noise(noise, out);
        }
        if (lc_cmd->parsed()) {
            return cmd_lc(lc, out);
        }
        if (counts_cmd->parsed()) {
            counts.fidelity = fidelity_arg;
            counts.k = k_arg;
            return cmd_counts(counts, out);
        }
        if (lemma_cmd->parsed()) {
            return cmd_phase_lemma(lemma, out);
        }
        if (graphs_cmd->parsed()) {
            return cmd_graphs(out);
        }
    } catch (const ResourceError &e) {
        err << "pqw: resource budget exceeded: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument &e) {
        err << "pqw: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception &e) {
        err << "pqw: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ZeroProbabilityError &e) {
        err << "pqw: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace pqw
