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

#include "pqw/graphs.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "pqw/catalog_data.h"
#include "pqw/errors.h"

namespace pqw {

namespace {

bool valid_label(std::string_view label) {
    return !label.empty() && std::all_of(label.begin(), label.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

std::vector<std::string> split_words(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    std::string w;
    while (in >> w) {
        words.push_back(w);
    }
    return words;
}

std::string strip_comment(std::string line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) {
        line.erase(hash);
    }
    return line;
}

}  // namespace

Graph Graph::from_edges(
    std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>> &edges) {
    if (vertices.empty()) {
        throw std::invalid_argument("a graph needs at least one vertex");
    }
    Graph g;
    std::map<std::string, std::size_t, std::less<>> index;
    for (auto &v : vertices) {
        if (!valid_label(v)) {
            throw std::invalid_argument("invalid vertex label '" + v + "'");
        }
        if (!index.emplace(v, g.vertices_.size()).second) {
            throw std::invalid_argument("duplicate vertex label '" + v + "'");
        }
        g.vertices_.push_back(std::move(v));
    }
    for (const auto &[a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end() || ib == index.end()) {
            throw std::invalid_argument("edge " + a + "-" + b + " names an unknown vertex");
        }
        if (ia->second == ib->second) {
            throw std::invalid_argument("self-loop at " + a);
        }
        if (g.adjacent(ia->second, ib->second)) {
            throw std::invalid_argument("duplicate edge " + a + "-" + b);
        }
        g.edges_.push_back({ia->second, ib->second});
    }
    // Connectivity by flood fill from vertex 0.
    std::vector<bool> seen(g.vertices_.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw std::invalid_argument("graph is not connected");
    }
    return g;
}

Graph Graph::parse_edge_list(std::istream &in) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::string line;
    std::size_t line_number = 0;
    auto note_vertex = [&](const std::string &v) {
        if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) {
            vertices.push_back(v);
        }
    };
    while (std::getline(in, line)) {
        line_number++;
        auto words = split_words(strip_comment(line));
        if (words.empty()) {
            continue;
        }
        if (words.size() != 2 || !valid_label(words[0]) || !valid_label(words[1])) {
            throw std::invalid_argument(
                "edge list line " + std::to_string(line_number) + ": expected 'u v' with alphanumeric labels");
        }
        note_vertex(words[0]);
        note_vertex(words[1]);
        edges.emplace_back(words[0], words[1]);
    }
    if (edges.empty()) {
        throw std::invalid_argument("edge list contains no edges");
    }
    return from_edges(std::move(vertices), edges);
}

Graph Graph::load_edge_list(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open edge list '" + path + "'");
    }
    return parse_edge_list(in);
}

std::size_t Graph::index_of(std::string_view label) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end()) {
        throw LookupError("no vertex labelled '" + std::string(label) + "'");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const Edge &e : edges_) {
        if (e.touches(v)) {
            out.push_back(e.other(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> Graph::incident_edges(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < edges_.size(); k++) {
        if (edges_[k].touches(v)) {
            out.push_back(k);
        }
    }
    return out;
}

std::size_t Graph::degree(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [&](const Edge &e) { return e.touches(v); }));
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge &e) {
        return (e.first == u && e.second == v) || (e.first == v && e.second == u);
    });
}

std::vector<std::size_t> Graph::leaves() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertices_.size(); v++) {
        if (degree(v) == 1) {
            out.push_back(v);
        }
    }
    return out;
}

std::uint64_t Graph::outcome_count() const {
    if (2 * edges_.size() >= 64) {
        throw ResourceError("outcome count 4^" + std::to_string(edges_.size()) + " does not fit in 64 bits");
    }
    return std::uint64_t{1} << (2 * edges_.size());
}

std::string Graph::edge_list_text() const {
    std::string out;
    for (const Edge &e : edges_) {
        out += vertices_[e.first] + " " + vertices_[e.second] + "\n";
    }
    return out;
}

namespace {

struct ParsedCatalog {
    std::vector<CatalogEntry> entries;
    std::vector<std::pair<std::string, std::string>> aliases;
};

ParsedCatalog parse_catalog(std::string_view text) {
    ParsedCatalog out;
    std::istringstream in{std::string(text)};
    std::string line;

    struct Pending {
        CatalogEntry entry;
        std::vector<std::string> vertices;
        std::vector<std::pair<std::string, std::string>> edges;
    };
    std::optional<Pending> pending;
    auto flush = [&]() {
        if (!pending) {
            return;
        }
        pending->entry.graph = Graph::from_edges(pending->vertices, pending->edges);
        pending->entry.expected_outcome_count = pending->entry.graph.outcome_count();
        out.entries.push_back(std::move(pending->entry));
        pending.reset();
    };

    while (std::getline(in, line)) {
        auto words = split_words(strip_comment(line));
        if (words.empty()) {
            continue;
        }
        if (words[0] == "graph") {
            flush();
            pending.emplace();
            pending->entry.name = words.at(1);
            for (std::size_t k = 2; k < words.size(); k++) {
                if (words[k] == "universal") {
                    pending->entry.in_universal_suite = true;
                } else if (words[k].starts_with("specific=")) {
                    pending->entry.specific_correction = words[k].substr(std::string_view("specific=").size());
                } else {
                    throw std::logic_error("catalog: unknown flag " + words[k]);
                }
            }
        } else if (words[0] == "vertices") {
            pending.value().vertices.assign(words.begin() + 1, words.end());
        } else if (words[0] == "alias") {
            flush();
            out.aliases.emplace_back(words.at(1), words.at(2));
        } else if (words.size() == 2) {
            pending.value().edges.emplace_back(words[0], words[1]);
        } else {
            throw std::logic_error("catalog: malformed line '" + line + "'");
        }
    }
    flush();
    return out;
}

const ParsedCatalog &parsed_catalog() {
    static const ParsedCatalog kCatalog = parse_catalog(kCatalogText);
    return kCatalog;
}

}  // namespace

int catalog_version() {
    return kCatalogVersion;
}

const std::vector<CatalogEntry> &catalog() {
    return parsed_catalog().entries;
}

const CatalogEntry &catalog_entry(std::string_view name) {
    const auto &parsed = parsed_catalog();
    std::string_view resolved = name;
    for (const auto &[alias, target] : parsed.aliases) {
        if (alias == name) {
            resolved = target;
        }
    }
    for (const auto &entry : parsed.entries) {
        if (entry.name == resolved) {
            return entry;
        }
    }
    std::string valid;
    for (const auto &n : catalog_names()) {
        valid += (valid.empty() ? "" : ", ") + n;
    }
    throw LookupError("unknown graph '" + std::string(name) + "'; valid names: " + valid);
}

Graph catalog_lookup(std::string_view name) {
    return catalog_entry(name).graph;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto &entry : catalog()) {
        names.push_back(entry.name);
    }
    for (const auto &[alias, target] : parsed_catalog().aliases) {
        names.push_back(alias);
    }
    return names;
}

std::vector<std::string> universal_suite_names() {
    std::vector<std::string> names;
    for (const auto &entry : catalog()) {
        if (entry.in_universal_suite) {
            names.push_back(entry.name);
        }
    }
    return names;
}

std::vector<std::string> specific_suite_names() {
    std::vector<std::string> names;
    for (const auto &entry : catalog()) {
        if (entry.specific_correction) {
            names.push_back(entry.name);
        }
    }
    return names;
}

StateVector graph_state(const Graph &graph, std::size_t max_qubits) {
    StateVector state = StateVector::plus(graph.num_vertices(), max_qubits);
    for (const Edge &e : graph.edges()) {
        state.apply(Gate::CZ, e.first, e.second);
    }
    return state;
}

StateVector ghz_state(std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("GHZ state needs at least one qubit");
    }
    StateVector state(num_qubits);
    std::vector<Complex> amps(state.dimension(), 0.0);
    amps.front() = std::numbers::sqrt2 / 2;
    amps.back() = std::numbers::sqrt2 / 2;
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector ghz_from_star(const Graph &star) {
    std::size_t n = star.num_vertices();
    auto hub = std::find_if(
        star.vertices().begin(), star.vertices().end(),
        [&](const std::string &label) { return star.degree(star.index_of(label)) + 1 == n; });
    if (n < 2 || !star.is_tree() || hub == star.vertices().end()) {
        throw std::invalid_argument("ghz_from_star expects a star graph");
    }
    std::size_t hub_index = static_cast<std::size_t>(hub - star.vertices().begin());
    StateVector state = graph_state(star);
    for (std::size_t v = 0; v < n; v++) {
        if (v != hub_index) {
            state.apply(Gate::H, v);
        }
    }
    return state;
}

PauliString vertex_stabilizer(const Graph &graph, std::size_t v) {
    PauliString k(graph.num_vertices());
    k.set(v, true, false);
    for (std::size_t u : graph.neighbors(v)) {
        k.set(u, false, true);
    }
    return k;
}

Tableau stabilizer_generators(const Graph &graph) {
    std::vector<PauliString> gens;
    for (std::size_t v = 0; v < graph.num_vertices(); v++) {
        gens.push_back(vertex_stabilizer(graph, v));
    }
    return Tableau::from_generators(std::move(gens));
}

}  // namespace pqw
