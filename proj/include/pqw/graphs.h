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

#ifndef PQW_GRAPHS_H
#define PQW_GRAPHS_H

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pqw/stabilizer.h"
#include "pqw/statevector.h"

namespace pqw {

/// An edge between two vertex indices. The order of the endpoints is meaningful:
/// it fixes the order of the two resource qubits (and outcome bits) of the edge.
struct Edge {
    std::size_t first = 0;
    std::size_t second = 0;

    bool touches(std::size_t v) const {
        return first == v || second == v;
    }
    std::size_t other(std::size_t v) const {
        return v == first ? second : first;
    }
    bool operator==(const Edge &) const = default;
};

/// A connected simple graph with labelled vertices and an ordered edge list.
class Graph {
   public:
    /// Throws std::invalid_argument on self-loops, duplicate edges, unknown or
    /// duplicate labels, or a disconnected graph.
    static Graph from_edges(
        std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>> &edges);

    /// Reads `u v` lines. Labels are [A-Za-z0-9_]+; blank lines and '#' comments are
    /// skipped; vertices are ordered by first appearance.
    static Graph parse_edge_list(std::istream &in);
    static Graph load_edge_list(const std::string &path);

    const std::vector<std::string> &vertices() const {
        return vertices_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    std::size_t num_vertices() const {
        return vertices_.size();
    }
    std::size_t num_edges() const {
        return edges_.size();
    }

    const std::string &label(std::size_t v) const {
        return vertices_.at(v);
    }
    /// Throws LookupError for an unknown label.
    std::size_t index_of(std::string_view label) const;

    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::vector<std::size_t> incident_edges(std::size_t v) const;
    std::size_t degree(std::size_t v) const;
    bool adjacent(std::size_t u, std::size_t v) const;

    bool is_tree() const {
        return edges_.size() + 1 == vertices_.size();
    }
    /// Degree-1 vertices, in vertex order.
    std::vector<std::size_t> leaves() const;

    /// 4^|E|: two resource outcomes per edge.
    std::uint64_t outcome_count() const;

    /// Edge-list text accepted by parse_edge_list.
    std::string edge_list_text() const;

    /// Same labels and edges, in the same order.
    bool operator==(const Graph &) const = default;

   private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
};

struct CatalogEntry {
    std::string name;
    Graph graph;
    std::uint64_t expected_outcome_count = 0;
    bool in_universal_suite = false;
    /// Correction the entry is checked against in the topology-specific suite.
    std::optional<std::string> specific_correction;
};

int catalog_version();

/// Every named graph, in file order (aliases excluded).
const std::vector<CatalogEntry> &catalog();

/// Resolves aliases. Throws LookupError listing the valid names.
const CatalogEntry &catalog_entry(std::string_view name);
Graph catalog_lookup(std::string_view name);

/// Entry names plus aliases.
std::vector<std::string> catalog_names();

/// The 18-graph suite in documented order.
std::vector<std::string> universal_suite_names();

/// The 8-graph topology-specific suite in documented order.
std::vector<std::string> specific_suite_names();

/// prod_{(u,v) in E} CZ_uv |+>^|V|, vertex k on qubit k.
StateVector graph_state(const Graph &graph, std::size_t max_qubits = kDefaultMaxQubits);

/// (|0...0> + |1...1>) / sqrt(2).
StateVector ghz_state(std::size_t num_qubits);

/// The star graph state with a Hadamard on every leaf; equals ghz_state for a star.
StateVector ghz_from_star(const Graph &star);

/// K_v = X_v prod_{u ~ v} Z_u.
PauliString vertex_stabilizer(const Graph &graph, std::size_t v);

/// One K_v per vertex, in vertex order.
Tableau stabilizer_generators(const Graph &graph);

}  // namespace pqw

#endif
