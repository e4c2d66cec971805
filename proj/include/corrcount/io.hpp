#pragma once

// File ingestion, serialization, and the command-line surface.
//
// Formats:
//   - graphs: graph6 lines (lines starting with '>' are skipped as headers);
//   - embeddings: JSON objects {"vertices", "edges", "rotation", "outer_face"};
//   - assignments: JSON objects {"mode": "identity"|"explicit", "lists",
//     "matchings", "k"} — identity mode derives the matchings from shared
//     colours once a host graph is known.
// Emission is deterministic (sorted keys, no timestamps), so a manifest plus
// a seed reproduces reports byte for byte.  Rationals serialize as
// {"num": i, "den": j}; counts as decimal strings.
//
// CLI exit codes: 0 success; 1 a verified bound failed or an extension
// theorem was falsified (test-suite significant); 2 parse or precondition
// error; 3 budget truncation; 64 usage error.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "corrcount/bounds.hpp"
#include "corrcount/correspondence.hpp"
#include "corrcount/counting.hpp"
#include "corrcount/extension.hpp"
#include "corrcount/graph.hpp"
#include "corrcount/plane.hpp"
#include "corrcount/structure.hpp"

namespace corrcount::io {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitUsage = 64;

// Every run records its command, inputs, and resolved parameters; reports
// embed the manifest so a run can be reproduced byte-identically.
struct RunManifest {
    std::string command;
    std::vector<std::string> inputs;
    std::map<std::string, std::string> parameters;  // resolved values, exact text
    std::string output_path;                        // empty means stdout
    std::string format = "json";
};

nlohmann::json manifest_json(const RunManifest& m);

// --- graphs -----------------------------------------------------------------

// Named family (c5, p4, w5, k4, grid2x3, icosahedron, dodecahedron) or a
// graph6 literal.
Graph graph_from_token(const std::string& token);

// The same families as plane embeddings; graph6 literals are rejected here
// because they carry no rotation data.
PlaneGraph plane_from_token(const std::string& token);

// graph6 lines with '>'-header skipping and "path:line" diagnostics.
std::vector<Graph> read_graph6_file(const std::string& path);
std::string emit_graph6(const std::vector<Graph>& graphs);

// --- embeddings ---------------------------------------------------------------

PlaneGraph embedding_from_json(const nlohmann::json& j);
nlohmann::json embedding_to_json(const PlaneGraph& pg);

// --- assignments --------------------------------------------------------------

// Parsed assignment before it meets a host graph: identity mode needs the
// graph's edges to realize its matchings.
struct AssignmentSpec {
    bool identity_mode = false;
    std::map<int, std::vector<Colour>> lists;
    std::map<Edge, std::vector<ColourPair>> matchings;
    std::optional<int> declared_k;

    CorrespondenceAssignment realize(const Graph& g) const;
};

AssignmentSpec assignment_from_json(const nlohmann::json& j);
nlohmann::json assignment_to_json(const CorrespondenceAssignment& a);

// --- scalars ------------------------------------------------------------------

nlohmann::json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json count_result_json(const CountResult& r);
nlohmann::json bound_verdict_json(const BoundVerdict& v);
std::string bound_verdict_csv_row(const std::string& graph_id, const BoundVerdict& v);

// --- bundle ingestion ---------------------------------------------------------

struct IngestResult {
    std::vector<Graph> graphs;
    std::vector<PlaneGraph> embeddings;
    std::vector<AssignmentSpec> assignments;
};

// Dispatches on content: JSON objects/arrays are embeddings or assignments
// (telling them apart by their keys); anything else is graph6 lines.
IngestResult ingest(const std::string& path);

// --- CLI ----------------------------------------------------------------------

// The full command-line program; usable in-process by tests.
int run_cli(int argc, const char* const* argv);

}  // namespace corrcount::io
