#pragma once

#include <string>

#include <json.hpp>

#include "lapctl/compose.hpp"
#include "lapctl/controllability.hpp"
#include "lapctl/graph.hpp"
#include "lapctl/spectral.hpp"

namespace lapctl::io {

// Insertion-ordered so emitted documents are stable and read naturally.
using Json = nlohmann::ordered_json;

// {"n": <int>, "edges": [[u, v], ...]}, 1-indexed, u < v, sorted.
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"controllable": bool, "method": str, "witness": [...]|null, "rank": int|null}
Json to_json(const Verdict& v);

// {"values": [...], "modal": [[column 1], [column 2], ...]}
Json to_json(const EigDecomp& d);

// {"structure": <graph>, "cell": <graph>, "s": int}
Json to_json(const CompositeSpec& spec);
CompositeSpec composite_spec_from_json(const Json& j);

// {"c": int, "k2": int, "links": ["D"|"T", ...], "tail": int, "tail_attach": int}
Json to_json(const ChainSpec& spec);
ChainSpec chain_spec_from_json(const Json& j);

// graph { 1 -- 2; 2 -- 3; }   Isolated vertices are listed as "v;".
std::string to_dot(const Graph& g);

Graph read_graph_file(const std::string& path);

}  // namespace lapctl::io
