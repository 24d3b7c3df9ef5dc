#pragma once

// JSON documents for graphs, spirograph specs, drawings and verification
// reports. Field layouts are described in docs/formats.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lombardi/drawing.hpp"
#include "lombardi/graph.hpp"
#include "lombardi/spirograph.hpp"
#include "lombardi/verify.hpp"

namespace lombardi {

struct GraphDocument {
  RotationGraph graph;
  std::optional<std::vector<EdgeId>> tree_edges;
  std::optional<VertexId> root;
};

/// Throws ParseError (with a line number for malformed text), InvalidRotation
/// or MultiEdge.
GraphDocument parse_graph_document(std::string_view text);
RotationGraph load_graph(std::string_view text);

std::string graph_to_json(const RotationGraph& g);

/// Throws ParseError plus everything expand_spiro throws.
SpiroSpec parse_spiro_spec(std::string_view text);

/// Doubles are written in shortest round-trip form, so parse and write
/// reproduce the same bytes.
std::string drawing_to_json(const Drawing& d);
Drawing parse_drawing(std::string_view text);

std::string report_to_json(const VerificationReport& r, const Drawing& d, double angle_tol);

/// Whole file as text; throws ParseError when it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace lombardi
