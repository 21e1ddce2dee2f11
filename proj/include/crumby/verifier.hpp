#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crumby/graph.hpp"

namespace crumby {

struct Violation {
  enum class Kind : std::uint8_t { BlueDegreeExceeded, RedIsolated, RedP4, BadComponentShape };
  Kind kind;
  /// BlueDegreeExceeded: the vertex then its blue neighbours.
  /// RedIsolated: the vertex. RedP4: the path in order.
  /// BadComponentShape: the component's vertices.
  std::vector<Vertex> witness;
  std::string detail;
};

std::string_view to_string(Violation::Kind kind);

struct VerifierReport {
  bool ok = true;
  std::vector<Violation> violations;

  /// One line per violation: "<kind> v1 v2 ...", or "ok".
  std::string to_text() const;
};

/// Blue subgraph has maximum degree <= 1; every red vertex has a red
/// neighbour; the red subgraph contains no path on four vertices (as a
/// subgraph, not only induced). One RedP4 witness is reported per red
/// component. Throws crumby::Error on a size mismatch.
VerifierReport verify_crumby(const Graph& g, const Coloring& c);
bool is_crumby(const Graph& g, const Coloring& c);

/// Replays a single witness against the graph and coloring.
bool witness_holds(const Graph& g, const Coloring& c, const Violation& v);

struct ComponentShape {
  enum class Kind : std::uint8_t { RedStar, RedTriangle, BlueSingleton, BlueEdge, Other };
  Kind kind;
  int leaves = 0;  // RedStar only; 0 means an isolated red vertex
  Color color;
  std::vector<Vertex> vertices;

  bool operator==(const ComponentShape&) const = default;
};

/// Monochromatic components classified by shape, ordered by smallest vertex.
std::vector<ComponentShape> component_shapes(const Graph& g, const Coloring& c);
/// Acceptance derived from the shapes alone: every red component is a star
/// with at least one leaf or a triangle, every blue one has at most 2 vertices.
bool shapes_acceptable(const std::vector<ComponentShape>& shapes);

enum class PatternPurpose : std::uint8_t { EndpointsSingletonRed, EndpointsInRedK2, MixedSingletonAndK2 };

std::string_view to_string(PatternPurpose p);

/// Reads `pattern` as the colouring of a path whose two endpoints are base
/// vertices: the endpoints must be red, may lack a red neighbour on the path,
/// and must have the endpoint structure the purpose asks for. Everything else
/// must be crumby. Mixed accepts either orientation.
bool validate_pattern(std::string_view pattern, PatternPurpose purpose);

}  // namespace crumby
