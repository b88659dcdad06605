#pragma once

#include "darkgallery/darkness.hpp"
#include "darkgallery/errors.hpp"

#include <optional>
#include <vector>

namespace darkgallery {

enum class Regime { VertexGuards, Plus1, Plus2 };

const char* regime_name(Regime r);

struct RegimePlan {
  int n = 0;
  int k = 0;
  Regime regime = Regime::VertexGuards;
  int g = 0;
};

RegimePlan plan(int n, int k);

struct ApexTriangle {
  std::size_t apex;
  std::size_t base;  // base edge is v_base v_{base+1}
};

struct ZigzagTriangulation {
  std::vector<std::size_t> path;
  std::vector<ApexTriangle> triangles;
  std::vector<std::optional<std::size_t>> elbow_owner;  // vertex -> triangle
};

struct ConstructionScaffold {
  Rat epsilon;
  ZigzagTriangulation zigzag;
  std::vector<Point2> m, p;                  // dividing points on the cw / ccw edges
  std::vector<std::optional<Point2>> elbow;  // l_i
  std::vector<Point2> a, b;                  // exit points (p_i, m_i at path ends)
  std::vector<std::vector<Point2>> safe_region;
  std::vector<Point2> x, y, z, c;
};

struct Placement {
  GuardSet guards;
  DepthCertificate certificate;
};

struct ScaffoldPlacement {
  GuardSet guards;
  ConstructionScaffold scaffold;
  DepthCertificate certificate;
  int attempts = 0;
};

class ConstructionFailed : public Error {
public:
  ConstructionFailed(const std::string& what, std::optional<DarknessWitness> witness)
      : Error(what), witness(std::move(witness)) {}
  const char* kind() const noexcept override { return "construction-failed"; }
  std::optional<DarknessWitness> witness;
};

GuardSet place_vertex_guards(const ConvexPolygon& polygon, int k);
ZigzagTriangulation zigzag(const ConvexPolygon& polygon);

// Guard order: x_0,y_0,z_0, x_1,y_1,z_1, ..., then the elbows by apex.
ScaffoldPlacement place_4n_minus_2(const ConvexPolygon& polygon);
// Builds the scaffold for one epsilon without verifying; nullopt if a
// geometric step degenerates.
std::optional<ConstructionScaffold> build_scaffold(const ConvexPolygon& polygon, const Rat& epsilon);
GuardSet scaffold_guards(const ConstructionScaffold& s);

GuardSet place_general_position(const ConvexRegion& region, int g);

struct Construction {
  RegimePlan plan;
  GuardSet guards;
  DepthCertificate certificate;
};

Construction construct(const ConvexPolygon& polygon, int k);

int guards_for_wedge(int k);
GuardSet place_wedge(const Wedge& wedge, int k);

}  // namespace darkgallery
