#pragma once

#include "darkgallery/darkness.hpp"

#include <string>
#include <vector>

namespace darkgallery::fixtures {

// Triangle (0,200), (+-866/5,-100); sqrt(3) ~ 1.732 makes it rational.
ConvexPolygon triangle();
// The published rows g5, g6, g7, g10 expanded by the cyclic symmetry.
// Known to have 2-dark points near the edges; kept for comparison.
GuardSet triangle_guards_table();
// Same construction with g5 lowered to y = -97.5; exactly 2-dark free.
GuardSet triangle_guards();
// The exact cyclic map A -> B -> C -> A of the rational triangle.
AffineMap triangle_rotation();

ConvexPolygon square();
GuardSet square_guards();

// Apex (0,200), directions (-+381,-660): apex angle ~ pi/3 with the
// table's g7/g8 exactly on the edges.
Wedge wedge();
GuardSet wedge_guards_table();
// Adjusted configuration with no 2-dark point in the unbounded wedge.
GuardSet wedge_guards();

struct Named {
  std::string name;
  ConvexRegion region;
  GuardSet guards;
};

// "triangle", "triangle-table", "square", "wedge", "wedge-table".
std::vector<std::string> placement_names();
Named placement(const std::string& name);

}  // namespace darkgallery::fixtures
