#pragma once

#include "darkgallery/darkness.hpp"
#include "darkgallery/simple_polygon.hpp"

#include <utility>
#include <vector>

namespace darkgallery {

// Spikes are triangles of unit base on top of a corridor of height 1; spike i
// has its mouth on y = 1 and its tip at (2i + 1/2, 5).
struct Comb {
  int spike_count = 0;
  SimplePolygon polygon;
  std::vector<std::pair<Rat, Rat>> spike_apertures;  // x-range of each mouth on y = 1
  std::vector<Point2> tips;
};

Comb make_comb(int s);

// k guards on a shallow upward-opening parabola under each mouth. With
// stagger off every arc is the same curve, which lines guards up across arcs.
GuardSet comb_cover(const Comb& comb, int k, bool stagger = true);

struct FiskPlan {
  Triangulation triangulation;
  std::vector<int> coloring;                 // per vertex, 1..3
  int chosen_color = 0;
  std::vector<std::size_t> chosen;           // vertices of the chosen class
  std::vector<Wedge> cones;                  // cone or anticone per chosen vertex
  std::vector<std::vector<Halfplane>> kernels;  // cone cut by the far edges of its fan
};

FiskPlan fisk_plan(const SimplePolygon& poly);

// arc_offset scales how far into the cone the arc centre sits, relative to the
// incident edge vectors; it is halved until the centre is inside the kernel.
GuardSet fisk_cover(const SimplePolygon& poly, int k, const Rat& arc_offset = Rat(1, 8));

// A U-shaped octagon whose smallest color class contains a reflex vertex.
SimplePolygon fisk_example();

}  // namespace darkgallery
