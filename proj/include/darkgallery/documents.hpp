#pragma once

#include "darkgallery/darkness.hpp"
#include "darkgallery/simple_polygon.hpp"
#include "darkgallery/verify_simple.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace darkgallery {

using Json = nlohmann::ordered_json;

// Convex polygons and wedges get exact verification; simple polygons only sampling.
using Region = std::variant<ConvexPolygon, Wedge, SimplePolygon>;

std::string region_kind(const Region& region);
std::optional<ConvexRegion> as_convex(const Region& region);
// Any polygonal region as a SimplePolygon (wedges have none).
std::optional<SimplePolygon> as_simple(const Region& region);

// Rationals are written as "p/q" or "p"; reading also takes JSON integers and
// decimal strings.
Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json to_json(const Point2& p);
Point2 point_from_json(const Json& j);
Json to_json(const Region& region);
// Accepts a region object or any document with a "region" member.
Region region_from_json(const Json& j);

struct CertificateDocument {
  std::string mode;  // "exact" or "sampled"
  std::size_t guard_count = 0;
  std::optional<int> target;  // requested depth k
  std::optional<int> j;
  // exact
  int min_depth = 0;
  int max_darkness = 0;
  std::optional<DarknessWitness> witness;
  std::optional<bool> has_j_dark;
  std::vector<DarknessWitness> j_dark_witnesses;
  // sampled
  std::optional<Sampler> sampler;
  std::size_t sample_count = 0;
  int min_sampled_depth = 0;
  std::vector<Point2> failing_samples;

  // True when nothing violates the requested depth / j.
  bool verified() const;
};

CertificateDocument exact_certificate(const ConvexRegion& region, const GuardSet& guards,
                                      std::optional<int> j = std::nullopt,
                                      std::optional<int> target = std::nullopt);
CertificateDocument sampled_certificate(const SimplePolygon& poly, const GuardSet& guards, const Sampler& sampler,
                                        std::optional<int> target = std::nullopt);

Json to_json(const CertificateDocument& cert);
CertificateDocument certificate_from_json(const Json& j);

struct PlacementDocument {
  Region region;
  GuardSet guards;
  Json metadata = Json::object();
  std::optional<CertificateDocument> certificate;
};

Json to_json(const PlacementDocument& doc);
PlacementDocument placement_from_json(const Json& j);

std::string serialize(const PlacementDocument& doc);
std::string serialize(const CertificateDocument& cert);
PlacementDocument parse_placement(std::string_view text);
Json parse_json(std::string_view text);

// Guards from a placement document or a bare list of points.
GuardSet guards_from_json(const Json& j);

// triangle, triangle-table, square, wedge, wedge-table, unit-square, pentagon,
// hexagon, fisk-example, comb:S.
std::vector<std::string> builtin_shape_names();
Region builtin_region(const std::string& name);

}  // namespace darkgallery
