#include "darkgallery/documents.hpp"

#include "darkgallery/construct_simple.hpp"
#include "darkgallery/errors.hpp"
#include "darkgallery/fixtures.hpp"

namespace darkgallery {

namespace {

constexpr const char* kPlacementFormat = "darkgallery-placement";
constexpr const char* kCertificateFormat = "darkgallery-certificate";

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<Point2> points_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a list of points");
  std::vector<Point2> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

Json points_to_json(std::span<const Point2> pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

Json vec_to_json(const Vec2& v) { return Json::array({to_json(v.x), to_json(v.y)}); }

Vec2 vec_from_json(const Json& j) {
  Point2 p = point_from_json(j);
  return {p.x, p.y};
}

Json witness_to_json(const DarknessWitness& w) {
  Json lines = Json::array();
  for (const auto& c : w.contributing_lines) {
    Json params = Json::array();
    for (const auto& t : c.line.params) params.push_back(to_json(t));
    lines.push_back({{"guards", c.line.members},
                     {"anchor", to_json(c.line.anchor)},
                     {"direction", vec_to_json(c.line.direction)},
                     {"params", params},
                     {"blocked", c.blocked_count}});
  }
  return {{"point", to_json(w.point)}, {"darkness", w.darkness}, {"lines", lines}};
}

DarknessWitness witness_from_json(const Json& j) {
  DarknessWitness w;
  w.point = point_from_json(member(j, "point"));
  w.darkness = member(j, "darkness").get<int>();
  for (const auto& l : member(j, "lines")) {
    LineContribution c;
    c.line.members = member(l, "guards").get<std::vector<std::size_t>>();
    c.line.anchor = point_from_json(member(l, "anchor"));
    c.line.direction = vec_from_json(member(l, "direction"));
    for (const auto& t : member(l, "params")) c.line.params.push_back(rat_from_json(t));
    c.blocked_count = member(l, "blocked").get<int>();
    w.contributing_lines.push_back(std::move(c));
  }
  return w;
}

Json sampler_to_json(const Sampler& s) {
  Json j;
  switch (s.kind) {
    case Sampler::Kind::Grid:
      j = {{"kind", "grid"}, {"resolution", s.resolution}};
      break;
    case Sampler::Kind::Random:
      j = {{"kind", "random"}, {"seed", s.seed}, {"count", s.count}};
      break;
    case Sampler::Kind::Explicit:
      j = {{"kind", "explicit"}};
      break;
  }
  if (!s.points.empty() || s.kind == Sampler::Kind::Explicit) j["points"] = points_to_json(s.points);
  j["dark_ray_points"] = s.dark_ray_points;
  return j;
}

Sampler sampler_from_json(const Json& j) {
  Sampler s;
  std::string kind = member(j, "kind").get<std::string>();
  if (kind == "grid") {
    s.kind = Sampler::Kind::Grid;
    s.resolution = member(j, "resolution").get<int>();
  } else if (kind == "random") {
    s.kind = Sampler::Kind::Random;
    s.seed = member(j, "seed").get<std::uint64_t>();
    s.count = member(j, "count").get<std::size_t>();
  } else if (kind == "explicit") {
    s.kind = Sampler::Kind::Explicit;
  } else {
    throw InvalidInput("unknown sampler kind \"" + kind + "\"");
  }
  if (j.contains("points")) s.points = points_from_json(j.at("points"));
  if (j.contains("dark_ray_points")) s.dark_ray_points = j.at("dark_ray_points").get<bool>();
  return s;
}

Point2 pt(long x, long y) { return {Rat(x), Rat(y)}; }

}  // namespace

std::string region_kind(const Region& region) {
  switch (region.index()) {
    case 0: return "convex";
    case 1: return "wedge";
    default: return "simple";
  }
}

std::optional<ConvexRegion> as_convex(const Region& region) {
  if (const auto* p = std::get_if<ConvexPolygon>(&region)) return ConvexRegion(*p);
  if (const auto* w = std::get_if<Wedge>(&region)) return ConvexRegion(*w);
  return std::nullopt;
}

std::optional<SimplePolygon> as_simple(const Region& region) {
  if (const auto* p = std::get_if<ConvexPolygon>(&region)) return SimplePolygon(p->vertices());
  if (const auto* s = std::get_if<SimplePolygon>(&region)) return *s;
  return std::nullopt;
}

Json to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(to_string(r));
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw InvalidInput("rational must be an integer or a \"p/q\" string, got " + j.dump());
}

Json to_json(const Point2& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

Point2 point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidInput("point must be a two-element array, got " + j.dump());
  return {rat_from_json(j[0]), rat_from_json(j[1])};
}

Json to_json(const Region& region) {
  return std::visit(
      [](const auto& r) -> Json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Wedge>)
          return {{"kind", "wedge"}, {"apex", to_json(r.apex())},
                  {"directions", Json::array({vec_to_json(r.dir1()), vec_to_json(r.dir2())})}};
        else if constexpr (std::is_same_v<T, ConvexPolygon>)
          return {{"kind", "convex"}, {"vertices", points_to_json(r.vertices())}};
        else
          return {{"kind", "simple"}, {"vertices", points_to_json(r.vertices())}};
      },
      region);
}

Region region_from_json(const Json& j) {
  if (j.is_object() && j.contains("region")) return region_from_json(j.at("region"));
  std::string kind = member(j, "kind").get<std::string>();
  if (kind == "convex") return ConvexPolygon(points_from_json(member(j, "vertices")));
  if (kind == "simple") return SimplePolygon(points_from_json(member(j, "vertices")));
  if (kind == "wedge") {
    const Json& dirs = member(j, "directions");
    if (!dirs.is_array() || dirs.size() != 2) throw InvalidInput("wedge needs two directions");
    Vec2 d1 = vec_from_json(dirs[0]), d2 = vec_from_json(dirs[1]);
    if (sgn(cross(d1, d2)) == 0) throw InvalidInput("wedge directions are parallel");
    return Wedge(point_from_json(member(j, "apex")), d1, d2);
  }
  throw InvalidInput("unknown region kind \"" + kind + "\"");
}

bool CertificateDocument::verified() const {
  if (mode == "exact") {
    if (j && has_j_dark.value_or(false)) return false;
    if (target && min_depth < *target) return false;
    return true;
  }
  if (target && min_sampled_depth < *target) return false;
  return true;
}

CertificateDocument exact_certificate(const ConvexRegion& region, const GuardSet& guards, std::optional<int> j,
                                      std::optional<int> target) {
  CertificateDocument c;
  c.mode = "exact";
  c.guard_count = guards.size();
  c.target = target;
  c.j = j;
  DepthCertificate d = min_depth(region, guards);
  c.min_depth = d.min_depth;
  c.max_darkness = d.max_darkness;
  if (!guards.empty()) c.witness = d.witness;
  if (j) {
    JDarkResult r = has_j_dark(region, guards, *j);
    c.has_j_dark = r.found;
    if (r.witness) c.j_dark_witnesses.push_back(*r.witness);
  }
  return c;
}

CertificateDocument sampled_certificate(const SimplePolygon& poly, const GuardSet& guards, const Sampler& sampler,
                                        std::optional<int> target) {
  CertificateDocument c;
  c.mode = "sampled";
  c.guard_count = guards.size();
  c.target = target;
  c.sampler = sampler;
  SampleReport r = sample_depth(poly, guards, sampler, target);
  c.sample_count = r.samples.size();
  c.min_sampled_depth = r.min_sampled_depth;
  c.failing_samples = std::move(r.failing_samples);
  return c;
}

Json to_json(const CertificateDocument& c) {
  Json j;
  j["format"] = kCertificateFormat;
  j["version"] = 1;
  j["mode"] = c.mode;
  j["guard_count"] = c.guard_count;
  j["target"] = c.target ? Json(*c.target) : Json();
  if (c.mode == "exact") {
    j["min_depth"] = c.min_depth;
    j["max_darkness"] = c.max_darkness;
    j["witness"] = c.witness ? witness_to_json(*c.witness) : Json();
    j["j"] = c.j ? Json(*c.j) : Json();
    j["has_j_dark"] = c.has_j_dark ? Json(*c.has_j_dark) : Json();
    Json ws = Json::array();
    for (const auto& w : c.j_dark_witnesses) ws.push_back(witness_to_json(w));
    j["j_dark_witnesses"] = ws;
  } else {
    j["sampler"] = c.sampler ? sampler_to_json(*c.sampler) : Json();
    j["sample_count"] = c.sample_count;
    j["min_sampled_depth"] = c.min_sampled_depth;
    j["failing_samples"] = points_to_json(c.failing_samples);
  }
  j["verified"] = c.verified();
  return j;
}

CertificateDocument certificate_from_json(const Json& j) {
  if (member(j, "format") != kCertificateFormat) throw InvalidInput("not a certificate document");
  CertificateDocument c;
  c.mode = member(j, "mode").get<std::string>();
  c.guard_count = member(j, "guard_count").get<std::size_t>();
  if (j.contains("target") && !j.at("target").is_null()) c.target = j.at("target").get<int>();
  if (c.mode == "exact") {
    c.min_depth = member(j, "min_depth").get<int>();
    c.max_darkness = member(j, "max_darkness").get<int>();
    if (!member(j, "witness").is_null()) c.witness = witness_from_json(j.at("witness"));
    if (!member(j, "j").is_null()) c.j = j.at("j").get<int>();
    if (!member(j, "has_j_dark").is_null()) c.has_j_dark = j.at("has_j_dark").get<bool>();
    for (const auto& w : member(j, "j_dark_witnesses")) c.j_dark_witnesses.push_back(witness_from_json(w));
  } else if (c.mode == "sampled") {
    if (!member(j, "sampler").is_null()) c.sampler = sampler_from_json(j.at("sampler"));
    c.sample_count = member(j, "sample_count").get<std::size_t>();
    c.min_sampled_depth = member(j, "min_sampled_depth").get<int>();
    c.failing_samples = points_from_json(member(j, "failing_samples"));
  } else {
    throw InvalidInput("unknown certificate mode \"" + c.mode + "\"");
  }
  return c;
}

Json to_json(const PlacementDocument& doc) {
  Json j;
  j["format"] = kPlacementFormat;
  j["version"] = 1;
  j["region"] = to_json(doc.region);
  j["guards"] = points_to_json(doc.guards.points());
  j["metadata"] = doc.metadata;
  if (doc.certificate) j["certificate"] = to_json(*doc.certificate);
  return j;
}

PlacementDocument placement_from_json(const Json& j) {
  if (member(j, "format") != kPlacementFormat) throw InvalidInput("not a placement document");
  if (member(j, "version") != 1) throw InvalidInput("unsupported placement version");
  PlacementDocument doc{region_from_json(member(j, "region")), GuardSet(points_from_json(member(j, "guards"))),
                        Json::object(), std::nullopt};
  if (j.contains("metadata")) doc.metadata = j.at("metadata");
  if (j.contains("certificate")) doc.certificate = certificate_from_json(j.at("certificate"));
  return doc;
}

std::string serialize(const PlacementDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::string serialize(const CertificateDocument& cert) {
  return to_json(cert).dump(2) + "\n";
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

PlacementDocument parse_placement(std::string_view text) { return placement_from_json(parse_json(text)); }

GuardSet guards_from_json(const Json& j) {
  if (j.is_object()) return GuardSet(points_from_json(member(j, "guards")));
  return GuardSet(points_from_json(j));
}

std::vector<std::string> builtin_shape_names() {
  return {"triangle", "triangle-table", "square", "wedge", "wedge-table",
          "unit-square", "pentagon", "hexagon", "fisk-example", "comb:S"};
}

Region builtin_region(const std::string& name) {
  if (name == "triangle" || name == "triangle-table") return fixtures::triangle();
  if (name == "square") return fixtures::square();
  if (name == "wedge" || name == "wedge-table") return fixtures::wedge();
  if (name == "unit-square") return ConvexPolygon({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
  if (name == "pentagon") return ConvexPolygon({pt(0, 0), pt(4, 0), pt(5, 3), pt(2, 5), pt(-1, 3)});
  if (name == "hexagon") return ConvexPolygon({pt(0, 0), pt(2, 0), pt(3, 2), pt(2, 4), pt(0, 4), pt(-1, 2)});
  if (name == "fisk-example") return fisk_example();
  if (name.rfind("comb:", 0) == 0) {
    int s = 0;
    try {
      std::size_t used = 0;
      s = std::stoi(name.substr(5), &used);
      if (used != name.size() - 5) throw InvalidInput("");
    } catch (const std::exception&) {
      throw InvalidInput("bad comb spec \"" + name + "\"; expected comb:S");
    }
    return make_comb(s).polygon;
  }
  throw InvalidInput("unknown builtin shape \"" + name + "\"");
}

}  // namespace darkgallery
