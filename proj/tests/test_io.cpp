#include "darkgallery/documents.hpp"
#include "darkgallery/errors.hpp"
#include "darkgallery/fixtures.hpp"
#include "darkgallery/render.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace darkgallery;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI, capturing stdout; stderr goes to a file next to it.
Run cli(const std::string& args) {
  static const std::filesystem::path dir = std::filesystem::temp_directory_path() / "darkgallery-io-tests";
  std::filesystem::create_directories(dir);
  std::string cmd = std::string(DARKGALLERY_CLI) + " " + args + " 2>" + (dir / "stderr.txt").string();
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string last_stderr() {
  std::ifstream in(std::filesystem::temp_directory_path() / "darkgallery-io-tests" / "stderr.txt");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / "darkgallery-io-tests" / name;
  std::filesystem::create_directories(path.parent_path());
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

Region region_of(const ConvexRegion& r) {
  return std::visit([](const auto& x) -> Region { return x; }, r);
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("rationals and points in JSON") {
  CHECK(to_json(frac(-3, 4)) == Json("-3/4"));
  CHECK(to_json(Rat(7)) == Json(7));
  CHECK(rat_from_json(Json(5)) == 5);
  CHECK(rat_from_json(Json("6/8")) == frac(3, 4));
  CHECK(rat_from_json(Json("0.125")) == frac(1, 8));
  CHECK_THROWS_AS(rat_from_json(Json("1/0")), InvalidInput);
  CHECK_THROWS_AS(rat_from_json(Json(0.5)), InvalidInput);
  CHECK(point_from_json(Json::array({"1/2", 3})) == Point2{frac(1, 2), Rat(3)});
}

TEST_CASE("placements round-trip byte for byte") {
  for (const std::string& name : fixtures::placement_names()) {
    fixtures::Named f = fixtures::placement(name);
    PlacementDocument doc{region_of(f.region), f.guards, Json::object(), std::nullopt};
    doc.metadata["construction"] = "fixture/" + name;
    doc.certificate = exact_certificate(f.region, f.guards, 2, 1);
    std::string text = serialize(doc);
    PlacementDocument back = parse_placement(text);
    CHECK(serialize(back) == text);
    CHECK(back.guards.size() == f.guards.size());
    CHECK(back.certificate->min_depth == doc.certificate->min_depth);
    CHECK(back.certificate->has_j_dark == doc.certificate->has_j_dark);
  }
  for (const std::string& shape : {"pentagon", "fisk-example", "comb:3"}) {
    PlacementDocument doc{builtin_region(shape), GuardSet{}, Json::object(), std::nullopt};
    std::string text = serialize(doc);
    CHECK(serialize(parse_placement(text)) == text);
  }
}

TEST_CASE("certificates are deterministic") {
  fixtures::Named f = fixtures::placement("wedge-table");
  std::string a = serialize(exact_certificate(f.region, f.guards, 2));
  std::string b = serialize(exact_certificate(f.region, f.guards, 2));
  CHECK(a == b);
  CertificateDocument c = certificate_from_json(parse_json(a));
  CHECK(c.has_j_dark == std::optional<bool>(true));
  CHECK_FALSE(c.verified());
}

TEST_CASE("bad documents are rejected") {
  CHECK_THROWS_AS(parse_json("{"), InvalidInput);
  CHECK_THROWS_AS(region_from_json(parse_json(R"({"kind":"blob"})")), InvalidInput);
  CHECK_THROWS_AS(region_from_json(parse_json(R"({"kind":"convex-polygon","vertices":[[0,0],[1,0]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(region_from_json(parse_json(R"({"kind":"convex-polygon","vertices":[[0,0],[0,1],[1,0]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(builtin_region("nonagon"), InvalidInput);
  CHECK_THROWS_AS(builtin_region("comb:1"), InvalidInput);
}

TEST_CASE("svg rendering") {
  fixtures::Named tri = fixtures::placement("triangle");
  std::string svg = render_svg(region_of(tri.region), tri.guards, {});
  CHECK(count(svg, "class=\"guard\"") == 10);
  CHECK(count(svg, "class=\"dark-ray\"") == 0);

  fixtures::Named sq = fixtures::placement("square");
  RenderOptions rays;
  rays.dark_rays = true;
  CHECK(count(render_svg(region_of(sq.region), sq.guards, rays), "class=\"dark-ray\"") == 182);

  rays.zoom = parse_zoom("-1,-1,0,0");
  std::string zoomed = render_svg(region_of(sq.region), sq.guards, rays);
  CHECK(count(zoomed, "class=\"dark-ray\"") < 182);
  CHECK_THROWS_AS(parse_zoom("1,2,3"), InvalidInput);
  CHECK_THROWS_AS(parse_zoom("0,0,0,1"), InvalidInput);

  fixtures::Named w = fixtures::placement("wedge");
  CHECK(count(render_svg(region_of(w.region), w.guards, {}), "<circle") == 10);
}

TEST_CASE("cli construct") {
  struct Case {
    std::string shape;
    int k;
    std::size_t guards;
  };
  for (const Case& c : {Case{"triangle", 9, 10}, Case{"square", 13, 14}, Case{"wedge", 3, 4}, Case{"pentagon", 3, 3}}) {
    INFO(c.shape);
    Run r = cli("construct --shape builtin:" + c.shape + " --k " + std::to_string(c.k));
    REQUIRE(r.status == 0);
    PlacementDocument doc = parse_placement(r.out);
    CHECK(doc.guards.size() == c.guards);
    CHECK(doc.certificate->min_depth >= c.k);
    CHECK(doc.metadata["k"] == c.k);
  }
  Run comb = cli("construct --shape builtin:comb:3 --k 4 --format text");
  CHECK(comb.status == 0);
  CHECK(comb.out.find("verified: true") != std::string::npos);

  std::string region = write_temp("hexagon.json", to_json(builtin_region("hexagon")).dump());
  Run file = cli("construct --shape " + region + " --k 8");
  CHECK(file.status == 0);
  CHECK(parse_placement(file.out).guards.size() == 9);
}

TEST_CASE("cli verify") {
  for (const std::string& name : {"triangle", "square", "wedge"}) {
    std::string path = write_temp(name + ".json", cli("fixture " + name).out);
    Run r = cli("verify --placement " + path + " --j 2");
    CHECK(r.status == 0);
    CHECK(parse_json(r.out)["has_j_dark"] == false);
  }
  for (const std::string& name : {"triangle-table", "wedge-table"}) {
    std::string path = write_temp(name + ".json", cli("fixture " + name).out);
    Run r = cli("verify --placement " + path + " --j 2");
    CHECK(r.status == 2);
    CHECK(parse_json(r.out)["j_dark_witnesses"].size() >= 1);
  }

  // Pull one square guard onto the line through two interior guards.
  fixtures::Named sq = fixtures::placement("square");
  std::vector<Point2> pts(sq.guards.points().begin(), sq.guards.points().end());
  const ConvexPolygon& poly = std::get<ConvexPolygon>(sq.region);
  std::vector<std::size_t> inner;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (contains(ConvexRegion(poly), pts[i], Boundary::Open)) inner.push_back(i);
  REQUIRE(inner.size() >= 3);
  pts[inner[2]] = midpoint(pts[inner[0]], pts[inner[1]]);
  PlacementDocument moved{poly, GuardSet(pts), Json::object(), std::nullopt};
  std::string path = write_temp("square-moved.json", serialize(moved));
  Run r = cli("verify --placement " + path + " --j 2");
  CHECK(r.status == 2);
  Json cert = parse_json(r.out);
  CHECK(cert["has_j_dark"] == true);
  Point2 w = point_from_json(cert["j_dark_witnesses"][0]["point"]);
  CHECK(darkness_at(GuardSet(pts), w).darkness >= 2);

  Run sampled = cli("verify --placement " + path + " --mode sample --k 2 --grid 8");
  CHECK(sampled.status == 0);
  CHECK(parse_json(sampled.out)["mode"] == "sampled");
}

TEST_CASE("cli errors") {
  Run r = cli("construct --shape builtin:nonagon --k 3");
  CHECK(r.status == 1);
  CHECK(parse_json(last_stderr())["error"] == "invalid-input");

  std::string comb = write_temp("comb.json", cli("construct --shape builtin:comb:2 --k 2").out);
  r = cli("verify --placement " + comb + " --mode exact");
  CHECK(r.status == 1);
  CHECK(parse_json(last_stderr())["error"] == "unsupported-mode");

  std::string wedge = write_temp("wedge-fixture.json", cli("fixture wedge").out);
  r = cli("verify --placement " + wedge + " --mode sample");
  CHECK(r.status == 1);
  CHECK(parse_json(last_stderr())["error"] == "unsupported-mode");

  r = cli("construct --k 3");
  CHECK(r.status == 1);
  CHECK(parse_json(last_stderr())["error"] == "usage");

  r = cli("render --placement " + wedge + " --zoom 1,2");
  CHECK(r.status == 1);
  r = cli("render --placement " + wedge + " --show-dark-rays");
  CHECK(r.status == 0);
  CHECK(count(r.out, "<circle") == 10);
}
