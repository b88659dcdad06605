#include "darkgallery/construct_convex.hpp"
#include "darkgallery/construct_simple.hpp"
#include "darkgallery/documents.hpp"
#include "darkgallery/errors.hpp"
#include "darkgallery/fixtures.hpp"
#include "darkgallery/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace darkgallery;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

struct Shape {
  std::string spec;
  Region region;
  std::optional<int> comb_spikes;
};

Shape load_shape(const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) {
    std::string name = spec.substr(prefix.size());
    Shape s{spec, builtin_region(name), std::nullopt};
    if (name.rfind("comb:", 0) == 0) s.comb_spikes = std::stoi(name.substr(5));
    return s;
  }
  return {spec, region_from_json(parse_json(read_file(spec))), std::nullopt};
}

Sampler make_sampler(int grid, std::optional<std::uint64_t> seed, std::size_t count) {
  if (count > 0) return Sampler::random(seed.value_or(0), count);
  return Sampler::grid(grid);
}

std::string certificate_text(const CertificateDocument& c) {
  std::ostringstream out;
  out << "mode: " << c.mode << "\nguards: " << c.guard_count << "\n";
  if (c.mode == "exact") {
    out << "min_depth: " << c.min_depth << "\nmax_darkness: " << c.max_darkness << "\n";
    if (c.witness) out << "witness: (" << to_string(c.witness->point.x) << ", " << to_string(c.witness->point.y) << ")\n";
    if (c.j) {
      out << "has_" << *c.j << "_dark: " << (c.has_j_dark.value_or(false) ? "true" : "false") << "\n";
      for (const auto& w : c.j_dark_witnesses)
        out << "j_dark_witness: (" << to_string(w.point.x) << ", " << to_string(w.point.y) << ") darkness "
            << w.darkness << "\n";
    }
  } else {
    out << "samples: " << c.sample_count << "\nmin_sampled_depth: " << c.min_sampled_depth << "\n"
        << "failing_samples: " << c.failing_samples.size() << "\n";
  }
  out << "verified: " << (c.verified() ? "true" : "false") << "\n";
  return out.str();
}

int run_construct(const std::string& shape_spec, int k, std::optional<std::uint64_t> seed, const std::string& out,
                  const std::string& format, int grid, const std::string& arc_offset, bool no_stagger) {
  Shape shape = load_shape(shape_spec);
  PlacementDocument doc{shape.region, GuardSet{}, Json::object(), std::nullopt};
  doc.metadata["shape"] = shape.spec;
  doc.metadata["k"] = k;
  doc.metadata["seed"] = seed ? Json(*seed) : Json();

  if (const auto* poly = std::get_if<ConvexPolygon>(&shape.region)) {
    Construction c = construct(*poly, k);
    doc.guards = c.guards;
    doc.metadata["construction"] = std::string("convex/") + regime_name(c.plan.regime);
    doc.certificate = exact_certificate(*poly, doc.guards, std::nullopt, k);
  } else if (const auto* wedge = std::get_if<Wedge>(&shape.region)) {
    doc.guards = place_wedge(*wedge, k);
    doc.metadata["construction"] = "wedge";
    doc.certificate = exact_certificate(*wedge, doc.guards, std::nullopt, k);
  } else {
    const auto& simple = std::get<SimplePolygon>(shape.region);
    if (shape.comb_spikes) {
      doc.guards = comb_cover(make_comb(*shape.comb_spikes), k, !no_stagger);
      doc.metadata["construction"] = no_stagger ? "comb-unstaggered" : "comb";
    } else {
      doc.guards = fisk_cover(simple, k, parse_rat(arc_offset));
      doc.metadata["construction"] = "fisk";
      doc.metadata["arc_offset"] = to_json(parse_rat(arc_offset));
    }
    doc.certificate = sampled_certificate(simple, doc.guards, make_sampler(grid, seed, 0), k);
  }
  doc.metadata["guard_count"] = doc.guards.size();
  write_output(out, format == "text" ? certificate_text(*doc.certificate) : serialize(doc));
  return doc.certificate->verified() ? 0 : 2;
}

int run_verify(const std::string& region_spec, const std::string& guards_path, const std::string& placement_path,
               std::optional<int> j, std::optional<int> k, std::string mode, int grid,
               std::optional<std::uint64_t> seed, std::size_t count, const std::string& out,
               const std::string& format) {
  std::optional<Region> region;
  std::optional<GuardSet> guards;
  if (!placement_path.empty()) {
    PlacementDocument doc = parse_placement(read_file(placement_path));
    region = doc.region;
    guards = doc.guards;
  }
  if (!region_spec.empty()) region = load_shape(region_spec).region;
  if (!guards_path.empty()) guards = guards_from_json(parse_json(read_file(guards_path)));
  if (!region || !guards) throw InvalidInput("verify needs a region and guards (--region/--guards or --placement)");

  if (mode.empty()) mode = std::holds_alternative<SimplePolygon>(*region) ? "sample" : "exact";
  CertificateDocument cert;
  if (mode == "exact") {
    auto convex = as_convex(*region);
    if (!convex) throw UnsupportedMode("exact verification needs a convex polygon or wedge; use --mode sample");
    cert = exact_certificate(*convex, *guards, j, k);
  } else if (mode == "sample") {
    auto simple = as_simple(*region);
    if (!simple) throw UnsupportedMode("sampling needs a bounded polygon; use --mode exact for wedges");
    if (j) throw UnsupportedMode("--j needs exact mode");
    cert = sampled_certificate(*simple, *guards, make_sampler(grid, seed, count), k);
  } else {
    throw InvalidInput("unknown mode \"" + mode + "\"");
  }
  write_output(out, format == "text" ? certificate_text(cert) : serialize(cert));
  return cert.verified() ? 0 : 2;
}

int run_render(const std::string& placement_path, const std::string& out, bool rays, const std::string& zoom,
               double width) {
  PlacementDocument doc = parse_placement(read_file(placement_path));
  RenderOptions opt;
  opt.dark_rays = rays;
  opt.width = width;
  if (!zoom.empty()) opt.zoom = parse_zoom(zoom);
  write_output(out, render_svg(doc.region, doc.guards, opt));
  return 0;
}

int run_fixture(const std::string& name, const std::string& out) {
  fixtures::Named f = fixtures::placement(name);
  PlacementDocument doc{std::visit([](const auto& r) -> Region { return r; }, f.region), f.guards, Json::object(),
                        std::nullopt};
  doc.metadata["construction"] = "fixture/" + name;
  doc.certificate = exact_certificate(f.region, f.guards, 2);
  write_output(out, serialize(doc));
  return 0;
}

void print_error(const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guard placements where guards block each other's view"};
  app.require_subcommand(1);
  std::string format = "json", out;

  auto* construct_cmd = app.add_subcommand("construct", "place guards for depth k and certify them");
  std::string shape;
  int k = 0, grid = 32;
  std::optional<std::uint64_t> seed;
  std::string arc_offset = "1/8";
  bool no_stagger = false;
  construct_cmd->add_option("--shape", shape, "region file or builtin:NAME")->required();
  construct_cmd->add_option("--k", k, "coverage depth")->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--seed", seed, "seed recorded in metadata; also seeds sampling");
  construct_cmd->add_option("--out", out, "output file (default stdout)");
  construct_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  construct_cmd->add_option("--grid", grid, "sampling grid resolution for simple polygons");
  construct_cmd->add_option("--arc-offset", arc_offset, "how far into a cone the arc sits (fisk)");
  construct_cmd->add_flag("--no-stagger", no_stagger, "comb: put every arc on the same curve");

  auto* verify_cmd = app.add_subcommand("verify", "certify depth and darkness of a guard set");
  std::string region_spec, guards_path, placement_path, mode;
  std::optional<int> j, vk;
  std::size_t count = 0;
  verify_cmd->add_option("--region", region_spec, "region file or builtin:NAME");
  verify_cmd->add_option("--guards", guards_path, "guard list or placement file");
  verify_cmd->add_option("--placement", placement_path, "placement file with region and guards");
  verify_cmd->add_option("--j", j, "report whether a j-dark point exists")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--k", vk, "required depth")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--mode", mode, "exact or sample")->check(CLI::IsMember({"exact", "sample"}));
  verify_cmd->add_option("--grid", grid, "grid resolution for sampling");
  verify_cmd->add_option("--seed", seed, "seed for random sampling");
  verify_cmd->add_option("--count", count, "random sample count (switches from grid to random)");
  verify_cmd->add_option("--out", out, "output file (default stdout)");
  verify_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* render_cmd = app.add_subcommand("render", "draw a placement as SVG");
  bool rays = false;
  std::string zoom;
  double width = 800;
  render_cmd->add_option("--placement", placement_path, "placement file")->required();
  render_cmd->add_option("--out", out, "SVG file (default stdout)");
  render_cmd->add_flag("--show-dark-rays", rays, "draw every dark ray");
  render_cmd->add_option("--zoom", zoom, "xmin,ymin,xmax,ymax");
  render_cmd->add_option("--width", width, "image width in pixels")->check(CLI::PositiveNumber);

  auto* fixture_cmd = app.add_subcommand("fixture", "emit a stored guard placement");
  std::string fixture_name;
  fixture_cmd->add_option("name", fixture_name, "fixture name")
      ->required()
      ->check(CLI::IsMember(fixtures::placement_names()));
  fixture_cmd->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return 1;
  }

  try {
    if (*construct_cmd) return run_construct(shape, k, seed, out, format, grid, arc_offset, no_stagger);
    if (*verify_cmd)
      return run_verify(region_spec, guards_path, placement_path, j, vk, mode, grid, seed, count, out, format);
    if (*render_cmd) return run_render(placement_path, out, rays, zoom, width);
    if (*fixture_cmd) return run_fixture(fixture_name, out);
  } catch (const Error& e) {
    print_error(e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 1;
  }
  return 1;
}
