#pragma once

#include "darkgallery/documents.hpp"

#include <array>
#include <optional>
#include <string>

namespace darkgallery {

struct RenderOptions {
  bool dark_rays = false;
  // xmin, ymin, xmax, ymax in region coordinates; default frames everything.
  std::optional<std::array<double, 4>> zoom;
  double width = 800;
};

// Doubles are used here only; nothing drawn feeds back into a decision.
std::string render_svg(const Region& region, const GuardSet& guards, const RenderOptions& options = {});

std::array<double, 4> parse_zoom(const std::string& text);

}  // namespace darkgallery
