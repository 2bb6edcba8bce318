#include "unifd/stencil.hpp"

namespace unifd {

StencilKind parse_stencil_kind(std::string_view name) {
  if (name == "left") return StencilKind::left;
  if (name == "right") return StencilKind::right;
  if (name == "central") return StencilKind::central;
  if (name == "shifted") return StencilKind::shifted;
  if (name == "staggered") return StencilKind::staggered;
  throw std::invalid_argument("unknown stencil kind '" + std::string(name) + "'");
}

std::string_view stencil_kind_name(StencilKind kind) {
  switch (kind) {
    case StencilKind::left: return "left";
    case StencilKind::right: return "right";
    case StencilKind::central: return "central";
    case StencilKind::shifted: return "shifted";
    case StencilKind::staggered: return "staggered";
  }
  return "?";
}

RenderFormat parse_render_format(std::string_view name) {
  if (name == "human") return RenderFormat::human;
  if (name == "json") return RenderFormat::json;
  if (name == "csv") return RenderFormat::csv;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

}  // namespace unifd
