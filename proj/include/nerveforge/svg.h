#pragma once

#include <string>

#include "nerveforge/geometry.h"
#include "nerveforge/partition.h"

namespace nerveforge {

// Renders planar points and the convex hulls of the partition classes as an
// 800x800 SVG: one fixed palette color per part, hulls as filled polygons with
// fixed opacity, every point labeled by its index. Byte output is a pure
// function of the inputs. Input must already be planar; project first
// otherwise.
std::string svg_figure(const PointSet& ps, const Partition& part);

void emit_svg(const PointSet& ps, const Partition& part, const std::string& path);

}  // namespace nerveforge
