#pragma once

#include <string>

#include <staircase/partition.hpp>

namespace staircase
{

// Grid of width lambda_1 + 2 and height num_parts + 1, top row first:
// `*` for cells of the Ferrers diagram, `x` for cells of the ideal. With
// `with_closure` the closure is drawn to the right in the same box.
std::string render_ascii(const Partition &lambda, bool with_closure = false);

// Same layout as an SVG document: 20px cells, origin bottom-left, dots for
// the diagram and crosses for the ideal.
std::string render_svg(const Partition &lambda, bool with_closure = false);

} // namespace staircase
