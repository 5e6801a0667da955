#include <staircase/render.hpp>

#include <sstream>
#include <vector>

#include <staircase/closure.hpp>

namespace staircase
{

namespace
{

constexpr int cell = 20;

struct Box {
    Part width;
    Part height;
};

Box box_of(const Partition &lambda)
{
    return {lambda.largest() + 2, static_cast<Part>(lambda.num_parts()) + 1};
}

bool in_diagram(const Partition &lambda, Part a, Part b)
{
    return a < lambda.part(static_cast<std::size_t>(b) + 1);
}

std::vector<Partition> panels(const Partition &lambda, bool with_closure)
{
    std::vector<Partition> out{lambda};
    if (with_closure) {
        out.push_back(integral_closure(lambda));
    }
    return out;
}

} // namespace

std::string render_ascii(const Partition &lambda, bool with_closure)
{
    const auto box = box_of(lambda);
    const auto shown = panels(lambda, with_closure);
    std::string out;
    for (Part b = box.height - 1; b >= 0; --b) {
        for (std::size_t p = 0; p < shown.size(); ++p) {
            if (p > 0) {
                out += "    ";
            }
            for (Part a = 0; a < box.width; ++a) {
                if (a > 0) {
                    out += ' ';
                }
                out += in_diagram(shown[p], a, b) ? '*' : 'x';
            }
        }
        out += '\n';
    }
    return out;
}

std::string render_svg(const Partition &lambda, bool with_closure)
{
    const auto box = box_of(lambda);
    const auto shown = panels(lambda, with_closure);
    const auto panel_width = (box.width + 1) * cell;
    const auto width = static_cast<Part>(shown.size()) * panel_width + cell;
    const auto height = (box.height + 1) * cell;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (std::size_t p = 0; p < shown.size(); ++p) {
        // Lattice point (a, b) sits at the centre of its cell; b grows upwards.
        const auto x0 = cell + static_cast<Part>(p) * panel_width;
        const auto y0 = height - cell;
        auto cx = [&](Part a) { return x0 + a * cell + cell / 2; };
        auto cy = [&](Part b) { return y0 - b * cell - cell / 2; };
        svg << "  <g id=\"panel" << p << "\" data-partition=\"" << shown[p].to_string() << "\">\n";
        svg << "    <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 + box.width * cell << "\" y2=\"" << y0
            << "\" stroke=\"black\"/>\n";
        svg << "    <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y0 - box.height * cell
            << "\" stroke=\"black\"/>\n";
        for (Part b = 0; b < box.height; ++b) {
            for (Part a = 0; a < box.width; ++a) {
                if (in_diagram(shown[p], a, b)) {
                    svg << "    <circle cx=\"" << cx(a) << "\" cy=\"" << cy(b) << "\" r=\"4\" fill=\"black\"/>\n";
                } else {
                    const int h = 4;
                    svg << "    <path d=\"M" << cx(a) - h << ' ' << cy(b) - h << " L" << cx(a) + h << ' '
                        << cy(b) + h << " M" << cx(a) - h << ' ' << cy(b) + h << " L" << cx(a) + h << ' '
                        << cy(b) - h << "\" stroke=\"black\"/>\n";
                }
            }
        }
        svg << "  </g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace staircase
