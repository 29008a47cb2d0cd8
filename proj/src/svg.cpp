#include "nerveforge/svg.h"

#include <cstdio>
#include <sstream>

#include "nerveforge/errors.h"
#include "nerveforge/io.h"

namespace nerveforge {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 48.0;

const char* kPalette[] = {
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2",
    "#edc948", "#9c755f", "#ff9da7", "#86bcb6", "#d37295", "#8cd17d",
};
constexpr int kPaletteSize = 12;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct Mapper {
    double min_x, min_y, scale;
    double x(const Rat& v) const { return kMargin + (v.get_d() - min_x) * scale; }
    // flip so larger y is up, as on paper
    double y(const Rat& v) const { return kCanvas - kMargin - (v.get_d() - min_y) * scale; }
};

Mapper fit(const PointSet& ps) {
    Rat min_x = ps[0][0], max_x = ps[0][0], min_y = ps[0][1], max_y = ps[0][1];
    for (const Point& p : ps.points) {
        if (p[0] < min_x) min_x = p[0];
        if (p[0] > max_x) max_x = p[0];
        if (p[1] < min_y) min_y = p[1];
        if (p[1] > max_y) max_y = p[1];
    }
    double w = Rat(max_x - min_x).get_d();
    double h = Rat(max_y - min_y).get_d();
    double span = w > h ? w : h;
    if (span <= 0.0) span = 1.0;
    return {min_x.get_d(), min_y.get_d(), (kCanvas - 2 * kMargin) / span};
}

}  // namespace

std::string svg_figure(const PointSet& ps, const Partition& part) {
    ps.validate();
    if (ps.dim != 2) throw DimensionError("svg output needs planar points; project first");
    if (ps.size() == 0) throw PreconditionError("nothing to draw");
    if (part.part_count() == 0) throw PartitionError("empty partition");
    part.validate(ps);

    Mapper m = fit(ps);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" "
           "width=\"800\" height=\"800\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

    for (int k = 0; k < part.part_count(); ++k) {
        const char* color = kPalette[k % kPaletteSize];
        IndexList hull = hull_ccw_2d(ps, part.parts[k]);
        if ((int)hull.size() >= 3) {
            out << "<polygon points=\"";
            for (size_t i = 0; i < hull.size(); ++i) {
                if (i) out << " ";
                out << fmt(m.x(ps[hull[i]][0])) << "," << fmt(m.y(ps[hull[i]][1]));
            }
            out << "\" fill=\"" << color << "\" fill-opacity=\"0.35\" stroke=\"" << color
                << "\" stroke-width=\"1.5\"/>\n";
        } else if ((int)hull.size() == 2) {
            out << "<line x1=\"" << fmt(m.x(ps[hull[0]][0])) << "\" y1=\""
                << fmt(m.y(ps[hull[0]][1])) << "\" x2=\"" << fmt(m.x(ps[hull[1]][0]))
                << "\" y2=\"" << fmt(m.y(ps[hull[1]][1])) << "\" stroke=\"" << color
                << "\" stroke-width=\"2.5\" stroke-opacity=\"0.6\"/>\n";
        } else if (!part.parts[k].empty()) {
            Index only = part.parts[k][0];
            out << "<circle cx=\"" << fmt(m.x(ps[only][0])) << "\" cy=\""
                << fmt(m.y(ps[only][1])) << "\" r=\"9.000000\" fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.5\"/>\n";
        }
    }

    for (int i = 0; i < ps.size(); ++i) {
        int k = part.part_of(i);
        const char* color = kPalette[k % kPaletteSize];
        double px = m.x(ps[i][0]);
        double py = m.y(ps[i][1]);
        out << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py) << "\" r=\"3.500000\" fill=\""
            << color << "\"/>\n";
        out << "<text x=\"" << fmt(px + 6.0) << "\" y=\"" << fmt(py - 6.0)
            << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#333333\">" << i
            << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

void emit_svg(const PointSet& ps, const Partition& part, const std::string& path) {
    write_file(path, svg_figure(ps, part));
}

}  // namespace nerveforge
