#include "orthantgeo/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace og {

namespace {

struct LineAB {
    double a0, a1, b;  // a0 x + a1 y = b
    bool cone;
    std::string label;
};

// clip an infinite line to a rectangle; returns false when it misses
bool clip_line(const LineAB& l, double x0, double x1, double y0, double y1, double& px,
               double& py, double& qx, double& qy) {
    std::vector<std::pair<double, double>> pts;
    auto push = [&](double x, double y) {
        if (x >= x0 - 1e-9 && x <= x1 + 1e-9 && y >= y0 - 1e-9 && y <= y1 + 1e-9)
            pts.push_back({x, y});
    };
    if (std::abs(l.a1) > 1e-12) {
        push(x0, (l.b - l.a0 * x0) / l.a1);
        push(x1, (l.b - l.a0 * x1) / l.a1);
    }
    if (std::abs(l.a0) > 1e-12) {
        push((l.b - l.a1 * y0) / l.a0, y0);
        push((l.b - l.a1 * y1) / l.a0, y1);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](auto& a, auto& b) {
                              return std::abs(a.first - b.first) < 1e-9 &&
                                     std::abs(a.second - b.second) < 1e-9;
                          }),
              pts.end());
    if (pts.size() < 2) return false;
    px = pts.front().first;
    py = pts.front().second;
    qx = pts.back().first;
    qy = pts.back().second;
    return true;
}

}  // namespace

std::string render_svg(const HalfspaceSystem& sys, const VerificationReport* report) {
    if (sys.dimension > 2) throw std::invalid_argument("render_svg: dimension must be 1 or 2");

    std::vector<LineAB> lines;
    for (const auto& row : sys.arrangement) {
        LineAB l{row.coeffs[0].to_double(), sys.dimension == 2 ? row.coeffs[1].to_double() : 0.0,
                 row.rhs.to_double(), false, row.label};
        if (sys.dimension == 1) {
            // render the 1d arrangement point x = b/a as a vertical line
            l.a1 = 0.0;
        }
        lines.push_back(l);
    }
    for (const auto& cr : sys.cone) {
        LineAB l{cr.row.coeffs[0].to_double(),
                 sys.dimension == 2 ? cr.row.coeffs[1].to_double() : 0.0,
                 cr.row.rhs.to_double(), true, ""};
        lines.push_back(l);
    }

    // viewport: witnesses plus pairwise line meets, padded
    double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
    auto grow = [&](double x, double y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    };
    if (report)
        for (const auto& [sv, w] : report->witnesses)
            grow(w[0].to_double(), sys.dimension == 2 ? w[1].to_double() : 0.0);
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const double det = lines[i].a0 * lines[j].a1 - lines[j].a0 * lines[i].a1;
            if (std::abs(det) < 1e-12) continue;
            const double mx = (lines[i].b * lines[j].a1 - lines[j].b * lines[i].a1) / det;
            const double my = (lines[i].a0 * lines[j].b - lines[j].a0 * lines[i].b) / det;
            if (std::abs(mx) < 1e4 && std::abs(my) < 1e4) grow(mx, my);
        }
    const double padx = 0.15 * (x1 - x0) + 1e-6, pady = 0.15 * (y1 - y0) + 1e-6;
    x0 -= padx;
    x1 += padx;
    y0 -= pady;
    y1 += pady;

    const double w = 720, h = 540;
    const double sx = w / (x1 - x0), sy = h / (y1 - y0);
    auto tx = [&](double x) { return (x - x0) * sx; };
    auto ty = [&](double y) { return h - (y - y0) * sy; };

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
    svg << "<rect width='100%' height='100%' fill='white'/>\n";
    for (const auto& l : lines) {
        double px, py, qx, qy;
        bool hit;
        if (sys.dimension == 1 && !l.cone) {
            px = qx = l.b / (l.a0 == 0 ? 1 : l.a0);
            py = y0;
            qy = y1;
            hit = true;
        } else {
            hit = clip_line(l, x0, x1, y0, y1, px, py, qx, qy);
        }
        if (!hit) continue;
        svg << "<line x1='" << tx(px) << "' y1='" << ty(py) << "' x2='" << tx(qx) << "' y2='"
            << ty(qy) << "' stroke='" << (l.cone ? "#c0392b" : "#2c3e50") << "'"
            << (l.cone ? " stroke-dasharray='6,4'" : "") << " stroke-width='1.4'/>\n";
        if (!l.label.empty())
            svg << "<text x='" << tx(px) + 4 << "' y='" << ty(py) - 4
                << "' font-size='12' fill='#2c3e50'>" << l.label << "</text>\n";
    }
    if (report) {
        const int n = sys.universe.size();
        for (const auto& [sv, wit] : report->witnesses) {
            const double px = wit[0].to_double();
            const double py = sys.dimension == 2 ? wit[1].to_double() : 0.0;
            svg << "<circle cx='" << tx(px) << "' cy='" << ty(py) << "' r='2.5' fill='#27ae60'/>\n";
            svg << "<text x='" << tx(px) + 4 << "' y='" << ty(py) + 4
                << "' font-size='10' fill='#27ae60'>" << sign_vector_str(sv, n) << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace og
