#include "cfroots/svg.hpp"

#include <sstream>

namespace cfroots {

namespace {

double to_double(const Rational& q) { return q.get_d(); }

struct Mapper {
    double x0, y0, sx, sy;
    double h;
    double X(const Rational& x) const { return (to_double(x) - x0) * sx; }
    double Y(const Rational& y) const { return h - (to_double(y) - y0) * sy; }
};

void rect(std::ostringstream& os, const Mapper& m, const DomainBox& box,
          const std::string& cls) {
    if (!box.bounded()) return;
    double x = m.X(box.axes[0].lo);
    double y = m.Y(*box.axes[1].hi);
    double w = m.X(*box.axes[0].hi) - x;
    double h = m.Y(box.axes[1].lo) - y;
    const double eps = 0.75;  // keep degenerate boxes visible
    if (w < eps) w = eps;
    if (h < eps) h = eps;
    os << "  <rect class=\"" << cls << "\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
       << "\" height=\"" << h << "\"/>\n";
}

}  // namespace

std::string render_svg(const DomainBox& domain, const std::vector<TraceEvent>& events,
                       const std::vector<IsolationResult>& results, int width) {
    if (domain.nvars() != 2)
        throw std::invalid_argument("SVG output is only available for two variables");
    if (!domain.bounded())
        throw std::invalid_argument("SVG output needs a bounded domain");

    double x0 = to_double(domain.axes[0].lo), x1 = to_double(*domain.axes[0].hi);
    double y0 = to_double(domain.axes[1].lo), y1 = to_double(*domain.axes[1].hi);
    double w = static_cast<double>(width);
    double h = w * (y1 - y0) / (x1 - x0);
    Mapper m{x0, y0, w / (x1 - x0), h / (y1 - y0), h};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "  <style>\n"
          "    .domain { fill: none; stroke: #333; stroke-width: 1.5; }\n"
          "    .excluded { fill: #e8e8e8; stroke: #bbb; stroke-width: 0.4; }\n"
          "    .kept { fill: #fff3d6; stroke: #d0a040; stroke-width: 0.4; }\n"
          "    .solution { fill: #ff3030; fill-opacity: 0.65; stroke: #900; stroke-width: 1; }\n"
          "  </style>\n";
    for (const auto& ev : events)
        if (ev.outcome == TraceEvent::Outcome::Excluded ||
            ev.outcome == TraceEvent::Outcome::PointAccounted)
            rect(os, m, ev.box, "excluded");
    for (const auto& ev : events)
        if (ev.outcome == TraceEvent::Outcome::DepthLimit) rect(os, m, ev.box, "kept");
    for (const auto& r : results)
        if (r.certificate != Certificate::DepthLimit) rect(os, m, r.box, "solution");
    DomainBox outline = domain;
    rect(os, m, outline, "domain");
    os << "</svg>\n";
    return os.str();
}

}  // namespace cfroots
