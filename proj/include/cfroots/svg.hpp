#pragma once

#include <string>
#include <vector>

#include "cfroots/solver.hpp"

namespace cfroots {

/// Collects the boxes visited by a solve run for plotting.
struct PlotTrace {
    std::vector<TraceEvent> events;
    TraceSink sink() {
        return [this](const TraceEvent& ev) { events.push_back(ev); };
    }
};

/// SVG 1.1 plot of a planar run: domain outline, excluded boxes, kept
/// (subdivided / depth-limited) boxes, and the isolating boxes highlighted
/// with class "solution".  Only n = 2 is supported.
std::string render_svg(const DomainBox& domain, const std::vector<TraceEvent>& events,
                       const std::vector<IsolationResult>& results, int width = 640);

}  // namespace cfroots
