#include "cfroots/json_io.hpp"

#include <json.hpp>

namespace cfroots {

namespace {

nlohmann::json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

std::string results_to_json(const std::vector<std::string>& variables,
                            const std::vector<IsolationResult>& results,
                            const SolveStats& stats) {
    nlohmann::json doc;
    doc["version"] = "1";
    doc["variables"] = variables;
    auto reported = report_roots(results);
    nlohmann::json boxes = nlohmann::json::array();
    for (const auto& r : reported) {
        nlohmann::json b;
        nlohmann::json lower = nlohmann::json::array(), upper = nlohmann::json::array();
        for (const auto& axis : r.box.axes) {
            lower.push_back(rational_json(axis.lo));
            upper.push_back(axis.hi ? rational_json(*axis.hi) : nlohmann::json("inf"));
        }
        b["lower"] = lower;
        b["upper"] = upper;
        b["certificate"] = to_string(r.certificate);
        nlohmann::json cf = nlohmann::json::array();
        for (const auto& quots : r.cf_quotients) {
            nlohmann::json axis_cf = nlohmann::json::array();
            for (const auto& q : quots) axis_cf.push_back(to_string(q));
            cf.push_back(axis_cf);
        }
        b["cf"] = cf;
        nlohmann::json exact = nlohmann::json::array();
        for (bool e : r.exact) exact.push_back(e);
        b["exact"] = exact;
        boxes.push_back(b);
    }
    doc["boxes"] = boxes;
    doc["stats"] = {{"iterations", std::to_string(stats.iterations)},
                    {"subdivisions", std::to_string(stats.subdivisions)},
                    {"solutions", std::to_string(stats.solutions)},
                    {"excluded", std::to_string(stats.excluded)},
                    {"depth_limited", std::to_string(stats.depth_limited)},
                    {"reduction_shifts", std::to_string(stats.reduction_shifts)}};
    return doc.dump(2);
}

}  // namespace cfroots
