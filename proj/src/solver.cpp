#include "cfroots/solver.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <set>
#include <thread>

namespace cfroots {

void SolveStats::merge(const SolveStats& o) {
    iterations += o.iterations;
    subdivisions += o.subdivisions;
    events += o.events;
    solutions += o.solutions;
    excluded += o.excluded;
    depth_limited += o.depth_limited;
    reduction_shifts += o.reduction_shifts;
}

std::string to_string(Certificate c) {
    switch (c) {
        case Certificate::MirandaJacobian: return "miranda-jacobian";
        case Certificate::ExactPoint: return "exact-point";
        case Certificate::DepthLimit: return "depth-limit";
    }
    return "?";
}

bool SolveResult::clean() const {
    return std::none_of(results.begin(), results.end(), [](const IsolationResult& r) {
        return r.certificate == Certificate::DepthLimit;
    });
}

namespace {

using Point = std::vector<Rational>;

struct PointLess {
    bool operator()(const Point& a, const Point& b) const {
        for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
            if (a[k] < b[k]) return true;
            if (b[k] < a[k]) return false;
        }
        return a.size() < b.size();
    }
};

using PointSet = std::set<Point, PointLess>;

struct Shared {
    const std::vector<TensorPoly>* originals = nullptr;
    const TensorPoly* det_jac = nullptr;  // symbolic determinant when available
    SolveConfig cfg;
    const PointSet* points = nullptr;  // exact points emitted in earlier waves
};

std::vector<std::optional<Rational>> infinity_sides(const Homography& h) {
    std::vector<std::optional<Rational>> out;
    out.reserve(h.axes.size());
    for (const AxisMap& m : h.axes) out.push_back(m.image_of_infinity());
    return out;
}

DomainBox point_box(const Point& p) {
    DomainBox box;
    box.axes.reserve(p.size());
    for (const Rational& v : p) box.axes.push_back(AxisInterval{v, v});
    return box;
}

bool box_touches_point(const DomainBox& box, const Point& p) {
    return box.contains(p);
}

std::vector<CFExpansion> point_trace(const SystemState& st, const std::vector<Integer>& extra) {
    // CF prefix of the local point `extra`: closed quotients plus a final
    // quotient of pending + extra per axis.
    std::vector<CFExpansion> out = st.quotient_trace;
    for (std::size_t k = 0; k < out.size(); ++k) {
        Integer last = st.pending_shift[k] + extra[k];
        if (out[k].empty() || last >= 1) out[k].push_quotient(last);
    }
    return out;
}

// Composes T^c on one axis of the map only (the polynomials are shifted
// separately by shift_all).
void compose_translation(Homography& h, int axis, const Integer& c) {
    AxisMap& m = h.axes.at(static_cast<std::size_t>(axis));
    m.beta += c * m.alpha;
    m.delta += c * m.gamma;
}

/// Exact simplicity check at a rational point: det J_f(p) != 0.
bool simple_root_at(const std::vector<TensorPoly>& originals, const Point& p,
                    const TensorPoly* det_jac) {
    const std::size_t n = originals.size();
    if (originals.front().nvars() != static_cast<int>(n)) return false;
    if (det_jac != nullptr) return sgn(evaluate(*det_jac, p)) != 0;
    std::vector<std::vector<Rational>> jac(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            jac[i][j] = evaluate(partial_derivative(originals[i], static_cast<int>(j)), p);
    return invert_rational_matrix(std::move(jac)).has_value();
}

struct Outcome {
    SolveStats stats;
    std::vector<IsolationResult> results;
    std::vector<SystemState> children;
    std::vector<Point> emitted_points;
    std::vector<TraceEvent> trace;
};

void trace_terminal(Outcome& out, const SystemState& st, TraceEvent::Outcome kind,
                    std::optional<EmptyReason> reason) {
    out.trace.push_back(
        TraceEvent{kind, box_of(st.map), infinity_sides(st.map), reason, st.depth});
}

Outcome process_state(SystemState st, const Shared& shared) {
    Outcome out;
    out.stats.iterations = 1;
    const SolveConfig& cfg = shared.cfg;
    const int n = st.map.nvars();
    const bool square = static_cast<int>(st.polys.size()) == n;

    if (st.depth >= cfg.max_depth) {
        out.stats.depth_limited = 1;
        out.results.push_back(
            IsolationResult{box_of(st.map), Certificate::DepthLimit, st.quotient_trace});
        trace_terminal(out, st, TraceEvent::Outcome::DepthLimit, std::nullopt);
        return out;
    }

    bool zero_demoted = std::any_of(st.polys.begin(), st.polys.end(),
                                    [](const TensorPoly& f) { return f.is_zero(); });
    if (zero_demoted && std::all_of(st.polys.begin(), st.polys.end(),
                                    [](const TensorPoly& f) { return f.is_zero(); })) {
        // Identically zero system: every point solves it; depth reporting is
        // the only honest outcome.
        out.stats.depth_limited = 1;
        out.results.push_back(
            IsolationResult{box_of(st.map), Certificate::DepthLimit, st.quotient_trace});
        trace_terminal(out, st, TraceEvent::Outcome::DepthLimit, std::nullopt);
        return out;
    }

    if (cfg.use_precondition && square && !zero_demoted) precondition_system(st.polys);

    BoundsOptions bopts;
    bopts.strategy = cfg.lower_bound_strategy;
    bopts.upper_bounds = cfg.use_upper_bounds;

    if (cfg.use_reduction) {
        std::vector<Integer> l(static_cast<std::size_t>(n), Integer(0));
        bool excluded = false;
        std::optional<EmptyReason> reason;
        int wpoly = -1, waxis = -1;
        for (int k = 0; k < n && !excluded; ++k) {
            SystemBounds sb = system_bounds(st.polys, k, bopts);
            if (sb.sentinel) {
                excluded = true;
                reason = EmptyReason::BoundSentinel;
                wpoly = sb.witness_poly;
                waxis = k;
            } else if (sb.empty) {
                excluded = true;
                reason = EmptyReason::EmptyBoundsIntersection;
                waxis = k;
            } else {
                l[static_cast<std::size_t>(k)] = floor_rational(sb.mu);
            }
        }
        if (excluded) {
            (void)wpoly;
            (void)waxis;
            out.stats.excluded = 1;
            trace_terminal(out, st, TraceEvent::Outcome::Excluded, reason);
            return out;
        }
        bool any = std::any_of(l.begin(), l.end(), [](const Integer& v) { return v > 0; });
        if (any) {
            // A root exactly at the reduction point is caught before the
            // shift moves it onto the orthant boundary.
            bool vanish = square;
            for (const auto& f : st.polys)
                if (vanish && evaluate_int(f, l) != 0) vanish = false;
            if (vanish && square) {
                std::vector<Rational> lr(l.begin(), l.end());
                Point p = st.map.apply(lr);
                if (!shared.points->count(p) &&
                    simple_root_at(*shared.originals, p, shared.det_jac)) {
                    out.stats.solutions = 1;
                    out.results.push_back(IsolationResult{point_box(p), Certificate::ExactPoint,
                                                          point_trace(st, l)});
                    out.emitted_points.push_back(p);
                    out.trace.push_back(TraceEvent{TraceEvent::Outcome::ExactPoint, point_box(p),
                                                   infinity_sides(st.map), std::nullopt,
                                                   st.depth});
                }
            }
            for (auto& f : st.polys) f = shift_all(f, l);
            for (int k = 0; k < n; ++k) {
                auto ku = static_cast<std::size_t>(k);
                if (l[ku] == 0) continue;
                compose_translation(st.map, k, l[ku]);
                st.pending_shift[ku] += l[ku];
            }
            out.stats.reduction_shifts = 1;
        }
    }

    for (std::size_t i = 0; i < st.polys.size(); ++i) {
        if (sign_excludes(st.polys[i])) {
            out.stats.excluded = 1;
            trace_terminal(out, st, TraceEvent::Outcome::Excluded, EmptyReason::AllSameSign);
            return out;
        }
    }
    DomainBox box = box_of(st.map);
    if (box.bounded()) {
        std::vector<RatInterval> ivs;
        ivs.reserve(box.axes.size());
        for (const auto& axis : box.axes) ivs.emplace_back(axis.lo, *axis.hi);
        for (std::size_t i = 0; i < shared.originals->size(); ++i) {
            if (interval_evaluate((*shared.originals)[i], ivs).excludes_zero()) {
                out.stats.excluded = 1;
                trace_terminal(out, st, TraceEvent::Outcome::Excluded,
                               EmptyReason::IntervalSignConstant);
                return out;
            }
        }
    }

    if (square && !zero_demoted && box.bounded()) {
        bool jconst = jacobian_sign_constant(*shared.originals, box, shared.det_jac);
        if (jconst) {
            if (miranda_test(st.polys)) {
                out.stats.solutions = 1;
                out.results.push_back(
                    IsolationResult{box, Certificate::MirandaJacobian, st.quotient_trace});
                trace_terminal(out, st, TraceEvent::Outcome::Included, std::nullopt);
                return out;
            }
            for (const Point& p : *shared.points) {
                if (box_touches_point(box, p)) {
                    // At most one root here by the Jacobian sign, and that
                    // root is the already-reported exact point.
                    out.stats.excluded = 1;
                    trace_terminal(out, st, TraceEvent::Outcome::PointAccounted, std::nullopt);
                    return out;
                }
            }
        }
    }

    // Roots sitting exactly on the subdivision point are reported here; the
    // split would otherwise push them onto child boundaries for good.
    if (square && !zero_demoted) {
        std::vector<Integer> ones(static_cast<std::size_t>(n), Integer(1));
        bool vanish = true;
        for (const auto& f : st.polys)
            if (evaluate_int(f, ones) != 0) {
                vanish = false;
                break;
            }
        if (vanish) {
            std::vector<Rational> onesr(static_cast<std::size_t>(n), Rational(1));
            Point p = st.map.apply(onesr);
            if (!shared.points->count(p) && simple_root_at(*shared.originals, p, shared.det_jac)) {
                out.stats.solutions = 1;
                out.results.push_back(IsolationResult{point_box(p), Certificate::ExactPoint,
                                                      point_trace(st, ones)});
                out.emitted_points.push_back(p);
                out.trace.push_back(TraceEvent{TraceEvent::Outcome::ExactPoint, point_box(p),
                                               infinity_sides(st.map), std::nullopt, st.depth});
            }
        }
    }

    std::vector<Integer> ones(static_cast<std::size_t>(n), Integer(1));
    auto children = subdivide_at(st.polys, st.map, ones);
    out.stats.events = 1;
    out.stats.subdivisions = n;
    out.trace.push_back(TraceEvent{TraceEvent::Outcome::Subdivided, box_of(st.map),
                                   infinity_sides(st.map), std::nullopt, st.depth});
    out.children.reserve(children.size());
    for (auto& child : children) {
        SystemState cs;
        cs.polys = std::move(child.polys);
        cs.map = std::move(child.map);
        cs.depth = st.depth + 1;
        cs.quotient_trace = st.quotient_trace;
        cs.pending_shift = st.pending_shift;
        for (int k = 0; k < n; ++k) {
            auto ku = static_cast<std::size_t>(k);
            if (child.bits & (1u << k)) {
                cs.quotient_trace[ku].push_quotient(cs.pending_shift[ku]);
                cs.pending_shift[ku] = 1;
            } else {
                cs.pending_shift[ku] += 1;
            }
        }
        out.children.push_back(std::move(cs));
    }
    return out;
}

bool box_lower_less(const IsolationResult& a, const IsolationResult& b) {
    for (std::size_t k = 0; k < a.box.axes.size(); ++k) {
        if (a.box.axes[k].lo < b.box.axes[k].lo) return true;
        if (b.box.axes[k].lo < a.box.axes[k].lo) return false;
    }
    for (std::size_t k = 0; k < a.box.axes.size(); ++k) {
        const auto &ha = a.box.axes[k].hi, &hb = b.box.axes[k].hi;
        if (!ha && !hb) continue;
        if (!ha) return false;  // +inf sorts last
        if (!hb) return true;
        if (*ha < *hb) return true;
        if (*hb < *ha) return false;
    }
    return false;
}

}  // namespace

StepOutcome step(SystemState state, const std::vector<TensorPoly>& originals,
                 const SolveConfig& cfg) {
    Shared shared;
    shared.originals = &originals;
    shared.cfg = cfg;
    PointSet empty;
    shared.points = &empty;
    TensorPoly det;
    bool have_det = false;
    if (originals.size() == static_cast<std::size_t>(originals.front().nvars()) &&
        originals.size() <= 3) {
        det = jacobian_determinant(originals);
        have_det = true;
    }
    if (have_det) shared.det_jac = &det;

    Outcome out = process_state(std::move(state), shared);
    StepOutcome so;
    so.children = std::move(out.children);
    so.emitted = std::move(out.results);
    if (out.stats.depth_limited > 0) {
        so.kind = StepOutcome::Kind::DepthLimited;
    } else if (out.stats.excluded > 0) {
        so.kind = StepOutcome::Kind::Excluded;
    } else if (!so.children.empty()) {
        so.kind = out.stats.solutions > 0 ? StepOutcome::Kind::ExactPointAndChildren
                                          : StepOutcome::Kind::Children;
    } else {
        so.kind = StepOutcome::Kind::Included;
    }
    return so;
}

SolveResult solve(const std::vector<TensorPoly>& system, const DomainBox& domain,
                  const SolveConfig& cfg, const TraceSink& trace) {
    if (system.empty()) throw std::invalid_argument("empty system");
    const int n = system.front().nvars();
    for (const auto& f : system)
        if (f.nvars() != n) throw std::invalid_argument("inconsistent variable count");
    if (domain.nvars() != n) throw std::invalid_argument("domain arity mismatch");

    std::vector<TensorPoly> originals = system;
    DomainBox start = domain;
    if (cfg.spread > 0) {
        originals = scale_spread(originals, cfg.spread);
        Integer scale = pow_int(Integer(2), cfg.spread);
        for (auto& axis : start.axes) {
            axis.lo *= Rational(scale);
            if (axis.hi) *axis.hi *= Rational(scale);
        }
    }

    TensorPoly det;
    const TensorPoly* det_ptr = nullptr;
    if (static_cast<int>(originals.size()) == n && n <= 3) {
        det = jacobian_determinant(originals);
        det_ptr = &det;
    }

    Homography h0 = for_box(start);
    SystemState root;
    root.map = h0;
    root.depth = 0;
    root.quotient_trace.assign(static_cast<std::size_t>(n), CFExpansion{});
    root.pending_shift.assign(static_cast<std::size_t>(n), Integer(0));
    root.polys.reserve(originals.size());
    for (const auto& f : originals) root.polys.push_back(transform_system_poly(f, h0));

    PointSet points;
    Shared shared;
    shared.originals = &originals;
    shared.det_jac = det_ptr;
    shared.cfg = cfg;
    shared.points = &points;

    SolveResult result;
    std::vector<SystemState> wave;
    wave.push_back(std::move(root));
    const int jobs = std::max(1, cfg.jobs);

    while (!wave.empty()) {
        std::vector<Outcome> outcomes(wave.size());
        if (jobs == 1 || wave.size() == 1) {
            for (std::size_t i = 0; i < wave.size(); ++i)
                outcomes[i] = process_state(std::move(wave[i]), shared);
        } else {
            std::vector<std::thread> workers;
            std::atomic<std::size_t> next{0};
            auto run = [&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= wave.size()) break;
                    outcomes[i] = process_state(std::move(wave[i]), shared);
                }
            };
            for (int t = 0; t < jobs; ++t) workers.emplace_back(run);
            for (auto& w : workers) w.join();
        }
        std::vector<SystemState> next_wave;
        for (auto& oc : outcomes) {
            result.stats.merge(oc.stats);
            for (auto& r : oc.results) result.results.push_back(std::move(r));
            for (auto& p : oc.emitted_points) points.insert(std::move(p));
            if (trace)
                for (const auto& ev : oc.trace) trace(ev);
            for (auto& c : oc.children) next_wave.push_back(std::move(c));
        }
        wave.swap(next_wave);
    }

    if (cfg.spread > 0) {
        Rational inv = make_rational(Integer(1), pow_int(Integer(2), cfg.spread));
        for (auto& r : result.results)
            for (auto& axis : r.box.axes) {
                axis.lo *= inv;
                if (axis.hi) *axis.hi *= inv;
            }
    }

    std::sort(result.results.begin(), result.results.end(), box_lower_less);
    if (result.stats.depth_limited > 0)
        std::cerr << "cfroots: warning: " << result.stats.depth_limited
                  << " domain(s) hit the depth budget and are reported as depth-limit boxes\n";
    return result;
}

std::vector<ReportedRoot> report_roots(const std::vector<IsolationResult>& results) {
    std::vector<ReportedRoot> out;
    out.reserve(results.size());
    for (const auto& r : results) {
        ReportedRoot rep;
        rep.box = r.box;
        rep.certificate = r.certificate;
        for (const auto& cf : r.cf_trace) {
            rep.cf_quotients.push_back(cf.quotients());
            if (cf.empty())
                rep.cf_value.push_back(std::nullopt);
            else
                rep.cf_value.push_back(cf.value(cf.size() - 1));
        }
        for (const auto& axis : r.box.axes)
            rep.exact.push_back(axis.hi.has_value() && axis.lo == *axis.hi);
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace cfroots
