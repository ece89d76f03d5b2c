#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cfroots/certificates.hpp"
#include "cfroots/cf.hpp"
#include "cfroots/homography.hpp"
#include "cfroots/reduction.hpp"
#include "cfroots/tensor_poly.hpp"

namespace cfroots {

/// One entry of the work queue: the transformed system together with the
/// homography that identifies its positive orthant with a subdomain, plus
/// continued-fraction bookkeeping per axis.
struct SystemState {
    std::vector<TensorPoly> polys;
    Homography map;
    int depth = 0;
    /// Closed partial quotients per axis (a prefix of the CF expansion of a
    /// root coordinate tracked by this state), plus the pending shift total
    /// accumulated since the last inversion.
    std::vector<CFExpansion> quotient_trace;
    std::vector<Integer> pending_shift;
};

struct SolveConfig {
    int max_depth = 64;
    bool use_precondition = true;
    bool use_reduction = true;
    BoundStrategy lower_bound_strategy = BoundStrategy::ExactFloor;
    bool use_upper_bounds = false;
    unsigned long spread = 0;  // preprocessor exponent: x -> x / 2^spread
    int jobs = 1;
};

struct SolveStats {
    long iterations = 0;     // states popped from the queue
    long subdivisions = 0;   // per-axis splits: n per subdivision event
    long events = 0;         // subdivision events
    long solutions = 0;      // certified results (unique-root and exact-point)
    long excluded = 0;       // states discarded by an exclusion certificate
    long depth_limited = 0;  // states cut off by the depth budget
    long reduction_shifts = 0;

    void merge(const SolveStats& o);
};

enum class Certificate { MirandaJacobian, ExactPoint, DepthLimit };

std::string to_string(Certificate c);

struct IsolationResult {
    DomainBox box;  // bounded rational corners; degenerate for exact points
    Certificate certificate = Certificate::MirandaJacobian;
    std::vector<CFExpansion> cf_trace;  // per-axis partial quotient prefixes
};

/// Trace hook for soundness checks and plotting: every terminal polynomial
/// decision is reported with the state's box and, per axis, the endpoint
/// that local infinity maps to (boundary zeros there belong to a sibling).
struct TraceEvent {
    enum class Outcome { Excluded, Included, ExactPoint, DepthLimit, Subdivided, PointAccounted };
    Outcome outcome;
    DomainBox box;
    std::vector<std::optional<Rational>> infinity_side;  // per axis; empty = unbounded
    std::optional<EmptyReason> reason;
    int depth = 0;
};
using TraceSink = std::function<void(const TraceEvent&)>;

struct SolveResult {
    std::vector<IsolationResult> results;
    SolveStats stats;
    bool clean() const;  // no depth-limited output
};

/// Isolates the real roots of the system inside the domain box.  Results are
/// sorted lexicographically by lower corner and are deterministic for a
/// fixed config, independently of the worker count.
SolveResult solve(const std::vector<TensorPoly>& system, const DomainBox& domain,
                  const SolveConfig& cfg = {}, const TraceSink& trace = nullptr);

/// Outcome of a single loop-body application, exposed for tests.
struct StepOutcome {
    enum class Kind { Excluded, Included, ExactPointAndChildren, Children, DepthLimited };
    Kind kind;
    std::optional<TestVerdict> verdict;
    std::vector<SystemState> children;
    std::vector<IsolationResult> emitted;
};
StepOutcome step(SystemState state, const std::vector<TensorPoly>& originals,
                 const SolveConfig& cfg);

struct ReportedRoot {
    DomainBox box;
    Certificate certificate;
    std::vector<std::vector<Integer>> cf_quotients;  // per axis
    std::vector<std::optional<Rational>> cf_value;   // last convergent per axis
    std::vector<bool> exact;                         // degenerate axis interval
};
std::vector<ReportedRoot> report_roots(const std::vector<IsolationResult>& results);

}  // namespace cfroots
