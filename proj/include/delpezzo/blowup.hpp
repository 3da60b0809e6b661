#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delpezzo/lattice.hpp"
#include "delpezzo/rational.hpp"

namespace delpezzo {

enum class CurveKind { minus_one, minus_two, other };

struct CurveRecord {
    std::string name;
    LatticeClass cls;
    long self_int = 0;
    CurveKind kind = CurveKind::other;
};

CurveRecord make_curve_record(std::string name, LatticeClass cls);

enum class BaseSurface { P2, P1xP1 };

/* An initial curve followed through the program. On P2 it is a line
 * through the named points; on P1xP1 a fibre (class f) or a section
 * (class s) through them. */
struct TrackedCurve {
    enum class Kind { line, fiber, section };
    std::string name;
    Kind kind = Kind::line;
    std::vector<std::string> through;
};

/* One blow-up: either a named proper point of the base, or a point
 * infinitely near an earlier centre — on the exceptional of step
 * `after` (1-based), and additionally on the curve named `on` when
 * present (a tracked curve or an earlier exceptional E<k>). */
struct BlowupStep {
    enum class Kind { proper, near };
    Kind kind = Kind::proper;
    std::string point;                // proper only
    int after = 0;                    // near only
    std::optional<std::string> on;    // near only; absent = free near point
};

struct BlowupProgram {
    BaseSurface base = BaseSurface::P2;
    std::vector<TrackedCurve> tracked;
    std::vector<BlowupStep> steps;
};

struct DualGraphEdge {
    int i = 0, j = 0;
    long mult = 1;  // pairing of the two classes, >= 1
};

struct DualGraph {
    std::vector<CurveRecord> nodes;
    std::vector<DualGraphEdge> edges;
};

struct BlowupResult {
    BaseSurface base = BaseSurface::P2;
    /* rank of the Z^{1,n} chart; absent only for a P1xP1 program with
     * no steps, which never gets re-expressed */
    std::optional<int> n;
    int k_squared = 9;
    int picard = 1;
    std::vector<CurveRecord> curves;  // tracked transforms, then E1..E<steps>
    DualGraph graph;
    std::string note;
};

/* Runs the program, assigning lattice classes to every tracked
 * transform and every exceptional. A P1xP1 program must start with a
 * proper point; the whole computation is then re-expressed in the
 * Z^{1,n} chart of that centre (f -> e0-e1, s -> e0-e2, first
 * exceptional -> e0-e1-e2, n = steps + 1) and the choice is recorded
 * in `note`. Throws invalid_argument on malformed programs and
 * domain_error on incidence contradictions (a near point placed on a
 * curve that does not pass through the centre). */
BlowupResult run_blowup_program(const BlowupProgram& prog);

std::string ascii_graph(const DualGraph& g);

struct ContractionReport {
    DynkinType sing;
    int k_squared = 9;
    int picard_after = 1;
    std::vector<std::string> contracted;
};

/* Contracts the named curves (default: every (-2)-curve in the
 * result). The selection must consist of (-2)-curves forming an ADE
 * configuration. */
ContractionReport contract_and_report(const BlowupResult& res,
                                      const std::vector<std::string>& which = {});

struct AnticanonicalDecomposition {
    int d = 0;                  // fixed to 9 - n
    std::vector<Rational> q;    // coefficient of each D_j
    bool nonnegative = true;
};

/* Solves -K = d E + sum q_j D_j exactly over Q with d = 9 - n. E must
 * be a (-1)-curve and D an ADE configuration of (-2)-curves. Throws
 * domain_error("no solution in the span") when -K - dE is outside the
 * span of D. Negative q_j are reported, not rejected. */
AnticanonicalDecomposition anticanonical_decomposition(const CurveRecord& E,
                                                       const std::vector<CurveRecord>& D);

}  // namespace delpezzo
