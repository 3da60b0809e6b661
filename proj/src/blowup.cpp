#include "delpezzo/blowup.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace delpezzo {

namespace {

bool is_exceptional_name(const std::string& s) {
    if (s.size() < 2 || s[0] != 'E') return false;
    if (s[1] == '0' && s.size() > 2) return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

CurveKind classify(const LatticeClass& cls, const LatticeClass& K) {
    const long sq = self_intersection(cls);
    const long k = pairing(cls, K);
    if (sq == -1 && k == -1) return CurveKind::minus_one;
    if (sq == -2 && k == 0) return CurveKind::minus_two;
    return CurveKind::other;
}

void validate_program(const BlowupProgram& prog) {
    std::set<std::string> names;
    for (const auto& t : prog.tracked) {
        if (t.name.empty())
            throw std::invalid_argument("tracked curve with empty name");
        if (is_exceptional_name(t.name))
            throw std::invalid_argument("tracked curve name '" + t.name +
                                        "' is reserved for exceptionals");
        if (!names.insert(t.name).second)
            throw std::invalid_argument("duplicate tracked curve '" + t.name + "'");
        if (prog.base == BaseSurface::P2 && t.kind != TrackedCurve::Kind::line)
            throw std::invalid_argument("only lines can be tracked on P2");
        if (prog.base == BaseSurface::P1xP1 && t.kind == TrackedCurve::Kind::line)
            throw std::invalid_argument("no line class on P1xP1; use fiber or section");
        std::set<std::string> pts(t.through.begin(), t.through.end());
        if (pts.size() != t.through.size())
            throw std::invalid_argument("curve '" + t.name + "' lists a point twice");
    }

    /* Two distinct members of the tracked families can share at most
     * as many base points as their intersection number allows. */
    for (std::size_t i = 0; i < prog.tracked.size(); ++i) {
        for (std::size_t j = i + 1; j < prog.tracked.size(); ++j) {
            const auto& a = prog.tracked[i];
            const auto& b = prog.tracked[j];
            std::size_t common = 0;
            for (const auto& p : a.through)
                if (std::find(b.through.begin(), b.through.end(), p) != b.through.end())
                    ++common;
            std::size_t bound = 1;
            if (prog.base == BaseSurface::P1xP1 && a.kind == b.kind) bound = 0;
            if (common > bound)
                throw std::invalid_argument("curves '" + a.name + "' and '" + b.name +
                                            "' cannot pass through " +
                                            std::to_string(common) + " common points");
        }
    }

    std::set<std::string> centres;
    for (std::size_t k = 0; k < prog.steps.size(); ++k) {
        const auto& s = prog.steps[k];
        if (s.kind == BlowupStep::Kind::proper) {
            if (s.point.empty())
                throw std::invalid_argument("proper point with empty name");
            if (!centres.insert(s.point).second)
                throw std::invalid_argument("point '" + s.point + "' blown up twice");
        } else {
            if (s.after < 1 || s.after > static_cast<int>(k))
                throw std::invalid_argument("step " + std::to_string(k + 1) +
                                            ": 'after' must name an earlier step");
            if (s.on) {
                const std::string& c = *s.on;
                if (c == "E" + std::to_string(s.after))
                    throw std::invalid_argument(
                        "step " + std::to_string(k + 1) + ": a point near step " +
                        std::to_string(s.after) + " lies on E" +
                        std::to_string(s.after) + " already");
                if (is_exceptional_name(c)) {
                    int idx = std::stoi(c.substr(1));
                    if (idx < 1 || idx > static_cast<int>(k))
                        throw std::invalid_argument("step " + std::to_string(k + 1) +
                                                    ": unknown curve '" + c + "'");
                } else if (!names.count(c)) {
                    throw std::invalid_argument("step " + std::to_string(k + 1) +
                                                ": unknown curve '" + c + "'");
                }
            }
        }
    }

    if (prog.base == BaseSurface::P1xP1 && !prog.steps.empty() &&
        prog.steps.front().kind != BlowupStep::Kind::proper)
        throw std::invalid_argument("the first centre on P1xP1 must be a proper point");
}

DualGraph build_graph(std::vector<CurveRecord> curves) {
    DualGraph g;
    g.nodes = std::move(curves);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
            long p = pairing(g.nodes[i].cls, g.nodes[j].cls);
            if (p < 0)
                throw std::domain_error("inconsistent program: " + g.nodes[i].name +
                                        " and " + g.nodes[j].name +
                                        " end up with negative intersection");
            if (p > 0)
                g.edges.push_back({static_cast<int>(i), static_cast<int>(j), p});
        }
    }
    return g;
}

}  // namespace

CurveRecord make_curve_record(std::string name, LatticeClass cls) {
    CurveRecord r;
    r.name = std::move(name);
    r.self_int = self_intersection(cls);
    r.kind = classify(cls, canonical_class(cls.n()));
    r.cls = std::move(cls);
    return r;
}

BlowupResult run_blowup_program(const BlowupProgram& prog) {
    validate_program(prog);

    const int m = static_cast<int>(prog.steps.size());
    BlowupResult res;
    res.base = prog.base;

    if (prog.base == BaseSurface::P1xP1 && m == 0) {
        res.n = std::nullopt;
        res.k_squared = 8;
        res.picard = 2;
        res.note = "no blow-up performed; classes stay in Pic(P1xP1) = Zf + Zs";
        return res;
    }

    const int n = (prog.base == BaseSurface::P2) ? m : m + 1;
    res.n = n;
    res.k_squared = 9 - n;
    res.picard = 1 + n;

    std::vector<LatticeClass> tracked_cls;
    for (const auto& t : prog.tracked) {
        if (prog.base == BaseSurface::P2) {
            tracked_cls.push_back(LatticeClass::basis(n, 0));
        } else if (t.kind == TrackedCurve::Kind::fiber) {
            tracked_cls.push_back(LatticeClass::basis(n, 0) - LatticeClass::basis(n, 1));
        } else {
            tracked_cls.push_back(LatticeClass::basis(n, 0) - LatticeClass::basis(n, 2));
        }
    }

    std::vector<LatticeClass> ecls;
    for (int k = 1; k <= m; ++k) {
        LatticeClass fresh;
        if (prog.base == BaseSurface::P2) {
            fresh = LatticeClass::basis(n, k);
        } else if (k == 1) {
            fresh = LatticeClass::basis(n, 0) - LatticeClass::basis(n, 1) -
                    LatticeClass::basis(n, 2);
        } else {
            fresh = LatticeClass::basis(n, k + 1);
        }

        const auto& step = prog.steps[k - 1];
        if (step.kind == BlowupStep::Kind::proper) {
            for (std::size_t i = 0; i < prog.tracked.size(); ++i) {
                const auto& th = prog.tracked[i].through;
                if (std::find(th.begin(), th.end(), step.point) != th.end())
                    tracked_cls[i] = tracked_cls[i] - fresh;
            }
        } else {
            if (step.on) {
                LatticeClass* host = nullptr;
                if (is_exceptional_name(*step.on)) {
                    host = &ecls[std::stoi(step.on->substr(1)) - 1];
                } else {
                    for (std::size_t i = 0; i < prog.tracked.size(); ++i)
                        if (prog.tracked[i].name == *step.on) host = &tracked_cls[i];
                }
                if (pairing(*host, ecls[step.after - 1]) < 1)
                    throw std::domain_error(
                        "step " + std::to_string(k) + ": '" + *step.on +
                        "' does not meet E" + std::to_string(step.after));
                *host = *host - fresh;
            }
            ecls[step.after - 1] = ecls[step.after - 1] - fresh;
        }
        ecls.push_back(std::move(fresh));
    }

    std::vector<CurveRecord> curves;
    for (std::size_t i = 0; i < prog.tracked.size(); ++i)
        curves.push_back(make_curve_record(prog.tracked[i].name, tracked_cls[i]));
    for (int k = 1; k <= m; ++k)
        curves.push_back(make_curve_record("E" + std::to_string(k), ecls[k - 1]));

    res.graph = build_graph(curves);
    res.curves = std::move(res.graph.nodes);
    res.graph.nodes = res.curves;  // graph keeps its own copy

    if (prog.base == BaseSurface::P1xP1)
        res.note = "re-expressed in Z^{1," + std::to_string(n) +
                   "} via the blow-up at '" + prog.steps.front().point +
                   "': f = e0-e1, s = e0-e2, E1 = e0-e1-e2";
    return res;
}

std::string ascii_graph(const DualGraph& g) {
    const auto label = [&](int i) {
        return g.nodes[i].name + "(" + std::to_string(g.nodes[i].self_int) + ")";
    };
    const std::size_t nn = g.nodes.size();
    if (nn == 0) return "";
    if (nn == 1) return label(0);

    bool simple = true;
    std::vector<std::vector<int>> adj(nn);
    for (const auto& e : g.edges) {
        if (e.mult != 1) simple = false;
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }

    std::vector<int> deg(nn);
    for (std::size_t i = 0; i < nn; ++i) deg[i] = static_cast<int>(adj[i].size());

    const auto connected = [&]() {
        std::vector<char> seen(nn, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        std::size_t cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        return cnt == nn;
    };

    const auto walk = [&](int start, bool cycle) {
        std::string out = label(start);
        int prev = -1, cur = start;
        for (std::size_t step = 1; step < nn; ++step) {
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) {
                    next = w;
                    break;
                }
            out += " -- " + label(next);
            prev = cur;
            cur = next;
        }
        if (cycle) out += " -- (back to " + g.nodes[start].name + ")";
        return out;
    };

    if (simple && connected()) {
        int ends = 0, first_end = -1;
        bool path_ok = true, cycle_ok = true;
        for (std::size_t i = 0; i < nn; ++i) {
            if (deg[i] == 1) {
                if (first_end < 0) first_end = static_cast<int>(i);
                ++ends;
                cycle_ok = false;
            } else if (deg[i] == 2) {
                continue;
            } else {
                path_ok = cycle_ok = false;
            }
        }
        if (path_ok && ends == 2 && g.edges.size() == nn - 1)
            return walk(first_end, false);
        if (cycle_ok && g.edges.size() == nn) {
            int start = 0;
            /* prefer the lower-indexed neighbour so the direction is fixed */
            std::sort(adj[start].begin(), adj[start].end());
            return walk(start, true);
        }
    }

    std::string out;
    std::vector<char> touched(nn, 0);
    for (const auto& e : g.edges) {
        touched[e.i] = touched[e.j] = 1;
        if (!out.empty()) out += "\n";
        out += label(e.i) + " -- " + label(e.j);
        if (e.mult > 1) out += " x" + std::to_string(e.mult);
    }
    for (std::size_t i = 0; i < nn; ++i)
        if (!touched[i]) {
            if (!out.empty()) out += "\n";
            out += label(i) + " (isolated)";
        }
    return out;
}

ContractionReport contract_and_report(const BlowupResult& res,
                                      const std::vector<std::string>& which) {
    std::vector<const CurveRecord*> sel;
    if (which.empty()) {
        for (const auto& c : res.curves)
            if (c.kind == CurveKind::minus_two) sel.push_back(&c);
    } else {
        std::set<std::string> seen;
        for (const auto& name : which) {
            if (!seen.insert(name).second)
                throw std::invalid_argument("curve '" + name + "' selected twice");
            const CurveRecord* found = nullptr;
            for (const auto& c : res.curves)
                if (c.name == name) found = &c;
            if (!found)
                throw std::invalid_argument("no curve named '" + name + "'");
            if (found->kind != CurveKind::minus_two)
                throw std::invalid_argument("curve '" + name +
                                            "' is not a (-2)-curve");
            sel.push_back(found);
        }
    }

    std::vector<LatticeClass> roots;
    for (const auto* c : sel) roots.push_back(c->cls);

    ContractionReport rep;
    rep.sing = roots.empty() ? DynkinType{} : dynkin_type(roots);
    rep.k_squared = res.k_squared;
    rep.picard_after = res.picard - static_cast<int>(sel.size());
    for (const auto* c : sel) rep.contracted.push_back(c->name);
    return rep;
}

AnticanonicalDecomposition anticanonical_decomposition(
    const CurveRecord& E, const std::vector<CurveRecord>& D) {
    const int n = E.cls.n();
    if (E.kind != CurveKind::minus_one)
        throw std::invalid_argument("'" + E.name + "' is not a (-1)-curve");
    std::vector<LatticeClass> roots;
    for (const auto& d : D) {
        if (d.cls.n() != n)
            throw std::invalid_argument("curve '" + d.name + "' lives in a different lattice");
        if (d.kind != CurveKind::minus_two)
            throw std::invalid_argument("'" + d.name + "' is not a (-2)-curve");
        roots.push_back(d.cls);
    }
    if (!roots.empty()) dynkin_type(roots);  // validates the configuration

    AnticanonicalDecomposition out;
    out.d = 9 - n;

    /* target = -K - d*E, to be written as sum q_j D_j.  The Gram matrix
     * of an ADE configuration is invertible, so solve G q = (target.D_j)
     * and then verify the combination reproduces the target exactly. */
    LatticeClass target = -canonical_class(n) - E.cls * out.d;
    const std::size_t mm = roots.size();
    std::vector<std::vector<Rational>> aug(mm, std::vector<Rational>(mm + 1));
    for (std::size_t i = 0; i < mm; ++i) {
        for (std::size_t j = 0; j < mm; ++j)
            aug[i][j] = Rational(pairing(roots[i], roots[j]));
        aug[i][mm] = Rational(pairing(target, roots[i]));
    }

    for (std::size_t col = 0; col < mm; ++col) {
        std::size_t piv = col;
        while (piv < mm && aug[piv][col].is_zero()) ++piv;
        if (piv == mm)
            throw std::domain_error("degenerate Gram matrix");  // unreachable for ADE
        std::swap(aug[col], aug[piv]);
        Rational inv = aug[col][col].inv();
        for (std::size_t j = col; j <= mm; ++j) aug[col][j] *= inv;
        for (std::size_t i = 0; i < mm; ++i) {
            if (i == col || aug[i][col].is_zero()) continue;
            Rational f = aug[i][col];
            for (std::size_t j = col; j <= mm; ++j) aug[i][j] -= f * aug[col][j];
        }
    }

    out.q.resize(mm);
    for (std::size_t i = 0; i < mm; ++i) out.q[i] = aug[i][mm];

    /* consistency: the q_j solve the projected system; check the lift */
    for (int coord = 0; coord <= n; ++coord) {
        Rational acc;
        for (std::size_t j = 0; j < mm; ++j)
            acc += out.q[j] * Rational(roots[j].c[coord]);
        if (acc != Rational(target.c[coord]))
            throw std::domain_error("no solution in the span");
    }

    for (const auto& v : out.q)
        if (v.sign() < 0) out.nonnegative = false;
    return out;
}

}  // namespace delpezzo
