#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "delpezzo/blowup.hpp"

using namespace delpezzo;

namespace {

LatticeClass LC(std::initializer_list<long> cs) {
    return LatticeClass(std::vector<long>(cs));
}

TrackedCurve line(std::string name, std::vector<std::string> pts) {
    return {std::move(name), TrackedCurve::Kind::line, std::move(pts)};
}
TrackedCurve fiber(std::string name, std::vector<std::string> pts) {
    return {std::move(name), TrackedCurve::Kind::fiber, std::move(pts)};
}
TrackedCurve section(std::string name, std::vector<std::string> pts) {
    return {std::move(name), TrackedCurve::Kind::section, std::move(pts)};
}

BlowupStep proper(std::string pt) {
    BlowupStep s;
    s.kind = BlowupStep::Kind::proper;
    s.point = std::move(pt);
    return s;
}
BlowupStep near(int after, std::optional<std::string> on = std::nullopt) {
    BlowupStep s;
    s.kind = BlowupStep::Kind::near;
    s.after = after;
    s.on = std::move(on);
    return s;
}

const CurveRecord& by_name(const BlowupResult& r, const std::string& name) {
    for (const auto& c : r.curves)
        if (c.name == name) return c;
    throw std::runtime_error("missing curve " + name);
}

long pair_of(const BlowupResult& r, const std::string& a, const std::string& b) {
    return pairing(by_name(r, a).cls, by_name(r, b).cls);
}

/* Every curve the calculus produces is a smooth rational curve, so
 * adjunction pins c.c + c.K = -2 for each of them. */
void check_adjunction(const BlowupResult& r) {
    LatticeClass K = canonical_class(*r.n);
    for (const auto& c : r.curves)
        CHECK(self_intersection(c.cls) + pairing(c.cls, K) == -2);
}

/* One line through two of the centres, then two steps climbing the
 * tower over the first; L picks up four base points in total. */
BlowupProgram program_mixed_tower() {
    BlowupProgram p;
    p.tracked = {line("L", {"P1", "P2"})};
    p.steps = {proper("P1"), proper("P2"), near(1, "L"), near(3, "L")};
    return p;
}

}  // namespace

TEST_CASE("zero-step programs") {
    BlowupProgram p2;
    p2.tracked = {line("L", {"P1"}), line("M", {"Q"})};
    auto r = run_blowup_program(p2);
    CHECK(r.n == 0);
    CHECK(r.k_squared == 9);
    CHECK(r.picard == 1);
    REQUIRE(r.curves.size() == 2);
    CHECK(r.curves[0].cls == LC({1}));
    CHECK(r.curves[0].self_int == 1);
    CHECK(r.curves[0].kind == CurveKind::other);
    REQUIRE(r.graph.edges.size() == 1);
    CHECK(r.graph.edges[0].mult == 1);  // two lines meet once

    BlowupProgram qq;
    qq.base = BaseSurface::P1xP1;
    qq.tracked = {fiber("F", {}), section("S", {})};
    auto rq = run_blowup_program(qq);
    CHECK(!rq.n.has_value());
    CHECK(rq.k_squared == 8);
    CHECK(rq.picard == 2);
    CHECK(rq.curves.empty());
    CHECK(!rq.note.empty());
}

TEST_CASE("single blow-up of P2") {
    BlowupProgram p;
    p.tracked = {line("L", {"P1"}), line("M", {})};
    p.steps = {proper("P1")};
    auto r = run_blowup_program(p);
    CHECK(r.n == 1);
    CHECK(r.k_squared == 8);
    CHECK(r.picard == 2);
    CHECK(by_name(r, "L").cls == LC({1, -1}));
    CHECK(by_name(r, "L").self_int == 0);
    CHECK(by_name(r, "M").cls == LC({1, 0}));
    CHECK(by_name(r, "E1").cls == LC({0, 1}));
    CHECK(by_name(r, "E1").kind == CurveKind::minus_one);
    CHECK(pair_of(r, "L", "E1") == 1);
    CHECK(pair_of(r, "M", "E1") == 0);
    CHECK(pair_of(r, "L", "M") == 1);
    check_adjunction(r);
}

TEST_CASE("mixed proper and infinitely near centres") {
    auto r = run_blowup_program(program_mixed_tower());
    REQUIRE(r.n == 4);
    CHECK(r.k_squared == 5);

    CHECK(by_name(r, "L").cls == LC({1, -1, -1, -1, -1}));
    CHECK(by_name(r, "E1").cls == LC({0, 1, 0, -1, 0}));
    CHECK(by_name(r, "E3").cls == LC({0, 0, 0, 1, -1}));
    CHECK(by_name(r, "E4").cls == LC({0, 0, 0, 0, 1}));
    check_adjunction(r);
}

TEST_CASE("tangent line tower: chain (-2)(-1)(-2)(-2)") {
    /* One proper centre, then two points climbing the tower along the
     * strict transform of L. */
    BlowupProgram p;
    p.tracked = {line("L", {"P1"})};
    p.steps = {proper("P1"), near(1, "L"), near(2, "L")};
    auto r = run_blowup_program(p);
    REQUIRE(r.n == 3);
    CHECK(r.k_squared == 6);
    CHECK(r.picard == 4);

    CHECK(by_name(r, "L").cls == LC({1, -1, -1, -1}));
    CHECK(by_name(r, "E1").cls == LC({0, 1, -1, 0}));
    CHECK(by_name(r, "E2").cls == LC({0, 0, 1, -1}));
    CHECK(by_name(r, "E3").cls == LC({0, 0, 0, 1}));
    CHECK(by_name(r, "L").self_int == -2);
    CHECK(by_name(r, "E1").self_int == -2);
    CHECK(by_name(r, "E2").self_int == -2);
    CHECK(by_name(r, "E3").kind == CurveKind::minus_one);
    check_adjunction(r);

    /* chain L -- E3 -- E2 -- E1 */
    CHECK(pair_of(r, "L", "E3") == 1);
    CHECK(pair_of(r, "E3", "E2") == 1);
    CHECK(pair_of(r, "E2", "E1") == 1);
    CHECK(pair_of(r, "L", "E1") == 0);
    CHECK(pair_of(r, "L", "E2") == 0);
    CHECK(pair_of(r, "E1", "E3") == 0);
    CHECK(ascii_graph(r.graph) == "L(-2) -- E3(-1) -- E2(-2) -- E1(-2)");

    auto rep = contract_and_report(r);
    CHECK(rep.sing.str() == "A2+A1");
    CHECK(rep.k_squared == 6);
    CHECK(rep.picard_after == 1);
    REQUIRE(rep.contracted.size() == 3);

    auto dec = anticanonical_decomposition(
        by_name(r, "E3"),
        {by_name(r, "L"), by_name(r, "E1"), by_name(r, "E2")});
    CHECK(dec.d == 6);
    REQUIRE(dec.q.size() == 3);
    CHECK(dec.q[0] == Rational(3));
    CHECK(dec.q[1] == Rational(2));
    CHECK(dec.q[2] == Rational(4));
    CHECK(dec.nonnegative);
}

TEST_CASE("two towers over a pencil of lines: A3+2A1") {
    BlowupProgram p;
    p.tracked = {line("L13", {"P1", "P3"}), line("L12", {"P1", "P2"})};
    p.steps = {proper("P1"), proper("P2"), near(1, "L13"), near(3, "L13"),
               near(2, "L12")};
    auto r = run_blowup_program(p);
    REQUIRE(r.n == 5);
    CHECK(r.k_squared == 4);

    CHECK(by_name(r, "L13").cls == LC({1, -1, 0, -1, -1, 0}));
    CHECK(by_name(r, "L12").cls == LC({1, -1, -1, 0, 0, -1}));
    CHECK(by_name(r, "E1").cls == LC({0, 1, 0, -1, 0, 0}));
    CHECK(by_name(r, "E2").cls == LC({0, 0, 1, 0, 0, -1}));
    CHECK(by_name(r, "E3").cls == LC({0, 0, 0, 1, -1, 0}));
    CHECK(by_name(r, "E4").cls == LC({0, 0, 0, 0, 1, 0}));
    CHECK(by_name(r, "E5").cls == LC({0, 0, 0, 0, 0, 1}));
    check_adjunction(r);

    /* chain L13 -- E4 -- E3 -- E1 -- L12 -- E5 -- E2 */
    const char* chain[] = {"L13", "E4", "E3", "E1", "L12", "E5", "E2"};
    const long selfs[] = {-2, -1, -2, -2, -2, -1, -2};
    for (int i = 0; i < 7; ++i) {
        CHECK(by_name(r, chain[i]).self_int == selfs[i]);
        if (i) CHECK(pair_of(r, chain[i - 1], chain[i]) == 1);
    }
    CHECK(pair_of(r, "L13", "L12") == 0);
    CHECK(pair_of(r, "L13", "E1") == 0);
    CHECK(r.graph.edges.size() == 6);

    auto rep = contract_and_report(r);
    CHECK(rep.sing.str() == "A3+2A1");
    CHECK(rep.k_squared == 4);
    CHECK(rep.picard_after == 1);

    /* the decomposition exists for either (-1)-curve */
    std::vector<CurveRecord> D = {by_name(r, "L13"), by_name(r, "L12"),
                                  by_name(r, "E1"), by_name(r, "E2"),
                                  by_name(r, "E3")};
    auto d4 = anticanonical_decomposition(by_name(r, "E4"), D);
    CHECK(d4.d == 4);
    REQUIRE(d4.q.size() == 5);
    CHECK(d4.q[0] == Rational(2));
    CHECK(d4.q[1] == Rational(1));
    CHECK(d4.q[2] == Rational(2));
    CHECK(d4.q[3] == Rational(0));
    CHECK(d4.q[4] == Rational(3));
    CHECK(d4.nonnegative);

    auto d5 = anticanonical_decomposition(by_name(r, "E5"), D);
    CHECK(d5.q[0] == Rational(0));
    CHECK(d5.q[1] == Rational(3));
    CHECK(d5.q[2] == Rational(2));
    CHECK(d5.q[3] == Rational(2));
    CHECK(d5.q[4] == Rational(1));
    CHECK(d5.nonnegative);
}

TEST_CASE("triangle of lines: 3A2 and a nine-cycle") {
    BlowupProgram p;
    p.tracked = {line("L12", {"P1", "P2"}), line("L13", {"P1", "P3"}),
                 line("L23", {"P2", "P3"})};
    p.steps = {proper("P1"), proper("P2"), proper("P3"),
               near(1, "L12"), near(2, "L23"), near(3, "L13")};
    auto r = run_blowup_program(p);
    REQUIRE(r.n == 6);
    CHECK(r.k_squared == 3);

    CHECK(by_name(r, "L12").cls == LC({1, -1, -1, 0, -1, 0, 0}));
    CHECK(by_name(r, "L13").cls == LC({1, -1, 0, -1, 0, 0, -1}));
    CHECK(by_name(r, "L23").cls == LC({1, 0, -1, -1, 0, -1, 0}));
    CHECK(by_name(r, "E1").cls == LC({0, 1, 0, 0, -1, 0, 0}));
    CHECK(by_name(r, "E2").cls == LC({0, 0, 1, 0, 0, -1, 0}));
    CHECK(by_name(r, "E3").cls == LC({0, 0, 0, 1, 0, 0, -1}));
    check_adjunction(r);

    /* nine-cycle: each (-1) sits between two (-2)s */
    const char* cyc[] = {"L12", "E4", "E1", "L13", "E6", "E3", "L23", "E5", "E2"};
    for (int i = 0; i < 9; ++i)
        CHECK(pair_of(r, cyc[i], cyc[(i + 1) % 9]) == 1);
    CHECK(r.graph.edges.size() == 9);

    std::string art = ascii_graph(r.graph);
    CHECK(art ==
          "L12(-2) -- E2(-2) -- E5(-1) -- L23(-2) -- E3(-2) -- E6(-1) -- "
          "L13(-2) -- E1(-2) -- E4(-1) -- (back to L12)");

    auto rep = contract_and_report(r);
    CHECK(rep.sing.str() == "3A2");
    CHECK(rep.k_squared == 3);
    CHECK(rep.picard_after == 1);
}

TEST_CASE("four-line configuration: 2A3+A1") {
    BlowupProgram p;
    p.tracked = {line("L12", {"P1", "P2"}), line("L13", {"P1", "P3"}),
                 line("L14", {"P1", "P4"}), line("L23", {"P2", "P3", "P4"})};
    p.steps = {proper("P1"), proper("P2"), proper("P3"),
               near(1, "L14"), near(4, "L14"), near(2, "L12"), near(3, "L23")};
    auto r = run_blowup_program(p);
    REQUIRE(r.n == 7);
    CHECK(r.k_squared == 2);

    CHECK(by_name(r, "L12").cls == LC({1, -1, -1, 0, 0, 0, -1, 0}));
    CHECK(by_name(r, "L13").cls == LC({1, -1, 0, -1, 0, 0, 0, 0}));
    CHECK(by_name(r, "L14").cls == LC({1, -1, 0, 0, -1, -1, 0, 0}));
    CHECK(by_name(r, "L23").cls == LC({1, 0, -1, -1, 0, 0, 0, -1}));
    CHECK(by_name(r, "E4").cls == LC({0, 0, 0, 0, 1, -1, 0, 0}));
    check_adjunction(r);

    /* L13 comes out as a (-1)-curve: the fourth point P4 sits on L23,
     * which therefore meets L14 off the blown-up locus. */
    CHECK(by_name(r, "L13").kind == CurveKind::minus_one);
    CHECK(pair_of(r, "L14", "L23") == 1);

    /* eight-cycle plus a tail L13 -- E3 -- E7 hanging off it */
    const char* cyc[] = {"E6", "L12", "E1", "E4", "E5", "L14", "L23", "E2"};
    const long selfs[] = {-1, -2, -2, -2, -1, -2, -2, -2};
    for (int i = 0; i < 8; ++i) {
        CHECK(by_name(r, cyc[i]).self_int == selfs[i]);
        CHECK(pair_of(r, cyc[i], cyc[(i + 1) % 8]) == 1);
    }
    CHECK(pair_of(r, "L13", "E3") == 1);
    CHECK(pair_of(r, "E3", "E7") == 1);
    CHECK(pair_of(r, "L13", "E1") == 1);
    CHECK(pair_of(r, "E7", "L23") == 1);

    auto rep = contract_and_report(r);
    CHECK(rep.sing.str() == "2A3+A1");
    CHECK(rep.k_squared == 2);
    CHECK(rep.picard_after == 1);
    CHECK(rep.contracted.size() == 7);

    /* contracting a subset is allowed as long as it stays ADE */
    auto sub = contract_and_report(r, {"L12", "E1", "E4"});
    CHECK(sub.sing.str() == "A3");
    CHECK(sub.picard_after == 5);
}

TEST_CASE("quadric base: A7 chain") {
    BlowupProgram p;
    p.base = BaseSurface::P1xP1;
    p.tracked = {fiber("LP1", {"P1"}), fiber("LP2", {"P2"}),
                 section("M", {"P1", "P2"})};
    p.steps = {proper("P1"), proper("P2"), near(1, "LP1"), near(3),
               near(2, "LP2"), near(5)};
    auto r = run_blowup_program(p);
    REQUIRE(r.n == 7);
    CHECK(r.k_squared == 2);
    CHECK(r.picard == 8);
    CHECK(r.note.find("f = e0-e1") != std::string::npos);

    CHECK(by_name(r, "LP1").cls == LC({0, 0, 1, 0, -1, 0, 0, 0}));
    CHECK(by_name(r, "LP2").cls == LC({1, -1, 0, -1, 0, 0, -1, 0}));
    CHECK(by_name(r, "M").cls == LC({0, 1, 0, -1, 0, 0, 0, 0}));
    CHECK(by_name(r, "E1").cls == LC({1, -1, -1, 0, -1, 0, 0, 0}));
    CHECK(by_name(r, "E2").cls == LC({0, 0, 0, 1, 0, 0, -1, 0}));
    CHECK(by_name(r, "E3").cls == LC({0, 0, 0, 0, 1, -1, 0, 0}));
    CHECK(by_name(r, "E4").cls == LC({0, 0, 0, 0, 0, 1, 0, 0}));
    CHECK(by_name(r, "E5").cls == LC({0, 0, 0, 0, 0, 0, 1, -1}));
    CHECK(by_name(r, "E6").cls == LC({0, 0, 0, 0, 0, 0, 0, 1}));
    check_adjunction(r);

    /* D1..D7 */
    const char* chain[] = {"LP1", "E3", "E1", "M", "E2", "E5", "LP2"};
    for (int i = 0; i < 7; ++i) {
        CHECK(by_name(r, chain[i]).self_int == -2);
        if (i) CHECK(pair_of(r, chain[i - 1], chain[i]) == 1);
    }
    /* the (-1)-curves land on D2 and D6 */
    CHECK(pair_of(r, "E4", "E3") == 1);
    CHECK(pair_of(r, "E6", "E5") == 1);
    CHECK(pair_of(r, "E4", "E6") == 0);
    CHECK(pair_of(r, "LP1", "LP2") == 0);  // same ruling stays disjoint

    auto rep = contract_and_report(r);
    CHECK(rep.sing.str() == "A7");
    CHECK(rep.k_squared == 2);
    CHECK(rep.picard_after == 1);
}

TEST_CASE("anticanonical marks of the E8 configuration") {
    std::vector<CurveRecord> D;
    D.push_back(make_curve_record("D1", LC({1, -1, -1, -1, 0, 0, 0, 0, 0})));
    for (int j = 2; j <= 8; ++j) {
        std::vector<long> c(9, 0);
        c[j - 1] = 1;
        c[j] = -1;
        D.push_back(make_curve_record("D" + std::to_string(j), LatticeClass(c)));
    }
    CurveRecord E = make_curve_record("E", LC({0, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(E.kind == CurveKind::minus_one);

    auto dec = anticanonical_decomposition(E, D);
    CHECK(dec.d == 1);
    const long marks[] = {3, 2, 4, 6, 5, 4, 3, 2};
    REQUIRE(dec.q.size() == 8);
    for (int i = 0; i < 8; ++i) CHECK(dec.q[i] == Rational(marks[i]));
    CHECK(dec.nonnegative);
}

TEST_CASE("anticanonical failure modes") {
    auto r = run_blowup_program([] {
        BlowupProgram p;
        p.tracked = {line("L", {"P1"})};
        p.steps = {proper("P1"), near(1, "L"), near(2, "L")};
        return p;
    }());

    /* -K - 6 E3 is not in the span of a single root */
    CHECK_THROWS_WITH_AS(
        anticanonical_decomposition(by_name(r, "E3"), {by_name(r, "E1")}),
        "no solution in the span", std::domain_error);

    /* E must be a (-1)-curve, D must be (-2)-curves */
    CHECK_THROWS_AS(
        anticanonical_decomposition(by_name(r, "L"), {by_name(r, "E1")}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        anticanonical_decomposition(by_name(r, "E3"), {by_name(r, "E3")}),
        std::invalid_argument);
}

TEST_CASE("program validation") {
    SUBCASE("duplicate proper point") {
        BlowupProgram p;
        p.steps = {proper("P1"), proper("P1")};
        CHECK_THROWS_AS(run_blowup_program(p), std::invalid_argument);
    }
    SUBCASE("reserved tracked name") {
        BlowupProgram p;
        p.tracked = {line("E2", {"P1"})};
        CHECK_THROWS_AS(run_blowup_program(p), std::invalid_argument);
    }
    SUBCASE("duplicate tracked name") {
        BlowupProgram p;
        p.tracked = {line("L", {"P1"}), line("L", {"P2"})};
        CHECK_THROWS_AS(run_blowup_program(p), std::invalid_argument);
    }
    SUBCASE("two lines through two common points") {
        BlowupProgram p;
        p.tracked = {line("L", {"P1", "P2"}), line("M", {"P1", "P2"})};
        CHECK_THROWS_AS(run_blowup_program(p), std::invalid_argument);
    }
    SUBCASE("two fibres through a common point") {
        BlowupProgram p;
        p.base = BaseSurface::P1xP1;
        p.tracked = {fiber("F", {"P1"}), fiber("G", {"P1"})};
        p.steps = {proper("P1")};
        CHECK_THROWS_AS(run_blowup_program(p), std::invalid_argument);
    }
    SUBCASE("wrong curve kind for the base") {
        BlowupProgram p;
        p.tracked = {fiber("F", {})};
        CHECK_THROWS_AS(run_blowup_program(p), std::invalid_argument);
        BlowupProgram q;
        q.base = BaseSurface::P1xP1;
        q.tracked = {line("L", {})};
        CHECK_THROWS_AS(run_blowup_program(q), std::invalid_argument);
    }
    SUBCASE("quadric must start with a proper point") {
        BlowupProgram p;
        p.base = BaseSurface::P1xP1;
        p.steps = {near(1)};
        CHECK_THROWS_AS(run_blowup_program(p), std::invalid_argument);
    }
    SUBCASE("near step must reference an earlier step") {
        BlowupProgram p;
        p.steps = {proper("P1"), near(2)};
        CHECK_THROWS_AS(run_blowup_program(p), std::invalid_argument);
        BlowupProgram q;
        q.steps = {proper("P1"), near(0)};
        CHECK_THROWS_AS(run_blowup_program(q), std::invalid_argument);
    }
    SUBCASE("near point already lies on its own exceptional") {
        BlowupProgram p;
        p.steps = {proper("P1"), near(1, "E1")};
        CHECK_THROWS_AS(run_blowup_program(p), std::invalid_argument);
    }
    SUBCASE("unknown curve in 'on'") {
        BlowupProgram p;
        p.steps = {proper("P1"), near(1, "X")};
        CHECK_THROWS_AS(run_blowup_program(p), std::invalid_argument);
        BlowupProgram q;
        q.steps = {proper("P1"), near(1, "E7")};
        CHECK_THROWS_AS(run_blowup_program(q), std::invalid_argument);
    }
    SUBCASE("incidence contradiction") {
        /* L misses P2, so nothing near E2 can sit on L */
        BlowupProgram p;
        p.tracked = {line("L", {"P1"})};
        p.steps = {proper("P1"), proper("P2"), near(2, "L")};
        CHECK_THROWS_AS(run_blowup_program(p), std::domain_error);
    }
    SUBCASE("same curve cannot host two points on one exceptional") {
        BlowupProgram p;
        p.tracked = {line("L", {"P1"})};
        p.steps = {proper("P1"), near(1, "L"), near(1, "L")};
        CHECK_THROWS_AS(run_blowup_program(p), std::domain_error);
    }
}

TEST_CASE("contraction validation") {
    auto r = run_blowup_program([] {
        BlowupProgram p;
        p.tracked = {line("L", {"P1"})};
        p.steps = {proper("P1"), near(1, "L"), near(2, "L")};
        return p;
    }());
    CHECK_THROWS_AS(contract_and_report(r, {"Z"}), std::invalid_argument);
    CHECK_THROWS_AS(contract_and_report(r, {"E3"}), std::invalid_argument);
    CHECK_THROWS_AS(contract_and_report(r, {"L", "L"}), std::invalid_argument);
    auto rep = contract_and_report(r, {"E1", "E2"});
    CHECK(rep.sing.str() == "A2");
    CHECK(rep.picard_after == 2);
}

TEST_CASE("graph rendering fallbacks") {
    DualGraph g;
    g.nodes.push_back(make_curve_record("A", LC({0, 1, -1, 0})));
    g.nodes.push_back(make_curve_record("B", LC({0, 0, 1, -1})));
    g.nodes.push_back(make_curve_record("C", LC({0, 0, 0, 1})));
    g.edges.push_back({0, 1, 2});
    CHECK(ascii_graph(g) == "A(-2) -- B(-2) x2\nC(-1) (isolated)");

    DualGraph single;
    single.nodes.push_back(make_curve_record("A", LC({0, 0, 0, 1})));
    CHECK(ascii_graph(single) == "A(-1)");
    CHECK(ascii_graph(DualGraph{}) == "");
}
