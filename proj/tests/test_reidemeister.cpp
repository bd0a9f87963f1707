#include <doctest.h>

#include "brunnian/brunnian.hpp"
#include "brunnian/families.hpp"
#include "brunnian/freegroup.hpp"
#include "brunnian/geometry.hpp"

#include <cmath>
#include <numbers>

using namespace bf;

namespace {

bool has_move(const LinkDiagram& d, MoveKind k) {
    for (const Move& m : available_moves(d))
        if (m.kind == k) return true;
    return false;
}

// Three round circles around a small central triangle, stacked at heights 0, 1, 2.
LinkDiagram three_circles() {
    std::vector<Polyline> cs;
    for (int k = 0; k < 3; ++k) {
        double a = std::numbers::pi / 2 + 2 * std::numbers::pi * k / 3;
        Polyline c;
        for (int i = 0; i < 48; ++i) {
            double t = 2 * std::numbers::pi * (i + 0.37 * (k + 1)) / 48;
            c.push_back({0.4 * std::cos(a) + std::cos(t), 0.4 * std::sin(a) + std::sin(t), double(k)});
        }
        cs.push_back(c);
    }
    return diagram_from_polylines(cs);
}

}  // namespace

TEST_CASE("crossing-free diagram is left alone") {
    LinkDiagram d = parse_pd("");
    auto r = simplify(d);
    CHECK(r.diagram == d);
    CHECK(r.trace.empty());
}

TEST_CASE("single kink goes away by R1") {
    LinkDiagram d = parse_gauss("O7+ U7+");
    auto r = simplify(d);
    CHECK(r.diagram.num_crossings() == 0);
    REQUIRE(r.trace.size() == 1);
    CHECK(r.trace[0].kind == MoveKind::R1_remove);
    CHECK(r.trace[0].site == std::vector<int>{d.crossings[0].id});
}

TEST_CASE("clasp of two circles lying over each other goes away by R2") {
    // one circle passes over the other twice
    LinkDiagram d = parse_gauss("O1+ O2-\nU2- U1+");
    REQUIRE(validate(d).empty());
    CHECK(linking_number(d, 0, 1) == 0);
    CHECK(has_move(d, MoveKind::R2_remove));
    auto r = simplify(d);
    CHECK(r.diagram.num_crossings() == 0);
    REQUIRE(r.trace.size() == 1);
    CHECK(r.trace[0].kind == MoveKind::R2_remove);
    CHECK(r.trace[0].site.size() == 2);
}

TEST_CASE("moves keep the diagram valid and the counts as documented") {
    for (auto spec : std::vector<FamilySpec>{{"milnor", {4}}, {"debrunner", {3}}, {"lamp", {1, 3}}, {"w", {4}}}) {
        LinkDiagram d = generate(spec).diagram;
        auto lk = linking_matrix(d);
        for (const Move& m : available_moves(d)) {
            LinkDiagram e = apply_move(d, m);
            CHECK(validate(e).empty());
            CHECK(linking_matrix(e) == lk);
            int drop = m.kind == MoveKind::R1_remove ? 1 : m.kind == MoveKind::R2_remove ? 2 : 0;
            CHECK(e.num_crossings() == d.num_crossings() - drop);
        }
    }
}

TEST_CASE("an R3 slide undone by the same slide") {
    int seen = 0;
    std::vector<LinkDiagram> ds = {three_circles()};
    for (auto spec : std::vector<FamilySpec>{{"milnor", {4}}, {"w", {5}}, {"debrunner", {4}}}) ds.push_back(generate(spec).diagram);
    for (const LinkDiagram& d : ds) {
        for (const Move& m : available_moves(d)) {
            if (m.kind != MoveKind::R3_slide) continue;
            ++seen;
            LinkDiagram e = apply_move(d, m);
            CHECK_FALSE(e == d);
            CHECK(equivalent_codes(apply_move(e, m), d));
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("three stacked circles only come apart after an R3 slide") {
    LinkDiagram d = three_circles();
    CHECK(d.num_crossings() == 6);
    CHECK(linking_matrix(d) == std::vector<std::vector<int>>(3, std::vector<int>(3, 0)));
    // each lens is cut by the third circle, so no bigon face exists yet
    CHECK_FALSE(has_move(d, MoveKind::R2_remove));
    CHECK_FALSE(has_move(d, MoveKind::R1_remove));
    CHECK(has_move(d, MoveKind::R3_slide));
    auto u = is_unlink(d);
    CHECK(u.witnessed);
    REQUIRE_FALSE(u.trace.empty());
    CHECK(u.trace.front().kind == MoveKind::R3_slide);
    CHECK_FALSE(is_unlink(d, SimplifyBudget{0, 50000}).witnessed);
}

TEST_CASE("apply_move rejects a site without that move") {
    LinkDiagram d = parse_pd("X[4,1,3,2],X[2,3,1,4]");
    CHECK_THROWS_AS(apply_move(d, Move{MoveKind::R1_remove, {d.crossings[0].id}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(d, Move{MoveKind::R2_remove, {0, 99}}), std::invalid_argument);
}

TEST_CASE("simplify is deterministic and idempotent, traces replay") {
    LinkPresentation p = generate({"w", {5}});
    for (int i = 0; i < p.n(); ++i) {
        LinkDiagram d = delete_component(p.diagram, i);
        auto a = simplify(d), b = simplify(d);
        CHECK(a.trace == b.trace);
        CHECK(a.diagram == b.diagram);
        CHECK(a.diagram.num_crossings() <= d.num_crossings());
        CHECK(replay_trace(d, a.trace) == a.diagram);
        auto again = simplify(a.diagram);
        CHECK(again.trace.empty());
    }
    // the hopf clasp admits nothing
    LinkDiagram h = parse_pd("X[4,1,3,2],X[2,3,1,4]");
    CHECK(simplify(h).diagram == h);
}

TEST_CASE("unlink witnessing") {
    LinkDiagram circles;
    circles.components = {{}, {}, {}};
    CHECK(is_unlink(circles).witnessed);
    CHECK_FALSE(is_unlink(parse_pd("X[4,1,3,2],X[2,3,1,4]")).witnessed);
    LinkPresentation mil = generate({"milnor", {4}});
    CHECK(simplify(delete_component(mil.diagram, 0)).diagram.num_crossings() == 0);
    LinkPresentation w5 = generate({"w", {5}});
    for (int i = 0; i < 5; ++i) CHECK(is_unlink(delete_component(w5.diagram, i)).witnessed);
    CHECK_FALSE(is_unlink(w5.diagram).witnessed);
}

TEST_CASE("brunnian reports") {
    SUBCASE("hopf: linking") {
        auto r = brunnian_report(hopf_presentation(1));
        CHECK(r.brunnian_witnessed);
        CHECK(r.nontriviality.kind == NontrivialityKind::NonzeroLinking);
        CHECK(r.nontriviality.lk == 1);
    }
    SUBCASE("milnor(4): reduced word") {
        LinkPresentation p = generate({"milnor", {4}});
        auto r = brunnian_report(p);
        CHECK(r.brunnian_witnessed);
        REQUIRE(r.nontriviality.kind == NontrivialityKind::NonemptyReducedWord);
        CHECK(r.nontriviality.component == 0);
        CHECK(format_word(r.nontriviality.reduced) == "D1 D2 D1^-1 D2^-1 D3 D2 D1 D2^-1 D1^-1 D3^-1");
    }
    SUBCASE("lamp(1^8): stable positive disk") {
        auto r = brunnian_report(generate({"lamp", {1, 1, 1, 1, 1, 1, 1, 1}}));
        CHECK(r.brunnian_witnessed);
        REQUIRE(r.nontriviality.kind == NontrivialityKind::StablePositiveDisk);
        CHECK(r.nontriviality.stable.actual == 8);
        CHECK(r.nontriviality.stable.bound >= 8);
    }
    SUBCASE("split union of circles is not brunnian") {
        LinkPresentation p;
        p.diagram.components = {{}, {}};
        auto r = brunnian_report(p);
        CHECK(r.nontriviality.kind == NontrivialityKind::Unknown);
        CHECK_FALSE(r.brunnian_witnessed);
    }
}
