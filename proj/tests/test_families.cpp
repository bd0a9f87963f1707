#include <doctest.h>

#include <algorithm>
#include <set>

#include "brunnian/families.hpp"
#include "brunnian/freegroup.hpp"
#include "brunnian/io.hpp"

using namespace bf;

namespace {

std::vector<FamilySpec> acceptance_specs() {
    std::vector<FamilySpec> v = {{"milnor", {4}}, {"milnor", {5}}};
    for (int n = 3; n <= 6; ++n) v.push_back({"w", {n}});
    for (int n = 2; n <= 5; ++n) v.push_back({"debrunner", {n}});
    for (int n = 3; n <= 6; ++n) v.push_back({"brunnchain", {n}});
    for (int m = 1; m <= 2; ++m)
        for (int n = 2; n <= 3; ++n) {
            v.push_back({"torusgrid", {m, n}});
            v.push_back({"tube", {m, n}});
        }
    v.push_back({"carpet", {1, 2, 2}});
    v.push_back({"carpet", {1, 2, 3}});
    for (int k = 1; k <= 4; ++k) v.push_back({"lamp", std::vector<int>(2 * k, 1)});
    v.push_back({"lamp", {1, 3, 5, 7}});
    return v;
}

// Component counts written out independently of the generator.
int expected_count(const FamilySpec& s) {
    const auto& a = s.params;
    if (s.family == "lamp") return 2;
    if (s.family == "torusgrid") return 2 * a[0] * a[1];
    if (s.family == "tube") return a[0] * a[1];
    if (s.family == "carpet") return a[2] * a[1] * (a[1] + 1) / 2;
    return a[0];
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (size_t r = 0; r < a.size(); ++r) {
        bool ok = true;
        for (size_t i = 0; i < a.size() && ok; ++i) ok = a[(i + r) % a.size()] == b[i];
        if (ok) return true;
    }
    return false;
}

std::vector<int> registry_signs(const LinkPresentation& p, ComponentId c, const std::string& disk) {
    std::vector<int> s;
    auto it = p.registry.piercings.find(c);
    if (it == p.registry.piercings.end()) return s;
    for (const Piercing& x : it->second)
        if (x.disk == disk) s.push_back(x.sign);
    return s;
}

}  // namespace

TEST_CASE("component counts and names") {
    for (const FamilySpec& s : acceptance_specs()) {
        CAPTURE(s.family);
        LinkPresentation p = generate(s);
        CHECK(p.n() == expected_count(s));
        CHECK(component_count(s) == p.n());
        CHECK(static_cast<int>(p.meta.component_names.size()) == p.n());
        CHECK(p.meta.spec == s);
        CHECK_FALSE(p.meta.count_formula.empty());
    }
    CHECK(generate({"torusgrid", {2, 3}}).n() == 12);
    LinkPresentation tg = generate({"torusgrid", {2, 3}});
    CHECK(tg.name(0) == "C1,1");
    CHECK(tg.name(11) == "C4,3");
    CHECK(generate({"milnor", {4}}).name(0) == "C0");
    CHECK(generate({"debrunner", {5}}).name(0) == "C1");
    LinkPresentation cp = generate({"carpet", {1, 3, 2}});
    CHECK(cp.n() == 12);
    CHECK(cp.name(0) == "C11");
    CHECK(cp.name(6) == "C11'");
}

TEST_CASE("out-of-range parameters are rejected") {
    CHECK_THROWS_AS(generate({"lamp", {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"lamp", {1}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"lamp", {-1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"w", {2}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"milnor", {2}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"debrunner", {1}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"brunnchain", {2}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"torusgrid", {0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"tube", {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"carpet", {3, 3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"carpet", {1, 3, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"pretzel", {3}}), std::invalid_argument);
}

TEST_CASE("presentations are internally consistent") {
    for (const FamilySpec& s : acceptance_specs()) {
        CAPTURE(s.family);
        CAPTURE(s.params.size());
        LinkPresentation p = generate(s);
        CHECK(validate(p.diagram).empty());
        CHECK(validate_presentation(p).empty());
        auto lk = linking_matrix(p.diagram);
        if (p.n() >= 3) CHECK(lk == std::vector<std::vector<int>>(p.n(), std::vector<int>(p.n(), 0)));
        // signed piercing sums against linking numbers
        for (const Disk& d : p.registry.disks) {
            for (int c = 0; c < p.n(); ++c) {
                if (c == d.boundary) continue;
                int sum = 0;
                for (int sg : registry_signs(p, c, d.id)) sum += sg;
                CHECK(sum == d.positive_side * lk[c][d.boundary]);
            }
            CHECK(p.registry.count(d.id, d.boundary) == 0);
        }
        for (const auto& [c, word] : p.designated_words) {
            std::string sys = p.word_system;
            CHECK(word == word_from_piercings(p, c, sys));
        }
    }
}

TEST_CASE("golden registries") {
    LinkPresentation mil = generate({"milnor", {4}});
    CHECK(mil.registry.total("D1") == 4);
    CHECK(mil.registry.total("D2") == 4);
    CHECK(mil.registry.total("D3") == 2);
    CHECK(format_word(mil.designated_words.at(0)) == "D1 D2 D1^-1 D2^-1 D3 D2 D1 D2^-1 D1^-1 D3^-1");

    LinkPresentation lamp = generate({"lamp", {1, 1, 1, 1, 1, 1, 1, 1}});
    REQUIRE(lamp.registry.disks.size() == 1);
    const Disk& d = lamp.registry.disks[0];
    CHECK(d.id == "D");
    CHECK(lamp.name(d.boundary) == "C1");
    CHECK(registry_signs(lamp, 1, "D") == std::vector<int>{1, -1, 1, -1, 1, -1, 1, -1});
}

TEST_CASE("generation is deterministic") {
    for (const FamilySpec& s : {FamilySpec{"w", {5}}, FamilySpec{"carpet", {1, 2, 2}}, FamilySpec{"lamp", {1, 3}}})
        CHECK(to_json(generate(s)).dump() == to_json(generate(s)).dump());
}

TEST_CASE("declared symmetries preserve linking and disk counts") {
    for (const FamilySpec& s : acceptance_specs()) {
        LinkPresentation p = generate(s);
        auto lk = linking_matrix(p.diagram);
        for (const auto& g : p.symmetries) {
            CAPTURE(s.family);
            REQUIRE(static_cast<int>(g.size()) == p.n());
            std::vector<int> sorted = g;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < p.n(); ++i) CHECK(sorted[i] == i);
            CHECK(linking_matrix(permute_components(p.diagram, g)) == lk);
            LinkPresentation q = permute_presentation(p, g);
            std::multiset<int> before, after;
            for (const Disk& d : p.registry.disks) before.insert(p.registry.total(d.id));
            for (const Disk& d : q.registry.disks) after.insert(q.registry.total(d.id));
            CHECK(before == after);
        }
    }
}

TEST_CASE("symmetry orbits") {
    LinkPresentation three;
    three.diagram.components = {{}, {}, {}};
    CHECK(all_bipartitions(3).size() == 3);
    CHECK(symmetry_orbits(three).size() == 3);

    LinkPresentation db = generate({"debrunner", {5}});
    auto orbits = symmetry_orbits(db);
    CHECK(all_bipartitions(5).size() == 15);
    CHECK(orbits.size() == 3);

    LinkPresentation four;
    four.diagram.components = {{}, {}, {}, {}};
    four.symmetries = {{1, 0, 2, 3}, {1, 2, 3, 0}};  // generates all of S4
    CHECK(symmetry_group(four).size() == 24);
    CHECK(symmetry_orbits(four).size() == 2);  // shapes 1|3 and 2|2

    // cover check, independent of the representative choice
    for (const LinkPresentation* p : {&db, &four}) {
        auto group = symmetry_group(*p);
        auto reps = symmetry_orbits(*p);
        for (const Bipartition& h : all_bipartitions(p->n())) {
            bool hit = false;
            for (const auto& g : group)
                for (const Bipartition& r : reps) {
                    std::vector<int> img;
                    for (int c : h.I) img.push_back(g[c]);
                    std::sort(img.begin(), img.end());
                    if (img == r.I || img == r.J) hit = true;
                }
            CHECK(hit);
            CHECK(orbit_representative(*p, h) == orbit_representative(*p, orbit_representative(*p, h)));
        }
    }
}

TEST_CASE("word-link registries match flat-disk intersections in space") {
    for (int n : {3, 4, 5, 6}) {
        for (bool balanced : {false, true}) {
            LinkPresentation p = generate({balanced ? "w" : "milnor", {n}});
            IndexedWord word = balanced ? balanced_commutator(n - 1) : nested_commutator(n - 1);
            auto geo = word_link_geometry(word, n - 1);
            REQUIRE(static_cast<int>(geo.size()) == n);
            CHECK(equivalent_codes(diagram_from_polylines(geo), p.diagram));
            for (int k = 1; k < n; ++k) {
                const Disk* d = nullptr;
                for (const Disk& x : p.registry.disks)
                    if (x.boundary == k && x.system == "complex") d = &x;
                REQUIRE(d);
                auto space = flat_disk_piercings(geo, k);
                for (int c = 0; c < n; ++c) {
                    if (c == k) continue;
                    std::vector<int> s = space.count(c) ? space.at(c) : std::vector<int>{};
                    for (int& x : s) x *= d->positive_side;
                    CHECK(cyclic_equal(s, registry_signs(p, c, d->id)));
                }
            }
        }
    }
}

TEST_CASE("lamp registry matches the flat disk of the round circle") {
    for (auto idx : std::vector<std::vector<int>>{{1, 1}, {1, 1, 1, 1, 1, 1, 1, 1}, {1, 3, 5, 7}}) {
        LinkPresentation p = generate({"lamp", idx});
        auto geo = lamp_geometry(idx);
        auto space = flat_disk_piercings(geo, 0);
        CHECK(cyclic_equal(space.at(1), registry_signs(p, 1, "D")));
        CHECK(static_cast<int>(space.at(1).size()) == static_cast<int>(idx.size()));
    }
}

TEST_CASE("hopf helper") {
    LinkPresentation p = hopf_presentation(1);
    CHECK(validate_presentation(p).empty());
    CHECK(linking_number(p.diagram, 0, 1) == 1);
    CHECK(generate({"hopf", {}}) == p);
    CHECK(linking_number(generate({"hopf", {-1}}).diagram, 0, 1) == -1);
}
