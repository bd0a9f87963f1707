// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "brunnian/brunnian.hpp"
#include "brunnian/families.hpp"
#include "brunnian/freegroup.hpp"
#include "brunnian/io.hpp"
#include "brunnian/sprime.hpp"
#include "properties.hpp"

using namespace bf;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) note << "failed: ";
            else note << "; ";
            note << what;
            pass = false;
        }
    }
};

// certificates produced by criteria 6-8, replayed again in criterion 9
std::vector<std::pair<json, LinkPresentation>> produced;

Bipartition split(int n, std::vector<int> I) {
    Bipartition h;
    for (int c = 0; c < n; ++c) (std::count(I.begin(), I.end(), c) ? h.I : h.J).push_back(c);
    return h;
}

LinkPresentation pierced(int a, int b) {
    LinkPresentation p;
    p.diagram.components = {{}, {}, {}};
    p.registry.disks = {{"D", 0, 1, "complex"}};
    for (int k = 0; k < a; ++k) p.registry.piercings[1].push_back({"D", k % 2 ? -1 : 1});
    for (int k = 0; k < b; ++k) p.registry.piercings[2].push_back({"D", k % 2 ? -1 : 1});
    return p;
}

void c1(Outcome& o) {
    Word c = parse_word("g1 g2 g1^-1 g2^-1 g3 g2 g1 g2^-1 g1^-1 g3^-1");
    int a = sphere_crossing_count(c, {"g1", {{"g2", Side::Pos}, {"g3", Side::Neg}}, Side::Pos});
    int b = sphere_crossing_count(c, {"g1", {{"g2", Side::Neg}, {"g3", Side::Pos}}, Side::Pos});
    o.require(a == 4, "case 1 gave " + std::to_string(a));
    o.require(b == 8, "case 2 gave " + std::to_string(b));
    o.note << "counts " << a << ", " << b;
}

void c2(Outcome& o) {
    LinkPresentation p = generate({"milnor", {4}});
    o.note << "counts";
    for (auto [d, want] : std::vector<std::pair<std::string, int>>{{"D1", 4}, {"D2", 4}, {"D3", 2}}) {
        int got = p.registry.total(d);
        StabilityVerdict v = stable_disk_certificate(p, d);
        o.require(got == want, d + " has " + std::to_string(got) + " points");
        o.require(v.status == StabilityStatus::Certified, d + " not certified");
        o.note << " " << d << "=" << got << "(min " << v.min_bound << ")";
    }
}

void c3(Outcome& o) {
    for (int m = 1; m <= 6; ++m) o.require(clasp_chain_certificate(m) == 2 * m, "m=" + std::to_string(m));
    LinkPresentation lamp = generate({"lamp", std::vector<int>(8, 1)});
    StableEvidence e = certify_stable(lamp, "D");
    o.require(lamp.registry.total("D") == 8, "lamp disk does not have 8 points");
    o.require(e.certified && e.actual == 8 && e.bound >= 8, "lamp disk not certified");
    o.note << "clasp m=1..6 -> 2m; lamp(1^8) " << e.method << " bound " << e.bound;
}

void c4(Outcome& o) {
    std::vector<FamilySpec> specs = {{"milnor", {4}}};
    for (int n = 3; n <= 6; ++n) specs.push_back({"w", {n}});
    for (int n = 2; n <= 5; ++n) specs.push_back({"debrunner", {n}});
    for (int n = 3; n <= 6; ++n) specs.push_back({"brunnchain", {n}});
    for (int m = 1; m <= 2; ++m)
        for (int n = 2; n <= 3; ++n) {
            specs.push_back({"torusgrid", {m, n}});
            specs.push_back({"tube", {m, n}});
        }
    for (int k = 1; k <= 4; ++k) specs.push_back({"lamp", std::vector<int>(2 * k, 1)});
    specs.push_back({"carpet", {1, 2, 2}});
    specs.push_back({"carpet", {1, 2, 3}});
    auto t0 = std::chrono::steady_clock::now();
    int links = 0, deletions = 0;
    for (const FamilySpec& s : specs) {
        LinkPresentation p = generate(s);
        BrunnianReport r = brunnian_report(p);
        std::string tag = s.family + "(" + std::to_string(s.params.front()) + (s.params.size() > 1 ? ",.." : "") + ")";
        for (const auto& d : r.deletions) {
            ++deletions;
            o.require(d.witnessed, tag + " minus " + p.name(d.deleted) + " not unlinked");
        }
        o.require(r.nontriviality.kind != NontrivialityKind::Unknown, tag + " has no nontriviality evidence");
        o.require(r.brunnian_witnessed, tag + " not witnessed");
        ++links;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < 60, "took " + std::to_string(secs) + " s");
    o.note << links << " links, " << deletions << " deletions unlinked, " << secs << " s";
}

void c5(Outcome& o) {
    int checked = 0;
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b) {
            LinkPresentation p = pierced(a, b);
            for (const Bipartition& h : {split(3, {0}), split(3, {0, 1}), split(3, {0, 2})}) {
                DiskRole r = disk_role(p, "D", h);
                bool expect = (r == DiskRole::ExteriorCross && a + b < 4) || (r == DiskRole::FreeCross && a + b < 6);
                o.require(prop52_refute(p, h).has_value() == expect, "a=" + std::to_string(a) + " b=" + std::to_string(b));
                ++checked;
            }
        }
    o.note << checked << " registries, boundaries 3/4 and 5/6 included";
}

void c6(Outcome& o) {
    LinkPresentation db = generate({"debrunner", {5}});
    auto t0 = std::chrono::steady_clock::now();
    CaseAnalysis ca = analyze_sprime(db);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& r : ca.orbits) o.require(r.refuted, "an orbit is unresolved");
    o.require(ca.sprime_modulo_assumptions, "verdict is not SPrimeModuloAssumptions");
    std::vector<std::string> refs;
    for (const auto& a : ca.assumptions) refs.push_back(a.ref);
    o.require(refs == std::vector<std::string>{"standing/simple-intersection-pattern", "template/disjointness"},
              "unexpected assumption list");

    // the six case shapes with C1..C5 as indices 0..4
    auto fires = [&](std::vector<int> I, Rule x) {
        OrbitRecord r = analyze_bipartition(db, split(5, I), {}, {true});
        return std::count(r.applicable.begin(), r.applicable.end(), x) > 0;
    };
    bool cross = fires({1, 2}, Rule::CrossBound6) && fires({1, 2, 3, 4}, Rule::CrossBound6);
    bool discard = fires({1, 2, 3}, Rule::ComponentDiscard) && fires({1, 2, 4}, Rule::ComponentDiscard) &&
                   fires({1, 3}, Rule::ComponentDiscard) && fires({1, 4}, Rule::ComponentDiscard);
    bool sym = fires({1, 3, 4}, Rule::SymmetryUniqueness);
    bool same_orbit = orbit_representative(db, split(5, {1})) == orbit_representative(db, split(5, {1, 2, 3, 4}));
    o.require(cross, "cross bound attribution");
    o.require(discard, "component discard attribution");
    o.require(sym, "symmetry attribution");
    o.require(same_orbit, "(i) is not in the orbit of (iv)");

    json cert = sprime_certificate(db, ca, {});
    ReplayResult rr = replay_certificate(cert, db);
    o.require(rr.ok, "certificate replay");
    produced.push_back({cert, db});
    o.require(secs < 300, "analysis too slow");
    o.note << ca.orbits.size() << " orbits refuted in " << secs << " s; (ii)(iv) cross bound, (iii)(vi) discard, (v) symmetry, "
           << "(i) via its orbit; replay ok";
}

void c7(Outcome& o) {
    LinkPresentation tg = generate({"torusgrid", {3, 3}});
    const int rows = 6, cols = 3;
    auto idx = [&](int i, int j) { return ((i % rows + rows) % rows) * cols + j; };
    Bipartition h = split(tg.n(), {idx(1, 0), idx(3, 0)});
    auto r = symmetry_refute(tg, h);
    o.require(r.has_value() && r->symmetry.has_value(), "symmetry rule did not fire");
    if (r && r->symmetry) {
        const SymmetryEvidence& e = *r->symmetry;
        o.require(quadruple_incompatible(e), "quadruple has an empty part");
        o.note << "|I∩I'|=" << e.ii.size() << " |I∩J'|=" << e.ij.size() << " |J∩I'|=" << e.ji.size() << " |J∩J'|=" << e.jj.size();
    }
    CaseAnalysis sel = analyze_selected(tg, {h});
    json cert = sprime_certificate(tg, sel, {});
    o.require(cert["scope"] == "selected", "scope");
    o.require(replay_certificate(cert, tg).ok, "certificate replay");
    produced.push_back({cert, tg});
    o.note << "; selected-scope replay ok";
}

void c8(Outcome& o) {
    for (int n = 3; n <= 6; ++n) {
        LinkPresentation p = generate({"brunnchain", {n}});
        UntiedReport r = untied_check(p, std::string("complement is a handlebody"));
        std::string tag = "brunnchain(" + std::to_string(n) + ")";
        o.require(r.untied_modulo_assumptions, tag + " not untied");
        o.require(r.assumptions.size() == 1, tag + " assumption count");
        o.require(r.threshold == 8, tag + " threshold");
        o.require(!r.regularity.empty(), tag + " regularity flags missing");
        json cert = untied_certificate(p, r);
        o.require(replay_certificate(cert, p).ok, tag + " replay");
        produced.push_back({cert, p});
    }
    LinkPresentation hopf = hopf_presentation(1);
    o.require(untied_threshold(hopf) == 7, "hopf threshold");
    o.require(untied_threshold(generate({"lamp", {1, 1}})) == 8, "two-component lk 0 threshold");
    UntiedReport h = untied_check(hopf, std::string("complement is a thickened torus"));
    json cert = untied_certificate(hopf, h);
    o.require(replay_certificate(cert, hopf).ok, "hopf replay");
    produced.push_back({cert, hopf});
    o.note << "brunnchain(3..6) untied with 1 assumption each; thresholds 7 (|lk|=1, n=2) and 8";
}

void c9(Outcome& o) {
    auto run = [&](const char* name, const std::string& err) {
        o.require(err.empty(), std::string(name) + ": " + err);
    };
    run("moves", props::moves_preserve_linking(10000, 11));
    run("reduce", props::reduction_laws(10000, 12));
    run("sphere", props::sphere_count_symmetries(1000, 13));
    int replays = 0;
    for (const auto& [cert, p] : produced) {
        o.require(replay_certificate(cert, p).ok, "replay of a produced certificate");
        ++replays;
    }
    o.note << "10000 moves, 10000 words, 1000 assignments, " << replays << " certificate replays";
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"1 sphere-crossing counts", c1},  {"2 milnor(4) disks", c2},        {"3 clasp chains and lamp", c3},
        {"4 brunnian at desk scale", c4},  {"5 cross-disk thresholds", c5},  {"6 debrunner(5) s-prime", c6},
        {"7 torusgrid quadruple", c7},     {"8 untied brunnchain", c8},      {"9 invariant suites", c9},
    };
    int failed = 0;
    for (auto& [name, fn] : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %s (%.0f ms): %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), ms, o.note.str().c_str());
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
