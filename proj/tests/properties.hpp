#pragma once

// Randomised invariant suites, shared by the unit tests and the acceptance
// binary. Each returns an empty string on success, otherwise the first
// counterexample found.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brunnian/families.hpp"
#include "brunnian/freegroup.hpp"
#include "brunnian/io.hpp"
#include "brunnian/reidemeister.hpp"

namespace props {

using namespace bf;

inline std::vector<FamilySpec> move_specs() {
    return {{"milnor", {4}}, {"w", {4}}, {"w", {5}}, {"debrunner", {4}}, {"brunnchain", {3}}, {"lamp", {1, 3}}, {"tube", {1, 3}}};
}

// Random applicable moves, restarting from a fresh family diagram (or a
// component deletion of one) whenever the current diagram has none left.
inline std::string moves_preserve_linking(int steps, unsigned seed) {
    std::mt19937 rng(seed);
    auto specs = move_specs();
    std::vector<LinkDiagram> pool;
    for (const auto& s : specs) {
        LinkDiagram d = generate(s).diagram;
        pool.push_back(d);
        for (int i = 0; i < d.num_components(); ++i) pool.push_back(delete_component(d, i));
    }
    LinkDiagram d;
    std::vector<std::vector<int>> lk;
    std::vector<Move> avail;
    int done = 0, fresh = 0;
    while (done < steps) {
        if (avail.empty()) {
            if (fresh++ > steps) return "ran out of diagrams with moves";
            d = pool[rng() % pool.size()];
            lk = linking_matrix(d);
            avail = available_moves(d);
            continue;
        }
        Move m = avail[rng() % avail.size()];
        d = apply_move(d, m);
        ++done;
        if (!validate(d).empty()) return "move left an invalid diagram";
        if (linking_matrix(d) != lk) {
            std::ostringstream os;
            os << "linking matrix changed after " << to_json(m).dump();
            return os.str();
        }
        avail = available_moves(d);
    }
    return {};
}

inline Word random_word(std::mt19937& rng, int max_len, int gens) {
    static const char* names[] = {"a", "b", "c", "d", "e", "f"};
    Word w;
    int len = static_cast<int>(rng() % (max_len + 1));
    for (int i = 0; i < len; ++i) w.push_back({names[rng() % gens], rng() % 2 ? 1 : -1});
    return w;
}

inline std::string reduction_laws(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Word w = random_word(rng, 64, 1 + t % 5);
        Word r = reduce(w);
        if (reduce(r) != r) return "reduce not idempotent on " + format_word(w);
        if (r.size() > w.size()) return "reduce grew " + format_word(w);
        for (size_t i = 0; i + 1 < r.size(); ++i)
            if (r[i].gen == r[i + 1].gen && r[i].sign == -r[i + 1].sign) return "cancelling pair left in " + format_word(r);
        if (!reduce(concat(w, inverse(w))).empty()) return "w w^-1 does not reduce to 1 for " + format_word(w);
        if (reduce(inverse(w)) != inverse(r)) return "reduce does not commute with inverse on " + format_word(w);
        Word c = cyclic_reduce(w);
        if (!c.empty() && c.front().gen == c.back().gen && c.front().sign == -c.back().sign)
            return "cyclic_reduce left a cancelling end pair in " + format_word(w);
    }
    return {};
}

inline std::string sphere_count_symmetries(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int gens = 2 + static_cast<int>(rng() % 4);
        Word w = random_word(rng, 24, gens);
        SideAssignment a;
        a.pierced = "a";
        a.pierced_positive_side = rng() % 2 ? Side::Pos : Side::Neg;
        for (const char* g : {"b", "c", "d", "e", "f"}) a.sides[g] = rng() % 2 ? Side::Pos : Side::Neg;
        int base = sphere_crossing_count(w, a);
        std::string at = " on " + format_word(w);
        // passing through the disk also changes sides, uncounted
        int through = 0;
        for (const Letter& l : w) through += l.gen == a.pierced;
        if ((base + through) % 2) return "parity of count plus disk passages is odd" + at;
        if (!w.empty()) {
            Word rot(w.begin() + 1, w.end());
            rot.push_back(w.front());
            if (sphere_crossing_count(rot, a) != base) return "rotation changed the count" + at;
        }
        Word back;
        for (auto it = w.rbegin(); it != w.rend(); ++it) back.push_back({it->gen, -it->sign});
        if (sphere_crossing_count(back, a) != base) return "reversal changed the count" + at;
        SideAssignment sw = a;
        sw.pierced_positive_side = opposite(sw.pierced_positive_side);
        for (auto& [g, s] : sw.sides) s = opposite(s);
        if (sphere_crossing_count(w, sw) != base) return "side swap changed the count" + at;
    }
    return {};
}

inline std::string code_round_trips(unsigned seed) {
    std::mt19937 rng(seed);
    for (const auto& s : move_specs()) {
        LinkPresentation p = generate(s);
        const LinkDiagram& d = p.diagram;
        if (!equivalent_codes(parse_pd(emit_pd(d)), d)) return "PD round trip failed for " + s.family;
        if (!equivalent_codes(parse_gauss(emit_gauss(d)), d)) return "Gauss round trip failed for " + s.family;
        if (presentation_from_json(to_json(p)) != p) return "JSON round trip failed for " + s.family;
        std::vector<int> perm(d.num_components());
        for (int i = 0; i < d.num_components(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        LinkDiagram q = permute_components(d, perm);
        auto lk = linking_matrix(d), lq = linking_matrix(q);
        for (int i = 0; i < d.num_components(); ++i)
            for (int j = 0; j < d.num_components(); ++j)
                if (lq[perm[i]][perm[j]] != lk[i][j]) return "permutation moved linking numbers for " + s.family;
        for (int i = 0; i < d.num_components(); ++i)
            if (!(delete_component(mirror(d), i) == mirror(delete_component(d, i))))
                return "mirror and deletion do not commute for " + s.family;
    }
    return {};
}

inline std::string stable_minimum(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        LinkPresentation p;
        p.diagram.components = {{}, {}, {}, {}};
        p.registry.disks = {{"A", 1, 1, "complex"}, {"B", 2, 1, "complex"}, {"D", 3, 1, "complex"}};
        p.registry.disjoint["complex"] = true;
        static const char* ds[] = {"A", "B", "D"};
        int len = 2 + static_cast<int>(rng() % 12);
        for (int i = 0; i < len; ++i) p.registry.piercings[0].push_back({ds[rng() % 3], rng() % 2 ? 1 : -1});
        for (const char* disk : ds) {
            StabilityVerdict v = stable_disk_certificate(p, disk);
            int lo = -1;
            for (const auto& c : v.cases) {
                if (c.bound != sphere_crossing_count(word_from_piercings(p, 0), c.assignment))
                    return std::string("case bound does not recompute for ") + disk;
                if (lo < 0 || c.bound < lo) lo = c.bound;
            }
            if (!v.cases.empty() && lo != v.min_bound) return std::string("min_bound is not the case minimum for ") + disk;
            bool cert = v.status == StabilityStatus::Certified;
            if (cert != (v.min_bound >= v.actual)) return std::string("status disagrees with min_bound >= actual for ") + disk;
        }
    }
    return {};
}

}  // namespace props
