#include "brunnian/sprime.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bf {

const char* to_string(DiskRole r) {
    switch (r) {
        case DiskRole::Interior_I: return "Interior_I";
        case DiskRole::Interior_J: return "Interior_J";
        case DiskRole::ExteriorCross: return "ExteriorCross";
        case DiskRole::FreeCross: return "FreeCross";
    }
    return "?";
}

const char* to_string(Rule r) {
    switch (r) {
        case Rule::CrossBound4: return "CrossBound4";
        case Rule::CrossBound6: return "CrossBound6";
        case Rule::ComponentDiscard: return "ComponentDiscard";
        case Rule::SymmetryUniqueness: return "SymmetryUniqueness";
        case Rule::CaseExhaustion: return "CaseExhaustion";
    }
    return "?";
}

namespace {

bool contains(const std::vector<ComponentId>& v, ComponentId c) { return std::find(v.begin(), v.end(), c) != v.end(); }

std::vector<const Disk*> complex_disks(const LinkPresentation& p) {
    std::vector<const Disk*> out;
    for (const Disk& d : p.registry.disks)
        if (d.system == kComplexSystem) out.push_back(&d);
    return out;
}

bool is_cross(DiskRole r) { return r == DiskRole::ExteriorCross || r == DiskRole::FreeCross; }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    void join(int a, int b) { parent[find(a)] = find(b); }
    std::vector<std::vector<int>> groups(const std::vector<int>& members) {
        std::map<int, std::vector<int>> g;
        for (int m : members) g[find(m)].push_back(m);
        std::vector<std::vector<int>> out;
        for (auto& [r, v] : g) out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    }
};

void check_bipartition(const LinkPresentation& p, const Bipartition& h) {
    if (h.I.empty() || h.J.empty()) throw std::invalid_argument("both sides of a splitting must be nonempty");
    std::vector<int> all = h.I;
    all.insert(all.end(), h.J.begin(), h.J.end());
    std::sort(all.begin(), all.end());
    for (int i = 0; i < static_cast<int>(all.size()); ++i)
        if (all[i] != i) throw std::invalid_argument("splitting is not a partition of the components");
    if (static_cast<int>(all.size()) != p.n()) throw std::invalid_argument("splitting does not cover every component");
}

ManualAssumption disjointness_assumption(const LinkPresentation& p) {
    auto ds = complex_disks(p);
    auto it = p.registry.disjoint.find(kComplexSystem);
    bool declared = it != p.registry.disjoint.end() && it->second;
    if (ds.size() <= 1) return {"template/disjointness", "complex disks mutually disjoint: vacuous (at most one disk)"};
    if (declared) return {"template/disjointness", "complex disks mutually disjoint: declared by the template"};
    return {"template/disjointness", "complex disks mutually disjoint: NOT declared by the template, assumed"};
}

}  // namespace

ManualAssumption standing_pattern_assumption() {
    return {"standing/simple-intersection-pattern",
            "a splitting torus, if one exists, can be isotoped so that it meets every complex disk only in circles "
            "that are innermost on the disk and bound meridian disks of the solid torus on the far side"};
}

DiskRole disk_role(const LinkPresentation& p, const std::string& disk, const Bipartition& h) {
    const Disk* d = p.registry.find(disk);
    if (!d) throw UnregisteredDisk(disk);
    bool in_i = contains(h.I, d->boundary);
    const auto& own = in_i ? h.I : h.J;
    bool same = false, other = false;
    for (ComponentId c : p.registry.piercing_components(disk)) (contains(own, c) ? same : other) = true;
    if (!other) return in_i ? DiskRole::Interior_I : DiskRole::Interior_J;
    return same ? DiskRole::FreeCross : DiskRole::ExteriorCross;
}

std::optional<Refutation> prop52_refute(const LinkPresentation& p, const Bipartition& h) {
    check_bipartition(p, h);
    for (const Disk* d : complex_disks(p)) {
        DiskRole r = disk_role(p, d->id, h);
        int total = p.registry.total(d->id);
        int threshold = r == DiskRole::ExteriorCross ? 4 : r == DiskRole::FreeCross ? 6 : 0;
        if (!threshold || total >= threshold) continue;
        Refutation ref;
        ref.rule = threshold == 4 ? Rule::CrossBound4 : Rule::CrossBound6;
        CrossBoundEvidence e{d->id, r, total, threshold, {}};
        for (ComponentId c : p.registry.piercing_components(d->id)) e.per_component[c] = p.registry.count(d->id, c);
        ref.cross = e;
        ref.assumptions = {standing_pattern_assumption()};
        return ref;
    }
    return std::nullopt;
}

std::optional<Refutation> discard_refute(const LinkPresentation& p, const Bipartition& h, const SimplifyBudget& b) {
    check_bipartition(p, h);
    auto disks = complex_disks(p);
    UnionFind u(p.n());
    for (const Disk* d : disks)
        for (ComponentId c : p.registry.piercing_components(d->id)) u.join(d->boundary, c);
    std::vector<int> size(p.n(), 0);
    for (int c = 0; c < p.n(); ++c) size[u.find(c)]++;

    for (const Bipartition& o : {h, Bipartition{h.J, h.I}}) {
        bool has_cross = false;
        for (const Disk* d : disks)
            if (contains(o.I, d->boundary) && is_cross(disk_role(p, d->id, o))) has_cross = true;
        if (!has_cross) continue;
        for (ComponentId x : o.I) {
            if (size[u.find(x)] != 1) continue;  // only circles carrying no disk and met by none
            auto simp = simplify(delete_component(p.diagram, x), b);
            std::vector<std::vector<ComponentId>> parts;
            for (auto& part : split_families(simp.diagram)) {
                std::vector<ComponentId> q;
                for (int c : part) q.push_back(c < x ? c : c + 1);
                parts.push_back(q);
            }
            UnionFind g(p.n());
            for (auto& part : parts)
                for (ComponentId c : part) g.join(part.front(), c);
            for (const Disk* d : disks)
                for (ComponentId c : p.registry.piercing_components(d->id))
                    if (c != x && d->boundary != x) g.join(d->boundary, c);
            std::vector<int> rest;
            for (int c = 0; c < p.n(); ++c)
                if (c != x) rest.push_back(c);
            auto merged = g.groups(rest);
            for (auto& m : merged) {
                if (!std::all_of(m.begin(), m.end(), [&](int c) { return contains(o.J, c); })) continue;
                Refutation ref;
                ref.rule = Rule::ComponentDiscard;
                ref.discard = DiscardEvidence{o, x, simp.trace, parts, merged, m};
                ref.assumptions = {standing_pattern_assumption()};
                return ref;
            }
        }
    }
    return std::nullopt;
}

SymmetryEvidence symmetry_quadruple(const Bipartition& h, const std::vector<int>& perm) {
    SymmetryEvidence e;
    e.perm = perm;
    for (int i : h.I) e.image.I.push_back(perm.at(i));
    for (int j : h.J) e.image.J.push_back(perm.at(j));
    std::sort(e.image.I.begin(), e.image.I.end());
    std::sort(e.image.J.begin(), e.image.J.end());
    auto meet = [](std::vector<int> a, std::vector<int> b) {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::vector<int> r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    };
    e.ii = meet(h.I, e.image.I);
    e.ij = meet(h.I, e.image.J);
    e.ji = meet(h.J, e.image.I);
    e.jj = meet(h.J, e.image.J);
    return e;
}

bool quadruple_incompatible(const SymmetryEvidence& e) {
    return !e.ii.empty() && !e.ij.empty() && !e.ji.empty() && !e.jj.empty();
}

std::optional<Refutation> symmetry_refute(const LinkPresentation& p, const Bipartition& h) {
    check_bipartition(p, h);
    std::vector<std::vector<int>> candidates = p.symmetries;
    for (const auto& g : symmetry_group(p))
        if (std::find(candidates.begin(), candidates.end(), g) == candidates.end()) candidates.push_back(g);
    for (const auto& g : candidates) {
        if (static_cast<int>(g.size()) != p.n()) continue;
        SymmetryEvidence e = symmetry_quadruple(h, g);
        if (!quadruple_incompatible(e)) continue;
        Refutation ref;
        ref.rule = Rule::SymmetryUniqueness;
        ref.symmetry = e;
        return ref;
    }
    return std::nullopt;
}

std::vector<std::string> case6_classify(const LinkPresentation& p, const Bipartition& h, const std::string& disk) {
    check_bipartition(p, h);
    DiskRole r = disk_role(p, disk, h);
    if (!is_cross(r)) throw std::invalid_argument("disk " + disk + " is not a cross disk under this splitting");
    const Disk* d = p.registry.find(disk);
    bool in_i = contains(h.I, d->boundary);
    const auto& own = in_i ? h.I : h.J;
    const auto& far = in_i ? h.J : h.I;
    int into = 0, comps = 0;
    for (ComponentId c : far) {
        int k = p.registry.count(disk, c);
        into += k;
        comps += k > 0;
    }
    if (into != 4) throw std::invalid_argument("disk " + disk + " meets the far side in " + std::to_string(into) + " points, not 4");
    std::vector<std::string> labels;
    if (r == DiskRole::ExteriorCross)
        labels = comps == 1 ? std::vector<std::string>{"1.0.0", "1.0.2", "1.2.0", "1.2.2"} : std::vector<std::string>{"2.0.0", "2.2.0"};
    else
        labels = comps == 1 ? std::vector<std::string>{"1.0.0", "1.0.2"} : std::vector<std::string>{"2.0.0"};
    // the middle digit 2 needs the boundary alone on its side, the last digit 2 the far side to be one component
    std::erase_if(labels, [&](const std::string& l) {
        return (l[2] == '2' && own.size() != 1) || (l[4] == '2' && far.size() != 1);
    });
    return labels;
}

InteriorReport interior_only_hypotheses(const LinkPresentation& p, const std::vector<ComponentId>& I,
                                        const std::vector<ComponentId>& J, const std::vector<std::string>& disks) {
    if (I.empty() || J.empty()) throw std::invalid_argument("both sides must be nonempty");
    Bipartition h{I, J};
    std::sort(h.I.begin(), h.I.end());
    std::sort(h.J.begin(), h.J.end());
    check_bipartition(p, h);
    InteriorReport rep;
    std::vector<std::string> ids = disks;
    if (ids.empty())
        for (const Disk* d : complex_disks(p)) ids.push_back(d->id);
    bool ok = !ids.empty();
    if (ids.empty()) rep.errors.push_back("no disks to check");
    for (const std::string& id : ids) {
        InteriorDiskCheck c;
        c.disk = id;
        c.role = disk_role(p, id, h);
        c.role_ok = c.role == DiskRole::Interior_I || c.role == DiskRole::Interior_J;
        c.sn = sn_check(p, id, 8);
        if (!c.role_ok) rep.errors.push_back("role violation: " + id + " is " + to_string(c.role));
        if (!c.sn.holds) rep.errors.push_back("(s8) unknown for " + id);
        ok = ok && c.role_ok && c.sn.holds;
        rep.disks.push_back(c);
    }
    const Disk* first = ids.empty() ? nullptr : p.registry.find(ids.front());
    auto it = first ? p.registry.disjoint.find(first->system) : p.registry.disjoint.end();
    rep.disjoint_declared = ids.size() <= 1 || (it != p.registry.disjoint.end() && it->second);
    if (!rep.disjoint_declared) rep.errors.push_back("disks not declared disjoint");
    rep.machine_checks_pass = ok && rep.disjoint_declared;
    std::string side_i, side_j;
    for (int c : h.I) side_i += (side_i.empty() ? "" : ",") + p.name(c);
    for (int c : h.J) side_j += (side_j.empty() ? "" : ",") + p.name(c);
    rep.obligations.push_back({"manual/boundary-parallel",
                               "every torus separating the complexes on {" + side_i + "} and {" + side_j +
                                   "} is parallel to the boundary of a regular neighbourhood of one component"});
    return rep;
}

OrbitRecord analyze_bipartition(const LinkPresentation& p, const Bipartition& h, const SimplifyBudget& b,
                                const AnalyzeOptions& o) {
    OrbitRecord rec;
    rec.h = h;
    std::vector<std::function<std::optional<Refutation>()>> rules = {
        [&] { return prop52_refute(p, h); },
        [&] { return discard_refute(p, h, b); },
        [&] { return symmetry_refute(p, h); },
    };
    for (auto& rule : rules) {
        auto r = rule();
        if (!r) continue;
        rec.applicable.push_back(r->rule);
        if (!rec.refutation) rec.refutation = r;
        if (!o.all_rules) break;
    }
    rec.refuted = rec.refutation.has_value();
    if (rec.refuted) return rec;

    bool any_cross = false;
    for (const Disk* d : complex_disks(p)) {
        if (!is_cross(disk_role(p, d->id, h))) continue;
        any_cross = true;
        try {
            rec.case_labels.push_back({d->id, case6_classify(p, h, d->id)});
        } catch (const std::invalid_argument&) {
        }
    }
    if (!any_cross) {
        rec.reason = "no cross disk under this splitting";
        if (!complex_disks(p).empty()) rec.interior = interior_only_hypotheses(p, h.I, h.J);
    } else {
        rec.reason = "no machine rule applies";
    }
    for (const auto* side : {&h.I, &h.J})
        if (side->size() == 1) {
            std::string c = p.name(side->front());
            rec.obligations.push_back({"manual/simple-component",
                                       c + " is simple: no essential torus separates " + c + " from the other components"});
        }
    rec.obligations.push_back({"manual/ear-deletion",
                               "exclude this splitting by hand, e.g. delete an ear of the spanning complex and show "
                               "the circle forced by the torus would be incredible"});
    return rec;
}

CaseAnalysis analyze_sprime(const LinkPresentation& p, const SimplifyBudget& b, const AnalyzeOptions& o) {
    CaseAnalysis ca;
    bool all = true, standing = false;
    for (const Bipartition& h : symmetry_orbits(p)) {
        ca.orbits.push_back(analyze_bipartition(p, h, b, o));
        const OrbitRecord& r = ca.orbits.back();
        all = all && r.refuted;
        if (r.refutation && !r.refutation->assumptions.empty()) standing = true;
    }
    ca.sprime_modulo_assumptions = all;
    if (standing) ca.assumptions.push_back(standing_pattern_assumption());
    ca.assumptions.push_back(disjointness_assumption(p));
    return ca;
}

CaseAnalysis analyze_selected(const LinkPresentation& p, const std::vector<Bipartition>& hs, const SimplifyBudget& b,
                              const AnalyzeOptions& o) {
    CaseAnalysis ca;
    ca.exhaustive = false;
    bool standing = false;
    for (const Bipartition& h : hs) {
        ca.orbits.push_back(analyze_bipartition(p, h, b, o));
        const auto& r = ca.orbits.back().refutation;
        if (r && !r->assumptions.empty()) standing = true;
    }
    if (standing) ca.assumptions.push_back(standing_pattern_assumption());
    ca.assumptions.push_back(disjointness_assumption(p));
    return ca;
}

int untied_threshold(const LinkPresentation& p) {
    if (p.n() == 2 && std::abs(linking_number(p.diagram, 0, 1)) == 1) return 7;
    return 8;
}

UntiedReport untied_check(const LinkPresentation& p, const std::optional<std::string>& witness) {
    UntiedReport r;
    r.threshold = untied_threshold(p);
    r.regularity = p.meta.regularity;
    r.witness = witness;
    bool all = true;
    for (const Disk* d : complex_disks(p)) {
        r.disks.push_back({d->id, sn_check(p, d->id, r.threshold)});
        if (!r.disks.back().sn.holds) {
            all = false;
            r.missing.push_back("disk " + d->id + " is not (s" + std::to_string(r.threshold) + ")");
        }
    }
    if (r.disks.empty()) {
        all = false;
        r.missing.push_back("no complex disks registered");
    }
    if (!witness || witness->empty()) r.missing.push_back("no complement witness supplied");
    else r.assumptions.push_back({"manual/complement-witness", *witness});
    r.untied_modulo_assumptions = all && witness && !witness->empty();
    return r;
}

}  // namespace bf
