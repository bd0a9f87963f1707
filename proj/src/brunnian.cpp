#include "brunnian/brunnian.hpp"

#include <future>
#include <set>

namespace bf {

const char* to_string(NontrivialityKind k) {
    switch (k) {
        case NontrivialityKind::NonzeroLinking: return "NonzeroLinking";
        case NontrivialityKind::NonemptyReducedWord: return "NonemptyReducedWord";
        case NontrivialityKind::StablePositiveDisk: return "StablePositiveDisk";
        case NontrivialityKind::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

// Disks of the word system must be disjoint, bounded by distinct components
// other than c, and met by no boundary of the system: then the complement of
// those boundaries has free fundamental group on the disk duals and the word
// is the class of c.
bool word_system_sound(const LinkPresentation& p, ComponentId c) {
    auto it = p.registry.disjoint.find(p.word_system);
    if (it == p.registry.disjoint.end() || !it->second) return false;
    std::set<ComponentId> bounds;
    std::vector<const Disk*> ds;
    for (const Disk& d : p.registry.disks)
        if (d.system == p.word_system) {
            if (d.boundary == c || !bounds.insert(d.boundary).second) return false;
            ds.push_back(&d);
        }
    for (const Disk* d : ds)
        for (ComponentId q : p.registry.piercing_components(d->id))
            if (q != c && bounds.count(q)) return false;
    return true;
}

}  // namespace

Nontriviality nontriviality_evidence(const LinkPresentation& p) {
    Nontriviality e;
    auto lk = linking_matrix(p.diagram);
    for (int i = 0; i < p.n(); ++i)
        for (int j = i + 1; j < p.n(); ++j)
            if (lk[i][j] != 0) {
                e.kind = NontrivialityKind::NonzeroLinking;
                e.i = i, e.j = j, e.lk = lk[i][j];
                return e;
            }
    for (auto& [c, w] : p.designated_words) {
        Word r = cyclic_reduce(w);
        if (!r.empty() && word_system_sound(p, c)) {
            e.kind = NontrivialityKind::NonemptyReducedWord;
            e.component = c;
            e.reduced = r;
            return e;
        }
    }
    for (const Disk& d : p.registry.disks) {
        if (p.registry.total(d.id) == 0) continue;
        StableEvidence s = certify_stable(p, d.id);
        if (!s.certified) continue;
        // the sphere method leans on the other disks of the system being disjoint
        if (s.method == "sphere-count") {
            auto it = p.registry.disjoint.find(d.system);
            if (it == p.registry.disjoint.end() || !it->second) continue;
        }
        e.kind = NontrivialityKind::StablePositiveDisk;
        e.disk = d.id;
        e.stable = s;
        return e;
    }
    return e;
}

BrunnianReport brunnian_report(const LinkPresentation& p, const SimplifyBudget& b) {
    BrunnianReport r;
    std::vector<std::future<DeletionResult>> jobs;
    for (int i = 0; i < p.n(); ++i)
        jobs.push_back(std::async(std::launch::async, [&p, &b, i] {
            auto u = is_unlink(delete_component(p.diagram, i), b);
            return DeletionResult{i, u.witnessed, std::move(u.trace)};
        }));
    bool all = true;
    for (auto& j : jobs) {
        r.deletions.push_back(j.get());
        all = all && r.deletions.back().witnessed;
    }
    r.nontriviality = nontriviality_evidence(p);
    r.brunnian_witnessed = all && r.nontriviality.kind != NontrivialityKind::Unknown;
    return r;
}

}  // namespace bf
