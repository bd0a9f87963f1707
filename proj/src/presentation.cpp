#include "brunnian/presentation.hpp"

#include <algorithm>
#include <set>

namespace bf {

bool CyclicWord::operator==(const CyclicWord& o) const {
    size_t m = letters.size();
    if (m != o.letters.size()) return false;
    if (m == 0) return true;
    for (size_t r = 0; r < m; ++r) {
        bool eq = true;
        for (size_t k = 0; k < m && eq; ++k) eq = letters[k] == o.letters[(k + r) % m];
        if (eq) return true;
    }
    return false;
}

const Disk* DiskRegistry::find(const std::string& id) const {
    for (const Disk& d : disks)
        if (d.id == id) return &d;
    return nullptr;
}

int DiskRegistry::count(const std::string& disk, ComponentId c) const {
    auto it = piercings.find(c);
    if (it == piercings.end()) return 0;
    return static_cast<int>(std::count_if(it->second.begin(), it->second.end(),
                                          [&](const Piercing& p) { return p.disk == disk; }));
}

int DiskRegistry::total(const std::string& disk) const {
    int t = 0;
    for (auto& [c, seq] : piercings)
        for (const Piercing& p : seq) t += p.disk == disk;
    return t;
}

std::vector<ComponentId> DiskRegistry::piercing_components(const std::string& disk) const {
    std::vector<ComponentId> out;
    for (auto& [c, seq] : piercings)
        if (std::any_of(seq.begin(), seq.end(), [&](const Piercing& p) { return p.disk == disk; })) out.push_back(c);
    return out;
}

std::string LinkPresentation::name(ComponentId c) const {
    if (c >= 0 && c < static_cast<int>(meta.component_names.size())) return meta.component_names[c];
    return "C" + std::to_string(c);
}

Word word_from_piercings(const LinkPresentation& p, ComponentId c, const std::string& system) {
    if (c < 0 || c >= p.n()) throw RegistryError("component " + std::to_string(c) + " out of range");
    Word w;
    auto it = p.registry.piercings.find(c);
    if (it == p.registry.piercings.end()) return w;
    for (const Piercing& q : it->second) {
        const Disk* d = p.registry.find(q.disk);
        if (!d) throw RegistryError("piercing by unregistered disk " + q.disk);
        if (system.empty() || d->system == system) w.push_back({q.disk, q.sign});
    }
    return w;
}

std::vector<std::string> validate_presentation(const LinkPresentation& p) {
    std::vector<std::string> out;
    for (const DiagramError& e : validate(p.diagram)) out.push_back(std::string(to_string(e.kind)) + ": " + e.detail);
    if (!out.empty()) return out;
    int n = p.n();
    auto lk = linking_matrix(p.diagram);
    std::set<std::string> ids;
    for (const Disk& d : p.registry.disks) {
        if (!ids.insert(d.id).second) out.push_back("duplicate disk id " + d.id);
        if (d.boundary < 0 || d.boundary >= n) out.push_back("disk " + d.id + " has out-of-range boundary");
        if (d.positive_side != 1 && d.positive_side != -1) out.push_back("disk " + d.id + " has bad positive-side tag");
    }
    for (auto& [c, seq] : p.registry.piercings) {
        if (c < 0 || c >= n) {
            out.push_back("piercings listed for out-of-range component " + std::to_string(c));
            continue;
        }
        for (const Piercing& q : seq) {
            const Disk* d = p.registry.find(q.disk);
            if (!d) out.push_back("component " + std::to_string(c) + " pierced by unregistered disk " + q.disk);
            else if (d->boundary == c) out.push_back("disk " + q.disk + " pierces its own boundary");
            if (q.sign != 1 && q.sign != -1) out.push_back("piercing with bad sign on disk " + q.disk);
        }
    }
    if (!out.empty()) return out;
    for (const Disk& d : p.registry.disks)
        for (int c = 0; c < n; ++c) {
            if (c == d.boundary) continue;
            int sum = 0;
            auto it = p.registry.piercings.find(c);
            if (it != p.registry.piercings.end())
                for (const Piercing& q : it->second)
                    if (q.disk == d.id) sum += q.sign;
            if (sum != d.positive_side * lk[c][d.boundary])
                out.push_back("disk " + d.id + ": signed piercings along " + p.name(c) + " sum to " + std::to_string(sum) +
                              " but lk is " + std::to_string(lk[c][d.boundary]));
        }
    for (const ClaspPattern& cp : p.registry.clasps) {
        if (!p.registry.find(cp.disk)) out.push_back("clasp pattern on unregistered disk " + cp.disk);
        else if (p.registry.count(cp.disk, cp.component) != cp.arcs)
            out.push_back("clasp pattern on " + cp.disk + " declares " + std::to_string(cp.arcs) + " arcs");
        for (const ClaspClause& cl : cp.clauses) {
            bool bad = cl.arc < 0 || cl.arc >= cp.arcs;
            for (int q : cl.partners) bad = bad || q < 0 || q >= cp.arcs;
            if (bad) out.push_back("clasp clause out of range on " + cp.disk);
        }
    }
    for (auto& [c, w] : p.designated_words) {
        if (c < 0 || c >= n) {
            out.push_back("designated word for out-of-range component");
            continue;
        }
        if (word_from_piercings(p, c, p.word_system) != w)
            out.push_back("designated word of " + p.name(c) + " disagrees with its piercings");
    }
    for (const auto& s : p.symmetries) {
        std::vector<int> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        bool perm = static_cast<int>(s.size()) == n;
        for (int i = 0; perm && i < n; ++i) perm = sorted[i] == i;
        if (!perm) {
            out.push_back("symmetry is not a permutation of the components");
            continue;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (lk[s[i]][s[j]] != lk[i][j]) {
                    out.push_back("symmetry does not preserve the linking matrix");
                    i = j = n;
                }
    }
    return out;
}

LinkPresentation permute_presentation(const LinkPresentation& p, const std::vector<int>& perm) {
    LinkPresentation q = p;
    q.diagram = permute_components(p.diagram, perm);
    for (Disk& d : q.registry.disks) d.boundary = perm[d.boundary];
    q.registry.piercings.clear();
    for (auto& [c, seq] : p.registry.piercings) q.registry.piercings[perm[c]] = seq;
    for (ClaspPattern& cp : q.registry.clasps) cp.component = perm[cp.component];
    q.designated_words.clear();
    for (auto& [c, w] : p.designated_words) q.designated_words[perm[c]] = w;
    int n = p.n();
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    for (auto& s : q.symmetries) {
        std::vector<int> t(n);
        for (int i = 0; i < n; ++i) t[i] = perm[s[inv[i]]];
        s = t;
    }
    if (static_cast<int>(p.meta.component_names.size()) == n)
        for (int i = 0; i < n; ++i) q.meta.component_names[perm[i]] = p.meta.component_names[i];
    return q;
}

std::vector<std::vector<int>> symmetry_group(const LinkPresentation& p) {
    int n = p.n();
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier)
            for (const auto& s : p.symmetries) {
                if (static_cast<int>(s.size()) != n) continue;
                std::vector<int> h(n);
                for (int i = 0; i < n; ++i) h[i] = s[g[i]];
                if (seen.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace bf
