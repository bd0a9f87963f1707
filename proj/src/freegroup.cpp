#include "brunnian/freegroup.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bf {

const char* to_string(Side s) { return s == Side::Pos ? "Pos" : "Neg"; }

const char* to_string(StabilityStatus s) { return s == StabilityStatus::Certified ? "Certified" : "Inconclusive"; }

const char* to_string(StabilityReason r) {
    switch (r) {
        case StabilityReason::None: return "None";
        case StabilityReason::BoundBelowActual: return "BoundBelowActual";
        case StabilityReason::MultiComponentDisk: return "MultiComponentDisk";
    }
    return "?";
}

const char* to_string(SnVia v) { return v == SnVia::CountBelowN ? "CountBelowN" : "StableCertificate"; }

Word reduce(const Word& w) {
    Word st;
    for (const Letter& l : w) {
        if (!st.empty() && st.back().gen == l.gen && st.back().sign == -l.sign) st.pop_back();
        else st.push_back(l);
    }
    return st;
}

Word cyclic_reduce(const Word& w) {
    Word r = reduce(w);
    size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i].gen == r[j - 1].gen && r[i].sign == -r[j - 1].sign) ++i, --j;
    return Word(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
}

Word inverse(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (Letter& l : r) l.sign = -l.sign;
    return r;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word commutator(const Word& a, const Word& b) { return concat(concat(a, b), concat(inverse(a), inverse(b))); }

Word parse_word(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    Word w;
    while (in >> tok) {
        int sign = 1;
        if (tok.ends_with("^-1")) {
            sign = -1;
            tok.resize(tok.size() - 3);
        } else if (std::isupper(static_cast<unsigned char>(tok[0])) && tok[0] == 'G') {
            sign = -1;
            tok[0] = 'g';
        }
        if (tok.empty()) throw std::invalid_argument("empty letter in word");
        w.push_back({tok, sign});
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string s;
    for (const Letter& l : w) {
        if (!s.empty()) s += ' ';
        s += l.gen;
        if (l.sign < 0) s += "^-1";
    }
    return s;
}

int sphere_crossing_count(const Word& cyclic, const SideAssignment& a) {
    struct Half {
        Side side;
        int letter;
    };
    std::vector<Half> seq;
    for (int i = 0; i < static_cast<int>(cyclic.size()); ++i) {
        const Letter& l = cyclic[i];
        if (l.gen == a.pierced) {
            // entering from the negative side of the pierced disk for a positive letter
            Side exit = l.sign > 0 ? a.pierced_positive_side : opposite(a.pierced_positive_side);
            seq.push_back({opposite(exit), i});
            seq.push_back({exit, i});
        } else {
            auto it = a.sides.find(l.gen);
            if (it == a.sides.end()) throw std::invalid_argument("side assignment misses generator " + l.gen);
            seq.push_back({it->second, i});
        }
    }
    int n = static_cast<int>(seq.size()), count = 0;
    if (n < 2) return 0;
    for (int k = 0; k < n; ++k) {
        const Half& x = seq[k];
        const Half& y = seq[(k + 1) % n];
        if (x.letter == y.letter && k + 1 < n) continue;  // inside one expanded letter
        if (x.side != y.side) ++count;
    }
    return count;
}

StabilityVerdict stable_disk_certificate(const LinkPresentation& p, const std::string& disk) {
    const Disk* d = p.registry.find(disk);
    if (!d) throw UnregisteredDisk(disk);
    StabilityVerdict v;
    v.actual = p.registry.total(disk);
    auto comps = p.registry.piercing_components(disk);
    if (comps.size() > 1) {
        v.status = StabilityStatus::Inconclusive;
        v.reason = StabilityReason::MultiComponentDisk;
        return v;
    }
    if (comps.empty()) {
        v.status = StabilityStatus::Certified;
        return v;
    }
    v.component = comps[0];
    Word w = word_from_piercings(p, comps[0], d->system);
    std::set<std::string> gens;
    for (const Letter& l : w)
        if (l.gen != disk) gens.insert(l.gen);
    std::vector<std::string> g(gens.begin(), gens.end());
    int best = -1;
    for (Side pps : {Side::Pos, Side::Neg})
        for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
            SideAssignment a;
            a.pierced = disk;
            a.pierced_positive_side = pps;
            for (size_t i = 0; i < g.size(); ++i) a.sides[g[i]] = (mask >> i) & 1u ? Side::Neg : Side::Pos;
            int b = sphere_crossing_count(w, a);
            v.cases.push_back({a, b});
            if (best < 0 || b < best) best = b;
        }
    v.min_bound = best;
    if (v.min_bound >= v.actual) v.status = StabilityStatus::Certified;
    else v.reason = StabilityReason::BoundBelowActual;
    return v;
}

ClaspPattern standard_clasp_pattern(int m) {
    if (m <= 0) throw std::invalid_argument("clasp chain needs m >= 1");
    ClaspPattern cp;
    cp.arcs = 2 * m;
    for (int i = 0; i < cp.arcs; i += 2)  // 0-based even = 1-based odd
        cp.clauses.push_back({i, {(i - 1 + cp.arcs) % cp.arcs, (i + 1) % cp.arcs}});
    return cp;
}

int clasp_chain_bound(const ClaspPattern& pattern) {
    int n = pattern.arcs;
    if (n <= 0) throw std::invalid_argument("clasp pattern without arcs");
    if (n > 26) throw std::invalid_argument("clasp pattern too long for brute force");
    int best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const ClaspClause& c : pattern.clauses) {
            bool sat = (mask >> c.arc) & 1u;
            if (!sat) {
                sat = !c.partners.empty();
                for (int q : c.partners) sat = sat && ((mask >> q) & 1u);
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        int sum = 2 * std::popcount(mask);
        if (best < 0 || sum < best) best = sum;
    }
    return best;
}

int clasp_chain_certificate(int m) { return clasp_chain_bound(standard_clasp_pattern(m)); }

StableEvidence certify_stable(const LinkPresentation& p, const std::string& disk) {
    StableEvidence e;
    StabilityVerdict v = stable_disk_certificate(p, disk);
    e.actual = v.actual;
    if (v.status == StabilityStatus::Certified) {
        e.certified = true;
        e.method = "sphere-count";
        e.bound = v.min_bound;
        return e;
    }
    if (v.reason == StabilityReason::MultiComponentDisk) return e;
    for (const ClaspPattern& cp : p.registry.clasps) {
        if (cp.disk != disk || !v.component || cp.component != *v.component || cp.arcs != v.actual) continue;
        int b = clasp_chain_bound(cp);
        if (b >= v.actual) {
            e.certified = true;
            e.method = "clasp-chain";
            e.bound = b;
            return e;
        }
    }
    return e;
}

SnResult sn_check(const LinkPresentation& p, const std::string& disk, int N) {
    if (!p.registry.find(disk)) throw UnregisteredDisk(disk);
    SnResult r;
    r.N = N;
    r.total = p.registry.total(disk);
    if (r.total < N) {
        r.holds = true;
        r.via = SnVia::CountBelowN;
        return r;
    }
    r.stability = stable_disk_certificate(p, disk);
    if (r.stability->status == StabilityStatus::Certified) {
        r.holds = true;
        r.via = SnVia::StableCertificate;
        return r;
    }
    StableEvidence e = certify_stable(p, disk);
    if (e.certified) {
        r.clasp_bound = e.bound;
        r.holds = true;
        r.via = SnVia::StableCertificate;
    }
    return r;
}

}  // namespace bf
