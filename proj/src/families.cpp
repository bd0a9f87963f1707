#include "brunnian/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "brunnian/freegroup.hpp"

namespace bf {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

IndexedWord comm(const IndexedWord& a, const IndexedWord& b) {
    auto inv = [](const IndexedWord& w) {
        IndexedWord r(w.rbegin(), w.rend());
        for (auto& [k, e] : r) e = -e;
        return r;
    };
    IndexedWord r = a;
    r.insert(r.end(), b.begin(), b.end());
    auto ia = inv(a), ib = inv(b);
    r.insert(r.end(), ia.begin(), ia.end());
    r.insert(r.end(), ib.begin(), ib.end());
    return r;
}

IndexedWord balanced(int lo, int hi) {  // generators lo..hi inclusive
    if (lo == hi) return {{lo, 1}};
    int n = hi - lo + 1;
    int mid = lo + (n + 1) / 2;
    return comm(balanced(lo, mid - 1), balanced(mid, hi));
}

int triangle(int n) { return n * (n + 1) / 2; }

std::vector<std::string> one_based_names(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("C" + std::to_string(i));
    return v;
}

std::vector<int> rotation(int n, int by) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = ((i + by) % n + n) % n;
    return s;
}

// reflection fixing index `axis`
std::vector<int> reflection(int n, int axis) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = ((2 * axis - i) % n + n) % n;
    return s;
}

std::map<std::string, bool> regularity_flags() { return {{"Ri", true}, {"Rii", true}, {"Riii", true}}; }

// Word link on components 0..K with rectangle disks in `system`, named by prefix + component name suffix.
LinkPresentation word_link_presentation(const IndexedWord& word, int K, const std::vector<std::string>& names,
                                        const std::string& prefix, const std::string& system) {
    LinkPresentation p;
    p.diagram = diagram_from_polylines(word_link_geometry(word, K));
    p.meta.component_names = names;
    for (int k = 1; k <= K; ++k) p.registry.disks.push_back({prefix + names[k].substr(1), k, 1, system});
    auto& seq = p.registry.piercings[0];
    for (auto [k, e] : word) seq.push_back({prefix + names[k].substr(1), e});
    p.registry.disjoint[system] = true;
    p.word_system = system;
    p.designated_words[0] = word_from_piercings(p, 0, system);
    return p;
}

std::vector<Piercing> clasp_sequence(const std::string& disk, int times) {
    std::vector<Piercing> v;
    for (int t = 0; t < times; ++t) v.push_back({disk, t % 2 == 0 ? 1 : -1});
    return v;
}

LinkPresentation lamp_presentation(const std::vector<int>& twists, const std::vector<std::string>& names,
                                   const std::string& disk, const std::string& system) {
    LinkPresentation p;
    p.diagram = diagram_from_polylines(lamp_geometry(twists));
    p.meta.component_names = names;
    int arcs = static_cast<int>(twists.size());
    p.registry.disks.push_back({disk, 0, 1, system});
    p.registry.piercings[1] = clasp_sequence(disk, arcs);
    p.registry.disjoint[system] = true;
    ClaspPattern cp = standard_clasp_pattern(arcs / 2);
    cp.disk = disk;
    cp.component = 1;
    p.registry.clasps.push_back(cp);
    p.word_system = system;
    for (int c = 0; c < 2; ++c) p.designated_words[c] = word_from_piercings(p, c, system);
    return p;
}

// Stand-in diagram carrying a Brunnian link with `count` components; the
// witness disks certify nontriviality while template disks stay separate.
LinkPresentation standin(int count, const std::vector<std::string>& names) {
    if (count == 2) return lamp_presentation({1, 1}, names, "E" + names[0].substr(1), "witness");
    return word_link_presentation(balanced_commutator(count - 1), count - 1, names, "E", "witness");
}

void add_template_disk(LinkPresentation& p, ComponentId boundary,
                       const std::vector<std::pair<ComponentId, int>>& pierced_by) {
    std::string id = "D" + p.name(boundary).substr(1);
    p.registry.disks.push_back({id, boundary, 1, "complex"});
    for (auto [c, times] : pierced_by) {
        auto seq = clasp_sequence(id, times);
        auto& dst = p.registry.piercings[c];
        dst.insert(dst.end(), seq.begin(), seq.end());
    }
}

// Merges repeated piercers (e.g. both grid neighbours being one component).
std::vector<std::pair<ComponentId, int>> neighbours(std::vector<ComponentId> cs, int each) {
    std::map<ComponentId, int> m;
    for (ComponentId c : cs) m[c] += each;
    return {m.begin(), m.end()};
}

}  // namespace

IndexedWord nested_commutator(int k) {
    IndexedWord w{{1, 1}};
    for (int g = 2; g <= k; ++g) w = comm(w, {{g, 1}});
    return w;
}

IndexedWord balanced_commutator(int k) { return balanced(1, k); }

std::vector<Polyline> word_link_geometry(const IndexedWord& word, int K) {
    double W = 3 + 2.0 * static_cast<double>(word.size());
    std::vector<Polyline> comps(K + 1);
    for (int k = 1; k <= K; ++k) {
        double y0 = 4.0 * k, y1 = y0 + 2;
        comps[k] = {{0, y0, 0}, {W, y0, 0}, {W, y1, 0}, {0, y1, 0}};
    }
    Polyline& c0 = comps[0];
    c0.push_back({-1, 0, 1});
    for (size_t j = 0; j < word.size(); ++j) {
        auto [k, e] = word[j];
        double a = 1.5 + 2.0 * static_cast<double>(j), b = a + 0.6, y = 4.0 * k;
        c0.push_back({a, 0, 1});
        // the finger dips below the plane on one side of the rectangle edge and
        // passes through the rectangle interior in the direction of e
        if (e > 0) {
            c0.push_back({a, y - 1, 1});
            c0.push_back({a, y - 0.5, -1});
            c0.push_back({a, y + 1, -1});
            c0.push_back({b, y + 1, 1});
        } else {
            c0.push_back({a, y + 1, 1});
            c0.push_back({b, y + 1, -1});
            c0.push_back({b, y - 0.5, -1});
            c0.push_back({b, y - 1, 1});
        }
        c0.push_back({b, 0, 1});
    }
    c0.push_back({W + 1, 0, 1});
    c0.push_back({W + 1, -1, 1});
    c0.push_back({-1, -1, 1});
    return comps;
}

std::vector<Polyline> lamp_geometry(const std::vector<int>& twists) {
    int N = static_cast<int>(twists.size());
    double Wd = 2.0 * N;
    auto P = [&](double x, double y, double z) {
        double a = 2 * std::numbers::pi * x / Wd, r = 2 + 0.5 * y;
        return Vec3{r * std::cos(a), r * std::sin(a), z};
    };
    // subdivide in the strip coordinates so that the polar image stays embedded
    auto subdivide = [](const std::vector<Vec3>& pts) {
        std::vector<Vec3> out;
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            const Vec3 &a = pts[i], &b = pts[i + 1];
            int steps = std::max(2, static_cast<int>(std::hypot(b.x - a.x, b.y - a.y) / 0.0937));
            for (int s = 0; s < steps; ++s) {
                double t = static_cast<double>(s) / steps;
                out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z)});
            }
        }
        out.push_back(pts.back());
        return out;
    };
    Polyline c1, c2;
    for (int x = 0; x < static_cast<int>(Wd * 4); ++x) c1.push_back(P(x / 4.0, 1, 0));
    for (int i = 0; i < N; ++i) {
        double X = 2.0 * i;
        double s = i % 2 == 0 ? 1 : -1;
        double top = 4 + 0.6 * (i % 2) + ((i == N - 1 && N % 2) ? 0.6 : 0);
        double hi = 0.5 * s, lo = -0.5 * s;
        std::vector<Vec3> pts{{X + 0.1, 0, hi}, {X + 0.5, 2, hi}, {X + 0.5, top, hi}, {X + 2.93, top, lo}, {X + 2.93, 3.03, lo}};
        // each extra full twist zigzags around the neighbour's vertical at X+2.5
        double y = 3.03;
        for (int t = 0; t < (twists[i] - 1) / 2; ++t) {
            pts.push_back({X + 2.64, y - 0.05, -s * 0.5 - 0.5});
            pts.push_back({X + 2.37, y - 0.06, -s * 0.5 - 0.5});
            pts.push_back({X + 2.2, y - 0.1, 0.0});
            pts.push_back({X + 2.37, y - 0.14, -s * 0.5 + 0.5});
            pts.push_back({X + 2.64, y - 0.15, -s * 0.5 + 0.5});
            pts.push_back({X + 2.93, y - 0.2, lo});
            y -= 0.2;
        }
        pts.push_back({X + 1.47, y, hi});
        pts.push_back({X + 1.47, 2, hi});
        pts.push_back({X + 1.9, 0, hi});
        for (const Vec3& v : subdivide(pts)) c2.push_back(P(v.x, v.y, v.z));
    }
    return {c1, c2};
}

int component_count(const FamilySpec& s) {
    const auto& a = s.params;
    auto need = [&](size_t k) { require(a.size() == k, s.family + " expects " + std::to_string(k) + " parameters"); };
    if (s.family == "lamp" || s.family == "hopf") return 2;
    if (s.family == "debrunner" || s.family == "w" || s.family == "brunnchain" || s.family == "milnor") {
        need(1);
        return a[0];
    }
    if (s.family == "torusgrid") {
        need(2);
        return 2 * a[0] * a[1];
    }
    if (s.family == "tube") {
        need(2);
        return a[0] * a[1];
    }
    if (s.family == "carpet") {
        need(3);
        return a[2] * triangle(a[1]);
    }
    throw std::invalid_argument("unknown family " + s.family);
}

LinkPresentation generate(const FamilySpec& spec) {
    const std::string& f = spec.family;
    const auto& a = spec.params;
    LinkPresentation p;
    std::string formula;
    if (f == "hopf") {
        require(a.size() <= 1, "hopf takes an optional sign");
        return hopf_presentation(a.empty() || a[0] > 0 ? 1 : -1);
    } else if (f == "lamp") {
        require(a.size() >= 2 && a.size() % 2 == 0, "lamp needs an even number (>= 2) of indices");
        for (int t : a) require(t > 0 && t % 2 == 1, "lamp indices must be positive odd integers");
        p = lamp_presentation(a, {"C1", "C2"}, "D", "complex");
        formula = "2";
        if (std::all_of(a.begin(), a.end(), [&](int t) { return t == a[0]; })) p.symmetries = {{1, 0}};
        p.meta.construction = "round circle C1; C2 clasps it once per index, each index adding half twists";
    } else if (f == "milnor" || f == "w") {
        int n = component_count(spec);
        require(n >= 3, f + " needs n >= 3");
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("C" + std::to_string(i));
        IndexedWord w = f == "milnor" ? nested_commutator(n - 1) : balanced_commutator(n - 1);
        p = word_link_presentation(w, n - 1, names, "D", "complex");
        formula = "n";
        p.meta.construction = f == "milnor" ? "C0 follows the left-nested commutator through flat disks D1..D(n-1)"
                                            : "C0 follows the balanced commutator through flat disks D1..D(n-1)";
    } else if (f == "debrunner" || f == "brunnchain") {
        int n = component_count(spec);
        require(n >= (f == "debrunner" ? 2 : 3), f + " parameter out of range");
        p = standin(n, one_based_names(n));
        formula = "n";
        if (f == "debrunner") {
            if (n == 2) add_template_disk(p, 1, {{0, 4}});
            else add_template_disk(p, 1, {{0, 2}, {2, 2}});
        } else {
            for (int i = 0; i < n; ++i) add_template_disk(p, i, neighbours({(i + n - 1) % n, (i + 1) % n}, 2));
        }
        p.registry.disjoint["complex"] = false;
        if (n >= 3) p.symmetries = {rotation(n, 1), reflection(n, 1)};
        else p.symmetries = {{1, 0}};
        p.meta.construction = "cyclic chain template; diagram is a Brunnian stand-in with the same component count";
    } else if (f == "torusgrid") {
        int m = a.size() == 2 ? a[0] : 0, c = a.size() == 2 ? a[1] : 0;
        require(a.size() == 2 && m >= 1 && c >= 1, "torusgrid needs m >= 1, n >= 1");
        int rows = 2 * m, n = rows * c;
        std::vector<std::string> names;
        for (int i = 1; i <= rows; ++i)
            for (int j = 1; j <= c; ++j) names.push_back("C" + std::to_string(i) + "," + std::to_string(j));
        p = standin(n, names);
        auto idx = [&](int i, int j) { return ((i % rows + rows) % rows) * c + ((j % c + c) % c); };
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < c; ++j) add_template_disk(p, idx(i, j), neighbours({idx(i - 1, j), idx(i + 1, j)}, 2));
        p.registry.disjoint["complex"] = false;
        std::vector<int> down(n), right(n);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < c; ++j) {
                down[idx(i, j)] = idx(i + 1, j);
                right[idx(i, j)] = idx(i, j + 1);
            }
        p.symmetries = {down};
        if (c > 1) p.symmetries.push_back(right);
        formula = "2mn";
        p.meta.construction = "2m rows of n components on a torus; D(i,j) clasps the vertical neighbours";
    } else if (f == "tube") {
        int m = a.size() == 2 ? a[0] : 0, c = a.size() == 2 ? a[1] : 0;
        require(a.size() == 2 && m >= 1 && c >= 2, "tube needs m >= 1, n >= 2");
        int n = m * c;
        std::vector<std::string> names;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= c; ++j) names.push_back("C" + std::to_string(i) + "," + std::to_string(j));
        p = standin(n, names);
        auto idx = [&](int i, int j) { return i * c + ((j % c + c) % c); };
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < c; ++j) add_template_disk(p, idx(i, j), neighbours({idx(i, j - 1), idx(i, j + 1)}, 2));
        p.registry.disjoint["complex"] = false;
        std::vector<int> around(n), flip(n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < c; ++j) {
                around[idx(i, j)] = idx(i, j + 1);
                flip[idx(i, j)] = idx(m - 1 - i, j);
            }
        p.symmetries = {around};
        if (m > 1) p.symmetries.push_back(flip);
        formula = "mn";
        p.meta.construction = "m rows of n components around a tube; D(i,j) clasps its row neighbours";
    } else if (f == "carpet") {
        require(a.size() == 3, "carpet needs m, n, p");
        int m = a[0], rowsn = a[1], copies = a[2];
        require(m >= 1 && m < rowsn && copies >= 1, "carpet needs 1 <= m < n and p >= 1");
        int T = triangle(rowsn), n = copies * T;
        // cell (r, c), 1 <= r, 1 <= c <= rowsn + 1 - r, within copy q
        auto exists = [&](int r, int c) { return r >= 1 && c >= 1 && c <= rowsn + 1 - r; };
        auto idx = [&](int q, int r, int c) {
            int off = 0;
            for (int rr = 1; rr < r; ++rr) off += rowsn + 1 - rr;
            return ((q % copies + copies) % copies) * T + off + (c - 1);
        };
        std::vector<std::string> names(n);
        for (int q = 0; q < copies; ++q)
            for (int r = 1; r <= rowsn; ++r)
                for (int c = 1; exists(r, c); ++c) names[idx(q, r, c)] = "C" + std::to_string(r) + std::to_string(c) + std::string(q, '\'');
        p = standin(n, names);
        for (int r = 1; r <= rowsn; ++r)
            for (int c = 1; exists(r, c); ++c) {
                std::vector<ComponentId> by;
                if (exists(r + 1, c)) by.push_back(idx(0, r + 1, c));
                else if (exists(r, c - 1) && copies > 1) by.push_back(idx(-1, r, c - 1));
                if (r >= 2 && exists(r - 1, c + 1)) by.push_back(idx(0, r - 1, c + 1));
                else if (r == 1 && exists(1, c + 1)) by.push_back(idx(0, 1, c + 1));
                std::vector<std::pair<ComponentId, int>> pierce;
                if (by.empty() && idx(0, 1, 1) != idx(0, r, c)) pierce = {{idx(0, 1, 1), 4}};
                else pierce = neighbours(by, 2);
                if (!pierce.empty()) add_template_disk(p, idx(0, r, c), pierce);
            }
        p.registry.disjoint["complex"] = false;
        if (copies > 1) {
            std::vector<int> shift(n);
            for (int i = 0; i < n; ++i) shift[i] = (i + T) % n;
            p.symmetries = {shift};
        }
        formula = "p*n(n+1)/2";
        p.meta.construction = "p copies of a triangular carpet with n rows; template disks in the first copy";
    } else {
        throw std::invalid_argument("unknown family " + f);
    }
    p.meta.spec = spec;
    p.meta.count_formula = formula;
    p.meta.regularity = regularity_flags();
    if (p.n() != component_count(spec)) throw std::logic_error("component count disagrees with formula");
    return p;
}

LinkPresentation hopf_presentation(int sign) {
    LinkPresentation p;
    p.diagram = parse_pd("X[4,1,3,2],X[2,3,1,4]");  // the negative clasp
    if (sign > 0) p.diagram = mirror(p.diagram);
    int lk = linking_number(p.diagram, 0, 1);
    p.meta.component_names = {"C1", "C2"};
    p.registry.disks = {{"D1", 0, 1, "complex"}, {"D2", 1, 1, "complex"}};
    p.registry.piercings[1] = {{"D1", lk}};
    p.registry.piercings[0] = {{"D2", lk}};
    p.registry.disjoint["complex"] = false;
    p.symmetries = {{1, 0}};
    p.meta.spec = {"hopf", {sign}};
    p.meta.count_formula = "2";
    p.meta.regularity = regularity_flags();
    p.meta.construction = "standard two-crossing Hopf diagram";
    return p;
}

std::vector<Bipartition> all_bipartitions(int n) {
    if (n < 2) return {};
    if (n > 24) throw std::invalid_argument("too many components to enumerate bipartitions");
    std::vector<Bipartition> out;
    unsigned full = (1u << n) - 1;
    for (unsigned mask = 1; mask < full; mask += 2) {  // always contains 0
        Bipartition b;
        for (int i = 0; i < n; ++i) ((mask >> i) & 1u ? b.I : b.J).push_back(i);
        out.push_back(b);
    }
    std::sort(out.begin(), out.end(), [](const Bipartition& x, const Bipartition& y) { return x.I < y.I; });
    return out;
}

namespace {

std::vector<ComponentId> normal_side(const std::vector<int>& g, const Bipartition& h) {
    std::vector<ComponentId> a, b;
    for (int i : h.I) a.push_back(g[i]);
    for (int j : h.J) b.push_back(g[j]);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return std::find(a.begin(), a.end(), 0) != a.end() ? a : b;
}

Bipartition from_side(int n, const std::vector<ComponentId>& side) {
    Bipartition b;
    b.I = side;
    for (int i = 0; i < n; ++i)
        if (!std::binary_search(side.begin(), side.end(), i)) b.J.push_back(i);
    return b;
}

}  // namespace

Bipartition orbit_representative(const LinkPresentation& p, const Bipartition& h) {
    std::vector<ComponentId> best;
    for (const auto& g : symmetry_group(p)) {
        auto s = normal_side(g, h);
        if (best.empty() || s < best) best = s;
    }
    return from_side(p.n(), best);
}

std::vector<Bipartition> symmetry_orbits(const LinkPresentation& p) {
    auto group = symmetry_group(p);
    std::set<std::vector<ComponentId>> reps;
    for (const Bipartition& h : all_bipartitions(p.n())) {
        std::vector<ComponentId> best;
        for (const auto& g : group) {
            auto s = normal_side(g, h);
            if (best.empty() || s < best) best = s;
        }
        reps.insert(best);
    }
    std::vector<Bipartition> out;
    for (const auto& s : reps) out.push_back(from_side(p.n(), s));
    return out;
}

}  // namespace bf
