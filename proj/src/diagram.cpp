#include "brunnian/diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace bf {

const char* to_string(DiagramErrorKind k) {
    switch (k) {
        case DiagramErrorKind::DanglingCrossing: return "DanglingCrossing";
        case DiagramErrorKind::DoubleOver: return "DoubleOver";
        case DiagramErrorKind::BadArity: return "BadArity";
        case DiagramErrorKind::ParseError: return "ParseError";
        case DiagramErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    }
    return "?";
}

namespace {

[[noreturn]] void fail(DiagramErrorKind k, std::string detail) {
    throw DiagramException(DiagramError{k, std::move(detail)});
}

void check_component(const LinkDiagram& d, ComponentId i) {
    if (i < 0 || i >= d.num_components())
        fail(DiagramErrorKind::IndexOutOfRange, "component " + std::to_string(i) + " out of range");
}

}  // namespace

const Crossing* LinkDiagram::find(int id) const {
    auto it = std::lower_bound(crossings.begin(), crossings.end(), id,
                               [](const Crossing& c, int v) { return c.id < v; });
    if (it == crossings.end() || it->id != id) return nullptr;
    return &*it;
}

const Crossing& LinkDiagram::at(int id) const {
    const Crossing* c = find(id);
    if (!c) fail(DiagramErrorKind::DanglingCrossing, "no crossing " + std::to_string(id));
    return *c;
}

LinkDiagram LinkDiagram::from_passages(std::vector<std::vector<Passage>> comps,
                                       const std::map<int, int>& signs) {
    LinkDiagram d;
    d.components = std::move(comps);
    std::map<int, Crossing> table;
    std::map<int, int> overs, unders;
    for (int c = 0; c < d.num_components(); ++c) {
        for (int k = 0; k < static_cast<int>(d.components[c].size()); ++k) {
            const Passage& p = d.components[c][k];
            auto sit = signs.find(p.crossing);
            if (sit == signs.end())
                fail(DiagramErrorKind::DanglingCrossing, "passage references unknown crossing " + std::to_string(p.crossing));
            Crossing& x = table[p.crossing];
            x.id = p.crossing;
            x.sign = sit->second;
            if (p.over) {
                if (overs[p.crossing]++) fail(DiagramErrorKind::DoubleOver, "crossing " + std::to_string(p.crossing) + " is over twice");
                x.over_component = c;
                x.over_position = k;
            } else {
                if (unders[p.crossing]++) fail(DiagramErrorKind::DoubleOver, "crossing " + std::to_string(p.crossing) + " is under twice");
                x.under_component = c;
                x.under_position = k;
            }
        }
    }
    for (auto& [id, x] : table) {
        if (!overs.count(id) || !unders.count(id))
            fail(DiagramErrorKind::DanglingCrossing, "crossing " + std::to_string(id) + " referenced only once");
        d.crossings.push_back(x);
    }
    for (auto& [id, s] : signs)
        if (!table.count(id)) fail(DiagramErrorKind::DanglingCrossing, "crossing " + std::to_string(id) + " never referenced");
    auto errs = validate(d);
    if (!errs.empty()) throw DiagramException(errs.front());
    return d;
}

std::vector<DiagramError> validate(const LinkDiagram& d) {
    std::vector<DiagramError> out;
    auto add = [&](DiagramErrorKind k, std::string s) { out.push_back({k, std::move(s)}); };
    for (size_t i = 1; i < d.crossings.size(); ++i)
        if (d.crossings[i - 1].id >= d.crossings[i].id)
            add(DiagramErrorKind::BadArity, "crossing table not strictly sorted by id at " + std::to_string(d.crossings[i].id));
    std::map<int, std::pair<int, int>> refs;  // id -> (over count, under count)
    for (int c = 0; c < d.num_components(); ++c)
        for (const Passage& p : d.components[c]) {
            if (!d.find(p.crossing)) {
                add(DiagramErrorKind::DanglingCrossing, "passage references missing crossing " + std::to_string(p.crossing));
                continue;
            }
            auto& r = refs[p.crossing];
            (p.over ? r.first : r.second)++;
        }
    for (const Crossing& x : d.crossings) {
        std::string id = std::to_string(x.id);
        if (x.sign != 1 && x.sign != -1) add(DiagramErrorKind::BadArity, "crossing " + id + " has sign " + std::to_string(x.sign));
        auto [o, u] = refs[x.id];
        if (o + u > 2) {
            add(DiagramErrorKind::BadArity, "crossing " + id + " referenced " + std::to_string(o + u) + " times");
            continue;
        }
        if (o == 2 || u == 2) {
            add(DiagramErrorKind::DoubleOver, "crossing " + id + (o == 2 ? " appears twice as over" : " appears twice as under"));
            continue;
        }
        if (o + u < 2) {
            add(DiagramErrorKind::DanglingCrossing, "crossing " + id + " referenced " + std::to_string(o + u) + " times");
            continue;
        }
        auto pos_ok = [&](ComponentId c, int pos, bool over) {
            if (c < 0 || c >= d.num_components()) return false;
            const auto& seq = d.components[c];
            if (pos < 0 || pos >= static_cast<int>(seq.size())) return false;
            return seq[pos].crossing == x.id && seq[pos].over == over;
        };
        if (!pos_ok(x.over_component, x.over_position, true) || !pos_ok(x.under_component, x.under_position, false))
            add(DiagramErrorKind::IndexOutOfRange, "crossing " + id + " positions do not match passages");
    }
    return out;
}

// ---------------------------------------------------------------- PD

namespace {

struct Cursor {
    std::string_view s;
    size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(DiagramErrorKind::ParseError, std::string("expected '") + c + "' at offset " + std::to_string(i));
    }
    long num() {
        ws();
        long v = 0;
        auto r = std::from_chars(s.data() + i, s.data() + s.size(), v);
        if (r.ec != std::errc() || r.ptr == s.data() + i)
            fail(DiagramErrorKind::ParseError, "expected integer at offset " + std::to_string(i));
        i = static_cast<size_t>(r.ptr - s.data());
        return v;
    }
    bool done() {
        ws();
        return i >= s.size();
    }
};

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
    Cursor cur{text};
    std::vector<std::array<long, 4>> xs;
    int free_circles = 0;
    bool wrapped = false;
    cur.ws();
    if (cur.s.substr(cur.i).starts_with("PD")) {
        cur.i += 2;
        cur.expect('[');
        wrapped = true;
    } else if (cur.eat('[')) {
        wrapped = true;
    }
    bool any = false;
    while (!cur.done()) {
        if (wrapped && cur.eat(']')) {
            if (!cur.done()) fail(DiagramErrorKind::ParseError, "trailing text after closing bracket");
            wrapped = false;
            break;
        }
        if (any) cur.expect(',');
        any = true;
        cur.ws();
        if (cur.i >= cur.s.size()) fail(DiagramErrorKind::ParseError, "unexpected end of input");
        char head = cur.s[cur.i++];
        if (head == 'X') {
            cur.expect('[');
            std::vector<long> labels;
            if (!cur.eat(']')) {
                do labels.push_back(cur.num());
                while (cur.eat(','));
                cur.expect(']');
            }
            if (labels.size() != 4)
                fail(DiagramErrorKind::BadArity, "X item with " + std::to_string(labels.size()) + " labels");
            for (long l : labels)
                if (l <= 0) fail(DiagramErrorKind::ParseError, "arc labels must be positive");
            xs.push_back({labels[0], labels[1], labels[2], labels[3]});
        } else if (head == 'O') {
            cur.expect('[');
            long k = cur.num();
            if (k <= 0) fail(DiagramErrorKind::ParseError, "O[k] needs positive k");
            cur.expect(']');
            ++free_circles;
        } else {
            fail(DiagramErrorKind::ParseError, std::string("unexpected '") + head + "'");
        }
    }
    if (wrapped) fail(DiagramErrorKind::ParseError, "missing closing bracket");
    if (xs.empty() && free_circles == 0) free_circles = 1;  // empty code: the unknot

    // label -> occurrences (crossing, slot)
    std::map<long, std::vector<std::pair<int, int>>> occ;
    for (int x = 0; x < static_cast<int>(xs.size()); ++x)
        for (int s = 0; s < 4; ++s) occ[xs[x][s]].push_back({x, s});
    for (auto& [l, v] : occ) {
        if (v.size() == 1) fail(DiagramErrorKind::DanglingCrossing, "arc " + std::to_string(l) + " appears once");
        if (v.size() > 2) fail(DiagramErrorKind::BadArity, "arc " + std::to_string(l) + " appears " + std::to_string(v.size()) + " times");
    }
    auto partner = [&](int x, int s) {
        auto& v = occ[xs[x][s]];
        return v[0] == std::pair{x, s} ? v[1] : v[0];
    };
    // dir[x]: +1 over enters at slot 3, -1 over enters at slot 1, 0 unknown
    std::vector<int> dir(xs.size(), 0);
    auto is_in = [&](int x, int s) -> int {  // 1 in, 0 out, -1 unknown
        if (s == 0) return 1;
        if (s == 2) return 0;
        if (!dir[x]) return -1;
        return (dir[x] == 1) == (s == 3) ? 1 : 0;
    };
    std::vector<std::pair<int, int>> stack;
    auto assign = [&](int x, int s, bool in) {
        int want = (s == 3) == in ? 1 : -1;
        if (dir[x] && dir[x] != want) fail(DiagramErrorKind::ParseError, "inconsistent arc orientation at crossing " + std::to_string(x));
        if (!dir[x]) {
            dir[x] = want;
            stack.push_back({x, 1});
            stack.push_back({x, 3});
        }
    };
    auto propagate = [&]() {
        while (!stack.empty()) {
            auto [x, s] = stack.back();
            stack.pop_back();
            int r = is_in(x, s);
            auto [y, t] = partner(x, s);
            int q = is_in(y, t);
            if (q == -1) {
                assign(y, t, r == 0);
                continue;
            }
            if (q == r) fail(DiagramErrorKind::ParseError, "arc " + std::to_string(xs[x][s]) + " has inconsistent orientation");
        }
    };
    for (int x = 0; x < static_cast<int>(xs.size()); ++x) {
        stack.push_back({x, 0});
        stack.push_back({x, 2});
    }
    propagate();
    for (int x = 0; x < static_cast<int>(xs.size()); ++x) {
        if (dir[x]) continue;
        long b = xs[x][1], dd = xs[x][3];
        bool pos;  // over runs d -> b
        if (b == dd + 1) pos = true;
        else if (dd == b + 1) pos = false;
        else pos = dd > b;  // wrap-around: the larger label closes the component
        dir[x] = pos ? 1 : -1;
        stack.push_back({x, 1});
        stack.push_back({x, 3});
        propagate();
    }

    // trace components: an arc label is followed into the crossing where it is "in"
    std::map<long, std::pair<int, int>> in_at;
    for (auto& [l, v] : occ)
        for (auto [x, s] : v)
            if (is_in(x, s) == 1) in_at[l] = {x, s};
    std::set<long> used;
    std::vector<std::vector<Passage>> comps;
    std::map<int, int> signs;
    for (int x = 0; x < static_cast<int>(xs.size()); ++x) signs[x] = dir[x];
    for (auto& [l0, v] : occ) {
        if (used.count(l0)) continue;
        std::vector<Passage> comp;
        long l = l0;
        while (!used.count(l)) {
            used.insert(l);
            auto [x, s] = in_at.at(l);
            bool over = (s == 1 || s == 3);
            comp.push_back({x, over});
            int out_slot = over ? (s + 2) % 4 : 2;
            l = xs[x][out_slot];
        }
        if (l != l0) fail(DiagramErrorKind::ParseError, "arc succession does not close up");
        comps.push_back(std::move(comp));
    }
    for (int k = 0; k < free_circles; ++k) comps.emplace_back();
    return LinkDiagram::from_passages(std::move(comps), signs);
}

std::string emit_pd(const LinkDiagram& d) {
    struct Slots {
        long u_in = 0, u_out = 0, o_in = 0, o_out = 0;
    };
    std::map<int, Slots> slots;
    long base = 0;
    int circles = 0;
    std::vector<std::string> items;
    for (const auto& comp : d.components) {
        long m = static_cast<long>(comp.size());
        if (m == 0) {
            ++circles;
            continue;
        }
        for (long k = 0; k < m; ++k) {
            long in = base + k + 1, out = base + (k + 1) % m + 1;
            Slots& s = slots[comp[k].crossing];
            if (comp[k].over) s.o_in = in, s.o_out = out;
            else s.u_in = in, s.u_out = out;
        }
        base += m;
    }
    std::ostringstream os;
    bool first = true;
    for (const Crossing& x : d.crossings) {
        const Slots& s = slots.at(x.id);
        if (!first) os << ",";
        first = false;
        if (x.sign > 0) os << "X[" << s.u_in << "," << s.o_out << "," << s.u_out << "," << s.o_in << "]";
        else os << "X[" << s.u_in << "," << s.o_in << "," << s.u_out << "," << s.o_out << "]";
    }
    // PD of a single unknot is the empty code; further free circles get O items.
    if (!(d.crossings.empty() && circles == 1)) {
        for (int k = 0; k < circles; ++k) {
            if (!first) os << ",";
            first = false;
            os << "O[" << base + k + 1 << "]";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- Gauss

LinkDiagram parse_gauss(std::string_view text) {
    std::vector<std::vector<Passage>> comps;
    std::map<int, int> signs;
    std::map<long, int> ids;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() == 1 && toks[0] == "()") {
            comps.emplace_back();
            continue;
        }
        std::vector<Passage> comp;
        for (const auto& t : toks) {
            if (t.size() < 3 || (t[0] != 'O' && t[0] != 'U') || (t.back() != '+' && t.back() != '-'))
                fail(DiagramErrorKind::ParseError, "bad Gauss token '" + t + "'");
            long id = 0;
            auto r = std::from_chars(t.data() + 1, t.data() + t.size() - 1, id);
            if (r.ec != std::errc() || r.ptr != t.data() + t.size() - 1)
                fail(DiagramErrorKind::ParseError, "bad Gauss token '" + t + "'");
            int s = t.back() == '+' ? 1 : -1;
            auto [it, fresh] = ids.emplace(id, static_cast<int>(ids.size()));
            if (!fresh && signs[it->second] != s)
                fail(DiagramErrorKind::ParseError, "crossing " + std::to_string(id) + " given two signs");
            signs[it->second] = s;
            comp.push_back({it->second, t[0] == 'O'});
        }
        comps.push_back(std::move(comp));
    }
    if (comps.empty()) fail(DiagramErrorKind::ParseError, "no components");
    std::map<int, int> count;
    for (auto& c : comps)
        for (auto& p : c) count[p.crossing]++;
    for (auto& [id, n] : count) {
        long orig = 0;
        for (auto& [o, v] : ids)
            if (v == id) orig = o;
        if (n == 1) fail(DiagramErrorKind::DanglingCrossing, "crossing " + std::to_string(orig) + " appears once");
        if (n > 2) fail(DiagramErrorKind::BadArity, "crossing " + std::to_string(orig) + " appears " + std::to_string(n) + " times");
    }
    return LinkDiagram::from_passages(std::move(comps), signs);
}

std::string emit_gauss(const LinkDiagram& d) {
    std::ostringstream os;
    for (const auto& comp : d.components) {
        if (comp.empty()) {
            os << "()\n";
            continue;
        }
        for (size_t k = 0; k < comp.size(); ++k) {
            if (k) os << ' ';
            os << (comp[k].over ? 'O' : 'U') << comp[k].crossing << (d.at(comp[k].crossing).sign > 0 ? '+' : '-');
        }
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------- invariants

int linking_number(const LinkDiagram& d, ComponentId i, ComponentId j) {
    check_component(d, i);
    check_component(d, j);
    if (i == j) fail(DiagramErrorKind::IndexOutOfRange, "linking number needs two distinct components");
    int sum = 0;
    for (const Crossing& x : d.crossings)
        if ((x.over_component == i && x.under_component == j) || (x.over_component == j && x.under_component == i))
            sum += x.sign;
    return sum / 2;
}

std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d) {
    int n = d.num_components();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const Crossing& x : d.crossings)
        if (x.over_component != x.under_component) {
            m[x.over_component][x.under_component] += x.sign;
            m[x.under_component][x.over_component] += x.sign;
        }
    for (auto& row : m)
        for (int& v : row) v /= 2;
    return m;
}

int writhe(const LinkDiagram& d, ComponentId i) {
    check_component(d, i);
    int w = 0;
    for (const Crossing& x : d.crossings)
        if (x.over_component == i && x.under_component == i) w += x.sign;
    return w;
}

LinkDiagram delete_component(const LinkDiagram& d, ComponentId i) {
    check_component(d, i);
    std::set<int> gone;
    for (const Passage& p : d.components[i]) gone.insert(p.crossing);
    std::vector<std::vector<Passage>> comps;
    std::map<int, int> signs;
    for (int c = 0; c < d.num_components(); ++c) {
        if (c == i) continue;
        std::vector<Passage> seq;
        for (const Passage& p : d.components[c])
            if (!gone.count(p.crossing)) {
                seq.push_back(p);
                signs[p.crossing] = d.at(p.crossing).sign;
            }
        comps.push_back(std::move(seq));
    }
    return LinkDiagram::from_passages(std::move(comps), signs);
}

LinkDiagram mirror(const LinkDiagram& d) {
    LinkDiagram m = d;
    for (auto& comp : m.components)
        for (auto& p : comp) p.over = !p.over;
    for (auto& x : m.crossings) {
        x.sign = -x.sign;
        std::swap(x.over_component, x.under_component);
        std::swap(x.over_position, x.under_position);
    }
    return m;
}

bool is_alternating(const LinkDiagram& d) {
    for (const auto& comp : d.components) {
        size_t m = comp.size();
        for (size_t k = 0; k < m; ++k)
            if (comp[k].over == comp[(k + 1) % m].over) return false;
    }
    return true;
}

std::vector<std::vector<ComponentId>> split_families(const LinkDiagram& d) {
    int n = d.num_components();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int a) { return parent[a] == a ? a : parent[a] = root(parent[a]); };
    for (const Crossing& x : d.crossings) parent[root(x.over_component)] = root(x.under_component);
    std::map<int, std::vector<ComponentId>> parts;
    for (int c = 0; c < n; ++c) parts[root(c)].push_back(c);
    std::vector<std::vector<ComponentId>> out;
    for (auto& [r, v] : parts) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

LinkDiagram permute_components(const LinkDiagram& d, const std::vector<int>& perm) {
    int n = d.num_components();
    if (static_cast<int>(perm.size()) != n) fail(DiagramErrorKind::IndexOutOfRange, "permutation size mismatch");
    std::vector<std::vector<Passage>> comps(n);
    std::vector<bool> hit(n, false);
    for (int c = 0; c < n; ++c) {
        if (perm[c] < 0 || perm[c] >= n || hit[perm[c]]) fail(DiagramErrorKind::IndexOutOfRange, "not a permutation");
        hit[perm[c]] = true;
        comps[perm[c]] = d.components[c];
    }
    std::map<int, int> signs;
    for (const Crossing& x : d.crossings) signs[x.id] = x.sign;
    return LinkDiagram::from_passages(std::move(comps), signs);
}

bool equivalent_codes(const LinkDiagram& a, const LinkDiagram& b) {
    if (a.num_components() != b.num_components() || a.num_crossings() != b.num_crossings()) return false;
    // Component order is fixed; try each rotation of each component, building the id bijection greedily.
    std::map<int, int> fwd, bwd;
    std::function<bool(int)> go = [&](int c) -> bool {
        if (c == a.num_components()) return true;
        const auto& ca = a.components[c];
        const auto& cb = b.components[c];
        if (ca.size() != cb.size()) return false;
        size_t m = ca.size();
        if (m == 0) return go(c + 1);
        for (size_t r = 0; r < m; ++r) {
            auto f0 = fwd, b0 = bwd;
            bool ok = true;
            for (size_t k = 0; k < m && ok; ++k) {
                const Passage& pa = ca[k];
                const Passage& pb = cb[(k + r) % m];
                if (pa.over != pb.over || a.at(pa.crossing).sign != b.at(pb.crossing).sign) ok = false;
                else {
                    auto [it, f1] = fwd.emplace(pa.crossing, pb.crossing);
                    auto [jt, f2] = bwd.emplace(pb.crossing, pa.crossing);
                    if (it->second != pb.crossing || jt->second != pa.crossing) ok = false;
                }
            }
            if (ok && go(c + 1)) return true;
            fwd = f0;
            bwd = b0;
        }
        return false;
    };
    return go(0);
}

}  // namespace bf
