#include "brunnian/reidemeister.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace bf {

const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::R1_remove: return "R1_remove";
        case MoveKind::R2_remove: return "R2_remove";
        case MoveKind::R3_slide: return "R3_slide";
    }
    return "?";
}

namespace {

// Mutable working copy: passage sequences plus a dense sign table by id.
struct Work {
    std::vector<std::vector<Passage>> comps;
    std::vector<int> sign;  // 0 for dead ids

    int crossings() const {
        int n = 0;
        for (int s : sign) n += s != 0;
        return n;
    }
};

Work to_work(const LinkDiagram& d) {
    Work w;
    w.comps = d.components;
    int maxid = -1;
    for (const Crossing& x : d.crossings) maxid = std::max(maxid, x.id);
    w.sign.assign(maxid + 1, 0);
    for (const Crossing& x : d.crossings) w.sign[x.id] = x.sign;
    return w;
}

LinkDiagram to_diagram(const Work& w) {
    std::map<int, int> signs;
    for (int id = 0; id < static_cast<int>(w.sign.size()); ++id)
        if (w.sign[id]) signs[id] = w.sign[id];
    return LinkDiagram::from_passages(w.comps, signs);
}

std::string key(const Work& w) {
    std::string s;
    for (const auto& c : w.comps) {
        for (const Passage& p : c) {
            s += std::to_string(p.crossing);
            s += p.over ? 'o' : 'u';
        }
        s += '|';
    }
    return s;
}

// Face structure of the planar diagram, derived from PD slot conventions:
// slots are counterclockwise from the incoming under strand; under enters 0,
// leaves 2; over enters 3/leaves 1 when positive and the reverse when negative.
struct Faces {
    struct Slot {
        int g = -1;
        bool in = false;
    };
    std::vector<std::pair<int, int>> pass;  // g -> (comp, pos)
    std::vector<int> offset;
    std::vector<std::array<Slot, 4>> at;    // by crossing id

    static int in_slot(const Passage& p, int sign) { return p.over ? (sign > 0 ? 3 : 1) : 0; }
    static int out_slot(const Passage& p, int sign) { return p.over ? (sign > 0 ? 1 : 3) : 2; }

    const Work& w;
    explicit Faces(const Work& w_) : w(w_) {
        at.assign(w.sign.size(), {});
        for (int c = 0; c < static_cast<int>(w.comps.size()); ++c) {
            offset.push_back(static_cast<int>(pass.size()));
            for (int k = 0; k < static_cast<int>(w.comps[c].size()); ++k) {
                const Passage& p = w.comps[c][k];
                int g = static_cast<int>(pass.size());
                pass.push_back({c, k});
                int s = w.sign[p.crossing];
                at[p.crossing][in_slot(p, s)] = {g, true};
                at[p.crossing][out_slot(p, s)] = {g, false};
            }
        }
    }
    const Passage& P(int g) const { return w.comps[pass[g].first][pass[g].second]; }
    int step(int g, int d) const {
        auto [c, k] = pass[g];
        int m = static_cast<int>(w.comps[c].size());
        return offset[c] + ((k + d) % m + m) % m;
    }
    // Follow the edge leaving crossing x through slot s; returns the far end.
    std::pair<int, int> far(int x, int s) const {
        Slot sl = at[x][s];
        if (sl.in) {
            int h = step(sl.g, -1);
            const Passage& p = P(h);
            return {p.crossing, out_slot(p, w.sign[p.crossing])};
        }
        int h = step(sl.g, 1);
        const Passage& p = P(h);
        return {p.crossing, in_slot(p, w.sign[p.crossing])};
    }
    // Passage index entered by the edge at dart (x, s).
    int head(int x, int s) const {
        Slot sl = at[x][s];
        if (sl.in) return sl.g;
        return step(sl.g, 1);
    }
};

struct Site {
    MoveKind kind;
    std::vector<int> ids;
    std::vector<std::pair<int, int>> darts;  // for R3: the three edge darts
};

// Enumerates faces of degree <= 3 and turns them into move sites.
std::vector<Site> find_sites(const Work& w, bool want_r3) {
    Faces f(w);
    std::vector<Site> out;
    int nid = static_cast<int>(w.sign.size());
    std::vector<std::array<bool, 4>> seen(nid, {false, false, false, false});
    for (int x = 0; x < nid; ++x) {
        if (!w.sign[x]) continue;
        for (int s = 0; s < 4; ++s) {
            if (seen[x][s]) continue;
            std::vector<std::pair<int, int>> darts;
            std::vector<std::pair<int, int>> ends;
            int cx = x, cs = s;
            while (!seen[cx][cs]) {
                seen[cx][cs] = true;
                darts.push_back({cx, cs});
                auto [y, t] = f.far(cx, cs);
                ends.push_back({y, t});
                cx = y;
                cs = (t + 1) % 4;
                if (darts.size() > 3) {
                    // finish marking the face without recording it
                    while (!seen[cx][cs]) {
                        seen[cx][cs] = true;
                        auto [y2, t2] = f.far(cx, cs);
                        cx = y2;
                        cs = (t2 + 1) % 4;
                    }
                    darts.clear();
                    break;
                }
            }
            if (darts.empty()) continue;
            if (darts.size() == 1) {
                out.push_back({MoveKind::R1_remove, {darts[0].first}, {}});
            } else if (darts.size() == 2) {
                int a = darts[0].first, b = darts[1].first;
                if (a == b) continue;
                // a strand over (or under) at both ends of one bigon edge
                if ((darts[0].second & 1) != (ends[0].second & 1)) continue;
                out.push_back({MoveKind::R2_remove, {std::min(a, b), std::max(a, b)}, {}});
            } else if (want_r3) {
                int a = darts[0].first, b = darts[1].first, c = darts[2].first;
                if (a == b || b == c || a == c) continue;
                bool noncyclic = false;
                for (int i = 0; i < 3; ++i)
                    if ((darts[i].second & 1) == (ends[i].second & 1)) noncyclic = true;
                if (!noncyclic) continue;
                std::vector<int> ids{a, b, c};
                std::sort(ids.begin(), ids.end());
                out.push_back({MoveKind::R3_slide, ids, darts});
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Site& p, const Site& q) {
        if (p.ids != q.ids) return p.ids < q.ids;
        return p.kind < q.kind;
    });
    // two faces can share a crossing triple; only the first one is ever used so
    // that a site alone identifies the move when a trace is replayed
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Site& p, const Site& q) { return p.kind == q.kind && p.ids == q.ids; }),
              out.end());
    return out;
}

void remove_ids(Work& w, const std::vector<int>& ids) {
    for (int id : ids) w.sign[id] = 0;
    for (auto& c : w.comps)
        std::erase_if(c, [&](const Passage& p) { return w.sign[p.crossing] == 0; });
}

void slide(Work& w, const Site& s) {
    Faces f(w);
    std::vector<std::pair<int, int>> swaps;
    for (auto [x, sl] : s.darts) swaps.push_back(f.pass[f.head(x, sl)]);
    for (auto [c, k] : swaps) {
        auto& seq = w.comps[c];
        int m = static_cast<int>(seq.size());
        std::swap(seq[(k - 1 + m) % m], seq[k]);
    }
}

void apply_site(Work& w, const Site& s) {
    if (s.kind == MoveKind::R3_slide) slide(w, s);
    else remove_ids(w, s.ids);
}

bool greedy(Work& w, std::vector<Move>& trace) {
    bool any = false;
    for (;;) {
        auto sites = find_sites(w, false);
        if (sites.empty()) return any;
        apply_site(w, sites.front());
        trace.push_back({sites.front().kind, sites.front().ids});
        any = true;
    }
}

bool has_removal(const Work& w) {
    for (const Site& s : find_sites(w, false))
        if (s.kind != MoveKind::R3_slide) return true;
    return false;
}

// Breadth-first over R3 slides; on success w is advanced and the path appended.
bool r3_search(Work& w, const SimplifyBudget& b, std::vector<Move>& trace) {
    struct Node {
        Work w;
        std::vector<Move> path;
    };
    std::deque<Node> q;
    std::unordered_set<std::string> seen{key(w)};
    q.push_back({w, {}});
    int states = 1;
    while (!q.empty()) {
        Node n = std::move(q.front());
        q.pop_front();
        if (static_cast<int>(n.path.size()) >= b.max_r3_depth) continue;
        for (const Site& s : find_sites(n.w, true)) {
            if (s.kind != MoveKind::R3_slide) continue;
            Work t = n.w;
            slide(t, s);
            if (!seen.insert(key(t)).second) continue;
            ++states;
            auto path = n.path;
            path.push_back({s.kind, s.ids});
            if (has_removal(t)) {
                w = std::move(t);
                trace.insert(trace.end(), path.begin(), path.end());
                return true;
            }
            if (states >= b.max_states) return false;
            q.push_back({std::move(t), std::move(path)});
        }
    }
    return false;
}

}  // namespace

std::vector<Move> available_moves(const LinkDiagram& d) {
    std::vector<Move> out;
    for (const Site& s : find_sites(to_work(d), true)) out.push_back({s.kind, s.ids});
    return out;
}

LinkDiagram apply_move(const LinkDiagram& d, const Move& m) {
    Work w = to_work(d);
    for (const Site& s : find_sites(w, true))
        if (s.kind == m.kind && s.ids == m.site) {
            apply_site(w, s);
            return to_diagram(w);
        }
    throw std::invalid_argument(std::string(to_string(m.kind)) + " not applicable at given site");
}

SimplifyResult simplify(const LinkDiagram& d, const SimplifyBudget& b) {
    Work w = to_work(d);
    std::vector<Move> trace;
    for (;;) {
        greedy(w, trace);
        if (w.crossings() == 0) break;
        if (!r3_search(w, b, trace)) break;
    }
    return {to_diagram(w), std::move(trace)};
}

UnlinkResult is_unlink(const LinkDiagram& d, const SimplifyBudget& b) {
    auto r = simplify(d, b);
    if (r.diagram.num_crossings() == 0) return {true, std::move(r.trace)};
    return {false, {}};
}

LinkDiagram replay_trace(const LinkDiagram& d, const std::vector<Move>& trace) {
    LinkDiagram cur = d;
    for (const Move& m : trace) cur = apply_move(cur, m);
    return cur;
}

}  // namespace bf
