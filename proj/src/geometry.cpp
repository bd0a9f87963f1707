#include "brunnian/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace bf {

namespace {

constexpr double kEps = 1e-9;

struct Seg {
    int comp, index;
    Vec3 a, b;
    double minx, maxx, miny, maxy;
};

struct Hit {
    int seg;
    double t;
    int crossing;
    bool over;
};

}  // namespace

LinkDiagram diagram_from_polylines(const std::vector<Polyline>& comps) {
    std::vector<Seg> segs;
    std::vector<int> count(comps.size());
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        const Polyline& pl = comps[c];
        int m = static_cast<int>(pl.size());
        if (m < 3) throw DegenerateProjection("component with fewer than 3 vertices");
        count[c] = m;
        for (int k = 0; k < m; ++k) {
            Vec3 a = pl[k], b = pl[(k + 1) % m];
            segs.push_back({c, k, a, b, std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)});
        }
    }
    std::vector<std::vector<Hit>> hits(comps.size());
    std::map<int, int> signs;
    int next_id = 0;
    for (size_t i = 0; i < segs.size(); ++i) {
        const Seg& s = segs[i];
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const Seg& r = segs[j];
            if (r.minx > s.maxx + kEps || r.maxx < s.minx - kEps || r.miny > s.maxy + kEps || r.maxy < s.miny - kEps)
                continue;
            if (s.comp == r.comp) {
                int m = count[s.comp];
                if ((s.index + 1) % m == r.index || (r.index + 1) % m == s.index) continue;
            }
            double px = s.b.x - s.a.x, py = s.b.y - s.a.y;
            double qx = r.b.x - r.a.x, qy = r.b.y - r.a.y;
            double den = px * qy - py * qx;
            double wx = r.a.x - s.a.x, wy = r.a.y - s.a.y;
            if (std::abs(den) < kEps) {
                if (std::abs(wx * py - wy * px) < kEps) throw DegenerateProjection("collinear overlapping segments");
                continue;
            }
            double t = (wx * qy - wy * qx) / den;
            double u = (wx * py - wy * px) / den;
            if (t < -kEps || t > 1 + kEps || u < -kEps || u > 1 + kEps) continue;
            if (t < kEps || t > 1 - kEps || u < kEps || u > 1 - kEps)
                throw DegenerateProjection("projection passes through a vertex");
            double zs = s.a.z + t * (s.b.z - s.a.z);
            double zr = r.a.z + u * (r.b.z - r.a.z);
            if (std::abs(zs - zr) < kEps) throw DegenerateProjection("strands meet in space");
            bool s_over = zs > zr;
            double ox = s_over ? px : qx, oy = s_over ? py : qy;
            double ux = s_over ? qx : px, uy = s_over ? qy : py;
            int id = next_id++;
            signs[id] = ox * uy - oy * ux > 0 ? 1 : -1;
            hits[s.comp].push_back({s.index, t, id, s_over});
            hits[r.comp].push_back({r.index, u, id, !s_over});
        }
    }
    std::vector<std::vector<Passage>> out(comps.size());
    for (size_t c = 0; c < comps.size(); ++c) {
        auto& h = hits[c];
        std::sort(h.begin(), h.end(), [](const Hit& a, const Hit& b) { return std::tie(a.seg, a.t) < std::tie(b.seg, b.t); });
        for (const Hit& x : h) out[c].push_back({x.crossing, x.over});
    }
    return LinkDiagram::from_passages(std::move(out), signs);
}

std::map<int, std::vector<int>> flat_disk_piercings(const std::vector<Polyline>& comps, int disk) {
    const Polyline& poly = comps.at(disk);
    double z0 = poly.at(0).z;
    for (const Vec3& v : poly)
        if (std::abs(v.z - z0) > kEps) throw DegenerateProjection("disk boundary is not planar");
    double area = 0;
    int m = static_cast<int>(poly.size());
    for (int k = 0; k < m; ++k) {
        const Vec3& a = poly[k];
        const Vec3& b = poly[(k + 1) % m];
        area += a.x * b.y - b.x * a.y;
    }
    int orient = area > 0 ? 1 : -1;
    auto inside = [&](double x, double y) {
        bool in = false;
        for (int k = 0; k < m; ++k) {
            const Vec3& a = poly[k];
            const Vec3& b = poly[(k + 1) % m];
            // distance to edge, to reject near-boundary hits
            double ex = b.x - a.x, ey = b.y - a.y;
            double L2 = ex * ex + ey * ey;
            double t = std::clamp(((x - a.x) * ex + (y - a.y) * ey) / L2, 0.0, 1.0);
            double dx = a.x + t * ex - x, dy = a.y + t * ey - y;
            if (dx * dx + dy * dy < 1e-12) throw DegenerateProjection("strand meets the disk boundary");
            if ((a.y > y) != (b.y > y) && x < a.x + (y - a.y) * ex / ey) in = !in;
        }
        return in;
    };
    std::map<int, std::vector<int>> out;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        if (c == disk) continue;
        const Polyline& pl = comps[c];
        int n = static_cast<int>(pl.size());
        for (int k = 0; k < n; ++k) {
            const Vec3& a = pl[k];
            const Vec3& b = pl[(k + 1) % n];
            double da = a.z - z0, db = b.z - z0;
            if (std::abs(da) < kEps) {
                if (inside(a.x, a.y)) throw DegenerateProjection("vertex lies on a disk");
                continue;
            }
            if (std::abs(db) < kEps || (da > 0) == (db > 0)) continue;
            double t = da / (da - db);
            if (inside(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))) out[c].push_back(db > 0 ? orient : -orient);
        }
    }
    return out;
}

}  // namespace bf
