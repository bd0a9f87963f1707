#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "brunnian/diagram.hpp"

namespace bf {

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

using Polyline = std::vector<Vec3>;  // closed; last vertex joins the first

class DegenerateProjection : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Projects closed polylines to the xy-plane and reads off the oriented diagram.
// Crossing ids are assigned in segment-pair order. Throws DegenerateProjection
// on tangencies, vertex hits or equal heights at a crossing.
LinkDiagram diagram_from_polylines(const std::vector<Polyline>& comps);

// Signed intersections of every other component with the flat polygonal disk
// bounded by comps[disk] (which must be planar in z). The sign is +1 when a
// strand passes in the direction of the disk normal, the normal being fixed by
// the boundary orientation (right-hand rule).
std::map<int, std::vector<int>> flat_disk_piercings(const std::vector<Polyline>& comps, int disk);

}  // namespace bf
