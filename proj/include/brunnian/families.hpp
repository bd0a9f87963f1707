#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brunnian/geometry.hpp"
#include "brunnian/presentation.hpp"

namespace bf {

// Throws std::invalid_argument on out-of-range parameters.
LinkPresentation generate(const FamilySpec& spec);

// Two-component Hopf link with one disk per component, each pierced once.
LinkPresentation hopf_presentation(int sign = 1);

// Documented component count for a spec (without building it).
int component_count(const FamilySpec& spec);

// A letter of a word link: (disk index k >= 1, sign).
using IndexedWord = std::vector<std::pair<int, int>>;

IndexedWord nested_commutator(int k);    // [[..[g1,g2],g3]..,gk]
IndexedWord balanced_commutator(int k);  // halves split with the larger half first

// Component 0 wanders through flat rectangles 1..K following the word.
std::vector<Polyline> word_link_geometry(const IndexedWord& word, int K);
// Two components: a round circle C1 and a band C2 clasping it once per entry.
std::vector<Polyline> lamp_geometry(const std::vector<int>& twists);

struct Bipartition {
    std::vector<ComponentId> I, J;
    bool operator==(const Bipartition&) const = default;
};

// All unordered nontrivial bipartitions, as (side containing 0, rest).
std::vector<Bipartition> all_bipartitions(int n);
// One representative per orbit of the declared symmetry group; the
// representative is the lexicographically least side containing component 0.
std::vector<Bipartition> symmetry_orbits(const LinkPresentation& p);
Bipartition orbit_representative(const LinkPresentation& p, const Bipartition& h);

}  // namespace bf
