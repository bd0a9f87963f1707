#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bf {

using ComponentId = int;

// One visit of a component to a crossing.
struct Passage {
    int crossing = 0;
    bool over = false;
    bool operator==(const Passage&) const = default;
    auto operator<=>(const Passage&) const = default;
};

struct Crossing {
    int id = 0;
    int sign = 1;  // +1 or -1
    ComponentId over_component = 0;
    ComponentId under_component = 0;
    int over_position = 0;
    int under_position = 0;
    bool operator==(const Crossing&) const = default;
};

enum class DiagramErrorKind { DanglingCrossing, DoubleOver, BadArity, ParseError, IndexOutOfRange };

const char* to_string(DiagramErrorKind k);

struct DiagramError {
    DiagramErrorKind kind;
    std::string detail;
};

class DiagramException : public std::runtime_error {
public:
    explicit DiagramException(DiagramError e)
        : std::runtime_error(std::string(to_string(e.kind)) + ": " + e.detail), error(std::move(e)) {}
    DiagramError error;
};

// Oriented link diagram. Each component is a cyclic sequence of passages;
// an empty sequence is a crossing-free circle. Crossing ids are stable labels,
// not necessarily contiguous; the table is kept sorted by id.
//
// Sign convention: a crossing is +1 when (over direction) x (under direction)
// points out of the page, i.e. the over strand is reached from the under strand
// by a clockwise quarter turn. This is the usual right-handed convention under
// which the standard positive Hopf link has lk = +1.
struct LinkDiagram {
    std::vector<std::vector<Passage>> components;
    std::vector<Crossing> crossings;

    // Builds the crossing table from passage sequences and a sign per crossing.
    // Throws DiagramException when the result would not validate.
    static LinkDiagram from_passages(std::vector<std::vector<Passage>> comps,
                                     const std::map<int, int>& signs);

    int num_components() const { return static_cast<int>(components.size()); }
    int num_crossings() const { return static_cast<int>(crossings.size()); }
    const Crossing* find(int id) const;
    const Crossing& at(int id) const;

    bool operator==(const LinkDiagram&) const = default;
};

std::vector<DiagramError> validate(const LinkDiagram& d);

LinkDiagram parse_pd(std::string_view text);
std::string emit_pd(const LinkDiagram& d);
LinkDiagram parse_gauss(std::string_view text);
std::string emit_gauss(const LinkDiagram& d);

int linking_number(const LinkDiagram& d, ComponentId i, ComponentId j);
std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d);
int writhe(const LinkDiagram& d, ComponentId i);

LinkDiagram delete_component(const LinkDiagram& d, ComponentId i);
LinkDiagram mirror(const LinkDiagram& d);
bool is_alternating(const LinkDiagram& d);
std::vector<std::vector<ComponentId>> split_families(const LinkDiagram& d);

// Renumbers components by a permutation: component i of d becomes perm[i].
LinkDiagram permute_components(const LinkDiagram& d, const std::vector<int>& perm);

// Same crossings, signs and cyclic orders up to rotation of each component and
// a bijective relabelling of crossing ids.
bool equivalent_codes(const LinkDiagram& a, const LinkDiagram& b);

}  // namespace bf
