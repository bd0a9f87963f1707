#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brunnian/diagram.hpp"

namespace bf {

// Letter of a free group whose generators are spanning disks (named by disk id).
struct Letter {
    std::string gen;
    int sign = 1;
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// A word read cyclically; equality is up to rotation.
struct CyclicWord {
    Word letters;
    bool operator==(const CyclicWord& o) const;
};

struct Piercing {
    std::string disk;
    int sign = 1;
    bool operator==(const Piercing&) const = default;
};

// Disks come in named systems. Each system is one family of spanning disks
// (bounded by distinct components) whose mutual disjointness is declared by
// the template rather than recomputed.
struct Disk {
    std::string id;
    ComponentId boundary = 0;
    int positive_side = 1;  // +1: normal agrees with the boundary orientation
    std::string system = "complex";
    bool operator==(const Disk&) const = default;
};

// "x_arc >= 2, or x_p >= 2 for every partner p" over the arcs cut from a
// component by a disk. Arcs are numbered from 0 starting after the first piercing.
struct ClaspClause {
    int arc = 0;
    std::vector<int> partners;
    bool operator==(const ClaspClause&) const = default;
};

struct ClaspPattern {
    std::string disk;
    ComponentId component = 0;
    int arcs = 0;
    std::vector<ClaspClause> clauses;
    bool operator==(const ClaspPattern&) const = default;
};

struct DiskRegistry {
    std::vector<Disk> disks;
    // along each component's orientation, starting from its first passage
    std::map<ComponentId, std::vector<Piercing>> piercings;
    std::map<std::string, bool> disjoint;  // per system
    std::vector<ClaspPattern> clasps;

    const Disk* find(const std::string& id) const;
    int count(const std::string& disk, ComponentId c) const;
    int total(const std::string& disk) const;
    std::vector<ComponentId> piercing_components(const std::string& disk) const;
    bool operator==(const DiskRegistry&) const = default;
};

struct FamilySpec {
    std::string family;        // lamp, debrunner, w, torusgrid, tube, carpet, brunnchain, milnor
    std::vector<int> params;
    bool operator==(const FamilySpec&) const = default;
};

struct FamilyMeta {
    FamilySpec spec;
    std::string count_formula;
    std::vector<std::string> component_names;
    std::map<std::string, bool> regularity;  // spanning-complex conditions, construction-guaranteed
    std::string construction;                // short description of the template used
    bool operator==(const FamilyMeta&) const = default;
};

struct LinkPresentation {
    LinkDiagram diagram;
    DiskRegistry registry;
    std::string word_system = "complex";
    std::map<ComponentId, Word> designated_words;
    std::vector<std::vector<int>> symmetries;
    FamilyMeta meta;
    bool operator==(const LinkPresentation&) const = default;

    int n() const { return diagram.num_components(); }
    std::string name(ComponentId c) const;
};

class RegistryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Letters along c from disks of one system (all systems when empty).
// Throws RegistryError on a piercing by an unregistered disk.
Word word_from_piercings(const LinkPresentation& p, ComponentId c, const std::string& system = "");

// Presentation-level invariants: diagram validates, registry consistent with
// linking numbers, words agree with piercings, symmetries are permutations
// preserving the linking matrix.
std::vector<std::string> validate_presentation(const LinkPresentation& p);

// Transports a presentation along a component permutation (c -> perm[c]).
LinkPresentation permute_presentation(const LinkPresentation& p, const std::vector<int>& perm);

// Closure of the declared generators under composition (includes identity).
std::vector<std::vector<int>> symmetry_group(const LinkPresentation& p);

}  // namespace bf
