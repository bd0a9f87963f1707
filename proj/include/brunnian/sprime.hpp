#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brunnian/families.hpp"
#include "brunnian/freegroup.hpp"
#include "brunnian/presentation.hpp"
#include "brunnian/reidemeister.hpp"

namespace bf {

// Disks taking part in torus arguments (the spanning complex); word-only
// witness disks are never used here.
inline constexpr const char* kComplexSystem = "complex";

enum class DiskRole { Interior_I, Interior_J, ExteriorCross, FreeCross };
const char* to_string(DiskRole r);

// Role of a disk relative to the side holding its boundary: pierced only from
// its own side (or not at all) it is interior; only from the other side it is
// an exterior cross disk; from both sides a free cross disk.
DiskRole disk_role(const LinkPresentation& p, const std::string& disk, const Bipartition& h);

enum class Rule { CrossBound4, CrossBound6, ComponentDiscard, SymmetryUniqueness, CaseExhaustion };
const char* to_string(Rule r);

struct ManualAssumption {
    std::string ref;
    std::string statement;
    bool operator==(const ManualAssumption&) const = default;
};

struct CrossBoundEvidence {
    std::string disk;
    DiskRole role;
    int total = 0;
    int threshold = 0;
    std::map<ComponentId, int> per_component;
};

struct DiscardEvidence {
    Bipartition oriented;  // I holds the deleted component
    ComponentId deleted = 0;
    std::vector<Move> trace;
    std::vector<std::vector<ComponentId>> partition;  // split families after deletion, original ids
    std::vector<std::vector<ComponentId>> merged;     // after re-gluing parts joined by surviving disks
    std::vector<ComponentId> split_part;              // a merged part inside J
};

struct SymmetryEvidence {
    std::vector<int> perm;
    Bipartition image;
    std::vector<ComponentId> ii, ij, ji, jj;  // I∩I', I∩J', J∩I', J∩J'
};

struct Refutation {
    Rule rule;
    std::optional<CrossBoundEvidence> cross;
    std::optional<DiscardEvidence> discard;
    std::optional<SymmetryEvidence> symmetry;
    std::vector<ManualAssumption> assumptions;
};

ManualAssumption standing_pattern_assumption();

std::optional<Refutation> prop52_refute(const LinkPresentation& p, const Bipartition& h);
std::optional<Refutation> discard_refute(const LinkPresentation& p, const Bipartition& h, const SimplifyBudget& b = {});
std::optional<Refutation> symmetry_refute(const LinkPresentation& p, const Bipartition& h);
// The four intersections for one permutation (no search).
SymmetryEvidence symmetry_quadruple(const Bipartition& h, const std::vector<int>& perm);
bool quadruple_incompatible(const SymmetryEvidence& e);

// Admissible intersection cases for a cross disk with exactly 4 piercings into
// the side opposite its boundary. Throws std::invalid_argument otherwise.
std::vector<std::string> case6_classify(const LinkPresentation& p, const Bipartition& h, const std::string& disk);

struct InteriorDiskCheck {
    std::string disk;
    DiskRole role;
    bool role_ok = false;
    SnResult sn;
};

struct InteriorReport {
    std::vector<InteriorDiskCheck> disks;
    bool disjoint_declared = false;
    bool machine_checks_pass = false;
    std::vector<std::string> errors;
    std::vector<ManualAssumption> obligations;
};

// Hypothesis layer for splittings where every listed disk is interior. Throws
// std::invalid_argument on an empty side. Without a disk list every complex disk is used.
InteriorReport interior_only_hypotheses(const LinkPresentation& p, const std::vector<ComponentId>& I,
                                        const std::vector<ComponentId>& J,
                                        const std::vector<std::string>& disks = {});

struct OrbitRecord {
    Bipartition h;
    bool refuted = false;
    std::optional<Refutation> refutation;
    std::vector<Rule> applicable;  // every rule that fires, when requested
    std::string reason;
    std::vector<std::pair<std::string, std::vector<std::string>>> case_labels;  // disk -> labels
    std::optional<InteriorReport> interior;
    std::vector<ManualAssumption> obligations;
};

struct CaseAnalysis {
    std::vector<OrbitRecord> orbits;
    bool exhaustive = true;  // false: only caller-selected splittings, no overall claim
    bool sprime_modulo_assumptions = false;
    std::vector<ManualAssumption> assumptions;
};

struct AnalyzeOptions {
    bool all_rules = false;
};

OrbitRecord analyze_bipartition(const LinkPresentation& p, const Bipartition& h, const SimplifyBudget& b = {},
                                const AnalyzeOptions& o = {});
CaseAnalysis analyze_sprime(const LinkPresentation& p, const SimplifyBudget& b = {}, const AnalyzeOptions& o = {});
// Analyses the given splittings only; never concludes s-primeness.
CaseAnalysis analyze_selected(const LinkPresentation& p, const std::vector<Bipartition>& hs, const SimplifyBudget& b = {},
                              const AnalyzeOptions& o = {});

struct DiskSn {
    std::string disk;
    SnResult sn;
};

struct UntiedReport {
    int threshold = 8;
    std::vector<DiskSn> disks;
    std::map<std::string, bool> regularity;
    std::optional<std::string> witness;
    bool untied_modulo_assumptions = false;
    std::vector<std::string> missing;
    std::vector<ManualAssumption> assumptions;
};

int untied_threshold(const LinkPresentation& p);
UntiedReport untied_check(const LinkPresentation& p, const std::optional<std::string>& witness);

}  // namespace bf
