#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brunnian/presentation.hpp"

namespace bf {

Word reduce(const Word& w);
// Free reduction plus removal of cancelling first/last letters.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1

// "g1 g2 g1^-1" or "g1 g2 G1" style; a trailing ^-1 marks an inverse, and so
// does a leading capital G (other capitals are ordinary names such as D1).
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

enum class Side { Pos, Neg };
inline Side opposite(Side s) { return s == Side::Pos ? Side::Neg : Side::Pos; }
const char* to_string(Side s);

struct SideAssignment {
    std::string pierced;
    std::map<std::string, Side> sides;
    Side pierced_positive_side = Side::Pos;
    bool operator==(const SideAssignment&) const = default;
};

// Counts the times a loop following the cyclic word must cross a sphere that
// separates the two sides. Letters of the pierced generator expand to an
// (entry, exit) pair; the pair's own transition is through the disk itself and
// is not counted. Throws std::invalid_argument on an incomplete assignment.
int sphere_crossing_count(const Word& cyclic, const SideAssignment& a);

enum class StabilityStatus { Certified, Inconclusive };
enum class StabilityReason { None, BoundBelowActual, MultiComponentDisk };
const char* to_string(StabilityStatus s);
const char* to_string(StabilityReason r);

struct StabilityCase {
    SideAssignment assignment;
    int bound = 0;
};

struct StabilityVerdict {
    StabilityStatus status = StabilityStatus::Inconclusive;
    StabilityReason reason = StabilityReason::None;
    int min_bound = 0;
    int actual = 0;
    std::optional<ComponentId> component;
    std::vector<StabilityCase> cases;
};

class UnregisteredDisk : public std::runtime_error {
public:
    explicit UnregisteredDisk(const std::string& id) : std::runtime_error("UnregisteredDisk: " + id) {}
};

// Full enumeration over side assignments of the generators met by the single
// component piercing the disk (words read in the disk's own system).
StabilityVerdict stable_disk_certificate(const LinkPresentation& p, const std::string& disk);

// Standard chain: 2m arcs in a cycle, each odd arc (1-based) clasps both neighbours.
ClaspPattern standard_clasp_pattern(int m);
// Minimum of sum x_i, x_i in {0, 2}, subject to every clause. Throws on m <= 0.
int clasp_chain_certificate(int m);
int clasp_chain_bound(const ClaspPattern& pattern);

enum class SnVia { CountBelowN, StableCertificate };
const char* to_string(SnVia v);

struct SnResult {
    bool holds = false;
    std::optional<SnVia> via;
    int total = 0;
    int N = 0;
    std::optional<StabilityVerdict> stability;  // when the sphere method ran
    std::optional<int> clasp_bound;             // when a declared clasp pattern was used
};

SnResult sn_check(const LinkPresentation& p, const std::string& disk, int N);

// Certified stability by either method; used as nontriviality evidence.
struct StableEvidence {
    bool certified = false;
    std::string method;  // "sphere-count" or "clasp-chain"
    int bound = 0;
    int actual = 0;
};
StableEvidence certify_stable(const LinkPresentation& p, const std::string& disk);

}  // namespace bf
