#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brunnian/freegroup.hpp"
#include "brunnian/presentation.hpp"
#include "brunnian/reidemeister.hpp"

namespace bf {

enum class NontrivialityKind { NonzeroLinking, NonemptyReducedWord, StablePositiveDisk, Unknown };
const char* to_string(NontrivialityKind k);

struct Nontriviality {
    NontrivialityKind kind = NontrivialityKind::Unknown;
    ComponentId i = -1, j = -1;  // NonzeroLinking
    int lk = 0;
    ComponentId component = -1;  // NonemptyReducedWord
    Word reduced;
    std::string disk;            // StablePositiveDisk
    StableEvidence stable;
};

struct DeletionResult {
    ComponentId deleted = 0;
    bool witnessed = false;
    std::vector<Move> trace;
};

struct BrunnianReport {
    std::vector<DeletionResult> deletions;
    Nontriviality nontriviality;
    bool brunnian_witnessed = false;
};

// Evidence that the whole link is not an unlink, by priority: a nonzero
// pairwise linking number; a designated word that stays nonempty after cyclic
// reduction, read in a system of disjoint disks that no other boundary pierces;
// a certified stable disk with positive intersection count.
Nontriviality nontriviality_evidence(const LinkPresentation& p);

BrunnianReport brunnian_report(const LinkPresentation& p, const SimplifyBudget& b = {});

}  // namespace bf
