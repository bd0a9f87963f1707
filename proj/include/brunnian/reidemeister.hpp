#pragma once

#include <string>
#include <vector>

#include "brunnian/diagram.hpp"

namespace bf {

enum class MoveKind { R1_remove, R2_remove, R3_slide };

const char* to_string(MoveKind k);

struct Move {
    MoveKind kind;
    std::vector<int> site;  // crossing ids, ascending
    bool operator==(const Move&) const = default;
};

struct SimplifyBudget {
    int max_r3_depth = 6;
    int max_states = 50000;
};

struct SimplifyResult {
    LinkDiagram diagram;
    std::vector<Move> trace;
};

// Every move currently applicable to d, sorted by site (R1/R2/R3 all listed).
std::vector<Move> available_moves(const LinkDiagram& d);

// Applies a move found by available_moves. Throws std::invalid_argument when
// the site does not carry a move of that kind.
LinkDiagram apply_move(const LinkDiagram& d, const Move& m);

// Greedy R1/R2 removal (smallest site first) to a fixpoint, then a breadth-first
// search over R3 slides that stops at the first state admitting a removal.
SimplifyResult simplify(const LinkDiagram& d, const SimplifyBudget& b = {});

struct UnlinkResult {
    bool witnessed = false;  // false means Unknown, never "knotted"
    std::vector<Move> trace;
};

UnlinkResult is_unlink(const LinkDiagram& d, const SimplifyBudget& b = {});

// Replays a trace move by move; returns the final diagram or throws if some
// move is not applicable.
LinkDiagram replay_trace(const LinkDiagram& d, const std::vector<Move>& trace);

}  // namespace bf
