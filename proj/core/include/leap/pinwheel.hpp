#pragma once

#include <array>
#include <vector>

#include "leap/board.hpp"
#include "leap/direction.hpp"

namespace leap {

// Four-winged boards assembled from the residue nets of a leaper: order n
// sets the wing size, margin d widens every wing symmetrically, and the
// augmented variant adjoins one extra square beyond each wing.
struct PinwheelSpec {
    int n = 1;            // order, at least 1
    int d = 0;            // margin, at least 0; positive needs leaper.p != 0
    bool augmented = false;  // only with d == 0
    Leaper leaper;        // (p, q) with q >= 1
};

// The materialized board: wing squares listed per wing (sorted), the wing
// rectangle centers (doubled), and the adjoined squares of the augmented
// variant (empty otherwise).
struct PinwheelBoard {
    PinwheelSpec spec;
    std::array<std::vector<Square>, 4> wings;
    std::array<Square, 4> wing_centers;
    std::vector<Square> adjoined;

    // All squares of the board, sorted and deduplicated.
    std::vector<Square> all_squares() const;
};

// Enumerate the wings of the spec's board; bad_input on invalid specs.
PinwheelBoard build_pinwheel(const PinwheelSpec& spec);

// The leaper whose graph over the order-n board mirrors the builder's:
// (p, q) -> (q, p + 2nq).  Applied to the pair as given, no reordering.
Leaper pinwheel_partner(int n, Leaper l);

// Index 0..3 of the residue net a square belongs to; bad_input when the
// square lies on none of the four nets.
int wing_of(const PinwheelBoard& w, Square a);

// Reflection of a board square through the center of its wing's rectangle;
// bad_input when the square is not on the board.
Square phi_map(const PinwheelBoard& w, Square a);

// Whether the board is dual with respect to its leaper and the partner:
// the leaper graph must be connected and some square bijection must carry
// it edge-for-edge onto the partner graph.  A small witness family is tried
// first (the wing reflection, optionally composed with a board reflection,
// with adjoined squares sent to a quarter-turn image); when it misses, the
// existence of a bijection is decided exactly.
bool verify_pinwheel_dual(const PinwheelSpec& spec);

// Wing membership plus the lattice offset within the wing: a square sits at
// wing base + (2kq, 2lq) in ordinary units.
struct SigmaTriplet {
    int wing = 0;
    coord k = 0;
    coord l = 0;

    friend constexpr auto operator<=>(const SigmaTriplet&, const SigmaTriplet&) = default;
};

SigmaTriplet sigma_of(const PinwheelBoard& w, Square a);

// Twice the half-unit wing base matrix: doubled coordinates of a square
// with triplet (i, k, l) are (wing_matrix_doubled(i) + [[0, 4k], [0, 4l]])
// applied to (p, q).
Mat2 wing_matrix_doubled(int wing);

// The direction graph of the order-n, margin-d board, with vertices in
// triplet order.  Built from two different skew leapers and required to
// agree (unmatched_class otherwise) - the graph depends only on n and d.
struct PinwheelDirectionGraph {
    DirectionGraph graph;
    std::vector<SigmaTriplet> sigma;  // triplet of each vertex, ascending
};

PinwheelDirectionGraph pinwheel_direction_graph(int n, int d);

// Duality witness for a pinwheel direction graph: the complement is the
// quarter-turn relabeling (composed with the reflection relabeling for even
// n), the matrix is [[0, 1], [1, 2n]], and eta maps each vertex to its
// image in the complement.  Odd orders use the closed-form triplet map;
// even orders search a small family of triplet maps and fall back to the
// generic eta search.  Throws not_dual when no witness is found.
struct PinwheelDuality {
    EquivPermutation complement;
    std::vector<int> eta;
    Mat2 matrix;
};

PinwheelDuality pinwheel_duality(const PinwheelDirectionGraph& w, int n);

}  // namespace leap
