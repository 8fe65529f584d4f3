#ifndef LEAP_BOARD_HPP
#define LEAP_BOARD_HPP

#include <utility>
#include <vector>

#include "leap/geometry.hpp"

namespace leap {

// A (p, q)-leaper moves by (±p, ±q) and (±q, ±p) in ordinary units.  p and q
// are kept non-negative; most of the theory normalizes to p <= q.
struct Leaper {
    int p = 0;
    int q = 0;

    friend constexpr auto operator<=>(const Leaper&, const Leaper&) = default;
};

// Sorts the pattern so that p <= q.
constexpr Leaper normalized(Leaper l) {
    return l.p <= l.q ? l : Leaper{l.q, l.p};
}

bool is_basic(Leaper l);  // gcd(p, q) == 1 and p + q odd
bool is_skew(Leaper l);   // 0 < p, p != q (neither orthogonal nor diagonal)
bool is_skew_basic(Leaper l);

// Every leaper is a basic leaper in disguise: scaled by gcd, and rotated a
// half-turn of the diagonal when p and q have equal parity.  `scale` is the
// integer part of the scaling; `rotated45` adds a further factor of sqrt(2).
struct Reduction {
    Leaper basic;
    long long scale = 1;
    bool rotated45 = false;
};
Reduction reduce_to_basic(Leaper l);

// A finite set of squares, stored as sorted unique doubled centers.  All
// squares of one board share the same coordinate parity.
class Board {
public:
    Board() = default;
    explicit Board(std::vector<Square> squares);

    // width x height rectangle of squares centered on the origin.
    static Board rectangle(int width, int height);

    const std::vector<Square>& squares() const { return squares_; }
    std::size_t size() const { return squares_.size(); }
    bool empty() const { return squares_.empty(); }
    bool contains(Square s) const { return index_of(s) >= 0; }
    int index_of(Square s) const;  // -1 when absent

    // (x parity, y parity) of the doubled coordinates; 0 means centers on the
    // integer lattice, 1 means centers on half-integers.
    std::pair<int, int> parity() const;

    friend bool operator==(const Board&, const Board&) = default;

private:
    std::vector<Square> squares_;
};

// The distinct doubled displacement vectors of the leaper (up to 8).
std::vector<Vec2> move_targets(Leaper l);

// Leaper graph over a board: vertex i is board.squares()[i].
struct LeaperGraph {
    Board board;
    Leaper leaper;
    std::vector<std::vector<int>> adj;  // sorted neighbor indices
};
LeaperGraph build_leaper_graph(const Board& board, Leaper l);

bool is_connected(const LeaperGraph& g);

// Whether the leaper graph over a width x height rectangle is connected.
// Requires more than one square.
bool is_free(Leaper l, int width, int height);

// Closed-form freeness test: basic, and the rectangle contains a
// (p+q) x 2q sub-rectangle.
bool knuth_free_predicate(Leaper l, int width, int height);

// Splits a graph whose vertices all have degree 0 or 2 into isolated squares
// and disjoint cycles.  Cycles are canonically oriented (lexicographically
// least square first, proceeding toward its lesser neighbor) and listed in
// order of their first square.  Throws degree_violation otherwise.
struct CycleDecomposition {
    std::vector<Square> isolated;
    std::vector<std::vector<Square>> cycles;
};
CycleDecomposition decompose_cycles(const LeaperGraph& g);

// The (p+q) x (p+q) board of a skew basic leaper, and its decomposition into
// the central (q-p)^2 isolated squares plus disjoint cycles.
Board center_board(Leaper l);
CycleDecomposition decompose_center_board(Leaper l);

// Canonical orientation/starting point for a cyclic square sequence.
std::vector<Square> canonical_cycle(const std::vector<Square>& cycle);

// Translation-invariant key of a square set: the set shifted so its bounding
// box minima sit at zero, sorted.
std::vector<Square> translation_key(const std::vector<Square>& squares);

}  // namespace leap

#endif  // LEAP_BOARD_HPP
