#ifndef LEAP_FRAME_HPP
#define LEAP_FRAME_HPP

#include <array>
#include <vector>

#include "leap/board.hpp"

namespace leap {

// The (m, n)-frame: an (m+n) x (m+n) board, origin-centered, with a central
// (n-m) x (n-m) hole.  Extending the hole's sides cuts the frame into eight
// sections, four side sections and four corner sections, indexed
// counterclockwise from east:
//
//   0 E, 1 NE, 2 N, 3 NW, 4 W, 5 SW, 6 S, 7 SE.
struct Frame {
    int m = 0;
    int n = 0;

    friend constexpr auto operator<=>(const Frame&, const Frame&) = default;
};

Board frame_board(Frame f);  // empty when m == 0

// Section of a frame square, 0..7; -1 for squares off the frame (hole
// included).
int section_of(Frame f, Square s);

// The shell: eight (n-m)^2 or (3m-n)^2 sub-squares whose leaper cycles seed
// the second-leaper construction; empty in the stretched regime 3m <= n.
Board frame_shell(Frame f);
Board frame_core(Frame f);  // frame minus shell

// The three frame-lifting transformations.  Each maps subsets and cycles of
// the (m, n)-frame into its target frame:
//   f: (m, n) -> (m, 2m+n)    g: (m, n) -> (n, 2n-m)    h: (m, n) -> (n, m+2n)
Frame lift_frame(char kind, Frame f);

// The eight translations a lift uses, indexed like sections.  Even indices
// rotate the east translation, odd indices the northeast one.
Vec2 lift_translation(char kind, Frame f, int dir);

// Image of a square set under a lift: each translated copy clipped to the
// matching section of the target frame.
Board lift_set(char kind, Frame f, const std::vector<Square>& s);

// Image of a leaper cycle under a lift, by per-square replacement: each
// square becomes a short path in the target frame, spliced so that endpoints
// face the replacements of the cycle neighbors.
std::vector<Square> lift_cycle(char kind, Frame f, const std::vector<Square>& cycle);

// A cycle cut into eight consecutive paths, one per direction, satisfying the
// four translation identities with parameters (p, q) = `frame`:
//   path(E)  path(NE) + (-q,-p)  ==  reversed(path(SW) path(W))
// and its three quarter-turn analogues.  `tour` is the leaper whose moves
// join consecutive squares.  Inside a frame the paths additionally lie in
// their sections; the structure also stands on its own, frame-free.
struct ProperCycle {
    Leaper frame;
    Leaper tour;
    std::array<std::vector<Square>, 8> paths;

    std::vector<Square> sequence() const;
    std::size_t length() const;
};

// Throws bad_input with a reason when the structure is not proper.
void check_proper(const ProperCycle& d);
bool is_proper(const ProperCycle& d);

// Path-level lift of a proper cycle; accepts the conjugate kind 'H' as well.
// The frame parameters advance by the lift matrix; the touring leaper is
// unchanged.
ProperCycle lift_proper(char kind, const ProperCycle& d);

// The canonical second-leaper cycle over a center-board cycle of a skew basic
// leaper: a proper Hamiltonian cycle over the same squares, toured by the
// table-assigned second leaper.  Found by unwinding the cycle's lifts down to
// a seed (an eight-square shell cycle, or the (1,2) ring) and lifting the
// seed's octagonal tour back up.
ProperCycle canonical_second_cycle(Leaper l, const std::vector<Square>& cycle);

// The every-third-square subsequence of a proper cycle's traversal; requires
// the length not to be divisible by 3, so the subsequence closes into one
// cycle over all squares.
std::vector<Square> third_leaper_cycle(const ProperCycle& d);

// Per-section visit counts of a cyclic square sequence within a frame.
// Throws when the four side counts or the four corner counts disagree.
struct SectionCounts {
    std::array<long long, 8> per_section{};
    long long side = 0;    // common count of sections E, N, W, S
    long long corner = 0;  // common count of sections NE, NW, SW, SE
};
SectionCounts section_visit_counts(Frame f, const std::vector<Square>& cycle);

}  // namespace leap

#endif  // LEAP_FRAME_HPP
