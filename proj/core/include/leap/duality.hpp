#ifndef LEAP_DUALITY_HPP
#define LEAP_DUALITY_HPP

#include <utility>
#include <vector>

#include "leap/board.hpp"
#include "leap/frame.hpp"

namespace leap {

// The index step along a second cycle that one move of the first leaper
// spans: m + n + 2*((eps*m - j) mod (m + n)) + 1, with the mod reduced into
// [0, m+n-1].  From the square at position j of the second cycle, the first
// leaper reaches the squares at positions j + upsilon(0, j) and
// j + upsilon(1, j); m and n are the per-side-section and per-corner-section
// square counts.
long long upsilon(int eps, long long j, long long m, long long n);

// The index permutation that turns a second cycle's traversal into a
// traversal of the underlying first-leaper cycle.
struct IsoWitness {
    std::vector<long long> psi;  // psi[j - 1] = psi(j), values in 1..4(m+n)
    long long m = 0;
    long long n = 0;
};

// Unrolls psi(1) = 1, psi(j+1) = psi(j) + upsilon(psi(j) mod 2, psi(j)),
// reducing values into 1..4(m+n).  Throws not_bijective when the values do
// not cover that range exactly — which happens precisely when m + n is odd,
// since then every step lands on an odd index.
IsoWitness psi_permutation(long long m, long long n);

// How the two cycles interleave: for each square, the number of steps along
// one cycle from the square to its successor on the other cycle.  Both
// multisets must consist of the integers in [mu, 3*mu] congruent to a fixed
// odd residue modulo four, each appearing exactly eight times, and the two
// multisets must be equal — in particular alpha = beta.
struct DisplacementReport {
    long long mu = 0;  // a quarter of the common cycle length
    int alpha = 0;     // residue of first-cycle arcs measured along the second
    int beta = 0;      // residue of second-cycle arcs measured along the first
    std::vector<long long> d_displacements;  // sorted
    std::vector<long long> c_displacements;  // sorted
};

// cycle: the first leaper's traversal; d: the second cycle over the same
// squares.  Throws mismatched_squares when the square sets differ and
// unmatched_class when a computed multiset breaks the eight-fold law above.
DisplacementReport displacement_report(const std::vector<Square>& cycle, const ProperCycle& d);

// The square-level isomorphism from the second cycle onto the first:
// position j of the result is the square at position psi(j) of d's
// traversal.  The result visits every square once, and consecutive result
// squares are one move of d.frame apart (verified; unmatched_class when the
// input pair breaks this).  Throws mismatched_squares when cycle and d cover
// different squares.
std::vector<Square> iso_from_psi(const std::vector<Square>& cycle, const ProperCycle& d);

// Whether the board is dual for the two leapers: more than one square, and
// the two leaper graphs over it are connected and isomorphic.  Decides
// connectivity directly, returns false on any connectivity or degree-multiset
// mismatch, and settles isomorphism when both graphs are single cycles
// (equal vertex counts then suffice).  Throws unsupported when both graphs
// are connected with equal non-cycle degree structure — general graph
// isomorphism is out of scope.
bool verify_dual_board(const Board& board, Leaper l, Leaper m);

// Same question, settled by an explicit correspondence: each pair maps a
// square to a square.  Returns true when the correspondence is a bijection
// of the board onto itself that carries the edges of l's graph exactly onto
// the edges of m's graph (and both graphs are connected).
bool verify_dual_board(const Board& board, Leaper l, Leaper m,
                       const std::vector<std::pair<Square, Square>>& witness);

}  // namespace leap

#endif  // LEAP_DUALITY_HPP
