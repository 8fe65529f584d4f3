#ifndef LEAP_DESCENT_HPP
#define LEAP_DESCENT_HPP

#include <string>
#include <vector>

#include "leap/board.hpp"
#include "leap/rational.hpp"

namespace leap {

// Every skew basic leaper other than (1,2) reduces by exactly one of three
// frame-lifting transformations; iterating them reaches (1,2).  The descent
// records the transformation characters outermost-first: applying the LAST
// character to (1,2) and working back to the first rebuilds (p, q).
//
// Core descents use the alphabet {f, g, h}.  Extended descents add the
// conjugate of h, written 'H' here, which shares h's lift matrix but lifts
// cycles through a mirrored path rule.
bool is_core_descent(const std::string& e);
bool is_extended_descent(const std::string& e);

std::string descent_of(Leaper l);

Mat2 lift_matrix(char kind);                     // f, g, h or H
Mat2 descent_matrix(const std::string& e);       // product of lift matrices, left to right
Leaper leaper_of_descent(const std::string& e);  // descent_matrix(e) applied to (1,2)

// Even continued fraction [c1±, c2±, ..., ck]: all terms even and >= 2,
// value c1 s1/ (c2 s2/ (...)) with si the sign recorded *after* term i.
// The last term carries sign 0.
struct EcfTerm {
    BigInt c;
    int sign = 0;  // +1, -1, or 0 after the final term

    friend bool operator==(const EcfTerm&, const EcfTerm&) = default;
};
using Ecf = std::vector<EcfTerm>;

Ecf ecf_of_descent(const std::string& e);  // core descents only
std::string descent_of_ecf(const Ecf& ecf);
BigRat ecf_value(const Ecf& ecf);

// l_i / d_i: the expansion truncated after term i, with a "2-" interleaved
// between each pair of consecutive original terms.
BigRat cycle_length_ratio(const Ecf& ecf, std::size_t i);  // 1-based i

// Row i of the classification of the center-board cycles of a skew basic
// leaper: the cycles of type i are (q_i - p_i)^2 translation copies of one
// cycle of length 4*l_i, toured by the (p_i, q_i)-leaper.  The last row is
// always (0, 1).  `third_leaper` marks the single row, if any, whose
// every-third-square sequence closes into a (1,2)-Hamiltonian cycle.
struct CycleTypeRecord {
    std::size_t index = 0;  // 1-based
    Leaper second;
    long long count = 0;
    long long length = 0;
    BigRat ratio;
    bool third_leaper = false;
};
std::vector<CycleTypeRecord> cycle_type_table(Leaper l);

// Matches an actual center-board decomposition against the table.  Cycles
// must group into exactly one translation class per table row, with the
// predicted sizes and lengths; otherwise unmatched_class is thrown.
struct CycleClassification {
    std::vector<CycleTypeRecord> table;
    std::vector<std::size_t> type_of_cycle;  // parallel to decomposition.cycles, 1-based
};
CycleClassification classify_cycle_types(Leaper l, const CycleDecomposition& d);
CycleClassification classify_cycle_types(Leaper l);

}  // namespace leap

#endif  // LEAP_DESCENT_HPP
