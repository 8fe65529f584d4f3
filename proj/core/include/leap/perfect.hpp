#pragma once

#include <string>

#include "leap/board.hpp"
#include "leap/frame.hpp"

namespace leap {

// Outcome of verifying one structural property: whether it holds, and a
// short description of the first violation found when it does not.
struct PropertyCheck {
    bool ok = true;
    std::string note;
};

// The six properties that together make an eight-path cycle perfect.
// `all` is true exactly when every individual check passed.
struct PerfectionReport {
    PropertyCheck translation;
    PropertyCheck symmetry;
    PropertyCheck separation;
    PropertyCheck simplicity;
    PropertyCheck coherence;
    PropertyCheck protocoherence;

    bool all() const;

    // Name and note of the first failing property, empty when all pass.
    std::string first_failure() const;
};

// Board of squares visited by a perfect cycle together with the partner
// leaper whose graph on that board is likewise a single Hamiltonian cycle.
struct DualBoard {
    Board board;
    Leaper partner;
};

// The eight-square seed cycle for the given origin character and touring
// leaper.  Requires 0 <= m.p <= m.q with m.q >= 1.  Origin 'f' needs
// m.p > 0, origin 'g' needs m.p < m.q, origin 'h' always applies; any
// other combination throws invalid_origin.
ProperCycle initial_cycle(Leaper m, char origin);

// Verify all six perfection properties of `d` and report each outcome.
// Never throws on a well-formed candidate; malformed sizes are reported
// as failures of the property that noticed them.
PerfectionReport check_perfect(const ProperCycle& d);

// Apply one growth step ('f', 'g', 'h', or 'H') to a cycle that must
// already be perfect.  Throws not_perfect when the input fails a check
// and bad_input for an unknown kind.
ProperCycle lift_perfect(char kind, const ProperCycle& d);

// Build the perfect cycle for origin `origin` and word `e` over
// {f, g, h, H}, applying the rightmost character first.  The returned
// cycle has been verified perfect.
ProperCycle perfect_cycle(Leaper m, char origin, const std::string& e);

// Squares of perfect_cycle(m, origin, e) as a board, paired with the
// frame leaper of the final cycle.  Verifies that the partner's graph on
// the board is itself one Hamiltonian cycle before returning.
DualBoard build_dual_board(Leaper m, char origin, const std::string& e);

}  // namespace leap
