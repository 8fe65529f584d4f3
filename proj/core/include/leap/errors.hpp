#ifndef LEAP_ERRORS_HPP
#define LEAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leap {

// Base class for everything this library throws on its own behalf.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition on the inputs was violated (wrong leaper class, malformed
// descent string, board of the wrong shape, ...).
struct bad_input : error {
    using error::error;
};

// A graph that was required to split into isolated squares and cycles has a
// vertex of some other degree.
struct degree_violation : error {
    using error::error;
};

// A traced cycle could not be matched against the predicted classification.
struct unmatched_class : error {
    using error::error;
};

// Direction-graph extraction failed: the leaper graph carries a cycle whose
// direction matrices do not cancel.
struct nontrivial_cycle : error {
    using error::error;
};

// A combinatorial object (signature, character count, ...) is not produced by
// any descent.
struct not_realizable : error {
    using error::error;
};

// The direction of a move is only well defined for skew leapers.
struct ambiguous_direction : error {
    using error::error;
};

// A displacement that is not a move of the leaper at hand.
struct not_a_move : error {
    using error::error;
};

// An operation that needs a connected graph received a disconnected one.
struct not_connected : error {
    using error::error;
};

// An operation restricted to cycle-shaped direction graphs received some
// other shape.
struct not_a_cycle_graph : error {
    using error::error;
};

// A claimed duality between two direction graphs failed verification.
struct not_dual : error {
    using error::error;
};

// A signature string does not label any actual cycle: a direction step
// leaves the labeling tables, the traversal fails to close, or the cyclic
// symmetry required of signatures is broken.
struct inconsistent_signature : error {
    using error::error;
};

// Two traversals that must cover the same squares cover different ones.
struct mismatched_squares : error {
    using error::error;
};

// An index map that must be a permutation repeats or skips a value.
struct not_bijective : error {
    using error::error;
};

// An origin character does not apply to the given leaper.
struct invalid_origin : error {
    using error::error;
};

// A cycle expected to satisfy the perfection properties fails one of them.
struct not_perfect : error {
    using error::error;
};

// The request is outside what the implementation can decide.
struct unsupported : error {
    using error::error;
};

}  // namespace leap

#endif  // LEAP_ERRORS_HPP
