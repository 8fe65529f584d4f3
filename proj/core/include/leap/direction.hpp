#ifndef LEAP_DIRECTION_HPP
#define LEAP_DIRECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "leap/board.hpp"

namespace leap {

// The eight skew directions, labeled 1..8 counterclockwise starting from
// east-northeast.  Direction i of a (p, q)-leaper is the translation
// A_i (p, q)^T; for skew leapers the label of a move is unique.
Mat2 direction_matrix(int i);         // i in 1..8
int opposite_direction(int i);        // -i, that is, i + 4
int shift_direction(int i, int k);    // i + k reduced into 1..8

// The unique direction of a doubled translation; ambiguous_direction for
// orthogonal and diagonal leapers, not_a_move when nothing solves it.
int direction_of_move(Leaper l, Vec2 doubled);

// A symmetric digraph with direction-labeled arcs such that matrix sums
// vanish around every cycle.  Arcs are stored one per symmetric pair; the
// reverse arc carries the opposite label implicitly.  Construction verifies
// the vanishing-sum condition by assigning each vertex a matrix potential.
struct DirArc {
    int from = 0;
    int to = 0;
    int label = 0;

    friend bool operator==(const DirArc&, const DirArc&) = default;
};

class DirectionGraph {
public:
    DirectionGraph() = default;
    DirectionGraph(int vertices, std::vector<DirArc> arcs);

    int vertex_count() const { return vertices_; }
    const std::vector<DirArc>& arcs() const { return arcs_; }

    // Outgoing (to, label) pairs, both stored and implied orientations.
    const std::vector<std::pair<int, int>>& neighbors(int v) const;

    bool connected() const;
    int component_of(int v) const;

    // Sum of direction matrices along any path; not_connected when the
    // vertices lie in different components.
    Mat2 distance(int x, int y) const;

private:
    int vertices_ = 0;
    std::vector<DirArc> arcs_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<int> component_;
    std::vector<Mat2> potential_;
    int component_count_ = 0;
};

// Reads the direction graph off a leaper graph of a skew leaper, vertex ids
// in search order; nontrivial_cycle (with a square witness in the message)
// when some cycle's matrix sum does not vanish.
DirectionGraph extract(const LeaperGraph& g);

// distance = 0 exactly on equal vertices and a direction matrix exactly on
// arcs, within every component.
bool is_coherent(const DirectionGraph& phi);

// Squares realizing the graph for a given leaper, indexed by vertex:
// vertex 0 lands on the anchor, the rest follow the matrix potentials.
std::vector<Square> instantiate(const DirectionGraph& phi, Leaper l, Square anchor);

// Relabelings of the eight directions that preserve validity.
struct EquivPermutation {
    std::array<int, 8> to{};  // to[i-1] is the image of label i
    std::string name;

    int operator()(int i) const;
    friend bool operator==(const EquivPermutation& a, const EquivPermutation& b) {
        return a.to == b.to;
    }
};

EquivPermutation identity_permutation();
EquivPermutation compose(const EquivPermutation& outer, const EquivPermutation& inner);
EquivPermutation inverse(const EquivPermutation& p);

// The named relabelings: three descent kinds, the second-cycle origin swap,
// the rotation and reflection generators, and the pinwheel quarter turn.
EquivPermutation perm_f();
EquivPermutation perm_g();
EquivPermutation perm_h();
EquivPermutation perm_second();
EquivPermutation perm_shift(int k = 1);
EquivPermutation perm_reflect();
EquivPermutation perm_pinwheel();
std::vector<EquivPermutation> named_permutations();

DirectionGraph apply_perm(const EquivPermutation& p, const DirectionGraph& phi);

// Labels read along a cycle-shaped graph's single cycle, starting anywhere;
// not_a_cycle_graph otherwise.
std::vector<int> cycle_word(const DirectionGraph& phi);

// The cycle-shaped graph whose arcs read the given labels in order; the
// label sum must vanish for the graph to be valid.
DirectionGraph cycle_graph_from_word(const std::vector<int>& word);

// Equality of cycle-shaped graphs: same label word up to rotation and up to
// reversal with negated labels.
bool cycle_graphs_equal(const DirectionGraph& a, const DirectionGraph& b);

// Equivalence over the sixteen candidate relabelings Shift^k and
// Reflect . Shift^k; returns a witness.
std::optional<EquivPermutation> equivalent_as_cycles(const DirectionGraph& a,
                                                     const DirectionGraph& b);

// Duality: eta maps phi's vertices onto phi2's; every arc eta(a) -> eta(b)
// labeled i in phi2 must satisfy distance_phi(a, b) = A_i * a_dual, with both
// graphs coherent and connected, eta an unlabeled isomorphism, and a_dual a
// unimodular non-direction matrix.
bool verify_dual_pair(const DirectionGraph& phi, const DirectionGraph& phi2,
                      const std::vector<int>& eta, const Mat2& a_dual);

struct Duality {
    std::vector<int> eta;
    Mat2 a_dual;
};

// The bijection completing a duality with the given matrix, if one exists.
// Coherence pins every vertex to a unique matrix potential, so a candidate
// is forced from a single anchor choice and there are only |V| to try.
std::optional<std::vector<int>> find_duality_eta(const DirectionGraph& phi,
                                                 const DirectionGraph& phi2,
                                                 const Mat2& a_dual);

// Searches matrix candidates read off one arc of the complement against all
// vertex pairs, for cycle-shaped graphs; unsupported for other shapes.
std::optional<Duality> find_duality(const DirectionGraph& phi, const DirectionGraph& phi2);

}  // namespace leap

#endif  // LEAP_DIRECTION_HPP
