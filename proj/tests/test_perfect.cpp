#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "leap/board.hpp"
#include "leap/direction.hpp"
#include "leap/duality.hpp"
#include "leap/errors.hpp"
#include "leap/frame.hpp"
#include "leap/perfect.hpp"
#include "leap/signature.hpp"

using namespace leap;

namespace {

std::vector<int> word_of(const std::string& digits) {
    std::vector<int> out;
    for (const char c : digits) out.push_back(c - '0');
    return out;
}

// All strings over `alphabet` of length at most `max_len`, shortest first.
std::vector<std::string> strings_up_to(const std::string& alphabet, std::size_t max_len) {
    std::vector<std::string> out{""};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (const char c : alphabet) out.push_back(out[i] + c);
        begin = end;
    }
    return out;
}

// The direction graph read off a closed traversal of `tour`-moves.
DirectionGraph traversal_graph(Leaper tour, const std::vector<Square>& seq) {
    std::vector<int> w;
    w.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Square a = seq[i];
        const Square b = seq[(i + 1) % seq.size()];
        w.push_back(direction_of_move(tour, {b.x - a.x, b.y - a.y}));
    }
    return cycle_graph_from_word(w);
}

bool same_cycles(const ProperCycle& a, const ProperCycle& b) {
    return a.frame == b.frame && a.tour == b.tour && a.paths == b.paths;
}

std::set<Square> square_set(const ProperCycle& d) {
    const auto seq = d.sequence();
    return {seq.begin(), seq.end()};
}

}  // namespace

TEST_CASE("initial cycles seed each origin with the right octagon") {
    SUBCASE("squares, frames, and direction words for the skew seed") {
        const Leaper m{1, 2};

        const ProperCycle f = initial_cycle(m, 'f');
        CHECK(f.tour == m);
        CHECK(f.frame == Leaper{1, 4});
        const std::vector<Square> f_squares = {{6, 0},  {2, 2},   {0, 6},  {-2, 2},
                                               {-6, 0}, {-2, -2}, {0, -6}, {2, -2}};
        CHECK(f.sequence() == f_squares);
        for (const auto& path : f.paths) CHECK(path.size() == 1);
        CHECK(cycle_graphs_equal(traversal_graph(m, f.sequence()),
                                 cycle_graph_from_word(word_of("43658721"))));

        const ProperCycle g = initial_cycle(m, 'g');
        CHECK(g.frame == Leaper{2, 3});
        const std::vector<Square> g_squares = {{2, 0},  {4, 4},   {0, 2},  {-4, 4},
                                               {-2, 0}, {-4, -4}, {0, -2}, {4, -4}};
        CHECK(g.sequence() == g_squares);
        CHECK(cycle_graphs_equal(traversal_graph(m, g.sequence()),
                                 cycle_graph_from_word(word_of("25476183"))));

        const ProperCycle h = initial_cycle(m, 'h');
        CHECK(h.frame == Leaper{2, 5});
        const std::vector<Square> h_squares = {{6, 0},  {4, 4},   {0, 6},  {-4, 4},
                                               {-6, 0}, {-4, -4}, {0, -6}, {4, -4}};
        CHECK(h.sequence() == h_squares);
        CHECK(cycle_graphs_equal(traversal_graph(m, h.sequence()),
                                 cycle_graph_from_word(word_of("34567812"))));
    }

    SUBCASE("frame parameters for other leapers") {
        CHECK(initial_cycle({2, 3}, 'f').frame == Leaper{2, 7});
        CHECK(initial_cycle({2, 3}, 'g').frame == Leaper{3, 4});
        CHECK(initial_cycle({2, 3}, 'h').frame == Leaper{3, 8});
        CHECK(initial_cycle({0, 1}, 'h').frame == Leaper{1, 2});
        CHECK(initial_cycle({1, 1}, 'h').frame == Leaper{1, 3});
    }

    SUBCASE("the orthogonal seed is the center ring, and 'g' matches 'h'") {
        const ProperCycle h = initial_cycle({0, 1}, 'h');
        const std::vector<Square> ring = {{2, 0},  {2, 2},   {0, 2},  {-2, 2},
                                          {-2, 0}, {-2, -2}, {0, -2}, {2, -2}};
        CHECK(h.sequence() == ring);
        CHECK(same_cycles(h, initial_cycle({0, 1}, 'g')));

        const CycleDecomposition dec = decompose_center_board({1, 2});
        REQUIRE(dec.cycles.size() == 1);
        CHECK(same_cycles(h, canonical_second_cycle({1, 2}, dec.cycles.front())));
    }

    SUBCASE("inapplicable origins and malformed leapers are rejected") {
        CHECK_THROWS_AS(initial_cycle({0, 1}, 'f'), invalid_origin);
        CHECK_THROWS_AS(initial_cycle({1, 1}, 'g'), invalid_origin);
        CHECK_THROWS_AS(initial_cycle({1, 2}, 'x'), invalid_origin);
        CHECK_THROWS_AS(initial_cycle({1, 2}, 'H'), invalid_origin);
        CHECK_THROWS_AS(initial_cycle({2, 1}, 'h'), bad_input);
        CHECK_THROWS_AS(initial_cycle({0, 0}, 'h'), bad_input);
        CHECK_THROWS_AS(initial_cycle({-1, 2}, 'h'), bad_input);
    }
}

TEST_CASE("the perfection report accepts seeds and pinpoints corruptions") {
    SUBCASE("every seed passes all six properties") {
        const std::pair<Leaper, char> seeds[] = {
            {{1, 2}, 'f'}, {{1, 2}, 'g'}, {{1, 2}, 'h'},
            {{2, 3}, 'h'}, {{0, 1}, 'h'}, {{1, 1}, 'h'},
        };
        for (const auto& [m, origin] : seeds) {
            const PerfectionReport rep = check_perfect(initial_cycle(m, origin));
            CHECK(rep.translation.ok);
            CHECK(rep.symmetry.ok);
            CHECK(rep.separation.ok);
            CHECK(rep.simplicity.ok);
            CHECK(rep.coherence.ok);
            CHECK(rep.protocoherence.ok);
            CHECK(rep.all());
            CHECK(rep.first_failure().empty());
        }
    }

    SUBCASE("a displaced square breaks the translation identities") {
        ProperCycle d = initial_cycle({1, 2}, 'g');
        d.paths[0][0] = {4, 0};
        const PerfectionReport rep = check_perfect(d);
        CHECK_FALSE(rep.translation.ok);
        CHECK_FALSE(rep.translation.note.empty());
        CHECK_FALSE(rep.all());
        CHECK(rep.first_failure().rfind("translation", 0) == 0);
    }

    SUBCASE("an even path breaks symmetry") {
        ProperCycle d = initial_cycle({1, 2}, 'h');
        d.paths[1].push_back({0, 6});
        const PerfectionReport rep = check_perfect(d);
        CHECK_FALSE(rep.symmetry.ok);
    }

    SUBCASE("a shrunken frame leaper breaks protocoherence and nothing else placement-wise") {
        ProperCycle d = initial_cycle({1, 2}, 'h');
        d.frame = {1, 2};
        const PerfectionReport rep = check_perfect(d);
        CHECK_FALSE(rep.translation.ok);
        CHECK_FALSE(rep.protocoherence.ok);
        CHECK(rep.symmetry.ok);
        CHECK(rep.separation.ok);
        CHECK(rep.simplicity.ok);
        CHECK(rep.coherence.ok);
    }

    SUBCASE("a foreign touring leaper breaks only coherence") {
        ProperCycle d = initial_cycle({1, 2}, 'h');
        d.tour = {1, 4};
        const PerfectionReport rep = check_perfect(d);
        CHECK_FALSE(rep.coherence.ok);
        CHECK(rep.translation.ok);
        CHECK(rep.symmetry.ok);
        CHECK(rep.separation.ok);
        CHECK(rep.simplicity.ok);
        CHECK(rep.protocoherence.ok);
    }

    SUBCASE("crossed corner squares break simplicity") {
        ProperCycle d = initial_cycle({1, 2}, 'g');
        std::swap(d.paths[1][0], d.paths[3][0]);
        const PerfectionReport rep = check_perfect(d);
        CHECK_FALSE(rep.simplicity.ok);
    }

    SUBCASE("a default-constructed cycle reports failures instead of throwing") {
        const PerfectionReport rep = check_perfect(ProperCycle{});
        CHECK_FALSE(rep.all());
        CHECK_FALSE(rep.first_failure().empty());
    }
}

TEST_CASE("one growth step advances the frame and the path lengths as promised") {
    const ProperCycle ring = initial_cycle({0, 1}, 'h');
    REQUIRE(ring.length() == 8);

    struct Step {
        char kind;
        Leaper frame;
        std::size_t total, side, corner;
    };
    // From side and corner path lengths u = v = 1: 'f' adds 8v squares,
    // 'g' adds 8u, 'h' adds 16u + 8v, 'H' adds 8u + 16v.
    const Step steps[] = {
        {'f', {1, 4}, 16, 3, 1},
        {'g', {2, 3}, 16, 1, 3},
        {'h', {2, 5}, 32, 5, 3},
        {'H', {2, 5}, 32, 3, 5},
    };
    for (const Step& step : steps) {
        const ProperCycle lifted = lift_perfect(step.kind, ring);
        CHECK(lifted.tour == Leaper{0, 1});
        CHECK(lifted.frame == step.frame);
        CHECK(lifted.length() == step.total);
        CHECK(lifted.paths[0].size() == step.side);
        CHECK(lifted.paths[1].size() == step.corner);
        CHECK(check_perfect(lifted).all());
    }

    // 'h' and 'H' share frame parameters but build different cycles.
    CHECK(square_set(lift_perfect('h', ring)) != square_set(lift_perfect('H', ring)));

    SUBCASE("imperfect input and unknown kinds are rejected") {
        ProperCycle broken = ring;
        broken.paths[0][0] = {4, 0};
        CHECK_THROWS_AS(lift_perfect('f', broken), not_perfect);
        CHECK_THROWS_AS(lift_perfect('x', ring), bad_input);
        CHECK_THROWS_AS(lift_perfect('e', ring), bad_input);
    }
}

TEST_CASE("composed descents build verified dual boards") {
    SUBCASE("a two-step build, one step at a time") {
        const ProperCycle direct = perfect_cycle({0, 1}, 'h', "hH");
        const ProperCycle staged =
            lift_perfect('h', lift_perfect('H', initial_cycle({0, 1}, 'h')));
        CHECK(same_cycles(direct, staged));
        CHECK(direct.frame == Leaper{5, 12});
        CHECK(direct.length() == 120);

        const DualBoard dual = build_dual_board({0, 1}, 'h', "hH");
        CHECK(dual.partner == Leaper{5, 12});
        CHECK(dual.board.size() == 120);
        CHECK(verify_dual_board(dual.board, {0, 1}, dual.partner));
    }

    SUBCASE("empty descents already give dual pairs") {
        const DualBoard a = build_dual_board({1, 2}, 'g', "");
        CHECK(a.board.size() == 8);
        CHECK(a.partner == Leaper{2, 3});
        CHECK(verify_dual_board(a.board, {1, 2}, {2, 3}));

        const DualBoard b = build_dual_board({2, 3}, 'g', "");
        CHECK(b.board.size() == 8);
        CHECK(b.partner == Leaper{3, 4});
        CHECK(verify_dual_board(b.board, {2, 3}, {3, 4}));
    }

    SUBCASE("a single growth step over a long leaper") {
        const DualBoard d = build_dual_board({1, 4}, 'f', "g");
        CHECK(d.partner == Leaper{6, 11});
        CHECK(d.board.size() == 16);
        CHECK(verify_dual_board(d.board, {1, 4}, {6, 11}));
    }

    SUBCASE("bad words and inapplicable origins propagate") {
        CHECK_THROWS_AS(perfect_cycle({1, 2}, 'h', "fx"), bad_input);
        CHECK_THROWS_AS(build_dual_board({0, 1}, 'f', ""), invalid_origin);
    }
}

TEST_CASE("every short descent yields perfection, the envelope, and a dual partner") {
    const std::vector<Leaper> leapers = {{0, 1}, {1, 2}, {1, 4}, {2, 3}};
    const std::vector<std::string> words = strings_up_to("fghH", 2);

    for (const Leaper m : leapers) {
        std::string origins = "h";
        if (m.p > 0) origins += 'f';
        if (m.p < m.q) origins += 'g';
        for (const char origin : origins) {
            for (const std::string& e : words) {
                CAPTURE(m.p);
                CAPTURE(m.q);
                CAPTURE(origin);
                CAPTURE(e);

                const ProperCycle d = perfect_cycle(m, origin, e);
                REQUIRE(check_perfect(d).all());
                const std::vector<Square> seq = d.sequence();
                const std::size_t n = seq.size();
                const coord p = d.frame.p, q = d.frame.q;

                // Every square sits strictly inside the frame leaper's
                // diamond-and-box envelope.
                for (const Square s : seq) {
                    const coord ax = s.x < 0 ? -s.x : s.x;
                    const coord ay = s.y < 0 ? -s.y : s.y;
                    REQUIRE(ax + ay < 2 * (p + q));
                    REQUIRE(std::max(ax, ay) < 2 * q);
                }

                // The frame leaper's edges over these squares are exactly
                // the pairs matched by the four translation identities, and
                // they close up into one Hamiltonian cycle.
                std::set<std::pair<Square, Square>> translation_edges;
                const Vec2 shifts[4] = {
                    {-2 * q, -2 * p}, {-2 * p, -2 * q}, {2 * p, -2 * q}, {2 * q, -2 * p}};
                for (int i = 0; i < 4; ++i)
                    for (int j = i; j <= i + 1; ++j)
                        for (const Square x : d.paths[j % 8]) {
                            const Square y = x + shifts[i];
                            translation_edges.insert({std::min(x, y), std::max(x, y)});
                        }
                const Board board(seq);
                const LeaperGraph partner_graph = build_leaper_graph(board, d.frame);
                std::set<std::pair<Square, Square>> graph_edges;
                for (std::size_t v = 0; v < partner_graph.adj.size(); ++v)
                    for (const int w : partner_graph.adj[v])
                        if (static_cast<std::size_t>(w) > v)
                            graph_edges.insert({board.squares()[v], board.squares()[w]});
                REQUIRE(translation_edges == graph_edges);
                const CycleDecomposition partner_cycles = decompose_cycles(partner_graph);
                REQUIRE(partner_cycles.isolated.empty());
                REQUIRE(partner_cycles.cycles.size() == 1);
                REQUIRE(partner_cycles.cycles.front().size() == n);

                // The eight paths are recoverable from the bare square set:
                // each is the intersection of the cycle with its two
                // neighboring frame-move translates.
                std::vector<Square> sorted = seq;
                std::sort(sorted.begin(), sorted.end());
                const auto present = [&sorted](Square s) {
                    return std::binary_search(sorted.begin(), sorted.end(), s);
                };
                for (int i = 0; i < 8; ++i) {
                    const int k = i / 2;
                    const Vec2 s1 = rot90k(i % 2 == 0 ? Vec2{2 * q, 2 * p} : Vec2{2 * p, 2 * q}, k);
                    const Vec2 s2 = rot90k(i % 2 == 0 ? Vec2{2 * q, -2 * p} : Vec2{2 * q, 2 * p}, k);
                    std::set<Square> carved;
                    for (const Square s : seq)
                        if (present(s - s1) && present(s - s2)) carved.insert(s);
                    const std::set<Square> expected(d.paths[i].begin(), d.paths[i].end());
                    REQUIRE(carved == expected);
                }

                REQUIRE(verify_dual_board(board, m, d.frame));

                // Direction graphs: the touring traversal realizes the
                // second fundamental cycle of (origin, word), the partner's
                // traversal the plain fundamental cycle of the word.
                if (is_skew(m))
                    REQUIRE(cycle_graphs_equal(traversal_graph(m, seq),
                                               second_fundamental(origin, e)));
                REQUIRE(cycle_graphs_equal(
                    traversal_graph(d.frame, partner_cycles.cycles.front()),
                    fundamental_cycle(e)));
            }
        }
    }
}
