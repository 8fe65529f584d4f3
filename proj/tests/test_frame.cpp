#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "leap/descent.hpp"
#include "leap/errors.hpp"
#include "leap/frame.hpp"

using namespace leap;

namespace {

std::set<Square> square_set(const std::vector<Square>& v) { return {v.begin(), v.end()}; }

bool is_move_of(Leaper l, Vec2 d) {
    const coord p = 2 * l.p, q = 2 * l.q;
    const coord ax = d.x < 0 ? -d.x : d.x, ay = d.y < 0 ? -d.y : d.y;
    if (ax == 0 && ay == 0) return false;
    return (ax == p && ay == q) || (ax == q && ay == p);
}

bool is_cycle_of(Leaper l, const std::vector<Square>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!is_move_of(l, c[(i + 1) % c.size()] - c[i])) return false;
    return true;
}

std::vector<Square> base_ring_cycle() {
    const CycleDecomposition d = decompose_center_board({1, 2});
    REQUIRE(d.cycles.size() == 1);
    return d.cycles.front();
}

std::vector<Leaper> skew_basic_up_to(int max_sum) {
    std::vector<Leaper> out;
    for (int q = 2; q < max_sum; ++q)
        for (int p = 1; p < q; ++p)
            if (p + q <= max_sum && is_skew_basic(Leaper{p, q})) out.push_back({p, q});
    return out;
}

}  // namespace

TEST_CASE("frame boards and sections") {
    CHECK(frame_board({0, 3}).size() == 0);
    CHECK(frame_board({1, 2}).size() == 8);
    CHECK(frame_board({2, 3}).size() == 24);
    CHECK(frame_board({1, 4}).size() == 16);
    CHECK(frame_board({2, 5}).size() == 40);
    CHECK_THROWS_AS(frame_board({3, 2}), bad_input);

    const Frame f{1, 2};
    CHECK(section_of(f, {2, 0}) == 0);
    CHECK(section_of(f, {2, 2}) == 1);
    CHECK(section_of(f, {0, 2}) == 2);
    CHECK(section_of(f, {-2, 2}) == 3);
    CHECK(section_of(f, {-2, 0}) == 4);
    CHECK(section_of(f, {-2, -2}) == 5);
    CHECK(section_of(f, {0, -2}) == 6);
    CHECK(section_of(f, {2, -2}) == 7);
    CHECK(section_of(f, {0, 0}) == -1);   // hole
    CHECK(section_of(f, {4, 0}) == -1);   // off the board
    CHECK(section_of(f, {1, 1}) == -1);   // off the lattice

    // Every frame square lands in exactly one section, and the eight sections
    // exhaust the frame.
    for (const Frame g : {Frame{1, 2}, Frame{2, 3}, Frame{2, 5}, Frame{4, 7}, Frame{3, 8}}) {
        long long counted = 0;
        const Board gb = frame_board(g);
        for (const Square& s : gb.squares()) {
            CHECK(section_of(g, s) >= 0);
            ++counted;
        }
        CHECK(counted == static_cast<long long>(frame_board(g).size()));
    }
}

TEST_CASE("shells and cores") {
    // Smallest frame: the whole ring is shell.
    CHECK(square_set(frame_shell({1, 2}).squares()) == square_set(frame_board({1, 2}).squares()));
    CHECK(frame_core({1, 2}).size() == 0);

    // Compact regime.
    CHECK(square_set(frame_shell({2, 3}).squares()) ==
          std::set<Square>{{2, 0}, {4, 4}, {0, 2}, {-4, 4}, {-2, 0}, {-4, -4}, {0, -2}, {4, -4}});
    CHECK(frame_core({2, 3}).size() == 16);

    // Middle regime.
    CHECK(square_set(frame_shell({2, 5}).squares()) ==
          std::set<Square>{{6, 0}, {4, 4}, {0, 6}, {-4, 4}, {-6, 0}, {-4, -4}, {0, -6}, {4, -4}});
    CHECK(frame_core({2, 5}).size() == 32);

    // Stretched regime: no shell at all.
    CHECK(frame_shell({1, 4}).size() == 0);
    CHECK(frame_shell({1, 8}).size() == 0);
    CHECK(frame_shell({3, 9}).size() == 0);

    // Wide shell pieces: 8 blocks of 3 x 3.
    CHECK(frame_shell({4, 7}).size() == 72);
    CHECK(frame_core({4, 7}).size() == 40);

    // The shell is always a union of full leaper cycles of the frame: adding
    // the rest of the frame never connects shell to core.
    for (const Frame g : {Frame{2, 3}, Frame{2, 5}, Frame{4, 7}, Frame{4, 9}, Frame{5, 6}}) {
        const Board shell = frame_shell(g);
        const Board whole = frame_board(g);
        const LeaperGraph lg = build_leaper_graph(whole, {g.m, g.n});
        for (std::size_t i = 0; i < whole.size(); ++i) {
            const bool in_shell = shell.contains(whole.squares()[i]);
            for (const int j : lg.adj[i])
                CHECK(shell.contains(whole.squares()[j]) == in_shell);
        }
    }
}

TEST_CASE("lifted frames and translations") {
    CHECK(lift_frame('f', {1, 2}) == Frame{1, 4});
    CHECK(lift_frame('g', {1, 2}) == Frame{2, 3});
    CHECK(lift_frame('h', {1, 2}) == Frame{2, 5});
    CHECK(lift_frame('f', {2, 5}) == Frame{2, 9});
    CHECK(lift_frame('g', {2, 5}) == Frame{5, 8});
    CHECK(lift_frame('h', {2, 5}) == Frame{5, 12});
    CHECK_THROWS_AS(lift_frame('x', {1, 2}), bad_input);

    // East and northeast translations, doubled; the rest are their rotations.
    CHECK(lift_translation('f', {1, 2}, 0) == Vec2{6, 0});
    CHECK(lift_translation('f', {1, 2}, 1) == Vec2{2, 2});
    CHECK(lift_translation('g', {1, 2}, 0) == Vec2{2, 0});
    CHECK(lift_translation('g', {1, 2}, 1) == Vec2{4, 4});
    CHECK(lift_translation('h', {1, 2}, 0) == Vec2{6, 0});
    CHECK(lift_translation('h', {1, 2}, 1) == Vec2{4, 4});
    CHECK(lift_translation('h', {1, 2}, 2) == Vec2{0, 6});
    CHECK(lift_translation('h', {1, 2}, 3) == Vec2{-4, 4});
    CHECK(lift_translation('h', {1, 2}, 4) == Vec2{-6, 0});
    CHECK(lift_translation('h', {1, 2}, 7) == Vec2{4, -4});
}

TEST_CASE("set lifts cover cores and full stretched frames") {
    const std::vector<Square> ring = frame_board({1, 2}).squares();
    CHECK(square_set(lift_set('f', {1, 2}, ring).squares()) ==
          square_set(frame_board({1, 4}).squares()));
    CHECK(square_set(lift_set('g', {1, 2}, ring).squares()) ==
          square_set(frame_core({2, 3}).squares()));
    CHECK(square_set(lift_set('h', {1, 2}, ring).squares()) ==
          square_set(frame_core({2, 5}).squares()));
    CHECK_THROWS_AS(lift_set('f', {1, 2}, {{0, 0}}), bad_input);

    // Same covering laws one level up.
    const std::vector<Square> mid = frame_board({2, 5}).squares();
    CHECK(square_set(lift_set('f', {2, 5}, mid).squares()) ==
          square_set(frame_board({2, 9}).squares()));
    CHECK(square_set(lift_set('g', {2, 5}, mid).squares()) ==
          square_set(frame_core({5, 8}).squares()));
    CHECK(square_set(lift_set('h', {2, 5}, mid).squares()) ==
          square_set(frame_core({5, 12}).squares()));
}

TEST_CASE("cycle lifts reproduce the lifted center-board cycles") {
    const std::vector<Square> ring = base_ring_cycle();

    const std::vector<Square> f14 = lift_cycle('f', {1, 2}, ring);
    CHECK(f14.size() == 16);
    CHECK(is_cycle_of({1, 4}, f14));
    CHECK(canonical_cycle(f14) == decompose_center_board({1, 4}).cycles.front());

    const std::vector<Square> g23 = lift_cycle('g', {1, 2}, ring);
    CHECK(g23.size() == 16);
    CHECK(is_cycle_of({2, 3}, g23));
    {
        const CycleDecomposition d = decompose_center_board({2, 3});
        std::vector<std::vector<Square>> matches;
        for (const auto& c : d.cycles)
            if (c.size() == 16) matches.push_back(c);
        REQUIRE(matches.size() == 1);
        CHECK(canonical_cycle(g23) == matches.front());
    }

    const std::vector<Square> h25 = lift_cycle('h', {1, 2}, ring);
    CHECK(h25.size() == 32);
    CHECK(is_cycle_of({2, 5}, h25));
    {
        const CycleDecomposition d = decompose_center_board({2, 5});
        std::vector<std::vector<Square>> matches;
        for (const auto& c : d.cycles)
            if (c.size() == 32) matches.push_back(c);
        REQUIRE(matches.size() == 1);
        CHECK(canonical_cycle(h25) == matches.front());
    }
}

TEST_CASE("chained lifts follow a full descent") {
    // Innermost transformation first: the reversed descent of (18, 41).
    REQUIRE(descent_of({18, 41}) == "hfgh");
    std::vector<Square> c = base_ring_cycle();
    Frame fr{1, 2};
    for (const char kind : {'h', 'g', 'f', 'h'}) {
        c = lift_cycle(kind, fr, c);
        fr = lift_frame(kind, fr);
    }
    CHECK(fr == Frame{18, 41});
    CHECK(is_cycle_of({18, 41}, c));
    CHECK(c.size() == 776);

    // The result is the unique longest cycle of the center board, and its
    // length agrees with the classification table.
    const auto table = cycle_type_table({18, 41});
    CHECK(table.back().length == 776);
    const CycleDecomposition d = decompose_center_board({18, 41});
    std::vector<std::vector<Square>> matches;
    for (const auto& cyc : d.cycles)
        if (cyc.size() == 776) matches.push_back(cyc);
    REQUIRE(matches.size() == 1);
    CHECK(canonical_cycle(c) == matches.front());
}

TEST_CASE("proper cycle validation") {
    const ProperCycle base = canonical_second_cycle({1, 2}, base_ring_cycle());
    CHECK(base.frame == Leaper{1, 2});
    CHECK(base.tour == Leaper{0, 1});
    CHECK(base.length() == 8);
    CHECK(is_proper(base));

    // Swapping two paths breaks the translation identities.
    ProperCycle bad = base;
    std::swap(bad.paths[1], bad.paths[2]);
    CHECK(!is_proper(bad));

    // An empty path is rejected outright.
    bad = base;
    bad.paths[3].clear();
    CHECK_THROWS_AS(check_proper(bad), bad_input);

    // A repeated square is rejected.
    bad = base;
    bad.paths[0].push_back(bad.paths[2].front());
    CHECK(!is_proper(bad));
}

TEST_CASE("conjugate path lift") {
    const ProperCycle base = canonical_second_cycle({1, 2}, base_ring_cycle());
    const ProperCycle lifted = lift_proper('H', base);
    CHECK(lifted.frame == Leaper{2, 5});
    CHECK(lifted.tour == Leaper{0, 1});
    CHECK(lifted.length() == 32);
    CHECK(is_proper(lifted));
    // The conjugate lift differs from the plain one.
    const ProperCycle plain = lift_proper('h', base);
    CHECK(is_proper(plain));
    CHECK(plain.sequence() != lifted.sequence());
    CHECK(square_set(plain.sequence()) != square_set(lifted.sequence()));
}

TEST_CASE("canonical second cycles over all center-board cycles") {
    for (const Leaper l : skew_basic_up_to(21)) {
        CAPTURE(l.p);
        CAPTURE(l.q);
        const Frame fr{l.p, l.q};
        const auto table = cycle_type_table(l);
        const CycleDecomposition dec = decompose_center_board(l);

        std::map<std::size_t, long long> cycles_per_type;
        for (const auto& c : dec.cycles) {
            // Match the cycle to its table row by length; lengths increase
            // strictly down the table.
            std::size_t row = 0;
            for (std::size_t i = 0; i < table.size(); ++i)
                if (table[i].length == static_cast<long long>(c.size())) row = i + 1;
            REQUIRE(row != 0);
            ++cycles_per_type[row];

            const ProperCycle d = canonical_second_cycle(l, c);
            CHECK(is_proper(d));
            CHECK(d.frame == l);
            CHECK(d.tour == table[row - 1].second);
            CHECK(square_set(d.sequence()) == square_set(c));

            // Paths sit inside their sections, and the visit counts are
            // uniform and odd.
            for (int s = 0; s < 8; ++s)
                for (const Square& sq : d.paths[s]) CHECK(section_of(fr, sq) == s);
            const SectionCounts counts = section_visit_counts(fr, d.sequence());
            CHECK(counts.side % 2 == 1);
            CHECK(counts.corner % 2 == 1);

            // The touring leaper's graph over the cycle's squares is exactly
            // the canonical cycle: the second leaper tours them one way only.
            const LeaperGraph mg = build_leaper_graph(Board(c), d.tour);
            const CycleDecomposition md = decompose_cycles(mg);
            CHECK(md.isolated.empty());
            REQUIRE(md.cycles.size() == 1);
            CHECK(md.cycles.front() == canonical_cycle(d.sequence()));

            // Rows flagged for the third leaper yield a knight cycle over the
            // same squares.
            if (table[row - 1].third_leaper) {
                const std::vector<Square> third = third_leaper_cycle(d);
                CHECK(is_cycle_of({1, 2}, third));
                CHECK(square_set(third) == square_set(c));
            }
        }
        for (const auto& r : table) {
            CHECK(cycles_per_type[r.index] == r.count);
        }
    }
}

TEST_CASE("third leaper subsequence requires indivisible length") {
    const ProperCycle base = canonical_second_cycle({1, 2}, base_ring_cycle());
    const std::vector<Square> third = third_leaper_cycle(base);
    CHECK(third.size() == 8);
    CHECK(is_cycle_of({1, 2}, third));

    // An empty sequence has no third-leaper subsequence.
    CHECK_THROWS_AS(third_leaper_cycle(ProperCycle{{1, 2}, {0, 1}, {}}), bad_input);
}

TEST_CASE("section visit counts") {
    const auto counts = section_visit_counts({1, 2}, base_ring_cycle());
    CHECK(counts.side == 1);
    CHECK(counts.corner == 1);

    // A sequence visiting east twice is not section-uniform.
    CHECK_THROWS_AS(section_visit_counts({2, 3}, std::vector<Square>{{2, 0}, {4, 0}}),
                    unmatched_class);
    CHECK_THROWS_AS(section_visit_counts({2, 3}, std::vector<Square>{{99, 0}}), bad_input);
}
