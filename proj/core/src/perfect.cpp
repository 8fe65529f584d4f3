#include "leap/perfect.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "leap/errors.hpp"

namespace leap {

bool PerfectionReport::all() const {
    return translation.ok && symmetry.ok && separation.ok && simplicity.ok && coherence.ok &&
           protocoherence.ok;
}

std::string PerfectionReport::first_failure() const {
    const std::pair<const char*, const PropertyCheck*> checks[] = {
        {"translation", &translation},
        {"symmetry", &symmetry},
        {"separation", &separation},
        {"simplicity", &simplicity},
        {"coherence", &coherence},
        {"protocoherence", &protocoherence},
    };
    for (const auto& [name, check] : checks)
        if (!check->ok) return std::string(name) + ": " + check->note;
    return {};
}

namespace {

PropertyCheck pass() { return {}; }
PropertyCheck fail(std::string note) { return {false, std::move(note)}; }

std::vector<Square> shifted(std::vector<Square> v, Vec2 by) {
    for (Square& s : v) s += by;
    return v;
}

std::vector<Square> reversed_copy(const std::vector<Square>& v) {
    return {v.rbegin(), v.rend()};
}

// Section indices 0..7 run counterclockwise from east; even sections sit on
// the axes, odd ones on the diagonals.

// Whether `s` lies on the open half-axis of section `i`.
bool on_ray(int i, Square s) {
    switch (i) {
        case 0: return s.y == 0 && s.x > 0;
        case 1: return s.x == s.y && s.x > 0;
        case 2: return s.x == 0 && s.y > 0;
        case 3: return s.y == -s.x && s.x < 0;
        case 4: return s.y == 0 && s.x < 0;
        case 5: return s.x == s.y && s.x < 0;
        case 6: return s.x == 0 && s.y < 0;
        default: return s.y == -s.x && s.x > 0;
    }
}

// Mirror image of `s` across the line holding section i's half-axis.
Square mirrored(int i, Square s) {
    switch (i % 4) {
        case 0: return reflect_x_axis(s);
        case 1: return reflect_diag(s);
        case 2: return reflect_y_axis(s);
        default: return reflect_antidiag(s);
    }
}

// Whether `s` lies strictly inside the open 45-degree sector swept from
// section i's half-axis counterclockwise to section (i+1)'s.
bool in_open_sector(int i, Square s) {
    for (int t = 0; t < i / 2; ++t) s = {s.y, -s.x};  // clockwise quarter turns
    if (i % 2 == 0) return s.y > 0 && s.x > s.y;
    return s.x > 0 && s.y > s.x;
}

PropertyCheck check_translation(const ProperCycle& d) {
    const coord p = d.frame.p, q = d.frame.q;
    if (p < 0 || q <= p) return fail("frame leaper out of range");
    for (int i = 0; i < 8; ++i)
        if (d.paths[i].empty()) return fail("path " + std::to_string(i) + " is empty");
    // Each half-cycle of two consecutive paths, shifted by a frame-leaper
    // move, must retrace the opposite two paths backwards.
    const Vec2 shifts[4] = {{-2 * q, -2 * p}, {-2 * p, -2 * q}, {2 * p, -2 * q}, {2 * q, -2 * p}};
    for (int i = 0; i < 4; ++i) {
        std::vector<Square> lhs;
        lhs.insert(lhs.end(), d.paths[i].begin(), d.paths[i].end());
        lhs.insert(lhs.end(), d.paths[i + 1].begin(), d.paths[i + 1].end());
        lhs = shifted(std::move(lhs), shifts[i]);
        std::vector<Square> rhs = reversed_copy(d.paths[(i + 5) % 8]);
        const std::vector<Square> tail = reversed_copy(d.paths[(i + 4) % 8]);
        rhs.insert(rhs.end(), tail.begin(), tail.end());
        if (lhs != rhs) return fail("identity " + std::to_string(i + 1) + " fails");
    }
    return pass();
}

PropertyCheck check_symmetry(const ProperCycle& d) {
    for (int i = 0; i < 8; ++i) {
        const auto& path = d.paths[i];
        const std::string where = "path " + std::to_string(i);
        if (path.empty()) return fail(where + " is empty");
        if (path.size() % 2 == 0) return fail(where + " has even length");
        if (!on_ray(i, path[path.size() / 2]))
            return fail(where + " has its middle square off the half-axis");
        for (std::size_t j = 0; j < path.size(); ++j)
            if (mirrored(i, path[j]) != path[path.size() - 1 - j])
                return fail(where + " is not mirror-symmetric about its half-axis");
        const auto& next = d.paths[(i + 2) % 8];
        if (next.size() != path.size() ||
            !std::equal(path.begin(), path.end(), next.begin(),
                        [](Square a, Square b) { return rot90(a) == b; }))
            return fail(where + " does not turn into the next-but-one path under a quarter turn");
    }
    return pass();
}

PropertyCheck check_separation(const ProperCycle& d) {
    for (int i = 0; i < 8; ++i) {
        const auto& cur = d.paths[i];
        const auto& nxt = d.paths[(i + 1) % 8];
        if (cur.empty() || nxt.empty()) return fail("empty path");
        // Everything strictly between consecutive middle squares must stay
        // strictly inside the open sector their half-axes bound.
        std::vector<Square> between(cur.begin() + static_cast<long>(cur.size() / 2) + 1,
                                    cur.end());
        between.insert(between.end(), nxt.begin(), nxt.begin() + static_cast<long>(nxt.size() / 2));
        for (const Square s : between)
            if (!in_open_sector(i, s))
                return fail("a square between middles " + std::to_string(i) + " and " +
                            std::to_string((i + 1) % 8) + " leaves the open sector");
    }
    return pass();
}

PropertyCheck check_simplicity(const ProperCycle& d) {
    const std::vector<Square> seq = d.sequence();
    if (seq.size() < 3) return fail("fewer than three squares");
    std::vector<Square> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return fail("repeated square");
    if (!is_simple_polygon(seq)) return fail("the contour crosses itself");
    return pass();
}

PropertyCheck check_coherence(const ProperCycle& d) {
    if (d.tour.p < 0 || d.tour.q < 0 || (d.tour.p == 0 && d.tour.q == 0))
        return fail("touring leaper out of range");
    const std::vector<Square> seq = d.sequence();
    const std::size_t n = seq.size();
    if (n == 0) return fail("no squares");
    const std::vector<Vec2> moves = move_targets(d.tour);
    for (std::size_t t = 0; t < n; ++t)
        if (std::find(moves.begin(), moves.end(), seq[(t + 1) % n] - seq[t]) == moves.end())
            return fail("squares " + std::to_string(t) + " and " + std::to_string((t + 1) % n) +
                        " are not one leap apart");
    // With every consecutive pair adjacent, degree 2 everywhere means the
    // leaper graph over these squares has no edges beyond the cycle's own.
    const Board board(seq);
    if (board.size() != n) return fail("repeated square");
    const LeaperGraph graph = build_leaper_graph(board, d.tour);
    for (const auto& neighbors : graph.adj)
        if (neighbors.size() != 2)
            return fail("a square has " + std::to_string(neighbors.size()) +
                        " neighbors instead of 2");
    return pass();
}

PropertyCheck check_protocoherence(const ProperCycle& d) {
    const coord p = d.frame.p, q = d.frame.q;
    if (p < 0 || q <= p) return fail("frame leaper out of range");
    const std::vector<Square> seq = d.sequence();
    std::vector<Square> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    const auto present = [&sorted](Square s) {
        return std::binary_search(sorted.begin(), sorted.end(), s);
    };
    const std::vector<Vec2> moves = move_targets(d.tour);
    // No leap may connect the cycle to either of these two translates of
    // itself; the moves come in +/- pairs, so one direction covers both.
    const Vec2 offsets[2] = {{4 * q, 0}, {2 * (p + q), 2 * (p + q)}};
    for (const Vec2 off : offsets)
        for (const Square s : seq)
            for (const Vec2 mv : moves)
                if (present(s + mv - off))
                    return fail("a leap reaches the translate by (" + std::to_string(off.x) +
                                ", " + std::to_string(off.y) + ")");
    return pass();
}

}  // namespace

PerfectionReport check_perfect(const ProperCycle& d) {
    PerfectionReport rep;
    rep.translation = check_translation(d);
    rep.symmetry = check_symmetry(d);
    rep.separation = check_separation(d);
    rep.simplicity = check_simplicity(d);
    rep.coherence = check_coherence(d);
    rep.protocoherence = check_protocoherence(d);
    return rep;
}

ProperCycle initial_cycle(Leaper m, char origin) {
    const int r = m.p, s = m.q;
    if (r < 0 || s < r || s < 1)
        throw bad_input("initial_cycle: leaper must satisfy 0 <= p <= q, q >= 1");
    std::array<Square, 8> ring{};
    Leaper frame{};
    switch (origin) {
        case 'f':
            if (r == 0) throw invalid_origin("initial_cycle: origin 'f' needs p > 0");
            ring = {{{2 * (r + s), 0},
                     {2 * r, 2 * r},
                     {0, 2 * (r + s)},
                     {-2 * r, 2 * r},
                     {-2 * (r + s), 0},
                     {-2 * r, -2 * r},
                     {0, -2 * (r + s)},
                     {2 * r, -2 * r}}};
            frame = {r, 2 * r + s};
            break;
        case 'g':
            if (r == s) throw invalid_origin("initial_cycle: origin 'g' needs p < q");
            ring = {{{2 * (s - r), 0},
                     {2 * s, 2 * s},
                     {0, 2 * (s - r)},
                     {-2 * s, 2 * s},
                     {2 * (r - s), 0},
                     {-2 * s, -2 * s},
                     {0, 2 * (r - s)},
                     {2 * s, -2 * s}}};
            frame = {s, 2 * s - r};
            break;
        case 'h':
            ring = {{{2 * (r + s), 0},
                     {2 * s, 2 * s},
                     {0, 2 * (r + s)},
                     {-2 * s, 2 * s},
                     {-2 * (r + s), 0},
                     {-2 * s, -2 * s},
                     {0, -2 * (r + s)},
                     {2 * s, -2 * s}}};
            frame = {s, r + 2 * s};
            break;
        default:
            throw invalid_origin(std::string("initial_cycle: unknown origin '") + origin + "'");
    }
    ProperCycle d;
    d.frame = frame;
    d.tour = m;
    for (int i = 0; i < 8; ++i) d.paths[i] = {ring[i]};
    return d;
}

ProperCycle lift_perfect(char kind, const ProperCycle& d) {
    if (kind != 'f' && kind != 'g' && kind != 'h' && kind != 'H')
        throw bad_input(std::string("lift_perfect: unknown kind '") + kind + "'");
    const PerfectionReport rep = check_perfect(d);
    if (!rep.all()) throw not_perfect("lift_perfect: " + rep.first_failure());
    return lift_proper(kind, d);
}

ProperCycle perfect_cycle(Leaper m, char origin, const std::string& e) {
    for (const char c : e)
        if (c != 'f' && c != 'g' && c != 'h' && c != 'H')
            throw bad_input(std::string("perfect_cycle: unknown character '") + c + "'");
    ProperCycle d = initial_cycle(m, origin);
    for (auto it = e.rbegin(); it != e.rend(); ++it) d = lift_perfect(*it, d);
    const PerfectionReport rep = check_perfect(d);
    if (!rep.all()) throw not_perfect("perfect_cycle: " + rep.first_failure());
    return d;
}

DualBoard build_dual_board(Leaper m, char origin, const std::string& e) {
    const ProperCycle d = perfect_cycle(m, origin, e);
    Board board(d.sequence());
    const CycleDecomposition dec = decompose_cycles(build_leaper_graph(board, d.frame));
    if (!dec.isolated.empty() || dec.cycles.size() != 1 ||
        dec.cycles.front().size() != board.size())
        throw not_dual("build_dual_board: the partner graph is not a single cycle");
    return {std::move(board), d.frame};
}

}  // namespace leap
