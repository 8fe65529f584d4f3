#include "leap/frame.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "leap/errors.hpp"

namespace leap {

namespace {

void require_frame(Frame f, const char* where) {
    if (f.m < 0 || f.m >= f.n) throw bad_input(std::string(where) + ": need 0 <= m < n");
}

// Doubled lattice parity of an (m+n) x (m+n) origin-centered board.
int lattice_parity(Frame f) { return (f.m + f.n - 1) & 1; }

bool is_move_of(Leaper l, Vec2 d) {
    const coord p = 2 * std::abs(static_cast<coord>(l.p));
    const coord q = 2 * std::abs(static_cast<coord>(l.q));
    const coord ax = std::abs(d.x), ay = std::abs(d.y);
    if (ax == 0 && ay == 0) return false;
    return (ax == p && ay == q) || (ax == q && ay == p);
}

void require_cycle_of(Leaper l, const std::vector<Square>& cycle, const char* where) {
    const std::size_t n = cycle.size();
    if (n < 3) throw bad_input(std::string(where) + ": cycle has fewer than three squares");
    for (std::size_t i = 0; i < n; ++i)
        if (!is_move_of(l, cycle[(i + 1) % n] - cycle[i]))
            throw bad_input(std::string(where) + ": consecutive squares are not a leaper move");
}

// A t x t block of squares on the doubled lattice, lower-left doubled corner
// (x0, y0), step 2.
void emit_block(std::vector<Square>& out, coord x0, coord y0, int t) {
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) out.push_back({x0 + 2 * i, y0 + 2 * j});
}

std::vector<Square> reversed(std::vector<Square> w) {
    std::reverse(w.begin(), w.end());
    return w;
}

std::vector<Square> translated(std::vector<Square> w, Vec2 by) {
    for (Square& s : w) s += by;
    return w;
}

void append(std::vector<Square>& out, const std::vector<Square>& w) {
    out.insert(out.end(), w.begin(), w.end());
}

// Per-square replacement template of a lift, in the east (side) and northeast
// (corner) sections.  `dirs` lists translation indices in path order; for
// paths longer than one square, `first_nbr` and `last_nbr` give the source
// leaper translations toward the cycle neighbors that the first and last path
// squares must face.
struct ReplacementRule {
    std::vector<int> dirs;
    Vec2 first_nbr{};
    Vec2 last_nbr{};
};

ReplacementRule base_rule(char kind, bool corner, Frame f) {
    const coord m = f.m, n = f.n;
    switch (kind) {
        case 'f':
            if (!corner) return {{4}, {}, {}};
            return {{4, 1, 6}, {-2 * n, -2 * m}, {-2 * m, -2 * n}};
        case 'g':
            if (!corner) return {{3, 0, 5}, {-2 * n, 2 * m}, {-2 * n, -2 * m}};
            return {{5}, {}, {}};
        case 'h':
            if (!corner) return {{2, 7, 4, 1, 6}, {-2 * n, 2 * m}, {-2 * n, -2 * m}};
            return {{6, 1, 4}, {-2 * n, -2 * m}, {-2 * m, -2 * n}};
        default:
            throw bad_input("lift: unknown kind");
    }
}

ReplacementRule rule_for_section(char kind, Frame f, int section) {
    const bool corner = section & 1;
    ReplacementRule r = base_rule(kind, corner, f);
    const int k = (corner ? section - 1 : section) / 2;
    for (int& d : r.dirs) d = (d + 2 * k) % 8;
    r.first_nbr = rot90k(r.first_nbr, k);
    r.last_nbr = rot90k(r.last_nbr, k);
    return r;
}

}  // namespace

Board frame_board(Frame f) {
    require_frame(f, "frame_board");
    std::vector<Square> sq;
    const coord hi = f.m + f.n - 1;   // outermost doubled center coordinate
    const coord hole = f.n - f.m;     // doubled half-width of the hole
    for (coord x = -hi; x <= hi; x += 2)
        for (coord y = -hi; y <= hi; y += 2)
            if (std::max(std::abs(x), std::abs(y)) > hole) sq.push_back({x, y});
    return Board(std::move(sq));
}

int section_of(Frame f, Square s) {
    require_frame(f, "section_of");
    const coord hi = f.m + f.n - 1;
    const coord hole = f.n - f.m;
    if (std::max(std::abs(s.x), std::abs(s.y)) > hi) return -1;
    if ((s.x & 1) != lattice_parity(f) || (s.y & 1) != lattice_parity(f)) return -1;
    const int ax = s.x > hole ? 1 : (s.x < -hole ? -1 : 0);
    const int ay = s.y > hole ? 1 : (s.y < -hole ? -1 : 0);
    static constexpr int table[3][3] = {
        // ay = -1, 0, 1 for each ax = -1, 0, 1
        {5, 4, 3},
        {6, -1, 2},
        {7, 0, 1},
    };
    return table[ax + 1][ay + 1];
}

Board frame_shell(Frame f) {
    require_frame(f, "frame_shell");
    std::vector<Square> sq;
    if (3 * f.m <= f.n) return Board(std::move(sq));
    const coord m = f.m, n = f.n;
    std::vector<Square> east, northeast;
    if (2 * m >= n) {
        const int t = static_cast<int>(n - m);
        // Side block hugging the hole; corner block in the outer corner.
        emit_block(east, n - m + 1, -(n - m - 1), t);
        emit_block(northeast, 3 * m - n + 1, 3 * m - n + 1, t);
    } else {
        const int t = static_cast<int>(3 * m - n);
        // Side block on the outer edge; corner block hugging the hole corner.
        emit_block(east, m + n - 2 * t + 1, -(t - 1), t);
        emit_block(northeast, n - m + 1, n - m + 1, t);
    }
    for (int k = 0; k < 4; ++k) {
        for (const Square& s : east) sq.push_back(rot90k(s, k));
        for (const Square& s : northeast) sq.push_back(rot90k(s, k));
    }
    return Board(std::move(sq));
}

Board frame_core(Frame f) {
    const Board whole = frame_board(f);
    const Board shell = frame_shell(f);
    std::vector<Square> sq;
    for (const Square& s : whole.squares())
        if (!shell.contains(s)) sq.push_back(s);
    return Board(std::move(sq));
}

Frame lift_frame(char kind, Frame f) {
    require_frame(f, "lift_frame");
    switch (kind) {
        case 'f': return {f.m, 2 * f.m + f.n};
        case 'g': return {f.n, 2 * f.n - f.m};
        case 'h': return {f.n, f.m + 2 * f.n};
        default: throw bad_input("lift_frame: unknown kind");
    }
}

Vec2 lift_translation(char kind, Frame f, int dir) {
    require_frame(f, "lift_translation");
    if (dir < 0 || dir > 7) throw bad_input("lift_translation: direction out of range");
    const coord m = f.m, n = f.n;
    Vec2 east, northeast;
    switch (kind) {
        case 'f': east = {2 * (m + n), 0}; northeast = {2 * m, 2 * m}; break;
        case 'g': east = {2 * (n - m), 0}; northeast = {2 * n, 2 * n}; break;
        case 'h': east = {2 * (m + n), 0}; northeast = {2 * n, 2 * n}; break;
        default: throw bad_input("lift_translation: unknown kind");
    }
    if (dir % 2 == 0) return rot90k(east, dir / 2);
    return rot90k(northeast, (dir - 1) / 2);
}

Board lift_set(char kind, Frame f, const std::vector<Square>& s) {
    const Frame target = lift_frame(kind, f);
    for (const Square& a : s)
        if (section_of(f, a) < 0) throw bad_input("lift_set: square off the source frame");
    std::vector<Square> out;
    for (int dir = 0; dir < 8; ++dir) {
        const Vec2 v = lift_translation(kind, f, dir);
        for (const Square& a : s)
            if (section_of(target, a + v) == dir) out.push_back(a + v);
    }
    return Board(std::move(out));
}

std::vector<Square> lift_cycle(char kind, Frame f, const std::vector<Square>& cycle) {
    require_cycle_of(Leaper{f.m, f.n}, cycle, "lift_cycle");
    std::array<Vec2, 8> v;
    for (int dir = 0; dir < 8; ++dir) v[dir] = lift_translation(kind, f, dir);
    const std::size_t n = cycle.size();
    std::vector<Square> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Square a = cycle[i];
        const int section = section_of(f, a);
        if (section < 0) throw bad_input("lift_cycle: square off the source frame");
        const ReplacementRule rule = rule_for_section(kind, f, section);
        const Square prev = cycle[(i + n - 1) % n];
        bool forward = true;
        if (rule.dirs.size() > 1) {
            if (prev == a + rule.first_nbr)
                forward = true;
            else if (prev == a + rule.last_nbr)
                forward = false;
            else
                throw bad_input("lift_cycle: cycle neighbor does not match the replacement template");
        }
        if (forward)
            for (const int d : rule.dirs) out.push_back(a + v[d]);
        else
            for (auto it = rule.dirs.rbegin(); it != rule.dirs.rend(); ++it)
                out.push_back(a + v[*it]);
    }
    return out;
}

std::vector<Square> ProperCycle::sequence() const {
    std::vector<Square> out;
    out.reserve(length());
    for (const auto& path : paths) append(out, path);
    return out;
}

std::size_t ProperCycle::length() const {
    std::size_t n = 0;
    for (const auto& path : paths) n += path.size();
    return n;
}

void check_proper(const ProperCycle& d) {
    const coord p = d.frame.p, q = d.frame.q;
    if (p < 0 || q < 0 || (p == 0 && q == 0))
        throw bad_input("check_proper: bad frame parameters");
    for (const auto& path : d.paths)
        if (path.empty()) throw bad_input("check_proper: empty direction path");
    const std::vector<Square> seq = d.sequence();
    {
        std::set<Square> distinct(seq.begin(), seq.end());
        if (distinct.size() != seq.size())
            throw bad_input("check_proper: repeated square");
    }
    require_cycle_of(d.tour, seq, "check_proper");
    // The four translation identities: each half-cycle of two consecutive
    // paths, shifted by a frame-leaper move, retraces the opposite two paths
    // backwards.
    const Vec2 shifts[4] = {{-2 * q, -2 * p}, {-2 * p, -2 * q}, {2 * p, -2 * q}, {2 * q, -2 * p}};
    for (int i = 0; i < 4; ++i) {
        std::vector<Square> lhs;
        append(lhs, d.paths[i]);
        append(lhs, d.paths[i + 1]);
        lhs = translated(std::move(lhs), shifts[i]);
        std::vector<Square> rhs = reversed(d.paths[(i + 5) % 8]);
        append(rhs, reversed(d.paths[(i + 4) % 8]));
        if (lhs != rhs)
            throw bad_input("check_proper: translation identity " + std::to_string(i + 1) +
                            " fails");
    }
}

bool is_proper(const ProperCycle& d) {
    try {
        check_proper(d);
        return true;
    } catch (const error&) {
        return false;
    }
}

namespace {

// A lifted direction path is stitched from old paths, some retraced
// backwards, then shifted.  `segments` lists path indices relative to the
// east/northeast pair; the quarter-turn analogues add 2k to every index and
// rotate the shift.
struct PathFormula {
    std::vector<int> segments;
    bool backwards = false;
    Vec2 shift;
};

std::vector<Square> stitch(const std::array<std::vector<Square>, 8>& a, const PathFormula& rule,
                           int k) {
    std::vector<Square> out;
    for (const int seg : rule.segments) {
        const auto& w = a[(seg + 2 * k) % 8];
        if (rule.backwards)
            out.insert(out.end(), w.rbegin(), w.rend());
        else
            out.insert(out.end(), w.begin(), w.end());
    }
    return translated(std::move(out), rot90k(rule.shift, k));
}

}  // namespace

ProperCycle lift_proper(char kind, const ProperCycle& d) {
    const coord p = d.frame.p, q = d.frame.q;
    if (p < 0 || q <= p) throw bad_input("lift_proper: bad frame parameters");
    // Path indices 0..7 = E, NE, N, NW, W, SW, S, SE; `east` rebuilds the
    // side paths, `northeast` the corner ones.
    PathFormula east, northeast;
    Leaper next_frame{};
    switch (kind) {
        case 'f':
            east = {{5, 4, 3}, true, {2 * (p + q), 0}};
            northeast = {{1}, false, {2 * p, 2 * p}};
            next_frame = {static_cast<int>(p), static_cast<int>(2 * p + q)};
            break;
        case 'g':
            east = {{0}, false, {2 * (q - p), 0}};
            northeast = {{6, 5, 4}, true, {2 * q, 2 * q}};
            next_frame = {static_cast<int>(q), static_cast<int>(2 * q - p)};
            break;
        case 'h':
            east = {{6, 5, 4, 3, 2}, true, {2 * (p + q), 0}};
            northeast = {{0, 1, 2}, false, {2 * q, 2 * q}};
            next_frame = {static_cast<int>(q), static_cast<int>(p + 2 * q)};
            break;
        case 'H':
            east = {{7, 0, 1}, false, {2 * (p + q), 0}};
            northeast = {{7, 6, 5, 4, 3}, true, {2 * q, 2 * q}};
            next_frame = {static_cast<int>(q), static_cast<int>(p + 2 * q)};
            break;
        default:
            throw bad_input("lift_proper: unknown kind");
    }
    ProperCycle out;
    out.frame = next_frame;
    out.tour = d.tour;
    for (int k = 0; k < 4; ++k) {
        out.paths[2 * k] = stitch(d.paths, east, k);
        out.paths[2 * k + 1] = stitch(d.paths, northeast, k);
    }
    return out;
}

namespace {

// The ring of eight squares around the center that carries the base cycle of
// the smallest skew basic leaper.
const std::array<Square, 8> kRing = {{{2, 0}, {2, 2}, {0, 2}, {-2, 2}, {-2, 0}, {-2, -2}, {0, -2}, {2, -2}}};

ProperCycle ring_walk() {
    ProperCycle d;
    d.frame = {1, 2};
    d.tour = {0, 1};
    for (int i = 0; i < 8; ++i) d.paths[i] = {kRing[i]};
    return d;
}

// Trace the single cycle of leaper l over exactly the given squares; throws
// when the squares do not carry one full cycle.
std::vector<Square> trace_single_cycle(Leaper l, const std::vector<Square>& squares,
                                       const char* where) {
    const Board board(squares);
    const LeaperGraph g = build_leaper_graph(board, l);
    const CycleDecomposition dec = decompose_cycles(g);
    if (!dec.isolated.empty() || dec.cycles.size() != 1)
        throw bad_input(std::string(where) + ": squares do not carry a single cycle");
    return dec.cycles.front();
}

}  // namespace

ProperCycle canonical_second_cycle(Leaper l, const std::vector<Square>& cycle) {
    const Leaper pq = normalized(l);
    if (!is_skew_basic(pq))
        throw bad_input("canonical_second_cycle: leaper must be skew basic");
    require_cycle_of(pq, cycle, "canonical_second_cycle");
    const int p = pq.p, q = pq.q;
    if (p == 1 && q == 2) {
        std::set<Square> got(cycle.begin(), cycle.end());
        if (got != std::set<Square>(kRing.begin(), kRing.end()))
            throw bad_input("canonical_second_cycle: base cycle must be the center ring");
        return ring_walk();
    }
    char kind;
    Frame source;
    if (3 * p < q) {
        kind = 'f';
        source = {p, q - 2 * p};
    } else if (2 * p > q) {
        kind = 'g';
        source = {2 * p - q, p};
    } else {
        kind = 'h';
        source = {q - 2 * p, p};
    }
    const Frame target{p, q};
    for (const Square& s : cycle)
        if (section_of(target, s) < 0)
            throw bad_input("canonical_second_cycle: square off the frame");
    if (kind != 'f') {
        const Board shell = frame_shell(target);
        const bool on_shell = std::all_of(cycle.begin(), cycle.end(),
                                          [&](const Square& s) { return shell.contains(s); });
        if (on_shell) {
            // A shell cycle visits each section once; its canonical tour is
            // the octagonal walk by the descended leaper.
            if (cycle.size() != 8)
                throw bad_input("canonical_second_cycle: malformed shell cycle");
            ProperCycle d;
            d.frame = pq;
            d.tour = {source.m, source.n};
            std::array<bool, 8> seen{};
            for (const Square& s : cycle) {
                const int sec = section_of(target, s);
                if (seen[sec])
                    throw bad_input("canonical_second_cycle: malformed shell cycle");
                seen[sec] = true;
                d.paths[sec] = {s};
            }
            return d;
        }
    }
    // Undo the lift square by square, recurse, and lift the answer back.
    std::vector<Square> preimage;
    preimage.reserve(cycle.size());
    for (const Square& s : cycle) {
        const int sec = section_of(target, s);
        preimage.push_back(s - lift_translation(kind, source, sec));
    }
    std::sort(preimage.begin(), preimage.end());
    preimage.erase(std::unique(preimage.begin(), preimage.end()), preimage.end());
    const std::vector<Square> inner =
        trace_single_cycle(Leaper{source.m, source.n}, preimage, "canonical_second_cycle");
    return lift_proper(kind, canonical_second_cycle(Leaper{source.m, source.n}, inner));
}

std::vector<Square> third_leaper_cycle(const ProperCycle& d) {
    const std::vector<Square> seq = d.sequence();
    const std::size_t n = seq.size();
    if (n == 0 || n % 3 == 0)
        throw bad_input("third_leaper_cycle: length must not be divisible by 3");
    std::vector<Square> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(seq[(2 + 3 * i) % n]);
    return out;
}

SectionCounts section_visit_counts(Frame f, const std::vector<Square>& cycle) {
    SectionCounts counts;
    for (const Square& s : cycle) {
        const int sec = section_of(f, s);
        if (sec < 0) throw bad_input("section_visit_counts: square off the frame");
        ++counts.per_section[sec];
    }
    counts.side = counts.per_section[0];
    counts.corner = counts.per_section[1];
    for (int i = 0; i < 8; ++i)
        if (counts.per_section[i] != (i % 2 == 0 ? counts.side : counts.corner))
            throw unmatched_class("section_visit_counts: visit counts are not uniform");
    return counts;
}

}  // namespace leap
