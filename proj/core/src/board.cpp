#include "leap/board.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "leap/errors.hpp"

namespace leap {

bool is_basic(Leaper l) {
    const Leaper n = normalized(l);
    if (n.p < 0) return false;
    return std::gcd(n.p, n.q) == 1 && (n.p + n.q) % 2 == 1;
}

bool is_skew(Leaper l) {
    const Leaper n = normalized(l);
    return n.p > 0 && n.p != n.q;
}

bool is_skew_basic(Leaper l) { return is_skew(l) && is_basic(l); }

Reduction reduce_to_basic(Leaper l) {
    Leaper n = normalized(l);
    if (n.p < 0 || n.q <= 0) throw bad_input("reduce_to_basic: leaper must have a nonzero pattern");
    const int d = std::gcd(n.p, n.q);
    int p = n.p / d, q = n.q / d;
    if ((p + q) % 2 == 1) return {Leaper{p, q}, d, false};
    // p and q are both odd here (gcd 1); the diagonal substitution halves the
    // odd sum and rotates the lattice by 45 degrees.
    Leaper b = normalized(Leaper{(q - p) / 2, (q + p) / 2});
    return {b, d, true};
}

Board::Board(std::vector<Square> squares) : squares_(std::move(squares)) {
    std::sort(squares_.begin(), squares_.end());
    squares_.erase(std::unique(squares_.begin(), squares_.end()), squares_.end());
    if (!squares_.empty()) {
        const auto [px, py] = std::pair{squares_.front().x & 1, squares_.front().y & 1};
        for (const Square& s : squares_)
            if ((s.x & 1) != px || (s.y & 1) != py)
                throw bad_input("Board: squares of mixed coordinate parity");
    }
}

Board Board::rectangle(int width, int height) {
    if (width < 1 || height < 1) throw bad_input("Board::rectangle: empty rectangle");
    std::vector<Square> sq;
    sq.reserve(static_cast<std::size_t>(width) * height);
    // Doubled centers of an origin-centered w x h rectangle: x2 runs over
    // -(w-1), -(w-1)+2, ..., w-1, and likewise for y2.
    for (int i = 0; i < width; ++i)
        for (int j = 0; j < height; ++j)
            sq.push_back({2 * i - (width - 1), 2 * j - (height - 1)});
    return Board(std::move(sq));
}

int Board::index_of(Square s) const {
    const auto it = std::lower_bound(squares_.begin(), squares_.end(), s);
    if (it == squares_.end() || *it != s) return -1;
    return static_cast<int>(it - squares_.begin());
}

std::pair<int, int> Board::parity() const {
    if (squares_.empty()) return {0, 0};
    return {static_cast<int>(squares_.front().x & 1), static_cast<int>(squares_.front().y & 1)};
}

std::vector<Vec2> move_targets(Leaper l) {
    std::set<Vec2> out;
    const coord p = 2 * l.p, q = 2 * l.q;  // doubled units
    for (const coord sx : {-1, 1})
        for (const coord sy : {-1, 1}) {
            out.insert({sx * p, sy * q});
            out.insert({sx * q, sy * p});
        }
    out.erase({0, 0});
    return {out.begin(), out.end()};
}

LeaperGraph build_leaper_graph(const Board& board, Leaper l) {
    LeaperGraph g{board, l, {}};
    g.adj.resize(board.size());
    const auto moves = move_targets(l);
    for (std::size_t i = 0; i < board.size(); ++i) {
        for (const Vec2& m : moves) {
            const int j = board.index_of(board.squares()[i] + m);
            if (j >= 0) g.adj[i].push_back(j);
        }
        std::sort(g.adj[i].begin(), g.adj[i].end());
    }
    return g;
}

bool is_connected(const LeaperGraph& g) {
    const std::size_t n = g.board.size();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const int w : g.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

bool is_free(Leaper l, int width, int height) {
    if (width < 1 || height < 1 || width * height <= 1)
        throw bad_input("is_free: board must have more than one square");
    return is_connected(build_leaper_graph(Board::rectangle(width, height), l));
}

bool knuth_free_predicate(Leaper l, int width, int height) {
    if (width < 1 || height < 1 || width * height <= 1)
        throw bad_input("knuth_free_predicate: board must have more than one square");
    if (!is_basic(l)) return false;
    const Leaper n = normalized(l);
    const int lo = std::min(width, height), hi = std::max(width, height);
    return lo >= n.p + n.q && hi >= 2 * n.q;
}

std::vector<Square> canonical_cycle(const std::vector<Square>& cycle) {
    const std::size_t n = cycle.size();
    if (n < 3) throw bad_input("canonical_cycle: fewer than three squares");
    std::size_t start = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (cycle[i] < cycle[start]) start = i;
    const Square prev = cycle[(start + n - 1) % n];
    const Square next = cycle[(start + 1) % n];
    std::vector<Square> out;
    out.reserve(n);
    // Proceed toward the lexicographically lesser of the two neighbors.
    const bool forward = next < prev;
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(cycle[forward ? (start + k) % n : (start + n - k) % n]);
    return out;
}

CycleDecomposition decompose_cycles(const LeaperGraph& g) {
    CycleDecomposition out;
    const std::size_t n = g.board.size();
    std::vector<char> used(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t deg = g.adj[i].size();
        if (deg != 0 && deg != 2)
            throw degree_violation("decompose_cycles: square of degree " + std::to_string(deg));
        if (deg == 0) out.isolated.push_back(g.board.squares()[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i] || g.adj[i].empty()) continue;
        std::vector<Square> cyc;
        int prev = -1, cur = static_cast<int>(i);
        do {
            used[cur] = 1;
            cyc.push_back(g.board.squares()[cur]);
            const int a = g.adj[cur][0], b = g.adj[cur][1];
            const int nxt = (a == prev) ? b : a;
            prev = cur;
            cur = nxt;
        } while (cur != static_cast<int>(i));
        out.cycles.push_back(canonical_cycle(cyc));
    }
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

Board center_board(Leaper l) {
    if (!is_skew_basic(l)) throw bad_input("center_board: leaper must be skew basic");
    const Leaper n = normalized(l);
    return Board::rectangle(n.p + n.q, n.p + n.q);
}

CycleDecomposition decompose_center_board(Leaper l) {
    const Leaper n = normalized(l);
    return decompose_cycles(build_leaper_graph(center_board(n), n));
}

std::vector<Square> translation_key(const std::vector<Square>& squares) {
    std::vector<Square> out = squares;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) return out;
    Vec2 lo = out.front();
    for (const Square& s : out) {
        lo.x = std::min(lo.x, s.x);
        lo.y = std::min(lo.y, s.y);
    }
    for (Square& s : out) s -= lo;
    return out;
}

}  // namespace leap
