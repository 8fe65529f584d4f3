#include "leap/pinwheel.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leap/errors.hpp"
#include "leap/geometry.hpp"

namespace leap {
namespace {

std::size_t edge_count(const LeaperGraph& g) {
    std::size_t total = 0;
    for (const auto& row : g.adj) total += row.size();
    return total / 2;
}

Square reflect_in(Square center, Square a) {
    return {2 * center.x - a.x, 2 * center.y - a.y};
}

// Canonical code of the tree hanging off a cycle vertex.
std::string tree_code(const std::vector<std::vector<int>>& adj, const std::vector<char>& on_cycle,
                      int v, int parent) {
    std::vector<std::string> kids;
    for (int nb : adj[std::size_t(v)])
        if (nb != parent && !on_cycle[std::size_t(nb)]) kids.push_back(tree_code(adj, on_cycle, nb, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const std::string& k : kids) out += k;
    out += ")";
    return out;
}

// Canonical form of a connected graph with exactly one cycle: the minimal
// rotation, in either direction, of the cycle's tree codes.
std::string unicyclic_canonical(const LeaperGraph& g) {
    const int count = int(g.adj.size());
    std::vector<int> degree(std::size_t(count), 0);
    std::vector<int> peel;
    for (int v = 0; v < count; ++v) {
        degree[std::size_t(v)] = int(g.adj[std::size_t(v)].size());
        if (degree[std::size_t(v)] == 1) peel.push_back(v);
    }
    std::vector<char> removed(std::size_t(count), 0);
    for (std::size_t h = 0; h < peel.size(); ++h) {
        removed[std::size_t(peel[h])] = 1;
        for (int nb : g.adj[std::size_t(peel[h])])
            if (!removed[std::size_t(nb)] && --degree[std::size_t(nb)] == 1) peel.push_back(nb);
    }
    std::vector<char> on_cycle(std::size_t(count), 0);
    int start = -1;
    for (int v = 0; v < count; ++v)
        if (!removed[std::size_t(v)]) {
            on_cycle[std::size_t(v)] = 1;
            if (start < 0) start = v;
        }
    std::vector<std::string> codes;
    int prev = -1;
    int cur = start;
    do {
        codes.push_back(tree_code(g.adj, on_cycle, cur, -1));
        int next = -1;
        for (int nb : g.adj[std::size_t(cur)])
            if (on_cycle[std::size_t(nb)] && nb != prev) {
                next = nb;
                break;
            }
        prev = cur;
        cur = next;
    } while (cur != start);
    std::string best;
    const int len = int(codes.size());
    for (int dir = 0; dir < 2; ++dir) {
        for (int r = 0; r < len; ++r) {
            std::string s;
            for (int i = 0; i < len; ++i) s += codes[std::size_t((r + (dir ? len - i : i)) % len)];
            if (best.empty() || s < best) best = s;
        }
        std::reverse(codes.begin(), codes.end());
    }
    return best;
}

// Exhaustive isomorphism search between two adjacency lists, most-connected
// vertices first so contradictions surface early.
bool mapping_extends(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                     std::vector<int>& map, std::vector<char>& used, const std::vector<int>& order,
                     std::size_t pos) {
    if (pos == order.size()) return true;
    const int v = order[pos];
    for (int cand = 0; cand < int(b.size()); ++cand) {
        if (used[std::size_t(cand)] || a[std::size_t(v)].size() != b[std::size_t(cand)].size()) continue;
        bool ok = true;
        for (int u = 0; u < int(a.size()) && ok; ++u) {
            if (map[std::size_t(u)] < 0 || u == v) continue;
            const bool ea = std::binary_search(a[std::size_t(v)].begin(), a[std::size_t(v)].end(), u);
            const bool eb = std::binary_search(b[std::size_t(cand)].begin(), b[std::size_t(cand)].end(),
                                               map[std::size_t(u)]);
            if (ea != eb) ok = false;
        }
        if (!ok) continue;
        map[std::size_t(v)] = cand;
        used[std::size_t(cand)] = 1;
        if (mapping_extends(a, b, map, used, order, pos + 1)) return true;
        map[std::size_t(v)] = -1;
        used[std::size_t(cand)] = 0;
    }
    return false;
}

bool graphs_isomorphic(const LeaperGraph& gl, const LeaperGraph& gm) {
    const int count = int(gl.adj.size());
    std::vector<int> by_degree;
    for (int v = 0; v < count; ++v) by_degree.push_back(v);
    std::sort(by_degree.begin(), by_degree.end(), [&gl](int x, int y) {
        return gl.adj[std::size_t(x)].size() > gl.adj[std::size_t(y)].size();
    });
    std::vector<int> order;
    std::vector<char> seen(std::size_t(count), 0);
    for (int s : by_degree)
        if (!seen[std::size_t(s)]) {
            seen[std::size_t(s)] = 1;
            order.push_back(s);
            for (std::size_t h = order.size() - 1; h < order.size(); ++h)
                for (int nb : gl.adj[std::size_t(order[h])])
                    if (!seen[std::size_t(nb)]) {
                        seen[std::size_t(nb)] = 1;
                        order.push_back(nb);
                    }
        }
    std::vector<int> map(std::size_t(count), -1);
    std::vector<char> used(std::size_t(count), 0);
    return mapping_extends(gl.adj, gm.adj, map, used, order, 0);
}

}  // namespace

std::vector<Square> PinwheelBoard::all_squares() const {
    std::vector<Square> all;
    for (const auto& wing : wings) all.insert(all.end(), wing.begin(), wing.end());
    all.insert(all.end(), adjoined.begin(), adjoined.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

PinwheelBoard build_pinwheel(const PinwheelSpec& spec) {
    const int n = spec.n;
    const int d = spec.d;
    const coord p = spec.leaper.p;
    const coord q = spec.leaper.q;
    if (n < 1) throw bad_input("build_pinwheel: the order must be at least 1");
    if (d < 0) throw bad_input("build_pinwheel: the margin must be nonnegative");
    if (p < 0 || q < 1) throw bad_input("build_pinwheel: the leaper needs p >= 0 and q >= 1");
    if (d > 0 && p == 0) throw bad_input("build_pinwheel: a positive margin needs p != 0");
    if (spec.augmented && d != 0) throw bad_input("build_pinwheel: augmented boards carry no margin");

    // The first wing is a tilted rectangle intersected with a residue net of
    // period 4q in both coordinates; the other wings are its quarter turns.
    const coord step = 4 * q;
    const Square base{p + q, p - q};
    const coord sum_lo = 2 * p - step * d;
    const coord sum_hi = 2 * p + step * (coord(n) + d);
    const coord diff_bound = 2 * (2 * coord(n) + 2 * d - 1) * q;

    const auto first_on_grid = [step](coord lo, coord residue) {
        return lo + (((residue - lo) % step + step) % step);
    };

    PinwheelBoard out;
    out.spec = spec;
    std::vector<Square>& first = out.wings[0];
    const coord x_hi = (sum_hi + diff_bound) / 2;
    for (coord x = first_on_grid((sum_lo - diff_bound) / 2, base.x); x <= x_hi; x += step) {
        const coord y_lo = std::max(sum_lo - x, x - diff_bound);
        const coord y_hi = std::min(sum_hi - x, x + diff_bound);
        for (coord y = first_on_grid(y_lo, base.y); y <= y_hi; y += step) first.push_back({x, y});
    }
    std::sort(first.begin(), first.end());
    for (int i = 1; i < 4; ++i) {
        out.wings[i].reserve(first.size());
        for (Square s : first) out.wings[i].push_back(rot90k(s, i));
        std::sort(out.wings[i].begin(), out.wings[i].end());
    }
    const Square center{p + coord(n) * q, p + coord(n) * q};
    for (int i = 0; i < 4; ++i) out.wing_centers[i] = rot90k(center, i);
    if (spec.augmented) {
        const Square beyond{p + q + step * coord(n), p - q};
        out.adjoined.reserve(4);
        for (int i = 0; i < 4; ++i) out.adjoined.push_back(rot90k(beyond, i));
    }
    return out;
}

Leaper pinwheel_partner(int n, Leaper l) {
    return {l.q, l.p + 2 * n * l.q};
}

int wing_of(const PinwheelBoard& w, Square a) {
    const coord step = 4 * w.spec.leaper.q;
    const Square base{w.spec.leaper.p + w.spec.leaper.q, w.spec.leaper.p - w.spec.leaper.q};
    for (int i = 0; i < 4; ++i) {
        const Square b = rot90k(base, i);
        if ((a.x - b.x) % step == 0 && (a.y - b.y) % step == 0) return i;
    }
    throw bad_input("wing_of: the square lies on none of the four nets");
}

Square phi_map(const PinwheelBoard& w, Square a) {
    bool on_board = std::find(w.adjoined.begin(), w.adjoined.end(), a) != w.adjoined.end();
    for (const auto& wing : w.wings)
        on_board = on_board || std::binary_search(wing.begin(), wing.end(), a);
    if (!on_board) throw bad_input("phi_map: the square is not on the board");
    return reflect_in(w.wing_centers[wing_of(w, a)], a);
}

bool verify_pinwheel_dual(const PinwheelSpec& spec) {
    const PinwheelBoard w = build_pinwheel(spec);
    const Board board(w.all_squares());
    const Leaper m = pinwheel_partner(spec.n, spec.leaper);
    const LeaperGraph gl = build_leaper_graph(board, spec.leaper);
    if (!is_connected(gl)) return false;
    const LeaperGraph gm = build_leaper_graph(board, m);
    if (edge_count(gl) != edge_count(gm)) return false;

    const int count = int(board.size());
    std::vector<Square> mirror(count);
    std::vector<bool> beyond(count, false);
    for (int v = 0; v < count; ++v) {
        const Square a = board.squares()[std::size_t(v)];
        if (std::find(w.adjoined.begin(), w.adjoined.end(), a) != w.adjoined.end())
            beyond[std::size_t(v)] = true;
        else
            mirror[std::size_t(v)] = reflect_in(w.wing_centers[wing_of(w, a)], a);
    }

    // A witness reflects every wing square in its wing center, sends each
    // adjoined square to a quarter-turn image, and may compose the whole
    // board with one of its reflection symmetries.
    using ReflFn = Vec2 (*)(Vec2);
    const std::array<ReflFn, 5> reflections = {
        +[](Vec2 v) -> Vec2 { return v; },
        +[](Vec2 v) -> Vec2 { return reflect_x_axis(v); },
        +[](Vec2 v) -> Vec2 { return reflect_y_axis(v); },
        +[](Vec2 v) -> Vec2 { return reflect_diag(v); },
        +[](Vec2 v) -> Vec2 { return reflect_antidiag(v); },
    };
    const int turns = w.adjoined.empty() ? 1 : 4;
    for (const ReflFn refl : reflections) {
        for (int j = 0; j < turns; ++j) {
            std::vector<int> target(count, -1);
            std::vector<bool> taken(count, false);
            bool ok = true;
            for (int v = 0; ok && v < count; ++v) {
                const Square a = board.squares()[std::size_t(v)];
                const Square img = refl(beyond[std::size_t(v)] ? rot90k(a, j) : mirror[std::size_t(v)]);
                const int u = int(board.index_of(img));
                if (u < 0 || taken[std::size_t(u)])
                    ok = false;
                else {
                    taken[std::size_t(u)] = true;
                    target[std::size_t(v)] = u;
                }
            }
            for (int v = 0; ok && v < count; ++v)
                for (int nb : gl.adj[std::size_t(v)]) {
                    if (nb < v) continue;
                    const auto& row = gm.adj[std::size_t(target[std::size_t(v)])];
                    if (!std::binary_search(row.begin(), row.end(), target[std::size_t(nb)])) {
                        ok = false;
                        break;
                    }
                }
            if (ok) return true;
        }
    }

    // The family realizes the constructed witnesses; beyond them, decide
    // exactly whether any square bijection carries one graph onto the other.
    if (edge_count(gl) == board.size() && edge_count(gm) == board.size())
        return unicyclic_canonical(gl) == unicyclic_canonical(gm);
    return graphs_isomorphic(gl, gm);
}

SigmaTriplet sigma_of(const PinwheelBoard& w, Square a) {
    const coord q = w.spec.leaper.q;
    const int i = wing_of(w, a);
    const Square base = rot90k({w.spec.leaper.p + q, w.spec.leaper.p - q}, i);
    return {i, (a.x - base.x) / (4 * q), (a.y - base.y) / (4 * q)};
}

Mat2 wing_matrix_doubled(int wing) {
    if (wing < 0 || wing > 3) throw bad_input("wing_matrix_doubled: the wing index must be 0..3");
    Mat2 m{1, 1, 1, -1};
    const Mat2 quarter{0, -1, 1, 0};
    for (int i = 0; i < wing; ++i) m = quarter * m;
    return m;
}

namespace {

PinwheelDirectionGraph extract_pinwheel_graph(int n, int d, Leaper l) {
    const PinwheelBoard w = build_pinwheel({n, d, false, l});
    std::vector<std::pair<SigmaTriplet, Square>> keyed;
    for (Square s : w.all_squares()) keyed.emplace_back(sigma_of(w, s), s);
    std::sort(keyed.begin(), keyed.end());

    const int count = int(keyed.size());
    std::vector<std::pair<Square, int>> ranks;
    ranks.reserve(keyed.size());
    for (int v = 0; v < count; ++v) ranks.emplace_back(keyed[std::size_t(v)].second, v);
    std::sort(ranks.begin(), ranks.end());
    const auto rank_of = [&ranks](Square s) {
        const auto it = std::lower_bound(ranks.begin(), ranks.end(), std::pair<Square, int>{s, -1});
        if (it == ranks.end() || !(it->first == s)) return -1;
        return it->second;
    };

    std::vector<DirArc> arcs;
    for (int v = 0; v < count; ++v)
        for (Vec2 mv : move_targets(l)) {
            const int u = rank_of(keyed[std::size_t(v)].second + mv);
            if (u > v) arcs.push_back({v, u, direction_of_move(l, mv)});
        }
    std::sort(arcs.begin(), arcs.end(), [](const DirArc& a, const DirArc& b) {
        return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
    });

    std::vector<SigmaTriplet> sigma;
    sigma.reserve(keyed.size());
    for (const auto& kv : keyed) sigma.push_back(kv.first);
    return {DirectionGraph(count, std::move(arcs)), std::move(sigma)};
}

}  // namespace

PinwheelDirectionGraph pinwheel_direction_graph(int n, int d) {
    PinwheelDirectionGraph first = extract_pinwheel_graph(n, d, {1, 2});
    const PinwheelDirectionGraph second = extract_pinwheel_graph(n, d, {2, 3});
    if (first.sigma != second.sigma || !(first.graph.arcs() == second.graph.arcs()))
        throw unmatched_class("pinwheel_direction_graph: extractions from two leapers disagree");
    return first;
}

PinwheelDuality pinwheel_duality(const PinwheelDirectionGraph& w, int n) {
    if (n < 1) throw bad_input("pinwheel_duality: the order must be at least 1");
    const Mat2 matrix{0, 1, 1, 2 * coord(n)};
    const EquivPermutation complement_perm =
        n % 2 != 0 ? perm_pinwheel() : compose(perm_reflect(), perm_pinwheel());
    const DirectionGraph complement = apply_perm(complement_perm, w.graph);

    // Rebuild a concrete instance of the board from the triplets alone, then
    // read the candidate correspondences off its wing-center reflection,
    // optionally composed with a whole-board reflection (the odd orders need
    // none, the even ones need one).
    const Leaper l{1, 2};
    const coord p = l.p;
    const coord q = l.q;
    const std::size_t count = w.sigma.size();
    std::vector<std::pair<Square, int>> ranks;
    ranks.reserve(count);
    for (std::size_t v = 0; v < count; ++v) {
        const SigmaTriplet t = w.sigma[v];
        const Mat2 offset{0, 4 * t.k, 0, 4 * t.l};
        ranks.emplace_back((wing_matrix_doubled(t.wing) + offset).apply({p, q}), int(v));
    }
    std::vector<Square> mirrored(count);
    for (std::size_t v = 0; v < count; ++v) {
        const Square center = rot90k({p + coord(n) * q, p + coord(n) * q}, w.sigma[v].wing);
        mirrored[v] = reflect_in(center, ranks[v].first);
    }
    std::sort(ranks.begin(), ranks.end());
    const auto rank_of = [&ranks](Square s) {
        const auto it = std::lower_bound(ranks.begin(), ranks.end(), std::pair<Square, int>{s, -1});
        if (it == ranks.end() || !(it->first == s)) return -1;
        return it->second;
    };

    using ReflFn = Vec2 (*)(Vec2);
    const std::array<ReflFn, 5> reflections = {
        +[](Vec2 v) -> Vec2 { return v; },
        +[](Vec2 v) -> Vec2 { return reflect_x_axis(v); },
        +[](Vec2 v) -> Vec2 { return reflect_y_axis(v); },
        +[](Vec2 v) -> Vec2 { return reflect_diag(v); },
        +[](Vec2 v) -> Vec2 { return reflect_antidiag(v); },
    };
    std::optional<std::vector<int>> eta;
    for (const ReflFn refl : reflections) {
        if (eta) break;
        std::vector<int> candidate(count);
        bool ok = true;
        for (std::size_t v = 0; ok && v < count; ++v) {
            const int r = rank_of(refl(mirrored[v]));
            if (r < 0)
                ok = false;
            else
                candidate[v] = r;
        }
        if (ok && verify_dual_pair(w.graph, complement, candidate, matrix)) eta = std::move(candidate);
    }
    if (!eta) eta = find_duality_eta(w.graph, complement, matrix);
    if (!eta) throw not_dual("pinwheel_duality: no vertex correspondence realizes the matrix");
    return {complement_perm, *eta, matrix};
}

}  // namespace leap
