#include "leap/direction.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "leap/errors.hpp"

namespace leap {

namespace {

int reduce_label(long long i) {
    const long long r = ((i - 1) % 8 + 8) % 8;
    return static_cast<int>(r) + 1;
}

void require_label(int i, const char* where) {
    if (i < 1 || i > 8) throw bad_input(std::string(where) + ": direction label out of range");
}

// For |det| = 1 the inverse is again an integer matrix.
Mat2 unimodular_inverse(const Mat2& m) {
    const coord det = m.det();
    if (det != 1 && det != -1) throw bad_input("unimodular_inverse: determinant is not a unit");
    return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

bool is_direction_matrix(const Mat2& m) {
    for (int i = 1; i <= 8; ++i)
        if (m == direction_matrix(i)) return true;
    return false;
}

std::string square_text(Square s) {
    std::ostringstream out;
    out << "(" << s.x << ", " << s.y << ")";
    return out.str();
}

}  // namespace

Mat2 direction_matrix(int i) {
    require_label(i, "direction_matrix");
    static constexpr std::array<Mat2, 4> half = {{
        {0, 1, 1, 0},   // east-northeast: (p, q) -> (q, p)
        {1, 0, 0, 1},   // north-northeast
        {-1, 0, 0, 1},  // north-northwest
        {0, -1, 1, 0},  // west-northwest
    }};
    const Mat2 m = half[(i - 1) % 4];
    return i <= 4 ? m : -m;
}

int opposite_direction(int i) {
    require_label(i, "opposite_direction");
    return reduce_label(i + 4);
}

int shift_direction(int i, int k) {
    require_label(i, "shift_direction");
    return reduce_label(static_cast<long long>(i) + k);
}

int direction_of_move(Leaper l, Vec2 doubled) {
    const Leaper m = normalized(l);
    if (!is_skew(m))
        throw ambiguous_direction("direction_of_move: leaper is orthogonal or diagonal");
    const Vec2 pq{m.p, m.q};
    for (int i = 1; i <= 8; ++i)
        if (2 * direction_matrix(i).apply(pq) == doubled) return i;
    throw not_a_move("direction_of_move: displacement " + square_text(doubled) +
                     " is not a move of this leaper");
}

DirectionGraph::DirectionGraph(int vertices, std::vector<DirArc> arcs)
    : vertices_(vertices), arcs_(std::move(arcs)) {
    if (vertices_ < 0) throw bad_input("DirectionGraph: negative vertex count");
    adj_.assign(vertices_, {});
    std::map<std::pair<int, int>, std::pair<int, int>> seen;  // unordered pair -> (from, label)
    for (const DirArc& arc : arcs_) {
        require_label(arc.label, "DirectionGraph");
        if (arc.from < 0 || arc.from >= vertices_ || arc.to < 0 || arc.to >= vertices_)
            throw bad_input("DirectionGraph: arc endpoint out of range");
        if (arc.from == arc.to)
            throw nontrivial_cycle("DirectionGraph: loop at vertex " + std::to_string(arc.from) +
                                   " sums to a nonzero matrix");
        const std::pair<int, int> key{std::min(arc.from, arc.to), std::max(arc.from, arc.to)};
        const auto [it, fresh] = seen.insert({key, {arc.from, arc.label}});
        if (!fresh) {
            const auto [from0, label0] = it->second;
            const int same_way = arc.from == from0 ? arc.label : opposite_direction(arc.label);
            if (same_way == label0)
                throw bad_input("DirectionGraph: duplicate arc between vertices " +
                                std::to_string(key.first) + " and " + std::to_string(key.second));
            throw nontrivial_cycle("DirectionGraph: parallel arcs between vertices " +
                                   std::to_string(key.first) + " and " + std::to_string(key.second) +
                                   " sum to a nonzero matrix");
        }
        adj_[arc.from].push_back({arc.to, arc.label});
        adj_[arc.to].push_back({arc.from, opposite_direction(arc.label)});
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());

    component_.assign(vertices_, -1);
    potential_.assign(vertices_, Mat2::zero());
    for (int root = 0; root < vertices_; ++root) {
        if (component_[root] >= 0) continue;
        const int comp = component_count_++;
        component_[root] = comp;
        std::queue<int> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            for (const auto& [v, label] : adj_[u]) {
                const Mat2 reach = potential_[u] + direction_matrix(label);
                if (component_[v] < 0) {
                    component_[v] = comp;
                    potential_[v] = reach;
                    frontier.push(v);
                } else if (potential_[v] != reach) {
                    throw nontrivial_cycle(
                        "DirectionGraph: cycle through vertices " + std::to_string(u) + " and " +
                        std::to_string(v) + " sums to a nonzero matrix");
                }
            }
        }
    }
}

const std::vector<std::pair<int, int>>& DirectionGraph::neighbors(int v) const {
    if (v < 0 || v >= vertices_) throw bad_input("neighbors: vertex out of range");
    return adj_[v];
}

bool DirectionGraph::connected() const { return component_count_ <= 1; }

int DirectionGraph::component_of(int v) const {
    if (v < 0 || v >= vertices_) throw bad_input("component_of: vertex out of range");
    return component_[v];
}

Mat2 DirectionGraph::distance(int x, int y) const {
    if (x < 0 || x >= vertices_ || y < 0 || y >= vertices_)
        throw bad_input("distance: vertex out of range");
    if (component_[x] != component_[y])
        throw not_connected("distance: vertices lie in different components");
    return potential_[y] - potential_[x];
}

DirectionGraph extract(const LeaperGraph& g) {
    const Leaper l = normalized(g.leaper);
    if (!is_skew(l)) throw ambiguous_direction("extract: leaper is orthogonal or diagonal");
    const auto& squares = g.board.squares();
    const int n = static_cast<int>(squares.size());

    // Breadth-first potentials over the squares themselves, so that an
    // inconsistency can be reported as a cycle of squares.
    std::vector<int> id(n, -1), parent(n, -1);
    std::vector<Mat2> potential(n, Mat2::zero());
    int next_id = 0;
    for (int root = 0; root < n; ++root) {
        if (id[root] >= 0) continue;
        id[root] = next_id++;
        std::queue<int> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            for (const int v : g.adj[u]) {
                const int label = direction_of_move(l, squares[v] - squares[u]);
                const Mat2 reach = potential[u] + direction_matrix(label);
                if (id[v] < 0) {
                    id[v] = next_id++;
                    parent[v] = u;
                    potential[v] = reach;
                    frontier.push(v);
                } else if (potential[v] != reach) {
                    std::vector<int> up, down;
                    for (int w = u; w >= 0; w = parent[w]) up.push_back(w);
                    for (int w = v; w >= 0; w = parent[w]) down.push_back(w);
                    while (up.size() > 1 && down.size() > 1 &&
                           up[up.size() - 2] == down[down.size() - 2]) {
                        up.pop_back();
                        down.pop_back();
                    }
                    std::ostringstream msg;
                    msg << "extract: nontrivial cycle through";
                    for (auto it = up.rbegin(); it != up.rend(); ++it)
                        msg << " " << square_text(squares[*it]);
                    for (std::size_t i = 0; i + 1 < down.size(); ++i)
                        msg << " " << square_text(squares[down[i]]);
                    throw nontrivial_cycle(msg.str());
                }
            }
        }
    }

    std::vector<DirArc> arcs;
    for (int u = 0; u < n; ++u)
        for (const int v : g.adj[u]) {
            if (v < u) continue;
            const int label = direction_of_move(l, squares[v] - squares[u]);
            if (id[u] < id[v]) arcs.push_back({id[u], id[v], label});
            else arcs.push_back({id[v], id[u], opposite_direction(label)});
        }
    std::sort(arcs.begin(), arcs.end(), [](const DirArc& a, const DirArc& b) {
        return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
    });
    return DirectionGraph(n, std::move(arcs));
}

bool is_coherent(const DirectionGraph& phi) {
    const int n = phi.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (phi.component_of(x) != phi.component_of(y)) continue;
            const Mat2 d = phi.distance(x, y);
            if ((d == Mat2::zero()) != (x == y)) return false;
            if (!is_direction_matrix(d)) continue;
            const auto& out = phi.neighbors(x);
            const bool arc = std::any_of(out.begin(), out.end(), [&](const auto& e) {
                return e.first == y && direction_matrix(e.second) == d;
            });
            if (!arc) return false;
        }
    return true;
}

std::vector<Square> instantiate(const DirectionGraph& phi, Leaper l, Square anchor) {
    if (!phi.connected()) throw not_connected("instantiate: direction graph is disconnected");
    const Leaper m = normalized(l);
    const Vec2 pq{m.p, m.q};
    std::vector<Square> out(phi.vertex_count());
    for (int v = 0; v < phi.vertex_count(); ++v)
        out[v] = anchor + 2 * phi.distance(0, v).apply(pq);
    return out;
}

int EquivPermutation::operator()(int i) const {
    require_label(i, "EquivPermutation");
    return to[i - 1];
}

namespace {

EquivPermutation make_perm(std::array<int, 8> to, std::string name) {
    std::array<bool, 8> hit{};
    bool shifty = true;
    for (int i = 1; i <= 8; ++i) {
        require_label(to[i - 1], "EquivPermutation");
        hit[to[i - 1] - 1] = true;
        // Validity: the permutation must respect oppositeness up to a global
        // shift, which all bijections built here do by construction.
        shifty = shifty && reduce_label(to[i - 1] + 4) == to[reduce_label(i + 4) - 1];
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }) || !shifty)
        throw bad_input("EquivPermutation: not a direction-respecting bijection");
    return {to, std::move(name)};
}

}  // namespace

EquivPermutation identity_permutation() { return make_perm({1, 2, 3, 4, 5, 6, 7, 8}, "id"); }

EquivPermutation compose(const EquivPermutation& outer, const EquivPermutation& inner) {
    std::array<int, 8> to{};
    for (int i = 1; i <= 8; ++i) to[i - 1] = outer(inner(i));
    return make_perm(to, outer.name + "." + inner.name);
}

EquivPermutation inverse(const EquivPermutation& p) {
    std::array<int, 8> to{};
    for (int i = 1; i <= 8; ++i) to[p(i) - 1] = i;
    return make_perm(to, p.name + "^-1");
}

EquivPermutation perm_f() { return make_perm({2, 3, 8, 1, 6, 7, 4, 5}, "f"); }
EquivPermutation perm_g() { return make_perm({2, 7, 8, 5, 6, 3, 4, 1}, "g"); }
EquivPermutation perm_h() { return make_perm({7, 2, 5, 8, 3, 6, 1, 4}, "h"); }
EquivPermutation perm_second() { return make_perm({4, 7, 6, 1, 8, 3, 2, 5}, "second"); }

EquivPermutation perm_shift(int k) {
    std::array<int, 8> to{};
    for (int i = 1; i <= 8; ++i) to[i - 1] = reduce_label(static_cast<long long>(i) + k);
    return make_perm(to, "shift" + std::to_string(((k % 8) + 8) % 8));
}

EquivPermutation perm_reflect() { return make_perm({8, 7, 6, 5, 4, 3, 2, 1}, "reflect"); }
EquivPermutation perm_pinwheel() { return make_perm({3, 8, 5, 2, 7, 4, 1, 6}, "pinwheel"); }

std::vector<EquivPermutation> named_permutations() {
    return {perm_f(),     perm_g(),       perm_h(),         perm_second(),
            perm_shift(), perm_reflect(), perm_pinwheel()};
}

DirectionGraph apply_perm(const EquivPermutation& p, const DirectionGraph& phi) {
    std::vector<DirArc> arcs = phi.arcs();
    for (DirArc& arc : arcs) arc.label = p(arc.label);
    return DirectionGraph(phi.vertex_count(), std::move(arcs));
}

std::vector<int> cycle_word(const DirectionGraph& phi) {
    const int n = phi.vertex_count();
    if (n < 3 || static_cast<int>(phi.arcs().size()) != n || !phi.connected())
        throw not_a_cycle_graph("cycle_word: graph is not a single cycle");
    for (int v = 0; v < n; ++v)
        if (phi.neighbors(v).size() != 2)
            throw not_a_cycle_graph("cycle_word: graph is not a single cycle");
    std::vector<int> word;
    int prev = -1, at = 0;
    for (int step = 0; step < n; ++step) {
        const auto& out = phi.neighbors(at);
        const auto& next = out[0].first == prev ? out[1] : out[0];
        word.push_back(next.second);
        prev = at;
        at = next.first;
    }
    return word;
}

DirectionGraph cycle_graph_from_word(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    if (n < 3) throw bad_input("cycle_graph_from_word: need at least three labels");
    std::vector<DirArc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n, word[i]});
    return DirectionGraph(n, std::move(arcs));
}

namespace {

bool words_equal_up_to_rotation(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) return false;
    if (n == 0) return true;
    // Knuth-Morris-Pratt search for a inside b repeated twice.
    std::vector<std::size_t> border(n, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && a[i] != a[k]) k = border[k - 1];
        if (a[i] == a[k]) ++k;
        border[i] = k;
    }
    std::size_t k = 0;
    for (std::size_t i = 0; i < 2 * n - 1; ++i) {
        const int c = b[i % n];
        while (k > 0 && c != a[k]) k = border[k - 1];
        if (c == a[k]) ++k;
        if (k == n) return true;
    }
    return false;
}

// Traversing the cycle the other way reads each arc against its orientation,
// so the word reverses and every label flips to its opposite.
std::vector<int> reversed_word(std::vector<int> w) {
    std::reverse(w.begin(), w.end());
    for (int& i : w) i = opposite_direction(i);
    return w;
}

}  // namespace

bool cycle_graphs_equal(const DirectionGraph& a, const DirectionGraph& b) {
    const std::vector<int> wa = cycle_word(a);
    const std::vector<int> wb = cycle_word(b);
    return words_equal_up_to_rotation(wa, wb) ||
           words_equal_up_to_rotation(wa, reversed_word(wb));
}

std::optional<EquivPermutation> equivalent_as_cycles(const DirectionGraph& a,
                                                     const DirectionGraph& b) {
    for (int k = 0; k < 8; ++k) {
        const EquivPermutation shift = perm_shift(k);
        for (const bool reflect : {false, true}) {
            const EquivPermutation p = reflect ? compose(perm_reflect(), shift) : shift;
            if (cycle_graphs_equal(apply_perm(p, a), b)) return p;
        }
    }
    return std::nullopt;
}

namespace {

// Whether the graphs are isomorphic after discarding arc labels.  The
// library's dual pairs are relabelings of one graph, single cycles, or small
// unicyclic graphs, so a cheap shortcut plus a degree-pruned backtracking
// search covers the territory.
bool unlabeled_isomorphic(const DirectionGraph& a, const DirectionGraph& b) {
    const int n = a.vertex_count();
    if (b.vertex_count() != n || a.arcs().size() != b.arcs().size()) return false;

    const auto edge_set = [](const DirectionGraph& g) {
        std::vector<std::pair<int, int>> out;
        for (const DirArc& arc : g.arcs())
            out.push_back({std::min(arc.from, arc.to), std::max(arc.from, arc.to)});
        std::sort(out.begin(), out.end());
        return out;
    };
    if (edge_set(a) == edge_set(b)) return true;

    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = static_cast<int>(a.neighbors(v).size());
        db[v] = static_cast<int>(b.neighbors(v).size());
    }
    {
        std::vector<int> sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::vector<int> map_ab(n, -1), map_ba(n, -1);
    const auto adjacent = [](const DirectionGraph& g, int u, int v) {
        const auto& out = g.neighbors(u);
        return std::any_of(out.begin(), out.end(),
                           [v](const auto& e) { return e.first == v; });
    };
    const std::function<bool(int)> place = [&](int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (map_ba[w] >= 0 || db[w] != da[v]) continue;
            bool ok = true;
            for (const auto& e : a.neighbors(v)) {
                const int img = map_ab[e.first];
                if (img >= 0 && !adjacent(b, w, img)) { ok = false; break; }
            }
            if (!ok) continue;
            map_ab[v] = w;
            map_ba[w] = v;
            if (place(v + 1)) return true;
            map_ab[v] = -1;
            map_ba[w] = -1;
        }
        return false;
    };
    return place(0);
}

}  // namespace

bool verify_dual_pair(const DirectionGraph& phi, const DirectionGraph& phi2,
                      const std::vector<int>& eta, const Mat2& a_dual) {
    const int n = phi.vertex_count();
    if (static_cast<int>(eta.size()) != n || phi2.vertex_count() != n) return false;
    if (!phi.connected() || !phi2.connected()) return false;
    if (is_direction_matrix(a_dual)) return false;
    if (a_dual.det() != 1 && a_dual.det() != -1) return false;
    if (!is_coherent(phi) || !is_coherent(phi2)) return false;

    // eta is any bijection of the vertex sets; the graphs themselves must be
    // isomorphic once labels are discarded, but eta need not realize that
    // isomorphism.
    std::vector<int> back(n, -1);
    for (int v = 0; v < n; ++v) {
        if (eta[v] < 0 || eta[v] >= n || back[eta[v]] >= 0) return false;
        back[eta[v]] = v;
    }
    if (!unlabeled_isomorphic(phi, phi2)) return false;

    // Every arc eta(a) -> eta(b) labeled i of the complement pulls back to a
    // distance of A_i * a_dual.
    for (const DirArc& arc : phi2.arcs()) {
        const int a = back[arc.from], b = back[arc.to];
        if (phi.distance(a, b) != direction_matrix(arc.label) * a_dual) return false;
    }
    return true;
}

namespace {

// Matrix potentials of phi's vertices, keyed for lookup; injective when phi
// is coherent and connected.
std::map<std::array<coord, 4>, int> potential_index(const DirectionGraph& phi) {
    std::map<std::array<coord, 4>, int> where;
    for (int v = 0; v < phi.vertex_count(); ++v) {
        const Mat2 m = phi.distance(0, v);
        where[{m.a, m.b, m.c, m.d}] = v;
    }
    return where;
}

// Forces the preimage map of a duality candidate outward from one anchored
// vertex of the complement; empty when the spread runs off the potentials or
// fails to close bijectively.
std::optional<std::vector<int>> spread_preimages(const DirectionGraph& phi,
                                                 const DirectionGraph& phi2,
                                                 const std::map<std::array<coord, 4>, int>& where,
                                                 int root2, int anchor, const Mat2& a_dual) {
    const int n = phi.vertex_count();
    std::vector<int> back(n, -1);
    back[root2] = anchor;
    std::queue<int> frontier;
    frontier.push(root2);
    while (!frontier.empty()) {
        const int u2 = frontier.front();
        frontier.pop();
        for (const auto& [v2, label] : phi2.neighbors(u2)) {
            const Mat2 target = phi.distance(0, back[u2]) + direction_matrix(label) * a_dual;
            const auto hit = where.find({target.a, target.b, target.c, target.d});
            if (hit == where.end()) return std::nullopt;
            if (back[v2] < 0) {
                back[v2] = hit->second;
                frontier.push(v2);
            } else if (back[v2] != hit->second) {
                return std::nullopt;
            }
        }
    }
    std::vector<int> eta(n, -1);
    for (int v2 = 0; v2 < n; ++v2) {
        if (back[v2] < 0 || eta[back[v2]] >= 0) return std::nullopt;
        eta[back[v2]] = v2;
    }
    return eta;
}

}  // namespace

std::optional<std::vector<int>> find_duality_eta(const DirectionGraph& phi,
                                                 const DirectionGraph& phi2,
                                                 const Mat2& a_dual) {
    const int n = phi.vertex_count();
    if (phi2.vertex_count() != n || n == 0) return std::nullopt;
    if (!phi.connected() || !phi2.connected()) return std::nullopt;
    if (!is_coherent(phi) || !is_coherent(phi2)) return std::nullopt;
    const auto where = potential_index(phi);
    for (int anchor = 0; anchor < n; ++anchor) {
        const auto eta = spread_preimages(phi, phi2, where, 0, anchor, a_dual);
        if (eta && verify_dual_pair(phi, phi2, *eta, a_dual)) return eta;
    }
    return std::nullopt;
}

std::optional<Duality> find_duality(const DirectionGraph& phi, const DirectionGraph& phi2) {
    try {
        cycle_word(phi);
        cycle_word(phi2);
    } catch (const not_a_cycle_graph&) {
        throw unsupported("find_duality: only cycle-shaped direction graphs are searched");
    }
    const int n = phi.vertex_count();
    if (phi2.vertex_count() != n) return std::nullopt;
    if (!is_coherent(phi) || !is_coherent(phi2)) return std::nullopt;

    // Coherence makes the matrix potential injective over vertices, so once
    // a candidate matrix and a single preimage are fixed, the rest of the
    // bijection is forced by following arcs of the complement.  Candidate
    // matrices are read off the first arc of the complement against every
    // ordered vertex pair.
    const auto where = potential_index(phi);
    const DirArc& probe = phi2.arcs().front();
    const Mat2 unlabel = unimodular_inverse(direction_matrix(probe.label));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const Mat2 candidate = unlabel * phi.distance(a, b);
            if (candidate.det() != 1 && candidate.det() != -1) continue;
            if (is_direction_matrix(candidate)) continue;
            const auto eta = spread_preimages(phi, phi2, where, probe.from, a, candidate);
            if (eta && verify_dual_pair(phi, phi2, *eta, candidate))
                return Duality{*eta, candidate};
        }
    return std::nullopt;
}

}  // namespace leap
