#include "leap/duality.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "leap/errors.hpp"

namespace leap {

namespace {

std::map<Square, long long> position_index(const std::vector<Square>& seq) {
    std::map<Square, long long> pos;
    for (std::size_t i = 0; i < seq.size(); ++i) pos.emplace(seq[i], static_cast<long long>(i));
    return pos;
}

void require_same_squares(const std::vector<Square>& a, const std::vector<Square>& b,
                          const char* who) {
    std::vector<Square> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb || std::adjacent_find(sa.begin(), sa.end()) != sa.end())
        throw mismatched_squares(std::string(who) +
                                 ": the two traversals do not cover the same squares");
}

// The sorted multiset {x in [mu, 3mu] : x = alpha (mod 4)}, eight of each.
std::vector<long long> eightfold_multiset(long long mu, int alpha) {
    std::vector<long long> out;
    for (long long x = mu; x <= 3 * mu; ++x)
        if (x % 4 == alpha) out.insert(out.end(), 8, x);
    return out;
}

int checked_residue(const std::vector<long long>& sorted_displacements, long long mu,
                    const char* who) {
    if (sorted_displacements.empty()) throw unmatched_class(std::string(who) + ": empty multiset");
    const int alpha = static_cast<int>(sorted_displacements.front() % 4);
    if (alpha != 1 && alpha != 3)
        throw unmatched_class(std::string(who) + ": least displacement has even residue " +
                              std::to_string(alpha));
    if (sorted_displacements != eightfold_multiset(mu, alpha))
        throw unmatched_class(std::string(who) +
                              ": displacements do not form the eight-fold multiset");
    return alpha;
}

}  // namespace

long long upsilon(int eps, long long j, long long m, long long n) {
    if (m < 1 || n < 1) throw bad_input("upsilon: section counts must be positive");
    if (eps != 0 && eps != 1) throw bad_input("upsilon: eps must be 0 or 1");
    const long long period = m + n;
    const long long rem = ((eps * m - j) % period + period) % period;
    return period + 2 * rem + 1;
}

IsoWitness psi_permutation(long long m, long long n) {
    if (m < 1 || n < 1) throw bad_input("psi_permutation: section counts must be positive");
    const long long length = 4 * (m + n);
    IsoWitness w;
    w.m = m;
    w.n = n;
    w.psi.reserve(length);
    std::vector<char> seen(length, 0);
    long long cur = 1;
    for (long long j = 0; j < length; ++j) {
        if (seen[cur - 1])
            throw not_bijective("psi_permutation: index " + std::to_string(cur) +
                                " is visited twice");
        seen[cur - 1] = 1;
        w.psi.push_back(cur);
        cur = (cur + upsilon(static_cast<int>(cur % 2), cur, m, n) - 1) % length + 1;
    }
    if (cur != 1) throw not_bijective("psi_permutation: the walk does not close up");
    return w;
}

DisplacementReport displacement_report(const std::vector<Square>& cycle, const ProperCycle& d) {
    const std::vector<Square> dseq = d.sequence();
    require_same_squares(cycle, dseq, "displacement_report");
    const long long length = static_cast<long long>(cycle.size());
    if (length % 4 != 0) throw bad_input("displacement_report: length must be divisible by four");

    const std::map<Square, long long> pos_c = position_index(cycle);
    const std::map<Square, long long> pos_d = position_index(dseq);

    DisplacementReport report;
    report.mu = length / 4;
    for (long long j = 0; j < length; ++j) {
        // Steps along d from its j-th square to that square's successor on
        // the first cycle, and the mirrored count for the first cycle.
        const Square a = dseq[j];
        const Square b = cycle[(pos_c.at(a) + 1) % length];
        report.d_displacements.push_back(((pos_d.at(b) - j) % length + length) % length);

        const Square c = cycle[j];
        const Square e = dseq[(pos_d.at(c) + 1) % length];
        report.c_displacements.push_back(((pos_c.at(e) - j) % length + length) % length);
    }
    std::sort(report.d_displacements.begin(), report.d_displacements.end());
    std::sort(report.c_displacements.begin(), report.c_displacements.end());
    report.alpha = checked_residue(report.d_displacements, report.mu, "displacement_report");
    report.beta = checked_residue(report.c_displacements, report.mu, "displacement_report");
    if (report.alpha != report.beta || report.d_displacements != report.c_displacements)
        throw unmatched_class("displacement_report: the two multisets disagree");
    return report;
}

std::vector<Square> iso_from_psi(const std::vector<Square>& cycle, const ProperCycle& d) {
    const std::vector<Square> dseq = d.sequence();
    require_same_squares(cycle, dseq, "iso_from_psi");
    const std::size_t m = d.paths[0].size();
    const std::size_t n = d.paths[1].size();
    for (int s = 0; s < 8; ++s)
        if (d.paths[s].size() != (s % 2 == 0 ? m : n))
            throw bad_input("iso_from_psi: section paths do not alternate two lengths");

    const IsoWitness w = psi_permutation(static_cast<long long>(m), static_cast<long long>(n));
    std::vector<Square> image;
    image.reserve(dseq.size());
    for (const long long j : w.psi) image.push_back(dseq[j - 1]);

    const std::vector<Vec2> moves = move_targets(d.frame);
    for (std::size_t j = 0; j < image.size(); ++j) {
        const Square a = image[j];
        const Square b = image[(j + 1) % image.size()];
        if (std::find(moves.begin(), moves.end(), Vec2{b.x - a.x, b.y - a.y}) == moves.end())
            throw unmatched_class("iso_from_psi: image squares " + std::to_string(j) + " and " +
                                  std::to_string(j + 1) + " are not one move apart");
    }
    return image;
}

namespace {

std::vector<int> sorted_degrees(const LeaperGraph& g) {
    std::vector<int> deg;
    deg.reserve(g.adj.size());
    for (const auto& nbrs : g.adj) deg.push_back(static_cast<int>(nbrs.size()));
    std::sort(deg.begin(), deg.end());
    return deg;
}

void require_dual_preconditions(const Board& board, Leaper l, Leaper m) {
    if (normalized(l) == normalized(m))
        throw bad_input("verify_dual_board: the two leapers must be distinct");
    if (board.size() < 2) throw bad_input("verify_dual_board: the board must have two squares");
}

}  // namespace

bool verify_dual_board(const Board& board, Leaper l, Leaper m) {
    require_dual_preconditions(board, l, m);
    const LeaperGraph gl = build_leaper_graph(board, l);
    const LeaperGraph gm = build_leaper_graph(board, m);
    if (!is_connected(gl) || !is_connected(gm)) return false;
    const std::vector<int> dl = sorted_degrees(gl);
    const std::vector<int> dm = sorted_degrees(gm);
    if (dl != dm) return false;
    if (std::all_of(dl.begin(), dl.end(), [](int d) { return d == 2; }))
        return true;  // two connected cycles over the same squares
    throw unsupported("verify_dual_board: isomorphism of non-cycle graphs needs a witness");
}

bool verify_dual_board(const Board& board, Leaper l, Leaper m,
                       const std::vector<std::pair<Square, Square>>& witness) {
    require_dual_preconditions(board, l, m);
    if (witness.size() != board.size())
        throw bad_input("verify_dual_board: witness size differs from the board size");
    std::vector<int> image(board.size(), -1);
    std::vector<char> hit(board.size(), 0);
    for (const auto& [from, to] : witness) {
        const int i = board.index_of(from);
        const int j = board.index_of(to);
        if (i < 0 || j < 0)
            throw bad_input("verify_dual_board: witness mentions a square off the board");
        if (image[i] >= 0) throw bad_input("verify_dual_board: witness maps a square twice");
        image[i] = j;
        if (hit[j]) return false;  // not injective, so not an isomorphism
        hit[j] = 1;
    }

    const LeaperGraph gl = build_leaper_graph(board, l);
    const LeaperGraph gm = build_leaper_graph(board, m);
    if (!is_connected(gl) || !is_connected(gm)) return false;

    std::size_t edges_l = 0, edges_m = 0;
    for (const auto& nbrs : gl.adj) edges_l += nbrs.size();
    for (const auto& nbrs : gm.adj) edges_m += nbrs.size();
    if (edges_l != edges_m) return false;

    for (std::size_t u = 0; u < gl.adj.size(); ++u)
        for (const int v : gl.adj[u]) {
            const auto& nbrs = gm.adj[image[u]];
            if (!std::binary_search(nbrs.begin(), nbrs.end(), image[v])) return false;
        }
    return true;
}

}  // namespace leap
