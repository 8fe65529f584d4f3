#include "leap/signature.hpp"

#include <algorithm>

#include "leap/descent.hpp"
#include "leap/errors.hpp"

namespace leap {

namespace {

// Index into per-character tables, in serialization order +s, +c, -s, -c.
int index_of(SigChar ch) { return (ch.positive ? 0 : 2) + (ch.side ? 0 : 1); }

void require_extended(const std::string& e, const char* who) {
    if (!is_extended_descent(e))
        throw bad_input(std::string(who) + ": descent must use characters f, g, h, H");
}

void require_kind(char kind, const char* who) {
    if (kind != 'f' && kind != 'g' && kind != 'h' && kind != 'H')
        throw bad_input(std::string(who) + ": kind must be one of f, g, h, H");
}

// Start of the lexicographically least rotation (Booth's two-pointer form).
std::size_t least_rotation(const std::string& s) {
    const std::size_t n = s.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const char a = s[(i + k) % n], b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i = i + k + 1;
        else
            j = j + k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

template <class... Parts>
SigString cat(const Parts&... parts) {
    SigString out;
    out.reserve((parts.size() + ...));
    (out.insert(out.end(), parts.begin(), parts.end()), ...);
    return out;
}

SigString parse_unchecked(const std::string& text) {
    SigString out;
    out.reserve(text.size());
    for (const char c : text) out.push_back(sig_char_of(c));
    return out;
}

// Replacement strings per rewrite system, indexed +s, +c, -s, -c.  Each
// system commutes with the sign flip: rows 2 and 3 are the bars of rows 0
// and 1.
const std::array<SigString, 4>& rewrite_images(char kind) {
    static const std::array<SigString, 4> f = {
        parse_unchecked("s"),
        parse_unchecked("SCS"),
        parse_unchecked("S"),
        parse_unchecked("scs"),
    };
    static const std::array<SigString, 4> g = {
        parse_unchecked("CSC"),
        parse_unchecked("c"),
        parse_unchecked("csc"),
        parse_unchecked("C"),
    };
    static const std::array<SigString, 4> h = {
        parse_unchecked("SCSCS"),
        parse_unchecked("scs"),
        parse_unchecked("scscs"),
        parse_unchecked("SCS"),
    };
    static const std::array<SigString, 4> hh = {
        parse_unchecked("csc"),
        parse_unchecked("CSCSC"),
        parse_unchecked("CSC"),
        parse_unchecked("cscsc"),
    };
    switch (kind) {
        case 'f': return f;
        case 'g': return g;
        case 'h': return h;
        default: return hh;
    }
}

}  // namespace

char to_char(SigChar ch) {
    static constexpr std::array<char, 4> codes = {'S', 'C', 's', 'c'};
    return codes[static_cast<std::size_t>(index_of(ch))];
}

SigChar sig_char_of(char c) {
    switch (c) {
        case 'S': return sig_plus_s;
        case 'C': return sig_plus_c;
        case 's': return sig_minus_s;
        case 'c': return sig_minus_c;
        default: throw bad_input(std::string("sig_char_of: unknown character '") + c + "'");
    }
}

SigString bar(const SigString& s) {
    SigString out;
    out.reserve(s.size());
    for (const SigChar ch : s) out.push_back(ch.bar());
    return out;
}

SigString parse_sig_string(const std::string& text) { return parse_unchecked(text); }

std::string to_string(const SigString& s) {
    std::string out;
    out.reserve(s.size());
    for (const SigChar ch : s) out.push_back(to_char(ch));
    return out;
}

bool is_palindrome(const SigString& s) {
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2),
                      s.rbegin());
}

Signature::Signature(SigString chars) : chars_(std::move(chars)) {
    const std::size_t n = chars_.size();
    if (n == 0 || n % 8 != 0)
        throw inconsistent_signature("Signature: length must be a positive multiple of eight");
    const std::size_t quarter = n / 4;
    for (std::size_t i = 0; i + quarter < n; ++i)
        if (!(chars_[i] == chars_[i + quarter]))
            throw inconsistent_signature("Signature: labels must repeat every quarter turn");
    const std::size_t start = least_rotation(to_string(chars_));
    std::rotate(chars_.begin(), chars_.begin() + static_cast<std::ptrdiff_t>(start),
                chars_.end());
}

Signature parse_signature(const std::string& text) { return Signature(parse_unchecked(text)); }

std::string to_string(const Signature& s) { return to_string(s.chars()); }

SigString rewrite(char kind, const SigString& s) {
    require_kind(kind, "rewrite");
    const auto& images = rewrite_images(kind);
    SigString out;
    for (const SigChar ch : s) {
        const auto& image = images[static_cast<std::size_t>(index_of(ch))];
        out.insert(out.end(), image.begin(), image.end());
    }
    return out;
}

Signature rewrite(char kind, const Signature& s) { return Signature(rewrite(kind, s.chars())); }

SigString descent_rewrite(const std::string& e, SigString s) {
    require_extended(e, "descent_rewrite");
    for (auto it = e.rbegin(); it != e.rend(); ++it) s = rewrite(*it, s);
    return s;
}

CornerSidePair rearrange(char kind, const CornerSidePair& p) {
    require_kind(kind, "rearrange");
    const SigString& corner = p.corner;
    const SigString& side = p.side;
    switch (kind) {
        case 'f': return {cat(side, corner, side), bar(side)};
        case 'g': return {bar(corner), cat(corner, side, corner)};
        case 'h': return {cat(corner, side, corner, side, corner),
                          cat(bar(corner), bar(side), bar(corner))};
        default: return {cat(bar(side), bar(corner), bar(side)),
                         cat(side, corner, side, corner, side)};
    }
}

Signature signature_of_descent(const std::string& e) {
    require_extended(e, "signature_of_descent");
    return Signature(descent_rewrite(e, parse_unchecked("SCSCSCSC")));
}

CornerSidePair corner_side_of_descent(const std::string& e) {
    require_extended(e, "corner_side_of_descent");
    CornerSidePair p = {parse_unchecked("S"), parse_unchecked("C")};
    for (auto it = e.rbegin(); it != e.rend(); ++it) p = rearrange(*it, p);
    return p;
}

Signature second_signature_of_descent(const std::string& e) {
    const CornerSidePair p = corner_side_of_descent(e);
    SigString s;
    s.reserve(4 * (p.corner.size() + p.side.size()));
    for (int rep = 0; rep < 4; ++rep) {
        s.insert(s.end(), p.corner.begin(), p.corner.end());
        s.insert(s.end(), p.side.begin(), p.side.end());
    }
    return Signature(std::move(s));
}

LabelScheme::LabelScheme(char id, std::array<PairList, 4> table)
    : id_(id), table_(table) {}

const LabelScheme& LabelScheme::of(char id) {
    static const LabelScheme l('L', {{{{{1, 4}, {3, 6}, {5, 8}, {7, 2}}},
                                     {{{2, 5}, {4, 7}, {6, 1}, {8, 3}}},
                                     {{{2, 7}, {4, 1}, {6, 3}, {8, 5}}},
                                     {{{1, 6}, {3, 8}, {5, 2}, {7, 4}}}}});
    static const LabelScheme g('g', {{{{{2, 5}, {4, 7}, {6, 1}, {8, 3}}},
                                     {{{1, 8}, {3, 2}, {5, 4}, {7, 6}}},
                                     {{{1, 6}, {3, 8}, {5, 2}, {7, 4}}},
                                     {{{2, 3}, {4, 5}, {6, 7}, {8, 1}}}}});
    static const LabelScheme h('h', {{{{{1, 2}, {3, 4}, {5, 6}, {7, 8}}},
                                     {{{2, 3}, {4, 5}, {6, 7}, {8, 1}}},
                                     {{{2, 1}, {4, 3}, {6, 5}, {8, 7}}},
                                     {{{1, 8}, {3, 2}, {5, 4}, {7, 6}}}}});
    static const LabelScheme f('f', {{{{{2, 1}, {4, 3}, {6, 5}, {8, 7}}},
                                     {{{1, 4}, {3, 6}, {5, 8}, {7, 2}}},
                                     {{{1, 2}, {3, 4}, {5, 6}, {7, 8}}},
                                     {{{2, 7}, {4, 1}, {6, 3}, {8, 5}}}}});
    switch (id) {
        case 'L': return l;
        case 'g': return g;
        case 'h': return h;
        case 'f': return f;
        default: throw bad_input("LabelScheme::of: scheme must be one of L, g, h, f");
    }
}

const LabelScheme::PairList& LabelScheme::pairs(SigChar ch) const {
    return table_[static_cast<std::size_t>(index_of(ch))];
}

bool LabelScheme::admits_in(SigChar ch, int in_dir) const {
    const PairList& list = pairs(ch);
    return std::any_of(list.begin(), list.end(),
                       [in_dir](const std::pair<int, int>& p) { return p.first == in_dir; });
}

int LabelScheme::out_direction(SigChar ch, int in_dir) const {
    for (const auto& [in, out] : pairs(ch))
        if (in == in_dir) return out;
    throw inconsistent_signature(std::string("scheme ") + id_ + ": character " + to_char(ch) +
                                 " does not admit incoming direction " +
                                 std::to_string(in_dir));
}

std::optional<SigChar> LabelScheme::label_of(int in_dir, int out_dir) const {
    static constexpr std::array<SigChar, 4> alphabet = {sig_plus_s, sig_plus_c, sig_minus_s,
                                                        sig_minus_c};
    for (const SigChar ch : alphabet)
        for (const auto& [in, out] : pairs(ch))
            if (in == in_dir && out == out_dir) return ch;
    return std::nullopt;
}

std::vector<int> direction_word_of_signature(const LabelScheme& scheme, const Signature& s) {
    const SigString& chars = s.chars();
    const int start = scheme.admits_in(chars[0], 1) ? 1 : 2;
    std::vector<int> dirs;
    dirs.reserve(chars.size());
    dirs.push_back(start);
    int cur = start;
    for (std::size_t i = 0; i < chars.size(); ++i) {
        cur = scheme.out_direction(chars[i], cur);
        if (i + 1 < chars.size()) dirs.push_back(cur);
    }
    if (cur != start)
        throw inconsistent_signature(std::string("scheme ") + scheme.id() +
                                     ": traversal returns on direction " + std::to_string(cur) +
                                     " instead of " + std::to_string(start));
    Mat2 sum = Mat2::zero();
    for (const int d : dirs) sum = sum + direction_matrix(d);
    if (!(sum == Mat2::zero()))
        throw inconsistent_signature(std::string("scheme ") + scheme.id() +
                                     ": direction matrices do not cancel around the cycle");
    return dirs;
}

DirectionGraph cycle_of_signature(const LabelScheme& scheme, const Signature& s) {
    return cycle_graph_from_word(direction_word_of_signature(scheme, s));
}

DirectionGraph fundamental_cycle(const std::string& e) {
    require_extended(e, "fundamental_cycle");
    return cycle_of_signature(LabelScheme::of('L'), signature_of_descent(e));
}

DirectionGraph second_fundamental(char origin, const std::string& e) {
    if (origin != 'f' && origin != 'g' && origin != 'h')
        throw bad_input("second_fundamental: origin must be one of f, g, h");
    require_extended(e, "second_fundamental");
    return cycle_of_signature(LabelScheme::of(origin), second_signature_of_descent(e));
}

std::pair<long long, long long> ns_nc(const std::string& e) {
    require_extended(e, "ns_nc");
    __int128 a = 4, b = 4;
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        __int128 na = 0, nb = 0;
        switch (*it) {
            case 'f': na = a + 2 * b, nb = b; break;
            case 'g': na = a, nb = 2 * a + b; break;
            case 'h': na = 3 * a + 2 * b, nb = 2 * a + b; break;
            default: na = a + 2 * b, nb = 2 * a + 3 * b; break;
        }
        a = na, b = nb;
        if (a > static_cast<__int128>(9'000'000'000'000'000'000LL) ||
            b > static_cast<__int128>(9'000'000'000'000'000'000LL))
            throw unsupported("ns_nc: counts exceed the 64-bit range");
    }
    return {static_cast<long long>(a), static_cast<long long>(b)};
}

std::string recover_descent(long long side_count, long long corner_count) {
    long long a = side_count, b = corner_count;
    std::string e;
    while (!(a == 4 && b == 4)) {
        if (a <= 0 || b <= 0)
            throw not_realizable("recover_descent: counts leave the reachable lattice");
        long long na = 0, nb = 0;
        if (a > 2 * b) {
            e += 'f', na = a - 2 * b, nb = b;
        } else if (2 * a < b) {
            e += 'g', na = a, nb = b - 2 * a;
        } else if (2 * b > a && a > b) {
            e += 'h', na = 2 * b - a, nb = 2 * a - 3 * b;
        } else if (a < b && b < 2 * a) {
            e += 'H', na = 2 * b - 3 * a, nb = 2 * a - b;
        } else {
            throw not_realizable("recover_descent: no rewrite system yields these counts");
        }
        a = na, b = nb;
    }
    return e;
}

std::string recover_descent(const Signature& s) {
    long long side = 0, corner = 0;
    for (const SigChar ch : s.chars()) (ch.side ? side : corner) += 1;
    return recover_descent(side, corner);
}

std::string flip(const std::string& e) {
    require_extended(e, "flip");
    std::string out;
    out.reserve(e.size());
    for (auto it = e.rbegin(); it != e.rend(); ++it)
        out += *it == 'f' ? 'g' : *it == 'g' ? 'f' : *it;
    return out;
}

std::string companion(const std::string& e) {
    require_extended(e, "companion");
    std::string out;
    out.reserve(e.size());
    for (const char c : e)
        out += c == 'f' ? 'g' : c == 'g' ? 'f' : c == 'h' ? 'H' : 'h';
    return out;
}

bool equivalent_descents(const std::string& a, const std::string& b) {
    require_extended(a, "equivalent_descents");
    require_extended(b, "equivalent_descents");
    return a == b || companion(a) == b;
}

}  // namespace leap
