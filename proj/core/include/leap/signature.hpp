#ifndef LEAP_SIGNATURE_HPP
#define LEAP_SIGNATURE_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leap/direction.hpp"

namespace leap {

// One vertex label of the signature alphabet.  The sign records whether the
// outgoing move turns three steps counterclockwise or clockwise from the
// incoming one; the subscript records whether the square sits in a side or
// a corner section of its frame.  Serialized one character per label:
// 'S' = +s, 'C' = +c, 's' = -s, 'c' = -c.
struct SigChar {
    bool positive = true;
    bool side = true;

    SigChar bar() const { return {!positive, side}; }          // sign flip
    SigChar double_bar() const { return {!positive, !side}; }  // sign and subscript flip

    friend bool operator==(const SigChar&, const SigChar&) = default;
};

inline constexpr SigChar sig_plus_s{true, true};
inline constexpr SigChar sig_plus_c{true, false};
inline constexpr SigChar sig_minus_s{false, true};
inline constexpr SigChar sig_minus_c{false, false};

char to_char(SigChar ch);
SigChar sig_char_of(char c);  // bad_input on anything but S, C, s, c

// A plain (non-cyclic) run of labels, as appears in corner-side pairs and
// rewrite images.
using SigString = std::vector<SigChar>;

SigString bar(const SigString& s);  // character-wise sign flip
SigString parse_sig_string(const std::string& text);
std::string to_string(const SigString& s);
bool is_palindrome(const SigString& s);

// The cyclic label string read around a cycle.  Valid signatures have
// length a positive multiple of eight and repeat every quarter, mirroring
// the fourfold symmetry of the cycles they label; the constructor throws
// inconsistent_signature otherwise.  The characters are stored in the
// lexicographically least rotation of their serialized form, so equality
// of signatures is equality of cyclic strings.
class Signature {
public:
    explicit Signature(SigString chars);

    const SigString& chars() const { return chars_; }
    std::size_t length() const { return chars_.size(); }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    SigString chars_;
};

Signature parse_signature(const std::string& text);
std::string to_string(const Signature& s);

// Lifting a cycle rewrites its signature character by character.  The four
// systems are keyed like lift matrices: f, g, h, or H; each commutes with
// the sign flip, so the images of the negative characters are the barred
// images of the positive ones.
SigString rewrite(char kind, const SigString& s);
Signature rewrite(char kind, const Signature& s);

// The composite rewrite of a whole descent, innermost (last) character
// applied first.
SigString descent_rewrite(const std::string& e, SigString s);

// A second leaper cycle's signature, cut at the centers of a corner and a
// side section of its frame.  For signatures arising from descents, both
// halves are palindromes of odd length.
struct CornerSidePair {
    SigString corner;
    SigString side;

    friend bool operator==(const CornerSidePair&, const CornerSidePair&) = default;
};

// How a corner-side pair transforms under one lift; keyed like rewrites.
CornerSidePair rearrange(char kind, const CornerSidePair& p);

// The signature of the cycle of descent e: the descent rewrite applied to
// the eight-character alternation (+s +c)x4 of the innermost ring.
Signature signature_of_descent(const std::string& e);

// The corner-side pair of the canonical second leaper cycle of descent e:
// rearrangements of e applied, innermost first, to (+s, +c).
CornerSidePair corner_side_of_descent(const std::string& e);

// The full second-cycle signature, read off the corner-side pair by
// alternating its halves four times around.
Signature second_signature_of_descent(const std::string& e);

// The direction labeling rules: for each alphabet character, the four
// (in, out) direction pairs that may meet at a square carrying that label.
// Scheme L labels first-leaper cycles; schemes g, h, and f label canonical
// second leaper cycles of the matching origin.
class LabelScheme {
public:
    using PairList = std::array<std::pair<int, int>, 4>;

    static const LabelScheme& of(char id);  // 'L', 'g', 'h', or 'f'

    char id() const { return id_; }
    const PairList& pairs(SigChar ch) const;
    bool admits_in(SigChar ch, int in_dir) const;
    int out_direction(SigChar ch, int in_dir) const;  // inconsistent_signature when not admitted
    std::optional<SigChar> label_of(int in_dir, int out_dir) const;

private:
    LabelScheme(char id, std::array<PairList, 4> table);

    char id_;
    std::array<PairList, 4> table_;  // indexed +s, +c, -s, -c
};

// The incoming directions read around a signature under a scheme: the
// first direction is 1 when the first character admits it and 2 otherwise
// (all admissible choices rotate the same cycle), and each character then
// maps its incoming direction to the next.  Throws inconsistent_signature
// when a step leaves the tables, the walk fails to close, or the labeled
// cycle's direction matrices do not cancel.
std::vector<int> direction_word_of_signature(const LabelScheme& scheme, const Signature& s);

// The labeled oriented cycle generated by a signature under a scheme.
DirectionGraph cycle_of_signature(const LabelScheme& scheme, const Signature& s);

// The direction cycle of the first-leaper cycle of descent e, and of the
// canonical second leaper cycle of descent e and origin o (f, g, or h).
// Both accept extended descents.
DirectionGraph fundamental_cycle(const std::string& e);
DirectionGraph second_fundamental(char origin, const std::string& e);

// Counts of side- and corner-subscripted characters (both signs) in the
// signature of descent e, via the linear recurrences the rewrites induce.
std::pair<long long, long long> ns_nc(const std::string& e);

// The unique descent whose signature has the given character counts,
// recovered by peeling one character at a time: each count pair determines
// its outermost character by order comparisons, and inverting that
// character's recurrence descends toward the base (4, 4).  Throws
// not_realizable when no descent produces the counts.
std::string recover_descent(long long side_count, long long corner_count);
std::string recover_descent(const Signature& s);

// The flip reverses a descent and swaps f with g; companions swap f with g
// and h with H in place.  Two descents generate equivalent fundamental
// cycles exactly when they are equal or companions.
std::string flip(const std::string& e);
std::string companion(const std::string& e);
bool equivalent_descents(const std::string& a, const std::string& b);

}  // namespace leap

#endif  // LEAP_SIGNATURE_HPP
