#include "leap/descent.hpp"

#include <algorithm>
#include <map>

#include "leap/errors.hpp"

namespace leap {

bool is_core_descent(const std::string& e) {
    return std::all_of(e.begin(), e.end(), [](char c) { return c == 'f' || c == 'g' || c == 'h'; });
}

bool is_extended_descent(const std::string& e) {
    return std::all_of(e.begin(), e.end(),
                       [](char c) { return c == 'f' || c == 'g' || c == 'h' || c == 'H'; });
}

std::string descent_of(Leaper l) {
    if (!is_skew_basic(l)) throw bad_input("descent_of: leaper must be skew basic");
    int p = normalized(l).p, q = normalized(l).q;
    std::string e;
    while (!(p == 1 && q == 2)) {
        if (3 * p < q) {
            e += 'f';
            q -= 2 * p;
        } else if (2 * p > q) {
            e += 'g';
            const int np = 2 * p - q, nq = p;
            p = np;
            q = nq;
        } else {  // 2p < q < 3p; equality is impossible for basic leapers
            e += 'h';
            const int np = q - 2 * p, nq = p;
            p = np;
            q = nq;
        }
    }
    return e;
}

Mat2 lift_matrix(char kind) {
    switch (kind) {
        case 'f': return {1, 0, 2, 1};
        case 'g': return {0, 1, -1, 2};
        case 'h':
        case 'H': return {0, 1, 1, 2};
        default: throw bad_input(std::string("lift_matrix: unknown kind '") + kind + "'");
    }
}

Mat2 descent_matrix(const std::string& e) {
    if (!is_extended_descent(e)) throw bad_input("descent_matrix: invalid descent string");
    Mat2 m = Mat2::identity();
    for (const char c : e) m = m * lift_matrix(c);
    return m;
}

Leaper leaper_of_descent(const std::string& e) {
    const Vec2 v = descent_matrix(e).apply({1, 2});
    return {static_cast<int>(v.x), static_cast<int>(v.y)};
}

Ecf ecf_of_descent(const std::string& e) {
    if (!is_core_descent(e)) throw bad_input("ecf_of_descent: core descent (f/g/h) required");
    Ecf out;
    BigInt run = 0;
    for (const char c : e) {
        if (c == 'f') {
            ++run;
        } else {
            out.push_back({2 * run + 2, c == 'g' ? -1 : +1});
            run = 0;
        }
    }
    out.push_back({2 * run + 2, 0});
    return out;
}

std::string descent_of_ecf(const Ecf& ecf) {
    if (ecf.empty()) throw bad_input("descent_of_ecf: empty expansion");
    std::string e;
    for (std::size_t i = 0; i < ecf.size(); ++i) {
        const auto& [c, sign] = ecf[i];
        if (c < 2 || c % 2 != 0) throw bad_input("descent_of_ecf: terms must be even and >= 2");
        const bool last = i + 1 == ecf.size();
        if (last != (sign == 0)) throw bad_input("descent_of_ecf: sign 0 exactly on the last term");
        if (!last && sign != 1 && sign != -1) throw bad_input("descent_of_ecf: interior sign must be +-1");
        for (BigInt a = (c - 2) / 2; a > 0; --a) e += 'f';
        if (!last) e += (sign < 0 ? 'g' : 'h');
    }
    return e;
}

namespace {

BigRat evaluate_terms(const Ecf& terms) {
    // Fold from the innermost term outward; every partial value stays > 1,
    // so no division by zero can occur.
    BigRat v = BigRat(terms.back().c);
    for (std::size_t i = terms.size() - 1; i-- > 0;) {
        v = BigRat(terms[i].c) + BigRat(terms[i].sign) / v;
    }
    return v;
}

}  // namespace

BigRat ecf_value(const Ecf& ecf) {
    if (ecf.empty()) throw bad_input("ecf_value: empty expansion");
    return evaluate_terms(ecf);
}

BigRat cycle_length_ratio(const Ecf& ecf, std::size_t i) {
    if (i < 1 || i > ecf.size()) throw bad_input("cycle_length_ratio: index out of range");
    Ecf terms;
    for (std::size_t j = 0; j + 1 < i; ++j) {
        terms.push_back(ecf[j]);
        terms.push_back({2, -1});
    }
    terms.push_back({ecf[i - 1].c, 0});
    return evaluate_terms(terms);
}

std::vector<CycleTypeRecord> cycle_type_table(Leaper l) {
    const std::string e = descent_of(l);
    const Ecf ecf = ecf_of_descent(e);
    const std::size_t k = ecf.size();

    // Suffix leapers: row i is the leaper of the descent suffix following the
    // i-th g/h character (left to right); row k is (0, 1).
    std::vector<Leaper> seconds;
    for (std::size_t pos = 0; pos < e.size(); ++pos)
        if (e[pos] == 'g' || e[pos] == 'h') seconds.push_back(leaper_of_descent(e.substr(pos + 1)));
    seconds.push_back({0, 1});
    if (seconds.size() != k) throw error("cycle_type_table: internal row-count mismatch");

    std::vector<CycleTypeRecord> table;
    for (std::size_t i = 1; i <= k; ++i) {
        CycleTypeRecord row;
        row.index = i;
        row.second = seconds[i - 1];
        row.count = static_cast<long long>(row.second.q - row.second.p) *
                    (row.second.q - row.second.p);
        row.ratio = cycle_length_ratio(ecf, i);
        const BigInt li = numerator(row.ratio);
        row.length = 4 * static_cast<long long>(li);
        row.third_leaper = (i == k) && ecf.back().c == 2 && li % 3 != 0;
        table.push_back(row);
    }
    return table;
}

CycleClassification classify_cycle_types(Leaper l, const CycleDecomposition& d) {
    CycleClassification out;
    out.table = cycle_type_table(l);

    // Group the traced cycles into translation classes.
    std::map<std::vector<Square>, std::vector<std::size_t>> classes;
    for (std::size_t c = 0; c < d.cycles.size(); ++c)
        classes[translation_key(d.cycles[c])].push_back(c);

    if (classes.size() != out.table.size())
        throw unmatched_class("classify_cycle_types: expected " +
                              std::to_string(out.table.size()) + " translation classes, found " +
                              std::to_string(classes.size()));

    out.type_of_cycle.assign(d.cycles.size(), 0);
    std::vector<char> row_used(out.table.size(), 0);
    for (const auto& [key, members] : classes) {
        const long long len = static_cast<long long>(key.size());
        const auto row = std::find_if(out.table.begin(), out.table.end(),
                                      [&](const CycleTypeRecord& r) { return r.length == len; });
        if (row == out.table.end() || row_used[row->index - 1] ||
            row->count != static_cast<long long>(members.size()))
            throw unmatched_class("classify_cycle_types: no table row for a class of " +
                                  std::to_string(members.size()) + " cycles of length " +
                                  std::to_string(len));
        row_used[row->index - 1] = 1;
        for (const std::size_t c : members) out.type_of_cycle[c] = row->index;
    }
    return out;
}

CycleClassification classify_cycle_types(Leaper l) {
    return classify_cycle_types(l, decompose_center_board(l));
}

}  // namespace leap
