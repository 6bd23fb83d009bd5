#include "geomgrid/encoding.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace geomgrid {

std::string letter_str(CellLetter a) {
    return std::to_string(a.col) + "," + std::to_string(a.row);
}

CellLetter parse_letter(const std::string& token) {
    size_t comma = token.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("letter: expected 'col,row', got '" + token + "'");
    try {
        size_t u1 = 0, u2 = 0;
        int k = std::stoi(token.substr(0, comma), &u1);
        int l = std::stoi(token.substr(comma + 1), &u2);
        if (u1 != comma || comma + 1 + u2 != token.size() || k < 1 || l < 1)
            throw std::invalid_argument("");
        return CellLetter{k, l};
    } catch (const std::exception&) {
        throw std::invalid_argument("letter: bad token '" + token + "'");
    }
}

std::string word_str(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += letter_str(w[i]);
    }
    return s;
}

Word parse_word(const std::string& text) {
    std::istringstream in(text);
    Word w;
    std::string tok;
    while (in >> tok) w.push_back(parse_letter(tok));
    return w;
}

CellAlphabet::CellAlphabet(GridMatrix m) : matrix_(std::move(m)) {
    auto signs = infer_signs(matrix_);
    if (!signs)
        throw std::invalid_argument(
            "CellAlphabet: matrix is not a partial multiplication matrix; refine it by 2 first");
    signs_ = std::move(*signs);
    for (auto [k, l] : matrix_.nonzero_cells()) letters_.push_back(CellLetter{k, l});
}

CellAlphabet::CellAlphabet(GridMatrix m, SignAssignment signs)
    : matrix_(std::move(m)), signs_(std::move(signs)) {
    if (!signs_.certifies(matrix_))
        throw std::invalid_argument("CellAlphabet: signs do not certify the matrix");
    for (auto [k, l] : matrix_.nonzero_cells()) letters_.push_back(CellLetter{k, l});
}

bool CellAlphabet::contains_letter(CellLetter a) const {
    return std::binary_search(letters_.begin(), letters_.end(), a);
}

int CellAlphabet::index_of(CellLetter a) const {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), a);
    if (it == letters_.end() || *it != a)
        throw std::invalid_argument("word: letter " + letter_str(a) + " is not in the alphabet");
    return static_cast<int>(it - letters_.begin());
}

void CellAlphabet::check_word(const Word& w) const {
    for (CellLetter a : w) index_of(a);
}

namespace {

struct Point {
    int col, row;
    long long xoff, yoff;  // signed rank along each axis
    int index;             // order of insertion, breaks nothing (keys are distinct)
};

Permutation perm_of_points(std::vector<Point> pts) {
    auto xless = [](const Point& a, const Point& b) {
        if (a.col != b.col) return a.col < b.col;
        return a.xoff < b.xoff;
    };
    auto yless = [](const Point& a, const Point& b) {
        if (a.row != b.row) return a.row < b.row;
        return a.yoff < b.yoff;
    };
    std::vector<int> by_value(pts.size());
    {
        std::vector<int> order(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return yless(pts[a], pts[b]); });
        for (size_t rank = 0; rank < order.size(); ++rank)
            by_value[order[rank]] = static_cast<int>(rank) + 1;
    }
    std::sort(pts.begin(), pts.end(), xless);
    std::vector<int> vals;
    vals.reserve(pts.size());
    for (const Point& p : pts) vals.push_back(by_value[p.index]);
    return Permutation(std::move(vals));
}

}  // namespace

Permutation phi_with_ranks(const CellAlphabet& alphabet, const Word& w,
                           const std::vector<long long>& ranks) {
    alphabet.check_word(w);
    if (ranks.size() != w.size())
        throw std::invalid_argument("phi: need one rank per letter");
    for (size_t i = 1; i < ranks.size(); ++i)
        if (ranks[i] <= ranks[i - 1])
            throw std::invalid_argument("phi: ranks must be strictly increasing");
    std::vector<Point> pts;
    pts.reserve(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        CellLetter a = w[i];
        long long d = ranks[i];
        pts.push_back(Point{a.col, a.row, alphabet.col_sign(a.col) * d,
                            alphabet.row_sign(a.row) * d, static_cast<int>(i)});
    }
    return perm_of_points(std::move(pts));
}

Permutation phi(const CellAlphabet& alphabet, const Word& w) {
    std::vector<long long> ranks(w.size());
    for (size_t i = 0; i < w.size(); ++i) ranks[i] = static_cast<long long>(i) + 1;
    return phi_with_ranks(alphabet, w, ranks);
}

GriddedPermutation phi_sharp(const CellAlphabet& alphabet, const Word& w) {
    alphabet.check_word(w);
    std::vector<Point> pts;
    pts.reserve(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        CellLetter a = w[i];
        long long d = static_cast<long long>(i) + 1;
        pts.push_back(Point{a.col, a.row, alphabet.col_sign(a.col) * d,
                            alphabet.row_sign(a.row) * d, static_cast<int>(i)});
    }

    GriddedPermutation g;
    g.perm = perm_of_points(pts);
    g.cols = alphabet.matrix().cols();
    g.rows = alphabet.matrix().rows();
    g.col_cuts.assign(g.cols + 1, 0);
    g.row_cuts.assign(g.rows + 1, 0);
    for (const Point& p : pts) {
        g.col_cuts[p.col] += 1;  // points per column, prefix-summed below
        g.row_cuts[p.row] += 1;
    }
    for (int k = 1; k <= g.cols; ++k) g.col_cuts[k] += g.col_cuts[k - 1];
    for (int l = 1; l <= g.rows; ++l) g.row_cuts[l] += g.row_cuts[l - 1];
    return g;
}

}  // namespace geomgrid
