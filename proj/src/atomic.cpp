#include "geomgrid/atomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace geomgrid {

namespace {

struct DottedAlphabet {
    SignAssignment signs;
    std::vector<CellLetter> normals;  // cells of the 0/±1 part
    std::vector<CellLetter> dots;     // dot cells, each usable at most once
};

DottedAlphabet dotted_alphabet(const DottedMatrix& m) {
    if (!is_dot_isolated(m))
        throw std::invalid_argument("dotted matrix: a dot shares its row or column");

    GridMatrix zero_part = m.zeroed();
    std::vector<std::pair<int, int>> dots = m.dot_cells();
    auto signs = infer_signs(zero_part);
    if (!signs) {
        // refine the ±1 part; a dot's row and column are otherwise empty, so
        // any subcell of its block keeps the class unchanged
        zero_part = refine(zero_part, 2);
        for (auto& [k, l] : dots) {
            k = 2 * k - 1;
            l = 2 * l - 1;
        }
        signs = infer_signs(zero_part);
    }

    DottedAlphabet a;
    a.signs = std::move(*signs);
    for (auto [k, l] : zero_part.nonzero_cells()) a.normals.push_back(CellLetter{k, l});
    for (auto [k, l] : dots) a.dots.push_back(CellLetter{k, l});
    return a;
}

struct DottedPoint {
    int col, row;
    long long xoff, yoff;
};

Permutation perm_of_dotted(const std::vector<DottedPoint>& pts) {
    int n = static_cast<int>(pts.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    auto yless = [&](int a, int b) {
        if (pts[a].row != pts[b].row) return pts[a].row < pts[b].row;
        return pts[a].yoff < pts[b].yoff;
    };
    auto xless = [&](int a, int b) {
        if (pts[a].col != pts[b].col) return pts[a].col < pts[b].col;
        return pts[a].xoff < pts[b].xoff;
    };
    std::vector<int> value(n);
    std::sort(order.begin(), order.end(), yless);
    for (int rank = 0; rank < n; ++rank) value[order[rank]] = rank + 1;
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), xless);
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = value[order[i]];
    return Permutation(std::move(vals));
}

void dotted_dfs(const DottedAlphabet& a, int n, std::vector<DottedPoint>& pts, uint32_t dots_used,
                std::vector<Permutation>& out) {
    if (static_cast<int>(pts.size()) == n) {
        out.push_back(perm_of_dotted(pts));
        return;
    }
    long long d = static_cast<long long>(pts.size()) + 1;
    for (CellLetter c : a.normals) {
        pts.push_back(DottedPoint{c.col, c.row, a.signs.col_signs[c.col - 1] * d,
                                  a.signs.row_signs[c.row - 1] * d});
        dotted_dfs(a, n, pts, dots_used, out);
        pts.pop_back();
    }
    for (size_t i = 0; i < a.dots.size(); ++i) {
        if (dots_used & (1u << i)) continue;
        CellLetter c = a.dots[i];
        pts.push_back(DottedPoint{c.col, c.row, 0, 0});
        dotted_dfs(a, n, pts, dots_used | (1u << i), out);
        pts.pop_back();
    }
}

}  // namespace

std::vector<Permutation> enumerate_geom_dotted(const DottedMatrix& m, int n) {
    DottedAlphabet a = dotted_alphabet(m);
    if (a.dots.size() > 31) throw std::invalid_argument("dotted matrix: too many dots");
    std::vector<Permutation> out;
    std::vector<DottedPoint> pts;
    dotted_dfs(a, n, pts, 0, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DottedMatrix atom_matrix(const CellAlphabet& alphabet, const PathTerm& term) {
    const GridMatrix& m = alphabet.matrix();
    int q = static_cast<int>(term.connectors.size());
    if (term.loop_alphabets.size() != static_cast<size_t>(q) + 1)
        throw std::invalid_argument("atom_matrix: malformed path term");
    int f = 2 * q + 1;

    // subcell s of block (k, l), counted from the base point of the cell
    auto sub_col = [&](int k, int s) {
        return (k - 1) * f + (alphabet.col_sign(k) == 1 ? s : f + 1 - s);
    };
    auto sub_row = [&](int l, int s) {
        return (l - 1) * f + (alphabet.row_sign(l) == 1 ? s : f + 1 - s);
    };

    DottedMatrix d(m.cols() * f, m.rows() * f);
    for (int i = 0; i <= q; ++i) {
        int s = 2 * i + 1;
        for (CellLetter a : term.loop_alphabets[i]) {
            alphabet.index_of(a);
            d.set(sub_col(a.col, s), sub_row(a.row, s), m.at(a.col, a.row));
        }
    }
    for (int i = 1; i <= q; ++i) {
        int s = 2 * i;
        CellLetter a = term.connectors[i - 1];
        alphabet.index_of(a);
        d.set(sub_col(a.col, s), sub_row(a.row, s), DottedMatrix::kDot);
    }
    return d;
}

std::vector<DottedMatrix> decompose_to_atoms(const GridMatrix& m, const std::vector<Word>& forbidden) {
    auto signs = infer_signs(m);
    if (!signs)
        throw std::invalid_argument("decompose_to_atoms: matrix is not a partial multiplication matrix");
    CellAlphabet alphabet(m, std::move(*signs));

    Dfa avoider = subword_avoider(alphabet.letters(), forbidden);
    std::vector<DottedMatrix> out;
    for (const PathTerm& term : decompose_paths(avoider)) {
        DottedMatrix d = atom_matrix(alphabet, term);
        bool empty = true;
        for (int k = 1; k <= d.cols() && empty; ++k)
            for (int l = 1; l <= d.rows() && empty; ++l)
                if (d.at(k, l) != 0) empty = false;
        if (!empty) out.push_back(std::move(d));
    }
    return out;
}

std::optional<Permutation> joint_embed(const DottedMatrix& m, const Permutation& p,
                                       const Permutation& q, int bound) {
    for (int len = std::max(p.size(), q.size()); len <= bound; ++len)
        for (const Permutation& tau : enumerate_geom_dotted(m, len))
            if (contains(p, tau) && contains(q, tau)) return tau;
    return std::nullopt;
}

}  // namespace geomgrid
