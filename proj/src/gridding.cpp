#include "geomgrid/gridding.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace geomgrid {

GriddedPermutation GriddedPermutation::trivial(const Permutation& p) {
    GriddedPermutation g;
    g.perm = p;
    g.cols = g.rows = 1;
    g.col_cuts = {0, p.size()};
    g.row_cuts = {0, p.size()};
    return g;
}

int GriddedPermutation::column_of_position(int pos) const {
    for (int k = 1; k <= cols; ++k)
        if (pos <= col_cuts[k]) return k;
    throw std::out_of_range("GriddedPermutation: position out of range");
}

int GriddedPermutation::row_of_value(int value) const {
    for (int l = 1; l <= rows; ++l)
        if (value <= row_cuts[l]) return l;
    throw std::out_of_range("GriddedPermutation: value out of range");
}

int GriddedPermutation::cell_count(int k, int l) const {
    int count = 0;
    for (int pos = col_cuts[k - 1] + 1; pos <= col_cuts[k]; ++pos) {
        int v = perm(pos);
        if (v > row_cuts[l - 1] && v <= row_cuts[l]) ++count;
    }
    return count;
}

std::string GriddedPermutation::str() const {
    auto inner = [](const std::vector<int>& cuts) {
        std::string s;
        for (size_t i = 1; i + 1 < cuts.size(); ++i) {
            if (i > 1) s += ',';
            s += std::to_string(cuts[i]);
        }
        return s;
    };
    return perm.str() + " | " + inner(col_cuts) + " | " + inner(row_cuts);
}

bool gridding_compatible(const GriddedPermutation& g, const GridMatrix& m) {
    if (g.cols != m.cols() || g.rows != m.rows()) return false;
    for (int k = 1; k <= g.cols; ++k) {
        for (int l = 1; l <= g.rows; ++l) {
            int entry = m.at(k, l);
            int prev = 0;
            for (int pos = g.col_cuts[k - 1] + 1; pos <= g.col_cuts[k]; ++pos) {
                int v = g.perm(pos);
                if (v <= g.row_cuts[l - 1] || v > g.row_cuts[l]) continue;
                if (entry == 0) return false;
                if (prev != 0) {
                    if (entry == 1 && v < prev) return false;
                    if (entry == -1 && v > prev) return false;
                }
                prev = v;
            }
        }
    }
    return true;
}

namespace {

// weakly increasing tuples over 0..n in lexicographic order
void enumerate_cut_tuples(int len, int n, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == len) {
        emit(cur);
        return;
    }
    int lo = cur.empty() ? 0 : cur.back();
    for (int v = lo; v <= n; ++v) {
        cur.push_back(v);
        enumerate_cut_tuples(len, n, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<GriddedPermutation> all_griddings(const Permutation& p, const GridMatrix& m) {
    int n = p.size(), t = m.cols(), u = m.rows();
    std::vector<GriddedPermutation> out;
    std::vector<int> ccur, rcur;
    enumerate_cut_tuples(t - 1, n, ccur, [&](const std::vector<int>& cc) {
        enumerate_cut_tuples(u - 1, n, rcur, [&](const std::vector<int>& rc) {
            GriddedPermutation g;
            g.perm = p;
            g.cols = t;
            g.rows = u;
            g.col_cuts.assign(1, 0);
            g.col_cuts.insert(g.col_cuts.end(), cc.begin(), cc.end());
            g.col_cuts.push_back(n);
            g.row_cuts.assign(1, 0);
            g.row_cuts.insert(g.row_cuts.end(), rc.begin(), rc.end());
            g.row_cuts.push_back(n);
            if (gridding_compatible(g, m)) out.push_back(std::move(g));
        });
    });
    return out;
}

GriddingOrderWitness compare_griddings(const GriddedPermutation& a, const GriddedPermutation& b) {
    if (a.perm != b.perm || a.cols != b.cols || a.rows != b.rows)
        throw std::invalid_argument("compare_griddings: griddings of different objects");
    GriddingOrderWitness w;
    for (int k = 1; k <= a.cols; ++k) {
        int ca = a.column_count(k), cb = b.column_count(k);
        if (ca != cb) {
            w.order = ca > cb ? GriddingOrderWitness::Order::Less : GriddingOrderWitness::Order::Greater;
            w.kind = GriddingOrderWitness::Kind::Column;
            w.index = k;
            return w;
        }
    }
    for (int l = 1; l <= a.rows; ++l) {
        int ra = a.row_count(l), rb = b.row_count(l);
        if (ra != rb) {
            w.order = ra > rb ? GriddingOrderWitness::Order::Less : GriddingOrderWitness::Order::Greater;
            w.kind = GriddingOrderWitness::Kind::Row;
            w.index = l;
            return w;
        }
    }
    return w;
}

}  // namespace geomgrid
