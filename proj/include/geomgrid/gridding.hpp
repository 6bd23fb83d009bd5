#ifndef GEOMGRID_GRIDDING_HPP
#define GEOMGRID_GRIDDING_HPP

#include <string>
#include <vector>

#include "geomgrid/matrix.hpp"
#include "geomgrid/permutation.hpp"

namespace geomgrid {

// A permutation with column cuts over positions and row cuts over values.
// Cuts are stored in full: col_cuts[0] = 0 <= ... <= col_cuts[t] = n, so the
// weak monotonicity of cell assignments holds by construction.  Column k
// holds positions col_cuts[k-1]+1 .. col_cuts[k]; rows likewise for values.
struct GriddedPermutation {
    Permutation perm;
    int cols = 1, rows = 1;
    std::vector<int> col_cuts;  // size cols + 1
    std::vector<int> row_cuts;  // size rows + 1

    static GriddedPermutation trivial(const Permutation& p);  // 1 x 1

    int column_of_position(int pos) const;
    int row_of_value(int value) const;
    int cell_count(int k, int l) const;
    int column_count(int k) const { return col_cuts[k] - col_cuts[k - 1]; }
    int row_count(int l) const { return row_cuts[l] - row_cuts[l - 1]; }

    // "perm | c1,..,c_{t-1} | r1,..,r_{u-1}" with inner cuts only
    std::string str() const;

    friend bool operator==(const GriddedPermutation& a, const GriddedPermutation& b) {
        return a.cols == b.cols && a.rows == b.rows && a.perm == b.perm &&
               a.col_cuts == b.col_cuts && a.row_cuts == b.row_cuts;
    }
    friend bool operator!=(const GriddedPermutation& a, const GriddedPermutation& b) {
        return !(a == b);
    }
};

// every M-compatible gridding of p, ordered lexicographically by
// (column cuts, row cuts)
std::vector<GriddedPermutation> all_griddings(const Permutation& p, const GridMatrix& m);

// whether one assignment of p's points to cells (given by cuts) is compatible
// with m: each cell increasing / decreasing / empty as prescribed
bool gridding_compatible(const GriddedPermutation& g, const GridMatrix& m);

// The gridding order on two griddings of the same permutation: compare
// per-column entry counts left to right (more entries first = smaller), then
// per-row counts bottom to top.  The first differing index is the witness.
struct GriddingOrderWitness {
    enum class Order { Equal, Less, Greater } order = Order::Equal;
    enum class Kind { None, Column, Row } kind = Kind::None;
    int index = 0;  // witnessing column or row, 1-based
};

GriddingOrderWitness compare_griddings(const GriddedPermutation& a, const GriddedPermutation& b);

}  // namespace geomgrid

#endif
