#ifndef GEOMGRID_MATRIX_HPP
#define GEOMGRID_MATRIX_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geomgrid {

// t x u matrix over {0, 1, -1}, addressed (column k, row l) with columns
// counted from the left and rows from the bottom, both 1-based.  Text files
// list rows top-down; the conversion happens only in parse/print.
class GridMatrix {
public:
    GridMatrix(int cols, int rows);  // zero-filled

    int cols() const { return cols_; }
    int rows() const { return rows_; }
    int at(int k, int l) const { return entries_[idx(k, l)]; }
    void set(int k, int l, int value);

    bool any_nonzero() const;
    std::vector<std::pair<int, int>> nonzero_cells() const;  // sorted by (k, l)

    // rejects ragged rows, empty input, bad tokens, and all-zero matrices
    static GridMatrix parse(const std::string& text);
    std::string str() const;

    friend bool operator==(const GridMatrix& a, const GridMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_ && a.entries_ == b.entries_;
    }

private:
    int cols_, rows_;
    std::vector<signed char> entries_;
    size_t idx(int k, int l) const;
};

// Same addressing, entries in {0, 1, -1, dot}.
class DottedMatrix {
public:
    static constexpr int kDot = 2;

    DottedMatrix(int cols, int rows);
    explicit DottedMatrix(const GridMatrix& m);

    int cols() const { return cols_; }
    int rows() const { return rows_; }
    int at(int k, int l) const { return entries_[idx(k, l)]; }
    void set(int k, int l, int value);

    std::vector<std::pair<int, int>> dot_cells() const;
    GridMatrix zeroed() const;  // dots replaced by 0; may be all-zero

    // dot token is "d" on output; "d" and "." accepted on input
    static DottedMatrix parse(const std::string& text);
    std::string str() const;

    friend bool operator==(const DottedMatrix& a, const DottedMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_ && a.entries_ == b.entries_;
    }

private:
    int cols_, rows_;
    std::vector<signed char> entries_;
    size_t idx(int k, int l) const;
};

// Column and row signs certifying a partial multiplication matrix:
// every nonzero entry M_{k,l} equals col_signs[k-1] * row_signs[l-1].
struct SignAssignment {
    std::vector<int> col_signs;
    std::vector<int> row_signs;

    bool certifies(const GridMatrix& m) const;
};

GridMatrix refine(const GridMatrix& m, int q);

// lexicographically least certificate in (c_1..c_t, r_1..r_u) with +1 < -1,
// or nullopt when the matrix is not a partial multiplication matrix
std::optional<SignAssignment> infer_signs(const GridMatrix& m);

struct CellGraph {
    std::vector<std::pair<int, int>> vertices;       // nonzero cells, sorted
    std::vector<std::pair<size_t, size_t>> edges;    // indices into vertices
};

struct RowColumnGraph {
    int cols = 0, rows = 0;                          // parts x_1..x_t, y_1..y_u
    std::vector<std::pair<int, int>> edges;          // (k, l) per nonzero cell
};

CellGraph cell_graph(const GridMatrix& m);
RowColumnGraph row_column_graph(const GridMatrix& m);

// true iff the cell graph is acyclic; also checks the row-column graph and
// throws logic_error if the two ever disagree
bool is_forest(const GridMatrix& m);

// block diagonal: m in the lower left, n in the upper right
GridMatrix direct_sum_matrices(const GridMatrix& m, const GridMatrix& n);

// every dot is the only nonzero entry in its column and in its row
bool is_dot_isolated(const DottedMatrix& m);

}  // namespace geomgrid

#endif
