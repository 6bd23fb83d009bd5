#include "geomgrid/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace geomgrid {

namespace {

std::vector<std::vector<std::string>> tokenize_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) rows.push_back(std::move(toks));
    }
    return rows;
}

}  // namespace

GridMatrix::GridMatrix(int cols, int rows) : cols_(cols), rows_(rows) {
    if (cols < 1 || rows < 1) throw std::invalid_argument("GridMatrix: dimensions must be positive");
    entries_.assign(static_cast<size_t>(cols) * rows, 0);
}

size_t GridMatrix::idx(int k, int l) const {
    if (k < 1 || k > cols_ || l < 1 || l > rows_)
        throw std::out_of_range("GridMatrix: cell out of range");
    return static_cast<size_t>(l - 1) * cols_ + (k - 1);
}

void GridMatrix::set(int k, int l, int value) {
    if (value < -1 || value > 1) throw std::invalid_argument("GridMatrix: entry must be -1, 0 or 1");
    entries_[idx(k, l)] = static_cast<signed char>(value);
}

bool GridMatrix::any_nonzero() const {
    return std::any_of(entries_.begin(), entries_.end(), [](signed char e) { return e != 0; });
}

std::vector<std::pair<int, int>> GridMatrix::nonzero_cells() const {
    std::vector<std::pair<int, int>> cells;
    for (int k = 1; k <= cols_; ++k)
        for (int l = 1; l <= rows_; ++l)
            if (at(k, l) != 0) cells.emplace_back(k, l);
    return cells;
}

GridMatrix GridMatrix::parse(const std::string& text) {
    auto rows = tokenize_rows(text);
    if (rows.empty()) throw std::invalid_argument("matrix: empty input");
    size_t width = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != width) throw std::invalid_argument("matrix: ragged rows");
    GridMatrix m(static_cast<int>(width), static_cast<int>(rows.size()));
    // file row 0 is the top row, i.e. internal row u
    for (size_t vr = 0; vr < rows.size(); ++vr) {
        int l = static_cast<int>(rows.size() - vr);
        for (size_t c = 0; c < width; ++c) {
            const std::string& t = rows[vr][c];
            int v;
            if (t == "0")
                v = 0;
            else if (t == "1")
                v = 1;
            else if (t == "-1")
                v = -1;
            else
                throw std::invalid_argument("matrix: bad token '" + t + "'");
            m.set(static_cast<int>(c) + 1, l, v);
        }
    }
    if (!m.any_nonzero()) throw std::invalid_argument("matrix: all entries are zero");
    return m;
}

std::string GridMatrix::str() const {
    std::string s;
    for (int l = rows_; l >= 1; --l) {
        for (int k = 1; k <= cols_; ++k) {
            if (k > 1) s += ' ';
            s += std::to_string(at(k, l));
        }
        s += '\n';
    }
    return s;
}

DottedMatrix::DottedMatrix(int cols, int rows) : cols_(cols), rows_(rows) {
    if (cols < 1 || rows < 1) throw std::invalid_argument("DottedMatrix: dimensions must be positive");
    entries_.assign(static_cast<size_t>(cols) * rows, 0);
}

DottedMatrix::DottedMatrix(const GridMatrix& m) : DottedMatrix(m.cols(), m.rows()) {
    for (int k = 1; k <= cols_; ++k)
        for (int l = 1; l <= rows_; ++l) set(k, l, m.at(k, l));
}

size_t DottedMatrix::idx(int k, int l) const {
    if (k < 1 || k > cols_ || l < 1 || l > rows_)
        throw std::out_of_range("DottedMatrix: cell out of range");
    return static_cast<size_t>(l - 1) * cols_ + (k - 1);
}

void DottedMatrix::set(int k, int l, int value) {
    if (value != kDot && (value < -1 || value > 1))
        throw std::invalid_argument("DottedMatrix: entry must be -1, 0, 1 or dot");
    entries_[idx(k, l)] = static_cast<signed char>(value);
}

std::vector<std::pair<int, int>> DottedMatrix::dot_cells() const {
    std::vector<std::pair<int, int>> cells;
    for (int k = 1; k <= cols_; ++k)
        for (int l = 1; l <= rows_; ++l)
            if (at(k, l) == kDot) cells.emplace_back(k, l);
    return cells;
}

GridMatrix DottedMatrix::zeroed() const {
    GridMatrix m(cols_, rows_);
    for (int k = 1; k <= cols_; ++k)
        for (int l = 1; l <= rows_; ++l)
            if (at(k, l) != kDot) m.set(k, l, at(k, l));
    return m;
}

DottedMatrix DottedMatrix::parse(const std::string& text) {
    auto rows = tokenize_rows(text);
    if (rows.empty()) throw std::invalid_argument("matrix: empty input");
    size_t width = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != width) throw std::invalid_argument("matrix: ragged rows");
    DottedMatrix m(static_cast<int>(width), static_cast<int>(rows.size()));
    bool nonzero = false;
    for (size_t vr = 0; vr < rows.size(); ++vr) {
        int l = static_cast<int>(rows.size() - vr);
        for (size_t c = 0; c < width; ++c) {
            const std::string& t = rows[vr][c];
            int v;
            if (t == "0")
                v = 0;
            else if (t == "1")
                v = 1;
            else if (t == "-1")
                v = -1;
            else if (t == "d" || t == ".")
                v = kDot;
            else
                throw std::invalid_argument("matrix: bad token '" + t + "'");
            if (v != 0) nonzero = true;
            m.set(static_cast<int>(c) + 1, l, v);
        }
    }
    if (!nonzero) throw std::invalid_argument("matrix: all entries are zero");
    return m;
}

std::string DottedMatrix::str() const {
    std::string s;
    for (int l = rows_; l >= 1; --l) {
        for (int k = 1; k <= cols_; ++k) {
            if (k > 1) s += ' ';
            int v = at(k, l);
            s += v == kDot ? "d" : std::to_string(v);
        }
        s += '\n';
    }
    return s;
}

bool SignAssignment::certifies(const GridMatrix& m) const {
    if (static_cast<int>(col_signs.size()) != m.cols() ||
        static_cast<int>(row_signs.size()) != m.rows())
        return false;
    for (int s : col_signs)
        if (s != 1 && s != -1) return false;
    for (int s : row_signs)
        if (s != 1 && s != -1) return false;
    for (int k = 1; k <= m.cols(); ++k)
        for (int l = 1; l <= m.rows(); ++l)
            if (m.at(k, l) != 0 && m.at(k, l) != col_signs[k - 1] * row_signs[l - 1]) return false;
    return true;
}

GridMatrix refine(const GridMatrix& m, int q) {
    if (q < 1) throw std::invalid_argument("refine: q must be positive");
    GridMatrix r(m.cols() * q, m.rows() * q);
    for (int k = 1; k <= m.cols(); ++k) {
        for (int l = 1; l <= m.rows(); ++l) {
            int e = m.at(k, l);
            if (e == 0) continue;
            for (int s = 1; s <= q; ++s) {
                // identity block for 1, negative anti-identity for -1
                int col = (k - 1) * q + s;
                int row = (l - 1) * q + (e == 1 ? s : q + 1 - s);
                r.set(col, row, e);
            }
        }
    }
    return r;
}

// Propagation on the row-column graph: fixing one vertex of a component
// forces the rest; free components take +1.  Scanning columns first and
// preferring +1 yields the lexicographically least certificate.
std::optional<SignAssignment> infer_signs(const GridMatrix& m) {
    int t = m.cols(), u = m.rows();
    std::vector<int> cs(t, 0), rs(u, 0);
    for (int k0 = 1; k0 <= t; ++k0) {
        if (cs[k0 - 1] != 0) continue;
        cs[k0 - 1] = 1;
        std::vector<std::pair<bool, int>> stack{{true, k0}};  // (is_column, index)
        while (!stack.empty()) {
            auto [is_col, i] = stack.back();
            stack.pop_back();
            if (is_col) {
                for (int l = 1; l <= u; ++l) {
                    int e = m.at(i, l);
                    if (e == 0) continue;
                    int want = e * cs[i - 1];
                    if (rs[l - 1] == 0) {
                        rs[l - 1] = want;
                        stack.emplace_back(false, l);
                    } else if (rs[l - 1] != want) {
                        return std::nullopt;
                    }
                }
            } else {
                for (int k = 1; k <= t; ++k) {
                    int e = m.at(k, i);
                    if (e == 0) continue;
                    int want = e * rs[i - 1];
                    if (cs[k - 1] == 0) {
                        cs[k - 1] = want;
                        stack.emplace_back(true, k);
                    } else if (cs[k - 1] != want) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    for (int& s : rs)
        if (s == 0) s = 1;  // rows in empty components
    SignAssignment a{std::move(cs), std::move(rs)};
    return a;
}

CellGraph cell_graph(const GridMatrix& m) {
    CellGraph g;
    g.vertices = m.nonzero_cells();
    auto index_of = [&](int k, int l) {
        auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), std::make_pair(k, l));
        return static_cast<size_t>(it - g.vertices.begin());
    };
    // consecutive nonzero cells within each column
    for (int k = 1; k <= m.cols(); ++k) {
        int prev = 0;
        for (int l = 1; l <= m.rows(); ++l) {
            if (m.at(k, l) == 0) continue;
            if (prev) g.edges.emplace_back(index_of(k, prev), index_of(k, l));
            prev = l;
        }
    }
    // and within each row
    for (int l = 1; l <= m.rows(); ++l) {
        int prev = 0;
        for (int k = 1; k <= m.cols(); ++k) {
            if (m.at(k, l) == 0) continue;
            if (prev) g.edges.emplace_back(index_of(prev, l), index_of(k, l));
            prev = k;
        }
    }
    return g;
}

RowColumnGraph row_column_graph(const GridMatrix& m) {
    RowColumnGraph g;
    g.cols = m.cols();
    g.rows = m.rows();
    g.edges = m.nonzero_cells();
    return g;
}

namespace {

// union-find acyclicity check: adding an edge inside one component closes a cycle
bool acyclic(size_t num_vertices, const std::vector<std::pair<size_t, size_t>>& edges) {
    std::vector<size_t> parent(num_vertices);
    for (size_t i = 0; i < num_vertices; ++i) parent[i] = i;
    auto find = [&](size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [a, b] : edges) {
        size_t ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

}  // namespace

bool is_forest(const GridMatrix& m) {
    CellGraph cg = cell_graph(m);
    bool cell_acyclic = acyclic(cg.vertices.size(), cg.edges);

    RowColumnGraph rcg = row_column_graph(m);
    std::vector<std::pair<size_t, size_t>> edges;
    edges.reserve(rcg.edges.size());
    for (auto [k, l] : rcg.edges)
        edges.emplace_back(static_cast<size_t>(k - 1), static_cast<size_t>(rcg.cols + l - 1));
    bool rc_acyclic = acyclic(static_cast<size_t>(rcg.cols) + rcg.rows, edges);

    if (cell_acyclic != rc_acyclic)
        throw std::logic_error("is_forest: cell graph and row-column graph disagree");
    return cell_acyclic;
}

GridMatrix direct_sum_matrices(const GridMatrix& m, const GridMatrix& n) {
    GridMatrix r(m.cols() + n.cols(), m.rows() + n.rows());
    for (int k = 1; k <= m.cols(); ++k)
        for (int l = 1; l <= m.rows(); ++l) r.set(k, l, m.at(k, l));
    for (int k = 1; k <= n.cols(); ++k)
        for (int l = 1; l <= n.rows(); ++l) r.set(m.cols() + k, m.rows() + l, n.at(k, l));
    return r;
}

bool is_dot_isolated(const DottedMatrix& m) {
    for (auto [k, l] : m.dot_cells()) {
        for (int kk = 1; kk <= m.cols(); ++kk)
            if (kk != k && m.at(kk, l) != 0) return false;
        for (int ll = 1; ll <= m.rows(); ++ll)
            if (ll != l && m.at(k, ll) != 0) return false;
    }
    return true;
}

}  // namespace geomgrid
