#include "geomgrid/gridclass.hpp"

#include <algorithm>
#include <stdexcept>

#include "geomgrid/trace.hpp"

namespace geomgrid {

namespace {

std::vector<Permutation> reduce_to_minimal(std::vector<Permutation> basis_set) {
    std::sort(basis_set.begin(), basis_set.end());
    basis_set.erase(std::unique(basis_set.begin(), basis_set.end()), basis_set.end());
    std::vector<Permutation> minimal;
    for (const auto& b : basis_set) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (contains(kept, b)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(b);
    }
    return minimal;
}

}  // namespace

ClassSpec ClassSpec::geom(GridMatrix m, std::vector<Permutation> avoid) {
    if (!m.any_nonzero()) throw std::invalid_argument("ClassSpec: matrix must have a nonzero entry");
    return ClassSpec{ClassKind::Geom, std::move(m), reduce_to_minimal(std::move(avoid))};
}

ClassSpec ClassSpec::grid(GridMatrix m, std::vector<Permutation> avoid) {
    if (!m.any_nonzero()) throw std::invalid_argument("ClassSpec: matrix must have a nonzero entry");
    return ClassSpec{ClassKind::Grid, std::move(m), reduce_to_minimal(std::move(avoid))};
}

bool ClassSpec::avoids(const Permutation& p) const {
    for (const auto& b : avoid)
        if (contains(b, p)) return false;
    return true;
}

CellAlphabet encoding_alphabet(const GridMatrix& m) {
    if (auto signs = infer_signs(m)) return CellAlphabet(m, std::move(*signs));
    return CellAlphabet(refine(m, 2));
}

bool member_gridded_geom(const GriddedPermutation& g, const CellAlphabet& alphabet) {
    const GridMatrix& m = alphabet.matrix();
    if (!gridding_compatible(g, m)) return false;

    int n = g.perm.size();
    std::vector<int> pos_of_value(n + 1, 0);
    for (int pos = 1; pos <= n; ++pos) pos_of_value[g.perm(pos)] = pos;

    // chain edges: earlier point in reading direction -> later point
    std::vector<std::vector<int>> succ(n + 1);
    std::vector<int> indegree(n + 1, 0);
    auto add_edge = [&](int from, int to) {
        succ[from].push_back(to);
        ++indegree[to];
    };
    for (int k = 1; k <= g.cols; ++k) {
        int lo = g.col_cuts[k - 1] + 1, hi = g.col_cuts[k];
        if (alphabet.col_sign(k) == 1) {
            for (int pos = lo; pos < hi; ++pos) add_edge(pos, pos + 1);
        } else {
            for (int pos = hi; pos > lo; --pos) add_edge(pos, pos - 1);
        }
    }
    for (int l = 1; l <= g.rows; ++l) {
        int lo = g.row_cuts[l - 1] + 1, hi = g.row_cuts[l];
        if (alphabet.row_sign(l) == 1) {
            for (int v = lo; v < hi; ++v) add_edge(pos_of_value[v], pos_of_value[v + 1]);
        } else {
            for (int v = hi; v > lo; --v) add_edge(pos_of_value[v], pos_of_value[v - 1]);
        }
    }

    // Kahn's algorithm; acyclic iff all points get ordered
    std::vector<int> ready;
    for (int p = 1; p <= n; ++p)
        if (indegree[p] == 0) ready.push_back(p);
    int emitted = 0;
    while (!ready.empty()) {
        int p = ready.back();
        ready.pop_back();
        ++emitted;
        for (int q : succ[p])
            if (--indegree[q] == 0) ready.push_back(q);
    }
    return emitted == n;
}

bool member_grid(const Permutation& p, const GridMatrix& m) {
    int n = p.size(), t = m.cols(), u = m.rows();
    // existence version of all_griddings with early exit
    std::vector<int> ccur, rcur;
    auto try_rows = [&](auto&& self, const std::vector<int>& cc) -> bool {
        if (static_cast<int>(rcur.size()) == u - 1) {
            GriddedPermutation g;
            g.perm = p;
            g.cols = t;
            g.rows = u;
            g.col_cuts.assign(1, 0);
            g.col_cuts.insert(g.col_cuts.end(), cc.begin(), cc.end());
            g.col_cuts.push_back(n);
            g.row_cuts.assign(1, 0);
            g.row_cuts.insert(g.row_cuts.end(), rcur.begin(), rcur.end());
            g.row_cuts.push_back(n);
            return gridding_compatible(g, m);
        }
        int lo = rcur.empty() ? 0 : rcur.back();
        for (int v = lo; v <= n; ++v) {
            rcur.push_back(v);
            if (self(self, cc)) {
                rcur.pop_back();
                return true;
            }
            rcur.pop_back();
        }
        return false;
    };
    auto try_cols = [&](auto&& self) -> bool {
        if (static_cast<int>(ccur.size()) == t - 1) return try_rows(try_rows, ccur);
        int lo = ccur.empty() ? 0 : ccur.back();
        for (int v = lo; v <= n; ++v) {
            ccur.push_back(v);
            if (self(self)) {
                ccur.pop_back();
                return true;
            }
            ccur.pop_back();
        }
        return false;
    };
    return try_cols(try_cols);
}

bool member_geom(const Permutation& p, const GridMatrix& m) {
    CellAlphabet alphabet = encoding_alphabet(m);
    for (const auto& g : all_griddings(p, alphabet.matrix()))
        if (member_gridded_geom(g, alphabet)) return true;
    return false;
}

bool member(const ClassSpec& c, const Permutation& p) {
    if (!c.avoids(p)) return false;
    return c.kind == ClassKind::Geom ? member_geom(p, c.matrix) : member_grid(p, c.matrix);
}

std::vector<Permutation> enumerate(const ClassSpec& c, int n, const EnumerateOptions& opts) {
    if (n < 0) throw std::invalid_argument("enumerate: negative length");
    if (n > opts.max_len)
        throw std::invalid_argument("enumerate: length exceeds the configured bound (" +
                                    std::to_string(opts.max_len) + ")");
    if (c.kind == ClassKind::Geom) {
        CellAlphabet alphabet = encoding_alphabet(c.matrix);
        return opts.parallel ? enumerate_geom_words_parallel(alphabet, n, c.avoid)
                             : enumerate_geom_words_serial(alphabet, n, c.avoid);
    }
    if (n <= opts.grid_filter_max)
        return opts.parallel ? enumerate_grid_filter_parallel(c.matrix, n, c.avoid)
                             : enumerate_grid_filter_serial(c.matrix, n, c.avoid);
    return opts.parallel ? enumerate_grid_assembled_parallel(c.matrix, n, c.avoid)
                         : enumerate_grid_assembled_serial(c.matrix, n, c.avoid);
}

GriddedPermutation min_gridding(const Permutation& p, const GridMatrix& m) {
    auto signs = infer_signs(m);
    if (!signs)
        throw std::invalid_argument("min_gridding: matrix is not a partial multiplication matrix");
    CellAlphabet alphabet(m, std::move(*signs));

    std::optional<GriddedPermutation> best;
    for (auto& g : all_griddings(p, m)) {
        if (!member_gridded_geom(g, alphabet)) continue;
        if (!best || compare_griddings(g, *best).order == GriddingOrderWitness::Order::Less)
            best = std::move(g);
    }
    if (!best) throw std::runtime_error("min_gridding: permutation is not in Geom(M)");
    return *best;
}

RationalFunction gridded_gf(const GridMatrix& m) {
    auto signs = infer_signs(m);
    if (!signs)
        throw std::invalid_argument("gridded_gf: matrix is not a partial multiplication matrix");
    CellAlphabet alphabet(m, std::move(*signs));
    return generating_function(minimize(normal_form_automaton(alphabet)));
}

BigInt gridded_count(const GridMatrix& m, int n) {
    auto signs = infer_signs(m);
    if (!signs)
        throw std::invalid_argument("gridded_count: matrix is not a partial multiplication matrix");
    CellAlphabet alphabet(m, std::move(*signs));
    return count_words(normal_form_automaton(alphabet), n);
}

std::vector<Permutation> census(const ClassSpec& c, int n, CensusFilter filter,
                                const EnumerateOptions& opts) {
    std::vector<Permutation> members = enumerate(c, n, opts);
    std::vector<Permutation> out;
    for (const auto& p : members) {
        bool keep = true;
        switch (filter) {
            case CensusFilter::All: keep = true; break;
            case CensusFilter::Simple: keep = is_simple(p); break;
            case CensusFilter::SumIndec: keep = is_sum_indecomposable(p); break;
            case CensusFilter::SkewIndec: keep = is_skew_indecomposable(p); break;
        }
        if (keep) out.push_back(p);
    }
    return out;
}

BasisResult basis(const ClassSpec& c, int max_len, const EnumerateOptions& opts) {
    if (max_len > opts.max_len)
        throw std::invalid_argument("basis: length exceeds the configured bound (" +
                                    std::to_string(opts.max_len) + ")");
    BasisResult result;
    result.max_len = max_len;
    result.provably_complete = false;

    std::vector<Permutation> prev = enumerate(c, 0, opts);  // {empty} or {} under Av(empty)
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Permutation> cur = enumerate(c, len, opts);
        for (const auto& p : all_permutations(len)) {
            if (std::binary_search(cur.begin(), cur.end(), p)) continue;
            bool minimal = true;
            for (int i = 1; i <= len && minimal; ++i)
                if (!std::binary_search(prev.begin(), prev.end(), delete_entry(p, i)))
                    minimal = false;
            if (minimal) result.elements.push_back(p);
        }
        prev = std::move(cur);
    }
    return result;
}

bool verify_forest_equality(const GridMatrix& m, int n, const EnumerateOptions& opts) {
    ClassSpec geom_class = ClassSpec::geom(m);
    ClassSpec grid_class = ClassSpec::grid(m);
    for (int k = 0; k <= n; ++k)
        if (enumerate(geom_class, k, opts) != enumerate(grid_class, k, opts)) return false;
    return true;
}

}  // namespace geomgrid
