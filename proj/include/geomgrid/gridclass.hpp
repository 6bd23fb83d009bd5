#ifndef GEOMGRID_GRIDCLASS_HPP
#define GEOMGRID_GRIDCLASS_HPP

#include <optional>
#include <vector>

#include "geomgrid/dfa.hpp"
#include "geomgrid/encoding.hpp"
#include "geomgrid/gridding.hpp"
#include "geomgrid/matrix.hpp"
#include "geomgrid/permutation.hpp"
#include "geomgrid/poly.hpp"

namespace geomgrid {

enum class ClassKind { Geom, Grid };

// A geometric or monotone grid class, optionally intersected with an
// avoidance class Av(B).  The avoidance set is reduced to its minimal
// elements on construction.
struct ClassSpec {
    ClassKind kind = ClassKind::Geom;
    GridMatrix matrix;
    std::vector<Permutation> avoid;

    static ClassSpec geom(GridMatrix m, std::vector<Permutation> avoid = {});
    static ClassSpec grid(GridMatrix m, std::vector<Permutation> avoid = {});

    bool avoids(const Permutation& p) const;
};

struct EnumerateOptions {
    int max_len = 10;         // queries beyond this are rejected
    int grid_filter_max = 8;  // above this, Grid enumeration assembles griddings
    bool parallel = true;     // use OpenMP kernels when built with OpenMP
};

// Whether a gridded permutation lies in the gridded geometric class: chain
// each column's points in the direction of its column sign and each row's in
// the direction of its row sign; the gridding is geometric iff the union of
// the chains is acyclic (a topological order yields distance ranks for an
// encoding word, and conversely).
bool member_gridded_geom(const GriddedPermutation& g, const CellAlphabet& alphabet);

bool member_geom(const Permutation& p, const GridMatrix& m);  // refines to a PMM if needed
bool member_grid(const Permutation& p, const GridMatrix& m);
bool member(const ClassSpec& c, const Permutation& p);

std::vector<Permutation> enumerate(const ClassSpec& c, int n, const EnumerateOptions& opts = {});

// the gridding-order minimum among the geometric griddings of p; requires a
// partial multiplication matrix and p in Geom(m)
GriddedPermutation min_gridding(const Permutation& p, const GridMatrix& m);

RationalFunction gridded_gf(const GridMatrix& m);  // GF of Geom#(m); requires a PMM
BigInt gridded_count(const GridMatrix& m, int n);

enum class CensusFilter { All, Simple, SumIndec, SkewIndec };
std::vector<Permutation> census(const ClassSpec& c, int n, CensusFilter filter,
                                const EnumerateOptions& opts = {});

// Minimal non-members up to max_len.  Completeness at the bound is not
// decidable here, so provably_complete is always false.
struct BasisResult {
    std::vector<Permutation> elements;
    int max_len = 0;
    bool provably_complete = false;
};
BasisResult basis(const ClassSpec& c, int max_len, const EnumerateOptions& opts = {});

// Grid#(m) = Geom#(m) checked through length n (true for forests)
bool verify_forest_equality(const GridMatrix& m, int n, const EnumerateOptions& opts = {});

// --- enumeration kernels ------------------------------------------------
// Serial reference implementations and their OpenMP counterparts; enumerate()
// dispatches on EnumerateOptions::parallel.  Results are sorted and identical
// across kernels and thread counts.

std::vector<Permutation> enumerate_geom_words_serial(const CellAlphabet& alphabet, int n,
                                                     const std::vector<Permutation>& avoid);
std::vector<Permutation> enumerate_geom_words_parallel(const CellAlphabet& alphabet, int n,
                                                       const std::vector<Permutation>& avoid);
std::vector<Permutation> enumerate_grid_filter_serial(const GridMatrix& m, int n,
                                                      const std::vector<Permutation>& avoid);
std::vector<Permutation> enumerate_grid_filter_parallel(const GridMatrix& m, int n,
                                                        const std::vector<Permutation>& avoid);
std::vector<Permutation> enumerate_grid_assembled_serial(const GridMatrix& m, int n,
                                                         const std::vector<Permutation>& avoid);
std::vector<Permutation> enumerate_grid_assembled_parallel(const GridMatrix& m, int n,
                                                           const std::vector<Permutation>& avoid);

// the alphabet enumerate() encodes with: m itself when it has signs,
// otherwise refine(m, 2)
CellAlphabet encoding_alphabet(const GridMatrix& m);

}  // namespace geomgrid

#endif
