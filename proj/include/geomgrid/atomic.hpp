#ifndef GEOMGRID_ATOMIC_HPP
#define GEOMGRID_ATOMIC_HPP

#include <optional>
#include <vector>

#include "geomgrid/dfa.hpp"
#include "geomgrid/encoding.hpp"
#include "geomgrid/matrix.hpp"
#include "geomgrid/permutation.hpp"

namespace geomgrid {

// Length-n members of the geometric class of a dot-isolated matrix.  Encoded
// as words over the cell alphabet of the 0/±1 part (refined by 2 when it has
// no signs) extended with one letter per dot cell, each usable at most once;
// a dot point needs no distance rank because isolation leaves it alone in its
// column and row bands.
std::vector<Permutation> enumerate_geom_dotted(const DottedMatrix& m, int n);

// The dot-isolated matrix whose class is phi of the path term's language
// (with optional connectors): built on the refinement of m by 2q+1, keeping
// subcell s of each loop cell for odd s and placing a dot at subcell s of
// each connector cell for even s, subcells counted from the base point.
DottedMatrix atom_matrix(const CellAlphabet& alphabet, const PathTerm& term);

// Atomic decomposition of the subclass of Geom(m) encoded by the words
// avoiding the forbidden subwords: one dot-isolated matrix per simple path
// of the avoider automaton.  Terms whose matrix would be empty (the
// empty-word-only language) are dropped.
std::vector<DottedMatrix> decompose_to_atoms(const GridMatrix& m, const std::vector<Word>& forbidden);

// A permutation of length <= bound in the class containing both p and q, if
// the search finds one; absence is not a disproof.
std::optional<Permutation> joint_embed(const DottedMatrix& m, const Permutation& p,
                                       const Permutation& q, int bound);

}  // namespace geomgrid

#endif
