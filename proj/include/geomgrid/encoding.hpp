#ifndef GEOMGRID_ENCODING_HPP
#define GEOMGRID_ENCODING_HPP

#include <compare>
#include <string>
#include <vector>

#include "geomgrid/gridding.hpp"
#include "geomgrid/matrix.hpp"
#include "geomgrid/permutation.hpp"

namespace geomgrid {

// One letter per nonzero cell; ordered by (column, row), which is also the
// lexicographic order used for normal forms.
struct CellLetter {
    int col = 0;
    int row = 0;
    auto operator<=>(const CellLetter&) const = default;
};

using Word = std::vector<CellLetter>;

std::string letter_str(CellLetter a);          // "k,l"
CellLetter parse_letter(const std::string& token);
std::string word_str(const Word& w);           // space-separated letters
Word parse_word(const std::string& text);

// The cell alphabet of a partial multiplication matrix together with the
// signs that fix the base point of every cell.  Construction fails on
// matrices without signs; refine(m, 2) always provides one.
class CellAlphabet {
public:
    explicit CellAlphabet(GridMatrix m);               // signs inferred (lex-least)
    CellAlphabet(GridMatrix m, SignAssignment signs);  // explicit certificate

    const GridMatrix& matrix() const { return matrix_; }
    const SignAssignment& signs() const { return signs_; }
    const std::vector<CellLetter>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }

    bool contains_letter(CellLetter a) const;
    int index_of(CellLetter a) const;  // throws on foreign letters
    CellLetter letter(int index) const { return letters_[index]; }

    int col_sign(int k) const { return signs_.col_signs[k - 1]; }
    int row_sign(int l) const { return signs_.row_signs[l - 1]; }

    // letters commute iff their cells share no column and no row
    bool independent(CellLetter a, CellLetter b) const {
        return a.col != b.col && a.row != b.row;
    }

    friend bool operator==(const CellAlphabet& a, const CellAlphabet& b) {
        return a.letters_ == b.letters_;
    }

private:
    GridMatrix matrix_;
    SignAssignment signs_;
    std::vector<CellLetter> letters_;
    void check_word(const Word& w) const;

    friend Permutation phi(const CellAlphabet&, const Word&);
    friend GriddedPermutation phi_sharp(const CellAlphabet&, const Word&);
    friend Permutation phi_with_ranks(const CellAlphabet&, const Word&,
                                      const std::vector<long long>&);
};

// Word-to-permutation map: the i-th letter places a point at distance rank i
// from the base point of its cell.  A point's horizontal sort key is
// (column, col_sign * rank) and its vertical key (row, row_sign * rank);
// sorting by the first gives positions, ranking by the second gives values.
Permutation phi(const CellAlphabet& alphabet, const Word& w);
GriddedPermutation phi_sharp(const CellAlphabet& alphabet, const Word& w);

// phi with explicit distance ranks (strictly increasing); the image must not
// depend on the choice, which the tests verify
Permutation phi_with_ranks(const CellAlphabet& alphabet, const Word& w,
                           const std::vector<long long>& ranks);

}  // namespace geomgrid

#endif
