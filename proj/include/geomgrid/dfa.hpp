#ifndef GEOMGRID_DFA_HPP
#define GEOMGRID_DFA_HPP

#include <string>
#include <vector>

#include "geomgrid/bigint.hpp"
#include "geomgrid/encoding.hpp"
#include "geomgrid/poly.hpp"

namespace geomgrid {

// Total deterministic automaton over a cell alphabet.  The transition table
// is dense: delta[s * alphabet.size() + a] for state s and letter index a.
struct Dfa {
    std::vector<CellLetter> alphabet;  // sorted, duplicate-free
    int start = 0;
    std::vector<int> delta;
    std::vector<char> accepting;

    int num_states() const { return static_cast<int>(accepting.size()); }
    int num_letters() const { return static_cast<int>(alphabet.size()); }
    int next(int state, int letter_index) const { return delta[state * alphabet.size() + letter_index]; }

    bool accepts(const Word& w) const;  // throws on letters outside the alphabet

    static Dfa all_words(std::vector<CellLetter> alphabet);     // accepts everything
    static Dfa empty_language(std::vector<CellLetter> alphabet);

    void validate() const;  // checks totality and ranges

    // structural equality; minimized automata of equal languages compare equal
    friend bool operator==(const Dfa& a, const Dfa& b) = default;
};

// Boolean operations; operands must share an alphabet, results are minimized.
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa union_of(const Dfa& a, const Dfa& b);
Dfa difference(const Dfa& a, const Dfa& b);
Dfa complement(const Dfa& a);

// Minimum-state language-equivalent DFA, states renumbered by breadth-first
// order from the start (letters in alphabet order), so two automata with the
// same language minimize to identical structures.
Dfa minimize(const Dfa& a);

bool same_language(const Dfa& a, const Dfa& b);

// Accepts exactly the words containing none of the forbidden words as a
// (not necessarily contiguous) subword.  Forbidding the empty word yields
// the empty language.
Dfa subword_avoider(std::vector<CellLetter> alphabet, const std::vector<Word>& forbidden);

// number of accepted words of length exactly n
BigInt count_words(const Dfa& a, int n);

// Exact generating function of the accepted language via the transfer matrix
// of the live part; coefficients are cross-checked against count_words for
// n <= 20 and a mismatch is a hard error.
RationalFunction generating_function(const Dfa& a);

// every cycle through the live part is a self-loop
bool is_path_loop_form(const Dfa& a);

// One term of the subword-closed decomposition: the language
// L1* a_1 L2* a_2 ... a_q L_{q+1}* with mandatory connector letters.
struct PathTerm {
    std::vector<std::vector<CellLetter>> loop_alphabets;  // size q + 1
    std::vector<CellLetter> connectors;                   // size q

    bool matches(const Word& w) const;
    std::string str() const;
};

// All start-to-accept simple paths of a path-loop-form automaton, one term
// per path; the union of the term languages is the accepted language.
std::vector<PathTerm> decompose_paths(const Dfa& a);

std::string dfa_to_json(const Dfa& a);
Dfa dfa_from_json(const std::string& text);

}  // namespace geomgrid

#endif
