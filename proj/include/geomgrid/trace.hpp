#ifndef GEOMGRID_TRACE_HPP
#define GEOMGRID_TRACE_HPP

#include "geomgrid/dfa.hpp"
#include "geomgrid/encoding.hpp"

namespace geomgrid {

// Trace equivalence: one word is reachable from the other by swapping
// adjacent letters of independent cells.  Decided via normal forms.
bool trace_equivalent(const CellAlphabet& alphabet, const Word& v, const Word& w);

// The lexicographically least word in the trace of w: the greedy least-letter
// linear extension of w's dependence DAG, breaking letter ties by original
// position.
Word normal_form(const CellAlphabet& alphabet, const Word& w);

// DFA accepting exactly the normal forms.  States are sets of currently
// forbidden letters plus an explicit dead state; reading c from the set S is
// dead if c is forbidden, and otherwise forbids every b independent of c with
// c > b or b already forbidden.
Dfa normal_form_automaton(const CellAlphabet& alphabet);

}  // namespace geomgrid

#endif
