#include "geomgrid/trace.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace geomgrid {

Word normal_form(const CellAlphabet& alphabet, const Word& w) {
    int n = static_cast<int>(w.size());
    for (CellLetter a : w) alphabet.index_of(a);

    // dependence DAG on positions: i -> j for i < j with dependent letters
    std::vector<int> pending(n, 0);  // unemitted dependent predecessors
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (!alphabet.independent(w[i], w[j])) ++pending[j];

    std::vector<char> emitted(n, 0);
    Word out;
    out.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int j = 0; j < n; ++j) {
            if (emitted[j] || pending[j] > 0) continue;
            if (best == -1 || w[j] < w[best]) best = j;  // position order breaks letter ties
        }
        emitted[best] = 1;
        out.push_back(w[best]);
        for (int j = best + 1; j < n; ++j)
            if (!emitted[j] && !alphabet.independent(w[best], w[j])) --pending[j];
    }
    return out;
}

bool trace_equivalent(const CellAlphabet& alphabet, const Word& v, const Word& w) {
    return normal_form(alphabet, v) == normal_form(alphabet, w);
}

Dfa normal_form_automaton(const CellAlphabet& alphabet) {
    int m = alphabet.size();
    if (m > 30) throw std::invalid_argument("normal_form_automaton: alphabet too large");

    // state = bitmask of forbidden letters; explored lazily from the empty set
    std::map<uint32_t, int> id_of;
    std::vector<uint32_t> masks;
    auto state_id = [&](uint32_t mask) {
        auto [it, fresh] = id_of.emplace(mask, static_cast<int>(masks.size()));
        if (fresh) masks.push_back(mask);
        return it->second;
    };

    state_id(0u);
    std::vector<std::vector<int>> delta_rows;
    for (size_t s = 0; s < masks.size(); ++s) {
        uint32_t mask = masks[s];
        std::vector<int> row(m, -1);
        for (int c = 0; c < m; ++c) {
            if (mask & (1u << c)) {
                row[c] = -1;  // dead, patched below
                continue;
            }
            uint32_t next = 0;
            for (int b = 0; b < m; ++b) {
                if (!alphabet.independent(alphabet.letter(b), alphabet.letter(c))) continue;
                if (b < c || (mask & (1u << b))) next |= 1u << b;
            }
            row[c] = state_id(next);
        }
        delta_rows.push_back(std::move(row));
    }

    Dfa d;
    d.alphabet = alphabet.letters();
    d.start = 0;
    int dead = static_cast<int>(masks.size());
    d.accepting.assign(masks.size() + 1, 1);
    d.accepting[dead] = 0;
    d.delta.assign((masks.size() + 1) * m, dead);
    for (size_t s = 0; s < delta_rows.size(); ++s)
        for (int c = 0; c < m; ++c)
            if (delta_rows[s][c] >= 0) d.delta[s * m + c] = delta_rows[s][c];
    d.validate();
    return d;
}

}  // namespace geomgrid
