#include "geomgrid/dfa.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace geomgrid {

namespace {

int letter_index(const std::vector<CellLetter>& alphabet, CellLetter a) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), a);
    if (it == alphabet.end() || *it != a)
        throw std::invalid_argument("dfa: letter " + letter_str(a) + " is not in the alphabet");
    return static_cast<int>(it - alphabet.begin());
}

void require_same_alphabet(const Dfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet)
        throw std::invalid_argument("dfa: operands have different alphabets");
}

std::vector<char> reachable_states(const Dfa& a) {
    std::vector<char> seen(a.num_states(), 0);
    std::queue<int> q;
    seen[a.start] = 1;
    q.push(a.start);
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (int c = 0; c < a.num_letters(); ++c) {
            int t = a.next(s, c);
            if (!seen[t]) {
                seen[t] = 1;
                q.push(t);
            }
        }
    }
    return seen;
}

std::vector<char> coaccessible_states(const Dfa& a) {
    // reverse reachability from accepting states
    std::vector<std::vector<int>> rev(a.num_states());
    for (int s = 0; s < a.num_states(); ++s)
        for (int c = 0; c < a.num_letters(); ++c) rev[a.next(s, c)].push_back(s);
    std::vector<char> seen(a.num_states(), 0);
    std::queue<int> q;
    for (int s = 0; s < a.num_states(); ++s)
        if (a.accepting[s]) {
            seen[s] = 1;
            q.push(s);
        }
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (int p : rev[s])
            if (!seen[p]) {
                seen[p] = 1;
                q.push(p);
            }
    }
    return seen;
}

enum class BoolOp { And, Or, Diff };

Dfa product(const Dfa& a, const Dfa& b, BoolOp op) {
    require_same_alphabet(a, b);
    int m = a.num_letters();
    std::map<std::pair<int, int>, int> id_of;
    std::vector<std::pair<int, int>> pairs;
    auto state_id = [&](int x, int y) {
        auto [it, fresh] = id_of.emplace(std::make_pair(x, y), static_cast<int>(pairs.size()));
        if (fresh) pairs.emplace_back(x, y);
        return it->second;
    };
    state_id(a.start, b.start);
    Dfa r;
    r.alphabet = a.alphabet;
    r.start = 0;
    for (size_t s = 0; s < pairs.size(); ++s) {
        auto [x, y] = pairs[s];
        for (int c = 0; c < m; ++c) r.delta.push_back(state_id(a.next(x, c), b.next(y, c)));
        bool acc = false;
        switch (op) {
            case BoolOp::And: acc = a.accepting[x] && b.accepting[y]; break;
            case BoolOp::Or: acc = a.accepting[x] || b.accepting[y]; break;
            case BoolOp::Diff: acc = a.accepting[x] && !b.accepting[y]; break;
        }
        r.accepting.push_back(acc ? 1 : 0);
    }
    r.validate();
    return minimize(r);
}

}  // namespace

bool Dfa::accepts(const Word& w) const {
    int s = start;
    for (CellLetter a : w) s = next(s, letter_index(alphabet, a));
    return accepting[s] != 0;
}

Dfa Dfa::all_words(std::vector<CellLetter> alphabet) {
    Dfa d;
    d.alphabet = std::move(alphabet);
    d.start = 0;
    d.accepting = {1};
    d.delta.assign(d.alphabet.size(), 0);
    return d;
}

Dfa Dfa::empty_language(std::vector<CellLetter> alphabet) {
    Dfa d;
    d.alphabet = std::move(alphabet);
    d.start = 0;
    d.accepting = {0};
    d.delta.assign(d.alphabet.size(), 0);
    return d;
}

void Dfa::validate() const {
    if (start < 0 || start >= num_states()) throw std::logic_error("dfa: start out of range");
    if (delta.size() != static_cast<size_t>(num_states()) * alphabet.size())
        throw std::logic_error("dfa: transition table is not total");
    for (int t : delta)
        if (t < 0 || t >= num_states()) throw std::logic_error("dfa: transition out of range");
    if (!std::is_sorted(alphabet.begin(), alphabet.end()))
        throw std::logic_error("dfa: alphabet must be sorted");
}

Dfa intersect(const Dfa& a, const Dfa& b) { return product(a, b, BoolOp::And); }
Dfa union_of(const Dfa& a, const Dfa& b) { return product(a, b, BoolOp::Or); }
Dfa difference(const Dfa& a, const Dfa& b) { return product(a, b, BoolOp::Diff); }

Dfa complement(const Dfa& a) {
    Dfa r = a;
    for (auto& f : r.accepting) f = f ? 0 : 1;
    return minimize(r);
}

// Moore partition refinement on the reachable part, then breadth-first
// renumbering from the start state.
Dfa minimize(const Dfa& a) {
    a.validate();
    int m = a.num_letters();

    std::vector<char> reach = reachable_states(a);
    std::vector<int> compact(a.num_states(), -1);
    std::vector<int> states;
    for (int s = 0; s < a.num_states(); ++s)
        if (reach[s]) {
            compact[s] = static_cast<int>(states.size());
            states.push_back(s);
        }
    int n = static_cast<int>(states.size());

    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i) cls[i] = a.accepting[states[i]] ? 1 : 0;
    for (;;) {
        std::map<std::vector<int>, int> signature_class;
        std::vector<int> next_cls(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> sig;
            sig.reserve(m + 1);
            sig.push_back(cls[i]);
            for (int c = 0; c < m; ++c) sig.push_back(cls[compact[a.next(states[i], c)]]);
            auto [it, fresh] = signature_class.emplace(std::move(sig),
                                                       static_cast<int>(signature_class.size()));
            next_cls[i] = it->second;
            (void)fresh;
        }
        bool changed = false;
        for (int i = 0; i < n; ++i)
            if (next_cls[i] != cls[i]) changed = true;
        cls = std::move(next_cls);
        if (!changed) break;
    }

    int num_classes = *std::max_element(cls.begin(), cls.end()) + 1;
    // representative transition per class
    std::vector<int> rep(num_classes, -1);
    for (int i = 0; i < n; ++i)
        if (rep[cls[i]] == -1) rep[cls[i]] = i;

    // BFS renumbering from the start class, letters in alphabet order
    std::vector<int> order(num_classes, -1);
    std::queue<int> q;
    int next_id = 0;
    int start_cls = cls[compact[a.start]];
    order[start_cls] = next_id++;
    q.push(start_cls);
    while (!q.empty()) {
        int cc = q.front();
        q.pop();
        for (int c = 0; c < m; ++c) {
            int t = cls[compact[a.next(states[rep[cc]], c)]];
            if (order[t] == -1) {
                order[t] = next_id++;
                q.push(t);
            }
        }
    }

    Dfa r;
    r.alphabet = a.alphabet;
    r.start = 0;
    r.accepting.assign(num_classes, 0);
    r.delta.assign(static_cast<size_t>(num_classes) * m, 0);
    for (int cc = 0; cc < num_classes; ++cc) {
        int id = order[cc];
        r.accepting[id] = a.accepting[states[rep[cc]]];
        for (int c = 0; c < m; ++c)
            r.delta[id * m + c] = order[cls[compact[a.next(states[rep[cc]], c)]]];
    }
    r.validate();
    return r;
}

bool same_language(const Dfa& a, const Dfa& b) {
    Dfa d1 = difference(a, b);
    Dfa d2 = difference(b, a);
    auto empty = [](const Dfa& d) {
        for (int s = 0; s < d.num_states(); ++s)
            if (d.accepting[s]) return false;
        return true;
    };
    return empty(minimize(d1)) && empty(minimize(d2));
}

Dfa subword_avoider(std::vector<CellLetter> alphabet, const std::vector<Word>& forbidden) {
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    for (const Word& w : forbidden)
        if (w.empty()) return Dfa::empty_language(std::move(alphabet));

    int m = static_cast<int>(alphabet.size());
    // per-word progress counters; progress never decreases, m_i means "contains"
    std::vector<std::vector<int>> prog_letters;  // forbidden word as letter indices
    for (const Word& w : forbidden) {
        std::vector<int> ids;
        for (CellLetter a : w) ids.push_back(letter_index(alphabet, a));
        prog_letters.push_back(std::move(ids));
    }

    std::map<std::vector<int>, int> id_of;
    std::vector<std::vector<int>> states;
    auto state_id = [&](const std::vector<int>& st) {
        auto [it, fresh] = id_of.emplace(st, static_cast<int>(states.size()));
        if (fresh) states.push_back(st);
        return it->second;
    };
    state_id(std::vector<int>(forbidden.size(), 0));

    Dfa d;
    d.alphabet = alphabet;
    d.start = 0;
    for (size_t s = 0; s < states.size(); ++s) {
        std::vector<int> cur = states[s];
        bool rejected = false;
        for (size_t i = 0; i < prog_letters.size(); ++i)
            if (cur[i] == static_cast<int>(prog_letters[i].size())) rejected = true;
        for (int c = 0; c < m; ++c) {
            std::vector<int> nxt = cur;
            if (!rejected) {
                for (size_t i = 0; i < prog_letters.size(); ++i)
                    if (nxt[i] < static_cast<int>(prog_letters[i].size()) &&
                        prog_letters[i][nxt[i]] == c)
                        ++nxt[i];
            }
            d.delta.push_back(state_id(nxt));
        }
        d.accepting.push_back(rejected ? 0 : 1);
    }
    d.validate();
    return minimize(d);
}

BigInt count_words(const Dfa& a, int n) {
    if (n < 0) throw std::invalid_argument("count_words: negative length");
    std::vector<BigInt> occ(a.num_states(), BigInt(0));
    occ[a.start] = BigInt(1);
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> nxt(a.num_states(), BigInt(0));
        for (int s = 0; s < a.num_states(); ++s) {
            if (occ[s].is_zero()) continue;
            for (int c = 0; c < a.num_letters(); ++c) nxt[a.next(s, c)] += occ[s];
        }
        occ = std::move(nxt);
    }
    BigInt total(0);
    for (int s = 0; s < a.num_states(); ++s)
        if (a.accepting[s]) total += occ[s];
    return total;
}

namespace {

// fraction-free Bareiss determinant over integer polynomials
Poly poly_det(std::vector<std::vector<Poly>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return Poly(BigInt(1));
    Poly prev(BigInt(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == -1) return Poly();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = Poly::div_exact(num, prev);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

RationalFunction generating_function(const Dfa& a) {
    a.validate();
    std::vector<char> reach = reachable_states(a);
    std::vector<char> coacc = coaccessible_states(a);
    std::vector<int> live;
    std::vector<int> live_id(a.num_states(), -1);
    for (int s = 0; s < a.num_states(); ++s)
        if (reach[s] && coacc[s]) {
            live_id[s] = static_cast<int>(live.size());
            live.push_back(s);
        }

    RationalFunction gf;  // 0/1 for the empty language
    if (!live.empty()) {
        int n = static_cast<int>(live.size());
        // M = I - x T restricted to live states
        std::vector<std::vector<Poly>> mat(n, std::vector<Poly>(n));
        for (int i = 0; i < n; ++i) {
            std::vector<BigInt> row_counts(n, BigInt(0));
            for (int c = 0; c < a.num_letters(); ++c) {
                int t = live_id[a.next(live[i], c)];
                if (t >= 0) row_counts[t] += BigInt(1);
            }
            for (int j = 0; j < n; ++j) {
                Poly entry = Poly::monomial(-row_counts[j], 1);
                if (i == j) entry = entry + Poly(BigInt(1));
                mat[i][j] = std::move(entry);
            }
        }
        Poly den = poly_det(mat);
        // Cramer: replace the start column with the accepting indicator
        int start = live_id[a.start];
        std::vector<std::vector<Poly>> mat2 = mat;
        for (int i = 0; i < n; ++i)
            mat2[i][start] = Poly(BigInt(a.accepting[live[i]] ? 1 : 0));
        Poly num = poly_det(std::move(mat2));
        gf = RationalFunction(std::move(num), std::move(den));
    }

    // built-in consistency check against direct counting
    std::vector<BigInt> coeffs = gf.series(21);
    for (int n = 0; n <= 20; ++n)
        if (coeffs[n] != count_words(a, n))
            throw std::runtime_error("generating_function: series disagrees with word counts");
    return gf;
}

namespace {

struct LiveView {
    std::vector<int> live;                 // original state ids
    std::vector<int> live_id;              // -1 for non-live
};

LiveView live_view(const Dfa& a) {
    LiveView v;
    std::vector<char> reach = reachable_states(a);
    std::vector<char> coacc = coaccessible_states(a);
    v.live_id.assign(a.num_states(), -1);
    for (int s = 0; s < a.num_states(); ++s)
        if (reach[s] && coacc[s]) {
            v.live_id[s] = static_cast<int>(v.live.size());
            v.live.push_back(s);
        }
    return v;
}

}  // namespace

bool is_path_loop_form(const Dfa& a) {
    LiveView v = live_view(a);
    int n = static_cast<int>(v.live.size());
    // cycle search on live states, ignoring self-loops
    std::vector<int> color(n, 0);  // 0 new, 1 active, 2 done
    auto dfs = [&](auto&& self, int i) -> bool {
        color[i] = 1;
        for (int c = 0; c < a.num_letters(); ++c) {
            int t = v.live_id[a.next(v.live[i], c)];
            if (t < 0 || t == i) continue;
            if (color[t] == 1) return false;
            if (color[t] == 0 && !self(self, t)) return false;
        }
        color[i] = 2;
        return true;
    };
    for (int i = 0; i < n; ++i)
        if (color[i] == 0 && !dfs(dfs, i)) return false;
    return true;
}

bool PathTerm::matches(const Word& w) const {
    size_t q = connectors.size();
    // reachable[seg] after each letter; a letter may loop in the current
    // segment or be the connector advancing to the next one
    std::vector<char> reachable(q + 1, 0);
    reachable[0] = 1;
    for (CellLetter a : w) {
        std::vector<char> nxt(q + 1, 0);
        for (size_t seg = 0; seg <= q; ++seg) {
            if (!reachable[seg]) continue;
            if (std::find(loop_alphabets[seg].begin(), loop_alphabets[seg].end(), a) !=
                loop_alphabets[seg].end())
                nxt[seg] = 1;
            if (seg < q && connectors[seg] == a) nxt[seg + 1] = 1;
        }
        reachable = std::move(nxt);
    }
    return reachable[q] != 0;
}

std::string PathTerm::str() const {
    std::string s;
    for (size_t seg = 0; seg < loop_alphabets.size(); ++seg) {
        if (seg) s += " " + letter_str(connectors[seg - 1]) + " ";
        s += "{";
        for (size_t i = 0; i < loop_alphabets[seg].size(); ++i) {
            if (i) s += ' ';
            s += letter_str(loop_alphabets[seg][i]);
        }
        s += "}*";
    }
    return s;
}

std::vector<PathTerm> decompose_paths(const Dfa& a) {
    if (!is_path_loop_form(a))
        throw std::invalid_argument("decompose_paths: automaton is not in path-loop form");
    LiveView v = live_view(a);
    std::vector<PathTerm> out;
    if (v.live_id[a.start] < 0) return out;

    auto loops_of = [&](int state) {
        std::vector<CellLetter> loops;
        for (int c = 0; c < a.num_letters(); ++c)
            if (a.next(state, c) == state) loops.push_back(a.alphabet[c]);
        return loops;
    };

    std::vector<std::vector<CellLetter>> loop_stack;
    std::vector<CellLetter> connector_stack;
    auto dfs = [&](auto&& self, int state) -> void {
        loop_stack.push_back(loops_of(state));
        if (a.accepting[state]) {
            PathTerm term;
            term.loop_alphabets = loop_stack;
            term.connectors = connector_stack;
            out.push_back(std::move(term));
        }
        for (int c = 0; c < a.num_letters(); ++c) {
            int t = a.next(state, c);
            if (t == state || v.live_id[t] < 0) continue;
            connector_stack.push_back(a.alphabet[c]);
            self(self, t);
            connector_stack.pop_back();
        }
        loop_stack.pop_back();
    };
    dfs(dfs, v.live[v.live_id[a.start]]);
    return out;
}

std::string dfa_to_json(const Dfa& a) {
    nlohmann::json j;
    j["states"] = a.num_states();
    std::vector<std::string> letters;
    for (CellLetter c : a.alphabet) letters.push_back(letter_str(c));
    j["alphabet"] = letters;
    j["start"] = a.start;
    std::vector<int> acc;
    for (int s = 0; s < a.num_states(); ++s)
        if (a.accepting[s]) acc.push_back(s);
    j["accepting"] = acc;
    std::vector<std::vector<int>> table(a.num_states());
    for (int s = 0; s < a.num_states(); ++s)
        for (int c = 0; c < a.num_letters(); ++c) table[s].push_back(a.next(s, c));
    j["transitions"] = table;
    return j.dump();
}

Dfa dfa_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Dfa a;
    for (const auto& tok : j.at("alphabet")) a.alphabet.push_back(parse_letter(tok));
    a.start = j.at("start").get<int>();
    int states = j.at("states").get<int>();
    a.accepting.assign(states, 0);
    for (int s : j.at("accepting")) a.accepting.at(s) = 1;
    for (const auto& row : j.at("transitions"))
        for (int t : row) a.delta.push_back(t);
    a.validate();
    return a;
}

}  // namespace geomgrid
