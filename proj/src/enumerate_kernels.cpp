#include <algorithm>
#include <numeric>

#include "geomgrid/gridclass.hpp"
#include "geomgrid/trace.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geomgrid {

namespace {

void sort_unique(std::vector<Permutation>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool avoids_all(const std::vector<Permutation>& avoid, const Permutation& p) {
    for (const auto& b : avoid)
        if (contains(b, p)) return false;
    return true;
}

// Enumerate normal-form words of length n below (word, state).  Prefixes of
// normal forms are normal forms, so it suffices to avoid the dead state.
void geom_dfs(const CellAlphabet& alphabet, const Dfa& nf, int n, Word& word, int state,
              const std::vector<Permutation>& avoid, std::vector<Permutation>& out) {
    if (static_cast<int>(word.size()) == n) {
        Permutation p = phi(alphabet, word);
        if (avoids_all(avoid, p)) out.push_back(std::move(p));
        return;
    }
    for (int c = 0; c < nf.num_letters(); ++c) {
        int next = nf.next(state, c);
        if (!nf.accepting[next]) continue;
        word.push_back(nf.alphabet[c]);
        geom_dfs(alphabet, nf, n, word, next, avoid, out);
        word.pop_back();
    }
}

struct Frontier {
    std::vector<Word> words;
    std::vector<int> states;
};

Frontier geom_frontier(const Dfa& nf, int depth) {
    Frontier f;
    f.words.push_back({});
    f.states.push_back(nf.start);
    for (int d = 0; d < depth; ++d) {
        Frontier next;
        for (size_t i = 0; i < f.words.size(); ++i) {
            for (int c = 0; c < nf.num_letters(); ++c) {
                int t = nf.next(f.states[i], c);
                if (!nf.accepting[t]) continue;
                Word w = f.words[i];
                w.push_back(nf.alphabet[c]);
                next.words.push_back(std::move(w));
                next.states.push_back(t);
            }
        }
        f = std::move(next);
    }
    return f;
}

}  // namespace

std::vector<Permutation> enumerate_geom_words_serial(const CellAlphabet& alphabet, int n,
                                                     const std::vector<Permutation>& avoid) {
    Dfa nf = normal_form_automaton(alphabet);
    std::vector<Permutation> out;
    Word word;
    word.reserve(n);
    geom_dfs(alphabet, nf, n, word, nf.start, avoid, out);
    sort_unique(out);
    return out;
}

std::vector<Permutation> enumerate_geom_words_parallel(const CellAlphabet& alphabet, int n,
                                                       const std::vector<Permutation>& avoid) {
#ifndef _OPENMP
    return enumerate_geom_words_serial(alphabet, n, avoid);
#else
    Dfa nf = normal_form_automaton(alphabet);
    int threads = omp_get_max_threads();
    // split at a prefix depth with enough branches to keep every thread busy
    int depth = 0;
    size_t width = 1;
    while (depth < n && width < static_cast<size_t>(8 * threads)) {
        width *= std::max(1, nf.num_letters());
        ++depth;
    }
    Frontier frontier = geom_frontier(nf, depth);

    std::vector<std::vector<Permutation>> partial(frontier.words.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(frontier.words.size()); ++i) {
        Word word = frontier.words[i];
        geom_dfs(alphabet, nf, n, word, frontier.states[i], avoid, partial[i]);
    }

    std::vector<Permutation> out;
    for (auto& part : partial)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    sort_unique(out);
    return out;
#endif
}

std::vector<Permutation> enumerate_grid_filter_serial(const GridMatrix& m, int n,
                                                      const std::vector<Permutation>& avoid) {
    std::vector<Permutation> out;
    for (const auto& p : all_permutations(n))
        if (member_grid(p, m) && avoids_all(avoid, p)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> enumerate_grid_filter_parallel(const GridMatrix& m, int n,
                                                        const std::vector<Permutation>& avoid) {
#ifndef _OPENMP
    return enumerate_grid_filter_serial(m, n, avoid);
#else
    long long total = static_cast<long long>(factorial(n));
    int threads = omp_get_max_threads();
    std::vector<std::vector<Permutation>> partial(threads);
#pragma omp parallel num_threads(threads)
    {
        int tid = omp_get_thread_num();
#pragma omp for schedule(static)
        for (long long idx = 0; idx < total; ++idx) {
            Permutation p = nth_permutation(n, static_cast<unsigned long long>(idx));
            if (member_grid(p, m) && avoids_all(avoid, p)) partial[tid].push_back(std::move(p));
        }
    }
    std::vector<Permutation> out;
    for (auto& part : partial)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    std::sort(out.begin(), out.end());
    return out;
#endif
}

namespace {

// One choice of per-cell point counts for an assembled enumeration.
struct AssemblyPlan {
    std::vector<std::pair<int, int>> cells;  // support cells
    std::vector<int> counts;                 // same order as cells
};

void compositions(int n, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = 0; first <= n; ++first) {
        cur.push_back(first);
        compositions(n - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

// All gridded permutations with the plan's cell counts: choose, per column,
// the row label of each successive position and, per row, the column label
// of each successive value; cell contents pair up monotonically per the sign.
void assemble_plan(const GridMatrix& m, const AssemblyPlan& plan,
                   const std::vector<Permutation>& avoid, std::vector<Permutation>& out) {
    int t = m.cols(), u = m.rows();
    std::vector<std::vector<int>> count(t + 1, std::vector<int>(u + 1, 0));
    for (size_t i = 0; i < plan.cells.size(); ++i)
        count[plan.cells[i].first][plan.cells[i].second] = plan.counts[i];

    std::vector<int> col_size(t + 1, 0), row_size(u + 1, 0);
    for (int k = 1; k <= t; ++k)
        for (int l = 1; l <= u; ++l) {
            col_size[k] += count[k][l];
            row_size[l] += count[k][l];
        }
    std::vector<int> col_off(t + 1, 0), row_off(u + 1, 0);
    for (int k = 1; k <= t; ++k) col_off[k] = col_off[k - 1] + col_size[k - 1];
    for (int l = 1; l <= u; ++l) row_off[l] = row_off[l - 1] + row_size[l - 1];

    // multiset permutations per column (row labels) and per row (column labels)
    std::vector<std::vector<std::vector<int>>> options;
    for (int k = 1; k <= t; ++k) {
        std::vector<int> base;
        for (int l = 1; l <= u; ++l) base.insert(base.end(), count[k][l], l);
        std::vector<std::vector<int>> seqs;
        do {
            seqs.push_back(base);
        } while (std::next_permutation(base.begin(), base.end()));
        options.push_back(std::move(seqs));
    }
    for (int l = 1; l <= u; ++l) {
        std::vector<int> base;
        for (int k = 1; k <= t; ++k) base.insert(base.end(), count[k][l], k);
        std::vector<std::vector<int>> seqs;
        do {
            seqs.push_back(base);
        } while (std::next_permutation(base.begin(), base.end()));
        options.push_back(std::move(seqs));
    }

    int n = col_off[t] + col_size[t];
    std::vector<size_t> pick(options.size(), 0);
    std::vector<int> vals(n);
    for (;;) {
        const auto colseq = [&](int k) -> const std::vector<int>& { return options[k - 1][pick[k - 1]]; };
        const auto rowseq = [&](int l) -> const std::vector<int>& { return options[t + l - 1][pick[t + l - 1]]; };
        for (int k = 1; k <= t; ++k) {
            for (int l = 1; l <= u; ++l) {
                if (count[k][l] == 0) continue;
                std::vector<int> ps, vs;
                for (size_t i = 0; i < colseq(k).size(); ++i)
                    if (colseq(k)[i] == l) ps.push_back(col_off[k] + static_cast<int>(i) + 1);
                for (size_t j = 0; j < rowseq(l).size(); ++j)
                    if (rowseq(l)[j] == k) vs.push_back(row_off[l] + static_cast<int>(j) + 1);
                for (size_t i = 0; i < ps.size(); ++i)
                    vals[ps[i] - 1] = m.at(k, l) == 1 ? vs[i] : vs[ps.size() - 1 - i];
            }
        }
        Permutation p(vals);
        if (avoids_all(avoid, p)) out.push_back(std::move(p));

        // odometer over the option lists
        size_t slot = 0;
        while (slot < options.size()) {
            if (++pick[slot] < options[slot].size()) break;
            pick[slot] = 0;
            ++slot;
        }
        if (slot == options.size()) break;
    }
}

std::vector<AssemblyPlan> assembly_plans(const GridMatrix& m, int n) {
    std::vector<std::pair<int, int>> cells = m.nonzero_cells();
    std::vector<std::vector<int>> splits;
    std::vector<int> cur;
    compositions(n, static_cast<int>(cells.size()), cur, splits);
    std::vector<AssemblyPlan> plans;
    plans.reserve(splits.size());
    for (auto& s : splits) plans.push_back(AssemblyPlan{cells, std::move(s)});
    return plans;
}

}  // namespace

std::vector<Permutation> enumerate_grid_assembled_serial(const GridMatrix& m, int n,
                                                         const std::vector<Permutation>& avoid) {
    std::vector<Permutation> out;
    for (const auto& plan : assembly_plans(m, n)) assemble_plan(m, plan, avoid, out);
    sort_unique(out);
    return out;
}

std::vector<Permutation> enumerate_grid_assembled_parallel(const GridMatrix& m, int n,
                                                           const std::vector<Permutation>& avoid) {
#ifndef _OPENMP
    return enumerate_grid_assembled_serial(m, n, avoid);
#else
    std::vector<AssemblyPlan> plans = assembly_plans(m, n);
    std::vector<std::vector<Permutation>> partial(plans.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(plans.size()); ++i)
        assemble_plan(m, plans[i], avoid, partial[i]);
    std::vector<Permutation> out;
    for (auto& part : partial)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    sort_unique(out);
    return out;
#endif
}

}  // namespace geomgrid
