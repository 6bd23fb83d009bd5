#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "geomgrid/dfa.hpp"
#include "geomgrid/trace.hpp"
#include "oracles.hpp"

using namespace geomgrid;

namespace {

const CellLetter A{1, 1};
const CellLetter B{2, 2};
const std::vector<CellLetter> AB{A, B};

// words containing no "ba" subword, i.e. a*b*
Dfa ab_star() { return subword_avoider(AB, {Word{B, A}}); }

// words containing the letter a somewhere
Dfa contains_a() { return complement(subword_avoider(AB, {Word{A}})); }

}  // namespace

TEST_CASE("trivial automata") {
    Dfa all = Dfa::all_words(AB);
    CHECK(all.accepts({}));
    CHECK(all.accepts({A, B, B}));
    CHECK(count_words(all, 5) == BigInt(32));

    Dfa none = Dfa::empty_language(AB);
    CHECK_FALSE(none.accepts({}));
    for (int n = 0; n <= 6; ++n) CHECK(count_words(none, n) == BigInt(0));
    CHECK(generating_function(none).str() == "0/1");
}

TEST_CASE("boolean operations agree with word-level semantics") {
    Dfa x = ab_star(), y = contains_a();
    Dfa both = intersect(x, y), either = union_of(x, y), diff = difference(x, y),
        comp = complement(x);
    for (int n = 0; n <= 5; ++n)
        for (const Word& w : oracles::all_words(AB, n)) {
            bool inx = x.accepts(w), iny = y.accepts(w);
            if (both.accepts(w) != (inx && iny)) REQUIRE(false);
            if (either.accepts(w) != (inx || iny)) REQUIRE(false);
            if (diff.accepts(w) != (inx && !iny)) REQUIRE(false);
            if (comp.accepts(w) != !inx) REQUIRE(false);
        }
    CHECK(true);
}

TEST_CASE("complement is an involution and difference with self is empty") {
    Dfa x = minimize(ab_star());
    CHECK(complement(complement(x)) == Dfa(x));  // canonical numbering makes this structural
    Dfa nothing = difference(x, x);
    for (int n = 0; n <= 5; ++n) CHECK(count_words(nothing, n) == BigInt(0));
    Dfa everything = union_of(contains_a(), complement(contains_a()));
    CHECK(same_language(everything, Dfa::all_words(AB)));
    CHECK_THROWS_AS(intersect(x, Dfa::all_words({A})), std::invalid_argument);
}

TEST_CASE("minimize collapses a padded all-words automaton to one state") {
    Dfa padded;
    padded.alphabet = {A};
    padded.start = 0;
    padded.accepting = {1, 1, 1};
    padded.delta = {1, 2, 0};  // 3-cycle, every state accepting
    padded.validate();
    Dfa min = minimize(padded);
    CHECK(min.num_states() == 1);
    CHECK(minimize(min) == min);  // idempotent
}

TEST_CASE("minimized state count matches distinct residuals") {
    Dfa nf = minimize(normal_form_automaton(CellAlphabet(GridMatrix::parse("0 1\n1 0"))));
    // residual fingerprints over short suffixes separate the states
    auto suffixes = [&]() {
        std::vector<Word> out;
        for (int n = 0; n <= 5; ++n)
            for (const Word& w : oracles::all_words(AB, n)) out.push_back(w);
        return out;
    }();
    std::set<std::vector<char>> fingerprints;
    for (int n = 0; n <= 3; ++n)
        for (const Word& prefix : oracles::all_words(AB, n)) {
            std::vector<char> fp;
            for (const Word& suffix : suffixes) {
                Word w = prefix;
                w.insert(w.end(), suffix.begin(), suffix.end());
                fp.push_back(nf.accepts(w) ? 1 : 0);
            }
            fingerprints.insert(std::move(fp));
        }
    CHECK(nf.num_states() == static_cast<int>(fingerprints.size()));
    CHECK(nf.num_states() == 3);  // a*, a*b+, dead
}

TEST_CASE("subword avoider examples") {
    Dfa x = ab_star();
    for (int n = 0; n <= 8; ++n) CHECK(count_words(x, n) == BigInt(n + 1));

    CHECK(subword_avoider(AB, {Word{}}).accepts({}) == false);

    Dfa no_two_a = subword_avoider(AB, {Word{A, A}});
    for (int n = 0; n <= 10; ++n) {
        long long brute = 0;
        for (const Word& w : oracles::all_words(AB, n)) {
            int a_count = 0;
            for (CellLetter c : w)
                if (c == A) ++a_count;
            if (a_count <= 1) ++brute;
        }
        CHECK(count_words(no_two_a, n) == BigInt(brute));
        CHECK(count_words(no_two_a, n) == BigInt(n + 1));
    }
}

TEST_CASE("subword avoiders are closed under deletion") {
    std::vector<std::vector<Word>> forb_sets = {
        {Word{B, A}}, {Word{A, A}}, {Word{A, B, A}, Word{B, B}}};
    for (const auto& forb : forb_sets) {
        Dfa d = subword_avoider(AB, forb);
        for (int n = 1; n <= 6; ++n)
            for (const Word& w : oracles::all_words(AB, n)) {
                if (!d.accepts(w)) continue;
                for (size_t i = 0; i < w.size(); ++i) {
                    Word v = w;
                    v.erase(v.begin() + i);
                    if (!d.accepts(v)) REQUIRE(false);
                }
            }
    }
    CHECK(true);
}

TEST_CASE("generating functions of the stock languages") {
    CHECK(generating_function(Dfa::all_words({A})).str() == "1/(1 - 1*x)");
    CHECK(generating_function(Dfa::all_words(AB)).str() == "1/(1 - 2*x)");
    CHECK(generating_function(minimize(ab_star())).str() == "1/(1 - 2*x + 1*x^2)");

    // a finite language: {epsilon, a}
    Dfa fin = subword_avoider({A}, {Word{A, A}});
    CHECK(generating_function(fin).str() == "(1 + 1*x)/1");
}

TEST_CASE("generating function coefficients equal direct counts") {
    std::vector<Dfa> autos = {ab_star(), contains_a(), subword_avoider(AB, {Word{A, A}, Word{B, B, B}}),
                              minimize(normal_form_automaton(CellAlphabet(GridMatrix::parse("-1 1\n1 -1"))))};
    for (const Dfa& d : autos) {
        auto coeffs = generating_function(d).series(13);
        for (int n = 0; n <= 12; ++n)
            if (coeffs[n] != count_words(d, n)) REQUIRE(false);
    }
    CHECK(true);
}

TEST_CASE("path-loop form detection") {
    CHECK(is_path_loop_form(minimize(ab_star())));
    CHECK(is_path_loop_form(Dfa::all_words(AB)));

    Dfa two_cycle;
    two_cycle.alphabet = {A};
    two_cycle.start = 0;
    two_cycle.accepting = {1, 1};
    two_cycle.delta = {1, 0};
    two_cycle.validate();
    CHECK_FALSE(is_path_loop_form(two_cycle));
    CHECK_THROWS_AS(decompose_paths(two_cycle), std::invalid_argument);
}

TEST_CASE("path decomposition covers the language") {
    std::vector<std::vector<Word>> forb_sets = {
        {Word{B, A}}, {Word{A, A}}, {Word{A, B}, Word{B, A}}, {}};
    for (const auto& forb : forb_sets) {
        Dfa d = subword_avoider(AB, forb);
        auto terms = decompose_paths(d);
        for (int n = 0; n <= 6; ++n)
            for (const Word& w : oracles::all_words(AB, n)) {
                bool in_union = false;
                for (const auto& t : terms)
                    if (t.matches(w)) {
                        in_union = true;
                        break;
                    }
                if (in_union != d.accepts(w)) REQUIRE(false);
            }
    }
    CHECK(true);
}

TEST_CASE("path terms of a*b*") {
    auto terms = decompose_paths(minimize(ab_star()));
    REQUIRE(terms.size() == 2);
    // one term per simple path: a* and a* b b*
    CHECK(terms[0].connectors.empty());
    CHECK(terms[0].loop_alphabets == std::vector<std::vector<CellLetter>>{{A}});
    REQUIRE(terms[1].connectors.size() == 1);
    CHECK(terms[1].connectors[0] == B);
    CHECK(terms[1].loop_alphabets == std::vector<std::vector<CellLetter>>{{A}, {B}});
}

TEST_CASE("single state term for the full language") {
    auto terms = decompose_paths(Dfa::all_words(AB));
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].connectors.empty());
    CHECK(terms[0].loop_alphabets == std::vector<std::vector<CellLetter>>{AB});
}

TEST_CASE("word counts stay exact past the 64-bit range") {
    std::vector<CellLetter> nine;
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) nine.push_back(CellLetter{k, l});
    std::sort(nine.begin(), nine.end());
    Dfa all = Dfa::all_words(nine);
    CHECK(count_words(all, 20) == BigInt::from_string("12157665459056928801"));  // 9^20
    CHECK(count_words(all, 25).str() == "717897987691852588770249");            // 9^25
}

TEST_CASE("json round trip") {
    Dfa d = minimize(ab_star());
    Dfa back = dfa_from_json(dfa_to_json(d));
    CHECK(back == Dfa(d));
    CHECK(same_language(back, d));
}
