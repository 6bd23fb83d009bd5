// geomgrid: command-line front end for grid-class computations.
// Exit codes: 0 success, 1 negative/domain results, 2 usage errors.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "geomgrid/atomic.hpp"
#include "geomgrid/gridclass.hpp"
#include "geomgrid/trace.hpp"
#include "json.hpp"

using namespace geomgrid;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Permutation> read_permutation_lines(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<Permutation> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (!trimmed.empty()) out.push_back(Permutation::parse(trimmed));
    }
    return out;
}

std::vector<Word> read_word_lines(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<Word> out;
    std::string line;
    while (std::getline(in, line)) {
        bool blank = true;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) out.push_back(parse_word(line));
    }
    return out;
}

std::vector<int> parse_sign_string(const std::string& s) {
    std::vector<int> out;
    for (char c : s) {
        if (c == '+')
            out.push_back(1);
        else if (c == '-')
            out.push_back(-1);
        else
            throw std::invalid_argument("signs must be written with '+' and '-'");
    }
    return out;
}

CellAlphabet alphabet_for(const GridMatrix& m, const std::string& col_signs,
                          const std::string& row_signs) {
    if (col_signs.empty() != row_signs.empty())
        throw std::invalid_argument("give both --col-signs and --row-signs or neither");
    if (col_signs.empty()) return CellAlphabet(m);
    return CellAlphabet(m, SignAssignment{parse_sign_string(col_signs), parse_sign_string(row_signs)});
}

int print_bool(bool value) {
    std::cout << (value ? "true" : "false") << "\n";
    return value ? 0 : 1;
}

void print_permutations(const std::vector<Permutation>& ps, bool as_json) {
    if (as_json) {
        json out = json::array();
        for (const auto& p : ps) out.push_back(p.str());
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& p : ps) std::cout << p.str() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric grid classes of permutations: encodings, automata, "
                 "generating functions, bases and atomic decompositions"};
    app.require_subcommand(1);
    app.fallthrough();

    long long seed = 0;  // reserved for reproducible randomized workflows
    app.add_option("--seed", seed, "random seed (reserved, default 0)");

    int exit_code = 0;

    // shared option storage
    std::string matrix_path, word_text, word_text2, perm_text, perm_text2;
    std::string avoid_path, forbidden_path, col_signs, row_signs;
    int len = -1, max_len = -1, q = 2, bound = 8;
    bool as_json = false, use_geom = false, use_grid = false, use_gridded = false;
    bool f_simple = false, f_sum = false, f_skew = false;

    auto load_matrix = [&]() { return GridMatrix::parse(read_file(matrix_path)); };
    auto load_avoid = [&]() {
        return avoid_path.empty() ? std::vector<Permutation>{} : read_permutation_lines(avoid_path);
    };
    auto make_class = [&]() {
        if (use_geom == use_grid)
            throw std::invalid_argument("choose exactly one of --geom and --grid");
        return use_geom ? ClassSpec::geom(load_matrix(), load_avoid())
                        : ClassSpec::grid(load_matrix(), load_avoid());
    };

    {
        auto* c = app.add_subcommand("parse-check", "validate a matrix file and echo it normalized");
        c->add_option("matrix", matrix_path, "matrix file")->required();
        c->callback([&] {
            std::string text = read_file(matrix_path);
            try {
                std::cout << GridMatrix::parse(text).str();
            } catch (const std::invalid_argument&) {
                std::cout << DottedMatrix::parse(text).str();
            }
        });
    }
    {
        auto* c = app.add_subcommand("refine", "blow each entry up into a q x q block");
        c->add_option("matrix", matrix_path)->required();
        c->add_option("--q", q, "refinement factor")->required();
        c->callback([&] { std::cout << refine(load_matrix(), q).str(); });
    }
    {
        auto* c = app.add_subcommand("signs", "column and row signs certifying a partial multiplication matrix");
        c->add_option("matrix", matrix_path)->required();
        c->callback([&] {
            auto s = infer_signs(load_matrix());
            if (!s) {
                std::cout << "none\n";
                exit_code = 1;
                return;
            }
            std::cout << "c:";
            for (int v : s->col_signs) std::cout << (v > 0 ? " +1" : " -1");
            std::cout << "\nr:";
            for (int v : s->row_signs) std::cout << (v > 0 ? " +1" : " -1");
            std::cout << "\n";
        });
    }
    {
        auto* c = app.add_subcommand("forest", "whether the cell graph is acyclic");
        c->add_option("matrix", matrix_path)->required();
        c->callback([&] { exit_code = print_bool(is_forest(load_matrix())); });
    }
    {
        auto* c = app.add_subcommand("phi", "map a word over the cell alphabet to a permutation");
        c->add_option("matrix", matrix_path)->required();
        c->add_option("word", word_text, "space-separated letters col,row")->required();
        c->add_option("--col-signs", col_signs, "signs like -++ (default: inferred)");
        c->add_option("--row-signs", row_signs, "signs like -+ (default: inferred)");
        c->callback([&] {
            CellAlphabet a = alphabet_for(load_matrix(), col_signs, row_signs);
            std::cout << phi(a, parse_word(word_text)).str() << "\n";
        });
    }
    {
        auto* c = app.add_subcommand("phisharp", "map a word to a gridded permutation");
        c->add_option("matrix", matrix_path)->required();
        c->add_option("word", word_text)->required();
        c->add_option("--col-signs", col_signs);
        c->add_option("--row-signs", row_signs);
        c->callback([&] {
            CellAlphabet a = alphabet_for(load_matrix(), col_signs, row_signs);
            std::cout << phi_sharp(a, parse_word(word_text)).str() << "\n";
        });
    }
    {
        auto* c = app.add_subcommand("normal-form", "lexicographically least word in the trace");
        c->add_option("matrix", matrix_path)->required();
        c->add_option("word", word_text)->required();
        c->callback([&] {
            CellAlphabet a(load_matrix());
            std::cout << word_str(normal_form(a, parse_word(word_text))) << "\n";
        });
    }
    {
        auto* c = app.add_subcommand("trace-eq", "whether two words lie in the same trace");
        c->add_option("matrix", matrix_path)->required();
        c->add_option("word1", word_text)->required();
        c->add_option("word2", word_text2)->required();
        c->callback([&] {
            CellAlphabet a(load_matrix());
            exit_code = print_bool(trace_equivalent(a, parse_word(word_text), parse_word(word_text2)));
        });
    }
    {
        auto* c = app.add_subcommand("gf", "exact rational generating function");
        c->add_option("matrix", matrix_path)->required();
        c->add_flag("--gridded", use_gridded, "of the gridded class (required)");
        c->add_flag("--json", as_json);
        c->callback([&] {
            if (!use_gridded)
                throw std::invalid_argument("only gridded generating functions are available; pass --gridded");
            RationalFunction gf = gridded_gf(load_matrix());
            if (as_json) {
                json out;
                json num = json::array(), den = json::array();
                for (int i = 0; i <= gf.numerator().degree(); ++i)
                    num.push_back(gf.numerator().coeff(i).str());
                for (int i = 0; i <= gf.denominator().degree(); ++i)
                    den.push_back(gf.denominator().coeff(i).str());
                out["numerator"] = num;
                out["denominator"] = den;
                out["text"] = gf.str();
                std::cout << out.dump() << "\n";
            } else {
                std::cout << gf.str() << "\n";
            }
        });
    }
    {
        auto* c = app.add_subcommand("count", "count members by length");
        c->add_option("matrix", matrix_path)->required();
        c->add_flag("--gridded", use_gridded, "count gridded permutations");
        c->add_flag("--geom", use_geom);
        c->add_flag("--grid", use_grid);
        c->add_option("--len", len);
        c->add_option("--max-len", max_len);
        c->add_option("--avoid", avoid_path, "newline-separated patterns to avoid");
        c->add_flag("--json", as_json);
        c->callback([&] {
            if (len < 0 && max_len < 0) throw std::invalid_argument("give --len or --max-len");
            int lo = len >= 0 ? len : 0, hi = len >= 0 ? len : max_len;
            std::vector<std::pair<int, std::string>> counts;
            for (int n = lo; n <= hi; ++n) {
                std::string value;
                if (use_gridded) {
                    if (!avoid_path.empty())
                        throw std::invalid_argument("--avoid does not apply to gridded counts");
                    value = gridded_count(load_matrix(), n).str();
                } else {
                    value = std::to_string(enumerate(make_class(), n).size());
                }
                counts.emplace_back(n, value);
            }
            if (as_json) {
                json out;
                for (const auto& [n, v] : counts) out[std::to_string(n)] = v;
                std::cout << out.dump() << "\n";
            } else if (len >= 0) {
                std::cout << counts[0].second << "\n";
            } else {
                for (const auto& [n, v] : counts) std::cout << n << ": " << v << "\n";
            }
        });
    }
    {
        auto* c = app.add_subcommand("enum", "list the members of a class by length");
        c->add_option("matrix", matrix_path)->required();
        c->add_flag("--geom", use_geom);
        c->add_flag("--grid", use_grid);
        c->add_option("--len", len)->required();
        c->add_option("--avoid", avoid_path);
        c->add_flag("--json", as_json);
        c->callback([&] { print_permutations(enumerate(make_class(), len), as_json); });
    }
    {
        auto* c = app.add_subcommand("member", "membership of a permutation in a class");
        c->add_option("matrix", matrix_path)->required();
        c->add_flag("--geom", use_geom);
        c->add_flag("--grid", use_grid);
        c->add_option("perm", perm_text)->required();
        c->add_option("--avoid", avoid_path);
        c->callback([&] { exit_code = print_bool(member(make_class(), Permutation::parse(perm_text))); });
    }
    {
        auto* c = app.add_subcommand("mingrid", "minimal geometric gridding of a permutation");
        c->add_option("matrix", matrix_path)->required();
        c->add_option("perm", perm_text)->required();
        c->add_flag("--json", as_json);
        c->callback([&] {
            GriddedPermutation g = min_gridding(Permutation::parse(perm_text), load_matrix());
            if (as_json) {
                json out;
                out["perm"] = g.perm.str();
                out["colCuts"] = std::vector<int>(g.col_cuts.begin() + 1, g.col_cuts.end() - 1);
                out["rowCuts"] = std::vector<int>(g.row_cuts.begin() + 1, g.row_cuts.end() - 1);
                std::cout << out.dump() << "\n";
            } else {
                std::cout << g.str() << "\n";
            }
        });
    }
    {
        auto* c = app.add_subcommand("basis", "minimal forbidden patterns up to a length");
        c->add_option("matrix", matrix_path)->required();
        c->add_flag("--geom", use_geom);
        c->add_flag("--grid", use_grid);
        c->add_option("--max-len", max_len)->required();
        c->add_option("--avoid", avoid_path);
        c->add_flag("--json", as_json);
        c->callback([&] {
            BasisResult b = basis(make_class(), max_len);
            if (as_json) {
                json out;
                json elems = json::array();
                for (const auto& p : b.elements) elems.push_back(p.str());
                out["basis"] = elems;
                out["maxLen"] = b.max_len;
                out["provablyComplete"] = b.provably_complete;
                std::cout << out.dump() << "\n";
            } else {
                for (const auto& p : b.elements) std::cout << p.str() << "\n";
                std::cout << "# partial up to length " << b.max_len << "\n";
            }
        });
    }
    {
        auto* c = app.add_subcommand("census", "members passing a structural filter");
        c->add_option("matrix", matrix_path)->required();
        c->add_flag("--geom", use_geom);
        c->add_flag("--grid", use_grid);
        c->add_option("--len", len)->required();
        c->add_flag("--simple", f_simple);
        c->add_flag("--sum-indec", f_sum);
        c->add_flag("--skew-indec", f_skew);
        c->add_option("--avoid", avoid_path);
        c->add_flag("--json", as_json);
        c->callback([&] {
            int picked = (f_simple ? 1 : 0) + (f_sum ? 1 : 0) + (f_skew ? 1 : 0);
            if (picked > 1)
                throw std::invalid_argument("choose at most one of --simple, --sum-indec, --skew-indec");
            CensusFilter f = f_simple  ? CensusFilter::Simple
                             : f_sum   ? CensusFilter::SumIndec
                             : f_skew  ? CensusFilter::SkewIndec
                                       : CensusFilter::All;
            print_permutations(census(make_class(), len, f), as_json);
        });
    }
    {
        auto* c = app.add_subcommand("decompose", "atomic decomposition into dot-isolated matrices");
        c->add_option("matrix", matrix_path)->required();
        c->add_option("--forbidden", forbidden_path, "newline-separated forbidden subwords");
        c->add_flag("--json", as_json);
        c->callback([&] {
            std::vector<Word> forbidden =
                forbidden_path.empty() ? std::vector<Word>{} : read_word_lines(forbidden_path);
            auto atoms = decompose_to_atoms(load_matrix(), forbidden);
            if (as_json) {
                json out = json::array();
                for (const auto& d : atoms) out.push_back(d.str());
                std::cout << out.dump() << "\n";
            } else {
                for (size_t i = 0; i < atoms.size(); ++i) {
                    if (i) std::cout << "\n";
                    std::cout << atoms[i].str();
                }
            }
        });
    }
    {
        auto* c = app.add_subcommand("joint-embed", "a member containing both given permutations");
        c->add_option("matrix", matrix_path, "dot-isolated matrix file")->required();
        c->add_option("perm1", perm_text)->required();
        c->add_option("perm2", perm_text2)->required();
        c->add_option("--bound", bound, "largest length to search");
        c->callback([&] {
            DottedMatrix d = DottedMatrix::parse(read_file(matrix_path));
            auto tau = joint_embed(d, Permutation::parse(perm_text), Permutation::parse(perm_text2), bound);
            if (tau) {
                std::cout << tau->str() << "\n";
            } else {
                std::cout << "none\n";
                exit_code = 1;
            }
        });
    }
    {
        auto* c = app.add_subcommand("verify-forest", "check Grid = Geom through a length");
        c->add_option("matrix", matrix_path)->required();
        c->add_option("--len", len)->required();
        c->callback([&] { exit_code = print_bool(verify_forest_equality(load_matrix(), len)); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
