#ifndef GEOMGRID_PERMUTATION_HPP
#define GEOMGRID_PERMUTATION_HPP

#include <string>
#include <string_view>
#include <vector>

namespace geomgrid {

// A permutation of {1..n} in one-line notation; n = 0 (empty) is allowed.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);  // validates bijection on 1..n

    // "2413" for n <= 9, comma-separated ("10,2,...") otherwise; "" is empty
    static Permutation parse(std::string_view text);
    std::string str() const;

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    int operator()(int pos) const { return values_[pos - 1]; }  // 1-based
    const std::vector<int>& values() const { return values_; }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.values_ == b.values_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    // length-first, then lexicographic; gives the canonical output order
    friend bool operator<(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.values_ < b.values_;
    }

private:
    std::vector<int> values_;
};

// pattern involvement (sigma <= pi), by backtracking over embeddings
bool contains(const Permutation& pattern, const Permutation& host);

Permutation delete_entry(const Permutation& p, int pos);  // 1-based; throws if out of range

// all index ranges [a,b], 1 <= a <= b <= n, whose value set is contiguous;
// sorted by (a, b)
std::vector<std::pair<int, int>> intervals(const Permutation& p);

bool is_simple(const Permutation& p);
bool is_sum_indecomposable(const Permutation& p);
bool is_skew_indecomposable(const Permutation& p);

Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& parts);

Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

// pattern of an arbitrary sequence of distinct integers
Permutation pattern_of(const std::vector<int>& seq);

std::vector<Permutation> all_permutations(int n);
// index in [0, n!), factorial number system; used to partition S_n across threads
Permutation nth_permutation(int n, unsigned long long index);
unsigned long long factorial(int n);

}  // namespace geomgrid

#endif
