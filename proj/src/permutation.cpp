#include "geomgrid/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace geomgrid {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    int n = static_cast<int>(values_.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : values_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("Permutation: not a bijection on 1..n");
        seen[v] = 1;
    }
}

Permutation Permutation::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n' ||
                             text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) return Permutation();
    std::vector<int> vals;
    if (text.find(',') != std::string_view::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find(',', pos);
            std::string tok(text.substr(pos, next == std::string_view::npos ? next : next - pos));
            if (tok.empty()) throw std::invalid_argument("Permutation: empty token");
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("Permutation: bad token '" + tok + "'");
            vals.push_back(v);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("Permutation: bad character in one-line form");
            vals.push_back(c - '0');
        }
    }
    return Permutation(std::move(vals));
}

std::string Permutation::str() const {
    std::string s;
    if (size() <= 9) {
        for (int v : values_) s += static_cast<char>('0' + v);
    } else {
        for (size_t i = 0; i < values_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(values_[i]);
        }
    }
    return s;
}

bool contains(const Permutation& pattern, const Permutation& host) {
    int k = pattern.size(), n = host.size();
    if (k == 0) return true;
    if (k > n) return false;

    // for each pattern index j: among earlier pattern entries, the position of
    // the largest value below pattern(j) and the smallest above it
    std::vector<int> below(k, -1), above(k, -1);
    for (int j = 0; j < k; ++j) {
        int bv = 0, av = k + 1;
        for (int i = 0; i < j; ++i) {
            int v = pattern.values()[i];
            if (v < pattern.values()[j] && v > bv) {
                bv = v;
                below[j] = i;
            }
            if (v > pattern.values()[j] && v < av) {
                av = v;
                above[j] = i;
            }
        }
    }

    std::vector<int> chosen(k, 0);  // host positions, 0-based
    auto rec = [&](auto&& self, int j, int start) -> bool {
        if (j == k) return true;
        for (int p = start; p <= n - (k - j); ++p) {
            int v = host.values()[p];
            if (below[j] >= 0 && v < host.values()[chosen[below[j]]]) continue;
            if (above[j] >= 0 && v > host.values()[chosen[above[j]]]) continue;
            chosen[j] = p;
            if (self(self, j + 1, p + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

Permutation delete_entry(const Permutation& p, int pos) {
    if (pos < 1 || pos > p.size()) throw std::invalid_argument("delete_entry: position out of range");
    std::vector<int> rest;
    rest.reserve(p.size() - 1);
    for (int i = 1; i <= p.size(); ++i)
        if (i != pos) rest.push_back(p(i));
    return pattern_of(rest);
}

Permutation pattern_of(const std::vector<int>& seq) {
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> vals;
    vals.reserve(seq.size());
    for (int v : seq) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        vals.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(vals));
}

std::vector<std::pair<int, int>> intervals(const Permutation& p) {
    std::vector<std::pair<int, int>> out;
    int n = p.size();
    for (int a = 1; a <= n; ++a) {
        int lo = p(a), hi = p(a);
        for (int b = a; b <= n; ++b) {
            lo = std::min(lo, p(b));
            hi = std::max(hi, p(b));
            if (hi - lo == b - a) out.emplace_back(a, b);
        }
    }
    return out;
}

bool is_simple(const Permutation& p) {
    int n = p.size();
    if (n < 2) return false;
    // trivial intervals: n singletons plus [1,n]
    return intervals(p).size() == static_cast<size_t>(n) + 1;
}

bool is_sum_indecomposable(const Permutation& p) {
    int n = p.size();
    if (n == 0) return false;
    int mx = 0;
    for (int i = 1; i < n; ++i) {
        mx = std::max(mx, p(i));
        if (mx == i) return false;  // prefix maps onto {1..i}
    }
    return true;
}

bool is_skew_indecomposable(const Permutation& p) {
    int n = p.size();
    if (n == 0) return false;
    int mn = n + 1;
    for (int i = 1; i < n; ++i) {
        mn = std::min(mn, p(i));
        if (mn == n - i + 1) return false;  // prefix maps onto the top i values
    }
    return true;
}

Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& parts) {
    int m = skeleton.size();
    if (static_cast<int>(parts.size()) != m)
        throw std::invalid_argument("inflate: need one part per skeleton entry");
    for (const auto& part : parts)
        if (part.empty()) throw std::invalid_argument("inflate: parts must be nonempty");

    // value offset of block i: total size of blocks with smaller skeleton value
    std::vector<int> offset(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (skeleton.values()[j] < skeleton.values()[i])
                offset[i] += parts[j].size();

    std::vector<int> vals;
    for (int i = 0; i < m; ++i)
        for (int v : parts[i].values()) vals.push_back(offset[i] + v);
    return Permutation(std::move(vals));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> vals = a.values();
    for (int v : b.values()) vals.push_back(v + a.size());
    return Permutation(std::move(vals));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> vals;
    for (int v : a.values()) vals.push_back(v + b.size());
    for (int v : b.values()) vals.push_back(v);
    return Permutation(std::move(vals));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> vals(n);
    std::iota(vals.begin(), vals.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(vals));
    } while (std::next_permutation(vals.begin(), vals.end()));
    return out;
}

unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

Permutation nth_permutation(int n, unsigned long long index) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> vals;
    vals.reserve(n);
    for (int i = n; i >= 1; --i) {
        unsigned long long block = factorial(i - 1);
        size_t pick = static_cast<size_t>(index / block);
        index %= block;
        vals.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
    }
    return Permutation(std::move(vals));
}

}  // namespace geomgrid
