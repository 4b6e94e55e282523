#include "salink/word.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace salink {

Word::Word(std::vector<int> letters, int alphabet_size)
    : letters_(std::move(letters)), k_(alphabet_size) {
    if (letters_.empty())
        throw std::invalid_argument("word: length must be at least 1");
    if (k_ < 1)
        throw std::invalid_argument("word: alphabet size must be at least 1");
    for (int r : letters_)
        if (r < 1 || r > k_)
            throw std::invalid_argument("word: letter rank " + std::to_string(r)
                                        + " out of range [1," + std::to_string(k_) + "]");
}

int Word::letter(int i) const {
    assert(i >= 1 && i <= size());
    return letters_[static_cast<size_t>(i - 1)];
}

ParikhVector::ParikhVector(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty())
        throw std::invalid_argument("parikh vector: alphabet size must be at least 1");
    for (int c : counts_)
        if (c < 0)
            throw std::invalid_argument("parikh vector: counts must be non-negative");
}

int ParikhVector::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

int ParikhVector::count(int j) const {
    assert(j >= 1 && j <= alphabet_size());
    return counts_[static_cast<size_t>(j - 1)];
}

SentinelWord::SentinelWord(Word base, int sentinel_rank)
    : base_(std::move(base)), sentinel_rank_(sentinel_rank) {
    if (sentinel_rank_ < 1 || sentinel_rank_ > base_.alphabet_size() + 1)
        throw std::invalid_argument("sentinel word: sentinel rank out of range [1,k+1]");
}

Word SentinelWord::extended() const {
    std::vector<int> letters;
    letters.reserve(static_cast<size_t>(base_.size()) + 1);
    for (int r : base_.letters())
        letters.push_back(r < sentinel_rank_ ? r : r + 1);
    letters.push_back(sentinel_rank_);
    return Word(std::move(letters), base_.alphabet_size() + 1);
}

namespace {

// Lexicographic order of suffixes starting at a and b (1-based); a proper
// prefix compares smaller than its extension.
bool suffix_less(const std::vector<int>& w, int a, int b) {
    const int n = static_cast<int>(w.size());
    return std::lexicographical_compare(w.begin() + (a - 1), w.end(),
                                        w.begin() + (b - 1), w.end());
}

// Lexicographic order of the cyclic shifts starting at a and b.
bool cyclic_shift_less(const std::vector<int>& w, int a, int b) {
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i) {
        int x = w[static_cast<size_t>((a - 1 + i) % n)];
        int y = w[static_cast<size_t>((b - 1 + i) % n)];
        if (x != y)
            return x < y;
    }
    return false;
}

} // namespace

Permutation suffix_array(const Word& w) {
    std::vector<int> order(static_cast<size_t>(w.size()));
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return suffix_less(w.letters(), a, b); });
    return Permutation(std::move(order));
}

bool is_primitive(const Word& w) {
    const int n = w.size();
    for (int d = 1; d <= n / 2; ++d) {
        if (n % d != 0)
            continue;
        bool periodic = true;
        for (int i = 1; i + d <= n && periodic; ++i)
            periodic = w.letter(i) == w.letter(i + d);
        if (periodic)
            return false;
    }
    return true;
}

Permutation bw_array(const Word& w) {
    if (!is_primitive(w))
        throw std::invalid_argument("bw_array: word is not primitive");
    std::vector<int> order(static_cast<size_t>(w.size()));
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return cyclic_shift_less(w.letters(), a, b); });
    return Permutation(std::move(order));
}

Permutation suffix_array_sentinel(const SentinelWord& sw) {
    return suffix_array(sw.extended());
}

Permutation append_sentinel_perm(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n) + 1);
    v.push_back(n + 1);
    v.insert(v.end(), p.values().begin(), p.values().end());
    return Permutation(std::move(v));
}

Permutation strip_sentinel_perm(const Permutation& p) {
    const int n = p.size();
    if (n < 2)
        throw std::invalid_argument("strip_sentinel_perm: need length at least 2");
    if (p(1) != n)
        throw std::invalid_argument("strip_sentinel_perm: first value must be the maximum");
    std::vector<int> v(p.values().begin() + 1, p.values().end());
    return Permutation(std::move(v));
}

ParikhVector parikh(const Word& w) {
    std::vector<int> counts(static_cast<size_t>(w.alphabet_size()), 0);
    for (int r : w.letters())
        ++counts[static_cast<size_t>(r - 1)];
    return ParikhVector(std::move(counts));
}

} // namespace salink
