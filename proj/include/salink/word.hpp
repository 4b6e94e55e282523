#pragma once

#include "salink/perm.hpp"

#include <compare>
#include <vector>

namespace salink {

/// A word over an ordered alphabet a_1 < ... < a_k, stored as letter ranks
/// in [1,k]. Ranks, not characters: text mapping lives in text_io.
class Word {
public:
    Word(std::vector<int> letters, int alphabet_size);

    int size() const { return static_cast<int>(letters_.size()); }
    int alphabet_size() const { return k_; }

    /// Rank of the letter at position i, 1-based.
    int letter(int i) const;

    const std::vector<int>& letters() const { return letters_; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
    int k_;
};

/// Per-letter occurrence counts (r_1,...,r_k); zero counts are allowed.
class ParikhVector {
public:
    explicit ParikhVector(std::vector<int> counts);

    int alphabet_size() const { return static_cast<int>(counts_.size()); }
    int total() const;

    /// r_j for 1 <= j <= k.
    int count(int j) const;

    const std::vector<int>& counts() const { return counts_; }

    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
    friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;

private:
    std::vector<int> counts_;
};

/// A word with one sentinel appended at the last position. sentinel_rank is
/// the sentinel's rank within the extended (k+1)-letter order: 1 makes it
/// smallest, rank j places it between a_{j-1} and a_j.
class SentinelWord {
public:
    SentinelWord(Word base, int sentinel_rank);

    const Word& base() const { return base_; }
    int sentinel_rank() const { return sentinel_rank_; }

    /// The (n+1)-letter word over the extended alphabet; base letters are
    /// re-ranked around the sentinel, the sentinel sits at position n+1.
    Word extended() const;

private:
    Word base_;
    int sentinel_rank_;
};

/// result(i) = start position of the i-th lexicographically smallest suffix.
/// Naive comparison sort; doubles as the oracle-grade reference.
Permutation suffix_array(const Word& w);

/// True iff w is not a proper power v^m, m > 1.
bool is_primitive(const Word& w);

/// result(i) = start position of the i-th smallest cyclic shift. Rejects
/// non-primitive words (their shifts are not all distinct).
Permutation bw_array(const Word& w);

/// Suffix array of sw.extended(). Equals bw_array(sw.extended()) for every
/// sentinel rank, since the extended word is automatically primitive.
Permutation suffix_array_sentinel(const SentinelWord& sw);

/// Maps s in S_n to (n+1) s(1) ... s(n) in S_{n+1}.
Permutation append_sentinel_perm(const Permutation& p);

/// Inverts append_sentinel_perm; rejects inputs whose first value is not the
/// maximum.
Permutation strip_sentinel_perm(const Permutation& p);

ParikhVector parikh(const Word& w);

} // namespace salink
