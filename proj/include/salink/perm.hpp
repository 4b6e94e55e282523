#pragma once

#include <compare>
#include <vector>

namespace salink {

/// A permutation of [1,n]. Positions and values are 1-based everywhere;
/// internally values() holds v[i-1] = p(i).
class Permutation {
public:
    /// Validates that `values` is a rearrangement of {1,...,n}, n >= 1.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(v_.size()); }

    /// p(i) for 1 <= i <= n.
    int operator()(int i) const;

    const std::vector<int>& values() const { return v_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> v_;
};

/// Descent positions in strictly increasing order, each in [1, n-1].
using DescentSet = std::vector<int>;

/// ((x-1) mod n) + 1 for any integer x. The single wraparound rule of the
/// library: value n+1 becomes 1, value 0 becomes n.
int cyclic_value(int x, int n);

Permutation inverse(const Permutation& p);

/// (p*s)(i) = p(s(i)). Lengths must match.
Permutation compose(const Permutation& p, const Permutation& s);

/// The cyclic value shift p+k: result(i) = ((p(i)-1+k) mod n)+1, with
/// 1 <= k <= n. shift(p, n) == p.
Permutation shift(const Permutation& p, int k);

/// All i in [1, n-1] with p(i) > p(i+1).
DescentSet descents(const Permutation& p);

/// Number of cycles in the cycle decomposition.
int orbit_count(const Permutation& p);

bool is_one_orbit(const Permutation& p);

/// True iff s = p+k for some k in [1,n].
bool equivalent(const Permutation& p, const Permutation& s);

/// The unique member of p's shift class whose first value is n.
Permutation canonical_rep(const Permutation& p);

} // namespace salink
