#include "salink/perm.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace salink {

Permutation::Permutation(std::vector<int> values) : v_(std::move(values)) {
    const int n = static_cast<int>(v_.size());
    if (n < 1)
        throw std::invalid_argument("permutation: length must be at least 1");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int x : v_) {
        if (x < 1 || x > n)
            throw std::invalid_argument("permutation: value " + std::to_string(x)
                                        + " out of range [1," + std::to_string(n) + "]");
        if (seen[static_cast<size_t>(x - 1)])
            throw std::invalid_argument("permutation: duplicate value " + std::to_string(x));
        seen[static_cast<size_t>(x - 1)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1)
        throw std::invalid_argument("identity: length must be at least 1");
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

int Permutation::operator()(int i) const {
    assert(i >= 1 && i <= size());
    return v_[static_cast<size_t>(i - 1)];
}

int cyclic_value(int x, int n) {
    assert(n >= 1);
    int r = (x - 1) % n;
    if (r < 0)
        r += n;
    return r + 1;
}

Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        v[static_cast<size_t>(p(i) - 1)] = i;
    return Permutation(std::move(v));
}

Permutation compose(const Permutation& p, const Permutation& s) {
    if (p.size() != s.size())
        throw std::invalid_argument("compose: length mismatch");
    const int n = p.size();
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        v[static_cast<size_t>(i - 1)] = p(s(i));
    return Permutation(std::move(v));
}

Permutation shift(const Permutation& p, int k) {
    const int n = p.size();
    if (k < 1 || k > n)
        throw std::invalid_argument("shift: k must be in [1,n]");
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        v[static_cast<size_t>(i - 1)] = cyclic_value(p(i) + k, n);
    return Permutation(std::move(v));
}

DescentSet descents(const Permutation& p) {
    DescentSet d;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1))
            d.push_back(i);
    return d;
}

int orbit_count(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    int cycles = 0;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<size_t>(i - 1)])
            continue;
        ++cycles;
        int j = i;
        while (!seen[static_cast<size_t>(j - 1)]) {
            seen[static_cast<size_t>(j - 1)] = 1;
            j = p(j);
        }
    }
    return cycles;
}

bool is_one_orbit(const Permutation& p) {
    return orbit_count(p) == 1;
}

bool equivalent(const Permutation& p, const Permutation& s) {
    if (p.size() != s.size())
        throw std::invalid_argument("equivalent: length mismatch");
    // s = p+k forces k by the first values; check that one shift only.
    const int n = p.size();
    int k = cyclic_value(s(1) - p(1), n);
    return shift(p, k) == s;
}

Permutation canonical_rep(const Permutation& p) {
    const int n = p.size();
    int k = cyclic_value(n - p(1), n);
    return shift(p, k);
}

} // namespace salink
