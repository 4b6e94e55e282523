#include "salink/linking.hpp"

#include <stdexcept>
#include <utility>

namespace salink {

LinkingPermutation::LinkingPermutation(Permutation p) : p_(std::move(p)) {
    if (!is_one_orbit(p_))
        throw std::invalid_argument("linking permutation: must have exactly one orbit");
}

LinkingPermutation phi(const Permutation& p) {
    Permutation f = compose(inverse(p), shift(p, 1));
    if (!is_one_orbit(f))
        throw std::logic_error("phi: result is not one-orbit");
    return LinkingPermutation(std::move(f));
}

Permutation unphi(const LinkingPermutation& f, int first) {
    const int n = f.size();
    if (first < 1 || first > n)
        throw std::invalid_argument("unphi: first value out of range [1,n]");
    std::vector<int> v(static_cast<size_t>(n), 0);
    int pos = 1;
    int val = first;
    v[0] = first;
    for (int step = 1; step < n; ++step) {
        pos = f(pos);
        val = cyclic_value(val + 1, n);
        v[static_cast<size_t>(pos - 1)] = val;
    }
    return Permutation(std::move(v));
}

int power_of_one(const LinkingPermutation& f, int i) {
    if (i < 1 || i > f.size())
        throw std::invalid_argument("power_of_one: exponent out of range [1,n]");
    int x = 1;
    for (int step = 0; step < i; ++step)
        x = f(x);
    return x;
}

} // namespace salink
