#pragma once

#include "salink/perm.hpp"

namespace salink {

/// A permutation certified to have exactly one orbit (an n-cycle).
class LinkingPermutation {
public:
    /// Throws std::invalid_argument unless p has exactly one orbit.
    explicit LinkingPermutation(Permutation p);

    const Permutation& perm() const { return p_; }
    int size() const { return p_.size(); }
    int operator()(int i) const { return p_(i); }

    friend bool operator==(const LinkingPermutation&, const LinkingPermutation&) = default;
    friend auto operator<=>(const LinkingPermutation&, const LinkingPermutation&) = default;

private:
    Permutation p_;
};

/// The linking mapping: phi(p) = inverse(p) * (p+1). Always one-orbit; a
/// violation is a library bug and raises std::logic_error.
LinkingPermutation phi(const Permutation& p);

/// Reconstructs the unique p with p(1) = first and phi(p) = f, by iterating
/// p(f(i)) = p(i)+1 along the orbit.
Permutation unphi(const LinkingPermutation& f, int first);

/// f applied i times to 1, for 1 <= i <= n.
int power_of_one(const LinkingPermutation& f, int i);

} // namespace salink
