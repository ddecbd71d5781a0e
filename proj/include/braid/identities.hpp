#pragma once

#include <string>
#include <vector>

namespace braid {

struct IdentityCheck {
    std::string name;
    std::string params;
    bool passed = false;
};

struct IdentityReport {
    int n_max = 0;
    std::vector<IdentityCheck> checks;

    int failures() const;
    bool all_passed() const { return failures() == 0; }
};

/// Verifies, by normal form, the identity inventory on which the
/// certificate machinery rests:
///   - (s1 s2^2)^2 = (s2^2 s1)^2 in B_3;
///   - (s1 s2)^3 = (s2 s1)^3 in B_3;
///   - (A_{1,2} D_i A_{1,2}^-1)^2 = D_i^2 for 3 <= i <= n_max;
///   - s_i D_k = D_k s_{k-i} for 1 <= i < k <= n_max;
///   - the permutation of D_k is the product of the swaps (l, k+1-l),
///     for 2 <= k <= n_max + 1;
///   - D_n^2 commutes with every generator for 3 <= n <= n_max;
///   - (A_{1,2} a a^-1-conjugation identities for every cycle layout with
///     largest part >= 3 fitting in n_max strands.
/// Requires n_max >= 3.
IdentityReport run_identity_suite(int n_max);

}  // namespace braid
