#pragma once

#include <string>
#include <vector>

#include "braid/word.hpp"

namespace braid {

/// Left-greedy Garside normal form D^p s_1 ... s_k, where D is the half
/// twist on n strands and each factor s_j is a permutation braid (every
/// pair of strands crosses at most once), stored as its permutation.
/// Invariants: no factor is trivial or equals D, consecutive factors are
/// left-weighted, and p is maximal. Two words represent the same group
/// element exactly when their normal forms compare equal.
struct GarsideNormalForm {
    int n = 1;
    int delta_power = 0;
    std::vector<Permutation> factors;

    int canonical_length() const { return static_cast<int>(factors.size()); }
    bool is_trivial() const { return delta_power == 0 && factors.empty(); }

    bool operator==(const GarsideNormalForm& o) const {
        return n == o.n && delta_power == o.delta_power && factors == o.factors;
    }
    bool operator!=(const GarsideNormalForm& o) const { return !(*this == o); }

    /// A braid word representing the same element: the half-twist word
    /// raised to delta_power, followed by one reduced positive word per
    /// factor.
    BraidWord word() const;

    /// Pinned text format, e.g. "D^-1 | 3 1 2 | 1 3 2 | 2 3 1".
    std::string to_string() const;
};

GarsideNormalForm normal_form(const BraidWord& u);

struct EqualityVerdict {
    bool equal = false;
    GarsideNormalForm left_normal_form;
    GarsideNormalForm right_normal_form;
};

/// Decides u = v in the braid group. Throws on strand mismatch.
EqualityVerdict equal(const BraidWord& u, const BraidWord& v);

bool is_trivial(const BraidWord& u);

/// [x, y] = x y x^-1 y^-1 as a (freely reduced) word.
BraidWord commutator(const BraidWord& x, const BraidWord& y);

/// x^w = w x w^-1 as a (freely reduced) word.
BraidWord conjugate(const BraidWord& x, const BraidWord& w);

// Structure of permutation braids, exposed for validity checks.

/// Generators s_i left-dividing the permutation braid of p:
/// {i : p(i) > p(i+1)}.
std::vector<int> left_descents(const Permutation& p);

/// Generators s_i right-dividing the permutation braid of p.
std::vector<int> right_descents(const Permutation& p);

/// True when no left divisor of b can be absorbed into a, i.e. the
/// descent condition LD(b) subset of RD(a) holds.
bool is_left_weighted(const Permutation& a, const Permutation& b);

}  // namespace braid
