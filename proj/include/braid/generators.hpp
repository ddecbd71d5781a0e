#pragma once

#include "braid/word.hpp"

namespace braid {

/// The single generator s_i on n strands, 1 <= i <= n-1.
BraidWord artin(int i, int n);

/// The half twist on the first k strands of an n-strand braid:
/// s1 (s2 s1) ... (s_{k-1} ... s1), for 2 <= k <= n.
BraidWord half_twist(int k, int n);

/// (s1 ... s_{n-1})^n; generates the center for n >= 3.
BraidWord full_twist(int n);

/// The pure-braid generator A_{i,j} = (s_{j-1} ... s_{i+1}) s_i^2
/// (s_{i+1}^-1 ... s_{j-1}^-1), 1 <= i < j <= n.
BraidWord pure_generator(int i, int j, int n);

}  // namespace braid
