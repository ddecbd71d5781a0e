#pragma once

#include <cstdint>

#include "braid/word.hpp"

namespace braid {

inline constexpr std::int64_t kDefaultHandleBudget = 1'000'000;

/// Dehornoy handle reduction, always rewriting the handle that closes
/// leftmost. The result is freely reduced and handle-free: empty, or its
/// lowest-index generator occurs with a single sign. Throws if the step
/// budget is exhausted, which indicates a bug (the procedure terminates).
BraidWord handle_reduce(const BraidWord& u, std::int64_t budget = kDefaultHandleBudget);

/// True iff u reduces to the empty word. Independent of the Garside route.
bool handle_reduce_trivial(const BraidWord& u, std::int64_t budget = kDefaultHandleBudget);

}  // namespace braid
