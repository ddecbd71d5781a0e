#pragma once

#include <string>

#include "braid/word.hpp"

namespace braid {

enum class OrderVerdict { Less, Equal, Greater };

enum class PartialVerdict { Less, Equal, Greater, Incomparable };

std::string to_string(OrderVerdict v);
std::string to_string(PartialVerdict v);

/// The Dehornoy left order: u < v iff u^-1 v is sigma-positive, i.e. its
/// handle-reduced form contains its lowest-index generator only with
/// positive sign. A strict total order, invariant under left
/// multiplication but not under right multiplication.
OrderVerdict dehornoy_compare(const BraidWord& u, const BraidWord& v);

/// The partial bi-order induced by the abelianization cone: u < v iff
/// exp(u) < exp(v). Elements with equal exponent sums are Equal when they
/// coincide and Incomparable otherwise. Invariant under multiplication on
/// both sides and under conjugation.
PartialVerdict partial_compare(const BraidWord& u, const BraidWord& v);

/// True iff x^p = y^p while x != y, witnessing failure of the unique root
/// property. Requires p >= 2.
bool root_clash(const BraidWord& x, const BraidWord& y, int p);

}  // namespace braid
