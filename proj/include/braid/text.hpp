#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "braid/word.hpp"

namespace braid {

/// Malformed word text or an index exceeding an explicit strand count.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses whitespace-separated tokens `s<k>` and `s<k>^-1`. Empty input is
/// the identity. Without an explicit strand count, n is inferred as
/// 1 + max index (1 for the empty word).
BraidWord parse_word(const std::string& text, std::optional<int> n = std::nullopt);

/// Inverse of parse_word: tokens joined by single spaces.
std::string format_word(const BraidWord& w);

InfiniteBraidWord parse_infinite_word(const std::string& text);

}  // namespace braid
