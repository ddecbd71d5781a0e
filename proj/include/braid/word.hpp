#pragma once

#include <vector>

#include "braid/permutation.hpp"

namespace braid {

/// One crossing: the Artin generator with this index, possibly inverted.
struct Letter {
    int index = 1;   // 1 <= index <= n-1
    int sign = 1;    // +1 or -1

    Letter inverse() const { return {index, -sign}; }
    bool operator==(const Letter& o) const { return index == o.index && sign == o.sign; }
    bool operator!=(const Letter& o) const { return !(*this == o); }
};

/// A word in the Artin generators of the braid group on n strands. The
/// empty word is the identity. Words are kept as written; compose() is the
/// only operation that freely reduces.
class BraidWord {
public:
    BraidWord() : n_(1) {}
    explicit BraidWord(int n) : n_(n) { check_n(); }
    BraidWord(int n, std::vector<Letter> letters);

    int n() const { return n_; }
    const std::vector<Letter>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    bool operator==(const BraidWord& o) const { return n_ == o.n_ && letters_ == o.letters_; }
    bool operator!=(const BraidWord& o) const { return !(*this == o); }

private:
    void check_n() const;
    int n_;
    std::vector<Letter> letters_;
};

/// Cancels adjacent inverse pairs until none remain.
std::vector<Letter> free_reduce(const std::vector<Letter>& letters);

/// Concatenation followed by free reduction. Throws on strand mismatch.
BraidWord compose(const BraidWord& u, const BraidWord& v);

BraidWord inverse(const BraidWord& u);

/// u^k for any integer k (k < 0 uses the inverse).
BraidWord power(const BraidWord& u, int k);

/// The permutation homomorphism: each generator index i maps to the swap
/// (i, i+1), and the leftmost letter acts first.
Permutation permutation_of(const BraidWord& u);

bool is_pure(const BraidWord& u);

/// Sum of the letter signs; the abelianization of the braid group.
int exponent_sum(const BraidWord& u);

/// Deletes the strand starting at position i (1-based) together with every
/// crossing it participates in, and reindexes the remaining letters. The
/// result lives on n-1 strands. Restricted to pure braids this is the
/// strand-forgetting homomorphism.
BraidWord forget_strand(const BraidWord& u, int i);

/// Same letters, one more strand.
BraidWord stabilize(const BraidWord& u);

/// A braid on infinitely many strands: finitely many crossings, any index
/// >= 1. Realized on its minimal strand count by embed_infinite().
class InfiniteBraidWord {
public:
    InfiniteBraidWord() = default;
    explicit InfiniteBraidWord(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }

    /// 1 + max index; 1 for the empty word.
    int min_strand_count() const;

private:
    std::vector<Letter> letters_;
};

BraidWord embed_infinite(const InfiniteBraidWord& u);

}  // namespace braid
