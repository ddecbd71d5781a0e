#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace braid {

/// A bijection of {1..n}. Composition follows the word order used across
/// this library: p.then(q) applies p first, then q.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n);

    /// Swaps i and i+1, fixes everything else.
    static Permutation adjacent_transposition(int n, int i);

    /// Swaps a and b (a != b).
    static Permutation transposition(int n, int a, int b);

    /// i -> n+1-i. This is the permutation of the half twist on n strands.
    static Permutation reversal(int n);

    /// Builds from a 1-based image list; throws if it is not a bijection.
    static Permutation from_images(std::vector<int> images);

    int n() const { return static_cast<int>(img_.size()); }

    /// Image of i, 1-based.
    int image(int i) const { return img_[static_cast<size_t>(i - 1)]; }

    /// One-line notation: images of 1..n.
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;

    /// (this.then(q))(x) = q(this(x)).
    Permutation then(const Permutation& q) const;

    Permutation inverse() const;

    /// Smallest k >= 1 with p^k = identity.
    int order() const;

    /// Number of inversions; the crossing count of the permutation braid.
    int inversions() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    /// One-line images joined by spaces, e.g. "2 3 1".
    std::string to_string() const;

private:
    explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
    std::vector<int> img_;
};

/// Nontrivial cycles of p, each cycle starting at its smallest element,
/// cycles ordered by descending length, then by smallest element.
std::vector<std::vector<int>> nontrivial_cycles(const Permutation& p);

/// Multiset of nontrivial cycle lengths, parts sorted descending.
struct CycleType {
    std::vector<int> parts;
    int n = 0;

    bool empty() const { return parts.empty(); }
    int sum() const;
    bool operator==(const CycleType& o) const { return parts == o.parts; }
    bool operator!=(const CycleType& o) const { return parts != o.parts; }
    std::string to_string() const;
};

CycleType cycle_type(const Permutation& p);

/// A shortest factorization of p into adjacent transpositions, returned as
/// 1-based generator indices ordered so that applying them left to right
/// (each index i acting as the swap (i, i+1)) reproduces p. The length
/// equals p.inversions().
std::vector<int> reduced_word(const Permutation& p);

/// Unique tau with tau conjugating `from` onto `to` on matched cycles:
/// tau(from(x)) = to(tau(x)) for all x. Requires equal cycle types.
Permutation conjugating_permutation(const Permutation& from, const Permutation& to);

}  // namespace braid
