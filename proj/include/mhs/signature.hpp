#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mhslab {

// Exponent signature (s_1, ..., s_l) of a multiple harmonic sum. Entries are
// nonzero integers; a negative entry makes the corresponding index alternate.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<long> entries);
    Signature(std::initializer_list<long> entries)
        : Signature(std::vector<long>(entries)) {}

    const std::vector<long>& entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    long entry(std::size_t i) const { return entries_[i]; }

    // sum of |s_i|
    long weight() const;
    bool all_positive() const;

    bool operator==(const Signature& o) const = default;
    auto operator<=>(const Signature& o) const = default;

    // "(1,-2,3)"; "()" when empty
    std::string str() const;

private:
    std::vector<long> entries_;
};

// Text format accepted across the CLI: "(1,-2,3)", optionally without the
// parentheses, with repetition macros "{2}^3" -> 2,2,2 and "{1,2}^2" -> 1,2,1,2.
Signature parse_signature(const std::string& text);

// t with cut points 0 = j_0 < j_1 < ... < j_l = length(t); block i of the
// induced coarsening sums entries (j_{i-1}, j_i].
struct Composition {
    Signature source;
    std::vector<std::size_t> cut_points;

    Signature coarsened() const;
};

// All 2^(m-1) coarsenings of a positive signature t, ordered lexicographically
// by cut point list. t must be nonempty with positive entries.
std::vector<Signature> compositions(const Signature& t);
std::vector<Composition> compositions_with_cuts(const Signature& t);

// block repeated m times; empty for m = 0
Signature repeat_block(const Signature& block, long m);

}  // namespace mhslab
