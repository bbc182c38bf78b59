#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

namespace pjack {

// Weakly decreasing sequence of positive integers. The empty sequence is
// the zero partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Sorts (descending) and drops zeros.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long size() const {
        long s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }
    // 0-based; returns 0 beyond the length.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    // Multiplicity of the value v among the parts.
    int multiplicity(int v) const;

    bool contains(const Partition& mu) const;  // Young-diagram inclusion mu subset this

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Total order: by size, then lexicographic on parts. Within a fixed
    // size, lexicographic refines dominance (mu < la in dominance implies
    // mu < la here), which is what Gram-Schmidt needs.
    auto operator<=>(const Partition& o) const {
        if (auto c = size() <=> o.size(); c != 0) return c;
        return parts_ <=> o.parts_;
    }

private:
    std::vector<int> parts_;
};

enum class Dominance { LessEqual, Greater, Incomparable };

// Partial-sum comparison; requires |mu| == |la|.
Dominance dominance_leq(const Partition& mu, const Partition& la);

// All partitions of n (n >= 0), sorted by the Partition total order.
std::vector<Partition> partitions_of(long n);
// Partitions of n with at most max_len parts, each part <= max_part.
std::vector<Partition> partitions_of(long n, int max_len, int max_part);

// All mu with l(mu) <= r and mu_1 <= s (subdiagrams of the rectangle (s^r)).
std::vector<Partition> subdiagrams(int s, int r);

// All subsets {i_1 < ... < i_k} of {0,...,window-1} with i_{a+1} - i_a >= gap.
std::vector<std::vector<int>> gap_subsets(int window, int gap);

// Rectangle (s^r); s == 0 or r == 0 gives the zero partition.
Partition rectangle(int s, int r);

}  // namespace pjack
