#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace schur {

// Weakly decreasing sequence of non-negative integers. Trailing zeros are
// stripped on construction, so equality is plain sequence equality and the
// empty partition has length 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Accepts "2,2,1"; both "" and "0" denote the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;  // number of boxes
    // 0-based; indices past the length read as 0
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[i] : 0;
    }

    std::string to_string() const;  // inverse of parse; empty partition -> "0"

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct BoxShape {
    int rows;  // m, the variable count
    int cols;  // g, bounded by 3
    BoxShape(int m, int g);
};

// lambda' = (z + b' + epsilon + 2k, b' + epsilon + 2k, epsilon + 2k)
struct G3Decomposition {
    int k = 0;
    int epsilon = 0;
    int z = 0;
    int b_prime = 0;
    bool operator==(const G3Decomposition&) const = default;
};

Partition transpose(const Partition& la);

bool fits_in_box(const Partition& la, const BoxShape& box);

// All partitions contained in the box, in graded lexicographic order:
// ascending by size, lexicographically descending within one size.
// Yields binomial(m+g, g) partitions.
std::vector<Partition> enumerate_box(const BoxShape& box);

// Requires at most 3 parts.
G3Decomposition g3_decompose(const Partition& lambda_prime);
Partition g3_reconstruct(const G3Decomposition& d);

}  // namespace schur
