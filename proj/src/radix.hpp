#ifndef GBAR_RADIX_HPP
#define GBAR_RADIX_HPP

#include <cstdint>
#include <vector>

#include "types.hpp"

namespace gbar {

// Base-b expansion n = sum a_j b^j, digits least-significant first.
// n = 0 is the empty expansion; otherwise the leading digit is nonzero.
struct RadixExpansion {
    uint32_t base = 2;
    std::vector<uint32_t> digits;

    uint64_t reconstruct() const;  // sum a_j b^j, overflow-checked
};

// Digits of n in base b (b >= 2). Digit count is floor(log_b n) + 1 for n >= 1.
RadixExpansion digits_of(uint64_t n, uint32_t base);

// d_b(n): sum of base-b digits of n; d_b(0) = 0.
uint64_t digit_sum(uint64_t n, uint32_t base);

// S_b(n) = sum_{j=0}^{n-1} d_b(j), via a closed per-digit-position summation:
// position i contributes (b-1)b/2 * b^i per full block of b^{i+1} consecutive
// integers, plus h(h-1)/2 * b^i + h*l for the partial block (h, l = top digit
// and remainder of n mod b^{i+1} split at b^i).  O(log_b n).
BigInt running_digit_sum(uint64_t n, uint32_t base);

// Same quantity by direct summation of d_b(0..n-1); O(n) independent check.
BigInt running_digit_sum_direct(uint64_t n, uint32_t base);

// Incremental (n, d_b(n), S_b(n)) over the half-open range [start, end).
// Each step touches only the digits that roll over, so a full sweep costs
// O(end - start) amortized.
class DigitSumStream {
public:
    struct Item {
        uint64_t n;
        uint64_t d;
        uint64_t s;
    };

    DigitSumStream(uint64_t start, uint64_t end, uint32_t base);

    bool done() const { return n_ >= end_; }
    Item next();  // yields the item for the current n, then advances

private:
    uint64_t n_;
    uint64_t end_;
    uint32_t base_;
    std::vector<uint32_t> digits_;
    uint64_t d_;
    uint64_t s_;
};

}  // namespace gbar

#endif
