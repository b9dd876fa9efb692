#include "radix.hpp"

#include <limits>

namespace gbar {

namespace {

void require_base(uint32_t base) {
    if (base < 2) throw InvalidArgument("radix: base must be >= 2");
}

using u128 = unsigned __int128;

}  // namespace

uint64_t RadixExpansion::reconstruct() const {
    u128 acc = 0;
    u128 pw = 1;
    for (uint32_t a : digits) {
        acc += pw * a;
        pw *= base;
        if (acc > std::numeric_limits<uint64_t>::max())
            throw InvalidArgument("RadixExpansion::reconstruct: overflow");
    }
    return static_cast<uint64_t>(acc);
}

RadixExpansion digits_of(uint64_t n, uint32_t base) {
    require_base(base);
    RadixExpansion e;
    e.base = base;
    while (n > 0) {
        e.digits.push_back(static_cast<uint32_t>(n % base));
        n /= base;
    }
    return e;
}

uint64_t digit_sum(uint64_t n, uint32_t base) {
    require_base(base);
    uint64_t d = 0;
    while (n > 0) {
        d += n % base;
        n /= base;
    }
    return d;
}

BigInt running_digit_sum(uint64_t n, uint32_t base) {
    require_base(base);
    BigInt total = 0;
    const uint64_t full_block = uint64_t(base) * (base - 1) / 2;  // 0+1+...+(b-1)
    u128 pw = 1;                                                  // b^i
    while (pw < n) {
        const u128 block = pw * base;  // b^{i+1}
        const u128 q = n / block;
        const u128 r = n % block;
        const uint64_t h = static_cast<uint64_t>(r / pw);
        const uint64_t l = static_cast<uint64_t>(r % pw);
        BigInt pos = BigInt(static_cast<uint64_t>(q >> 64)) << 64 |
                     BigInt(static_cast<uint64_t>(q));
        pos *= full_block;
        if (h >= 2) pos += BigInt(h) * (h - 1) / 2;
        total += pos * BigInt(static_cast<uint64_t>(pw)) + BigInt(h) * l;
        pw = block;
    }
    return total;
}

BigInt running_digit_sum_direct(uint64_t n, uint32_t base) {
    require_base(base);
    BigInt total = 0;
    for (uint64_t j = 0; j < n; ++j) total += digit_sum(j, base);
    return total;
}

DigitSumStream::DigitSumStream(uint64_t start, uint64_t end, uint32_t base)
    : n_(start), end_(end), base_(base) {
    require_base(base);
    if (start > end) throw InvalidArgument("DigitSumStream: start > end");
    digits_ = digits_of(start, base).digits;
    d_ = digit_sum(start, base);
    s_ = running_digit_sum(start, base).convert_to<uint64_t>();
}

DigitSumStream::Item DigitSumStream::next() {
    if (done()) throw InvalidArgument("DigitSumStream: exhausted");
    Item item{n_, d_, s_};
    // Odometer step: d_b(n+1) = d_b(n) + 1 - (b-1)*t with t the number of
    // trailing (b-1)-digits of n.
    s_ += d_;
    ++n_;
    size_t t = 0;
    while (t < digits_.size() && digits_[t] == base_ - 1) {
        digits_[t] = 0;
        ++t;
    }
    if (t == digits_.size())
        digits_.push_back(1);
    else
        ++digits_[t];
    d_ = d_ + 1 - uint64_t(t) * (base_ - 1);
    return item;
}

}  // namespace gbar
