#pragma once

#include <cstdint>
#include <vector>

#include "isorad/rational.hpp"

namespace isorad {

// Fixed-length bit vector over F2.
class BitVec {
public:
    explicit BitVec(int n = 0) : n_(n), w_((n + 63) / 64, 0) {}
    int size() const { return n_; }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void flip(int i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }
    BitVec& operator^=(const BitVec& o);
    bool any() const;
    int count() const;
    int lowest() const;  // -1 if empty
    friend bool operator==(const BitVec& a, const BitVec& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

private:
    int n_;
    std::vector<std::uint64_t> w_;
};

int rank_f2(std::vector<BitVec> rows);

using QMatrix = std::vector<std::vector<Rational>>;

// Exact rank by Gaussian elimination over the rationals.
int rank_q(QMatrix rows);

}  // namespace isorad
