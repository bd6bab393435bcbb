#include "isorad/linalg.hpp"

#include <bit>

namespace isorad {

BitVec& BitVec::operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVec::any() const {
    for (auto x : w_)
        if (x) return true;
    return false;
}

int BitVec::count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
}

int BitVec::lowest() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

int rank_f2(std::vector<BitVec> rows) {
    int rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int piv = rows[i].lowest();
        if (piv < 0) continue;
        ++rank;
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j].test(piv)) rows[j] ^= rows[i];
    }
    return rank;
}

int rank_q(QMatrix a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(a[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[rank][c];
            for (int k = c; k < cols; ++k)
                if (a[rank][k] != 0) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace isorad
