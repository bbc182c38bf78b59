#include "pjack/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pjack {

std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rat inv = 1 / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

RatVec reduce_by(const RatMatrix& rref_rows, const std::vector<int>& pivots, RatVec v) {
    for (std::size_t i = 0; i < rref_rows.size(); ++i) {
        int p = pivots[i];
        if (v[static_cast<std::size_t>(p)] == 0) continue;
        Rat f = v[static_cast<std::size_t>(p)];
        const RatVec& r = rref_rows[i];
        for (std::size_t j = static_cast<std::size_t>(p); j < v.size(); ++j)
            v[j] -= f * r[j];
    }
    return v;
}

RatMatrix kernel(RatMatrix a) {
    if (a.empty()) return {};
    std::size_t cols = a[0].size();
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    RatMatrix ker;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v(cols, Rat(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < a.size(); ++i)
            v[static_cast<std::size_t>(pivots[i])] = -a[i][free_col];
        ker.push_back(std::move(v));
    }
    return ker;
}

bool row_spaces_equal(RatMatrix a, RatMatrix b) {
    rref(a);
    rref(b);
    return a == b;
}

bool in_row_space(const RatMatrix& rref_rows, const std::vector<int>& pivots, RatVec v) {
    v = reduce_by(rref_rows, pivots, std::move(v));
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RatMatrix inverse(const RatMatrix& m) {
    std::size_t n = m.size();
    RatMatrix aug(n, RatVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("inverse: not square");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug);
    if (aug.size() != n || pivots.back() != static_cast<int>(n - 1))
        throw std::runtime_error("inverse: singular matrix");
    RatMatrix inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

bool RowSpace::add(RatVec v) {
    if (v.size() != cols_) throw std::invalid_argument("RowSpace: wrong length");
    v = reduce_by(rows_, pivots_, std::move(v));
    std::size_t lead = 0;
    while (lead < cols_ && v[lead] == 0) ++lead;
    if (lead == cols_) return false;
    Rat inv = 1 / v[lead];
    for (std::size_t j = lead; j < cols_; ++j) v[j] *= inv;
    // Clear the new pivot column from existing rows, keep RREF invariant.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rat f = rows_[i][lead];
        if (f == 0) continue;
        for (std::size_t j = lead; j < cols_; ++j) rows_[i][j] -= f * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<int>(lead));
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, static_cast<int>(lead));
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

bool RowSpace::contains(RatVec v) const {
    return in_row_space(rows_, pivots_, std::move(v));
}

}  // namespace pjack
