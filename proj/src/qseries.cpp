#include "pjack/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace pjack {

namespace {
std::optional<Rat> min_trunc(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}
}  // namespace

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(min_trunc(trunc_, o.trunc_));
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c);
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    QSeries r(min_trunc(trunc_, o.trunc_));
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c);
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, Int(-c));
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries r(min_trunc(trunc_, o.trunc_));
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, Int(ca * cb));
    return r;
}

QSeries QSeries::shifted(long du, const Rat& dq) const {
    QSeries r(trunc_ ? std::optional<Rat>(*trunc_ + dq) : std::nullopt);
    for (const auto& [k, c] : terms_) r.add_term(k.first + du, k.second + dq, c);
    return r;
}

Int QSeries::value_at_one() const {
    Int s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

QSeries qbinomial(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("qbinomial: negative argument");
    if (a < b) return QSeries();
    // [a b]_q = prod over the b x (a-b) box; computed by the Pascal recursion.
    // Row r of the table holds [r choose j]_q for j = 0..b.
    std::vector<std::vector<QSeries>> row(2, std::vector<QSeries>(static_cast<std::size_t>(b) + 1));
    for (int r = 0; r <= a; ++r) {
        auto& cur = row[r & 1];
        auto& prev = row[(r ^ 1) & 1];
        for (int j = 0; j <= std::min(r, b); ++j) {
            if (j == 0 || j == r) {
                cur[static_cast<std::size_t>(j)] = QSeries::one();
            } else {
                cur[static_cast<std::size_t>(j)] =
                    prev[static_cast<std::size_t>(j)] +
                    prev[static_cast<std::size_t>(j) - 1].shifted(0, Rat(r - j));
            }
        }
    }
    return row[a & 1][static_cast<std::size_t>(b)];
}

Int fibonacci_m(int m, int n) {
    if (m < 1 || n < 0) throw std::invalid_argument("fibonacci_m: bad arguments");
    if (n < m) return Int(n + 1);
    std::vector<Int> f(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < m; ++i) f[static_cast<std::size_t>(i)] = i + 1;
    for (int i = m; i <= n; ++i)
        f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i - 1)] + f[static_cast<std::size_t>(i - m)];
    return f[static_cast<std::size_t>(n)];
}

}  // namespace pjack
