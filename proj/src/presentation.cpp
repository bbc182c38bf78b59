#include "pjack/presentation.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "pjack/linalg.hpp"
#include "pjack/partition.hpp"

namespace pjack {

namespace {

struct Cell {
    std::vector<XiMonomial> monos;
    std::map<XiMonomial, std::size_t> index;
    std::vector<std::size_t> adm;  // positions of admissible monomials
    long rel_rank = 0;
    // normal_form(mono e_i) = sum_j nf[j][i] * adm_j
    RatMatrix nf;
};

std::vector<XiMonomial> enumerate_monomials(long k, long s) {
    std::vector<XiMonomial> out;
    if (k == 0) {
        if (s == 0) out.push_back({});
        return out;
    }
    if (s < 0) return out;
    for (const auto& la : partitions_of(s, static_cast<int>(k), static_cast<int>(s))) {
        XiMonomial w(la.parts().rbegin(), la.parts().rend());
        w.insert(w.begin(), static_cast<std::size_t>(k) - w.size(), 0);
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::mutex cell_mutex;

const Cell& cell(long m, long k, long s) {
    static std::map<std::tuple<long, long, long>, Cell> cache;
    std::lock_guard<std::mutex> lock(cell_mutex);
    auto key = std::make_tuple(m, k, s);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Cell c;
    c.monos = enumerate_monomials(k, s);
    for (std::size_t i = 0; i < c.monos.size(); ++i) c.index.emplace(c.monos[i], i);
    for (std::size_t i = 0; i < c.monos.size(); ++i)
        if (xi_admissible(m, c.monos[i])) c.adm.push_back(i);

    std::size_t n = c.monos.size();
    RowSpace rel(n);
    if (k >= 2) {
        for (long s2 = 0; s2 <= s; ++s2)
            for (long i = 0; i < m; ++i) {
                XiPoly gen = relation_generator(m, i, s2);
                if (gen.empty()) continue;
                for (const auto& mu : enumerate_monomials(k - 2, s - s2)) {
                    RatVec row(n, Rat(0));
                    for (const auto& [pair, coef] : gen) {
                        XiMonomial w = mu;
                        w.insert(w.end(), pair.begin(), pair.end());
                        std::sort(w.begin(), w.end());
                        row[c.index.at(w)] += coef;
                    }
                    rel.add(row);
                }
            }
    }
    c.rel_rank = rel.dim();
    std::size_t q = c.adm.size();
    if (q + static_cast<std::size_t>(c.rel_rank) != n)
        throw std::runtime_error("normal_form: admissible count does not complement relations");

    if (n > 0) {
        // solve e_i = sum_j x_j adm_j + relation part by inverting the
        // assembled square matrix; first q rows of the inverse give the
        // admissible coefficients of every monomial
        RatMatrix s_mat(n, RatVec(n, Rat(0)));
        for (std::size_t j = 0; j < q; ++j) s_mat[c.adm[j]][j] = 1;
        const auto& rrows = rel.rows();
        for (std::size_t j = 0; j < rrows.size(); ++j)
            for (std::size_t t = 0; t < n; ++t) s_mat[t][q + j] = rrows[j][t];
        RatMatrix inv = inverse(s_mat);
        c.nf.assign(q, RatVec(n, Rat(0)));
        for (std::size_t j = 0; j < q; ++j) c.nf[j] = inv[j];
    }
    return cache.emplace(key, std::move(c)).first->second;
}

}  // namespace

bool xi_admissible(long m, const XiMonomial& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] - w[i - 1] < 2 * m) return false;
    return true;
}

XiPoly relation_generator(long m, long i, long s) {
    if (i < 0 || i >= m) throw std::invalid_argument("relation_generator: need 0 <= i < m");
    XiPoly out;
    for (long t1 = 0; t1 <= s; ++t1) {
        long t2 = s - t1;
        Int c = falling(t1, static_cast<unsigned>(i)) * falling(t2, static_cast<unsigned>(i));
        if (c == 0) continue;
        XiMonomial w{static_cast<int>(std::min(t1, t2)), static_cast<int>(std::max(t1, t2))};
        out[w] += Rat(c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

long graded_dim(long m, long k, long s) {
    long t = s - m * k * (k - 1);
    if (t < 0) return 0;
    if (k == 0) return t == 0 ? 1 : 0;
    return static_cast<long>(partitions_of(t, static_cast<int>(k), static_cast<int>(t)).size());
}

long monomial_count(long k, long s) { return static_cast<long>(enumerate_monomials(k, s).size()); }

std::vector<XiMonomial> bidegree_monomials(long k, long s) { return enumerate_monomials(k, s); }

long relation_rank(long m, long k, long s) { return cell(m, k, s).rel_rank; }

XiPoly normal_form(long m, const XiPoly& w) {
    XiPoly out;
    for (const auto& [mono, coef] : w) {
        long k = static_cast<long>(mono.size());
        long s = 0;
        for (int x : mono) s += x;
        const Cell& c = cell(m, k, s);
        std::size_t i = c.index.at(mono);
        for (std::size_t j = 0; j < c.adm.size(); ++j)
            if (c.nf[j][i] != 0) out[c.monos[c.adm[j]]] += coef * c.nf[j][i];
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

XiPoly xi_multiply(const XiPoly& a, const XiPoly& b) {
    XiPoly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            XiMonomial w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            std::sort(w.begin(), w.end());
            out[w] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

namespace {

void compositions(long total, long parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        cur.push_back(static_cast<int>(total));
        emit(cur);
        cur.pop_back();
        return;
    }
    for (long v = 0; v <= total; ++v) {
        cur.push_back(static_cast<int>(v));
        compositions(total - v, parts - 1, cur, emit);
        cur.pop_back();
    }
}

// merge one factor into a word, tracking the anticommutation sign; empty
// result on a repeated (color, mode) pair
bool merge_word(FermionWord& w, const FermionWord& factor, int& sign) {
    for (const auto& p : factor) {
        auto it = std::lower_bound(w.begin(), w.end(), p);
        if (it != w.end() && *it == p) return false;
        // transpositions needed to move p past the tail of w
        if ((w.end() - it) % 2 != 0) sign = -sign;
        w.insert(it, p);
    }
    return true;
}

}  // namespace

FermionPoly fermion_xi_product(long m, const std::vector<int>& indices) {
    FermionPoly acc;
    acc[{}] = 1;
    for (int idx : indices) {
        FermionPoly next;
        std::vector<int> cur;
        compositions(idx, 2 * m, cur, [&](const std::vector<int>& beta) {
            FermionWord factor;
            for (long col = 0; col < 2 * m; ++col)
                factor.emplace_back(static_cast<int>(col + 1), beta[col]);
            for (const auto& [w, c] : acc) {
                FermionWord merged = w;
                int sign = 1;
                if (merge_word(merged, factor, sign)) next[merged] += c * sign;
            }
        });
        for (auto it = next.begin(); it != next.end();)
            it = (it->second == 0) ? next.erase(it) : std::next(it);
        acc = std::move(next);
    }
    return acc;
}

CoinvariantReport coinvariant_basis(long m, long top, long k_max, long s_max) {
    CoinvariantReport rep;
    rep.independent = true;
    for (long k = 0; k <= k_max; ++k)
        for (long s = 0; s <= s_max; ++s) {
            const Cell& c = cell(m, k, s);
            std::size_t q = c.adm.size();
            if (q == 0) continue;
            RowSpace quo(q);
            // span of xi_i * (anything), i > top, inside this bidegree
            for (long i = top + 1; i <= s; ++i)
                for (const auto& mu : enumerate_monomials(k - 1, s - i)) {
                    XiMonomial w = mu;
                    w.insert(std::lower_bound(w.begin(), w.end(), static_cast<int>(i)),
                             static_cast<int>(i));
                    XiPoly nf = normal_form(m, XiPoly{{w, Rat(1)}});
                    RatVec row(q, Rat(0));
                    for (const auto& [mono, coef] : nf) {
                        auto pos = std::find(c.adm.begin(), c.adm.end(), c.index.at(mono));
                        row[static_cast<std::size_t>(pos - c.adm.begin())] = coef;
                    }
                    quo.add(row);
                }
            for (std::size_t j = 0; j < q; ++j) {
                const XiMonomial& mono = c.monos[c.adm[j]];
                if (!mono.empty() && mono.back() > top) continue;
                RatVec row(q, Rat(0));
                row[j] = 1;
                if (!quo.add(row)) {
                    rep.independent = false;
                    continue;
                }
                rep.basis.push_back(mono);
                ++rep.dims[{k, s}];
            }
        }
    return rep;
}

long finitization_dim(long m, long n) {
    long total = 0;
    for (long k = 0;; ++k) {
        long layer = 0;
        for (long s = 0; s <= k * (n - 1); ++s) {
            const Cell& c = cell(m, k, s);
            if (c.adm.empty()) continue;
            RowSpace span(c.adm.size());
            for (const auto& mono : enumerate_monomials(k, s)) {
                if (!mono.empty() && mono.back() >= n) continue;
                std::size_t i = c.index.at(mono);
                RatVec row(c.adm.size(), Rat(0));
                for (std::size_t j = 0; j < c.adm.size(); ++j) row[j] = c.nf[j][i];
                span.add(row);
            }
            layer += span.dim();
        }
        if (k > 0 && layer == 0) break;
        total += layer;
    }
    return total;
}

ShiftReport embed_shift_check(long m, const std::vector<XiMonomial>& samples) {
    ShiftReport rep;
    rep.annihilation_ok = true;
    for (long i = 0; i < 2 * m; ++i) {
        XiMonomial w{0, static_cast<int>(i)};
        if (!normal_form(m, XiPoly{{w, Rat(1)}}).empty()) rep.annihilation_ok = false;
    }
    rep.shift_ok = true;
    for (const auto& w : samples) {
        if (!xi_admissible(m, w)) continue;
        XiMonomial shifted{0};
        long s = 0;
        for (int x : w) {
            shifted.push_back(x + static_cast<int>(2 * m));
            s += x;
        }
        if (!xi_admissible(m, shifted)) rep.shift_ok = false;
        // the shift hits every admissible monomial starting with xi_0 in the
        // target bidegree exactly once
        long k = static_cast<long>(w.size());
        const Cell& tgt = cell(m, k + 1, s + 2 * m * k);
        long with_zero = 0;
        for (std::size_t j : tgt.adm)
            if (!tgt.monos[j].empty() && tgt.monos[j].front() == 0) ++with_zero;
        const Cell& src = cell(m, k, s);
        if (with_zero != static_cast<long>(src.adm.size())) rep.shift_ok = false;
    }
    return rep;
}

}  // namespace pjack
