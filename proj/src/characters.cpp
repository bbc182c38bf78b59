#include "pjack/characters.hpp"

#include <algorithm>
#include <stdexcept>

#include "pjack/fock.hpp"
#include "pjack/partition.hpp"

namespace pjack {

namespace {

// number of partitions of 0..t_max into at most k parts (k < 0: any number)
std::vector<Int> partition_counts(long t_max, long k) {
    std::vector<Int> cnt(static_cast<std::size_t>(t_max) + 1, Int(0));
    cnt[0] = 1;
    // conjugate: at most k parts <=> parts of size at most k
    long max_part = k >= 0 ? std::min(t_max, k) : t_max;
    for (long part = 1; part <= max_part; ++part)
        for (long t = part; t <= t_max; ++t)
            cnt[static_cast<std::size_t>(t)] += cnt[static_cast<std::size_t>(t - part)];
    return cnt;
}

Rat coinv_prefactor_q(long m) { return -Rat((m - 1) * (m - 1)) / Rat(4 * m); }

}  // namespace

QSeries ch_A(long m, long k_max, long q_max) {
    QSeries s{Rat(q_max)};
    for (long k = 0; k <= k_max; ++k) {
        long base = m * k * (k - 1);
        if (base > q_max) break;
        auto cnt = partition_counts(q_max - base, k);
        for (long t = 0; t + base <= q_max; ++t)
            s.add_term(k, Rat(base + t), cnt[static_cast<std::size_t>(t)]);
    }
    return s;
}

QSeries ch_principal(long m, long k_max, long q_max) {
    Rat pq = coinv_prefactor_q(m);
    QSeries s(Rat(q_max) + pq);
    for (long k = 0; k <= k_max; ++k) {
        long base = m * k * k;
        if (base > q_max) break;
        auto cnt = partition_counts(q_max - base, k);
        for (long t = 0; t + base <= q_max; ++t)
            s.add_term(m - 1 + 2 * m * k, Rat(base + t) + pq, cnt[static_cast<std::size_t>(t)]);
    }
    return s;
}

QSeries ch_finite(long m, long p, long q_max) {
    if (p < 0) throw std::invalid_argument("ch_finite: p >= 0");
    QSeries s(q_max < 0 ? std::optional<Rat>{} : std::optional<Rat>{Rat(q_max)});
    for (long k = 0;; ++k) {
        long a = p - (m - 1) * (k - 1);
        if (a < k) break;  // qbinomial vanishes here and for all larger k
        QSeries qb = qbinomial(static_cast<int>(a), static_cast<int>(k));
        Rat base = sector_energy(2 * m, -p + 2 * m * k);
        for (const auto& [key, c] : qb.terms()) s.add_term(-p + 2 * m * k, base + key.second, c);
    }
    return s;
}

QSeries ch_coinv(long m, long n, long q_max) {
    if (n < 0) throw std::invalid_argument("ch_coinv: n >= 0");
    Rat pq = coinv_prefactor_q(m);
    QSeries s(q_max < 0 ? std::optional<Rat>{} : std::optional<Rat>{Rat(q_max)});
    for (long k = 0;; ++k) {
        long a = n - (2 * m - 1) * (k - 1);
        if (a < k) break;
        QSeries qb = qbinomial(static_cast<int>(a), static_cast<int>(k));
        for (const auto& [key, c] : qb.terms())
            s.add_term(m - 1 + 2 * m * k, Rat(m * k * k) + key.second + pq, c);
    }
    return s;
}

QSeries ch_L(long m, long i, long q_max) {
    if (i < 0 || i >= 2 * m) throw std::invalid_argument("ch_L: need 0 <= i < 2m");
    QSeries s{Rat(q_max)};
    auto cnt = partition_counts(q_max, -1);
    auto sector = [&](long n) -> bool {
        long c = 2 * n * m + i;
        Rat base = sector_energy(2 * m, c);
        if (base > Rat(q_max)) return false;
        for (long t = 0; base + Rat(t) <= Rat(q_max); ++t)
            s.add_term(c, base + Rat(t), cnt[static_cast<std::size_t>(t)]);
        return true;
    };
    for (long n = 0; sector(n); ++n) {}
    for (long n = -1; sector(n); --n) {}
    return s;
}

std::vector<SemiInfinite> enumerate_semiinfinite(long m, long i, long cutoff) {
    if (i < 0 || i >= 2 * m) throw std::invalid_argument("enumerate_semiinfinite: need 0 <= i < 2m");
    std::vector<SemiInfinite> out;
    Rat bound(cutoff);

    // minimal reachable energy at tail parameter n: pack extras as high as
    // possible, x_t = T - 2mt - 1; quadratic in the number of extras K
    auto min_energy = [&](long n) -> Rat {
        long T = -i + 2 * m * n - 1;
        Rat delta = sector_energy(2 * m, i - 2 * n * m);
        Rat best = delta - Rat(T);
        long k_hi = std::max<long>(0, T / (2 * m) + 2);
        for (long K = 1; K <= k_hi; ++K)
            best = std::min(best,
                            Rat(delta - Rat(T) - Rat(K * T) + Rat(m * K * (K + 1)) + Rat(K)));
        return best;
    };

    auto scan = [&](long n) {
        long T = -i + 2 * m * n - 1;
        Rat e0 = sector_energy(2 * m, i - 2 * n * m) - Rat(T);
        std::vector<long> extras;
        auto rec = [&](auto&& self, const Rat& energy, long hi) -> void {
            if (energy <= bound) {
                SemiInfinite s;
                s.tail_n = n;
                s.extras = extras;
                s.charge = i - 2 * n * m + 2 * m * (1 + static_cast<long>(extras.size()));
                s.energy = energy;
                out.push_back(std::move(s));
            }
            for (long x = hi;; --x) {
                Rat e = energy - Rat(x);
                // a nonpositive extra only raises the energy, and so does
                // everything below it
                if (x <= 0 && e > bound) break;
                extras.push_back(x);
                self(self, e, x - 2 * m);
                extras.pop_back();
            }
        };
        rec(rec, e0, T - 2 * m - 1);
    };

    // min_energy eventually grows linearly in n upward and quadratically
    // downward; a margin of 3 consecutive misses is ample for the cutoffs used
    for (long n = 0, misses = 0; misses < 3; ++n) {
        if (min_energy(n) > bound) {
            ++misses;
            continue;
        }
        misses = 0;
        scan(n);
    }
    for (long n = -1, misses = 0; misses < 3; --n) {
        if (min_energy(n) > bound) {
            ++misses;
            continue;
        }
        misses = 0;
        scan(n);
    }

    std::sort(out.begin(), out.end(), [](const SemiInfinite& a, const SemiInfinite& b) {
        return std::tie(a.charge, a.energy, a.tail_n, a.extras) <
               std::tie(b.charge, b.energy, b.tail_n, b.extras);
    });
    return out;
}

}  // namespace pjack
