#include "pjack/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "pjack/linalg.hpp"

namespace pjack {

long SymFunc::degree() const {
    long d = 0;
    for (const auto& [la, c] : terms_) d = std::max(d, la.size());
    return d;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    if (basis_ != o.basis_) return *this + change_basis(o, basis_);
    SymFunc r = *this;
    for (const auto& [la, c] : o.terms_) r.add_term(la, c);
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    return *this + (o * Rat(-1));
}

SymFunc SymFunc::operator*(const Rat& c) const {
    SymFunc r(basis_);
    if (c == 0) return r;
    for (const auto& [la, k] : terms_) r.add_term(la, k * c);
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
    if (basis_ == o.basis_) return terms_ == o.terms_;
    return change_basis(*this, Basis::PowerSum).terms() ==
           change_basis(o, Basis::PowerSum).terms();
}

SymFunc SymFunc::homogeneous_component(long d) const {
    SymFunc r(basis_);
    for (const auto& [la, c] : terms_)
        if (la.size() == d) r.add_term(la, c);
    return r;
}

Rat z_factor(const Partition& la) {
    Rat z(1);
    int i = 0;
    while (i < la.length()) {
        int v = la.part(i);
        int mult = 0;
        while (i < la.length() && la.part(i) == v) {
            ++mult;
            ++i;
        }
        for (int t = 0; t < mult; ++t) z *= v;
        z *= Rat(factorial(static_cast<unsigned>(mult)));
    }
    return z;
}

namespace {

// p_r * m_la = sum over distinct part values v of la (and v = 0) of
// mult_{v+r}(mu) * m_mu, where mu is la with one part v replaced by v + r.
SymFunc p_times_m(int r, const Partition& la) {
    SymFunc out(Basis::Monomial);
    std::set<int> values(la.parts().begin(), la.parts().end());
    values.insert(0);
    for (int v : values) {
        std::vector<int> parts = la.parts();
        if (v == 0) {
            parts.push_back(r);
        } else {
            auto it = std::find(parts.begin(), parts.end(), v);
            *it = v + r;
        }
        Partition mu = Partition::from_unsorted(std::move(parts));
        out.add_term(mu, Rat(mu.multiplicity(v + r)));
    }
    return out;
}

struct DegreeTables {
    std::vector<Partition> parts;            // partitions of d, sorted
    std::map<Partition, std::size_t> index;  // la -> position
    RatMatrix p_to_m;                        // row i: p_{parts[i]} in m basis
    RatMatrix m_to_p;                        // inverse
};

const DegreeTables& degree_tables(long d) {
    static std::map<long, DegreeTables> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    DegreeTables t;
    t.parts = partitions_of(d);
    for (std::size_t i = 0; i < t.parts.size(); ++i) t.index[t.parts[i]] = i;
    std::size_t n = t.parts.size();
    t.p_to_m.assign(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        // p_la = p_{la_1} * ... * p_{la_l}, expanded in the m basis.
        SymFunc acc = SymFunc::constant(Rat(1), Basis::Monomial);
        for (int part : t.parts[i].parts()) {
            SymFunc next(Basis::Monomial);
            for (const auto& [mu, c] : acc.terms()) {
                SymFunc pm = p_times_m(part, mu);
                for (const auto& [nu, c2] : pm.terms()) next.add_term(nu, c * c2);
            }
            acc = std::move(next);
        }
        for (const auto& [mu, c] : acc.terms()) t.p_to_m[i][t.index.at(mu)] = c;
    }
    t.m_to_p = n > 0 ? inverse(t.p_to_m) : RatMatrix{};
    return cache.emplace(d, std::move(t)).first->second;
}

}  // namespace

SymFunc change_basis(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    SymFunc out(target);
    // Group by degree; apply the per-degree transition matrix.
    std::map<long, std::vector<std::pair<Partition, Rat>>> by_deg;
    for (const auto& [la, c] : f.terms()) by_deg[la.size()].push_back({la, c});
    for (const auto& [d, terms] : by_deg) {
        const DegreeTables& t = degree_tables(d);
        RatVec coords(t.parts.size(), Rat(0));
        for (const auto& [la, c] : terms) coords[t.index.at(la)] = c;
        const RatMatrix& mat = (target == Basis::Monomial) ? t.p_to_m : t.m_to_p;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] == 0) continue;
            for (std::size_t j = 0; j < coords.size(); ++j) {
                if (mat[i][j] != 0) out.add_term(t.parts[j], coords[i] * mat[i][j]);
            }
        }
    }
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = change_basis(f, Basis::PowerSum);
    SymFunc gp = change_basis(g, Basis::PowerSum);
    SymFunc out(Basis::PowerSum);
    for (const auto& [la, a] : fp.terms()) {
        for (const auto& [mu, b] : gp.terms()) {
            std::vector<int> parts = la.parts();
            parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
            out.add_term(Partition::from_unsorted(std::move(parts)), a * b);
        }
    }
    return out;
}

Rat inner_alpha(const SymFunc& f, const SymFunc& g, const Rat& alpha) {
    if (alpha == 0) throw std::invalid_argument("inner_alpha: alpha must be nonzero");
    SymFunc fp = change_basis(f, Basis::PowerSum);
    SymFunc gp = change_basis(g, Basis::PowerSum);
    Rat s(0);
    for (const auto& [la, a] : fp.terms()) {
        Rat b = gp.coeff(la);
        if (b == 0) continue;
        Rat alpha_pow(1);
        for (int i = 0; i < la.length(); ++i) alpha_pow *= alpha;
        s += a * b * z_factor(la) / alpha_pow;
    }
    return s;
}

SymFunc d_powersum(int k, const SymFunc& f) {
    if (k < 1) throw std::invalid_argument("d_powersum: k must be positive");
    SymFunc fp = change_basis(f, Basis::PowerSum);
    SymFunc out(Basis::PowerSum);
    for (const auto& [la, c] : fp.terms()) {
        int mult = la.multiplicity(k);
        if (mult == 0) continue;
        std::vector<int> parts = la.parts();
        parts.erase(std::find(parts.begin(), parts.end(), k));
        out.add_term(Partition::from_unsorted(std::move(parts)), c * mult);
    }
    return out;
}

std::map<std::vector<int>, Rat> expand_in_variables(const SymFunc& f, int num_vars) {
    SymFunc fm = change_basis(f, Basis::Monomial);
    std::map<std::vector<int>, Rat> poly;
    for (const auto& [la, c] : fm.terms()) {
        // monomial terms needing more variables restrict to zero
        if (la.length() > static_cast<std::size_t>(num_vars)) continue;
        std::vector<int> expo(static_cast<std::size_t>(num_vars), 0);
        std::copy(la.parts().begin(), la.parts().end(), expo.begin());
        std::sort(expo.begin(), expo.end());
        do {
            poly[expo] += c;
        } while (std::next_permutation(expo.begin(), expo.end()));
    }
    return poly;
}

namespace {

// Collects a symmetric polynomial (faithful at its degree) back into the
// monomial basis by reading the weakly decreasing representatives.
SymFunc collect_monomials(const std::map<std::vector<int>, Rat>& poly) {
    SymFunc out(Basis::Monomial);
    for (const auto& [expo, c] : poly) {
        if (c == 0) continue;
        if (!std::is_sorted(expo.begin(), expo.end(), std::greater<int>())) continue;
        std::vector<int> parts;
        for (int e : expo)
            if (e > 0) parts.push_back(e);
        out.add_term(Partition(parts), c);
    }
    return out;
}

}  // namespace

SymFunc t_extract(int n, const SymFunc& f, int num_vars) {
    if (n < 1) throw std::invalid_argument("t_extract: n must be positive");
    if (num_vars < f.degree() + 1)
        throw std::invalid_argument("t_extract: too few variables for faithful restriction");
    auto poly = expand_in_variables(f, num_vars);
    // d^n/dx_1^n at x_1 = 0 keeps the x_1^n slice scaled by n!; dropping the
    // first exponent implements the relabeling L.
    std::map<std::vector<int>, Rat> rest;
    Rat nf = Rat(factorial(static_cast<unsigned>(n)));
    for (const auto& [expo, c] : poly) {
        if (expo[0] != n) continue;
        rest[std::vector<int>(expo.begin() + 1, expo.end())] += c * nf;
    }
    return collect_monomials(rest);
}

namespace {

struct TTables {
    // For each n: map from ordered tuple (k_1,...,k_j) with sum <= n_max to
    // the coefficient b_{j,n}(k_1,...,k_j).
    std::vector<std::map<std::vector<int>, Rat>> ordered;  // index n
    // Symmetrized table on sorted tuples with sum == n exactly.
    std::vector<std::map<std::vector<int>, Rat>> sorted_exact;
    int n_max = 0;
};

TTables build_t_tables(int n_max) {
    TTables t;
    t.n_max = n_max;
    t.ordered.resize(static_cast<std::size_t>(n_max) + 1);
    t.sorted_exact.resize(static_cast<std::size_t>(n_max) + 1);
    // Base: d f / d x_1 = sum_k (df/dp_k) k x_1^{k-1}.
    for (int k = 1; k <= n_max; ++k) t.ordered[1][{k}] = Rat(k);
    // Differentiating the expansion once more splits each term in two:
    // the x-power drops (factor sum - n), or a new derivative index k_{j+1}
    // appears (factor k_{j+1}).
    for (int n = 1; n < n_max; ++n) {
        auto& next = t.ordered[static_cast<std::size_t>(n) + 1];
        for (const auto& [tup, b] : t.ordered[static_cast<std::size_t>(n)]) {
            int sum = 0;
            for (int k : tup) sum += k;
            if (sum != n) {
                Rat c = b * Rat(sum - n);
                if (c != 0) {
                    auto [it, fresh] = next.try_emplace(tup, c);
                    if (!fresh) it->second += c;
                }
            }
            for (int knew = 1; sum + knew <= n_max; ++knew) {
                std::vector<int> ext = tup;
                ext.push_back(knew);
                auto [it, fresh] = next.try_emplace(ext, b * Rat(knew));
                if (!fresh) it->second += b * Rat(knew);
            }
        }
        // Prune exact zeros.
        for (auto it = next.begin(); it != next.end();)
            it = (it->second == 0) ? next.erase(it) : std::next(it);
    }
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& [tup, b] : t.ordered[static_cast<std::size_t>(n)]) {
            int sum = 0;
            for (int k : tup) sum += k;
            if (sum != n) continue;
            std::vector<int> key = tup;
            std::sort(key.begin(), key.end());
            t.sorted_exact[static_cast<std::size_t>(n)][key] += b;
        }
    }
    return t;
}

const TTables& t_tables_for(int n) {
    static TTables tables;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (tables.n_max < n) tables = build_t_tables(std::max(n, 8));
    return tables;
}

}  // namespace

const std::map<std::vector<int>, Rat>& t_coefficient_table(int n) {
    if (n < 1) throw std::invalid_argument("t_coefficient_table: n must be positive");
    return t_tables_for(n).sorted_exact[static_cast<std::size_t>(n)];
}

SymFunc t_powersum(int n, const SymFunc& f) {
    if (n < 1) throw std::invalid_argument("t_powersum: n must be positive");
    SymFunc fp = change_basis(f, Basis::PowerSum);
    SymFunc out(Basis::PowerSum);
    for (const auto& [tup, b] : t_coefficient_table(n)) {
        SymFunc g = fp;
        for (int k : tup) g = d_powersum(k, g);
        out = out + g * b;
    }
    return out;
}

}  // namespace pjack
