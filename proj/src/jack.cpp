#include "pjack/jack.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace pjack {

namespace {

struct DegreeJacks {
    // keyed by partition; expansions kept in both bases to avoid repeated
    // conversions, plus the squared norms
    std::map<Partition, SymFunc> mono;
    std::map<Partition, SymFunc> power;
    std::map<Partition, Rat> norm;
};

// Gram-Schmidt over the degree, in ascending total order. The total order
// refines dominance, so each J_la stays monic with support below la.
DegreeJacks build_degree(long d, const Rat& alpha) {
    DegreeJacks out;
    auto parts = partitions_of(d);
    std::sort(parts.begin(), parts.end());
    for (const auto& la : parts) {
        SymFunc j = change_basis(SymFunc::basis_element(Basis::Monomial, la), Basis::PowerSum);
        for (const auto& [mu, jmu] : out.power) {
            Rat c = inner_alpha(j, jmu, alpha) / out.norm.at(mu);
            if (c != 0) j = j - jmu * c;
        }
        Rat n = inner_alpha(j, j, alpha);
        if (n == 0) throw std::runtime_error("jack: degenerate Gram matrix at degree " + std::to_string(d));
        out.power.emplace(la, j);
        out.mono.emplace(la, change_basis(j, Basis::Monomial));
        out.norm.emplace(la, n);
    }
    return out;
}

std::mutex cache_mutex;

const DegreeJacks& degree_jacks(long d, const Rat& alpha) {
    static std::map<std::pair<Rat, long>, DegreeJacks> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(alpha, d);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_degree(d, alpha)).first;
    return it->second;
}

}  // namespace

SymFunc jack(const Partition& la, const Rat& alpha) {
    if (alpha <= 0) throw std::invalid_argument("jack: alpha must be positive");
    return degree_jacks(la.size(), alpha).mono.at(la);
}

Rat jack_norm_sq(const Partition& la, const Rat& alpha) {
    if (alpha <= 0) throw std::invalid_argument("jack_norm_sq: alpha must be positive");
    return degree_jacks(la.size(), alpha).norm.at(la);
}

std::map<Partition, Rat> skew_coefficients(const Partition& la, const Partition& mu,
                                           const Rat& alpha) {
    if (mu.size() > la.size()) throw std::invalid_argument("skew_coefficients: |mu| > |la|");
    long dn = la.size() - mu.size();
    const auto& jla = degree_jacks(la.size(), alpha);
    const auto& jmu_tab = degree_jacks(mu.size(), alpha);
    const auto& jnu_tab = degree_jacks(dn, alpha);
    Rat nla = jla.norm.at(la);
    Rat nmu = jmu_tab.norm.at(mu);

    std::map<Partition, Rat> table;
    for (const auto& [nu, jnu] : jnu_tab.power) {
        SymFunc prod = multiply(jmu_tab.power.at(mu), jnu);
        // expand prod in the Jack basis of degree |la| by peeling the
        // greatest remaining monomial term (unitriangularity)
        SymFunc rem = change_basis(prod, Basis::Monomial);
        Rat g;  // coefficient of J_la
        while (!rem.is_zero()) {
            const auto& top = std::prev(rem.terms().end())->first;
            Rat c = std::prev(rem.terms().end())->second;
            if (top == la) g = c;
            rem = rem - jla.mono.at(top) * c;
        }
        if (g != 0) table[nu] = g * nla / (nmu * jnu_tab.norm.at(nu));
    }
    return table;
}

SkewOneVar skew_onevar(const Partition& la, const Partition& mu, const Rat& alpha) {
    SkewOneVar r;
    if (!la.contains(mu)) return r;
    long e = la.size() - mu.size();
    if (e == 0) {
        r.nonzero = true;
        r.phi = 1;
        return r;
    }
    auto table = skew_coefficients(la, mu, alpha);
    auto it = table.find(Partition{static_cast<int>(e)});
    if (it == table.end() || it->second == 0) return r;
    r.nonzero = true;
    r.phi = it->second;
    r.exponent = e;
    return r;
}

PieriTJReport pieri_tj_check(const Partition& la, int k, const Rat& alpha) {
    if (k < 1 || k > la.part(0)) throw std::invalid_argument("pieri_tj_check: need 1 <= k <= la_1");
    PieriTJReport rep;
    SymFunc lhs = t_powersum(k, change_basis(jack(la, alpha), Basis::PowerSum));
    SymFunc rhs(Basis::PowerSum);
    Rat kf = Rat(factorial(static_cast<unsigned>(k)));
    for (const auto& mu : partitions_of(la.size() - k)) {
        if (!la.contains(mu)) continue;
        SkewOneVar s = skew_onevar(la, mu, alpha);
        if (!s.nonzero) continue;
        rep.phi[mu] = s.phi;
        rhs = rhs + change_basis(jack(mu, alpha), Basis::PowerSum) * (kf * s.phi);
    }
    rep.equal = (lhs == rhs);
    return rep;
}

}  // namespace pjack
