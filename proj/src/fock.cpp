#include "pjack/fock.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "pjack/jack.hpp"

namespace pjack {

namespace {

// degree-d part of exp((L/2) sum_k p_k z^k / k), multiplied onto f
SymFunc raising_part(long d, const SymFunc& f, long lattice) {
    SymFunc out(Basis::PowerSum);
    Rat half_l = rat(lattice, 2);
    for (const auto& la : partitions_of(d)) {
        Rat c(1);
        int prev = -1, mult = 0;
        for (int part : la.parts()) {
            c *= half_l / part;
            if (part == prev) ++mult; else mult = 1;
            c /= mult;
            prev = part;
        }
        for (const auto& [mu, a] : f.terms()) {
            std::vector<int> joined(mu.parts().begin(), mu.parts().end());
            joined.insert(joined.end(), la.parts().begin(), la.parts().end());
            out.add_term(Partition::from_unsorted(joined), a * c);
        }
    }
    return out;
}

// degree-(-d) part of exp(-2 sum_k d/dp_k z^{-k}), applied to f
SymFunc lowering_part(long d, const SymFunc& f) {
    if (d == 0) return f;
    SymFunc out(Basis::PowerSum);
    for (const auto& ka : partitions_of(d)) {
        Rat c(1);
        int prev = -1, mult = 0;
        for (int part : ka.parts()) {
            c *= -2;
            if (part == prev) ++mult; else mult = 1;
            c /= mult;
            prev = part;
        }
        SymFunc g = f;
        for (int part : ka.parts()) {
            g = d_powersum(part, g);
            if (g.is_zero()) break;
        }
        if (!g.is_zero()) out = out + g * c;
    }
    return out;
}

RatVec coords_of(const SymFunc& f, const std::vector<Partition>& parts) {
    RatVec v(parts.size(), Rat(0));
    for (std::size_t i = 0; i < parts.size(); ++i) v[i] = f.coeff(parts[i]);
    return v;
}

std::mutex parts_mutex;

const std::vector<Partition>& parts_of_degree(long d) {
    static std::map<long, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(parts_mutex);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, partitions_of(d)).first;
    return it->second;
}

}  // namespace

Rat sector_energy(long lattice, long charge) {
    return rat(charge * charge, 2 * lattice) + rat((2 - lattice) * charge, 2 * lattice);
}

FockVector extremal(long m, long p) {
    if (m < 1) throw std::invalid_argument("extremal: m must be positive");
    return {2 * m, -p, SymFunc::constant(Rat(1))};
}

Rat extremal_energy(long m, long p) { return sector_energy(2 * m, -p); }

FockVector h_apply(long i, const FockVector& v) {
    if (i == 0) throw std::invalid_argument("h_apply: index must be nonzero");
    FockVector out{v.lattice, v.charge, SymFunc(Basis::PowerSum)};
    if (i < 0) {
        out.poly = multiply(SymFunc::basis_element(Basis::PowerSum, Partition{static_cast<int>(-i)}),
                            v.poly);
    } else {
        out.poly = d_powersum(static_cast<int>(i), v.poly) * Rat(i);
    }
    return out;
}

FockVector a_apply(long n, const FockVector& v) {
    long j = -n - v.charge - 1;
    SymFunc out(Basis::PowerSum);
    for (long dm = 0; dm <= v.poly.degree(); ++dm) {
        long dp = j + dm;
        if (dp < 0) continue;
        SymFunc low = lowering_part(dm, v.poly);
        if (low.is_zero()) continue;
        out = out + raising_part(dp, low, v.lattice);
    }
    return {v.lattice, v.charge + v.lattice, out};
}

Rat q_degree(const FockVector& v) {
    return sector_energy(v.lattice, v.charge) + Rat(v.poly.degree());
}

bool GradedSubspace::add(const FockVector& v) {
    if (v.lattice != lattice_) throw std::invalid_argument("GradedSubspace: lattice mismatch");
    if (v.is_zero()) return false;
    bool independent = false;
    // split into homogeneous components; each lands in its own block
    for (long d = 0; d <= v.poly.degree(); ++d) {
        SymFunc comp = v.poly.homogeneous_component(d);
        if (comp.is_zero()) continue;
        const auto& parts = parts_of_degree(d);
        auto key = std::make_pair(v.charge, d);
        auto it = blocks_.find(key);
        if (it == blocks_.end()) it = blocks_.emplace(key, RowSpace(parts.size())).first;
        if (it->second.add(coords_of(comp, parts))) independent = true;
    }
    return independent;
}

bool GradedSubspace::contains(const FockVector& v) const {
    if (v.is_zero()) return true;
    for (long d = 0; d <= v.poly.degree(); ++d) {
        SymFunc comp = v.poly.homogeneous_component(d);
        if (comp.is_zero()) continue;
        auto it = blocks_.find(std::make_pair(v.charge, d));
        if (it == blocks_.end()) return false;
        if (!it->second.contains(coords_of(comp, parts_of_degree(d)))) return false;
    }
    return true;
}

long GradedSubspace::total_dim() const {
    long s = 0;
    for (const auto& [key, rs] : blocks_) s += rs.dim();
    return s;
}

std::map<std::pair<long, long>, long> GradedSubspace::dims() const {
    std::map<std::pair<long, long>, long> out;
    for (const auto& [key, rs] : blocks_)
        if (rs.dim() > 0) out[key] = rs.dim();
    return out;
}

QSeries GradedSubspace::character() const {
    QSeries ch;
    for (const auto& [key, rs] : blocks_)
        if (rs.dim() > 0)
            ch.add_term(key.first, sector_energy(lattice_, key.first) + Rat(key.second),
                        Int(rs.dim()));
    return ch;
}

bool GradedSubspace::operator==(const GradedSubspace& o) const {
    if (lattice_ != o.lattice_) return false;
    auto d1 = dims(), d2 = o.dims();
    if (d1 != d2) return false;
    for (const auto& [key, rs] : blocks_) {
        auto it = o.blocks_.find(key);
        if (it == o.blocks_.end()) {
            if (rs.dim() != 0) return false;
            continue;
        }
        for (const auto& row : rs.rows())
            if (!it->second.contains(row)) return false;
    }
    return true;
}

FockVector rect_jack_vector(long m, long p, long k) {
    long width = p - m * (k - 1) - 1;
    if (p < 1 || k < 1 || width < 0)
        throw std::invalid_argument("rect_jack_vector: rectangle width negative");
    Partition la = rectangle(static_cast<int>(width), static_cast<int>(k));
    return {2 * m, -p + 2 * m * k, change_basis(jack(la, Rat(m)), Basis::PowerSum)};
}

MainTheoremReport verify_theorem_main(long m, long p, long k) {
    FockVector w = extremal(m, p);
    for (long t = 0; t < k; ++t) w = a_apply(0, w);
    FockVector jv = rect_jack_vector(m, p, k);
    MainTheoremReport rep;
    if (w.charge != jv.charge || w.is_zero() || jv.is_zero()) return rep;
    const auto& [la0, c0] = *jv.poly.terms().begin();
    Rat scale = w.poly.coeff(la0) / c0;
    if (scale == 0) return rep;
    if (w.poly == jv.poly * scale) {
        rep.match = true;
        rep.scale = scale;
    }
    return rep;
}

GradedSubspace principal_space(long m, long p, long window, const Rat& cutoff) {
    GradedSubspace span(2 * m);
    span.add(extremal(m, p));
    Rat base = sector_energy(2 * m, -p);
    Rat min_sum = base - cutoff;  // the tuple sum keeps q-degree <= cutoff

    // k factors raise the charge to -p + 2mk; the sector bottom is convex in
    // k, so once it exceeds the cutoff past its minimum nothing more fits
    long k_max = 0;
    for (long k = 1;; ++k) {
        Rat bottom = sector_energy(2 * m, -p + 2 * m * k);
        if (bottom <= cutoff) {
            k_max = k;
        } else if (sector_energy(2 * m, -p + 2 * m * (k + 1)) >= bottom) {
            break;
        }
    }

    // weakly decreasing index tuples, i_1 <= p-1, optional window floor; the
    // modes commute, so applying the largest index first lets the search
    // share every prefix vector
    auto rec = [&](auto&& self, const FockVector& w, long depth, long hi, long sum) -> void {
        if (!w.is_zero() && Rat(sum) >= min_sum) span.add(w);
        if (depth == k_max) return;
        for (long i = hi;; --i) {
            if (window >= 0 && i < p - window) break;
            // best achievable sum among deeper nodes: all remaining slots at
            // i when i is positive, a single extra factor when negative
            long best = sum + (i > 0 ? i * (k_max - depth) : i);
            if (Rat(best) < min_sum) break;
            FockVector u = a_apply(i, w);
            if (u.is_zero()) continue;  // the whole subtree stays zero
            self(self, u, depth + 1, i, sum + i);
        }
    };
    if (k_max > 0) rec(rec, extremal(m, p), 0, p - 1, 0);
    return span;
}

JackBasisReport verify_theorem_jack(long m, long p, long k) {
    FockVector w = extremal(m, p);
    for (long t = 0; t < k; ++t) w = a_apply(0, w);
    long width = p - (k - 1) * m - 1;
    Partition rect = rectangle(static_cast<int>(width), static_cast<int>(k));
    long dmax = rect.size();

    // closure of w under h_i, i > 0, organized per polynomial degree
    std::map<long, RowSpace> closure;
    std::map<long, std::vector<SymFunc>> layer;
    for (long d = 0; d <= dmax; ++d) closure.emplace(d, RowSpace(parts_of_degree(d).size()));
    if (closure.at(dmax).add(coords_of(w.poly, parts_of_degree(dmax))))
        layer[dmax].push_back(w.poly);
    for (long d = dmax; d >= 1; --d)
        for (const auto& f : layer[d])
            for (long i = 1; i <= d; ++i) {
                SymFunc g = d_powersum(static_cast<int>(i), f) * Rat(i);
                if (g.is_zero()) continue;
                if (closure.at(d - i).add(coords_of(g, parts_of_degree(d - i))))
                    layer[d - i].push_back(g);
            }

    // Jack side: J_mu over subdiagrams of the rectangle
    std::map<long, RowSpace> jside;
    for (long d = 0; d <= dmax; ++d) jside.emplace(d, RowSpace(parts_of_degree(d).size()));
    for (const auto& mu : subdiagrams(static_cast<int>(width), static_cast<int>(k))) {
        SymFunc jp = change_basis(jack(mu, Rat(m)), Basis::PowerSum);
        jside.at(mu.size()).add(coords_of(jp, parts_of_degree(mu.size())));
    }

    JackBasisReport rep;
    rep.equal = true;
    for (long d = 0; d <= dmax; ++d) {
        rep.closure_dims[d] = closure.at(d).dim();
        rep.jack_dims[d] = jside.at(d).dim();
        if (closure.at(d).dim() != jside.at(d).dim()) rep.equal = false;
        else
            for (const auto& row : closure.at(d).rows())
                if (!jside.at(d).contains(row)) rep.equal = false;
    }
    return rep;
}

SymFunc reconstruct_jack(long m, long p, long k, const Partition& mu) {
    long width = p - (k - 1) * m - 1;
    Partition rect = rectangle(static_cast<int>(width), static_cast<int>(k));
    if (!rect.contains(mu)) throw std::invalid_argument("reconstruct_jack: mu not in rectangle");
    FockVector base{2 * m, -p + 2 * m * k,
                    change_basis(jack(mu, Rat(m)), Basis::PowerSum)};
    SymFunc out(Basis::PowerSum);
    for (const auto& nu : partitions_of(mu.size())) {
        FockVector w = base;
        for (int part : nu.parts()) w = h_apply(part, w);
        Rat c = w.poly.coeff(Partition{});
        if (c != 0) out.add_term(nu, c / z_factor(nu));
    }
    if (mu.size() == 0) out = SymFunc::constant(Rat(1));
    return change_basis(out, Basis::Monomial);
}

OddDimReport odd_principal_dim(long m, long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("odd_principal_dim: positive m, n required");
    long lattice = 2 * m - 1;
    long p = n;  // window [p-n, p-1] = [0, n-1]
    OddDimReport rep;
    rep.conjectured = fibonacci_m(static_cast<int>(m), static_cast<int>(n));
    GradedSubspace span(lattice);
    // all strict subsets of {0,...,n-1}, applied in decreasing order
    for (long mask = 0; mask < (1L << n); ++mask) {
        FockVector w{lattice, -p, SymFunc::constant(Rat(1))};
        for (long i = n - 1; i >= 0 && !w.is_zero(); --i)
            if (mask & (1L << i)) w = a_apply(i, w);
        span.add(w);
    }
    rep.dim = span.total_dim();
    return rep;
}

FockVector relation_generator_apply(long m, long i, long s, const FockVector& v) {
    FockVector out{v.lattice, v.charge + 2 * v.lattice, SymFunc(Basis::PowerSum)};
    for (long t1 = 0; t1 <= s + 2 * i; ++t1) {
        long t2 = s + 2 * i - t1;
        Rat c = Rat(falling(t1, static_cast<unsigned>(i)) * falling(t2, static_cast<unsigned>(i)));
        if (c == 0) continue;
        FockVector w = a_apply(-m - t1, v);
        w = a_apply(-m - t2, w);
        out.poly = out.poly + w.poly * c;
    }
    return out;
}

}  // namespace pjack
