#include "pjack/fusion.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pjack/partition.hpp"
#include "pjack/presentation.hpp"
#include "pjack/qseries.hpp"

namespace pjack {

namespace {

bool subset_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

long GapRing::index_of(const std::vector<int>& s) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), s, subset_less);
    if (it == basis.end() || *it != s) return -1;
    return it - basis.begin();
}

long GapRing::multiply(long a, long b) const {
    std::vector<int> u;
    std::merge(basis[a].begin(), basis[a].end(), basis[b].begin(), basis[b].end(),
               std::back_inserter(u));
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i] - u[i - 1] < m) return -1;  // covers repeats too
    return index_of(u);
}

GapRing gap_ring(long m, long n) {
    GapRing r;
    r.m = m;
    r.n = n;
    for (auto& s : gap_subsets(static_cast<int>(n), static_cast<int>(m))) {
        for (int& x : s) ++x;  // 1-based variables
        r.basis.push_back(std::move(s));
    }
    std::sort(r.basis.begin(), r.basis.end(), subset_less);
    return r;
}

std::vector<std::vector<int>> mono_basis(long n, long k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, long pos, long left) -> void {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = static_cast<int>(left);
            out.push_back(cur);
            return;
        }
        for (long e = 0; e <= left; ++e) {
            cur[static_cast<std::size_t>(pos)] = static_cast<int>(e);
            self(self, pos + 1, left - e);
        }
    };
    if (n == 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, k);
    return out;
}

// ---------- eps polynomial arithmetic ----------

namespace {

void ep_trim(EpsPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

EpsPoly ep_scaled(const EpsPoly& a, const Rat& c) {
    if (c == 0) return {};
    EpsPoly r = a;
    for (Rat& x : r) x *= c;
    return r;
}

// exact division, used by fraction-free elimination
EpsPoly ep_div(const EpsPoly& a, const EpsPoly& b) {
    if (ep_is_zero(a)) return {};
    if (ep_is_zero(b)) throw std::invalid_argument("ep_div: zero divisor");
    EpsPoly rem = a;
    EpsPoly q(a.size(), Rat(0));
    long db = static_cast<long>(b.size()) - 1;
    for (long d = static_cast<long>(rem.size()) - 1 - db; d >= 0;) {
        long top = d + db;
        if (static_cast<long>(rem.size()) <= top || rem[static_cast<std::size_t>(top)] == 0) {
            --d;
            continue;
        }
        Rat c = rem[static_cast<std::size_t>(top)] / b[static_cast<std::size_t>(db)];
        q[static_cast<std::size_t>(d)] += c;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(d + j)] -= c * b[static_cast<std::size_t>(j)];
        --d;
    }
    ep_trim(rem);
    if (!rem.empty()) throw std::logic_error("ep_div: inexact division");
    ep_trim(q);
    return q;
}

EpsPoly ep_shift_down(const EpsPoly& a, long v) {
    return EpsPoly(a.begin() + v, a.end());
}

Rat ep_at_zero(const EpsPoly& a) { return a.empty() ? Rat(0) : a[0]; }

using EpsRow = std::vector<EpsPoly>;

long row_valuation(const EpsRow& r) {
    long v = -1;
    for (const auto& e : r) {
        long ev = ep_valuation(e);
        if (ev >= 0 && (v < 0 || ev < v)) v = ev;
    }
    return v;
}

void normalize_row(EpsRow& r) {
    long v = row_valuation(r);
    if (v > 0)
        for (auto& e : r)
            if (!ep_is_zero(e)) e = ep_shift_down(e, v);
}

EpsPoly ep_mod(EpsPoly a, const EpsPoly& b) {
    long db = static_cast<long>(b.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= db) {
        Rat c = a.back() / b.back();
        long off = static_cast<long>(a.size()) - 1 - db;
        for (long j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(off + j)] -= c * b[static_cast<std::size_t>(j)];
        ep_trim(a);
        if (a.empty()) break;
    }
    return a;
}

EpsPoly ep_gcd(EpsPoly a, EpsPoly b) {
    ep_trim(a);
    ep_trim(b);
    while (!b.empty()) {
        EpsPoly r = ep_mod(a, b);
        if (!r.empty())
            for (Rat& c : r) c /= r.back();  // monic, keeps coefficients tame
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty())
        for (Rat& c : a) c /= a.back();
    return a;
}

// divide a row by its polynomial content (and eps content) and rescale
void reduce_row(EpsRow& r) {
    normalize_row(r);
    EpsPoly g;
    for (const auto& e : r) {
        if (ep_is_zero(e)) continue;
        g = g.empty() ? e : ep_gcd(g, e);
        if (g.size() == 1) break;
    }
    if (g.size() > 1)
        for (auto& e : r)
            if (!ep_is_zero(e)) e = ep_div(e, g);
    for (const auto& e : r)
        if (!ep_is_zero(e)) {
            Rat lead = e[static_cast<std::size_t>(ep_valuation(e))];
            for (auto& f : r) f = ep_scaled(f, Rat(1) / lead);
            break;
        }
}

// forward elimination over Q(eps) with per-row content removal; returns
// pivot columns
std::vector<long> eps_echelon(std::vector<EpsRow>& rows) {
    std::vector<long> pivots;
    if (rows.empty()) return pivots;
    std::size_t ncols = rows[0].size();
    for (auto& r : rows) reduce_row(r);
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (!ep_is_zero(rows[i][col]) &&
                (sel == rows.size() || rows[i][col].size() < rows[sel][col].size()))
                sel = i;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const EpsPoly piv = rows[r][col];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (ep_is_zero(rows[i][col])) continue;
            EpsPoly f = rows[i][col];
            EpsPoly g = ep_gcd(piv, f);
            EpsPoly a = ep_div(piv, g), b = ep_div(f, g);
            for (std::size_t j = 0; j < ncols; ++j)
                rows[i][j] = ep_sub(ep_mul(a, rows[i][j]), ep_mul(b, rows[r][j]));
            reduce_row(rows[i]);
        }
        pivots.push_back(static_cast<long>(col));
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

// kernel basis of the matrix over Q(eps), entries kept polynomial by
// cross-multiplied back substitution
std::vector<EpsRow> eps_kernel(std::vector<EpsRow> rows, std::size_t ncols) {
    std::vector<long> pivots = eps_echelon(rows);
    std::set<long> pivset(pivots.begin(), pivots.end());
    std::vector<EpsRow> out;
    for (long f = 0; f < static_cast<long>(ncols); ++f) {
        if (pivset.count(f)) continue;
        EpsRow x(ncols);
        x[static_cast<std::size_t>(f)] = {Rat(1)};
        for (long i = static_cast<long>(pivots.size()) - 1; i >= 0; --i) {
            long p = pivots[static_cast<std::size_t>(i)];
            EpsPoly s;
            for (long j = p + 1; j < static_cast<long>(ncols); ++j)
                s = ep_add(s, ep_mul(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                     x[static_cast<std::size_t>(j)]));
            const EpsPoly& piv = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
            for (auto& e : x) e = ep_mul(piv, e);
            x[static_cast<std::size_t>(p)] = ep_scaled(s, Rat(-1));
            reduce_row(x);
        }
        out.push_back(std::move(x));
    }
    return out;
}

RatMatrix rref_of(const std::vector<RatVec>& rows, std::size_t ncols) {
    RowSpace rs(ncols);
    for (const auto& r : rows) rs.add(r);
    return rs.rows();
}

}  // namespace

EpsPoly ep_add(const EpsPoly& a, const EpsPoly& b) {
    EpsPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ep_trim(r);
    return r;
}

EpsPoly ep_sub(const EpsPoly& a, const EpsPoly& b) { return ep_add(a, ep_scaled(b, Rat(-1))); }

EpsPoly ep_mul(const EpsPoly& a, const EpsPoly& b) {
    if (ep_is_zero(a) || ep_is_zero(b)) return {};
    EpsPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ep_trim(r);
    return r;
}

bool ep_is_zero(const EpsPoly& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

long ep_valuation(const EpsPoly& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<long>(i);
    return -1;
}

EpsilonFamily canonical_family(long n) {
    EpsilonFamily f;
    for (long i = 1; i <= n; ++i) {
        EpsPoly z(static_cast<std::size_t>(i) + 1, Rat(1));
        z[0] = 0;
        f.push_back(std::move(z));
    }
    return f;
}

bool family_admissible(const EpsilonFamily& family) {
    for (const auto& z : family) {
        if (ep_is_zero(z)) return false;
        if (ep_at_zero(z) != 0) return false;  // must vanish at eps = 0
    }
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (ep_is_zero(ep_sub(family[i], family[j]))) return false;
    // each successive gap is infinitesimal against the previous scale
    long prev = ep_valuation(family[0]);
    for (std::size_t i = 0; i + 1 < family.size(); ++i) {
        long v = ep_valuation(ep_sub(family[i + 1], family[i]));
        if (v <= prev) return false;
        prev = v;
    }
    return true;
}

long eps_generic_rank(std::vector<std::vector<EpsPoly>> rows) {
    return static_cast<long>(eps_echelon(rows).size());
}

LimitRows eps_limit_rows(std::vector<std::vector<EpsPoly>> rows) {
    LimitRows out;
    std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    // replace the generators by an independent basis of the same row space:
    // each resaturation step then divides the exterior product by a positive
    // power of eps, so the loop terminates
    eps_echelon(rows);
    long g = static_cast<long>(rows.size());
    for (auto& r : rows) normalize_row(r);
    for (int iter = 0; iter < 10000; ++iter) {
        RatMatrix at0;
        for (const auto& r : rows) {
            RatVec v(ncols, Rat(0));
            for (std::size_t j = 0; j < ncols; ++j) v[j] = ep_at_zero(r[j]);
            at0.push_back(std::move(v));
        }
        RatMatrix basis = rref_of(at0, ncols);
        if (static_cast<long>(basis.size()) == g) {
            out.conclusive = true;
            out.basis = std::move(basis);
            return out;
        }
        // a combination vanishing at eps = 0: resaturate it
        RatMatrix t(ncols, RatVec(rows.size(), Rat(0)));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < ncols; ++j) t[j][i] = at0[i][j];
        RatMatrix null = kernel(t);
        if (null.empty()) {
            out.conclusive = false;  // rank already maximal among rows yet below generic
            return out;
        }
        const RatVec& c = null[0];
        EpsRow combo(ncols);
        std::size_t drop = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (c[i] == 0) continue;
            drop = i;
            for (std::size_t j = 0; j < ncols; ++j)
                combo[j] = ep_add(combo[j], ep_scaled(rows[i][j], c[i]));
        }
        if (row_valuation(combo) < 0) {
            rows.erase(rows.begin() + static_cast<long>(drop));
        } else {
            normalize_row(combo);
            rows[drop] = std::move(combo);
        }
    }
    return out;
}

// ---------- ideal components ----------

namespace {

Rat ep_like_add(const Rat& a, const Rat& b) { return a + b; }
EpsPoly ep_like_add(const EpsPoly& a, const EpsPoly& b) { return ep_add(a, b); }
bool ep_like_zero(const Rat& a) { return a == 0; }
bool ep_like_zero(const EpsPoly& a) { return ep_is_zero(a); }

// rows of the xi ideal component over mono_basis(n, k), generic scalar type
template <typename S, typename Mul>
std::vector<std::vector<S>> xi_rows(long m, long n, const std::vector<S>& z, long k,
                                    const S& one, Mul mul) {
    std::vector<std::vector<S>> rows;
    if (k < 2) return rows;
    auto monos = mono_basis(n, k);
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
    // powers z_i^t, t = 0..n-1
    std::vector<std::vector<S>> pw(z.size(), std::vector<S>{one});
    for (std::size_t i = 0; i < z.size(); ++i)
        for (long t = 1; t < n; ++t) pw[i].push_back(mul(pw[i].back(), z[i]));
    for (long i = 0; i < n; ++i)
        for (long j = i; j < n && j - i < m; ++j)
            for (const auto& mu : mono_basis(n, k - 2)) {
                std::vector<S> row(monos.size(), S{});
                for (long s = 0; s < n; ++s)
                    for (long t = 0; t < n; ++t) {
                        std::vector<int> e = mu;
                        ++e[static_cast<std::size_t>(s)];
                        ++e[static_cast<std::size_t>(t)];
                        S c = mul(pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)],
                                  pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]);
                        auto& cell = row[idx.at(e)];
                        cell = ep_like_add(cell, c);
                    }
                rows.push_back(std::move(row));
            }
    return rows;
}

void check_distinct(const std::vector<Rat>& z) {
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            if (z[i] == z[j]) throw std::invalid_argument("coordinates must be distinct");
}

// evaluation matrix: row per degree-k monomial in a_0..a_{n-1}, column per
// gap-ring basis element
template <typename S, typename Mul, typename Add>
std::vector<std::vector<S>> eval_rows(long m, long n, const std::vector<S>& z, long k,
                                      const S& one, Mul mul, Add add) {
    GapRing ring = gap_ring(m, n);
    std::vector<std::vector<S>> pw(z.size(), std::vector<S>{one});
    for (std::size_t i = 0; i < z.size(); ++i)
        for (long t = 1; t < n; ++t) pw[i].push_back(mul(pw[i].back(), z[i]));
    std::vector<std::vector<S>> rows;
    for (const auto& e : mono_basis(n, k)) {
        std::vector<S> cur(ring.basis.size(), S{});
        cur[static_cast<std::size_t>(ring.index_of({}))] = one;
        for (long i = 0; i < n; ++i)
            for (int rep = 0; rep < e[static_cast<std::size_t>(i)]; ++rep) {
                std::vector<S> next(ring.basis.size(), S{});
                for (std::size_t b = 0; b < ring.basis.size(); ++b) {
                    if (ep_like_zero(cur[b])) continue;
                    for (long j = 0; j < n; ++j) {
                        long to = ring.multiply(static_cast<long>(b),
                                                ring.index_of({static_cast<int>(j + 1)}));
                        if (to < 0) continue;
                        next[static_cast<std::size_t>(to)] =
                            add(next[static_cast<std::size_t>(to)],
                                mul(cur[b], pw[static_cast<std::size_t>(j)]
                                              [static_cast<std::size_t>(i)]));
                    }
                }
                cur = std::move(next);
            }
        rows.push_back(std::move(cur));
    }
    return rows;
}

}  // namespace

GradedIdealComponent kernel_component(long m, long n, const std::vector<Rat>& z, long k) {
    if (static_cast<long>(z.size()) != n) throw std::invalid_argument("need n coordinates");
    check_distinct(z);
    auto rows = eval_rows<Rat>(m, n, z, k, Rat(1),
                               [](const Rat& a, const Rat& b) { return Rat(a * b); },
                               [](const Rat& a, const Rat& b) { return Rat(a + b); });
    GradedIdealComponent comp;
    comp.ambient = static_cast<long>(rows.size());
    if (rows.empty()) return comp;
    // left kernel: combinations of monomials evaluating to zero
    std::size_t ncols = rows[0].size();
    RatMatrix t(ncols, RatVec(rows.size(), Rat(0)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j) t[j][i] = rows[i][j];
    comp.basis = rref_of(kernel(t), rows.size());
    return comp;
}

GradedIdealComponent xi_ideal_component(long m, long n, const std::vector<Rat>& z, long k) {
    if (static_cast<long>(z.size()) != n) throw std::invalid_argument("need n coordinates");
    check_distinct(z);
    GradedIdealComponent comp;
    comp.ambient = static_cast<long>(mono_basis(n, k).size());
    auto rows = xi_rows<Rat>(m, n, z, k, Rat(1),
                             [](const Rat& a, const Rat& b) { return Rat(a * b); });
    comp.basis = rref_of(rows, static_cast<std::size_t>(comp.ambient));
    return comp;
}

GradedIdealComponent defining_component(long m, long n, long k) {
    auto monos = mono_basis(n, k);
    GradedIdealComponent comp;
    comp.ambient = static_cast<long>(monos.size());
    std::map<XiMonomial, std::size_t> cols;
    std::vector<XiPoly> images;
    for (const auto& e : monos) {
        XiMonomial w;
        for (long i = 0; i < n; ++i)
            w.insert(w.end(), static_cast<std::size_t>(e[static_cast<std::size_t>(i)]),
                     static_cast<int>(i));
        XiPoly nf = normal_form(m, XiPoly{{w, Rat(1)}});
        for (const auto& [mono, c] : nf) cols.emplace(mono, cols.size());
        images.push_back(std::move(nf));
    }
    RatMatrix t(cols.size(), RatVec(monos.size(), Rat(0)));
    for (std::size_t i = 0; i < images.size(); ++i)
        for (const auto& [mono, c] : images[i]) t[cols.at(mono)][i] = c;
    if (cols.empty()) t.assign(1, RatVec(monos.size(), Rat(0)));
    comp.basis = rref_of(kernel(t), monos.size());
    return comp;
}

LimitComponent limit_component(long m, long n, const EpsilonFamily& family, long k) {
    LimitComponent out;
    out.comp.ambient = static_cast<long>(mono_basis(n, k).size());
    auto rows = xi_rows<EpsPoly>(m, n, family, k, EpsPoly{Rat(1)}, ep_mul);
    if (rows.empty()) {
        out.conclusive = true;
        return out;
    }
    LimitRows lim = eps_limit_rows(std::move(rows));
    out.conclusive = lim.conclusive;
    out.comp.basis = std::move(lim.basis);
    return out;
}

LimitComponent limit_kernel_component(long m, long n, const EpsilonFamily& family, long k) {
    LimitComponent out;
    auto rows = eval_rows<EpsPoly>(m, n, family, k, EpsPoly{Rat(1)}, ep_mul, ep_add);
    out.comp.ambient = static_cast<long>(rows.size());
    if (rows.empty()) {
        out.conclusive = true;
        return out;
    }
    std::size_t nmono = rows.size();
    std::size_t ncols = rows[0].size();
    std::vector<EpsRow> t(ncols, EpsRow(nmono));
    for (std::size_t i = 0; i < nmono; ++i)
        for (std::size_t j = 0; j < ncols; ++j) t[j][i] = rows[i][j];
    std::vector<EpsRow> null = eps_kernel(std::move(t), nmono);
    if (null.empty()) {
        out.conclusive = true;
        return out;
    }
    LimitRows lim = eps_limit_rows(std::move(null));
    out.conclusive = lim.conclusive;
    out.comp.basis = std::move(lim.basis);
    return out;
}

ConjectureReport conjecture_scan(long m, long n, long k_max, const EpsilonFamily& family) {
    ConjectureReport rep;
    std::vector<Rat> z1;
    for (const auto& zp : family) {
        Rat v(0), p(1);
        for (const Rat& c : zp) {
            v += c * p;
            p /= 7;  // sample point eps = 1/7
        }
        z1.push_back(v);
    }
    rep.all_equal = true;
    for (long k = 0; k <= k_max; ++k) {
        GradedIdealComponent gen = xi_ideal_component(m, n, z1, k);
        GradedIdealComponent def = defining_component(m, n, k);
        LimitComponent lim = limit_component(m, n, family, k);
        rep.generic_dims.push_back(gen.dim());
        rep.limit_dims.push_back(lim.comp.dim());
        rep.defining_dims.push_back(def.dim());
        Verdict v;
        if (!lim.conclusive) {
            v = Verdict::Inconclusive;
        } else if (row_spaces_equal(lim.comp.basis, def.basis)) {
            v = Verdict::Equal;
        } else {
            RowSpace span(static_cast<std::size_t>(def.ambient));
            for (const auto& r : lim.comp.basis) span.add(r);
            bool contains_def = true;
            for (const auto& r : def.basis)
                if (!span.contains(r)) contains_def = false;
            RowSpace dspan(static_cast<std::size_t>(def.ambient));
            for (const auto& r : def.basis) dspan.add(r);
            bool contains_lim = true;
            for (const auto& r : lim.comp.basis)
                if (!dspan.contains(r)) contains_lim = false;
            v = contains_def ? Verdict::LimitLarger
                             : (contains_lim ? Verdict::LimitSmaller : Verdict::Incomparable);
        }
        if (v != Verdict::Equal) rep.all_equal = false;
        rep.verdicts.push_back(v);
    }
    return rep;
}

ReindexReport reindex_limit_check(long m, long n, long k, const EpsilonFamily& family) {
    ReindexReport rep;
    LimitComponent lim = limit_kernel_component(m, n, family, k);
    rep.conclusive = lim.conclusive;
    if (!rep.conclusive) return rep;
    GradedIdealComponent def = defining_component(m, n, k);
    // xi_i -> a_{n-1-i}: reverse each exponent vector
    auto monos = mono_basis(n, k);
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
    RatMatrix mapped;
    for (const auto& r : def.basis) {
        RatVec v(monos.size(), Rat(0));
        for (std::size_t i = 0; i < monos.size(); ++i) {
            std::vector<int> rev(monos[i].rbegin(), monos[i].rend());
            v[idx.at(rev)] = r[i];
        }
        mapped.push_back(std::move(v));
    }
    rep.equal = row_spaces_equal(mapped, lim.comp.basis);
    return rep;
}

}  // namespace pjack
