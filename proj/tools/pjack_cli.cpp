// pjack: verification campaigns over the exact engine.
//
// Exit codes: 0 all assertion-grade checks passed, 1 a check failed,
// 2 usage error. fusion-scan and odd-scan are conjecture-grade: they emit
// verdict reports and never exit 1.
//
// JSON reports carry no timings, so reruns with identical flags are
// byte-identical; the table output prints elapsed times instead.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pjack/characters.hpp"
#include "pjack/fock.hpp"
#include "pjack/fusion.hpp"
#include "pjack/jack.hpp"
#include "pjack/json_io.hpp"
#include "pjack/presentation.hpp"
#include "pjack/qseries.hpp"
#include "pjack/symfunc.hpp"

using json = nlohmann::json;
using namespace pjack;

namespace {

struct Range {
    long lo = 0, hi = -1;
    long count() const { return hi < lo ? 0 : hi - lo + 1; }
};

Range parse_range(const std::string& s) {
    Range r;
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stol(s);
        } else {
            r.lo = std::stol(s.substr(0, dots));
            r.hi = std::stol(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected an integer or lo..hi range, got '" + s + "'");
    }
    if (r.hi < r.lo) throw CLI::ValidationError("empty range '" + s + "'");
    return r;
}

long worker_count() {
    if (const char* e = std::getenv("PJACK_WORKERS")) {
        long v = std::atol(e);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? std::min<long>(hc, 8) : 1;
}

// Bounded pool over independent cells; results land in index-keyed slots so
// assembly order never depends on scheduling.
template <typename F>
void run_cells(long count, F&& body) {
    long w = std::min(worker_count(), count);
    if (w <= 1) {
        for (long i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    for (long t = 0; t < w; ++t)
        pool.emplace_back([&] {
            for (long i; (i = next.fetch_add(1)) < count;) body(i);
        });
    for (auto& th : pool) th.join();
}

struct Common {
    bool json_out = false;
    long seed = 0;  // recorded in reports; no command draws randomness yet
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_flag("--json", c.json_out, "emit a JSON report instead of the table");
    sub->add_option("--seed", c.seed, "seed recorded in the report");
    // handled before parsing (see expand_config); registered for --help only
    static std::string config_sink;
    sub->add_option("--config", config_sink, "read flags from a key=value file");
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Splices "key=value" lines from a --config file into the argument list as
// "--key value" ("key=true" becomes a bare flag). Flags given explicitly on
// the command line win over the file.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i),
                       args.begin() + static_cast<long>(i) + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<long>(i));
        } else {
            continue;
        }
        std::ifstream f(path);
        if (!f) throw CLI::FileError("could not read config file " + path);
        std::vector<std::string> extra;
        std::string line;
        while (std::getline(f, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw CLI::FileError("config line without '=': " + line);
            std::string flag = "--" + trim(line.substr(0, eq));
            std::string val = trim(line.substr(eq + 1));
            bool given = false;
            for (const auto& a : args)
                if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
            if (given) continue;
            if (val == "true") {
                extra.push_back(flag);
            } else if (val != "false") {
                extra.push_back(flag);
                extra.push_back(val);
            }
        }
        args.insert(args.begin() + static_cast<long>(i), extra.begin(), extra.end());
        break;
    }
    return args;
}

json report_head(const std::string& command, const Common& c) {
    json rep;
    rep["report_version"] = 1;
    rep["command"] = command;
    rep["seed"] = c.seed;
    return rep;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void emit(const json& rep, const Common& c, std::chrono::steady_clock::time_point t0,
          const std::string& table) {
    if (c.json_out) {
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << table;
        std::cout << "elapsed: " << elapsed_ms(t0) << " ms\n";
    }
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return Partition::from_unsorted(std::move(parts));
}

// ---- jack ------------------------------------------------------------

int cmd_jack(const std::string& lambda, const std::string& alpha_s, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    Partition la = parse_partition(lambda);
    Rat alpha = rat_parse(alpha_s);
    SymFunc jm = jack(la, alpha);
    SymFunc jp = change_basis(jm, Basis::PowerSum);
    Rat norm = jack_norm_sq(la, alpha);

    json rep = report_head("jack", c);
    rep["lambda"] = partition_json(la);
    rep["alpha"] = rat_str(alpha);
    rep["monomial"] = symfunc_json(jm);
    rep["powersum"] = symfunc_json(jp);
    rep["norm_sq"] = rat_str(norm);

    std::ostringstream tab;
    tab << "J_lambda, monomial basis:\n";
    for (const auto& [mu, coef] : jm.terms()) {
        tab << "  m[";
        for (std::size_t i = 0; i < mu.parts().size(); ++i)
            tab << (i ? "," : "") << mu.parts()[i];
        tab << "]  " << rat_str(coef) << "\n";
    }
    tab << "norm_sq: " << rat_str(norm) << "\n";
    emit(rep, c, t0, tab.str());
    return 0;
}

// ---- char ------------------------------------------------------------

struct CharOpts {
    bool A = false, principal = false, finite = false, coinv = false, L = false;
    long m = 1, p = 3, n = 3, i = 0, kmax = 6, qmax = 10;
    bool csv = false;
};

int cmd_char(const CharOpts& o, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    int picked = o.A + o.principal + o.finite + o.coinv + o.L;
    if (picked != 1)
        throw CLI::ValidationError("pick exactly one of --A --principal --finite --coinv --L");
    QSeries s;
    std::string family;
    if (o.A) {
        family = "A";
        s = ch_A(o.m, o.kmax, o.qmax);
    } else if (o.principal) {
        family = "principal";
        s = ch_principal(o.m, o.kmax, o.qmax);
    } else if (o.finite) {
        family = "finite";
        s = ch_finite(o.m, o.p, o.qmax);
    } else if (o.coinv) {
        family = "coinv";
        s = ch_coinv(o.m, o.n, o.qmax);
    } else {
        family = "L";
        s = ch_L(o.m, o.i, o.qmax);
    }

    json rep = report_head("char", c);
    rep["family"] = family;
    rep["m"] = o.m;
    if (o.finite) rep["p"] = o.p;
    if (o.coinv) rep["n"] = o.n;
    if (o.L) rep["i"] = o.i;
    if (o.A || o.principal) rep["kmax"] = o.kmax;
    rep["qmax"] = o.qmax;
    rep["series"] = qseries_json(s);

    if (o.csv) {
        std::cout << "z_units,q_exp,coeff\n";
        for (const auto& [key, coef] : s.terms())
            std::cout << key.first << "," << rat_str(key.second) << "," << coef.get_str()
                      << "\n";
        return 0;
    }
    std::ostringstream tab;
    tab << "character " << family << " (z exponents in charge units)\n";
    for (const auto& [key, coef] : s.terms())
        tab << "  z^" << key.first << " q^" << rat_str(key.second) << "  " << coef.get_str()
            << "\n";
    emit(rep, c, t0, tab.str());
    return 0;
}

// ---- verify-main -----------------------------------------------------

json verify_main_core(Range mr, Range pr, Range kr, bool& ok) {
    struct Cell {
        long m, p, k;
    };
    std::vector<Cell> cells;
    for (long m = mr.lo; m <= mr.hi; ++m)
        for (long k = kr.lo; k <= kr.hi; ++k)
            for (long p = std::max(pr.lo, m * k + k); p <= pr.hi; ++p)
                cells.push_back({m, p, k});
    std::vector<json> rows(cells.size());
    std::atomic<bool> all_ok{true};
    run_cells(static_cast<long>(cells.size()), [&](long i) {
        const Cell& cl = cells[static_cast<std::size_t>(i)];
        MainTheoremReport r = verify_theorem_main(cl.m, cl.p, cl.k);
        bool pass = r.match && r.scale != 0;
        if (!pass) all_ok = false;
        json row;
        row["m"] = cl.m;
        row["p"] = cl.p;
        row["k"] = cl.k;
        row["match"] = pass;
        row["scale"] = rat_str(r.scale);
        rows[static_cast<std::size_t>(i)] = row;
    });
    ok = all_ok;
    json out;
    out["cells"] = rows;
    out["pass"] = ok;
    return out;
}

int cmd_verify_main(Range mr, Range pr, Range kr, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    json body = verify_main_core(mr, pr, kr, ok);
    json rep = report_head("verify-main", c);
    rep.update(body);
    std::ostringstream tab;
    tab << "m p k match scale\n";
    for (const auto& row : body["cells"])
        tab << row["m"].get<long>() << " " << row["p"].get<long>() << " "
            << row["k"].get<long>() << " " << (row["match"].get<bool>() ? "yes" : "NO") << " "
            << row["scale"].get<std::string>() << "\n";
    emit(rep, c, t0, tab.str());
    return ok ? 0 : 1;
}

// ---- verify-jack-basis -----------------------------------------------

json verify_jack_core(Range mr, Range pr, Range kr, bool reconstruct, bool& ok) {
    ok = true;
    json rows = json::array();
    for (long m = mr.lo; m <= mr.hi; ++m)
        for (long k = kr.lo; k <= kr.hi; ++k)
            for (long p = std::max(pr.lo, m * k + k); p <= pr.hi; ++p) {
                JackBasisReport r = verify_theorem_jack(m, p, k);
                json row;
                row["m"] = m;
                row["p"] = p;
                row["k"] = k;
                row["equal"] = r.equal;
                json dims = json::array();
                for (const auto& [deg, d] : r.closure_dims)
                    dims.push_back(json::array({deg, d}));
                row["dims"] = dims;
                if (!r.equal) ok = false;
                if (reconstruct) {
                    bool rec_ok = true;
                    long width = p - (k - 1) * m - 1;
                    for (const auto& mu :
                         subdiagrams(static_cast<int>(width), static_cast<int>(k)))
                        if (!(reconstruct_jack(m, p, k, mu) == jack(mu, Rat(m)))) rec_ok = false;
                    row["reconstruct"] = rec_ok;
                    if (!rec_ok) ok = false;
                }
                rows.push_back(row);
            }
    json out;
    out["cells"] = rows;
    out["pass"] = ok;
    return out;
}

int cmd_verify_jack(Range mr, Range pr, Range kr, bool reconstruct, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    json body = verify_jack_core(mr, pr, kr, reconstruct, ok);
    json rep = report_head("verify-jack-basis", c);
    rep.update(body);
    std::ostringstream tab;
    tab << "m p k equal" << (reconstruct ? " reconstruct" : "") << "\n";
    for (const auto& row : body["cells"]) {
        tab << row["m"].get<long>() << " " << row["p"].get<long>() << " "
            << row["k"].get<long>() << " " << (row["equal"].get<bool>() ? "yes" : "NO");
        if (reconstruct) tab << " " << (row["reconstruct"].get<bool>() ? "yes" : "NO");
        tab << "\n";
    }
    emit(rep, c, t0, tab.str());
    return ok ? 0 : 1;
}

// ---- presentation ----------------------------------------------------

json presentation_core(Range mr, long kmax, long smax, bool& ok) {
    struct Cell {
        long m, k, s;
    };
    std::vector<Cell> cells;
    for (long m = mr.lo; m <= mr.hi; ++m)
        for (long k = 0; k <= kmax; ++k)
            for (long s = 0; s <= smax; ++s) cells.push_back({m, k, s});
    std::vector<json> rows(cells.size());
    std::atomic<bool> all_ok{true};
    run_cells(static_cast<long>(cells.size()), [&](long i) {
        const Cell& cl = cells[static_cast<std::size_t>(i)];
        long formula = graded_dim(cl.m, cl.k, cl.s);
        long reduced = monomial_count(cl.k, cl.s) - relation_rank(cl.m, cl.k, cl.s);
        long adm = 0;
        for (const auto& w : bidegree_monomials(cl.k, cl.s))
            if (xi_admissible(cl.m, w)) ++adm;
        bool pass = formula == reduced && reduced == adm;
        if (!pass) all_ok = false;
        json row;
        row["m"] = cl.m;
        row["k"] = cl.k;
        row["s"] = cl.s;
        row["formula"] = formula;
        row["reduced"] = reduced;
        row["admissible"] = adm;
        row["match"] = pass;
        rows[static_cast<std::size_t>(i)] = row;
    });
    ok = all_ok;
    json out;
    out["cells"] = rows;
    out["pass"] = ok;
    return out;
}

int cmd_presentation(Range mr, long kmax, long smax, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    json body = presentation_core(mr, kmax, smax, ok);
    json rep = report_head("presentation", c);
    rep.update(body);
    std::ostringstream tab;
    long mismatches = 0;
    for (const auto& row : body["cells"])
        if (!row["match"].get<bool>()) {
            ++mismatches;
            tab << "MISMATCH m=" << row["m"].get<long>() << " k=" << row["k"].get<long>()
                << " s=" << row["s"].get<long>() << "\n";
        }
    tab << "graded dimensions: " << body["cells"].size() << " cells, " << mismatches
        << " mismatches\n";
    emit(rep, c, t0, tab.str());
    return ok ? 0 : 1;
}

// ---- coinvariants ----------------------------------------------------

json coinvariants_core(Range mr, Range topr, long kmax, long smax, Range finr, bool& ok) {
    ok = true;
    json rows = json::array();
    for (long m = mr.lo; m <= mr.hi; ++m)
        for (long top = topr.lo; top <= topr.hi; ++top) {
            CoinvariantReport r = coinvariant_basis(m, top, kmax, smax);
            json row;
            row["m"] = m;
            row["top"] = top;
            row["independent"] = r.independent;
            row["basis_size"] = r.basis.size();
            json dims = json::array();
            for (const auto& [bd, d] : r.dims)
                dims.push_back(json::array({bd.first, bd.second, d}));
            row["dims"] = dims;
            if (!r.independent) ok = false;
            rows.push_back(row);
        }
    json fin = json::array();
    for (long m = mr.lo; m <= mr.hi; ++m)
        for (long n = finr.lo; n <= finr.hi; ++n) {
            long d = finitization_dim(m, n);
            Int want = fibonacci_m(static_cast<int>(m), static_cast<int>(n));
            bool pass = Int(d) == want;
            if (!pass) ok = false;
            fin.push_back(json{{"m", m}, {"n", n}, {"dim", d}, {"expected", want.get_str()},
                               {"match", pass}});
        }
    json out;
    out["cells"] = rows;
    out["finitization"] = fin;
    out["pass"] = ok;
    return out;
}

int cmd_coinvariants(Range mr, Range topr, long kmax, long smax, Range finr, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    json body = coinvariants_core(mr, topr, kmax, smax, finr, ok);
    json rep = report_head("coinvariants", c);
    rep.update(body);
    std::ostringstream tab;
    tab << "m top independent basis\n";
    for (const auto& row : body["cells"])
        tab << row["m"].get<long>() << " " << row["top"].get<long>() << " "
            << (row["independent"].get<bool>() ? "yes" : "NO") << " "
            << row["basis_size"].get<long>() << "\n";
    tab << "m n finitization expected\n";
    for (const auto& row : body["finitization"])
        tab << row["m"].get<long>() << " " << row["n"].get<long>() << " "
            << row["dim"].get<long>() << " " << row["expected"].get<std::string>()
            << (row["match"].get<bool>() ? "" : "  MISMATCH") << "\n";
    emit(rep, c, t0, tab.str());
    return ok ? 0 : 1;
}

// ---- semiinfinite ----------------------------------------------------

json semiinfinite_core(Range mr, long cutoff, bool& ok) {
    ok = true;
    json rows = json::array();
    for (long m = mr.lo; m <= mr.hi; ++m)
        for (long i = 0; i < 2 * m; ++i) {
            auto seqs = enumerate_semiinfinite(m, i, cutoff);
            std::map<std::pair<long, Rat>, Int> counts;
            for (const auto& s : seqs) counts[{s.charge, s.energy}] += 1;
            QSeries l = ch_L(m, i, cutoff);
            bool pass = counts == l.terms();
            if (!pass) ok = false;
            json row;
            row["m"] = m;
            row["i"] = i;
            row["sequences"] = seqs.size();
            row["match"] = pass;
            rows.push_back(row);
        }
    json out;
    out["cells"] = rows;
    out["pass"] = ok;
    return out;
}

int cmd_semiinfinite(Range mr, long cutoff, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    json body = semiinfinite_core(mr, cutoff, ok);
    json rep = report_head("semiinfinite", c);
    rep["cutoff"] = cutoff;
    rep.update(body);
    std::ostringstream tab;
    tab << "m i sequences match\n";
    for (const auto& row : body["cells"])
        tab << row["m"].get<long>() << " " << row["i"].get<long>() << " "
            << row["sequences"].get<long>() << " "
            << (row["match"].get<bool>() ? "yes" : "NO") << "\n";
    emit(rep, c, t0, tab.str());
    return ok ? 0 : 1;
}

// ---- fusion-scan (conjecture-grade, never exits 1) ---------------------

EpsilonFamily family_from_gaps(const std::string& gaps, long n) {
    if (gaps.empty()) return canonical_family(n);
    std::vector<long> degs;
    std::stringstream ss(gaps);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) degs.push_back(std::stol(tok));
    if (static_cast<long>(degs.size()) != n)
        throw CLI::ValidationError("--gaps needs exactly n entries");
    EpsilonFamily f;
    EpsPoly cur;
    for (long d : degs) {
        if (d < 1) throw CLI::ValidationError("--gaps entries must be >= 1");
        if (static_cast<long>(cur.size()) <= d)
            cur.resize(static_cast<std::size_t>(d) + 1, Rat(0));
        cur[static_cast<std::size_t>(d)] = 1;
        f.push_back(cur);
    }
    if (!family_admissible(f))
        throw CLI::ValidationError("--gaps does not define an admissible family");
    return f;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Equal: return "equal";
        case Verdict::LimitLarger: return "limit-larger";
        case Verdict::LimitSmaller: return "limit-smaller";
        case Verdict::Incomparable: return "incomparable";
        default: return "inconclusive";
    }
}

json fusion_core(Range mr, Range nr, long kmax, const std::string& gaps) {
    json rows = json::array();
    for (long m = mr.lo; m <= mr.hi; ++m)
        for (long n = nr.lo; n <= nr.hi; ++n) {
            EpsilonFamily fam = family_from_gaps(gaps, n);
            ConjectureReport rep = conjecture_scan(m, n, kmax, fam);
            json row;
            row["m"] = m;
            row["n"] = n;
            row["generic_dims"] = rep.generic_dims;
            row["limit_dims"] = rep.limit_dims;
            row["defining_dims"] = rep.defining_dims;
            json verdicts = json::array();
            for (Verdict v : rep.verdicts) verdicts.push_back(verdict_name(v));
            row["verdicts"] = verdicts;
            row["all_equal"] = rep.all_equal;
            json reindex = json::array();
            for (long k = 0; k <= kmax; ++k) {
                ReindexReport rr = reindex_limit_check(m, n, k, fam);
                reindex.push_back(json{{"k", k}, {"conclusive", rr.conclusive},
                                       {"equal", rr.equal}});
            }
            row["reindex"] = reindex;
            // semicontinuity: the limit can only be at least as large
            bool semi = true;
            for (std::size_t k = 0; k < rep.verdicts.size(); ++k)
                if (rep.limit_dims[k] < rep.generic_dims[k]) semi = false;
            row["semicontinuous"] = semi;
            rows.push_back(row);
        }
    json out;
    out["cells"] = rows;
    out["family"] = gaps.empty() ? "canonical" : gaps;
    return out;
}

int cmd_fusion_scan(Range mr, Range nr, long kmax, const std::string& gaps, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    json body = fusion_core(mr, nr, kmax, gaps);
    json rep = report_head("fusion-scan", c);
    rep.update(body);
    std::ostringstream tab;
    tab << "m n verdicts (by degree)\n";
    for (const auto& row : body["cells"]) {
        tab << row["m"].get<long>() << " " << row["n"].get<long>() << " ";
        for (const auto& v : row["verdicts"]) tab << v.get<std::string>() << " ";
        tab << "\n";
    }
    emit(rep, c, t0, tab.str());
    return 0;  // conjecture-grade: reports only
}

// ---- odd-scan (conjecture-grade, never exits 1) -------------------------

json odd_core(Range mr, Range nr) {
    json rows = json::array();
    for (long m = mr.lo; m <= mr.hi; ++m)
        for (long n = nr.lo; n <= nr.hi; ++n) {
            OddDimReport r = odd_principal_dim(m, n);
            rows.push_back(json{{"m", m},
                                {"n", n},
                                {"dim", r.dim},
                                {"conjectured", r.conjectured.get_str()},
                                {"agrees", Int(r.dim) == r.conjectured}});
        }
    json out;
    out["cells"] = rows;
    return out;
}

int cmd_odd_scan(Range mr, Range nr, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    json body = odd_core(mr, nr);
    json rep = report_head("odd-scan", c);
    rep.update(body);
    std::ostringstream tab;
    tab << "m n dim conjectured agrees\n";
    for (const auto& row : body["cells"])
        tab << row["m"].get<long>() << " " << row["n"].get<long>() << " "
            << row["dim"].get<long>() << " " << row["conjectured"].get<std::string>() << " "
            << (row["agrees"].get<bool>() ? "yes" : "no") << "\n";
    emit(rep, c, t0, tab.str());
    return 0;  // conjecture-grade: reports only
}

// ---- all ---------------------------------------------------------------

int cmd_all(const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true, part;
    json rep = report_head("all", c);
    rep["verify_main"] = verify_main_core({1, 3}, {2, 6}, {1, 3}, part);
    ok = ok && part;
    rep["verify_jack_basis"] = verify_jack_core({1, 2}, {2, 5}, {1, 2}, true, part);
    ok = ok && part;
    rep["presentation"] = presentation_core({1, 2}, 4, 12, part);
    ok = ok && part;
    rep["coinvariants"] = coinvariants_core({1, 2}, {0, 5}, 3, 10, {0, 5}, part);
    ok = ok && part;
    rep["semiinfinite"] = semiinfinite_core({1, 2}, 6, part);
    ok = ok && part;
    rep["fusion_scan"] = fusion_core({1, 2}, {1, 4}, 4, "");
    rep["odd_scan"] = odd_core({1, 3}, {1, 6});
    rep["pass"] = ok;
    std::ostringstream tab;
    tab << "verify-main: " << (rep["verify_main"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n"
        << "verify-jack-basis: "
        << (rep["verify_jack_basis"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n"
        << "presentation: " << (rep["presentation"]["pass"].get<bool>() ? "pass" : "FAIL")
        << "\n"
        << "coinvariants: " << (rep["coinvariants"]["pass"].get<bool>() ? "pass" : "FAIL")
        << "\n"
        << "semiinfinite: " << (rep["semiinfinite"]["pass"].get<bool>() ? "pass" : "FAIL")
        << "\n"
        << "fusion-scan, odd-scan: report-only (see --json)\n"
        << "overall: " << (ok ? "pass" : "FAIL") << "\n";
    emit(rep, c, t0, tab.str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification campaigns for principal subspaces and Jack polynomials"};
    app.require_subcommand(1);

    int rc = 0;

    // jack
    auto* jackc = app.add_subcommand("jack", "one Jack polynomial, both bases, with its norm");
    auto jlambda = std::make_shared<std::string>("");
    auto jalpha = std::make_shared<std::string>("1");
    auto jcommon = std::make_shared<Common>();
    jackc->add_option("--lambda", *jlambda, "partition, comma separated (empty = constant)");
    jackc->add_option("--alpha", *jalpha, "deformation parameter, rational");
    add_common(jackc, *jcommon);
    jackc->callback([=, &rc] { rc = cmd_jack(*jlambda, *jalpha, *jcommon); });

    // char
    auto* charc = app.add_subcommand("char", "character tables");
    auto copts = std::make_shared<CharOpts>();
    auto ccommon = std::make_shared<Common>();
    charc->add_flag("--A", copts->A, "quadratic-algebra character");
    charc->add_flag("--principal", copts->principal, "principal-subspace character");
    charc->add_flag("--finite", copts->finite, "finitized character (needs --p)");
    charc->add_flag("--coinv", copts->coinv, "coinvariant character (needs --n)");
    charc->add_flag("--L", copts->L, "full lattice-sector character (needs --i)");
    charc->add_option("--m", copts->m, "gap parameter");
    charc->add_option("--p", copts->p, "finitization index");
    charc->add_option("--n", copts->n, "coinvariant index");
    charc->add_option("--i", copts->i, "charge residue");
    charc->add_option("--kmax", copts->kmax, "summation bound");
    charc->add_option("--qmax", copts->qmax, "q-degree truncation (-1 = exact, finite sums)");
    charc->add_flag("--csv", copts->csv, "emit z_units,q_exp,coeff rows");
    add_common(charc, *ccommon);
    charc->callback([=, &rc] { rc = cmd_char(*copts, *ccommon); });

    // grid commands share string-range flags
    auto add_grid = [&](CLI::App* sub, std::shared_ptr<std::string> m,
                        std::shared_ptr<std::string> second, const char* name2,
                        std::shared_ptr<std::string> third, const char* name3) {
        sub->add_option("--m", *m, "m or lo..hi");
        if (second) sub->add_option(std::string("--") + name2, *second, "value or lo..hi");
        if (third) sub->add_option(std::string("--") + name3, *third, "value or lo..hi");
    };

    auto* vm = app.add_subcommand("verify-main", "extremal-vector proportionality grid");
    auto vm_m = std::make_shared<std::string>("1..2");
    auto vm_p = std::make_shared<std::string>("2..5");
    auto vm_k = std::make_shared<std::string>("1..2");
    auto vm_common = std::make_shared<Common>();
    add_grid(vm, vm_m, vm_p, "p", vm_k, "k");
    add_common(vm, *vm_common);
    vm->callback([=, &rc] {
        rc = cmd_verify_main(parse_range(*vm_m), parse_range(*vm_p), parse_range(*vm_k),
                             *vm_common);
    });

    auto* vj = app.add_subcommand("verify-jack-basis", "closure-equals-Jack-span grid");
    auto vj_m = std::make_shared<std::string>("1..2");
    auto vj_p = std::make_shared<std::string>("2..5");
    auto vj_k = std::make_shared<std::string>("1..2");
    auto vj_rec = std::make_shared<bool>(false);
    auto vj_common = std::make_shared<Common>();
    add_grid(vj, vj_m, vj_p, "p", vj_k, "k");
    vj->add_flag("--reconstruct", *vj_rec, "also rebuild each Jack polynomial from mode scalars");
    add_common(vj, *vj_common);
    vj->callback([=, &rc] {
        rc = cmd_verify_jack(parse_range(*vj_m), parse_range(*vj_p), parse_range(*vj_k),
                             *vj_rec, *vj_common);
    });

    auto* pr = app.add_subcommand("presentation", "graded dimensions of the quadratic algebra");
    auto pr_m = std::make_shared<std::string>("1..2");
    auto pr_kmax = std::make_shared<long>(4);
    auto pr_smax = std::make_shared<long>(12);
    auto pr_common = std::make_shared<Common>();
    pr->add_option("--m", *pr_m, "m or lo..hi");
    pr->add_option("--kmax", *pr_kmax, "max word length");
    pr->add_option("--smax", *pr_smax, "max index sum");
    add_common(pr, *pr_common);
    pr->callback([=, &rc] {
        rc = cmd_presentation(parse_range(*pr_m), *pr_kmax, *pr_smax, *pr_common);
    });

    auto* co = app.add_subcommand("coinvariants", "top-bounded bases and finitized dimensions");
    auto co_m = std::make_shared<std::string>("1..2");
    auto co_top = std::make_shared<std::string>("0..5");
    auto co_kmax = std::make_shared<long>(3);
    auto co_smax = std::make_shared<long>(10);
    auto co_fin = std::make_shared<std::string>("0..5");
    auto co_common = std::make_shared<Common>();
    co->add_option("--m", *co_m, "m or lo..hi");
    co->add_option("--top", *co_top, "top index bound or lo..hi");
    co->add_option("--kmax", *co_kmax, "max word length checked");
    co->add_option("--smax", *co_smax, "max index sum checked");
    co->add_option("--fin-n", *co_fin, "finitization sizes, value or lo..hi");
    add_common(co, *co_common);
    co->callback([=, &rc] {
        rc = cmd_coinvariants(parse_range(*co_m), parse_range(*co_top), *co_kmax, *co_smax,
                              parse_range(*co_fin), *co_common);
    });

    auto* si = app.add_subcommand("semiinfinite", "sequence counts against sector characters");
    auto si_m = std::make_shared<std::string>("1..2");
    auto si_cut = std::make_shared<long>(6);
    auto si_common = std::make_shared<Common>();
    si->add_option("--m", *si_m, "m or lo..hi (all residues i are checked)");
    si->add_option("--cutoff", *si_cut, "q-degree cutoff");
    add_common(si, *si_common);
    si->callback(
        [=, &rc] { rc = cmd_semiinfinite(parse_range(*si_m), *si_cut, *si_common); });

    auto* fu = app.add_subcommand("fusion-scan",
                                  "degeneration-limit verdicts (reports, never exit 1)");
    auto fu_m = std::make_shared<std::string>("1..2");
    auto fu_n = std::make_shared<std::string>("1..4");
    auto fu_kmax = std::make_shared<long>(4);
    auto fu_gaps = std::make_shared<std::string>("");
    auto fu_common = std::make_shared<Common>();
    fu->add_option("--m", *fu_m, "m or lo..hi");
    fu->add_option("--n", *fu_n, "n or lo..hi");
    fu->add_option("--kmax", *fu_kmax, "max degree compared");
    fu->add_option("--gaps", *fu_gaps,
                   "comma list of gap valuations for a custom family (single n only)");
    add_common(fu, *fu_common);
    fu->callback([=, &rc] {
        rc = cmd_fusion_scan(parse_range(*fu_m), parse_range(*fu_n), *fu_kmax, *fu_gaps,
                             *fu_common);
    });

    auto* od = app.add_subcommand("odd-scan",
                                  "odd-lattice dimension reports (reports, never exit 1)");
    auto od_m = std::make_shared<std::string>("1..2");
    auto od_n = std::make_shared<std::string>("1..6");
    auto od_common = std::make_shared<Common>();
    od->add_option("--m", *od_m, "m or lo..hi");
    od->add_option("--n", *od_n, "n or lo..hi");
    add_common(od, *od_common);
    od->callback(
        [=, &rc] { rc = cmd_odd_scan(parse_range(*od_m), parse_range(*od_n), *od_common); });

    auto* allc = app.add_subcommand("all", "every assertion-grade campaign at the default grid");
    auto all_common = std::make_shared<Common>();
    add_common(allc, *all_common);
    allc->callback([=, &rc] { rc = cmd_all(*all_common); });

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
