// ffid: runs the verification grids, computes single objects, writes reports.

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffid/carlitz.hpp"
#include "ffid/harness.hpp"
#include "ffid/identities.hpp"
#include "ffid/kinf.hpp"
#include "ffid/mzv.hpp"

using namespace ffid;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Array parse_array(const std::string& s) {
    Array a;
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, ',');) {
        if (part.empty()) continue;
        int v = 0;
        try {
            v = std::stoi(part);
        } catch (const std::exception&) {
            throw UsageError("bad array entry '" + part + "' in '" + s + "'");
        }
        if (v <= 0) throw UsageError("array entries must be positive: '" + s + "'");
        a.push_back(v);
    }
    return a;
}

json matrix_json(const MatK& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

std::string matrix_text(const MatK& m) {
    std::string s;
    for (int i = 0; i < m.rows(); ++i) {
        s += "  [";
        for (int j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).str();
        s += "]\n";
    }
    return s;
}

json comb_json(const ArrayComb& c) {
    json o = json::object();
    for (auto& [a, v] : c.terms()) o[array_str(a)] = v.str();
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric verification of identities for tensor powers of the Carlitz module"};
    app.require_subcommand(0, 1);
    app.set_config("--config", "", "flat key=value file mirroring the flags; flags win");

    GridOptions g;
    std::optional<int> q, d, k, kmax, r, m, mmax, l, lmax, j;
    int jobs = 1;
    double budget = 60;
    std::string json_path, arr_a, arr_b;
    bool timing = false, list_flag = false;
    long seed = 1;

    app.add_option("--q", q, "field size")->check(CLI::Range(2, 1 << 16));
    app.add_option("--d", d, "tensor power")->check(CLI::Range(1, 16));
    app.add_option("--k", k, "single k")->check(CLI::NonNegativeNumber);
    app.add_option("--kmax", kmax, "k runs up to kmax")->check(CLI::NonNegativeNumber);
    app.add_option("--r", r, "single r (thmC, compute cm)")->check(CLI::PositiveNumber);
    app.add_option("--m", m, "single m")->check(CLI::PositiveNumber);
    app.add_option("--mmax", mmax, "m runs up to mmax")->check(CLI::PositiveNumber);
    app.add_option("--l", l, "pairing level (motivic)")->check(CLI::NonNegativeNumber);
    app.add_option("--lmax", lmax, "pairing levels up to lmax (motivic)")->check(CLI::NonNegativeNumber);
    app.add_option("--j", j, "twist index (stabilization)")->check(CLI::NonNegativeNumber);
    app.add_option("--prec", g.prec, "theta^{-1} digits")->capture_default_str()->check(CLI::Range(8, 1 << 16));
    app.add_option("--tdeg", g.tdeg, "t-degree of the Omega series")->capture_default_str()->check(CLI::Range(1, 1 << 12));
    app.add_option("--seed", seed, "seed for random instances")->capture_default_str()->check(CLI::NonNegativeNumber);
    app.add_option("--instances", g.instances, "random W per motivic case")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--json", json_path, "write the JSON report here");
    app.add_option("--jobs", jobs, "parallel cases")->envname("FFID_JOBS")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--budget-sec", budget, "wall-clock budget per case, 0 for none")->capture_default_str();
    app.add_flag("--timing", timing, "include wall times in the JSON report");
    app.add_flag("--list", list_flag, "list the families and their parameter domains");
    app.add_option("--a", arr_a, "first array, comma separated (array-products, zeta)");
    app.add_option("--b", arr_b, "second array (array-products)");

    std::string family, object;
    auto* verify = app.add_subcommand("verify", "run a verification grid");
    verify->add_option("family", family, "family name or 'all'")->required();
    auto* numeric = app.add_subcommand("numeric", "numeric families, or the values pi and zeta");
    numeric->add_option("family", family, "thmE | carlitz-ratio | stabilization | all | pi | zeta")->required();
    auto* compute = app.add_subcommand("compute", "print one object");
    compute->add_option("object", object, "Q | P | L | gamma | cm | array-products")
        ->required()
        ->check(CLI::IsMember({"Q", "P", "L", "gamma", "cm", "array-products"}));
    auto* list = app.add_subcommand("list", "list the families and their parameter domains");
    for (auto* s : {verify, numeric, compute, list}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    g.q = q, g.d = d, g.k = k, g.kmax = kmax, g.r = r, g.m = m, g.mmax = mmax, g.l = l, g.lmax = lmax, g.j = j;
    g.seed = (std::uint64_t)seed;

    try {
        if (list_flag || list->parsed() || app.get_subcommands().empty()) {
            if (!list_flag && !list->parsed()) {
                std::cerr << app.help();
                return 1;
            }
            for (auto& f : families())
                std::cout << std::left << std::setw(16) << f.name << f.domain << "\n" << std::string(16, ' ') << f.what << "\n";
            return 0;
        }

        if (compute->parsed()) {
            int qq = q.value_or(3), dd = d.value_or(2), kk = k.value_or(1);
            const Field& F = Field::get(qq);
            json out;
            out["version"] = {{"tool", kToolVersion}, {"schema", kSchemaVersion}};
            out["object"] = object;
            std::ostringstream txt;
            if (object == "cm") {
                int rr = r.value_or(1);
                out["params"] = {{"q", std::to_string(qq)}, {"d", std::to_string(dd)}, {"r", std::to_string(rr)}};
                CmTable t = cm_expansion(F, dd, rr);
                json v = json::object();
                txt << "c_m for q=" << qq << " d=" << dd << " r=" << rr << "\n";
                for (auto& [mono, c] : t.c) {
                    v[array_str(mono)] = c.str();
                    txt << "  y^" << array_str(mono) << " : " << c.str() << "\n";
                }
                out["value"] = v;
            } else if (object == "array-products") {
                if (arr_a.empty() || arr_b.empty()) throw UsageError("array-products needs --a and --b");
                ArrayComb A = ArrayComb::of(F, parse_array(arr_a)), B = ArrayComb::of(F, parse_array(arr_b));
                ArrayComb st = stuffle(A, B), di = diamond(A, B), tab = triangle(A, B), tba = triangle(B, A);
                bool split = st == di + tab + tba;
                out["params"] = {{"q", std::to_string(qq)}, {"a", arr_a}, {"b", arr_b}};
                out["value"] = {{"stuffle", comb_json(st)},
                                {"diamond", comb_json(di)},
                                {"triangle_ab", comb_json(tab)},
                                {"triangle_ba", comb_json(tba)},
                                {"stuffle_split", split ? "holds" : "fails"}};
                txt << "a * b  = " << st.str() << "\na <> b = " << di.str() << "\na |> b = " << tab.str()
                    << "\nb |> a = " << tba.str() << "\na * b = a <> b + a |> b + b |> a: " << (split ? "holds" : "fails")
                    << "\n";
            } else {
                CarlitzModel cm(F, dd);
                MatK M = object == "Q" ? cm.Q(kk) : object == "P" ? cm.P(kk) : object == "L" ? cm.L(kk) : cm.Gamma(kk);
                out["params"] = {{"q", std::to_string(qq)}, {"d", std::to_string(dd)}, {"k", std::to_string(kk)}};
                out["value"] = matrix_json(M);
                txt << object << "_" << kk << " for q=" << qq << " d=" << dd << "\n" << matrix_text(M);
            }
            std::cout << txt.str();
            if (!json_path.empty()) write_file(json_path, out.dump(2) + "\n");
            return 0;
        }

        if (numeric->parsed() && (family == "pi" || family == "zeta")) {
            int qq = q.value_or(2);
            const Field& F = Field::get(qq);
            LaurentVal v;
            json out;
            out["version"] = {{"tool", kToolVersion}, {"schema", kSchemaVersion}};
            out["object"] = family;
            if (family == "pi") {
                int kk = k.value_or(1);
                v = pi_power(F, (long)kk * (qq - 1), g.prec);
                out["params"] = {{"q", std::to_string(qq)}, {"power", std::to_string(kk * (qq - 1))}, {"prec", std::to_string(g.prec)}};
            } else {
                Array a = parse_array(arr_a.empty() ? std::to_string(qq - 1) : arr_a);
                v = zeta_value(F, a, g.prec);
                out["params"] = {{"q", std::to_string(qq)}, {"array", array_str(a)}, {"prec", std::to_string(g.prec)}};
            }
            out["value"] = v.str(1 << 20);
            out["known_from_exponent"] = std::to_string(v.lo());
            std::cout << family << " = " << v.str(12) << "\n";
            if (!json_path.empty()) write_file(json_path, out.dump(2) + "\n");
            return 0;
        }

        std::vector<CaseSpec> grid;
        std::string cmd = verify->parsed() ? "verify" : "numeric";
        if (family == "all") {
            for (auto& f : families())
                if (verify->parsed() || is_numeric_family(f.name)) {
                    auto part = build_grid(f.name, g);
                    grid.insert(grid.end(), part.begin(), part.end());
                }
        } else {
            if (!is_family(family)) throw UsageError("unknown family '" + family + "'; see 'ffid list'");
            if (numeric->parsed() && !is_numeric_family(family))
                throw UsageError("'" + family + "' is exact; use 'ffid verify " + family + "'");
            grid = build_grid(family, g);
        }

        RunOutcome ro = run_cases(grid, RunOptions{jobs, budget});
        ReportDoc doc;
        doc.timing = timing;
        auto opt = [](const std::optional<int>& o) { return o ? std::to_string(*o) : std::string("default"); };
        std::ostringstream bs;
        bs << budget;
        doc.config = {{"command", cmd},   {"family", family},      {"q", opt(q)},       {"d", opt(d)},
                      {"k", opt(k)},      {"kmax", opt(kmax)},     {"r", opt(r)},       {"m", opt(m)},
                      {"mmax", opt(mmax)}, {"l", opt(l)},          {"lmax", opt(lmax)}, {"j", opt(j)},
                      {"prec", std::to_string(g.prec)},           {"tdeg", std::to_string(g.tdeg)},
                      {"seed", std::to_string(seed)},             {"instances", std::to_string(g.instances)},
                      {"budget_sec", bs.str()},                   {"timing", timing ? "on" : "off"}};
        doc.cases = std::move(ro.results);
        std::cout << to_text(doc);
        if (!json_path.empty()) write_file(json_path, to_json(doc));
        int code = exit_code(doc);
        if (ro.abandoned) {
            // an over-budget case is still computing; leave without running destructors under it
            std::cout.flush();
            std::fflush(nullptr);
            std::_Exit(code);
        }
        return code;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
