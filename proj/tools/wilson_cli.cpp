#include "wilson/canonical.hpp"
#include "wilson/catalog.hpp"
#include "wilson/closedform.hpp"
#include "wilson/engine.hpp"
#include "wilson/errors.hpp"
#include "wilson/fixtures.hpp"
#include "wilson/geometry.hpp"
#include "wilson/loop_io.hpp"
#include "wilson/spectral.hpp"
#include "wilson/suites.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace wilson;

constexpr double kPi = 3.141592653589793238462643383279502884;

struct LoopInput {
    std::string file;
    std::string moves;
    std::string origin;

    void attach(CLI::App* cmd) {
        cmd->add_option("--loop", file, "loop JSON file (origin/moves or vertices)");
        cmd->add_option("--moves", moves, "loop as a U/D/L/R move string");
        cmd->add_option("--origin", origin, "base vertex \"x,y\" for --moves (default 0,0)");
    }

    Loop get() const {
        if (!file.empty()) return load_loop_file(file);
        if (!moves.empty()) {
            Vec o{0, 0};
            if (!origin.empty()) {
                std::istringstream in(origin);
                char comma = 0;
                if (!(in >> o.x >> comma >> o.y) || comma != ',') {
                    throw ParseError("bad --origin, expected \"x,y\": " + origin);
                }
            }
            return Loop::from_moves(o, moves);
        }
        throw ParseError("need --loop FILE or --moves STRING");
    }
};

void emit(const Json& j, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_file);
        if (!out) throw ParseError("cannot write " + out_file);
        out << j.dump(2) << "\n";
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_compute(const LoopInput& in, const std::string& strategy, int threads,
                const std::string& out_file) {
    const Loop l = in.get();
    Engine eng(strategy_from_name(strategy));
    if (threads > 1) eng.expectation_parallel(l, threads); // warm the memo in parallel
    const auto parts = eng.breakdown(l);

    Polynomial phi;
    Json per = Json::array();
    for (const auto& [k, coeff] : parts) {
        phi.add_term(k.area(), coeff);
        Json e = Json::object();
        e["K"] = assignment_to_json(k);
        e["coefficient"] = rational_to_json(coeff);
        e["area"] = k.area();
        per.push_back(std::move(e));
    }
    if (l.empty() || remove_backtracks(l).empty()) phi = Polynomial::monomial(0, 1);

    Json j = Json::object();
    j["polynomial"] = polynomial_to_json(phi);
    j["pretty"] = phi.to_string();
    j["canonical_count"] = parts.size();
    j["per_assignment"] = std::move(per);
    Json stats = Json::object();
    stats["memo_entries"] = eng.memo_entries();
    stats["recursion_calls"] = eng.stats().recursion_calls;
    stats["strategy"] = strategy_name(eng.strategy());
    j["stats"] = std::move(stats);
    emit(j, out_file);
    return 0;
}

int cmd_analyze(const LoopInput& in, long margin, const std::string& out_file) {
    const Loop l = in.get();
    const Loop red = remove_backtracks(l);
    const LoopGeometry g = analyze_loop(red, margin);
    const auto col = canonical_collection(l);

    Json j = Json::object();
    j["loop"] = loop_to_json(l);
    j["reduced"] = loop_to_json(red);
    j["edges"] = red.size();
    j["support_area"] = g.support_area;
    Json regions = Json::array();
    for (const Region& r : g.regions) {
        Json e = Json::object();
        e["h"] = r.h;
        e["d"] = r.d;
        e["area"] = r.area;
        e["exterior"] = r.exterior;
        if (!r.exterior) {
            e["first_square"] = Json::array({r.squares.front().x, r.squares.front().y});
        }
        regions.push_back(std::move(e));
    }
    j["regions"] = std::move(regions);
    j["base_assignment"] = assignment_to_json(col.base);
    Json caps = Json::array();
    for (const auto& lr : col.regions) caps.push_back(lr.cap);
    j["layer_caps"] = std::move(caps);
    j["canonical_count"] = col.cardinality;
    emit(j, out_file);
    return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt) {
    bool all_pass = true;
    for (const SuiteReport& rep : run_suites(suite, opt)) {
        std::cout << "== " << rep.suite << " ==\n";
        for (const CheckResult& c : rep.checks) {
            std::cout << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail
                      << "\n";
            all_pass = all_pass && c.pass;
        }
    }
    std::cout << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? 0 : 2;
}

int cmd_spectrum(long area, double beta, int points, double tol,
                 const std::string& out_file) {
    std::ostringstream os;
    os << "x,f_series,f_closed,abs_diff\n";
    const bool closed = area <= 3;
    double mass = 0;
    for (int i = 0; i < points; ++i) {
        const double x = 2.0 * kPi * i / points;
        const double fs = spectral_density_series(area, beta, x, tol);
        os << fmt(x) << "," << fmt(fs) << ",";
        if (closed) {
            const double fc = spectral_density_closed(area, beta, x);
            os << fmt(fc) << "," << fmt(std::abs(fs - fc));
        } else {
            os << ",";
        }
        os << "\n";
    }
    mass = spectral_mass(area, beta);
    os << "mass," << fmt(mass) << ",," << fmt(std::abs(mass - 1.0)) << "\n";
    if (out_file.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(out_file);
        if (!out) throw ParseError("cannot write " + out_file);
        out << os.str();
    }
    return 0;
}

int cmd_table1(int row, const std::vector<std::string>& area_args,
               const std::string& out_file) {
    AreaMap overrides;
    for (const std::string& kv : area_args) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw CLI::ValidationError("--area", "expected name=value, got " + kv);
        }
        try {
            overrides[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--area", "bad value in " + kv);
        }
    }
    if (!overrides.empty() && row == 0) {
        throw CLI::ValidationError("--area", "--area needs --row");
    }

    Json rows = Json::array();
    for (const CatalogEntry& e : catalog()) {
        if (row != 0 && e.id != row) continue;
        AreaMap areas;
        for (const auto& p : e.params) areas[p] = 1;
        for (const auto& [k, v] : overrides) areas[k] = v; // unknown names rejected below
        const Polynomial poly = catalog_polynomial(e.id, areas);
        Json r = Json::object();
        r["class"] = e.id;
        r["slug"] = e.slug;
        Json a = Json::object();
        for (const auto& [k, v] : areas) a[k] = v;
        r["areas"] = std::move(a);
        r["kcount"] = e.kcount;
        r["polynomial"] = polynomial_to_json(poly);
        r["pretty"] = poly.to_string();
        rows.push_back(std::move(r));
    }
    if (row != 0 && rows.empty()) throw UnknownClass("no catalog row " + std::to_string(row));
    emit(rows, out_file);
    return 0;
}

int cmd_selfcheck() {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        if (!ok) ++failures;
        std::cout << (ok ? "ok   " : "FAIL ") << name << ": " << detail << "\n";
    };

    check("plaquette", wilson_expectation(Loop::from_moves({0, 0}, "URDL")) ==
                           Polynomial::monomial(1, 1),
          "expectation of the unit plaquette is beta");
    check("figure-eight",
          wilson_expectation(Loop::from_moves({1, 1}, "DLURRULD")) ==
              Polynomial::monomial(2, 1),
          "two unit lobes give beta^2");
    {
        const Loop l = Loop::from_moves({1, 1}, "URRULDDLUURRDLDL");
        const auto col = canonical_collection(l);
        Polynomial want = Polynomial::monomial(3, 1) + Polynomial::monomial(5, -1);
        check("nested-curl", col.cardinality == 2 && wilson_expectation(l) == want,
              "two-member collection, beta^3 - beta^5");
    }
    check("coil", wilson_expectation(Loop::from_moves({1, 1}, "URRDLLURRRDLLLURRRRDLLLL")) ==
                      Polynomial::monomial(9, 3),
          "squeezed coil gives 3 beta^9");
    {
        bool ok = true;
        for (long a = 1; a <= 4; ++a) ok = ok && series_identity_residual(a, 10).is_zero();
        check("series-identity", ok, "generating identity holds through order 9");
    }
    {
        const double fs = spectral_density_series(2, 0.25, kPi);
        const double fc = spectral_density_closed(2, 0.25, kPi);
        check("spectral", std::abs(fs - fc) <= 1e-10,
              "series and closed densities agree at one probe point");
    }
    std::cout << (failures ? "FAIL" : "PASS") << "\n";
    return failures ? 2 : 0;
}

int run(int argc, char** argv) {
    CLI::App app{"exact expectations of Wilson loops on the square lattice"};
    app.require_subcommand(1);
    int exit_code = 0;

    // compute
    auto* compute = app.add_subcommand("compute", "expectation polynomial of a loop");
    static LoopInput compute_in;
    compute_in.attach(compute);
    static std::string compute_strategy = "boundary";
    static int compute_threads = 1;
    static std::string compute_out;
    compute->add_option("--strategy", compute_strategy,
                        "edge selection: first, boundary, min_branch");
    compute->add_option("--parallel", compute_threads, "threads over the collection");
    compute->add_option("--output", compute_out, "write JSON here instead of stdout");
    compute->callback([&] {
        exit_code = cmd_compute(compute_in, compute_strategy, compute_threads, compute_out);
    });

    // analyze
    auto* analyze = app.add_subcommand("analyze", "winding / distance / region report");
    static LoopInput analyze_in;
    analyze_in.attach(analyze);
    static long analyze_margin = 2;
    static std::string analyze_out;
    analyze->add_option("--margin", analyze_margin, "working-box margin (>= 2)");
    analyze->add_option("--output", analyze_out, "write JSON here instead of stdout");
    analyze->callback(
        [&] { exit_code = cmd_analyze(analyze_in, analyze_margin, analyze_out); });

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    static std::string verify_suite;
    static SuiteOptions verify_opt;
    static std::string verify_strategy = "boundary";
    verify
        ->add_option("--suite", verify_suite,
                     "vanishing, edge-independence, table1, winding, series, "
                     "spectrum, or all")
        ->required();
    verify->add_option("--fixtures", verify_opt.fixture_dir,
                       "fixture directory (default: builtin corpus)");
    verify->add_option("--parallel", verify_opt.threads, "threads over the collection");
    verify->add_option("--strategy", verify_strategy, "edge selection strategy");
    verify->callback([&] {
        verify_opt.strategy = strategy_from_name(verify_strategy);
        exit_code = cmd_verify(verify_suite, verify_opt);
    });

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "spectral density CSV");
    static long spec_area = 1;
    static double spec_beta = 0.0;
    static int spec_points = 64;
    static double spec_tol = 1e-12;
    static std::string spec_out;
    spectrum->add_option("--area", spec_area, "loop area a >= 1")->required();
    spectrum->add_option("--beta", spec_beta, "coupling, |beta| <= 1/2 for a >= 2")
        ->required();
    spectrum->add_option("--points", spec_points, "grid size over [0, 2pi)");
    spectrum->add_option("--tol", spec_tol, "series tolerance");
    spectrum->add_option("--output", spec_out, "write CSV here instead of stdout");
    spectrum->callback([&] {
        exit_code = cmd_spectrum(spec_area, spec_beta, spec_points, spec_tol, spec_out);
    });

    // table1
    auto* table1 = app.add_subcommand("table1", "closed-form class catalogue");
    static int table1_row = 0;
    static std::vector<std::string> table1_areas;
    static std::string table1_out;
    table1->add_option("--row", table1_row, "single class id 1..28 (default: all)");
    table1->add_option("--area", table1_areas, "area parameter name=value (repeatable)");
    table1->add_option("--output", table1_out, "write JSON here instead of stdout");
    table1->callback(
        [&] { exit_code = cmd_table1(table1_row, table1_areas, table1_out); });

    // selfcheck
    auto* selfcheck = app.add_subcommand("selfcheck", "fast internal consistency checks");
    selfcheck->callback([&] { exit_code = cmd_selfcheck(); });

    // emit-fixtures
    auto* emitfx = app.add_subcommand("emit-fixtures", "write the builtin fixture corpus");
    static std::string emit_dir = "fixtures";
    emitfx->add_option("--dir", emit_dir, "output directory");
    emitfx->callback([&] {
        write_fixture_files(emit_dir);
        std::cout << "wrote " << builtin_fixtures().size() << " fixtures to " << emit_dir
                  << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage problems -> 1, --help -> 0
    }
    return exit_code;
}

} // namespace

// Exit codes: 0 success, 1 usage error (bad flags or unusable input),
// 2 verification failure, 3 internal invariant violation (memo cap included).
int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const wilson::MemoLimitExceeded& e) {
        std::cerr << "memo limit exceeded: " << e.what() << "\n";
        return 3;
    } catch (const wilson::WilsonError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
