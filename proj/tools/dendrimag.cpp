// dendrimag command-line front end.
// Exit codes: 0 success, 1 a hard verification check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dendrimag/free_expansions.hpp"
#include "dendrimag/io.hpp"
#include "dendrimag/ode.hpp"
#include "dendrimag/sampling.hpp"
#include "dendrimag/suites.hpp"

using namespace dendrimag;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

std::uint64_t seed_from_env()
{
    const char* env = std::getenv("DENDRIMAG_SEED");
    if (env == nullptr || *env == '\0') return default_seed;
    std::uint64_t v = 0;
    const std::string s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("DENDRIMAG_SEED must be an unsigned integer");
    return v;
}

// ---------------------------------------------------------------------------
// expand

struct ExpandConfig {
    std::string kind = "magnus";
    std::size_t order = 4;
    std::string basis = "prelie";
    std::string format = "text";
};

TermList render(const PreLieComb& c, const std::string& basis, const FreeDendriform& fd)
{
    if (basis == "rooted") return terms_of(eval_rooted(c));
    if (basis == "planar") return terms_of(fd, eval_planar(fd, c));
    return terms_of(c);
}

int cmd_expand(const ExpandConfig& cfg)
{
    FreeDendriform fd;
    std::vector<std::pair<std::string, TruncatedSeries<PreLieComb>>> blocks;
    if (cfg.kind == "magnus") {
        blocks.emplace_back("Omega'", magnus_free_raw(cfg.order));
    } else {
        const auto us = fer_free_raw(cfg.order);
        for (std::size_t n = 0; n < us.size(); ++n) {
            if (series_is_zero(FormalPreLie{}, us[n])) continue;
            blocks.emplace_back("U'_" + std::to_string(n), us[n]);
        }
    }
    if (cfg.format == "json") {
        Json out{{"kind", cfg.kind}, {"order", cfg.order}, {"basis", cfg.basis}, {"blocks", Json::array()}};
        for (const auto& [name, s] : blocks) {
            Json degrees = Json::array();
            for (std::size_t n = 1; n <= s.order(); ++n) {
                if (s[n].is_zero()) continue;
                degrees.push_back({{"degree", n}, {"terms", terms_json(render(s[n], cfg.basis, fd))}});
            }
            out["blocks"].push_back({{"name", name}, {"degrees", degrees}});
        }
        std::cout << out.dump(2) << '\n';
        return exit_ok;
    }
    for (const auto& [name, s] : blocks) {
        std::cout << name << ":\n";
        for (std::size_t n = 1; n <= s.order(); ++n) {
            if (s[n].is_zero()) continue;
            std::cout << "  lambda^" << n << ": " << format_terms(render(s[n], cfg.basis, fd)) << '\n';
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& suite, std::size_t order, std::uint64_t seed)
{
    bool ok = true;
    for (const auto& entry : suite_registry()) {
        if (suite != "all" && suite != entry.name) continue;
        const auto rep = entry.run(order, seed);
        std::cout << rep.to_text();
        std::cout << "== suite " << entry.name << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n";
        ok = ok && rep.passed();
    }
    std::cout << "== overall: " << (ok ? "PASS" : "FAIL") << " (order " << order << ", seed " << seed << ")\n";
    return ok ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------
// solve

struct SolveConfig {
    std::string input;
    double horizon = 1.0;
    std::vector<std::size_t> steps{8, 16, 32, 64, 128};
    std::string method = "magnus4";
    std::string out;
};

int cmd_solve(const SolveConfig& cfg)
{
    const auto a = read_ode_input(cfg.input);
    const OdeMethod m = parse_method(cfg.method);
    auto counts = cfg.steps;
    std::sort(counts.begin(), counts.end());

    ConvergenceStudy st;
    std::string slope_note;
    const FloatMatrix ref = reference_solution(a, cfg.horizon, counts.back());
    try {
        st = convergence_study(a, cfg.horizon, m, counts);
        slope_note = format_double(st.slope);
    } catch (const DegenerateFit& e) {
        // still report the per-count errors
        st.rows.clear();
        for (std::size_t n : counts) {
            const double h = cfg.horizon / static_cast<double>(n);
            st.rows.push_back({n, h, max_norm_diff(integrate(a, cfg.horizon, n, m).phi, ref), std::nan("")});
        }
        slope_note = std::string("n/a (") + e.what() + ")";
    }

    std::ostringstream csv;
    write_convergence_csv(csv, st);
    if (cfg.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(cfg.out);
        if (!f) throw ParseError("cannot write output file '" + cfg.out + "'");
        f << csv.str();
    }

    const auto fin = integrate(a, cfg.horizon, counts.back(), m);
    std::cout << "# method " << method_name(m) << ", T " << format_double(cfg.horizon) << ", steps "
              << counts.back() << "\n";
    for (Eigen::Index r = 0; r < fin.phi.rows(); ++r) {
        std::cout << "# Phi(T) row " << r << ":";
        for (Eigen::Index c = 0; c < fin.phi.cols(); ++c) std::cout << ' ' << format_double(fin.phi(r, c));
        std::cout << '\n';
    }
    std::cout << "# slope " << slope_note << "\n";
    std::cout << "# liouville relative error " << format_double(liouville_error(a, cfg.horizon, fin.phi)) << "\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------
// trees

int cmd_trees(std::size_t order, const std::string& render)
{
    FreeDendriform fd;
    const auto trees = fd.enumerate(order);
    std::cout << "# " << trees.size() << " planar binary trees with " << order << " internal nodes\n";
    for (TreeId t : trees) {
        if (render == "ascii")
            std::cout << fd.to_string(t) << '\n' << render_ascii(fd, t) << '\n';
        else
            std::cout << fd.to_string(t) << '\n';
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dendriform Magnus and Fer expansions: exact verification and numerical integration"};
    app.require_subcommand(1);

    ExpandConfig ex;
    auto* expand = app.add_subcommand("expand", "print the free-model Magnus or Fer expansion per degree");
    expand->add_option("kind", ex.kind, "magnus or fer")->required()->check(CLI::IsMember({"magnus", "fer"}));
    expand->add_option("--order", ex.order, "highest degree (1..8)")->check(CLI::Range(1, 8));
    expand->add_option("--basis", ex.basis, "prelie, rooted or planar")
        ->check(CLI::IsMember({"prelie", "rooted", "planar"}));
    expand->add_option("--format", ex.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string suite = "all";
    std::size_t vorder = 5;
    std::optional<std::uint64_t> vseed;
    auto* verify = app.add_subcommand("verify", "run verification suites; exit 1 if a hard check fails");
    verify->add_option("--suite", suite, "suite name or all")
        ->check(CLI::IsMember({"dendriform", "tridendriform", "magnus", "fer", "rb", "spitzer", "atkinson", "chi",
                               "reduction", "all"}));
    verify->add_option("--order", vorder, "truncation order (1..8, default 5)")->check(CLI::Range(1, 8));
    verify->add_option("--seed", vseed, "sampling seed (default: DENDRIMAG_SEED or a fixed constant)");

    SolveConfig sv;
    auto* solve = app.add_subcommand("solve", "integrate Phi' = A(t) Phi and measure convergence");
    solve->add_option("--input", sv.input, "JSON file {n, degree, coeffs}")->required();
    solve->add_option("--T", sv.horizon, "horizon")->check(CLI::PositiveNumber);
    solve->add_option("--steps", sv.steps, "step counts; 4 or more geometric counts give a slope")
        ->check(CLI::PositiveNumber);
    solve->add_option("--method", sv.method, "magnus2, magnus4, fer1 or fer2")
        ->check(CLI::IsMember({"magnus2", "magnus4", "fer1", "fer2"}));
    solve->add_option("--out", sv.out, "CSV output path (default: stdout)");

    std::size_t torder = 3;
    std::string trender = "strings";
    auto* trees = app.add_subcommand("trees", "list planar binary trees of a given degree");
    trees->add_option("--order", torder, "number of internal nodes (0..8)")->check(CLI::Range(0, 8));
    trees->add_option("--render", trender, "ascii or strings")->check(CLI::IsMember({"ascii", "strings"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*expand) return cmd_expand(ex);
        if (*verify) return cmd_verify(suite, vorder, vseed ? *vseed : seed_from_env());
        if (*solve) return cmd_solve(sv);
        if (*trees) return cmd_trees(torder, trender);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
