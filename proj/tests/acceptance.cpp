// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if any fails.
// Usage: acceptance <path to dendrimag CLI> <data dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "dendrimag/ode.hpp"
#include "dendrimag/suites.hpp"

using namespace dendrimag;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, {}};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) {
        o.ok = false;
        o.detail += " [over time budget of " + std::to_string(budget_s) + " s]";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << timing << ")";
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << std::endl;
    if (!o.ok) ++failures;
}

Outcome from_report(const VerificationReport& rep)
{
    if (rep.passed()) {
        std::size_t hard = 0;
        for (const auto& c : rep.checks()) hard += !c.informational;
        return {true, std::to_string(hard) + " hard checks"};
    }
    std::string bad;
    for (const auto& c : rep.checks())
        if (!c.informational && !c.passed) bad += (bad.empty() ? "" : "; ") + c.name;
    return {false, "failed: " + bad};
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& cmd)
{
    RunResult r{-1, {}};
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (p == nullptr) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), p) != nullptr) r.out += buf.data();
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 3) {
        std::cerr << "usage: acceptance <dendrimag binary> <data dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string data = argv[2];
    const std::uint64_t seed = default_seed;

    criterion(1, "dendriform axioms: free model to total degree 6, 200 random triples per Rota-Baxter instance", 60,
              [&] { return from_report(suite_dendriform(5, seed)); });

    criterion(2, "tridendriform axioms: summation and Rota-Baxter instances, 200 triples each", 0,
              [&] { return from_report(suite_tridendriform(5, seed)); });

    criterion(3, "exp*(Omega') = X, exp*(-Omega') = Y: free model to 8, Rota-Baxter instances to 6", 120, [&] {
        VerificationReport rep("theorem");
        FreeDendriform fd;
        rep.merge(verify_magnus(fd, fd.generator(), 8));
        Sampler s(seed + 3);
        const TriangularRB tri(3);
        const GridRB grid(5, Rational(1, 2), GridSum::inclusive);
        const PolyIntegrationRB poly(2, 1);
        rep.merge(verify_magnus(RBDendriform<TriangularRB>(tri), tri.sample(s), 6));
        rep.merge(verify_magnus(RBDendriform<GridRB>(grid), grid.sample(s), 6));
        rep.merge(verify_magnus(RBDendriform<PolyIntegrationRB>(poly), poly.sample(s), 6));
        return from_report(rep);
    });

    criterion(4, "Magnus coefficients through lambda^4", 0, [&] { return from_report(magnus_low_degree_coefficients()); });

    criterion(5, "degree-4 reduction to {1/6, 1/12}; degree-5 counts reported", 0, [&] {
        const auto rep = suite_reduction(5, seed);
        auto o = from_report(rep);
        for (const auto& c : rep.checks())
            if (c.informational) o.detail += "; " + c.name + ": " + c.detail + (c.passed ? " (match)" : " (differs)");
        return o;
    });

    criterion(6, "Fer products equal X and Y to lambda^6; U'_n starts at degree 2^n", 0, [&] {
        VerificationReport rep("fer");
        FreeDendriform fd;
        rep.merge(verify_fer(fd, fd.generator(), 6));
        const auto low = fer_lowest_degrees();
        for (std::size_t n = 0; n <= 3; ++n)
            rep.add_flag("U'_" + std::to_string(n) + " lowest degree", n < low.size() && low[n] == (std::size_t{1} << n));
        rep.add_flag("depth for N = 6", fer_depth(6) == 3);
        return from_report(rep);
    });

    criterion(7, "associative degeneration: Omega' = -log(1 - lambda a), X = sum lambda^n a^n to lambda^8", 0,
              [&] { return from_report(associative_degeneration(8, seed)); });

    criterion(8, "classical Spitzer on the grid to lambda^6; weight 0 gives exp(lambda R(a))", 0,
              [&] { return from_report(suite_spitzer(6, seed)); });

    criterion(9, "non-commutative Spitzer with chi_theta to lambda^5, weights -1, 1, 1/2, 1/7", 0,
              [&] { return from_report(suite_chi(5, seed)); });

    criterion(10, "Atkinson factorization and exponential/product solution forms to lambda^6", 0,
              [&] { return from_report(suite_atkinson(6, seed)); });

    criterion(11, "grid skewderivation and inverse, integration-by-parts powers to n = 6", 0, [&] {
        VerificationReport rep("operators");
        rep.merge(grid_operator_check(Rational(1, 2), 6, 100, seed + 9));
        rep.merge(grid_operator_check(Rational(3), 5, 100, seed + 19));
        Sampler s(seed + 10);
        const PolyIntegrationRB scalar(1, 3);
        for (int i = 0; i < 10; ++i) rep.merge(ibp_power_check(scalar.sample(s), 6));
        return from_report(rep);
    });

    criterion(12, "numerical slopes in [1.6, 2.4] / [3.6, 4.4]; Liouville within 1e-8", 60, [&] {
        const auto a = test_problem();
        const std::vector<std::size_t> sweep{8, 16, 32, 64, 128};
        bool ok = true;
        std::string detail;
        for (auto m : {OdeMethod::magnus2, OdeMethod::fer1, OdeMethod::magnus4, OdeMethod::fer2}) {
            const double slope = convergence_order(a, 1.0, m, sweep);
            const double lo = method_order(m) == 2 ? 1.6 : 3.6, hi = method_order(m) == 2 ? 2.4 : 4.4;
            ok = ok && slope >= lo && slope <= hi;
            const double liou = liouville_error(a, 1.0, integrate(a, 1.0, 16, m).phi);
            ok = ok && liou <= 1e-8;
            char buf[96];
            std::snprintf(buf, sizeof buf, "%s slope %.3f liouville %.1e; ", method_name(m).c_str(), slope, liou);
            detail += buf;
        }
        return Outcome{ok, detail};
    });

    criterion(13, "CLI exit codes, deterministic output, verify --suite all --order 5 exits 0", 300, [&] {
        bool ok = true;
        std::string detail;
        auto expect = [&](const std::string& args, int code, const std::string& needle = {}) {
            const auto r = run(cli + " " + args);
            const bool good = r.code == code && (needle.empty() || r.out.find(needle) != std::string::npos);
            if (!good) detail += "'" + args + "' gave " + std::to_string(r.code) + "; ";
            ok = ok && good;
            return r;
        };
        expect("expand magnus --order 2 --basis prelie", 0, "-1/2 (a>a)");
        expect("trees --order 4", 0, "# 14 planar binary trees");
        expect("expand magnus --order 9", 2);
        expect("verify --suite nonsense", 2);
        expect("frobnicate", 2);
        expect("solve --input " + data + "/does_not_exist.json", 2, "cannot open");
        expect("solve --input " + data + "/constant.json --steps 3", 0);
        const auto v1 = expect("verify --suite rb --seed 99", 0);
        const auto v2 = expect("verify --suite rb --seed 99", 0);
        const auto e1 = run("DENDRIMAG_SEED=99 " + cli + " verify --suite rb");
        if (v1.out != v2.out || e1.out != v1.out) {
            ok = false;
            detail += "verify output not deterministic; ";
        }
        const auto s1 = expect("solve --input " + data + "/test_problem.json --method fer2", 0, "# slope 3.9");
        const auto s2 = expect("solve --input " + data + "/test_problem.json --method fer2", 0);
        if (s1.out != s2.out) {
            ok = false;
            detail += "solve output not deterministic; ";
        }
        expect("verify --suite all --order 5", 0, "== overall: PASS");
        return Outcome{ok, detail.empty() ? "all CLI checks behaved" : detail};
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
