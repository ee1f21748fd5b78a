#pragma once

// Named verification suites shared by the CLI and the acceptance binary.
// Each suite returns one report; sampling seeds are derived from `seed`.

#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "dendrimag/free_expansions.hpp"
#include "dendrimag/magnus.hpp"
#include "dendrimag/matrix.hpp"
#include "dendrimag/rb_instances.hpp"
#include "dendrimag/report.hpp"
#include "dendrimag/rota_baxter.hpp"
#include "dendrimag/sampling.hpp"

namespace dendrimag {

inline constexpr std::size_t suite_samples = 200;

// ---------------------------------------------------------------------------
// sampled axiom checks

template <Dendriform D, class Sample>
void add_dendriform_samples(VerificationReport& rep, const std::string& name, const D& d, Sample&& sample,
                            std::size_t samples)
{
    std::size_t failures = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto a = sample(), b = sample(), c = sample();
        for (const auto& x : dendriform_axiom_residuals(d, a, b, c))
            if (!d.is_zero(x)) {
                ++failures;
                break;
            }
    }
    rep.add_samples(name, samples, failures);
}

template <Tridendriform T, class Sample>
void add_tridendriform_samples(VerificationReport& rep, const std::string& name, const T& t, Sample&& sample,
                               std::size_t samples)
{
    std::size_t failures = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto a = sample(), b = sample(), c = sample();
        for (const auto& x : tridendriform_axiom_residuals(t, a, b, c))
            if (!t.is_zero(x)) {
                ++failures;
                break;
            }
    }
    rep.add_samples(name, samples, failures);
}

/// Axioms and both pre-Lie identities on every basis triple of total degree <= max_degree.
inline VerificationReport free_planar_axioms(std::size_t max_degree)
{
    VerificationReport rep("free planar trees");
    FreeDendriform fd;
    PreLieView<FreeDendriform> pl(fd);
    std::size_t triples = 0, f_axioms = 0, f_prelie = 0;
    for (std::size_t i = 1; i + 2 <= max_degree; ++i)
        for (std::size_t j = 1; i + j + 1 <= max_degree; ++j)
            for (std::size_t k = 1; i + j + k <= max_degree; ++k)
                for (TreeId x : fd.enumerate(i))
                    for (TreeId y : fd.enumerate(j))
                        for (TreeId z : fd.enumerate(k)) {
                            const auto a = fd.basis(x), b = fd.basis(y), c = fd.basis(z);
                            for (const auto& r : dendriform_axiom_residuals(fd, a, b, c))
                                if (!r.is_zero()) {
                                    ++f_axioms;
                                    break;
                                }
                            f_prelie += !left_prelie_residual(pl, a, b, c).is_zero() ||
                                        !right_prelie_residual(pl, a, b, c).is_zero();
                            ++triples;
                        }
    const std::string bound = " (total degree <= " + std::to_string(max_degree) + ")";
    rep.add_samples("dendriform axioms on all basis triples" + bound, triples, f_axioms);
    rep.add_samples("left and right pre-Lie identities on all basis triples" + bound, triples, f_prelie);
    return rep;
}

// ---------------------------------------------------------------------------
// suites

inline VerificationReport suite_dendriform(std::size_t order, std::uint64_t seed)
{
    (void)order;
    VerificationReport rep("dendriform");
    rep.merge(free_planar_axioms(6));
    Sampler s(seed);
    const TriangularRB tri(3);
    const GridRB grid(6, Rational(1, 3), GridSum::inclusive);
    const PolyIntegrationRB poly(2);
    add_dendriform_samples(rep, "axioms, triangular Rota-Baxter instance", RBDendriform<TriangularRB>(tri),
                           [&] { return tri.sample(s); }, suite_samples);
    add_dendriform_samples(rep, "axioms, grid Rota-Baxter instance", RBDendriform<GridRB>(grid),
                           [&] { return grid.sample(s); }, suite_samples);
    add_dendriform_samples(rep, "axioms, polynomial Rota-Baxter instance", RBDendriform<PolyIntegrationRB>(poly),
                           [&] { return poly.sample(s); }, suite_samples);
    const MatrixAlgebra alg(3);
    add_dendriform_samples(rep, "axioms, associative 3x3 matrices", AssociativeDendriform<MatrixAlgebra>(alg),
                           [&] { return s.matrix(3); }, suite_samples);
    return rep;
}

inline VerificationReport suite_tridendriform(std::size_t order, std::uint64_t seed)
{
    (void)order;
    VerificationReport rep("tridendriform");
    Sampler s(seed + 1);
    const GridRB summation(7, Rational(1), GridSum::forward);
    const TriangularRB tri(3);
    const GridRB grid(6, Rational(1, 2), GridSum::strict);
    add_tridendriform_samples(rep, "seven axioms, summation operator with unit spacing",
                              RBTridendriform<GridRB>(summation), [&] { return summation.sample(s); }, suite_samples);
    add_tridendriform_samples(rep, "seven axioms, triangular Rota-Baxter instance",
                              RBTridendriform<TriangularRB>(tri), [&] { return tri.sample(s); }, suite_samples);
    add_tridendriform_samples(rep, "seven axioms, grid Rota-Baxter instance", RBTridendriform<GridRB>(grid),
                              [&] { return grid.sample(s); }, suite_samples);
    return rep;
}

/// The lambda^1..lambda^4 coefficients of the raw free Magnus expansion.
inline VerificationReport magnus_low_degree_coefficients()
{
    VerificationReport rep("magnus coefficients");
    const auto omega = magnus_free_raw(4);
    auto comb = [](std::initializer_list<std::pair<const char*, Rational>> terms) {
        PreLieComb c;
        for (const auto& [e, q] : terms) c.add_term(PreLieExpr::parse(e), q);
        return c;
    };
    rep.add_flag("lambda^1: a", omega[1] == comb({{"a", Rational(1)}}), format_comb(omega[1]));
    rep.add_flag("lambda^2: -1/2 (a>a)", omega[2] == comb({{"(a>a)", Rational(-1, 2)}}), format_comb(omega[2]));
    rep.add_flag("lambda^3: 1/12 (a>(a>a)) + 1/4 ((a>a)>a)",
                 omega[3] == comb({{"(a>(a>a))", Rational(1, 12)}, {"((a>a)>a)", Rational(1, 4)}}),
                 format_comb(omega[3]));
    // the grade-4 terms carry an overall minus sign
    rep.add_flag("lambda^4: -(1/8, 1/24, 1/24, 1/24) on the four raw monomials",
                 omega[4] == comb({{"(((a>a)>a)>a)", Rational(-1, 8)},
                                   {"((a>(a>a))>a)", Rational(-1, 24)},
                                   {"(a>((a>a)>a))", Rational(-1, 24)},
                                   {"((a>a)>(a>a))", Rational(-1, 24)}}),
                 format_comb(omega[4]));
    return rep;
}

/// Associative matrices: Omega' = -log(1 - lambda a) and X = sum lambda^n a^n.
inline VerificationReport associative_degeneration(std::size_t order, std::uint64_t seed)
{
    VerificationReport rep("associative degeneration");
    Sampler s(seed + 2);
    const MatrixAlgebra alg(3);
    const AssociativeDendriform<MatrixAlgebra> d(alg);
    const PreLieView<AssociativeDendriform<MatrixAlgebra>> pl(d);
    const auto a = s.matrix(3);
    const auto omega = magnus(pl, a, order);
    rep.add_degrees("Omega' = -log(1 - lambda a)",
                    degree_residuals(alg, omega, -series_log(alg, unit_series(alg, order) - monomial(alg, order, 1, a))));
    const auto x = solve_left(d, a, order);
    std::vector<std::size_t> res(order + 1, 0);
    MatrixRat power = MatrixRat::identity(3);
    for (std::size_t n = 1; n <= order; ++n) {
        power = power * a;
        res[n] = (x[n].part - power).nonzeros() + (x[n].scalar.is_zero() ? 0 : 1);
    }
    rep.add_degrees("X = sum lambda^n a^n", res);
    rep.merge(verify_magnus(d, a, order));
    return rep;
}

inline VerificationReport suite_magnus(std::size_t order, std::uint64_t seed)
{
    VerificationReport rep("magnus");
    FreeDendriform fd;
    VerificationReport free_rep = verify_magnus(fd, fd.generator(), order);
    rep.merge(free_rep);
    rep.merge(magnus_low_degree_coefficients());
    rep.merge(associative_degeneration(order, seed));
    Sampler s(seed + 3);
    const TriangularRB tri(3);
    const GridRB grid(5, Rational(1, 2), GridSum::inclusive);
    const PolyIntegrationRB poly(2, 1);
    VerificationReport t("triangular"), g("grid"), p("polynomial");
    t.merge(verify_magnus(RBDendriform<TriangularRB>(tri), tri.sample(s), order));
    g.merge(verify_magnus(RBDendriform<GridRB>(grid), grid.sample(s), order));
    p.merge(verify_magnus(RBDendriform<PolyIntegrationRB>(poly), poly.sample(s), order));
    rep.merge(t);
    rep.merge(g);
    rep.merge(p);
    return rep;
}

/// Lowest nonzero degree of each U'_n in the rooted-tree model, through lambda^8.
inline std::vector<std::size_t> fer_lowest_degrees()
{
    FreePreLie p;
    const auto us = fer(p, p.generator(), 8);
    std::vector<std::size_t> out;
    for (const auto& u : us) {
        std::size_t low = 0;
        for (std::size_t k = 0; k <= u.order(); ++k)
            if (!p.is_zero(u[k])) {
                low = k;
                break;
            }
        out.push_back(low);
    }
    return out;
}

inline VerificationReport suite_fer(std::size_t order, std::uint64_t seed)
{
    VerificationReport rep("fer");
    FreeDendriform fd;
    rep.merge(verify_fer(fd, fd.generator(), order));
    const auto low = fer_lowest_degrees();
    for (std::size_t n = 0; n <= 3 && n < low.size(); ++n)
        rep.add_flag("U'_" + std::to_string(n) + " starts at degree " + std::to_string(std::size_t{1} << n),
                     low[n] == (std::size_t{1} << n), "observed " + std::to_string(low[n]));
    rep.add_flag("fer_depth(" + std::to_string(order) + ") = floor(log2 N) + 1",
                 fer_depth(order) == static_cast<std::size_t>(std::bit_width(order)));
    Sampler s(seed + 4);
    const MatrixAlgebra alg(3);
    VerificationReport assoc("associative");
    assoc.merge(verify_fer(AssociativeDendriform<MatrixAlgebra>(alg), s.matrix(3), order));
    rep.merge(assoc);
    return rep;
}

inline VerificationReport suite_rb(std::size_t order, std::uint64_t seed)
{
    (void)order;
    VerificationReport rep("rb");
    rep.merge(check_rb_instance(TriangularRB(3), suite_samples, seed + 5, "triangular"));
    for (const Rational theta : {Rational(1), Rational(1, 2), Rational(1, 7)})
        rep.merge(check_rb_instance(TriangularRB::with_weight(3, theta), 50, seed + 6,
                                    "triangular, weight " + theta.to_string()));
    for (auto [kind, label] : {std::pair{GridSum::inclusive, "inclusive"}, std::pair{GridSum::strict, "strict"},
                               std::pair{GridSum::forward, "forward"}})
        rep.merge(check_rb_instance(GridRB(6, Rational(1, 3), kind), suite_samples, seed + 7,
                                    std::string("grid, ") + label));
    rep.merge(check_rb_instance(PolyIntegrationRB(2), suite_samples, seed + 8, "polynomial"));
    rep.merge(grid_operator_check(Rational(1, 2), 6, 100, seed + 9));
    Sampler s(seed + 10);
    const PolyIntegrationRB scalar(1, 3);
    VerificationReport ibp("integration by parts, 10 random polynomials");
    for (int i = 0; i < 10; ++i) ibp.merge(ibp_power_check(scalar.sample(s), 6));
    rep.merge(ibp);
    return rep;
}

inline VerificationReport suite_spitzer(std::size_t order, std::uint64_t seed)
{
    VerificationReport rep("spitzer");
    Sampler s(seed + 11);
    for (auto kind : {GridSum::strict, GridSum::inclusive}) {
        const GridRB r(6, Rational(1, 3), kind);
        const std::string label = kind == GridSum::strict ? "strict grid" : "inclusive grid";
        rep.merge(spitzer_classical_check(r, r.one(), order, label + ", a = 1"));
        rep.merge(spitzer_classical_check(r, r.sample(s), order, label + ", random a"));
    }
    const PolyIntegrationRB poly(1);
    rep.merge(spitzer_classical_check(poly, poly.one(), order, "polynomial, weight 0, a = 1"));
    const PolyIntegrationRB poly2(2, 1);
    rep.merge(weight_zero_bridge_check(poly2, poly2.sample(s), order));
    return rep;
}

inline std::vector<TruncatedSeries<MatrixRat>> random_alpha_series(const TriangularRB& r, std::size_t count,
                                                                   std::size_t order, Sampler& s)
{
    std::vector<TruncatedSeries<MatrixRat>> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto al = zero_series(r, order);
        for (std::size_t k = 1; k <= order; ++k) al[k] = r.sample(s);
        out.push_back(al);
    }
    return out;
}

inline VerificationReport suite_chi(std::size_t order, std::uint64_t seed)
{
    VerificationReport rep("chi");
    Sampler s(seed + 12);
    for (const Rational theta : {Rational(-1), Rational(1), Rational(1, 2), Rational(1, 7)}) {
        const auto r = TriangularRB::with_weight(3, theta);
        const auto a = r.sample(s);
        rep.merge(spitzer_noncommutative_check(r, a, order, random_alpha_series(r, 5, order, s),
                                               "weight " + theta.to_string()));
    }
    const GridRB grid(4, Rational(1, 2), GridSum::strict);
    auto al = zero_series(grid, order);
    for (std::size_t k = 1; k <= order; ++k) al[k] = grid.sample(s);
    rep.add_degrees("commutative instance: chi(alpha) = alpha", degree_residuals(grid, chi_theta(grid, al), al));
    return rep;
}

inline VerificationReport suite_atkinson(std::size_t order, std::uint64_t seed)
{
    VerificationReport rep("atkinson");
    Sampler s(seed + 13);
    const TriangularRB tri(3);
    const auto at = tri.sample(s);
    rep.merge(atkinson_check(tri, at, order, "triangular"));
    rep.merge(check_rb_solutions(tri, at, order, "triangular solutions"));
    for (auto kind : {GridSum::inclusive, GridSum::strict}) {
        const GridRB grid(5, Rational(1, 2), kind);
        const auto ag = grid.sample(s);
        const std::string label = kind == GridSum::strict ? "strict grid" : "inclusive grid";
        rep.merge(atkinson_check(grid, ag, order, label));
        rep.merge(check_rb_solutions(grid, ag, order, label + " solutions"));
    }
    const PolyIntegrationRB poly(2, 1);
    rep.merge(check_rb_solutions(poly, poly.sample(s), order, "polynomial solutions"));
    return rep;
}

/// Degree-4 reduction (hard) and degree-5 counts against 10 and 7 (informational).
inline VerificationReport suite_reduction(std::size_t order, std::uint64_t seed)
{
    (void)order;
    (void)seed;
    VerificationReport rep("reduction");
    const auto raw4 = magnus_free_component(4).raw;
    const auto red4 = rewrite_reduce(raw4);
    rep.add_flag("degree 4 raw count 4", monomial_count(raw4) == 4, "raw " + std::to_string(monomial_count(raw4)));
    rep.add_flag("degree 4 reduced count 2", monomial_count(red4) == 2,
                 "reduced " + std::to_string(monomial_count(red4)) + ": " + format_comb(red4));
    std::set<Rational> mags;
    for (const auto& [e, q] : red4) mags.insert(abs(q));
    rep.add_flag("degree 4 reduced coefficients are {1/6, 1/12} up to sign",
                 mags == std::set<Rational>{Rational(1, 6), Rational(1, 12)});
    rep.add_flag("degree 4 reduced form expands to the raw form in rooted trees", eval_rooted(red4) == eval_rooted(raw4));

    const auto raw5 = magnus_free_component(5).raw;
    std::size_t reduced5 = 0;
    std::string note;
    try {
        const auto red5 = rewrite_reduce(raw5);
        reduced5 = monomial_count(red5);
        rep.add_flag("degree 5 reduced form expands to the raw form in rooted trees",
                     eval_rooted(red5) == eval_rooted(raw5));
    } catch (const BudgetExhausted& e) {
        reduced5 = monomial_count(e.best());
        note = " (search budget exhausted)";
    }
    const std::size_t n5 = monomial_count(raw5);
    rep.add_info("degree 5 raw count vs 10", n5 == 10,
                 "raw " + std::to_string(n5) + ", rooted-tree support " +
                     std::to_string(support_count(magnus_free_component(5).rooted)));
    rep.add_info("degree 5 reduced count vs 7", reduced5 == 7, "reduced " + std::to_string(reduced5) + note);
    return rep;
}

struct SuiteEntry {
    const char* name;
    std::function<VerificationReport(std::size_t, std::uint64_t)> run;
};

inline const std::vector<SuiteEntry>& suite_registry()
{
    static const std::vector<SuiteEntry> reg{
        {"dendriform", suite_dendriform}, {"tridendriform", suite_tridendriform}, {"magnus", suite_magnus},
        {"fer", suite_fer},               {"rb", suite_rb},                       {"spitzer", suite_spitzer},
        {"atkinson", suite_atkinson},     {"chi", suite_chi},                     {"reduction", suite_reduction},
    };
    return reg;
}

} // namespace dendrimag
