#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pfaffine/cartan.hpp"
#include "pfaffine/classical.hpp"
#include "pfaffine/formulas.hpp"
#include "pfaffine/vacuum.hpp"

using namespace pfaffine;

namespace {

UPoly gen_poly(int i, int j, int r, const Rat& c = 1)
{
    CanonF cf = canonicalize(i, j, r);
    REQUIRE(cf.sign != 0);
    return UPoly::from_gen(cf.g, Scalar(c * cf.sign));
}

CartanPoly mu(std::initializer_list<std::pair<int, int>> vars, const Rat& c = 1)
{
    CartanWord w;
    for (auto& [i, r] : vars)
        w.emplace_back(i, r);
    CartanPoly p;
    p.add_term(std::move(w), c);
    return p;
}

} // namespace

TEST_CASE("harish_chandra on simple inputs")
{
    // pure Cartan words pass through as a renaming
    const UPoly cartan = mul(gen_poly(-2, -2, -1), gen_poly(-1, -1, -3));
    CHECK(harish_chandra(cartan, 2) == mu({{-2, -1}, {-1, -3}}));

    // a zero-weight product of non-Cartan letters dies after normal ordering
    const UPoly balanced = mul(gen_poly(1, -2, -1), gen_poly(-2, 1, -1));
    CHECK(harish_chandra(balanced, 2).is_zero());

    CHECK_THROWS_AS(harish_chandra(gen_poly(-2, -1, -1), 2), std::invalid_argument);
    CHECK_THROWS_AS(harish_chandra(UPoly::from_gen(Gen::tau()), 2), std::invalid_argument);
    CHECK_THROWS_AS(harish_chandra(UPoly::from_scalar(Scalar::K()), 2), std::invalid_argument);
}

TEST_CASE("hc_product_formula small values")
{
    CHECK(hc_product_formula(1) == mu({{-1, -1}}));

    CartanPoly expect2 = mu({{-2, -1}, {-1, -1}}) + mu({{-1, -2}});
    CHECK(hc_product_formula(2) == expect2);

    CartanPoly expect3 = mu({{-3, -1}, {-2, -1}, {-1, -1}});
    expect3 += mu({{-3, -1}, {-1, -2}});
    expect3 += mu({{-2, -2}, {-1, -1}});
    expect3 += mu({{-2, -1}, {-1, -2}});
    expect3 += mu({{-1, -3}}, 2);
    CHECK(hc_product_formula(3) == expect3);
}

TEST_CASE("Harish-Chandra image of the Pfaffian")
{
    CHECK(harish_chandra(pfaffian_definitional(2), 2) ==
          mu({{-2, -1}, {-1, -1}}) + mu({{-1, -2}}));
    for (int n = 2; n <= 3; ++n)
        CHECK(harish_chandra(pfaffian_definitional(n), n) == hc_product_formula(n));
}

TEST_CASE("evaluation homomorphism basics")
{
    CHECK(evaluate_classical(gen_poly(-1, -1, -2)) ==
          ClassicalPoly::from(-2, gen_poly(-1, -1, 0)));
    CHECK(evaluate_classical(UPoly::from_scalar(Scalar::K())).is_zero());
    CHECK_THROWS_AS(evaluate_classical(UPoly::from_gen(Gen::tau())), std::invalid_argument);

    // multiplicative, and z-degree = sum of modes
    std::mt19937_64 rng(71);
    oracles::RandomUPoly gen;
    gen.n = 2;
    gen.allow_tau = false;
    gen.allow_k = true;
    for (int t = 0; t < 60; ++t) {
        const UPoly p = gen(rng);
        const UPoly q = gen(rng);
        CHECK(evaluate_classical(mul(p, q)) == evaluate_classical(p) * evaluate_classical(q));
        CHECK(evaluate_classical(ad_tau(p)) == -evaluate_classical(p).ddz());
    }

    const UPoly pf2 = pfaffian_definitional(2);
    for (auto& [w, c] : pf2.terms()) {
        int zdeg = 0;
        for (const Gen& g : w)
            zdeg += g.r;
        const ClassicalPoly img = evaluate_classical(UPoly::from_word(w, c));
        for (auto& [d, q] : img.terms())
            CHECK(d == zdeg);
    }
}

TEST_CASE("evaluation of Omega powers")
{
    for (int n = 2; n <= 2; ++n) {
        const ClassicalForm lhs = evaluate_classical_form(wedge_pow(omega_form(n, -1), n));
        const ClassicalForm rhs = wedge_pow(classical_omega(n), n).shift_z(-n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("classical falling-factorial expansion")
{
    // n = 1: single l = 0 term, 2 Xi
    CHECK(classical_omega_expansion(1) == classical_xi(1) * Rat(2));

    for (int n = 2; n <= 3; ++n) {
        const ClassicalForm lhs =
            evaluate_classical_form(omega_partition_expansion(n)).shift_z(n);
        CHECK(lhs == classical_omega_expansion(n));
    }
}

TEST_CASE("classical commutation step")
{
    // Th~^l prod_{t=2l}^{n-1}(Xi - t Psi) == prod_{t=0}^{n-2l-1}(Xi - t Psi) Th~^l
    for (int n = 2; n <= 3; ++n) {
        const int l = 1;
        const ClassicalForm th_tilde_l = wedge_pow(classical_theta_tilde(n), l);
        ClassicalForm lhs = th_tilde_l;
        for (int t = 2 * l; t <= n - 1; ++t)
            lhs = wedge(lhs, classical_xi(n) - classical_psi(n) * Rat(t));
        ClassicalForm rhs = ClassicalForm::identity();
        for (int t = 0; t <= n - 2 * l - 1; ++t)
            rhs = wedge(rhs, classical_xi(n) - classical_psi(n) * Rat(t));
        rhs = wedge(rhs, th_tilde_l);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("vacuum reduction basics")
{
    const int n = 2;
    CHECK(vacuum_reduce(gen_poly(-2, -1, 0), n).is_zero());
    CHECK(vacuum_reduce(UPoly::from_scalar(Scalar::K() + Scalar(Rat(2 * n - 2))), n).is_zero());
    CHECK(vacuum_reduce(gen_poly(-2, -1, -1), n) == gen_poly(-2, -1, -1));

    // words ending in a nonnegative mode are in the ideal even after products
    const UPoly p = mul(gen_poly(-2, -1, 1), gen_poly(-2, -1, -1), Order::Mode);
    const UPoly reduced = vacuum_reduce(p, n);
    for (auto& [w, c] : reduced.terms())
        CHECK(w.back().r < 0);
}

TEST_CASE("centrality of the Pfaffian at the critical level")
{
    CHECK(centrality_check(1, 2));
    CHECK(centrality_check(2, 1));

    // K must sit exactly at -(2n-2): the n=2 residues do not all vanish at
    // a generic level
    const UPoly pf = pfaffian_definitional(2);
    bool all_zero = true;
    for (int s = 0; s <= 1; ++s) {
        for (const Gen& g : canonical_generators(2, s)) {
            const UPoly prod = mul(UPoly::from_gen(g), pf, Order::Mode);
            UPoly kept;
            const UPoly nf = normal_form(prod, Order::Mode);
            for (auto& [w, c] : nf.terms()) {
                if (!w.empty() && !w.back().is_tau() && w.back().r >= 0)
                    continue;
                kept.add_term(w, c);
            }
            if (!specialize_K(kept, Rat(17)).is_zero())
                all_zero = false;
        }
    }
    CHECK_FALSE(all_zero);
}
