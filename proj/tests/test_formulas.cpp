#include <doctest.h>

#include "pfaffine/formulas.hpp"

using namespace pfaffine;

namespace {

UPoly gen_poly(int i, int j, int r, const Rat& c = 1)
{
    CanonF cf = canonicalize(i, j, r);
    REQUIRE(cf.sign != 0);
    return UPoly::from_gen(cf.g, Scalar(c * cf.sign));
}

ExtMono mono(std::initializer_list<int> idx, int n)
{
    ExtMono m = 0;
    for (int i : idx)
        m |= ExtMono(1) << ext_bit(i, n);
    return m;
}

// F_{i,j} -> F_{-i,-j} on every letter (modes kept), for the orientation check
UPoly negate_indices(const UPoly& p)
{
    UPoly out;
    for (auto& [w, c] : p.terms()) {
        Word nw;
        Scalar nc = c;
        for (const Gen& g : w) {
            CanonF cf = canonicalize(-g.i, -g.j, g.r);
            REQUIRE(cf.sign != 0);
            nw.push_back(cf.g);
            if (cf.sign < 0)
                nc = -nc;
        }
        out.add_term(nw, nc);
    }
    return normal_form(out);
}

Rat two_pow_n_fact(int n)
{
    Rat f = factorial(n);
    for (int t = 0; t < n; ++t)
        f *= 2;
    return f;
}

} // namespace

TEST_CASE("definitional Pfaffian at n=1 and n=2")
{
    CHECK(pfaffian_definitional(1) == gen_poly(-1, -1, -1));

    // the four-term n=2 value, diagonal part and off-diagonal part
    UPoly expect = mul(gen_poly(-2, -2, -1), gen_poly(-1, -1, -1));
    expect -= mul(gen_poly(-1, -2, -1), gen_poly(-2, -1, -1));
    expect += mul(gen_poly(1, -2, -1), gen_poly(-2, 1, -1));
    expect += gen_poly(-1, -1, -2);
    CHECK(pfaffian_definitional(2) == expect);

    CHECK_THROWS_AS(pfaffian_definitional(5, 4), std::runtime_error);
    CHECK_THROWS_AS(pfaffian_definitional(0), std::invalid_argument);
}

TEST_CASE("Pfaffian is h-invariant and K-free")
{
    for (int n = 1; n <= 3; ++n) {
        const UPoly pf = pfaffian_definitional(n);
        CHECK(is_h_invariant(pf, n));
        CHECK(pf.k_free());
        CHECK(pf.tau_free());
    }
}

TEST_CASE("sub_pfaffian")
{
    CHECK(sub_pfaffian({}, Partition{}, PfOrientation::MinusPlus) == UPoly::one());

    // I = {-2,-1}, alpha = (1), rows -I columns +I: F_{2,-1}[-1] = -F_{1,-2}[-1]
    const UPoly mp = sub_pfaffian({-2, -1}, Partition({1}), PfOrientation::MinusPlus);
    CHECK(mp == gen_poly(1, -2, -1, -1));

    // the two orientations are exchanged by negating every index
    const UPoly pm = sub_pfaffian({-2, -1}, Partition({1}), PfOrientation::PlusMinus);
    CHECK(pm == negate_indices(mp));

    CHECK_THROWS_AS(sub_pfaffian({-1}, Partition({1}), PfOrientation::MinusPlus),
                    std::invalid_argument);
}

TEST_CASE("column determinant of Phi")
{
    // l = 1: (F_{-1,-1}[-1] + ad_tau) . 1 = F_{-1,-1}[-1]
    CHECK(column_det_phi({-1}, {-1}) == gen_poly(-1, -1, -1));

    // n = 2 principal: F_{-2,-2}F_{-1,-1} - F_{-1,-2}F_{-2,-1} + F_{-1,-1}[-2]
    UPoly expect = mul(gen_poly(-2, -2, -1), gen_poly(-1, -1, -1));
    expect -= mul(gen_poly(-1, -2, -1), gen_poly(-2, -1, -1));
    expect += gen_poly(-1, -1, -2);
    CHECK(column_det_phi({-2, -1}, {-2, -1}) == expect);

    CHECK_THROWS_AS(column_det_phi({-1}, {-2, -1}), std::invalid_argument);
}

TEST_CASE("(Xi[-1]-Psi ad_tau)^r . 1 expands over column determinants")
{
    for (int n = 2; n <= 3; ++n) {
        std::vector<int> full;
        for (int i = -n; i <= -1; ++i)
            full.push_back(i);
        for (int r = 0; r <= 3 && r <= n; ++r) {
            Form expect;
            // iterate ascending r-subsets I, J of {-n..-1}
            std::vector<int> maskI(full.size(), 0);
            std::fill(maskI.end() - r, maskI.end(), 1);
            do {
                std::vector<int> I;
                for (size_t t = 0; t < full.size(); ++t)
                    if (maskI[t])
                        I.push_back(full[t]);
                std::vector<int> maskJ(full.size(), 0);
                std::fill(maskJ.end() - r, maskJ.end(), 1);
                do {
                    std::vector<int> J;
                    for (size_t t = 0; t < full.size(); ++t)
                        if (maskJ[t])
                            J.push_back(full[t]);
                    // e_{i_1}..e_{i_r} e_{-j_r}..e_{-j_1}: already ascending
                    ExtMono m = 0;
                    for (int i : I)
                        m |= ExtMono(1) << ext_bit(i, n);
                    for (int j : J)
                        m |= ExtMono(1) << ext_bit(-j, n);
                    expect.add_term(m, column_det_phi(I, J) * Scalar(factorial(r)));
                } while (std::next_permutation(maskJ.begin(), maskJ.end()));
            } while (std::next_permutation(maskI.begin(), maskI.end()));
            CHECK(xi_psi_adtau_power(n, r) == expect);
        }
    }
}

TEST_CASE("partition expansion of Omega^n matches the worked small cases")
{
    // n = 2: 4 (Xi[-1]-Psi ad_tau)^2 . 1 + 2 Th~[-1] Th[-1]
    Form expect2 = Scalar(4) * xi_psi_adtau_power(2, 2);
    expect2 += Scalar(2) * wedge(theta_tilde_form(2, -1), theta_form(2, -1));
    CHECK(omega_partition_expansion(2) == expect2);

    // n = 3: 8 (..)^3 + 12 Th~[-1]((..)^1)Th[-1] - 12 Psi(Th~[-2]Th[-1] + Th~[-1]Th[-2])
    Form expect3 = Scalar(8) * xi_psi_adtau_power(3, 3);
    expect3 += Scalar(12) *
               wedge(theta_tilde_form(3, -1),
                     wedge(xi_psi_adtau_power(3, 1), theta_form(3, -1)));
    Form cross = wedge(theta_tilde_form(3, -2), theta_form(3, -1));
    cross += wedge(theta_tilde_form(3, -1), theta_form(3, -2));
    expect3 -= Scalar(12) * wedge(psi_form(3), cross);
    CHECK(omega_partition_expansion(3) == expect3);
}

TEST_CASE("partition expansion equals the direct Omega power")
{
    for (int n = 2; n <= 3; ++n) {
        const Form expansion = omega_partition_expansion(n);
        CHECK(expansion == wedge_pow(omega_form(n, -1), n));
        // Omega is tau-free, so the normalized expansion carries no tau letter
        for (auto& [m, p] : expansion.terms())
            CHECK(p.tau_free());
    }
}

TEST_CASE("theta subset expansions")
{
    CHECK(theta_pfaffian_expansion(Partition{}, ThetaKind::ThetaTilde, 2) == Form::identity());
    CHECK(theta_pfaffian_expansion(Partition({1}), ThetaKind::ThetaTilde, 2) ==
          theta_tilde_form(2, -1));
    CHECK(theta_pfaffian_expansion(Partition({1}), ThetaKind::Theta, 2) == theta_form(2, -1));
    CHECK(theta_pfaffian_expansion(Partition({2, 1}), ThetaKind::ThetaTilde, 3) ==
          wedge(theta_tilde_form(3, -2), theta_tilde_form(3, -1)));
    CHECK(theta_pfaffian_expansion(Partition({2, 1}), ThetaKind::Theta, 3) ==
          wedge(theta_form(3, -2), theta_form(3, -1)));
}

TEST_CASE("subset expansion of the Pfaffian")
{
    CHECK(pfaffian_subset_expansion(1) == gen_poly(-1, -1, -1));
    CHECK(pfaffian_subset_expansion(2) == pfaffian_definitional(2));
    CHECK(pfaffian_subset_expansion(3) == pfaffian_definitional(3));
}

TEST_CASE("grand equality at n=2,3")
{
    for (int n = 2; n <= 3; ++n) {
        const Scalar factor(two_pow_n_fact(n));
        const UPoly top_direct = top_coefficient(wedge_pow(omega_form(n, -1), n), n);
        const UPoly top_expansion = top_coefficient(omega_partition_expansion(n), n);
        const UPoly defining = pfaffian_definitional(n) * factor;
        const UPoly subsets = pfaffian_subset_expansion(n) * factor;
        CHECK(top_direct == top_expansion);
        CHECK(top_direct == defining);
        CHECK(top_direct == subsets);
    }
}

TEST_CASE("mismatched partition lengths contribute nothing")
{
    // Unbalanced positive/negative e-index counts force a repeated index in
    // any full-degree monomial, so products with l(alpha) != l(beta) vanish.
    for (int n = 2; n <= 3; ++n) {
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; a + b <= n; ++b) {
                for (int l1 = 0; l1 <= a; ++l1) {
                    for (int l2 = 0; l2 <= b; ++l2) {
                        if (l1 == l2)
                            continue;
                        for (const auto& alpha : partitions_of(a, l1)) {
                            for (const auto& beta : partitions_of(b, l2)) {
                                Form t = theta_partition_product(alpha.parts, true, n);
                                t = wedge(t, wedge_pow(psi_form(n),
                                                       a + b - l1 - l2));
                                t = wedge(t, xi_psi_adtau_power(n, n - a - b));
                                t = wedge(t, theta_partition_product(beta.parts, false, n));
                                CHECK(top_coefficient(t, n).is_zero());
                            }
                        }
                    }
                }
            }
        }
    }

}
