#include "pfaffine/formulas.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace pfaffine {

namespace {

// sign of the permutation taking `seq` to ascending order; seq has no repeats
template <typename T>
int arrangement_sign(const std::vector<T>& seq)
{
    long inv = 0;
    for (size_t p = 0; p < seq.size(); ++p)
        for (size_t q = p + 1; q < seq.size(); ++q)
            if (seq[p] > seq[q])
                ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

void rec_matchings(std::vector<int>& pool, std::vector<std::pair<int, int>>& pairs,
                   const std::function<void(const std::vector<std::pair<int, int>>&)>& sink)
{
    if (pool.empty()) {
        sink(pairs);
        return;
    }
    const int x = pool.front();
    for (size_t k = 1; k < pool.size(); ++k) {
        const int y = pool[k];
        std::vector<int> rest;
        rest.reserve(pool.size() - 2);
        for (size_t t = 1; t < pool.size(); ++t)
            if (t != k)
                rest.push_back(pool[t]);
        pairs.emplace_back(x, y);
        rec_matchings(rest, pairs, sink);
        pairs.pop_back();
    }
}

} // namespace

UPoly pfaffian_definitional(int n, int budget_n)
{
    if (n < 1)
        throw std::invalid_argument("pfaffian_definitional: n must be >= 1");
    if (n > budget_n)
        throw std::runtime_error("pfaffian_definitional: n exceeds the configured budget");

    std::vector<int> pool;
    for (int i = -n; i <= n; ++i)
        if (i != 0)
            pool.push_back(i);

    UPoly acc;
    std::vector<std::pair<int, int>> pairs;
    rec_matchings(pool, pairs, [&acc, n](const std::vector<std::pair<int, int>>& m) {
        std::vector<size_t> order(m.size());
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<int> seq;
            seq.reserve(2 * m.size());
            Word w;
            w.reserve(m.size());
            int sign = 1;
            for (size_t t : order) {
                const auto [p, q] = m[t];
                seq.push_back(p);
                seq.push_back(q);
                CanonF c = canonicalize(p, -q, -1); // F~_{p,q} = F_{p,-q}
                sign *= c.sign;                      // never 0: p != q
                w.push_back(c.g);
            }
            sign *= arrangement_sign(seq);
            acc.add_term(w, Scalar(Rat(sign)));
        } while (std::next_permutation(order.begin(), order.end()));
    });

    UPoly out = normal_form(acc);
    out *= Scalar(1 / factorial(n));
    return out;
}

Form omega_partition_expansion(int n)
{
    if (n < 1)
        throw std::invalid_argument("omega_partition_expansion: n must be >= 1");
    Form total;
    for (int l = 0; 2 * l <= n; ++l) {
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; a + b <= n; ++b) {
                if (a + b < 2 * l)
                    continue;
                const auto alphas = partitions_of(a, l);
                const auto betas = partitions_of(b, l);
                if (alphas.empty() || betas.empty())
                    continue;

                Form left;
                for (const auto& alpha : alphas) {
                    Form t = theta_partition_product(alpha.parts, true, n);
                    t *= Scalar(1 / alpha.multiplicity_factorial());
                    left += t;
                }
                Form right;
                for (const auto& beta : betas) {
                    Form t = theta_partition_product(beta.parts, false, n);
                    t *= Scalar(1 / beta.multiplicity_factorial());
                    right += t;
                }

                Form mid = wedge_pow(-psi_form(n), a + b - 2 * l);
                mid = wedge(mid, xi_psi_adtau_power(n, n - a - b));

                Rat coeff = factorial(n) / factorial(n - a - b);
                for (int t = 0; t < n - 2 * l; ++t)
                    coeff *= 2;

                Form term = wedge(left, wedge(mid, right));
                term *= Scalar(coeff);
                total += term;
            }
        }
    }
    return total;
}

UPoly sub_pfaffian(const std::vector<int>& I, const Partition& parts, PfOrientation o)
{
    const int l = parts.length();
    if (static_cast<int>(I.size()) != 2 * l)
        throw std::invalid_argument("sub_pfaffian: |I| must equal 2*length(parts)");
    if (!std::is_sorted(I.begin(), I.end()))
        throw std::invalid_argument("sub_pfaffian: I must be ascending");
    if (l == 0)
        return UPoly::one();

    std::vector<size_t> perm(I.size());
    std::iota(perm.begin(), perm.end(), 0);
    UPoly acc;
    do {
        int sign = arrangement_sign(perm);
        Word w;
        w.reserve(static_cast<size_t>(l));
        for (int k = 0; k < l; ++k) {
            const int u = I[perm[2 * static_cast<size_t>(k)]];
            const int v = I[perm[2 * static_cast<size_t>(k) + 1]];
            const int mode = -parts.parts[static_cast<size_t>(k)];
            CanonF c = (o == PfOrientation::MinusPlus) ? canonicalize(-u, v, mode)
                                                       : canonicalize(u, -v, mode);
            sign *= c.sign; // never 0: u != v, both negative
            w.push_back(c.g);
        }
        acc.add_term(w, Scalar(Rat(sign)));
    } while (std::next_permutation(perm.begin(), perm.end()));

    UPoly out = normal_form(acc);
    Rat scale = 1 / factorial(l);
    for (int k = 0; k < l; ++k)
        scale /= 2;
    out *= Scalar(scale);
    return out;
}

namespace {

// Φ_{i,j}[-1] applied to v: F_{i,j}[-1]·v + δ_{ij} ad_τ(v).
UPoly apply_phi(int i, int j, const UPoly& v)
{
    UPoly out;
    CanonF c = canonicalize(i, j, -1);
    if (c.sign != 0)
        out += mul(UPoly::from_gen(c.g, Scalar(Rat(c.sign))), v);
    if (i == j)
        out += ad_tau(v);
    return out;
}

} // namespace

UPoly column_det_phi(const std::vector<int>& I, const std::vector<int>& J)
{
    if (I.size() != J.size())
        throw std::invalid_argument("column_det_phi: |I| != |J|");
    const size_t l = I.size();
    if (l == 0)
        return UPoly::one();

    std::vector<size_t> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    UPoly acc;
    do {
        // rightmost factor acts first
        UPoly v = UPoly::one();
        for (size_t k = l; k-- > 0;)
            v = apply_phi(I[perm[k]], J[k], v);
        if (arrangement_sign(perm) < 0)
            v = -v;
        acc += v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return normal_form(acc);
}

namespace {

void rec_subsets(const std::vector<int>& pool, size_t k, size_t start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (size_t t = start; t + (k - cur.size()) <= pool.size(); ++t) {
        cur.push_back(pool[t]);
        rec_subsets(pool, k, t + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& pool, size_t k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    rec_subsets(pool, k, 0, cur, out);
    return out;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> negated(const std::vector<int>& v)
{
    std::vector<int> out;
    out.reserve(v.size());
    for (int x : v)
        out.push_back(-x);
    return out;
}

} // namespace

UPoly pfaffian_subset_expansion(int n)
{
    if (n < 1)
        throw std::invalid_argument("pfaffian_subset_expansion: n must be >= 1");

    std::vector<int> full;
    for (int i = -n; i <= -1; ++i)
        full.push_back(i);
    std::vector<int> pos_range;
    for (int i = 1; i <= n; ++i)
        pos_range.push_back(i);

    UPoly total;
    for (int l = 0; 2 * l <= n; ++l) {
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; a + b <= n; ++b) {
                if (a + b < 2 * l)
                    continue;
                const auto alphas = partitions_of(a, l);
                const auto betas = partitions_of(b, l);
                if (alphas.empty() || betas.empty())
                    continue;
                const int r = a + b - 2 * l; // |J|
                const int q = n - a - b;     // |J_1| = |J_2|
                const size_t jsize = static_cast<size_t>(r);
                // (-Psi)^r contributes (-1)^{r(r-1)/2} when its pairs are
                // regrouped into e_J e_{-J}; reversing e_{-J~_1} into the
                // descending block e_{-J_1} contributes (-1)^{q(q-1)/2}.
                const int block_sign = ((r * (r - 1) / 2 + q * (q - 1) / 2) % 2 == 0) ? 1 : -1;
                const Rat det_scale = factorial(r) * block_sign;

                for (const auto& J : subsets_of(full, jsize)) {
                    const std::vector<int> rest = set_minus(full, J);
                    const auto i_choices = subsets_of(rest, static_cast<size_t>(2 * l));
                    for (const auto& I1 : i_choices) {
                        const std::vector<int> J1 = set_minus(rest, I1);

                        UPoly left;
                        for (const auto& alpha : alphas) {
                            UPoly t = sub_pfaffian(I1, alpha, PfOrientation::MinusPlus);
                            t *= Scalar(factorial(l) / alpha.multiplicity_factorial());
                            left += t;
                        }
                        // -I_1, -J_1, -J written as descending strings, sorted into (1..n)
                        const int sign_pos =
                            sgn_concat({negated(I1), negated(J1), negated(J)}, pos_range);

                        for (const auto& I2 : i_choices) {
                            const std::vector<int> J2 = set_minus(rest, I2);
                            const int sign_neg = sgn_concat({J, J2, I2}, full);

                            UPoly right;
                            for (const auto& beta : betas) {
                                UPoly t = sub_pfaffian(I2, beta, PfOrientation::PlusMinus);
                                t *= Scalar(factorial(l) / beta.multiplicity_factorial());
                                right += t;
                            }

                            UPoly det = column_det_phi(J2, J1);
                            det *= Scalar(det_scale * sign_pos * sign_neg);
                            total += mul(mul(left, det), right);
                        }
                    }
                }
            }
        }
    }
    return normal_form(total);
}

Form theta_pfaffian_expansion(const Partition& parts, ThetaKind kind, int n)
{
    const int l = parts.length();
    std::vector<int> full;
    for (int i = -n; i <= -1; ++i)
        full.push_back(i);

    Form total;
    Rat scale = factorial(l);
    for (int k = 0; k < l; ++k)
        scale *= 2;
    for (const auto& I : subsets_of(full, static_cast<size_t>(2 * l))) {
        UPoly pf = sub_pfaffian(I, parts,
                                kind == ThetaKind::ThetaTilde ? PfOrientation::MinusPlus
                                                              : PfOrientation::PlusMinus);
        if (pf.is_zero())
            continue;
        // Θ~ attaches e_{-i_1}...e_{-i_{2l}}; Θ attaches e_{i_1}...e_{i_{2l}}.
        std::vector<int> idx = (kind == ThetaKind::ThetaTilde) ? negated(I) : I;
        int sign = arrangement_sign(idx);
        ExtMono m = 0;
        for (int x : idx)
            m |= ExtMono(1) << ext_bit(x, n);
        UPoly coeff = pf * Scalar(sign < 0 ? -scale : scale);
        total.add_term(m, coeff);
    }
    return total;
}

} // namespace pfaffine
