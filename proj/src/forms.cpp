#include "pfaffine/forms.hpp"

#include <bit>
#include <stdexcept>

namespace pfaffine {

int ext_bit(int idx, int n)
{
    if (idx == 0 || idx < -n || idx > n)
        throw std::invalid_argument("ext_bit: index out of range");
    return idx < 0 ? idx + n : idx + n - 1;
}

int ext_unbit(int bit, int n)
{
    if (bit < 0 || bit >= 2 * n)
        throw std::invalid_argument("ext_unbit: bit out of range");
    return bit < n ? bit - n : bit - n + 1;
}

std::vector<int> ext_indices(ExtMono m, int n)
{
    std::vector<int> out;
    for (int b = 0; b < 2 * n; ++b)
        if (m & (ExtMono(1) << b))
            out.push_back(ext_unbit(b, n));
    return out;
}

int koszul_sign(ExtMono a, ExtMono b)
{
    if (a & b)
        return 0;
    // parity of the number of (x,y), x in a, y in b, with bit(x) > bit(y)
    int inv = 0;
    ExtMono bb = b;
    while (bb) {
        const int bit = std::countr_zero(bb);
        bb &= bb - 1;
        inv += std::popcount(a >> (bit + 1));
    }
    return (inv % 2 == 0) ? 1 : -1;
}

Form Form::term(ExtMono m, const UPoly& p)
{
    Form f;
    f.add_term(m, p);
    return f;
}

size_t Form::term_count() const
{
    size_t c = 0;
    for (auto& [m, p] : t_)
        c += p.term_count();
    return c;
}

void Form::add_term(ExtMono m, const UPoly& p)
{
    if (p.is_zero())
        return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, p);
    } else {
        it->second += p;
        if (it->second.is_zero())
            t_.erase(it);
    }
}

Form& Form::operator+=(const Form& o)
{
    for (auto& [m, p] : o.t_)
        add_term(m, p);
    return *this;
}

Form& Form::operator-=(const Form& o)
{
    for (auto& [m, p] : o.t_)
        add_term(m, -p);
    return *this;
}

Form& Form::operator*=(const Scalar& c)
{
    TermMap out;
    for (auto& [m, p] : t_) {
        UPoly q = p * c;
        if (!q.is_zero())
            out.emplace(m, std::move(q));
    }
    t_ = std::move(out);
    return *this;
}

Form Form::operator-() const
{
    Form f;
    for (auto& [m, p] : t_)
        f.t_.emplace(m, -p);
    return f;
}

std::vector<int> Form::ext_degrees() const
{
    std::vector<int> degs;
    for (auto& [m, p] : t_) {
        const int d = std::popcount(m);
        if (degs.empty() || degs.back() != d)
            degs.push_back(d);
    }
    return degs;
}

Form wedge(const Form& a, const Form& b, Order ord)
{
    Form out;
    for (auto& [ma, pa] : a.terms()) {
        for (auto& [mb, pb] : b.terms()) {
            const int sign = koszul_sign(ma, mb);
            if (sign == 0)
                continue;
            UPoly prod = mul(pa, pb, ord);
            if (sign < 0)
                prod = -prod;
            out.add_term(ma | mb, prod);
        }
    }
    return out;
}

Form wedge_pow(const Form& f, int k, Order ord)
{
    if (k < 0)
        throw std::invalid_argument("wedge_pow: negative exponent");
    Form acc = Form::identity();
    for (int t = 0; t < k; ++t)
        acc = wedge(acc, f, ord);
    return acc;
}

Form ad_tau(const Form& f, Order ord)
{
    Form out;
    for (auto& [m, p] : f.terms())
        out.add_term(m, ad_tau(p, ord));
    return out;
}

UPoly top_coefficient(const Form& f, int n)
{
    const ExtMono full = (ExtMono(1) << (2 * n)) - 1;
    auto it = f.terms().find(full);
    return it == f.terms().end() ? UPoly::zero() : it->second;
}

namespace {

// e_i ∧ e_{mj} ⊗ coeff, resolved to the ascending orientation.
void add_pair_term(Form& f, int i, int mj, int n, const UPoly& coeff)
{
    if (i == mj)
        return;
    const ExtMono m = (ExtMono(1) << ext_bit(i, n)) | (ExtMono(1) << ext_bit(mj, n));
    f.add_term(m, i < mj ? coeff : -coeff);
}

void add_f_pair(Form& f, int i, int j, int r, int n)
{
    CanonF c = canonicalize(i, j, r);
    if (c.sign == 0)
        return;
    add_pair_term(f, i, -j, n, UPoly::from_gen(c.g, Scalar(Rat(c.sign))));
}

} // namespace

Form omega_form(int n, int s)
{
    Form f;
    for (int i = -n; i <= n; ++i)
        for (int j = -n; j <= n; ++j)
            if (i != 0 && j != 0)
                add_f_pair(f, i, j, s, n);
    return f;
}

Form theta_form(int n, int r)
{
    Form f;
    for (int i = -n; i <= -1; ++i)
        for (int j = 1; j <= n; ++j)
            add_f_pair(f, i, j, r, n);
    return f;
}

Form theta_tilde_form(int n, int r)
{
    Form f;
    for (int i = 1; i <= n; ++i)
        for (int j = -n; j <= -1; ++j)
            add_f_pair(f, i, j, r, n);
    return f;
}

Form xi_form(int n, int r)
{
    Form f;
    for (int i = -n; i <= -1; ++i)
        for (int j = -n; j <= -1; ++j)
            add_f_pair(f, i, j, r, n);
    return f;
}

Form psi_form(int n)
{
    Form f;
    for (int j = 1; j <= n; ++j)
        add_pair_term(f, j, -j, n, UPoly::one());
    return f;
}

Form xi_minus1_form(int n)
{
    Form psi_tau = psi_form(n);
    psi_tau = wedge(psi_tau, Form::term(0, UPoly::from_gen(Gen::tau())));
    return xi_form(n, -1) + Scalar(2) * psi_tau;
}

Form xi_tilde_minus1_form(int n)
{
    Form psi_tau = psi_form(n);
    psi_tau = wedge(psi_tau, Form::term(0, UPoly::from_gen(Gen::tau())));
    return xi_form(n, -1) - Scalar(2) * psi_tau;
}

Form x_minus1_form(int n)
{
    return theta_form(n, -1) + xi_minus1_form(n);
}

Form y_minus1_form(int n)
{
    return theta_tilde_form(n, -1) + xi_tilde_minus1_form(n);
}

Form theta_partition_product(const std::vector<int>& parts, bool tilde, int n)
{
    Form acc = Form::identity();
    for (int part : parts) {
        if (part <= 0)
            throw std::invalid_argument("theta_partition_product: parts must be positive");
        acc = wedge(acc, tilde ? theta_tilde_form(n, -part) : theta_form(n, -part));
    }
    return acc;
}

Form named_form(const std::string& name, int n, int r)
{
    if (name == "Omega")
        return omega_form(n, r);
    if (name == "Theta")
        return theta_form(n, r);
    if (name == "ThetaTilde")
        return theta_tilde_form(n, r);
    if (name == "Xi")
        return xi_form(n, r);
    if (name == "Psi")
        return psi_form(n);
    if (name == "xi")
        return xi_minus1_form(n);
    if (name == "xiTilde")
        return xi_tilde_minus1_form(n);
    if (name == "X")
        return x_minus1_form(n);
    if (name == "Y")
        return y_minus1_form(n);
    throw std::invalid_argument("named_form: unknown form name '" + name + "'");
}

Form xi_psi_adtau_power(int n, int r)
{
    if (r < 0)
        throw std::invalid_argument("xi_psi_adtau_power: negative exponent");
    const Form xi = xi_form(n, -1);
    const Form psi = psi_form(n);
    Form acc = Form::identity();
    for (int t = 0; t < r; ++t)
        acc = wedge(xi, acc) - wedge(psi, ad_tau(acc));
    return acc;
}

} // namespace pfaffine
