#include "pfaffine/classical.hpp"

#include <stdexcept>

namespace pfaffine {

ClassicalPoly ClassicalPoly::one()
{
    return from(0, UPoly::one());
}

ClassicalPoly ClassicalPoly::from(int zdeg, const UPoly& p)
{
    ClassicalPoly c;
    c.add_term(zdeg, p);
    return c;
}

void ClassicalPoly::add_term(int zdeg, const UPoly& p)
{
    if (p.is_zero())
        return;
    auto it = t_.find(zdeg);
    if (it == t_.end()) {
        t_.emplace(zdeg, p);
    } else {
        it->second += p;
        if (it->second.is_zero())
            t_.erase(it);
    }
}

ClassicalPoly& ClassicalPoly::operator+=(const ClassicalPoly& o)
{
    for (auto& [d, p] : o.t_)
        add_term(d, p);
    return *this;
}

ClassicalPoly& ClassicalPoly::operator-=(const ClassicalPoly& o)
{
    for (auto& [d, p] : o.t_)
        add_term(d, -p);
    return *this;
}

ClassicalPoly& ClassicalPoly::operator*=(const Rat& c)
{
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [d, p] : t_)
        p *= Scalar(c);
    return *this;
}

ClassicalPoly ClassicalPoly::operator-() const
{
    ClassicalPoly out;
    for (auto& [d, p] : t_)
        out.t_.emplace(d, -p);
    return out;
}

ClassicalPoly operator*(const ClassicalPoly& a, const ClassicalPoly& b)
{
    ClassicalPoly out;
    for (auto& [da, pa] : a.t_)
        for (auto& [db, pb] : b.t_)
            out.add_term(da + db, mul(pa, pb));
    return out;
}

ClassicalPoly ClassicalPoly::shift_z(int k) const
{
    ClassicalPoly out;
    for (auto& [d, p] : t_)
        out.t_.emplace(d + k, p);
    return out;
}

ClassicalPoly ClassicalPoly::ddz() const
{
    ClassicalPoly out;
    for (auto& [d, p] : t_) {
        if (d == 0)
            continue;
        out.add_term(d - 1, p * Scalar(Rat(d)));
    }
    return out;
}

ClassicalPoly evaluate_classical(const UPoly& p)
{
    if (!p.tau_free())
        throw std::invalid_argument("evaluate_classical: input contains a tau letter");
    ClassicalPoly out;
    for (auto& [w, c] : p.terms()) {
        const Rat c0 = c.coeff(0); // φ(K) = 0
        if (c0 == 0)
            continue;
        int zdeg = 0;
        Word cw;
        cw.reserve(w.size());
        for (const Gen& g : w) {
            zdeg += g.r;
            cw.push_back(Gen::F(g.i, g.j, 0));
        }
        out.add_term(zdeg, normal_form(UPoly::from_word(cw, Scalar(c0))));
    }
    return out;
}

ClassicalForm ClassicalForm::identity()
{
    return term(0, ClassicalPoly::one());
}

ClassicalForm ClassicalForm::term(ExtMono m, const ClassicalPoly& p)
{
    ClassicalForm f;
    f.add_term(m, p);
    return f;
}

void ClassicalForm::add_term(ExtMono m, const ClassicalPoly& p)
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

ClassicalForm& ClassicalForm::operator+=(const ClassicalForm& o)
{
    for (auto& [m, p] : o.t_)
        add_term(m, p);
    return *this;
}

ClassicalForm& ClassicalForm::operator-=(const ClassicalForm& o)
{
    for (auto& [m, p] : o.t_)
        add_term(m, -p);
    return *this;
}

ClassicalForm& ClassicalForm::operator*=(const Rat& c)
{
    TermMap out;
    if (c != 0)
        for (auto& [m, p] : t_)
            out.emplace(m, p * c);
    t_ = std::move(out);
    return *this;
}

ClassicalForm ClassicalForm::shift_z(int k) const
{
    ClassicalForm out;
    for (auto& [m, p] : t_)
        out.t_.emplace(m, p.shift_z(k));
    return out;
}

ClassicalForm wedge(const ClassicalForm& a, const ClassicalForm& b)
{
    ClassicalForm out;
    for (auto& [ma, pa] : a.terms()) {
        for (auto& [mb, pb] : b.terms()) {
            const int sign = koszul_sign(ma, mb);
            if (sign == 0)
                continue;
            ClassicalPoly prod = pa * pb;
            if (sign < 0)
                prod = -prod;
            out.add_term(ma | mb, prod);
        }
    }
    return out;
}

ClassicalForm wedge_pow(const ClassicalForm& f, int k)
{
    if (k < 0)
        throw std::invalid_argument("wedge_pow: negative exponent");
    ClassicalForm acc = ClassicalForm::identity();
    for (int t = 0; t < k; ++t)
        acc = wedge(acc, f);
    return acc;
}

ClassicalForm evaluate_classical_form(const Form& f)
{
    ClassicalForm out;
    for (auto& [m, p] : f.terms())
        out.add_term(m, evaluate_classical(p));
    return out;
}

namespace {

ClassicalForm classical_of(const Form& f)
{
    return evaluate_classical_form(f); // mode-0 builders: zdeg stays 0
}

} // namespace

ClassicalForm classical_omega(int n) { return classical_of(omega_form(n, 0)); }
ClassicalForm classical_theta(int n) { return classical_of(theta_form(n, 0)); }
ClassicalForm classical_theta_tilde(int n) { return classical_of(theta_tilde_form(n, 0)); }
ClassicalForm classical_xi(int n) { return classical_of(xi_form(n, 0)); }
ClassicalForm classical_psi(int n) { return classical_of(psi_form(n)); }

ClassicalForm classical_omega_expansion(int n)
{
    if (n < 1)
        throw std::invalid_argument("classical_omega_expansion: n must be >= 1");
    const ClassicalForm xi = classical_xi(n);
    const ClassicalForm psi = classical_psi(n);
    const ClassicalForm th = classical_theta(n);
    const ClassicalForm th_tilde = classical_theta_tilde(n);

    ClassicalForm total;
    for (int l = 0; 2 * l <= n; ++l) {
        ClassicalForm term = ClassicalForm::identity();
        for (int t = 0; t <= n - 2 * l - 1; ++t)
            term = wedge(term, xi - psi * Rat(t));
        term = wedge(term, wedge_pow(th_tilde, l));
        term = wedge(term, wedge_pow(th, l));

        Rat coeff = factorial(n) / (factorial(n - 2 * l) * factorial(l) * factorial(l));
        for (int t = 0; t < n - 2 * l; ++t)
            coeff *= 2;
        total += term * coeff;
    }
    return total;
}

} // namespace pfaffine
