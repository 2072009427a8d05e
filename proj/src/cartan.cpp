#include "pfaffine/cartan.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfaffine {

CartanPoly CartanPoly::one()
{
    CartanPoly p;
    p.add_term(CartanWord{}, 1);
    return p;
}

CartanPoly CartanPoly::var(int i, int r, const Rat& c)
{
    if (i >= 0 || r >= 0)
        throw std::invalid_argument("CartanPoly::var: require i < 0 and r < 0");
    CartanPoly p;
    p.add_term(CartanWord{{i, r}}, c);
    return p;
}

void CartanPoly::add_term(CartanWord w, const Rat& c)
{
    if (c == 0)
        return;
    std::sort(w.begin(), w.end());
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(std::move(w), c);
    } else {
        it->second += c;
        if (it->second == 0)
            t_.erase(it);
    }
}

CartanPoly& CartanPoly::operator+=(const CartanPoly& o)
{
    for (auto& [w, c] : o.t_)
        add_term(w, c);
    return *this;
}

CartanPoly& CartanPoly::operator-=(const CartanPoly& o)
{
    for (auto& [w, c] : o.t_)
        add_term(w, -c);
    return *this;
}

CartanPoly& CartanPoly::operator*=(const Rat& c)
{
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [w, x] : t_)
        x *= c;
    return *this;
}

CartanPoly operator*(const CartanPoly& a, const CartanPoly& b)
{
    CartanPoly out;
    for (auto& [wa, ca] : a.t_) {
        for (auto& [wb, cb] : b.t_) {
            CartanWord w;
            w.reserve(wa.size() + wb.size());
            std::merge(wa.begin(), wa.end(), wb.begin(), wb.end(), std::back_inserter(w));
            out.add_term(std::move(w), ca * cb);
        }
    }
    return out;
}

CartanPoly ad_tau(const CartanPoly& p)
{
    CartanPoly out;
    for (auto& [w, c] : p.terms()) {
        for (size_t k = 0; k < w.size(); ++k) {
            CartanWord nw = w;
            nw[k].second -= 1;
            out.add_term(std::move(nw), c * Rat(-w[k].second));
        }
    }
    return out;
}

CartanPoly harish_chandra(const UPoly& p, int n)
{
    if (!p.tau_free())
        throw std::invalid_argument("harish_chandra: input must be tau-free");
    if (!p.k_free())
        throw std::invalid_argument("harish_chandra: input must be K-free");
    if (!is_h_invariant(p, n))
        throw std::invalid_argument("harish_chandra: input is not h-invariant");

    // In HC normal form a zero-weight word containing a non-Cartan letter
    // ends with a raising letter, hence lies in the left ideal I.
    const UPoly q = normal_form(p, Order::HC);
    CartanPoly out;
    for (auto& [w, c] : q.terms()) {
        bool cartan = true;
        for (const Gen& g : w) {
            if (!g.is_cartan()) {
                cartan = false;
                break;
            }
            if (g.r >= 0)
                throw std::invalid_argument("harish_chandra: Cartan letter with mode >= 0");
        }
        if (!cartan)
            continue;
        CartanWord cw;
        cw.reserve(w.size());
        for (const Gen& g : w)
            cw.emplace_back(g.i, g.r);
        out.add_term(std::move(cw), c.coeff(0));
    }
    return out;
}

CartanPoly hc_product_formula(int n)
{
    if (n < 1)
        throw std::invalid_argument("hc_product_formula: n must be >= 1");
    CartanPoly v = CartanPoly::one();
    for (int i = -1; i >= -n; --i)
        v = CartanPoly::var(i, -1) * v + ad_tau(v);
    return v;
}

} // namespace pfaffine
