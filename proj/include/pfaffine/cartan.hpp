#ifndef PFAFFINE_CARTAN_HPP
#define PFAFFINE_CARTAN_HPP

#include <map>
#include <utility>
#include <vector>

#include "pfaffine/upoly.hpp"

namespace pfaffine {

/// Commuting variable μ_i[r] = image of F_{ii}[r], i in {-n..-1}, r < 0.
using MuVar = std::pair<int, int>; // (i, r)
using CartanWord = std::vector<MuVar>; // sorted multiset

/// Polynomial algebra in the μ_i[r]: the image U(t^{-1}h[t^{-1}]) of the
/// Harish-Chandra projection.
class CartanPoly {
public:
    using TermMap = std::map<CartanWord, Rat>;

    CartanPoly() = default;
    static CartanPoly zero() { return CartanPoly(); }
    static CartanPoly one();
    static CartanPoly var(int i, int r, const Rat& c = 1);

    bool is_zero() const { return t_.empty(); }
    const TermMap& terms() const { return t_; }
    void add_term(CartanWord w, const Rat& c); // sorts w

    CartanPoly& operator+=(const CartanPoly& o);
    CartanPoly& operator-=(const CartanPoly& o);
    CartanPoly& operator*=(const Rat& c);
    friend CartanPoly operator+(CartanPoly a, const CartanPoly& b) { return a += b; }
    friend CartanPoly operator-(CartanPoly a, const CartanPoly& b) { return a -= b; }
    friend CartanPoly operator*(CartanPoly a, const Rat& c) { return a *= c; }

    friend CartanPoly operator*(const CartanPoly& a, const CartanPoly& b);

    friend bool operator==(const CartanPoly& a, const CartanPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const CartanPoly& a, const CartanPoly& b) { return !(a == b); }

private:
    TermMap t_;
};

/// The derivation μ_i[r] -> -r μ_i[r-1], extended by Leibniz.
CartanPoly ad_tau(const CartanPoly& p);

/// Harish-Chandra projection: normalize under the HC order, drop every word
/// containing a non-Cartan letter, rename F_{ii}[r] -> μ_i[r]. Requires a
/// τ-free, K-free, h-invariant input with all modes negative.
CartanPoly harish_chandra(const UPoly& p, int n);

/// (μ_{-n}[-1] + ad_τ) ... (μ_{-1}[-1] + ad_τ) · 1, applied right to left.
CartanPoly hc_product_formula(int n);

} // namespace pfaffine

#endif
