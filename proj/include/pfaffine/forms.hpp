#ifndef PFAFFINE_FORMS_HPP
#define PFAFFINE_FORMS_HPP

#include <cstdint>
#include <map>
#include <string>

#include "pfaffine/upoly.hpp"

namespace pfaffine {

/// Wedge monomial over e_i, i in [-n;n]\{0}, stored as a bitmask in the
/// ascending-index orientation. Bit k corresponds to ext_unbit(k, n).
using ExtMono = uint32_t;

int ext_bit(int idx, int n);
int ext_unbit(int bit, int n);
std::vector<int> ext_indices(ExtMono m, int n);

/// Koszul sign of concatenating two ascending monomials and resorting, or 0
/// when they share an index.
int koszul_sign(ExtMono a, ExtMono b);

/// Element of Λ ⊗ U: sparse map from wedge monomials to UPoly coefficients.
class Form {
public:
    using TermMap = std::map<ExtMono, UPoly>;

    Form() = default;

    static Form zero() { return Form(); }
    /// The identity: empty wedge monomial ⊗ 1.
    static Form identity() { return term(0, UPoly::one()); }
    static Form term(ExtMono m, const UPoly& p);

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const;
    const TermMap& terms() const { return t_; }

    void add_term(ExtMono m, const UPoly& p);

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const Scalar& c);
    Form operator-() const;
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Form a, const Scalar& c) { return a *= c; }
    friend Form operator*(const Scalar& c, Form a) { return a *= c; }

    friend bool operator==(const Form& a, const Form& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    /// Exterior degrees present (as a sorted list of popcounts).
    std::vector<int> ext_degrees() const;

private:
    TermMap t_;
};

/// Bilinear product: Koszul sign on the Λ part, U parts multiplied in the
/// written order and eagerly PBW-normalized under `ord`.
Form wedge(const Form& a, const Form& b, Order ord = Order::HC);
Form wedge_pow(const Form& f, int k, Order ord = Order::HC);

/// ad_τ applied to every UPoly coefficient.
Form ad_tau(const Form& f, Order ord = Order::HC);

/// Coefficient of the full ascending monomial e_{-n} ∧ ... ∧ e_n.
UPoly top_coefficient(const Form& f, int n);

// The named forms. Index ranges as in their defining sums:
//   Ω[s]  over i,j in [-n;n];  Θ[r]: i in [-n,-1], j in [1,n];
//   Θ~[r]: i in [1,n], j in [-n,-1];  Ξ[r]: i,j in [-n,-1];
//   Ψ = Σ_{j=1..n} e_j e_{-j}.
Form omega_form(int n, int s);
Form theta_form(int n, int r);
Form theta_tilde_form(int n, int r);
Form xi_form(int n, int r);
Form psi_form(int n);
Form xi_minus1_form(int n);       // ξ[-1]  = Ξ[-1] + 2Ψτ
Form xi_tilde_minus1_form(int n); // ξ~[-1] = Ξ[-1] - 2Ψτ
Form x_minus1_form(int n);        // X[-1] = Θ[-1] + ξ[-1]
Form y_minus1_form(int n);        // Y[-1] = Θ~[-1] + ξ~[-1]

/// Ordered product Θ[-a_1] ... Θ[-a_l] (resp. Θ~) over the parts of a
/// partition; the empty partition gives the identity form.
Form theta_partition_product(const std::vector<int>& parts, bool tilde, int n);

/// Dispatcher by name: Omega, Theta, ThetaTilde, Xi, Psi, xi, xiTilde, X, Y.
/// The mode argument is ignored by the forms that are pinned at -1.
Form named_form(const std::string& name, int n, int r);

/// (Ξ[-1] - Ψ ad_τ)^r · 1, computed by iterating the operator on the
/// identity form.
Form xi_psi_adtau_power(int n, int r);

} // namespace pfaffine

#endif
