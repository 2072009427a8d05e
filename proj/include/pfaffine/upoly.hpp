#ifndef PFAFFINE_UPOLY_HPP
#define PFAFFINE_UPOLY_HPP

#include <map>
#include <vector>

#include "pfaffine/gens.hpp"
#include "pfaffine/scalar.hpp"

namespace pfaffine {

/// Element of U(o_hat_{2n} ⊕ Cτ): sparse Scalar-linear combination of words.
/// Zero coefficients are never stored; equality is equality of term maps,
/// which is canonical once both sides are in normal form under the same order.
class UPoly {
public:
    using TermMap = std::map<Word, Scalar, WordLess>;

    UPoly() = default;

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return from_word(Word{}, Scalar(1)); }
    static UPoly from_scalar(const Scalar& c) { return from_word(Word{}, c); }
    static UPoly from_gen(const Gen& g, const Scalar& c = Scalar(1));
    static UPoly from_word(const Word& w, const Scalar& c = Scalar(1));

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const TermMap& terms() const { return t_; }

    void add_term(const Word& w, const Scalar& c);

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const Scalar& c);
    UPoly operator-() const;
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const Scalar& c) { return a *= c; }
    friend UPoly operator*(const Scalar& c, UPoly a) { return a *= c; }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    bool tau_free() const;
    bool k_free() const;

private:
    TermMap t_;
};

/// Structure-constant bracket of two letters, as a (re-canonicalized) UPoly:
/// linear in F letters plus a Scalar multiple of 1 carrying K.
UPoly commutator(const Gen& a, const Gen& b);

/// Rewrite positions: which adjacent inversion to reduce first. Confluence of
/// the result is a tested property (PBW), not an assumption of the callers.
enum class RewriteScan { Leftmost, Rightmost };

/// PBW normal form: rewrite xy -> yx + [x,y] until every word is weakly
/// increasing under `ord`. Terminates because each swap lowers the inversion
/// count at fixed length and bracket terms are strictly shorter.
UPoly normal_form(const UPoly& p, Order ord = Order::HC,
                  RewriteScan scan = RewriteScan::Leftmost);

/// Product = word concatenation followed by eager normal_form under `ord`.
UPoly mul(const UPoly& a, const UPoly& b, Order ord = Order::HC);
inline UPoly operator*(const UPoly& a, const UPoly& b) { return mul(a, b); }
UPoly power(const UPoly& p, int k, Order ord = Order::HC);
UPoly commutator(const UPoly& a, const UPoly& b, Order ord = Order::HC);

/// The derivation ad_τ = [τ, ·]: each letter F_{i,j}[r] -> -r F_{i,j}[r-1],
/// extended by Leibniz; the result is renormalized.
UPoly ad_tau(const UPoly& p, Order ord = Order::HC);

/// h-weight of a word: entry k-1 of the result is the eigenvalue of
/// ad F_{-k,-k}[0] ... with sign convention wt(F_{i,j}) = eps_i - eps_j,
/// eps_{-k} = -eps_k for k in 1..n.
std::vector<long> weight(const Word& w, int n);

/// True iff every stored monomial has zero weight.
bool is_h_invariant(const UPoly& p, int n);

/// Substitute K := c in every coefficient.
UPoly specialize_K(const UPoly& p, const Rat& c);

} // namespace pfaffine

#endif
