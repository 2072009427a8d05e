#ifndef PFAFFINE_CLASSICAL_HPP
#define PFAFFINE_CLASSICAL_HPP

#include "pfaffine/forms.hpp"

namespace pfaffine {

/// Element of U(o_{2n}) ⊗ C[z,z^{-1}], graded by the z exponent. Words reuse
/// the affine letter type with every mode fixed at 0; at equal modes the HC
/// word order reduces to the classical one (Cartan, then i>j, then i<j).
class ClassicalPoly {
public:
    using TermMap = std::map<int, UPoly>;

    ClassicalPoly() = default;
    static ClassicalPoly zero() { return ClassicalPoly(); }
    static ClassicalPoly one();
    static ClassicalPoly from(int zdeg, const UPoly& p);

    bool is_zero() const { return t_.empty(); }
    const TermMap& terms() const { return t_; }
    void add_term(int zdeg, const UPoly& p);

    ClassicalPoly& operator+=(const ClassicalPoly& o);
    ClassicalPoly& operator-=(const ClassicalPoly& o);
    ClassicalPoly& operator*=(const Rat& c);
    ClassicalPoly operator-() const;
    friend ClassicalPoly operator+(ClassicalPoly a, const ClassicalPoly& b) { return a += b; }
    friend ClassicalPoly operator-(ClassicalPoly a, const ClassicalPoly& b) { return a -= b; }
    friend ClassicalPoly operator*(ClassicalPoly a, const Rat& c) { return a *= c; }
    friend ClassicalPoly operator*(const ClassicalPoly& a, const ClassicalPoly& b);

    /// Multiply by z^k.
    ClassicalPoly shift_z(int k) const;
    /// d/dz: z^d -> d z^{d-1}.
    ClassicalPoly ddz() const;

    friend bool operator==(const ClassicalPoly& a, const ClassicalPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const ClassicalPoly& a, const ClassicalPoly& b) { return !(a == b); }

private:
    TermMap t_;
};

/// The evaluation homomorphism φ: F_{ij}[r] -> F_{ij} z^r, K -> 0.
/// The input must be τ-free.
ClassicalPoly evaluate_classical(const UPoly& p);

/// Λ ⊗ U(o_{2n}) ⊗ C[z,z^{-1}].
class ClassicalForm {
public:
    using TermMap = std::map<ExtMono, ClassicalPoly>;

    ClassicalForm() = default;
    static ClassicalForm zero() { return ClassicalForm(); }
    static ClassicalForm identity();
    static ClassicalForm term(ExtMono m, const ClassicalPoly& p);

    bool is_zero() const { return t_.empty(); }
    const TermMap& terms() const { return t_; }
    void add_term(ExtMono m, const ClassicalPoly& p);

    ClassicalForm& operator+=(const ClassicalForm& o);
    ClassicalForm& operator-=(const ClassicalForm& o);
    ClassicalForm& operator*=(const Rat& c);
    friend ClassicalForm operator+(ClassicalForm a, const ClassicalForm& b) { return a += b; }
    friend ClassicalForm operator-(ClassicalForm a, const ClassicalForm& b) { return a -= b; }
    friend ClassicalForm operator*(ClassicalForm a, const Rat& c) { return a *= c; }

    ClassicalForm shift_z(int k) const;

    friend bool operator==(const ClassicalForm& a, const ClassicalForm& b) { return a.t_ == b.t_; }
    friend bool operator!=(const ClassicalForm& a, const ClassicalForm& b) { return !(a == b); }

private:
    TermMap t_;
};

ClassicalForm wedge(const ClassicalForm& a, const ClassicalForm& b);
ClassicalForm wedge_pow(const ClassicalForm& f, int k);
ClassicalForm evaluate_classical_form(const Form& f);

// Classical (mode-free, z-free) counterparts of the named forms.
ClassicalForm classical_omega(int n);
ClassicalForm classical_theta(int n);
ClassicalForm classical_theta_tilde(int n);
ClassicalForm classical_xi(int n);
ClassicalForm classical_psi(int n);

/// The falling-factorial expansion of the classical Ω^n:
///   Σ_l 2^{n-2l} n! / ((n-2l)! l! l!) Ξ(Ξ-Ψ)...(Ξ-(n-2l-1)Ψ) Θ~^l Θ^l.
ClassicalForm classical_omega_expansion(int n);

} // namespace pfaffine

#endif
