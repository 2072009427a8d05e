#ifndef PFAFFINE_SCALAR_HPP
#define PFAFFINE_SCALAR_HPP

#include <string>
#include <vector>

#include "pfaffine/rational.hpp"

namespace pfaffine {

/// Coefficient ring Q[K]: rational polynomials in the central symbol K.
/// K is kept in the coefficients instead of appearing as a word letter, so
/// specializing it is a plain substitution and words stay short.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : Scalar(Rat(v)) {}
    Scalar(long v) : Scalar(Rat(v)) {}
    Scalar(const Rat& v);

    /// The monomial c * K^power.
    static Scalar K(int power = 1, const Rat& c = 1);

    bool is_zero() const { return c_.empty(); }
    /// True when the value is free of K.
    bool is_rational() const { return c_.size() <= 1; }
    /// Degree in K; -1 for the zero value.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of K^d (0 outside the stored range).
    const Rat& coeff(int d) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator*=(const Rat& c);
    Scalar& operator/=(const Rat& c);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator*(Scalar a, const Rat& c) { return a *= c; }
    friend Scalar operator*(const Rat& c, Scalar a) { return a *= c; }

    /// Substitute K := value.
    Scalar subst_K(const Rat& value) const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    std::vector<Rat> c_; // c_[d] = coefficient of K^d; no trailing zeros
    void trim();
};

} // namespace pfaffine

#endif
