#include "pfaffine/scalar.hpp"

#include <stdexcept>

namespace pfaffine {

Rat factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

Rat binomial(long n, long k)
{
    if (n < 0)
        throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n)
        return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

Scalar::Scalar(const Rat& v)
{
    if (v != 0)
        c_.push_back(v);
}

Scalar Scalar::K(int power, const Rat& c)
{
    Scalar s;
    if (power < 0)
        throw std::invalid_argument("Scalar::K: negative power");
    if (c != 0) {
        s.c_.assign(static_cast<size_t>(power) + 1, Rat(0));
        s.c_.back() = c;
    }
    return s;
}

const Rat& Scalar::coeff(int d) const
{
    static const Rat zero(0);
    if (d < 0 || d >= static_cast<int>(c_.size()))
        return zero;
    return c_[static_cast<size_t>(d)];
}

void Scalar::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (size_t d = 0; d < o.c_.size(); ++d)
        c_[d] += o.c_[d];
    trim();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (size_t d = 0; d < o.c_.size(); ++d)
        c_[d] -= o.c_[d];
    trim();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> prod(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t a = 0; a < c_.size(); ++a)
        for (size_t b = 0; b < o.c_.size(); ++b)
            prod[a + b] += c_[a] * o.c_[b];
    c_ = std::move(prod);
    trim();
    return *this;
}

Scalar& Scalar::operator*=(const Rat& c)
{
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= c;
    return *this;
}

Scalar& Scalar::operator/=(const Rat& c)
{
    if (c == 0)
        throw std::invalid_argument("Scalar: division by zero");
    for (auto& x : c_)
        x /= c;
    return *this;
}

Scalar Scalar::operator-() const
{
    Scalar s(*this);
    for (auto& x : s.c_)
        x = -x;
    return s;
}

Scalar Scalar::subst_K(const Rat& value) const
{
    // Horner evaluation at K = value.
    Rat acc(0);
    for (size_t d = c_.size(); d-- > 0;)
        acc = acc * value + c_[d];
    return Scalar(acc);
}

} // namespace pfaffine
