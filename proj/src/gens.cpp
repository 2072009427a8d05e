#include "pfaffine/gens.hpp"

#include <cassert>
#include <stdexcept>
#include <tuple>

namespace pfaffine {

Gen Gen::F(int i, int j, int r)
{
    assert(i != 0 && j != 0 && j != -i);
    assert(std::make_pair(i, j) <= std::make_pair(-j, -i));
    Gen g;
    g.i = static_cast<int16_t>(i);
    g.j = static_cast<int16_t>(j);
    g.r = r;
    return g;
}

CanonF canonicalize(int i, int j, int r)
{
    if (i == 0 || j == 0)
        throw std::invalid_argument("canonicalize: index 0 is not allowed");
    if (j == -i)
        return CanonF{0, Gen{}}; // F_{i,-i} = -F_{i,-i} = 0
    if (std::make_pair(i, j) <= std::make_pair(-j, -i))
        return CanonF{1, Gen::F(i, j, r)};
    return CanonF{-1, Gen::F(-j, -i, r)};
}

namespace {

inline int hc_class(const Gen& g)
{
    if (g.is_tau())
        return 3;
    if (g.is_cartan())
        return 0;
    return g.is_lowering() ? 1 : 2;
}

inline int mode_class(const Gen& g)
{
    if (g.is_tau())
        return 2;
    return g.r < 0 ? 0 : 1;
}

} // namespace

bool gen_less(const Gen& a, const Gen& b, Order ord)
{
    const int ca = (ord == Order::HC) ? hc_class(a) : mode_class(a);
    const int cb = (ord == Order::HC) ? hc_class(b) : mode_class(b);
    if (ca != cb)
        return ca < cb;
    if (a.is_tau())
        return false; // τ == τ
    return std::tie(a.r, a.i, a.j) < std::tie(b.r, b.i, b.j);
}

bool WordLess::operator()(const Word& a, const Word& b) const
{
    if (a.size() != b.size())
        return a.size() < b.size();
    for (size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k])
            return gen_less(a[k], b[k], Order::HC);
    }
    return false;
}

} // namespace pfaffine
