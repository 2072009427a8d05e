#ifndef PFAFFINE_COMBINATORICS_HPP
#define PFAFFINE_COMBINATORICS_HPP

#include <map>
#include <vector>

#include "pfaffine/rational.hpp"

namespace pfaffine {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (weight 0, length 0) is a valid value.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p); // validates

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    /// part value -> multiplicity
    std::map<int, int> multiplicities() const;
    /// prod_i m_i! over the multiplicities
    Rat multiplicity_factorial() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
};

/// Ordered tuple of positive integers.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p); // validates

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
};

/// All partitions of a with exactly l parts, in reverse-lexicographic order.
/// (0,0) yields the empty partition only; infeasible inputs yield an empty list.
std::vector<Partition> partitions_of(int a, int l);

/// All compositions of a with exactly l parts, in lexicographic order.
std::vector<Composition> compositions_of(int a, int l);

/// m! / ((m-a)! m_1! m_2! ...) for a partition of weight a <= m.
Rat partition_power_coeff(const Partition& alpha, int m);

/// C(abar, m) = m!/(m-a)! * prod_s a_s / (a_1 + ... + a_s), weight a <= m.
Rat composition_power_coeff(const Composition& abar, int m);

/// Sum over distinct orderings (a_{i_1},...,a_{i_l}) of the parts of alpha of
/// prod_s 1/(a_{i_1} + ... + a_{i_s}), evaluated by enumeration.
Rat prefix_reciprocal_sum(const Partition& alpha);

/// The closed form 1/(k_1! a_1^{k_1} ... k_r! a_r^{k_r}) of the same quantity,
/// where k_i is the multiplicity of the distinct part a_i.
Rat prefix_reciprocal_closed(const Partition& alpha);

/// Sign of the permutation that sorts the concatenation of `strings` into
/// ascending order. The concatenation must be a permutation of `target`.
int sgn_concat(const std::vector<std::vector<int>>& strings, const std::vector<int>& target);

/// sum_{alpha |- a, l(alpha)=l} l!/(m_1! m_2! ...)  ==  C(a-1, l-1)
bool binomial_partition_identity(int a, int l);

/// sum_{a+b=p, a,b>=1} C(a-1, l-1) C(b-1, l-1)  ==  C(p-1, 2l-1)
bool vandermonde_identity(int p, int l);

} // namespace pfaffine

#endif
