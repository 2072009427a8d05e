#include "pfaffine/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pfaffine {

Partition::Partition(std::vector<int> p) : parts(std::move(p))
{
    for (size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (k > 0 && parts[k] > parts[k - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::weight() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::map<int, int> Partition::multiplicities() const
{
    std::map<int, int> m;
    for (int p : parts)
        ++m[p];
    return m;
}

Rat Partition::multiplicity_factorial() const
{
    Rat f = 1;
    for (auto& [part, mult] : multiplicities())
        f *= factorial(mult);
    return f;
}

Composition::Composition(std::vector<int> p) : parts(std::move(p))
{
    for (int x : parts)
        if (x <= 0)
            throw std::invalid_argument("Composition: parts must be positive");
}

int Composition::weight() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

namespace {

// First part runs from large to small, so the output is reverse-lexicographic.
void rec_partitions(int a, int l, int maxpart, std::vector<int>& stack,
                    std::vector<Partition>& out)
{
    if (l == 0) {
        if (a == 0) {
            Partition p;
            p.parts = stack;
            out.push_back(std::move(p));
        }
        return;
    }
    // need l parts in [1, maxpart] summing to a
    int hi = std::min(maxpart, a - (l - 1));
    int lo = std::max(1, (a + l - 1) / l); // ceil(a/l), smallest feasible leading part
    for (int p = hi; p >= lo; --p) {
        stack.push_back(p);
        rec_partitions(a - p, l - 1, p, stack, out);
        stack.pop_back();
    }
}

void rec_compositions(int a, int l, std::vector<int>& stack, std::vector<Composition>& out)
{
    if (l == 0) {
        if (a == 0) {
            Composition c;
            c.parts = stack;
            out.push_back(std::move(c));
        }
        return;
    }
    for (int p = 1; p <= a - (l - 1); ++p) {
        stack.push_back(p);
        rec_compositions(a - p, l - 1, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int a, int l)
{
    if (a < 0 || l < 0)
        throw std::invalid_argument("partitions_of: negative argument");
    std::vector<Partition> out;
    std::vector<int> stack;
    rec_partitions(a, l, a, stack, out);
    return out;
}

std::vector<Composition> compositions_of(int a, int l)
{
    if (a < 0 || l < 0)
        throw std::invalid_argument("compositions_of: negative argument");
    std::vector<Composition> out;
    std::vector<int> stack;
    rec_compositions(a, l, stack, out);
    return out;
}

Rat partition_power_coeff(const Partition& alpha, int m)
{
    const int a = alpha.weight();
    if (a > m)
        throw std::invalid_argument("partition_power_coeff: weight exceeds m");
    return factorial(m) / (factorial(m - a) * alpha.multiplicity_factorial());
}

Rat composition_power_coeff(const Composition& abar, int m)
{
    const int a = abar.weight();
    if (a > m)
        throw std::invalid_argument("composition_power_coeff: weight exceeds m");
    Rat c = factorial(m) / factorial(m - a);
    long prefix = 0;
    for (int part : abar.parts) {
        prefix += part;
        c *= Rat(part, prefix);
    }
    return c;
}

Rat prefix_reciprocal_sum(const Partition& alpha)
{
    if (alpha.parts.empty())
        throw std::invalid_argument("prefix_reciprocal_sum: empty partition");
    std::vector<int> seq = alpha.parts;
    std::sort(seq.begin(), seq.end());
    Rat total = 0;
    do { // next_permutation over the sorted multiset visits each distinct ordering once
        Rat term = 1;
        long prefix = 0;
        for (int part : seq) {
            prefix += part;
            term /= prefix;
        }
        total += term;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return total;
}

Rat prefix_reciprocal_closed(const Partition& alpha)
{
    if (alpha.parts.empty())
        throw std::invalid_argument("prefix_reciprocal_closed: empty partition");
    Rat denom = 1;
    for (auto& [part, mult] : alpha.multiplicities()) {
        denom *= factorial(mult);
        Rat pw = 1;
        for (int k = 0; k < mult; ++k)
            pw *= part;
        denom *= pw;
    }
    return 1 / denom;
}

int sgn_concat(const std::vector<std::vector<int>>& strings, const std::vector<int>& target)
{
    std::vector<int> seq;
    for (auto& s : strings)
        seq.insert(seq.end(), s.begin(), s.end());
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> want = target;
    std::sort(want.begin(), want.end());
    if (sorted != want || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("sgn_concat: concatenation is not a permutation of target");
    long inv = 0;
    for (size_t p = 0; p < seq.size(); ++p)
        for (size_t q = p + 1; q < seq.size(); ++q)
            if (seq[p] > seq[q])
                ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

bool binomial_partition_identity(int a, int l)
{
    if (a < 1 || l < 1)
        throw std::invalid_argument("binomial_partition_identity: arguments must be >= 1");
    Rat lhs = 0;
    for (const auto& alpha : partitions_of(a, l))
        lhs += factorial(l) / alpha.multiplicity_factorial();
    return lhs == binomial(a - 1, l - 1);
}

bool vandermonde_identity(int p, int l)
{
    if (p < 1 || l < 1)
        throw std::invalid_argument("vandermonde_identity: arguments must be >= 1");
    Rat lhs = 0;
    for (int a = 1; a < p; ++a)
        lhs += binomial(a - 1, l - 1) * binomial(p - a - 1, l - 1);
    return lhs == binomial(p - 1, 2 * l - 1);
}

} // namespace pfaffine
