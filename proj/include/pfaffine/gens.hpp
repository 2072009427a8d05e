#ifndef PFAFFINE_GENS_HPP
#define PFAFFINE_GENS_HPP

#include <cstdint>
#include <vector>

namespace pfaffine {

/// One word letter of U(o_hat ⊕ Cτ): either F_{i,j}[r] or τ.
///
/// F letters are always stored as the canonical representative under the
/// symmetry F_{i,j} = -F_{-j,-i}, i.e. the lexicographically smaller of
/// (i,j) and (-j,-i). F_{i,-i} is identically zero and never stored.
/// τ is encoded as i == j == 0.
struct Gen {
    int16_t i = 0;
    int16_t j = 0;
    int32_t r = 0;

    bool is_tau() const { return i == 0; }
    bool is_cartan() const { return i != 0 && i == j; }
    bool is_lowering() const { return i != 0 && i > j; }
    bool is_raising() const { return i != 0 && i < j; }

    static Gen tau() { return Gen{}; }
    /// Wrap an already-canonical index triple (asserted in debug builds).
    static Gen F(int i, int j, int r);

    friend bool operator==(const Gen& a, const Gen& b)
    {
        return a.i == b.i && a.j == b.j && (a.i == 0 || a.r == b.r);
    }
    friend bool operator!=(const Gen& a, const Gen& b) { return !(a == b); }
};

/// Result of canonicalizing F_{i,j}[r]: sign 0 means the generator is zero
/// (j == -i); otherwise input = sign * canonical.
struct CanonF {
    int sign = 0;
    Gen g;
};

CanonF canonicalize(int i, int j, int r);

/// Named total orders on generators used for PBW normal ordering.
///   HC:   Cartan letters, then lowering (i>j), then raising (i<j), then τ;
///         within a class by (r,i,j). Canonical equality tests use this one.
///   Mode: letters with r<0, then r>=0, then τ; within a class by (r,i,j).
enum class Order { HC, Mode };

bool gen_less(const Gen& a, const Gen& b, Order ord);

using Word = std::vector<Gen>;

/// Fixed total order on words for term maps: graded, then lexicographic by
/// the HC generator order. Deterministic and independent of the rewrite
/// order in use, so polys normalized under either order can share the type.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const;
};

} // namespace pfaffine

#endif
