#ifndef PFAFFINE_FORMULAS_HPP
#define PFAFFINE_FORMULAS_HPP

#include "pfaffine/combinatorics.hpp"
#include "pfaffine/forms.hpp"

namespace pfaffine {

inline constexpr int kDefaultMaxN = 4;

/// Pf F~[-1] from the defining permutation sum, with F~_{i,j}[-1] = F_{i,-j}[-1].
/// Enumerates perfect matchings of [-n;n] with ascending pairs (absorbing the
/// 2^n intra-pair swaps, which leave each summand invariant by skew-symmetry)
/// and sums all n! pair orderings, dividing by n!. Result in HC normal form.
UPoly pfaffian_definitional(int n, int budget_n = kDefaultMaxN);

/// The partition-indexed expansion of Ω[-1]^n:
///   Σ_l Σ_{a,b: 2l<=a+b<=n} 2^{n-2l} n!/(n-a-b)!
///     (Σ_{α⊢a, l(α)=l} Θ~[-α]/Πm_i!) (-Ψ)^{a+b-2l}
///     ((Ξ[-1]-Ψad_τ)^{n-a-b}·1) (Σ_{β⊢b, l(β)=l} Θ[-β]/Πm'_i!).
Form omega_partition_expansion(int n);

/// Orientation of the submatrix Pfaffians over a subset I of {-n..-1}:
/// MinusPlus uses entries F_{-i,i'}[-α_k] (rows -I, columns +I), PlusMinus
/// uses F_{i,-i'}[-β_k].
enum class PfOrientation { MinusPlus, PlusMinus };

/// (1/2^l l!) Σ_{σ in S_{2l}} sgn(σ) F_{±i_{σ(1)},∓i_{σ(2)}}[-parts_1] ...
/// I must be ascending with |I| = 2·length(parts).
UPoly sub_pfaffian(const std::vector<int>& I, const Partition& parts, PfOrientation o);

/// Column determinant of the operator submatrix Φ_{IJ}[-1], applied to 1:
/// Σ_σ sgn(σ) Φ_{i_{σ(1)},j_1} ... Φ_{i_{σ(l)},j_l} · 1, where
/// Φ_{i,j} = (left multiplication by F_{i,j}[-1]) + δ_{ij} ad_τ.
UPoly column_det_phi(const std::vector<int>& I, const std::vector<int>& J);

/// The coefficient-level expansion of Pf F~[-1] as a signed sum over subset
/// frames (J, I_1, J_1, J_2, I_2) of {-n..-1} with submatrix Pfaffians and
/// column determinants. Equal to pfaffian_definitional(n).
UPoly pfaffian_subset_expansion(int n);

enum class ThetaKind { Theta, ThetaTilde };

/// Subset expansion of Θ~[-α] (resp. Θ[-β]):
///   Θ~[-α] = 2^l l! Σ_I e_{-i_1}...e_{-i_{2l}} Pf Φ_{-I+I}[-α],
///   Θ[-β]  = 2^l l! Σ_I e_{i_1}...e_{i_{2l}}  Pf Φ_{+I-I}[-β].
Form theta_pfaffian_expansion(const Partition& parts, ThetaKind kind, int n);

} // namespace pfaffine

#endif
