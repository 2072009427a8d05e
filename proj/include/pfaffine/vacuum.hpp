#ifndef PFAFFINE_VACUUM_HPP
#define PFAFFINE_VACUUM_HPP

#include "pfaffine/upoly.hpp"

namespace pfaffine {

/// All canonical generators F_{i,j} of o_{2n} (one representative per
/// F_{i,j} = -F_{-j,-i} pair, F_{i,-i} omitted), at mode r.
std::vector<Gen> canonical_generators(int n, int r);

/// Dual Coxeter number of o_{2n} (type D_n).
inline long dual_coxeter(int n) { return 2L * n - 2; }

/// Image in the vacuum module at the critical level: normal form under the
/// Mode order, drop every word ending in a letter with mode r >= 0 (the left
/// ideal generated by g[t]), substitute K := -(2n-2).
UPoly vacuum_reduce(const UPoly& p, int n);

/// Residues vacuum_reduce(F_{i,j}[s] · p) for every canonical generator and
/// 0 <= s <= max_mode. All zero iff p is annihilated by g[t] at the
/// critical level, i.e. lies in the Feigin-Frenkel center.
struct CentralityResidue {
    Gen gen;
    UPoly residue;
};
std::vector<CentralityResidue> centrality_residues(const UPoly& p, int n, int max_mode);

/// Runs centrality_residues against the definitional Pfaffian.
bool centrality_check(int n, int max_mode, int budget_n = 4);

} // namespace pfaffine

#endif
