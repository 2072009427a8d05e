#include "pfaffine/vacuum.hpp"

#include "pfaffine/formulas.hpp"

namespace pfaffine {

std::vector<Gen> canonical_generators(int n, int r)
{
    std::vector<Gen> gens;
    for (int i = -n; i <= n; ++i) {
        if (i == 0)
            continue;
        for (int j = -n; j <= n; ++j) {
            if (j == 0 || j == -i)
                continue;
            CanonF c = canonicalize(i, j, r);
            if (c.sign == 1 && c.g.i == i && c.g.j == j)
                gens.push_back(c.g);
        }
    }
    return gens;
}

UPoly vacuum_reduce(const UPoly& p, int n)
{
    const UPoly q = normal_form(p, Order::Mode);
    UPoly kept;
    for (auto& [w, c] : q.terms()) {
        if (!w.empty() && !w.back().is_tau() && w.back().r >= 0)
            continue;
        kept.add_term(w, c);
    }
    return specialize_K(kept, Rat(-dual_coxeter(n)));
}

std::vector<CentralityResidue> centrality_residues(const UPoly& p, int n, int max_mode)
{
    std::vector<CentralityResidue> out;
    for (int s = 0; s <= max_mode; ++s) {
        for (const Gen& g : canonical_generators(n, s)) {
            UPoly prod = mul(UPoly::from_gen(g), p, Order::Mode);
            out.push_back({g, vacuum_reduce(prod, n)});
        }
    }
    return out;
}

bool centrality_check(int n, int max_mode, int budget_n)
{
    const UPoly pf = pfaffian_definitional(n, budget_n);
    for (const auto& res : centrality_residues(pf, n, max_mode))
        if (!res.residue.is_zero())
            return false;
    return true;
}

} // namespace pfaffine
