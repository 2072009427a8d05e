#include "pfaffine/upoly.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace pfaffine {

UPoly UPoly::from_gen(const Gen& g, const Scalar& c)
{
    return from_word(Word{g}, c);
}

UPoly UPoly::from_word(const Word& w, const Scalar& c)
{
    UPoly p;
    p.add_term(w, c);
    return p;
}

void UPoly::add_term(const Word& w, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            t_.erase(it);
    }
}

UPoly& UPoly::operator+=(const UPoly& o)
{
    for (auto& [w, c] : o.t_)
        add_term(w, c);
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o)
{
    for (auto& [w, c] : o.t_)
        add_term(w, -c);
    return *this;
}

UPoly& UPoly::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    TermMap out;
    for (auto& [w, x] : t_) {
        Scalar y = x * c;
        if (!y.is_zero())
            out.emplace(w, std::move(y));
    }
    t_ = std::move(out);
    return *this;
}

UPoly UPoly::operator-() const
{
    UPoly p;
    for (auto& [w, c] : t_)
        p.t_.emplace(w, -c);
    return p;
}

bool UPoly::tau_free() const
{
    for (auto& [w, c] : t_)
        for (const Gen& g : w)
            if (g.is_tau())
                return false;
    return true;
}

bool UPoly::k_free() const
{
    for (auto& [w, c] : t_)
        if (!c.is_rational())
            return false;
    return true;
}

UPoly commutator(const Gen& a, const Gen& b)
{
    UPoly out;
    if (a.is_tau() && b.is_tau())
        return out;
    if (a.is_tau()) { // [τ, F[r]] = -r F[r-1]
        if (b.r != 0)
            out.add_term(Word{Gen::F(b.i, b.j, b.r - 1)}, Scalar(Rat(-b.r)));
        return out;
    }
    if (b.is_tau()) { // [F[r], τ] = r F[r-1]
        if (a.r != 0)
            out.add_term(Word{Gen::F(a.i, a.j, a.r - 1)}, Scalar(Rat(a.r)));
        return out;
    }

    // [F_{i,j}[r], F_{k,l}[s]] = δ_{jk} F_{i,l}[r+s] + δ_{il} F_{-j,-k}[r+s]
    //   - δ_{j,-l} F_{i,-k}[r+s] - δ_{i,-k} F_{-j,l}[r+s]
    //   + r δ_{r,-s} (δ_{jk} δ_{il} - δ_{i,-k} δ_{j,-l}) K
    const int i = a.i, j = a.j, k = b.i, l = b.j;
    const int rs = a.r + b.r;
    auto emit = [&out, rs](int p, int q, int sign) {
        CanonF c = canonicalize(p, q, rs);
        if (c.sign != 0)
            out.add_term(Word{c.g}, Scalar(Rat(sign * c.sign)));
    };
    if (j == k)
        emit(i, l, 1);
    if (i == l)
        emit(-j, -k, 1);
    if (j == -l)
        emit(i, -k, -1);
    if (i == -k)
        emit(-j, l, -1);
    if (a.r + b.r == 0) {
        const long form = (j == k && i == l ? 1 : 0) - (i == -k && j == -l ? 1 : 0);
        if (form != 0 && a.r != 0)
            out.add_term(Word{}, Scalar::K(1, Rat(a.r) * form));
    }
    return out;
}

namespace {

// Index of the adjacent inversion to reduce, or -1 if the word is sorted.
int find_inversion(const Word& w, Order ord, RewriteScan scan)
{
    const int m = static_cast<int>(w.size()) - 1;
    if (scan == RewriteScan::Leftmost) {
        for (int k = 0; k < m; ++k)
            if (gen_less(w[k + 1], w[k], ord))
                return k;
    } else {
        for (int k = m - 1; k >= 0; --k)
            if (gen_less(w[k + 1], w[k], ord))
                return k;
    }
    return -1;
}

} // namespace

UPoly normal_form(const UPoly& p, Order ord, RewriteScan scan)
{
    UPoly::TermMap work(p.terms().begin(), p.terms().end());
    UPoly out;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Word& w = node.key();
        const Scalar& c = node.mapped();
        if (c.is_zero())
            continue;
        const int pos = find_inversion(w, ord, scan);
        if (pos < 0) {
            out.add_term(w, c);
            continue;
        }
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        work[swapped] += c;
        const UPoly br = commutator(w[pos], w[pos + 1]);
        for (auto& [bw, bc] : br.terms()) {
            Word nw;
            nw.reserve(w.size() - 2 + bw.size());
            nw.insert(nw.end(), w.begin(), w.begin() + pos);
            nw.insert(nw.end(), bw.begin(), bw.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            work[nw] += c * bc;
        }
    }
    return out;
}

UPoly mul(const UPoly& a, const UPoly& b, Order ord)
{
    UPoly prod;
    for (auto& [wa, ca] : a.terms()) {
        for (auto& [wb, cb] : b.terms()) {
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            prod.add_term(w, ca * cb);
        }
    }
    return normal_form(prod, ord);
}

UPoly power(const UPoly& p, int k, Order ord)
{
    if (k < 0)
        throw std::invalid_argument("power: negative exponent");
    UPoly acc = UPoly::one();
    for (int t = 0; t < k; ++t)
        acc = mul(acc, p, ord);
    return acc;
}

UPoly commutator(const UPoly& a, const UPoly& b, Order ord)
{
    return mul(a, b, ord) - mul(b, a, ord);
}

UPoly ad_tau(const UPoly& p, Order ord)
{
    UPoly out;
    for (auto& [w, c] : p.terms()) {
        for (size_t k = 0; k < w.size(); ++k) {
            if (w[k].is_tau() || w[k].r == 0)
                continue;
            Word nw = w;
            nw[k] = Gen::F(w[k].i, w[k].j, w[k].r - 1);
            out.add_term(nw, c * Rat(-w[k].r));
        }
    }
    return normal_form(out, ord);
}

std::vector<long> weight(const Word& w, int n)
{
    std::vector<long> wt(static_cast<size_t>(n), 0);
    auto eps = [&wt, n](int idx, long sign) {
        const int k = std::abs(idx);
        if (k > n)
            throw std::invalid_argument("weight: index out of range for n");
        wt[static_cast<size_t>(k) - 1] += (idx > 0) ? sign : -sign;
    };
    for (const Gen& g : w) {
        if (g.is_tau())
            continue;
        eps(g.i, 1);
        eps(g.j, -1);
    }
    return wt;
}

bool is_h_invariant(const UPoly& p, int n)
{
    for (auto& [w, c] : p.terms()) {
        for (long v : weight(w, n))
            if (v != 0)
                return false;
    }
    return true;
}

UPoly specialize_K(const UPoly& p, const Rat& c)
{
    UPoly out;
    for (auto& [w, x] : p.terms())
        out.add_term(w, x.subst_K(c));
    return out;
}

} // namespace pfaffine
