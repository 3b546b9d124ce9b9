#pragma once

#include "kvforge/cyc.hpp"
#include "kvforge/lie.hpp"

#include <vector>

namespace kvf {

// Tangential derivation u of lie_n, encoded by the tuple (a_1..a_n) with
// u(x_i) = [x_i, a_i]. Stored in the canonical representative: the x_i
// coefficient of a_i is zero, which makes the divergence well defined.
struct TDer {
    Context ctx;
    std::vector<LieElem> slots;

    TDer() = default;
    explicit TDer(const Context& c) : ctx(c), slots(c.n, LieElem::zero(c)) {}

    static TDer zero(const Context& c) { return TDer(c); }
    static TDer make(const Context& c, std::vector<LieElem> raw); // normalizes

    bool is_zero() const {
        for (auto& s : slots)
            if (!s.is_zero()) return false;
        return true;
    }
    int min_degree() const {
        int d = ctx.max_degree + 1;
        for (auto& s : slots) d = std::min(d, s.min_degree());
        return d;
    }
    TDer degree_part(int d) const {
        TDer r(ctx);
        for (int i = 0; i < ctx.n; ++i) r.slots[i] = slots[i].degree_part(d);
        return r;
    }

    TDer& operator+=(const TDer& b);
    TDer& operator-=(const TDer& b);
    friend TDer operator+(TDer a, const TDer& b) { return a += b; }
    friend TDer operator-(TDer a, const TDer& b) { return a -= b; }
    friend TDer operator*(const Rat& s, const TDer& a) {
        TDer r(a.ctx);
        for (int i = 0; i < a.ctx.n; ++i) r.slots[i] = s * a.slots[i];
        return r;
    }
    friend TDer operator-(const TDer& a) { return Rat(-1) * a; }
    bool operator==(const TDer& b) const { return ctx == b.ctx && slots == b.slots; }
};

// strip the x_i coefficient from slot i; the action is unchanged
TDer tder_normalize(const Context& c, std::vector<LieElem> raw);

LieElem tder_apply(const TDer& u, const LieElem& a);
AssElem tder_apply(const TDer& u, const AssElem& a);
CycElem tder_apply(const TDer& u, const CycElem& a);

// ([u,v])_k = [a_k,b_k] + u(b_k) - v(a_k)
TDer tder_bracket(const TDer& u, const TDer& v);

// failing degree when not special (u(x_1+..+x_n) != 0)
struct SpecialCheck {
    bool special;
    int failed_degree; // meaningful when !special
};
SpecialCheck is_special(const TDer& u);

// operadic partial composition (slotwise substitution plus insertion)
TDer tder_compose(const TDer& u, int slot, const TDer& v);
// the two halves: u o_i 0 and 0 o_i v
TDer tder_blowup(const TDer& u, int slot, int inner_arity);
TDer tder_embed(const TDer& v, int slot, int outer_arity);

// u^sigma, the unique action compatible with the letter permutation
TDer tder_perm(const Perm& sigma, const TDer& u);

// j(u) = tr(sum_i d_i(a_i) x_i), on the canonical representative
CycElem divergence(const TDer& u);

// cosimplicial coface maps and differential
TDer cosimplicial_face(const TDer& u, int i);
TDer cosimplicial_d(const TDer& u);
LieElem cosimplicial_face(const LieElem& a, int i);
LieElem cosimplicial_d(const LieElem& a);
CycElem cosimplicial_face(const CycElem& a, int i);
CycElem cosimplicial_d(const CycElem& a);

// monoid composition along the frozen letter of shifted derivations
TDer moperad_compose0(const TDer& x, const TDer& y);

// reinterpret between shifted (letters 0..n) and plain (letters 1..n+1)
TDer with_offset(const TDer& u, bool offset0);

} // namespace kvf
