#include "kvforge/tder.hpp"

#include <functional>

namespace kvf {

TDer tder_normalize(const Context& c, std::vector<LieElem> raw) {
    if ((int)raw.size() != c.n) throw std::invalid_argument("tder_normalize: wrong slot count");
    TDer r(c);
    for (int i = 0; i < c.n; ++i) {
        require_same_context(c, raw[i].ctx, "tder_normalize");
        LieElem a = std::move(raw[i]);
        Rat ci = a.coeff(Word::letter(i));
        if (!is_zero(ci)) a.add_term(Word::letter(i), -ci);
        r.slots[i] = std::move(a);
    }
    return r;
}

TDer TDer::make(const Context& c, std::vector<LieElem> raw) {
    return tder_normalize(c, std::move(raw));
}

TDer& TDer::operator+=(const TDer& b) {
    require_same_context(ctx, b.ctx, "TDer::+");
    for (int i = 0; i < ctx.n; ++i) slots[i] += b.slots[i];
    return *this;
}
TDer& TDer::operator-=(const TDer& b) {
    require_same_context(ctx, b.ctx, "TDer::-");
    for (int i = 0; i < ctx.n; ++i) slots[i] -= b.slots[i];
    return *this;
}

LieElem tder_apply(const TDer& u, const LieElem& a) {
    require_same_context(u.ctx, a.ctx, "tder_apply");
    auto& tab = LyndonTable::registry(u.ctx.n);
    std::map<Word, LieElem> memo;      // u(basis word)
    std::map<Word, LieElem> basis_val; // basis word as LieElem
    std::function<const LieElem&(const Word&)> bas = [&](const Word& w) -> const LieElem& {
        auto it = basis_val.find(w);
        if (it != basis_val.end()) return it->second;
        LieElem v(u.ctx);
        v.add_term(w, 1);
        return basis_val.emplace(w, std::move(v)).first->second;
    };
    std::function<const LieElem&(const Word&)> ev = [&](const Word& w) -> const LieElem& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        LieElem val(u.ctx);
        if (w.size() == 1) {
            val = bracket(LieElem::gen(u.ctx, w[0]), u.slots[w[0]]);
        } else {
            auto [p, q] = tab.factorize(w);
            val = bracket(ev(p), bas(q)) + bracket(bas(p), ev(q));
        }
        return memo.emplace(w, std::move(val)).first->second;
    };
    LieElem r(u.ctx);
    for (auto& [w, c] : a.c) r += c * ev(w);
    return r;
}

AssElem tder_apply(const TDer& u, const AssElem& a) {
    require_same_context(u.ctx, a.ctx, "tder_apply");
    // letter images [x_i, a_i], applied by the Leibniz rule position by position
    std::vector<AssElem> delta;
    for (int i = 0; i < u.ctx.n; ++i) {
        AssElem x = AssElem::gen(u.ctx, i);
        AssElem ai = lie_to_ass(u.slots[i]);
        delta.push_back(x * ai - ai * x);
    }
    AssElem r(u.ctx);
    for (auto& [w, c] : a.t)
        for (size_t k = 0; k < w.size(); ++k) {
            Word pre = w.prefix(k), post = w.suffix(k + 1);
            for (auto& [dw, dc] : delta[w[k]].t) r.add_term(pre.concat(dw).concat(post), c * dc);
        }
    return r;
}

CycElem tder_apply(const TDer& u, const CycElem& a) {
    return trace(tder_apply(u, a.representative()));
}

TDer tder_bracket(const TDer& u, const TDer& v) {
    require_same_context(u.ctx, v.ctx, "tder_bracket");
    std::vector<LieElem> slots;
    for (int k = 0; k < u.ctx.n; ++k)
        slots.push_back(bracket(u.slots[k], v.slots[k]) + tder_apply(u, v.slots[k]) -
                        tder_apply(v, u.slots[k]));
    return tder_normalize(u.ctx, std::move(slots));
}

SpecialCheck is_special(const TDer& u) {
    LieElem s(u.ctx);
    for (int i = 0; i < u.ctx.n; ++i) s += LieElem::gen(u.ctx, i);
    LieElem img = tder_apply(u, s);
    if (img.is_zero()) return {true, 0};
    return {false, img.min_degree()};
}

TDer tder_blowup(const TDer& u, int slot, int inner_arity) {
    const int m = u.ctx.n, n = inner_arity;
    if (slot < 1 || slot > m) throw std::invalid_argument("tder_blowup: slot out of range");
    Context tc(m + n - 1, u.ctx.max_degree, u.ctx.offset0);
    LieElem zero_inner = LieElem::zero(Context(n, u.ctx.max_degree, u.ctx.offset0));
    std::vector<LieElem> slots;
    for (int j = 1; j <= m; ++j) {
        LieElem s = compose_graded(u.slots[j - 1], slot, zero_inner);
        if (j == slot)
            for (int k = 0; k < n; ++k) slots.push_back(s);
        else
            slots.push_back(std::move(s));
    }
    return tder_normalize(tc, std::move(slots));
}

TDer tder_embed(const TDer& v, int slot, int outer_arity) {
    const int m = outer_arity, n = v.ctx.n;
    if (slot < 1 || slot > m) throw std::invalid_argument("tder_embed: slot out of range");
    Context tc(m + n - 1, v.ctx.max_degree, v.ctx.offset0);
    std::vector<LieElem> images;
    for (int k = 0; k < n; ++k) images.push_back(LieElem::gen(tc, slot - 1 + k));
    std::vector<LieElem> slots(tc.n, LieElem::zero(tc));
    for (int k = 0; k < n; ++k) slots[slot - 1 + k] = substitute(v.slots[k], images);
    return tder_normalize(tc, std::move(slots));
}

TDer tder_compose(const TDer& u, int slot, const TDer& v) {
    if (u.ctx.max_degree != v.ctx.max_degree || u.ctx.offset0 != v.ctx.offset0)
        throw std::invalid_argument("tder_compose: incompatible contexts");
    TDer r = tder_blowup(u, slot, v.ctx.n);
    r += tder_embed(v, slot, u.ctx.n);
    return r;
}

TDer tder_perm(const Perm& sigma, const TDer& u) {
    const int base = u.ctx.letter_base();
    if ((int)sigma.img.size() != u.ctx.n || sigma.lo != base)
        throw std::invalid_argument("tder_perm: arity mismatch");
    std::vector<LieElem> slots;
    for (int k = 0; k < u.ctx.n; ++k) slots.push_back(perm_act(sigma, u.slots[sigma(k + base) - base]));
    return tder_normalize(u.ctx, std::move(slots));
}

CycElem divergence(const TDer& u) {
    AssElem acc(u.ctx);
    for (int i = 0; i < u.ctx.n; ++i) {
        AssElem ai = lie_to_ass(u.slots[i]);
        acc += partial_derivative(ai, i) * AssElem::gen(u.ctx, i);
    }
    return trace(acc);
}

namespace {

LieElem compose_entry(const LieElem& f, int i, const LieElem& g) { return compose_graded(f, i, g); }
CycElem compose_entry(const CycElem& f, int i, const CycElem& g) { return compose_graded(f, i, g); }
TDer compose_entry(const TDer& f, int i, const TDer& g) { return tder_compose(f, i, g); }

template <typename T>
T face_impl(const T& x, int i, const T& e2) {
    const int n = x.ctx.n;
    if (i < 0 || i > n + 1) throw std::invalid_argument("cosimplicial_face: index out of range");
    if (i == 0) return compose_entry(e2, 2, x);
    if (i == n + 1) return compose_entry(e2, 1, x);
    return compose_entry(x, i, e2);
}

} // namespace

LieElem cosimplicial_face(const LieElem& a, int i) {
    return face_impl(a, i, LieElem::zero(Context(2, a.ctx.max_degree, a.ctx.offset0)));
}
CycElem cosimplicial_face(const CycElem& a, int i) {
    return face_impl(a, i, CycElem::zero(Context(2, a.ctx.max_degree, a.ctx.offset0)));
}
TDer cosimplicial_face(const TDer& u, int i) {
    return face_impl(u, i, TDer::zero(Context(2, u.ctx.max_degree, u.ctx.offset0)));
}

namespace {
template <typename T>
T d_impl(const T& x) {
    T r = cosimplicial_face(x, 0);
    for (int i = 1; i <= x.ctx.n + 1; ++i) {
        T f = cosimplicial_face(x, i);
        if (i % 2 == 1)
            r -= f;
        else
            r += f;
    }
    return r;
}
} // namespace

LieElem cosimplicial_d(const LieElem& a) { return d_impl(a); }
CycElem cosimplicial_d(const CycElem& a) { return d_impl(a); }
TDer cosimplicial_d(const TDer& u) { return d_impl(u); }

TDer with_offset(const TDer& u, bool offset0) {
    Context tc(u.ctx.n, u.ctx.max_degree, offset0);
    TDer r(tc);
    for (int i = 0; i < tc.n; ++i) {
        LieElem s(tc);
        s.c = u.slots[i].c;
        r.slots[i] = std::move(s);
    }
    return r;
}

TDer moperad_compose0(const TDer& x, const TDer& y) {
    if (!x.ctx.offset0 || !y.ctx.offset0)
        throw std::invalid_argument("moperad_compose0: both arguments must be shifted");
    if (x.ctx.max_degree != y.ctx.max_degree)
        throw std::invalid_argument("moperad_compose0: context mismatch");
    // composition at the frozen letter is ordinary composition at the first
    // slot after forgetting the shift
    TDer r = tder_compose(with_offset(x, false), 1, with_offset(y, false));
    return with_offset(r, true);
}

} // namespace kvf
