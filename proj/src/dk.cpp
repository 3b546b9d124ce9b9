#include "kvforge/dk.hpp"

#include <functional>

namespace kvf {

TDer t_gen(const Context& c, int i, int j) {
    const int base = c.letter_base();
    if (i >= j) std::swap(i, j);
    if (i < base || j - base >= c.n)
        throw std::invalid_argument("t_gen: invalid indices");
    std::vector<LieElem> slots(c.n, LieElem::zero(c));
    slots[i - base] = LieElem::gen(c, j - base);
    slots[j - base] = LieElem::gen(c, i - base);
    return tder_normalize(c, std::move(slots));
}

TDer t_center(const Context& c) {
    const int base = c.letter_base();
    TDer r(c);
    for (int i = base; i < base + c.n; ++i)
        for (int j = i + 1; j < base + c.n; ++j) r += t_gen(c, i, j);
    return r;
}

TDer formal_to_tder(const Context& c, const FormalT& x) {
    TDer r(c);
    for (auto& [ij, coeff] : x) r += coeff * t_gen(c, ij.first, ij.second);
    return r;
}

namespace {
void formal_add(FormalT& x, int i, int j, const Rat& c) {
    if (i > j) std::swap(i, j);
    auto key = std::make_pair(i, j);
    auto it = x.find(key);
    if (it == x.end()) {
        x.emplace(key, c);
    } else {
        it->second += c;
        if (is_zero(it->second)) x.erase(it);
    }
}
} // namespace

// The case formula for t_{ij} o_alpha 0 with an arity-k insertion at slot
// alpha, plus the shift t_{kl} -> t_{(k+alpha-1)(l+alpha-1)} for 0 o_alpha.
// Display indices are 1-based here (plain algebras).
FormalT formal_t_compose(int m, const FormalT& a, int alpha, int k, const FormalT& b) {
    (void)m;
    FormalT out;
    for (auto& [ij, c] : a) {
        auto [i, j] = ij;
        if (alpha < i) {
            formal_add(out, i + k - 1, j + k - 1, c);
        } else if (alpha == i) {
            for (int beta = 1; beta <= k; ++beta) formal_add(out, i + beta - 1, j + k - 1, c);
        } else if (alpha < j) {
            formal_add(out, i, j + k - 1, c);
        } else if (alpha == j) {
            for (int beta = 1; beta <= k; ++beta) formal_add(out, i, j + beta - 1, c);
        } else {
            formal_add(out, i, j, c);
        }
    }
    for (auto& [kl, c] : b) formal_add(out, kl.first + alpha - 1, kl.second + alpha - 1, c);
    return out;
}

DKElem dk_gen(int arity, int i, int j, int max_degree, bool shifted) {
    Context c(shifted ? arity + 1 : arity, max_degree, shifted);
    DKElem e;
    e.rep = t_gen(c, i, j);
    e.formal = "t" + std::to_string(i) + "," + std::to_string(j);
    return e;
}

DKElem dk_compose(const DKElem& a, int alpha, const DKElem& b) {
    DKElem r;
    if (a.rep.ctx.offset0) {
        r.rep = alpha == 0 ? moperad_compose0(a.rep, b.rep) : moperad_compose(a.rep, alpha, b.rep);
    } else {
        r.rep = tder_compose(a.rep, alpha, b.rep);
    }
    r.formal = "(" + a.formal + " o_" + std::to_string(alpha) + " " + b.formal + ")";
    return r;
}

TDer eval_t_series(const LieElem& f, const std::vector<TDer>& args) {
    if ((int)args.size() != f.ctx.n)
        throw std::invalid_argument("eval_t_series: need one argument per letter");
    if (args.empty()) throw std::invalid_argument("eval_t_series: no arguments");
    const Context tc = args[0].ctx;
    for (auto& a : args) require_same_context(tc, a.ctx, "eval_t_series");
    int min_arg_degree = tc.max_degree + 1;
    for (auto& [w, c] : f.c)
        for (size_t k = 0; k < w.size(); ++k)
            min_arg_degree = std::min(min_arg_degree, args[w[k]].min_degree());
    if ((long)(f.ctx.max_degree + 1) * min_arg_degree <= tc.max_degree)
        throw std::domain_error("eval_t_series: truncation insufficiency");

    auto& tab = LyndonTable::registry(f.ctx.n);
    std::map<Word, TDer> memo;
    std::function<const TDer&(const Word&)> ev = [&](const Word& w) -> const TDer& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        TDer val(tc);
        if (w.size() == 1) {
            val = args[w[0]];
        } else {
            auto [p, q] = tab.factorize(w);
            val = tder_bracket(ev(p), ev(q));
        }
        return memo.emplace(w, std::move(val)).first->second;
    };
    TDer r(tc);
    for (auto& [w, c] : f.c) r += c * ev(w);
    return r;
}

TAut eval_t_series_grouplike(const LieElem& logf, const std::vector<TDer>& args) {
    return taut_exp(eval_t_series(logf, args));
}

TDer tder_bch(const TDer& a, const TDer& b) {
    require_same_context(a.ctx, b.ctx, "tder_bch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int N = a.ctx.max_degree;
    std::map<Word, TDer> memo;
    auto& tab = LyndonTable::registry(2);
    std::function<const TDer&(const Word&)> ev = [&](const Word& w) -> const TDer& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        TDer val(a.ctx);
        if (w.size() == 1) {
            val = w[0] == 0 ? a : b;
        } else {
            auto [p, q] = tab.factorize(w);
            val = tder_bracket(ev(p), ev(q));
        }
        return memo.emplace(w, std::move(val)).first->second;
    };
    TDer r(a.ctx);
    const int reach = std::min(a.min_degree(), b.min_degree());
    for (auto& [entry, coeff] : bch_universal(N)) {
        if ((long)entry.word.size() * reach > N) continue;
        r += coeff * ev(entry.word);
    }
    return r;
}

TDer kappa(const LieElem& a) {
    if (a.ctx.offset0) throw std::invalid_argument("kappa: input must be unshifted");
    Context tc(a.ctx.n + 1, a.ctx.max_degree, true);
    std::vector<TDer> args;
    for (int i = 1; i <= a.ctx.n; ++i) args.push_back(t_gen(tc, 0, i));
    return eval_t_series(a, args);
}

namespace {
LieElem shift_up(const LieElem& a, const Context& tc) {
    LieElem r(tc);
    for (auto& [w, c] : a.c) {
        Word v = w;
        for (auto& letter : v.a) letter = (uint8_t)(letter + 1);
        r.c.emplace(v, c);
    }
    return r;
}
} // namespace

TDer lambda_embed(const LieElem& a) {
    if (a.ctx.offset0) throw std::invalid_argument("lambda_embed: input must be unshifted");
    Context tc(a.ctx.n + 1, a.ctx.max_degree, true);
    TDer r(tc);
    r.slots[0] = shift_up(a, tc);
    return r;
}

TDer plus_embed(const TDer& u) {
    if (u.ctx.offset0) throw std::invalid_argument("plus_embed: input must be unshifted");
    Context tc(u.ctx.n + 1, u.ctx.max_degree, true);
    TDer r(tc);
    for (int i = 0; i < u.ctx.n; ++i) r.slots[i + 1] = shift_up(u.slots[i], tc);
    return r;
}

TDer iota(const LieElem& a, const TDer& u) {
    require_same_context(a.ctx, u.ctx, "iota");
    SpecialCheck sc = is_special(u);
    if (!sc.special)
        throw std::invalid_argument("iota: derivation is not special (degree " +
                                    std::to_string(sc.failed_degree) + ")");
    return kappa(a) + plus_embed(u);
}

TDer eta(const LieElem& a, const TDer& d) {
    require_same_context(a.ctx, d.ctx, "eta");
    return lambda_embed(a) + plus_embed(d);
}

namespace {
// strip letter 0, failing when it occurs
std::optional<LieElem> shift_down(const LieElem& a, const Context& tc) {
    LieElem r(tc);
    for (auto& [w, c] : a.c) {
        Word v = w;
        for (auto& letter : v.a) {
            if (letter == 0) return std::nullopt;
            letter = (uint8_t)(letter - 1);
        }
        r.c.emplace(v, c);
    }
    return r;
}
} // namespace

std::optional<std::pair<LieElem, TDer>> iota_decompose(const TDer& v) {
    if (!v.ctx.offset0) return std::nullopt;
    Context pc(v.ctx.n - 1, v.ctx.max_degree, false);
    auto a = shift_down(v.slots[0], pc);
    if (!a) return std::nullopt;
    TDer rest = v - kappa(*a);
    if (!rest.slots[0].is_zero()) return std::nullopt;
    TDer u(pc);
    for (int i = 1; i < v.ctx.n; ++i) {
        auto s = shift_down(rest.slots[i], pc);
        if (!s) return std::nullopt;
        u.slots[i - 1] = *s;
    }
    if (!is_special(u).special) return std::nullopt;
    return std::make_pair(*a, u);
}

std::optional<std::pair<LieElem, TDer>> eta_decompose(const TDer& v) {
    if (!v.ctx.offset0) return std::nullopt;
    Context pc(v.ctx.n - 1, v.ctx.max_degree, false);
    auto a = shift_down(v.slots[0], pc);
    if (!a) return std::nullopt;
    TDer u(pc);
    for (int i = 1; i < v.ctx.n; ++i) {
        auto s = shift_down(v.slots[i], pc);
        if (!s) return std::nullopt;
        u.slots[i - 1] = *s;
    }
    return std::make_pair(*a, u);
}

TDer moperad_compose(const TDer& shifted, int slot, const TDer& plain) {
    if (!shifted.ctx.offset0 || plain.ctx.offset0)
        throw std::invalid_argument("moperad_compose: expects (shifted, plain) arguments");
    if (slot < 1 || slot > shifted.ctx.n - 1)
        throw std::invalid_argument("moperad_compose: slot out of range");
    TDer r = tder_compose(with_offset(shifted, false), slot + 1, plain);
    return with_offset(r, true);
}

} // namespace kvf
