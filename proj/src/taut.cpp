#include "kvforge/taut.hpp"

#include <functional>

namespace kvf {

namespace {

// strip a leading x_i from every word that has one, drop the others
AssElem strip_leading(const AssElem& a, int i) {
    AssElem r(a.ctx);
    for (auto& [w, c] : a.t) {
        if (w.empty() || w[0] != (uint8_t)i) continue;
        r.add_term(w.suffix(1), c);
    }
    return r;
}

// Solve [x_i, z] = w for z in the free Lie algebra, w homogeneous of degree
// d+1 in the image of ad_{x_i}. The section z = sum_k phi^k(w) x_i^{k-1}
// (phi strips a leading x_i) hits a solution whenever one exists; the
// possible x_i^d kernel component is then removed so the result is Lie.
LieElem solve_ad_generator(const Context& ctx, int i, const AssElem& w, int d) {
    AssElem z(ctx);
    AssElem cur = strip_leading(w, i);
    Word xi_pow; // x_i^{k-1}
    for (int k = 1; !cur.is_zero() && k <= ctx.max_degree + 1; ++k) {
        for (auto& [v, c] : cur.t) z.add_term(v.concat(xi_pow), c);
        cur = strip_leading(cur, i);
        xi_pow = xi_pow.concat(Word::letter(i));
    }
    // remove the pure-power component (kernel of ad_{x_i})
    Word pure(std::vector<uint8_t>(d, (uint8_t)i));
    Rat cp = z.coeff(pure);
    if (!is_zero(cp)) z.add_term(pure, -cp);
    // verify: failure means w was not in the image
    AssElem xi = AssElem::gen(ctx, i);
    if (!(xi * z - z * xi == w)) throw LogExtractionError(d + 1);
    PeelResult pr = ass_to_lie(z);
    if (pr.failed_degree) throw LogExtractionError(d + 1);
    return pr.value;
}

} // namespace

TAut taut_normalize(const Context& c, std::vector<AssElem> conjugators) {
    if ((int)conjugators.size() != c.n) throw std::invalid_argument("taut_normalize: wrong slot count");
    TAut r(c);
    for (int i = 0; i < c.n; ++i) {
        require_same_context(c, conjugators[i].ctx, "taut_normalize");
        AssElem g = std::move(conjugators[i]);
        if (g.coeff(Word{}) != Rat(1))
            throw std::invalid_argument("taut_normalize: conjugator constant term must be 1");
        Rat ci = g.coeff(Word::letter(i)); // linear self-term of log g
        if (!is_zero(ci)) {
            AssElem corr = ass_exp((-ci) * AssElem::gen(c, i));
            g = corr * g;
        }
        r.f[i] = std::move(g);
    }
    return r;
}

TAut TAut::make(const Context& c, std::vector<AssElem> conjugators) {
    return taut_normalize(c, std::move(conjugators));
}

void TAut::validate() const {
    for (int i = 0; i < ctx.n; ++i) {
        AssElem l = ass_log(f[i]);
        if (auto bad = first_non_lie_degree(l))
            throw std::domain_error("TAut: conjugator " + std::to_string(i + 1) +
                                    " is not group-like at degree " + std::to_string(*bad));
    }
}

std::vector<LieElem> taut_apply_many(const TAut& F, const std::vector<LieElem>& as) {
    auto& tab = LyndonTable::registry(F.ctx.n);
    // letter images f_i^{-1} x_i f_i, shared memo across all inputs
    std::vector<LieElem> letter(F.ctx.n, LieElem(F.ctx));
    for (int i = 0; i < F.ctx.n; ++i) {
        AssElem img = ass_inverse(F.f[i]) * AssElem::gen(F.ctx, i) * F.f[i];
        PeelResult pr = ass_to_lie(img);
        if (pr.failed_degree)
            throw std::logic_error("taut_apply: conjugated generator failed to peel");
        letter[i] = std::move(pr.value);
    }
    std::map<Word, LieElem> memo;
    std::function<const LieElem&(const Word&)> ev = [&](const Word& w) -> const LieElem& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        LieElem val(F.ctx);
        if (w.size() == 1) {
            val = letter[w[0]];
        } else {
            auto [p, q] = tab.factorize(w);
            val = bracket(ev(p), ev(q));
        }
        return memo.emplace(w, std::move(val)).first->second;
    };
    std::vector<LieElem> out;
    for (auto& a : as) {
        require_same_context(F.ctx, a.ctx, "taut_apply");
        LieElem r(F.ctx);
        for (auto& [w, c] : a.c) r += c * ev(w);
        out.push_back(std::move(r));
    }
    return out;
}

LieElem taut_apply(const TAut& F, const LieElem& a) {
    return taut_apply_many(F, {a})[0];
}

AssElem taut_apply(const TAut& F, const AssElem& a) {
    require_same_context(F.ctx, a.ctx, "taut_apply");
    std::vector<AssElem> images;
    for (int i = 0; i < F.ctx.n; ++i)
        images.push_back(ass_inverse(F.f[i]) * AssElem::gen(F.ctx, i) * F.f[i]);
    return ass_substitute(a, images);
}

CycElem taut_apply(const TAut& F, const CycElem& a) {
    return trace(taut_apply(F, a.representative()));
}

TAut taut_mul(const TAut& F, const TAut& G) {
    require_same_context(F.ctx, G.ctx, "taut_mul");
    std::vector<LieElem> logs;
    for (int i = 0; i < F.ctx.n; ++i) logs.push_back(log_primitive(G.f[i]));
    std::vector<LieElem> moved = taut_apply_many(F, logs);
    std::vector<AssElem> slots;
    for (int i = 0; i < F.ctx.n; ++i) slots.push_back(F.f[i] * exp_grouplike(moved[i]));
    return taut_normalize(F.ctx, std::move(slots));
}

TAut taut_inverse(const TAut& F) {
    // the inverse automorphism on generators, by degreewise fixed point
    std::vector<LieElem> v;
    for (int i = 0; i < F.ctx.n; ++i) v.push_back(LieElem::gen(F.ctx, i));
    for (int pass = 0; pass < F.ctx.max_degree; ++pass) {
        std::vector<LieElem> img = taut_apply_many(F, v);
        for (int i = 0; i < F.ctx.n; ++i) v[i] = v[i] - (img[i] - LieElem::gen(F.ctx, i));
    }
    std::vector<AssElem> vh;
    for (auto& x : v) vh.push_back(lie_to_ass(x));
    std::vector<AssElem> slots;
    for (int i = 0; i < F.ctx.n; ++i) slots.push_back(ass_inverse(ass_substitute(F.f[i], vh)));
    return taut_normalize(F.ctx, std::move(slots));
}

namespace {

// The degree-N part of a conjugator moves the action only in degree N+1, so
// exp/log extraction runs one degree above the ambient truncation and the
// result is cut back down.
LieElem recontext(const LieElem& a, const Context& tc) {
    LieElem r(tc);
    for (auto& [w, c] : a.c)
        if ((int)w.size() <= tc.max_degree) r.c.emplace(w, c);
    return r;
}
AssElem recontext(const AssElem& a, const Context& tc) {
    AssElem r(tc);
    for (auto& [w, c] : a.t)
        if ((int)w.size() <= tc.max_degree) r.t.emplace(w, c);
    return r;
}

} // namespace

TAut taut_exp(const TDer& u0) {
    Context big(u0.ctx.n, u0.ctx.max_degree + 1, u0.ctx.offset0);
    TDer u(big);
    for (int i = 0; i < big.n; ++i) u.slots[i] = recontext(u0.slots[i], big);
    std::vector<AssElem> slots;
    for (int i = 0; i < big.n; ++i) {
        // y_i = e^u(x_i), then extract z with y_i = e^{-ad z}(x_i)
        LieElem y = LieElem::gen(big, i);
        LieElem term = LieElem::gen(big, i);
        Rat fact(1);
        for (int k = 1; k <= big.max_degree; ++k) {
            term = tder_apply(u, term);
            if (term.is_zero()) break;
            fact *= k;
            y += (Rat(1) / fact) * term;
        }
        LieElem z(big);
        for (int d = 1; d < big.max_degree; ++d) {
            LieElem approx = LieElem::gen(big, i);
            LieElem pw = LieElem::gen(big, i);
            Rat f2(1);
            for (int k = 1; k <= big.max_degree; ++k) {
                pw = -bracket(z, pw);
                if (pw.is_zero()) break;
                f2 *= k;
                approx += (Rat(1) / f2) * pw;
            }
            LieElem diff = (y - approx).degree_part(d + 1);
            if (diff.is_zero()) continue;
            z += solve_ad_generator(big, i, lie_to_ass(diff), d);
        }
        slots.push_back(exp_grouplike(recontext(z, u0.ctx)));
    }
    return taut_normalize(u0.ctx, std::move(slots));
}

TDer taut_log(const TAut& F) {
    Context big(F.ctx.n, F.ctx.max_degree + 1, F.ctx.offset0);
    TAut Fb(big);
    for (int i = 0; i < big.n; ++i) Fb.f[i] = recontext(F.f[i], big);
    std::vector<LieElem> gens;
    for (int i = 0; i < big.n; ++i) gens.push_back(LieElem::gen(big, i));
    std::vector<LieElem> target = taut_apply_many(Fb, gens);

    TDer u(big);
    for (int d = 1; d < big.max_degree; ++d) {
        for (int i = 0; i < big.n; ++i) {
            LieElem approx = gens[i];
            LieElem term = gens[i];
            Rat fact(1);
            for (int k = 1; k <= big.max_degree; ++k) {
                term = tder_apply(u, term);
                if (term.is_zero()) break;
                fact *= k;
                approx += (Rat(1) / fact) * term;
            }
            LieElem diff = (target[i] - approx).degree_part(d + 1);
            if (diff.is_zero()) continue;
            u.slots[i] += solve_ad_generator(big, i, lie_to_ass(diff), d);
        }
    }
    TDer out(F.ctx);
    for (int i = 0; i < F.ctx.n; ++i) out.slots[i] = recontext(u.slots[i], F.ctx);
    // the extraction must reproduce the conjugator tuple exactly
    TAut check = taut_exp(out);
    for (int i = 0; i < F.ctx.n; ++i)
        if (!(check.f[i] == F.f[i])) {
            AssElem diff = check.f[i] - F.f[i];
            throw LogExtractionError(diff.min_degree());
        }
    return out;
}

TAut taut_blocks(const TAut& F, const std::vector<std::vector<int>>& blocks, int target_arity) {
    if ((int)blocks.size() != F.ctx.n)
        throw std::invalid_argument("taut_blocks: need one block per slot");
    Context tc(target_arity, F.ctx.max_degree, F.ctx.offset0);
    std::vector<AssElem> images;
    for (auto& B : blocks) {
        AssElem s(tc);
        for (int letter : B) {
            if (letter < 1 || letter > target_arity)
                throw std::invalid_argument("taut_blocks: letter out of range");
            s += AssElem::gen(tc, letter - 1);
        }
        images.push_back(std::move(s));
    }
    std::vector<AssElem> slots(target_arity, AssElem::one(tc));
    for (int k = 0; k < F.ctx.n; ++k) {
        AssElem moved = ass_substitute(F.f[k], images);
        for (int letter : blocks[k]) slots[letter - 1] = moved;
    }
    return taut_normalize(tc, std::move(slots));
}

TAut taut_compose(const TAut& F, int slot, const TAut& G) {
    const int m = F.ctx.n, n = G.ctx.n;
    if (slot < 1 || slot > m) throw std::invalid_argument("taut_compose: slot out of range");
    if (F.ctx.max_degree != G.ctx.max_degree || F.ctx.offset0 != G.ctx.offset0)
        throw std::invalid_argument("taut_compose: incompatible contexts");
    const int total = m + n - 1;
    std::vector<std::vector<int>> outer;
    for (int j = 1; j <= m; ++j) {
        std::vector<int> B;
        if (j < slot) {
            B = {j};
        } else if (j == slot) {
            for (int k = 0; k < n; ++k) B.push_back(slot + k);
        } else {
            B = {j + n - 1};
        }
        outer.push_back(std::move(B));
    }
    std::vector<std::vector<int>> inner;
    for (int k = 0; k < n; ++k) inner.push_back({slot + k});
    return taut_mul(taut_blocks(F, outer, total), taut_blocks(G, inner, total));
}

TAut taut_perm(const Perm& sigma, const TAut& F) {
    const int base = F.ctx.letter_base();
    if ((int)sigma.img.size() != F.ctx.n || sigma.lo != base)
        throw std::invalid_argument("taut_perm: arity mismatch");
    std::vector<AssElem> slots;
    for (int k = 0; k < F.ctx.n; ++k) slots.push_back(perm_act(sigma, F.f[sigma(k + base) - base]));
    return taut_normalize(F.ctx, std::move(slots));
}

bool taut_is_special(const TAut& F) {
    AssElem s(F.ctx);
    for (int i = 0; i < F.ctx.n; ++i) s += AssElem::gen(F.ctx, i);
    return taut_apply(F, s) == s;
}

CycElem jacobian(const TAut& F) {
    TDer u = taut_log(F);
    CycElem c = divergence(u);
    CycElem r = CycElem::zero(F.ctx);
    Rat fact(1);
    for (int k = 0; k <= F.ctx.max_degree; ++k) {
        fact *= k + 1;
        r += (Rat(1) / fact) * c;
        c = tder_apply(u, c);
        if (c.is_zero()) break;
    }
    return r;
}

TAut taut_coboundary(const TAut& F) {
    if (F.ctx.n != 2) throw std::invalid_argument("taut_coboundary: arity 2 expected");
    return taut_mul(taut_compose(F, 2, F), taut_inverse(taut_compose(F, 1, F)));
}

TAut taut_power(const TAut& F, const Rat& t) {
    TDer u = taut_log(F);
    return taut_exp(t * u);
}

} // namespace kvf
