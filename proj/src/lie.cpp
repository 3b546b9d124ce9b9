#include "kvforge/lie.hpp"

#include <functional>

namespace kvf {

std::vector<BasisEntry> lyndon_basis(const Context& ctx, int degree) {
    if (degree < 1 || degree > ctx.max_degree)
        throw std::invalid_argument("lyndon_basis: degree out of range");
    auto& tab = LyndonTable::registry(ctx.n);
    std::vector<BasisEntry> out;
    for (auto& w : tab.words(degree)) {
        BasisEntry e;
        e.word = w;
        if (w.size() > 1) {
            auto [u, v] = tab.factorize(w);
            e.left = u;
            e.right = v;
        }
        out.push_back(std::move(e));
    }
    return out;
}

LieElem bracket(const LieElem& a, const LieElem& b) {
    require_same_context(a.ctx, b.ctx, "bracket");
    auto& tab = LyndonTable::registry(a.ctx.n);
    LieElem r(a.ctx);
    for (auto& [p, cp] : a.c)
        for (auto& [q, cq] : b.c) {
            if ((int)(p.size() + q.size()) > a.ctx.max_degree) continue;
            if (p == q) continue;
            for (auto& [w, cw] : tab.bracket_basis(p, q, a.ctx.max_degree))
                r.add_term(w, cp * cq * cw);
        }
    return r;
}

AssElem lie_to_ass(const LieElem& a) {
    auto& tab = LyndonTable::registry(a.ctx.n);
    AssElem r(a.ctx);
    for (auto& [w, c] : a.c)
        for (auto& [v, cv] : tab.expansion(w)) r.add_term(v, c * cv);
    return r;
}

PeelResult ass_to_lie(const AssElem& a) {
    auto& tab = LyndonTable::registry(a.ctx.n);
    PeelResult res{LieElem(a.ctx), std::nullopt};
    for (int d = 1; d <= a.ctx.max_degree; ++d) {
        std::map<Word, Rat> part;
        for (auto& [w, c] : a.t)
            if ((int)w.size() == d) part.emplace(w, c);
        while (!part.empty()) {
            auto [w, c] = *part.begin();
            if (!w.is_lyndon()) {
                res.failed_degree = d;
                return res;
            }
            res.value.add_term(w, c);
            for (auto& [v, cv] : tab.expansion(w)) {
                auto it = part.find(v);
                Rat nv = (it == part.end() ? Rat(0) : it->second) - c * cv;
                if (it != part.end()) part.erase(it);
                if (!is_zero(nv)) part.emplace(v, nv);
            }
        }
    }
    if (!kvf::is_zero(a.coeff(Word{}))) res.failed_degree = 0;
    return res;
}

std::optional<int> first_non_lie_degree(const AssElem& a) {
    if (!kvf::is_zero(a.coeff(Word{}))) return 0;
    for (int d = 1; d <= a.ctx.max_degree; ++d) {
        AssElem part = a.degree_part(d);
        if (part.is_zero()) continue;
        if (!(dynkin(part) == Rat(d) * part)) return d;
    }
    return std::nullopt;
}

AssElem exp_grouplike(const LieElem& a) { return ass_exp(lie_to_ass(a)); }

LieElem log_primitive(const AssElem& g) {
    AssElem l = ass_log(g);
    if (auto bad = first_non_lie_degree(l)) throw NonPrimitiveError(*bad);
    PeelResult r = ass_to_lie(l);
    if (r.failed_degree) throw NonPrimitiveError(*r.failed_degree);
    return r.value;
}

LieElem substitute(const LieElem& f, const std::vector<LieElem>& images) {
    if ((int)images.size() != f.ctx.n)
        throw std::invalid_argument("substitute: need one image per letter");
    const Context tc = images.empty() ? f.ctx : images[0].ctx;
    for (auto& im : images) require_same_context(tc, im.ctx, "substitute");

    // every letter occurring in f must map to something of high enough
    // minimal degree for the result to be exact through tc.max_degree
    int min_image_degree = tc.max_degree + 1;
    for (auto& [w, c] : f.c)
        for (size_t k = 0; k < w.size(); ++k)
            min_image_degree = std::min(min_image_degree, images[w[k]].min_degree());
    if ((long)(f.ctx.max_degree + 1) * min_image_degree <= tc.max_degree)
        throw std::domain_error("substitute: truncation insufficiency");

    auto& tab = LyndonTable::registry(f.ctx.n);
    std::map<Word, LieElem> memo;
    std::function<const LieElem&(const Word&)> ev = [&](const Word& w) -> const LieElem& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        LieElem val(tc);
        if (w.size() == 1) {
            val = images[w[0]];
        } else {
            auto [u, v] = tab.factorize(w);
            val = bracket(ev(u), ev(v));
        }
        return memo.emplace(w, std::move(val)).first->second;
    };
    LieElem r(tc);
    for (auto& [w, c] : f.c) r += c * ev(w);
    return r;
}

namespace {
// order-preserving letter relabeling keeps Lyndon words and factorizations
LieElem shift_letters(const LieElem& a, const Context& tc, int offset) {
    LieElem r(tc);
    for (auto& [w, c] : a.c) {
        Word v = w;
        for (auto& letter : v.a) letter = (uint8_t)(letter + offset);
        r.c.emplace(v, c);
    }
    return r;
}
} // namespace

LieElem compose_graded(const LieElem& f, int slot, const LieElem& g) {
    const int m = f.ctx.n, n = g.ctx.n;
    if (slot < 1 || slot > m) throw std::invalid_argument("compose_graded: slot out of range");
    if (f.ctx.max_degree != g.ctx.max_degree || f.ctx.offset0 != g.ctx.offset0)
        throw std::invalid_argument("compose_graded: incompatible contexts");
    Context tc(m + n - 1, f.ctx.max_degree, f.ctx.offset0);
    const int i = slot - 1; // 0-based slot letter
    std::vector<LieElem> images;
    for (int j = 0; j < m; ++j) {
        if (j < i) {
            images.push_back(LieElem::gen(tc, j));
        } else if (j == i) {
            LieElem s(tc);
            for (int k = 0; k < n; ++k) s += LieElem::gen(tc, i + k);
            images.push_back(std::move(s));
        } else {
            images.push_back(LieElem::gen(tc, j + n - 1));
        }
    }
    return substitute(f, images) + shift_letters(g, tc, i);
}

AssElem compose_graded(const AssElem& f, int slot, const AssElem& g) {
    const int m = f.ctx.n, n = g.ctx.n;
    if (slot < 1 || slot > m) throw std::invalid_argument("compose_graded: slot out of range");
    if (f.ctx.max_degree != g.ctx.max_degree || f.ctx.offset0 != g.ctx.offset0)
        throw std::invalid_argument("compose_graded: incompatible contexts");
    Context tc(m + n - 1, f.ctx.max_degree, f.ctx.offset0);
    const int i = slot - 1;
    std::vector<AssElem> images;
    for (int j = 0; j < m; ++j) {
        if (j < i) {
            images.push_back(AssElem::gen(tc, j));
        } else if (j == i) {
            AssElem s(tc);
            for (int k = 0; k < n; ++k) s += AssElem::gen(tc, i + k);
            images.push_back(std::move(s));
        } else {
            images.push_back(AssElem::gen(tc, j + n - 1));
        }
    }
    AssElem r = ass_substitute(f, images);
    for (auto& [w, c] : g.t) {
        Word v = w;
        for (auto& letter : v.a) letter = (uint8_t)(letter + i);
        r.add_term(v, c);
    }
    return r;
}

LieElem perm_act(const Perm& sigma, const LieElem& a) {
    if ((int)sigma.img.size() != a.ctx.n || sigma.lo != a.ctx.letter_base())
        throw std::invalid_argument("perm_act(lie): arity mismatch");
    Perm inv = sigma.inverse();
    const int base = a.ctx.letter_base();
    std::vector<LieElem> images;
    for (int j = 0; j < a.ctx.n; ++j)
        images.push_back(LieElem::gen(a.ctx, inv(j + base) - base));
    return substitute(a, images);
}

LieElem bch(const LieElem& a, const LieElem& b) {
    require_same_context(a.ctx, b.ctx, "bch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return log_primitive(exp_grouplike(a) * exp_grouplike(b));
}

const std::vector<std::pair<BasisEntry, Rat>>& bch_universal(int N) {
    static std::mutex mu;
    static std::map<int, std::vector<std::pair<BasisEntry, Rat>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    Context c2(2, N);
    LieElem series = bch(LieElem::gen(c2, 0), LieElem::gen(c2, 1));
    std::vector<std::pair<BasisEntry, Rat>> out;
    for (int d = 1; d <= N; ++d)
        for (auto& e : lyndon_basis(c2, d)) {
            Rat coeff = series.coeff(e.word);
            if (!is_zero(coeff)) out.emplace_back(e, coeff);
        }
    return cache.emplace(N, std::move(out)).first->second;
}

} // namespace kvf
