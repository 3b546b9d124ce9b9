#pragma once

#include "kvforge/context.hpp"
#include "kvforge/perm.hpp"
#include "kvforge/rational.hpp"
#include "kvforge/word.hpp"

#include <map>
#include <optional>
#include <vector>

namespace kvf {

// Element of the degree-truncated free associative algebra K<<x_1..x_n>>.
// Sparse map from words to nonzero coefficients; words longer than
// ctx.max_degree are discarded on insertion.
struct AssElem {
    Context ctx;
    std::map<Word, Rat> t;

    AssElem() = default;
    explicit AssElem(const Context& c) : ctx(c) {}

    static AssElem zero(const Context& c) { return AssElem(c); }
    static AssElem constant(const Context& c, const Rat& v) {
        AssElem r(c);
        r.add_term(Word{}, v);
        return r;
    }
    static AssElem one(const Context& c) { return constant(c, 1); }
    static AssElem gen(const Context& c, int i) {
        if (i < 0 || i >= c.n) throw std::invalid_argument("AssElem::gen: letter out of range");
        AssElem r(c);
        r.add_term(Word::letter(i), 1);
        return r;
    }

    bool is_zero() const { return t.empty(); }
    void add_term(const Word& w, const Rat& v) {
        if ((int)w.size() > ctx.max_degree || is_zero(v)) return;
        auto it = t.find(w);
        if (it == t.end()) {
            t.emplace(w, v);
        } else {
            it->second += v;
            if (kvf::is_zero(it->second)) t.erase(it);
        }
    }
    Rat coeff(const Word& w) const {
        auto it = t.find(w);
        return it == t.end() ? Rat(0) : it->second;
    }
    int min_degree() const { // 0 for constants; max_degree+1 when zero
        return t.empty() ? ctx.max_degree + 1 : (int)t.begin()->first.size();
    }
    AssElem degree_part(int d) const {
        AssElem r(ctx);
        for (auto& [w, c] : t)
            if ((int)w.size() == d) r.t.emplace(w, c);
        return r;
    }

    AssElem& operator+=(const AssElem& b) {
        require_same_context(ctx, b.ctx, "AssElem::+");
        for (auto& [w, c] : b.t) add_term(w, c);
        return *this;
    }
    AssElem& operator-=(const AssElem& b) {
        require_same_context(ctx, b.ctx, "AssElem::-");
        for (auto& [w, c] : b.t) add_term(w, -c);
        return *this;
    }
    friend AssElem operator+(AssElem a, const AssElem& b) { return a += b; }
    friend AssElem operator-(AssElem a, const AssElem& b) { return a -= b; }
    friend AssElem operator*(const Rat& s, const AssElem& a) {
        AssElem r(a.ctx);
        if (kvf::is_zero(s)) return r;
        for (auto& [w, c] : a.t) r.t.emplace(w, s * c);
        return r;
    }
    friend AssElem operator-(const AssElem& a) { return Rat(-1) * a; }

    friend AssElem operator*(const AssElem& a, const AssElem& b) {
        require_same_context(a.ctx, b.ctx, "AssElem::*");
        AssElem r(a.ctx);
        for (auto& [wa, ca] : a.t) {
            if ((int)wa.size() > a.ctx.max_degree) continue;
            for (auto& [wb, cb] : b.t) {
                if ((int)(wa.size() + wb.size()) > a.ctx.max_degree) continue;
                r.add_term(wa.concat(wb), ca * cb);
            }
        }
        return r;
    }

    bool operator==(const AssElem& b) const { return ctx == b.ctx && t == b.t; }
};

// exp of an element with zero constant term
inline AssElem ass_exp(const AssElem& a) {
    if (!kvf::is_zero(a.coeff(Word{})))
        throw std::domain_error("ass_exp: nonzero constant term");
    AssElem r = AssElem::one(a.ctx);
    AssElem pow = AssElem::one(a.ctx);
    Rat fact(1);
    for (int k = 1; k <= a.ctx.max_degree; ++k) {
        pow = pow * a;
        if (pow.is_zero()) break;
        fact *= k;
        r += (Rat(1) / fact) * pow;
    }
    return r;
}

// log of an element with constant term 1
inline AssElem ass_log(const AssElem& g) {
    if (g.coeff(Word{}) != Rat(1))
        throw std::domain_error("ass_log: constant term is not 1");
    AssElem u = g;
    u.t.erase(Word{});
    AssElem r = AssElem::zero(g.ctx);
    AssElem pow = AssElem::one(g.ctx);
    for (int k = 1; k <= g.ctx.max_degree; ++k) {
        pow = pow * u;
        if (pow.is_zero()) break;
        Rat s = frac(k % 2 == 1 ? 1 : -1, k);
        r += s * pow;
    }
    return r;
}

// inverse of an element with nonzero constant term
inline AssElem ass_inverse(const AssElem& g) {
    Rat c0 = g.coeff(Word{});
    if (kvf::is_zero(c0)) throw std::domain_error("ass_inverse: zero constant term");
    AssElem u = (Rat(1) / c0) * g; // 1 + nilpotent
    u.t.erase(Word{});
    AssElem r = AssElem::one(g.ctx);
    AssElem pow = AssElem::one(g.ctx);
    for (int k = 1; k <= g.ctx.max_degree; ++k) {
        pow = pow * u;
        if (pow.is_zero()) break;
        r += (k % 2 == 1 ? Rat(-1) : Rat(1)) * pow;
    }
    return (Rat(1) / c0) * r;
}

// words ending in x_i, with the last letter removed
inline AssElem partial_derivative(const AssElem& a, int i) {
    if (i < 0 || i >= a.ctx.n) throw std::invalid_argument("partial_derivative: letter out of range");
    AssElem r(a.ctx);
    for (auto& [w, c] : a.t) {
        if (w.empty() || w[w.size() - 1] != (uint8_t)i) continue;
        r.add_term(w.prefix(w.size() - 1), c);
    }
    return r;
}

// left-bracketing (Dynkin) map: w_1..w_d -> [..[[w_1,w_2],w_3]..,w_d]
inline AssElem dynkin(const AssElem& a) {
    AssElem r(a.ctx);
    for (auto& [w, c] : a.t) {
        if (w.empty()) continue;
        AssElem br(a.ctx);
        br.add_term(Word::letter(w[0]), 1);
        for (size_t k = 1; k < w.size(); ++k) {
            AssElem x = AssElem::gen(a.ctx, w[k]);
            br = br * x - x * br;
        }
        r += c * br;
    }
    return r;
}

// algebra homomorphism determined by letter images
inline AssElem ass_substitute(const AssElem& a, const std::vector<AssElem>& images) {
    if ((int)images.size() != a.ctx.n)
        throw std::invalid_argument("ass_substitute: need one image per letter");
    const Context& tc = images.empty() ? a.ctx : images[0].ctx;
    for (auto& im : images) require_same_context(tc, im.ctx, "ass_substitute");
    AssElem r(tc);
    for (auto& [w, c] : a.t) {
        AssElem prod = AssElem::constant(tc, c);
        for (size_t k = 0; k < w.size() && !prod.is_zero(); ++k) prod = prod * images[w[k]];
        r += prod;
    }
    return r;
}

// letters permuted: x_j -> x_{sigma^{-1}(j)} (right action)
inline AssElem perm_act(const Perm& sigma, const AssElem& a) {
    if ((int)sigma.img.size() != a.ctx.n || sigma.lo != a.ctx.letter_base())
        throw std::invalid_argument("perm_act(ass): arity mismatch");
    Perm inv = sigma.inverse();
    const int base = a.ctx.letter_base();
    AssElem r(a.ctx);
    for (auto& [w, c] : a.t) {
        Word v = w;
        for (auto& letter : v.a) letter = (uint8_t)(inv((int)letter + base) - base);
        r.add_term(v, c);
    }
    return r;
}

} // namespace kvf
