#pragma once

#include "kvforge/ass.hpp"

namespace kvf {

// Cyclic words: the quotient of the free associative algebra by commutators.
// Keys are canonical necklace representatives (lexicographically minimal
// rotations); the empty necklace carries the degree-0 part.
struct CycElem {
    Context ctx;
    std::map<Word, Rat> t;

    CycElem() = default;
    explicit CycElem(const Context& c) : ctx(c) {}
    static CycElem zero(const Context& c) { return CycElem(c); }

    bool is_zero() const { return t.empty(); }
    void add_term(const Word& w, const Rat& v) {
        if ((int)w.size() > ctx.max_degree || kvf::is_zero(v)) return;
        Word k = w.min_rotation();
        auto it = t.find(k);
        if (it == t.end()) {
            t.emplace(k, v);
        } else {
            it->second += v;
            if (kvf::is_zero(it->second)) t.erase(it);
        }
    }
    Rat coeff(const Word& w) const {
        auto it = t.find(w.min_rotation());
        return it == t.end() ? Rat(0) : it->second;
    }
    CycElem degree_part(int d) const {
        CycElem r(ctx);
        for (auto& [w, c] : t)
            if ((int)w.size() == d) r.t.emplace(w, c);
        return r;
    }
    int min_degree() const { return t.empty() ? ctx.max_degree + 1 : (int)t.begin()->first.size(); }

    CycElem& operator+=(const CycElem& b) {
        require_same_context(ctx, b.ctx, "CycElem::+");
        for (auto& [w, c] : b.t) add_term(w, c);
        return *this;
    }
    CycElem& operator-=(const CycElem& b) {
        require_same_context(ctx, b.ctx, "CycElem::-");
        for (auto& [w, c] : b.t) add_term(w, -c);
        return *this;
    }
    friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
    friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
    friend CycElem operator*(const Rat& s, const CycElem& a) {
        CycElem r(a.ctx);
        if (kvf::is_zero(s)) return r;
        for (auto& [w, c] : a.t) r.t.emplace(w, s * c);
        return r;
    }
    friend CycElem operator-(const CycElem& a) { return Rat(-1) * a; }
    bool operator==(const CycElem& b) const { return ctx == b.ctx && t == b.t; }

    // any associative representative (keys are themselves words)
    AssElem representative() const {
        AssElem r(ctx);
        for (auto& [w, c] : t) r.add_term(w, c);
        return r;
    }
};

inline CycElem trace(const AssElem& a) {
    CycElem r(a.ctx);
    for (auto& [w, c] : a.t) r.add_term(w, c);
    return r;
}

inline CycElem compose_graded(const CycElem& f, int slot, const CycElem& g) {
    // descends from the associative level; independent of representatives
    return trace(compose_graded(f.representative(), slot, g.representative()));
}

inline CycElem perm_act(const Perm& sigma, const CycElem& a) {
    return trace(perm_act(sigma, a.representative()));
}

} // namespace kvf
