#pragma once

#include "kvforge/ass.hpp"
#include "kvforge/lyndon.hpp"

#include <optional>

namespace kvf {

// Element of the degree-truncated free Lie algebra in Lyndon coordinates:
// a sparse map from Lyndon words (standing for their standard bracketings)
// to coefficients.
struct LieElem {
    Context ctx;
    std::map<Word, Rat> c;

    LieElem() = default;
    explicit LieElem(const Context& cx) : ctx(cx) {}

    static LieElem zero(const Context& cx) { return LieElem(cx); }
    static LieElem gen(const Context& cx, int i) {
        if (i < 0 || i >= cx.n) throw std::invalid_argument("LieElem::gen: letter out of range");
        LieElem r(cx);
        r.c.emplace(Word::letter(i), 1);
        return r;
    }

    bool is_zero() const { return c.empty(); }
    void add_term(const Word& w, const Rat& v) {
        if ((int)w.size() > ctx.max_degree || kvf::is_zero(v)) return;
        auto it = c.find(w);
        if (it == c.end()) {
            c.emplace(w, v);
        } else {
            it->second += v;
            if (kvf::is_zero(it->second)) c.erase(it);
        }
    }
    Rat coeff(const Word& w) const {
        auto it = c.find(w);
        return it == c.end() ? Rat(0) : it->second;
    }
    int min_degree() const { return c.empty() ? ctx.max_degree + 1 : (int)c.begin()->first.size(); }
    LieElem degree_part(int d) const {
        LieElem r(ctx);
        for (auto& [w, v] : c)
            if ((int)w.size() == d) r.c.emplace(w, v);
        return r;
    }
    LieElem truncated(int d) const {
        LieElem r(ctx);
        for (auto& [w, v] : c)
            if ((int)w.size() <= d) r.c.emplace(w, v);
        return r;
    }

    LieElem& operator+=(const LieElem& b) {
        require_same_context(ctx, b.ctx, "LieElem::+");
        for (auto& [w, v] : b.c) add_term(w, v);
        return *this;
    }
    LieElem& operator-=(const LieElem& b) {
        require_same_context(ctx, b.ctx, "LieElem::-");
        for (auto& [w, v] : b.c) add_term(w, -v);
        return *this;
    }
    friend LieElem operator+(LieElem a, const LieElem& b) { return a += b; }
    friend LieElem operator-(LieElem a, const LieElem& b) { return a -= b; }
    friend LieElem operator*(const Rat& s, const LieElem& a) {
        LieElem r(a.ctx);
        if (kvf::is_zero(s)) return r;
        for (auto& [w, v] : a.c) r.c.emplace(w, s * v);
        return r;
    }
    friend LieElem operator-(const LieElem& a) { return Rat(-1) * a; }
    bool operator==(const LieElem& b) const { return ctx == b.ctx && c == b.c; }
};

// basis of lie_n per degree: Lyndon words with their standard factorization
struct BasisEntry {
    Word word;
    Word left, right; // empty for degree 1
};
std::vector<BasisEntry> lyndon_basis(const Context& ctx, int degree);

LieElem bracket(const LieElem& a, const LieElem& b);
AssElem lie_to_ass(const LieElem& a);

// Expand a (claimed) Lie element into Lyndon coordinates by triangular
// elimination; returns the first degree at which the input fails to be Lie.
struct PeelResult {
    LieElem value;
    std::optional<int> failed_degree;
};
PeelResult ass_to_lie(const AssElem& a);

// group-like exponential / primitive logarithm
AssElem exp_grouplike(const LieElem& a);
LieElem log_primitive(const AssElem& g); // throws NonPrimitiveError on failure

struct NonPrimitiveError : std::domain_error {
    int degree;
    explicit NonPrimitiveError(int d)
        : std::domain_error("log_primitive: input is not group-like, first failure in degree " +
                            std::to_string(d)),
          degree(d) {}
};

// Lie-ness of each homogeneous part via the Dynkin idempotent
std::optional<int> first_non_lie_degree(const AssElem& a);

// unique Lie-homomorphic extension of letter -> images[letter]
LieElem substitute(const LieElem& f, const std::vector<LieElem>& images);

// operadic partial composition: f(x_1,..,sum,..,x_{m+n-1}) + g(x_i,..)
LieElem compose_graded(const LieElem& f, int slot, const LieElem& g);
AssElem compose_graded(const AssElem& f, int slot, const AssElem& g);

LieElem perm_act(const Perm& sigma, const LieElem& a);

// truncated log(e^a e^b)
LieElem bch(const LieElem& a, const LieElem& b);

// Universal BCH coefficients over the degree <= N Lyndon basis of lie_2.
// Used to evaluate bch in any graded Lie algebra (e.g. tder).
const std::vector<std::pair<BasisEntry, Rat>>& bch_universal(int N);

// Evaluate a bracket monomial on two values of any Lie type T supporting
// bracket_of(T,T), addition and scalar multiplication.
template <typename T, typename BracketFn>
T eval_bracket_word(const BasisEntry& e, const T& x, const T& y, BracketFn&& br,
                    const std::map<Word, T>* memo_hint = nullptr);

} // namespace kvf
