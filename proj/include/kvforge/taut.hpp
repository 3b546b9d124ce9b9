#pragma once

#include "kvforge/tder.hpp"

namespace kvf {

// Tangential automorphism: tuple of group-like conjugators (f_1..f_n), acting
// on generators by x_i -> f_i^{-1} x_i f_i. Canonical representative: log f_i
// has zero x_i coefficient.
struct TAut {
    Context ctx;
    std::vector<AssElem> f;

    TAut() = default;
    explicit TAut(const Context& c) : ctx(c), f(c.n, AssElem::one(c)) {}

    static TAut identity(const Context& c) { return TAut(c); }
    static TAut make(const Context& c, std::vector<AssElem> conjugators); // normalizes

    bool is_identity() const {
        for (auto& g : f)
            if (!(g == AssElem::one(ctx))) return false;
        return true;
    }
    bool operator==(const TAut& b) const { return ctx == b.ctx && f == b.f; }

    // each conjugator group-like (log primitive in every degree)
    void validate() const;
};

// left-multiply each conjugator by e^{-c x_i} to clear the linear self-term
TAut taut_normalize(const Context& c, std::vector<AssElem> conjugators);

// the action rho(F) on each flavor of element
LieElem taut_apply(const TAut& F, const LieElem& a);
AssElem taut_apply(const TAut& F, const AssElem& a);
CycElem taut_apply(const TAut& F, const CycElem& a);
std::vector<LieElem> taut_apply_many(const TAut& F, const std::vector<LieElem>& as);

// group law (F.G)_i = f_i (rho(F) g_i); rho(F.G) = rho(F) rho(G)
TAut taut_mul(const TAut& F, const TAut& G);
TAut taut_inverse(const TAut& F);

// exponential of a tangential derivation and its inverse
TAut taut_exp(const TDer& u);
struct LogExtractionError : std::domain_error {
    int degree;
    explicit LogExtractionError(int d)
        : std::domain_error("taut_log: action is not tangential at degree " + std::to_string(d)),
          degree(d) {}
};
TDer taut_log(const TAut& F);

// F^{B_1,...,B_m}: slot k of F acts on the block sum over B_k; blocks are
// disjoint sets of target letters (1-based), letters outside get conjugator 1
TAut taut_blocks(const TAut& F, const std::vector<std::vector<int>>& blocks, int target_arity);

// operadic composition F o_i G = (F o_i 1)(1 o_i G)
TAut taut_compose(const TAut& F, int slot, const TAut& G);

TAut taut_perm(const Perm& sigma, const TAut& F);

// rho(F)(x_1+...+x_n) == x_1+...+x_n
bool taut_is_special(const TAut& F);

// J(e^u) = sum_k (u.)^k j(u) / (k+1)!
CycElem jacobian(const TAut& F);

// group cosimplicial coboundary dF = (F o_2 F)(F o_1 F)^{-1}
TAut taut_coboundary(const TAut& F);

// power F^t with rational t (exp of t*log F)
TAut taut_power(const TAut& F, const Rat& t);

} // namespace kvf
