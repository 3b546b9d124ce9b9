#pragma once

#include "kvforge/taut.hpp"

#include <optional>
#include <string>

namespace kvf {

// Infinitesimal-braid generators realized as special derivations, and the
// embeddings that make shifted tangential derivations a module over them.
// A shifted element lives on letters 0..n (ctx.offset0, ctx.n = n+1).

// t^{ij}: x_j in slot i, x_i in slot j. Indices are display indices; index 0
// is allowed only in shifted contexts.
TDer t_gen(const Context& c, int i, int j);

// sum of all t^{ij}, the center of the arity-3 algebra and its relatives
TDer t_center(const Context& c);

// formal linear combination of t_{ij} symbols; the independent oracle for
// compositions of generators stays at this level
using FormalT = std::map<std::pair<int, int>, Rat>;
TDer formal_to_tder(const Context& c, const FormalT& x);
FormalT formal_t_compose(int m, const FormalT& a, int alpha, int k, const FormalT& b);

// a DK element carries its derivation image; equality is decided there
struct DKElem {
    TDer rep;
    std::string formal; // display only
    bool operator==(const DKElem& o) const { return rep == o.rep; }
};

DKElem dk_gen(int arity, int i, int j, int max_degree, bool shifted);
DKElem dk_compose(const DKElem& a, int alpha, const DKElem& b);

// Lie-homomorphic evaluation of f at derivation arguments, and the
// group-like variant
TDer eval_t_series(const LieElem& f, const std::vector<TDer>& args);
TAut eval_t_series_grouplike(const LieElem& logf, const std::vector<TDer>& args);

// BCH in the tangential-derivation Lie algebra
TDer tder_bch(const TDer& a, const TDer& b);

// kappa(x_i) = t^{0,i}, extended as a Lie homomorphism; slot 0 equals the input
TDer kappa(const LieElem& a);

// a placed in slot 0
TDer lambda_embed(const LieElem& a);

// u with a zero slot prepended (letters shift up by one)
TDer plus_embed(const TDer& u);

// iota(a,u) = kappa(a) + u^+  (requires special u); eta(a,d) = lambda(a) + d^+
TDer iota(const LieElem& a, const TDer& u);
TDer eta(const LieElem& a, const TDer& d);

// recover (a, u) with v = kappa(a) + u^+, if v has that shape
std::optional<std::pair<LieElem, TDer>> iota_decompose(const TDer& v);
// recover (a, d) with v = lambda(a) + d^+
std::optional<std::pair<LieElem, TDer>> eta_decompose(const TDer& v);

// right action of plain derivations on shifted ones at a moving slot i >= 1
TDer moperad_compose(const TDer& shifted, int slot, const TDer& plain);

} // namespace kvf
