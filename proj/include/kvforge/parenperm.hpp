#pragma once

#include "kvforge/perm.hpp"

#include <memory>
#include <string>

namespace kvf {

// Fully parenthesized permutation: a planar binary tree whose leaves carry a
// permutation of {1..n}, or of {0..n} with the 0 leaf leftmost (frozen kind).
struct ParenPerm {
    struct Node {
        int label = -1; // leaf label, -1 for internal
        std::unique_ptr<Node> l, r;
        bool is_leaf() const { return !l; }
        std::unique_ptr<Node> clone() const {
            auto c = std::make_unique<Node>();
            c->label = label;
            if (l) {
                c->l = l->clone();
                c->r = r->clone();
            }
            return c;
        }
    };

    std::unique_ptr<Node> root;
    bool frozen = false; // leftmost leaf labeled 0

    ParenPerm() = default;
    ParenPerm(const ParenPerm& o) : root(o.root ? o.root->clone() : nullptr), frozen(o.frozen) {}
    ParenPerm(ParenPerm&&) = default;
    ParenPerm& operator=(const ParenPerm& o) {
        root = o.root ? o.root->clone() : nullptr;
        frozen = o.frozen;
        return *this;
    }
    ParenPerm& operator=(ParenPerm&&) = default;

    int arity() const;                   // number of moving labels
    Perm underlying_perm() const;        // forgets parentheses
    std::string str() const;
    bool operator==(const ParenPerm& o) const { return str() == o.str(); }

    static ParenPerm parse(const std::string& s); // e.g. "0(1(23))", "(1(32))"
    static ParenPerm single(int label, bool frozen);

    // validity: labels form the right bijection, 0 leftmost when frozen
    void validate() const;
};

// replace the leaf labeled `slot` of w by w', shifting labels as in the
// underlying block-insertion of permutations
ParenPerm tree_insert(const ParenPerm& w, int slot, const ParenPerm& wp);

// frozen composition: replace the 0 leaf of w by all of w'
ParenPerm tree_insert0(const ParenPerm& w, const ParenPerm& wp);

} // namespace kvf
