#include "kvforge/parenperm.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace kvf {

namespace {

void collect_leaves(const ParenPerm::Node* n, std::vector<int>& out) {
    if (!n) return;
    if (n->is_leaf()) {
        out.push_back(n->label);
        return;
    }
    collect_leaves(n->l.get(), out);
    collect_leaves(n->r.get(), out);
}

void print_node(const ParenPerm::Node* n, std::string& s) {
    if (n->is_leaf()) {
        s += std::to_string(n->label);
        return;
    }
    s += '(';
    print_node(n->l.get(), s);
    print_node(n->r.get(), s);
    s += ')';
}

} // namespace

int ParenPerm::arity() const {
    std::vector<int> leaves;
    collect_leaves(root.get(), leaves);
    return (int)leaves.size() - (frozen ? 1 : 0);
}

Perm ParenPerm::underlying_perm() const {
    std::vector<int> leaves;
    collect_leaves(root.get(), leaves);
    return Perm(std::move(leaves), frozen ? 0 : 1);
}

std::string ParenPerm::str() const {
    std::string s;
    if (root) print_node(root.get(), s);
    // strip the outermost parentheses for readability, matching "0(12)" style
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool outer = true;
        for (size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') depth++;
            if (s[i] == ')') depth--;
            if (depth == 0) { outer = false; break; }
        }
        if (outer) s = s.substr(1, s.size() - 2);
    }
    return s;
}

void ParenPerm::validate() const {
    if (!root) throw std::invalid_argument("ParenPerm: empty tree");
    std::vector<int> leaves;
    collect_leaves(root.get(), leaves);
    if (frozen) {
        if (leaves.empty() || leaves[0] != 0)
            throw std::invalid_argument("ParenPerm: frozen tree must have leftmost leaf 0");
    }
    std::vector<int> sorted = leaves;
    std::sort(sorted.begin(), sorted.end());
    const int lo = frozen ? 0 : 1;
    for (size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != (int)k + lo)
            throw std::invalid_argument("ParenPerm: leaf labels are not a permutation");
}

ParenPerm ParenPerm::single(int label, bool frozen) {
    ParenPerm p;
    p.frozen = frozen;
    p.root = std::make_unique<Node>();
    p.root->label = label;
    return p;
}

namespace {

std::unique_ptr<ParenPerm::Node> parse_node(const std::string& s, size_t& i) {
    if (i >= s.size()) throw std::invalid_argument("ParenPerm::parse: unexpected end");
    if (s[i] == '(') {
        ++i;
        std::vector<std::unique_ptr<ParenPerm::Node>> parts;
        while (i < s.size() && s[i] != ')') parts.push_back(parse_node(s, i));
        if (i >= s.size()) throw std::invalid_argument("ParenPerm::parse: missing ')'");
        ++i;
        if (parts.size() < 2) throw std::invalid_argument("ParenPerm::parse: group needs >= 2 entries");
        // left-associate juxtaposition inside a group; fully parenthesized
        // inputs have exactly two entries per group
        auto node = std::move(parts[0]);
        for (size_t k = 1; k < parts.size(); ++k) {
            auto parent = std::make_unique<ParenPerm::Node>();
            parent->l = std::move(node);
            parent->r = std::move(parts[k]);
            node = std::move(parent);
        }
        return node;
    }
    if (!isdigit((unsigned char)s[i])) throw std::invalid_argument("ParenPerm::parse: expected digit");
    auto leaf = std::make_unique<ParenPerm::Node>();
    leaf->label = s[i] - '0';
    ++i;
    return leaf;
}

} // namespace

ParenPerm ParenPerm::parse(const std::string& s) {
    std::string padded = "(" + s + ")";
    size_t i = 0;
    ParenPerm p;
    p.root = parse_node(padded, i);
    if (i != padded.size()) throw std::invalid_argument("ParenPerm::parse: trailing input");
    std::vector<int> leaves;
    collect_leaves(p.root.get(), leaves);
    p.frozen = std::find(leaves.begin(), leaves.end(), 0) != leaves.end();
    p.validate();
    return p;
}

namespace {

void relabel(ParenPerm::Node* n, int slot, int shift_from, int shift_by) {
    (void)slot;
    if (n->is_leaf()) {
        if (n->label >= shift_from) n->label += shift_by;
        return;
    }
    relabel(n->l.get(), slot, shift_from, shift_by);
    relabel(n->r.get(), slot, shift_from, shift_by);
}

// replace the unique leaf labeled `slot` by `graft`; returns success
bool graft_at(std::unique_ptr<ParenPerm::Node>& n, int slot, std::unique_ptr<ParenPerm::Node>& graft) {
    if (n->is_leaf()) {
        if (n->label != slot) return false;
        n = std::move(graft);
        return true;
    }
    return graft_at(n->l, slot, graft) || graft_at(n->r, slot, graft);
}

} // namespace

ParenPerm tree_insert(const ParenPerm& w, int slot, const ParenPerm& wp) {
    if (wp.frozen) throw std::invalid_argument("tree_insert: inner tree must be unfrozen");
    const int m = w.arity(), n = wp.arity();
    if (slot < 1 || slot > m) throw std::invalid_argument("tree_insert: invalid slot");
    ParenPerm out = w;
    ParenPerm inner = wp;
    // labels of w above the slot shift by n-1, labels of w' shift by slot-1
    relabel(out.root.get(), slot, slot + 1, n - 1);
    relabel(inner.root.get(), slot, 1, slot - 1);
    if (!graft_at(out.root, slot, inner.root))
        throw std::invalid_argument("tree_insert: slot not found");
    out.validate();
    return out;
}

ParenPerm tree_insert0(const ParenPerm& w, const ParenPerm& wp) {
    if (!w.frozen || !wp.frozen)
        throw std::invalid_argument("tree_insert0: both trees must carry the frozen leaf 0");
    const int n = wp.arity();
    ParenPerm out = w;
    ParenPerm inner = wp;
    relabel(out.root.get(), 0, 1, n); // moving labels of w shift by n
    if (!graft_at(out.root, 0, inner.root))
        throw std::invalid_argument("tree_insert0: frozen leaf not found");
    out.validate();
    return out;
}

} // namespace kvf
