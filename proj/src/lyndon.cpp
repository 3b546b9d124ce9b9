#include "kvforge/lyndon.hpp"

#include <algorithm>

namespace kvf {

LyndonTable& LyndonTable::registry(int n) {
    static std::mutex mu;
    static std::map<int, LyndonTable*> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(n);
    if (it == tables.end()) it = tables.emplace(n, new LyndonTable(n)).first;
    return *it->second;
}

// Duval's algorithm, restricted to words of length exactly d.
const std::vector<Word>& LyndonTable::words(int d) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = words_.find(d);
    if (it != words_.end()) return it->second;

    std::vector<Word> out;
    std::vector<uint8_t> w{0};
    while (!w.empty()) {
        if ((int)w.size() == d) out.push_back(Word(w));
        // extend periodically to length d, then increment
        std::vector<uint8_t> t = w;
        while ((int)t.size() < d) t.push_back(t[t.size() - w.size()]);
        w = t;
        while (!w.empty() && w.back() == (uint8_t)(n_ - 1)) w.pop_back();
        if (!w.empty()) w.back()++;
    }
    std::sort(out.begin(), out.end());
    return words_.emplace(d, std::move(out)).first->second;
}

std::pair<Word, Word> LyndonTable::factorize(const Word& w) {
    // longest proper Lyndon suffix; both factors are Lyndon
    for (size_t k = 1; k < w.size(); ++k) {
        Word v = w.suffix(k);
        if (v.is_lyndon()) return {w.prefix(k), v};
    }
    throw std::logic_error("LyndonTable::factorize: not a Lyndon word of length >= 2");
}

const std::map<Word, Rat>& LyndonTable::expansion(const Word& w) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = exp_.find(w);
        if (it != exp_.end()) return it->second;
    }
    std::map<Word, Rat> r;
    if (w.size() == 1) {
        r.emplace(w, 1);
    } else {
        auto [u, v] = factorize(w);
        const auto& eu = expansion(u);
        const auto& ev = expansion(v);
        auto acc = [&r](const Word& k, const Rat& c) {
            auto it = r.find(k);
            if (it == r.end()) {
                r.emplace(k, c);
            } else {
                it->second += c;
                if (is_zero(it->second)) r.erase(it);
            }
        };
        for (auto& [a, ca] : eu)
            for (auto& [b, cb] : ev) {
                acc(a.concat(b), ca * cb);
                acc(b.concat(a), -(ca * cb));
            }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return exp_.emplace(w, std::move(r)).first->second;
}

namespace {
// triangular elimination: the expansion of a Lyndon bracketing is its word
// plus lexicographically larger words of the same degree
std::map<Word, Rat> peel_homogeneous(LyndonTable& tab, std::map<Word, Rat> a, bool* ok) {
    std::map<Word, Rat> out;
    *ok = true;
    while (!a.empty()) {
        auto [w, c] = *a.begin();
        if (!w.is_lyndon()) {
            *ok = false;
            return out;
        }
        out.emplace(w, c);
        for (auto& [v, cv] : tab.expansion(w)) {
            auto it = a.find(v);
            Rat nv = (it == a.end() ? Rat(0) : it->second) - c * cv;
            if (it != a.end()) a.erase(it);
            if (!is_zero(nv)) a.emplace(v, nv);
        }
    }
    return out;
}
} // namespace

const std::map<Word, Rat>& LyndonTable::bracket_basis(const Word& p, const Word& q, int cap) {
    (void)cap;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = sc_.find({p, q});
        if (it != sc_.end()) return it->second;
    }
    // [b_p, b_q] expanded in the tensor algebra, then peeled
    const auto& ep = expansion(p);
    const auto& eq = expansion(q);
    std::map<Word, Rat> comm;
    auto acc = [&comm](const Word& k, const Rat& c) {
        auto it = comm.find(k);
        if (it == comm.end()) {
            comm.emplace(k, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) comm.erase(it);
        }
    };
    for (auto& [a, ca] : ep)
        for (auto& [b, cb] : eq) {
            acc(a.concat(b), ca * cb);
            acc(b.concat(a), -(ca * cb));
        }
    bool ok = false;
    auto lie = peel_homogeneous(*this, std::move(comm), &ok);
    if (!ok) throw std::logic_error("LyndonTable::bracket_basis: commutator failed to peel");
    std::lock_guard<std::mutex> lock(mu_);
    return sc_.emplace(std::make_pair(p, q), std::move(lie)).first->second;
}

} // namespace kvf
