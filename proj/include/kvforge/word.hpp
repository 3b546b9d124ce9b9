#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kvf {

// A word in the free monoid on letters 0..n-1. Ordered by degree, then
// lexicographically, so that term maps iterate in graded-lex order.
struct Word {
    std::vector<uint8_t> a;

    Word() = default;
    explicit Word(std::vector<uint8_t> v) : a(std::move(v)) {}
    static Word letter(int i) { return Word(std::vector<uint8_t>{(uint8_t)i}); }

    size_t size() const { return a.size(); }
    bool empty() const { return a.empty(); }
    uint8_t operator[](size_t i) const { return a[i]; }

    Word concat(const Word& w) const {
        Word r(*this);
        r.a.insert(r.a.end(), w.a.begin(), w.a.end());
        return r;
    }
    Word prefix(size_t len) const { return Word(std::vector<uint8_t>(a.begin(), a.begin() + len)); }
    Word suffix(size_t from) const { return Word(std::vector<uint8_t>(a.begin() + from, a.end())); }

    bool operator==(const Word& w) const { return a == w.a; }
    bool operator!=(const Word& w) const { return a != w.a; }
    // graded lexicographic
    bool operator<(const Word& w) const {
        if (a.size() != w.a.size()) return a.size() < w.a.size();
        return a < w.a;
    }

    // strictly smaller than all proper rotations
    bool is_lyndon() const {
        const size_t n = a.size();
        if (n == 0) return false;
        for (size_t r = 1; r < n; ++r) {
            for (size_t k = 0; k < n; ++k) {
                uint8_t x = a[k], y = a[(r + k) % n];
                if (x < y) break;
                if (x > y) return false;
                if (k + 1 == n) return false; // equal to a proper rotation
            }
        }
        return true;
    }

    // lexicographically minimal rotation (canonical necklace representative)
    Word min_rotation() const {
        const size_t n = a.size();
        if (n <= 1) return *this;
        size_t best = 0;
        for (size_t r = 1; r < n; ++r) {
            for (size_t k = 0; k < n; ++k) {
                uint8_t x = a[(best + k) % n], y = a[(r + k) % n];
                if (y < x) { best = r; break; }
                if (y > x) break;
            }
        }
        Word out;
        out.a.reserve(n);
        for (size_t k = 0; k < n; ++k) out.a.push_back(a[(best + k) % n]);
        return out;
    }
};

// display uses external letter indices: internal i prints as i + base
inline std::string word_key(const Word& w, int base) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += '.';
        s += std::to_string((int)w[i] + base);
    }
    return s;
}

} // namespace kvf
