#pragma once

#include <stdexcept>
#include <vector>

namespace kvf {

// Permutation of {1..n} in one-line notation, or of {0..n} when it fixes 0
// (frozen-slot variants). images[k] = sigma(k); slot 0 is present only for
// the 0-fixing kind.
struct Perm {
    std::vector<int> img; // img[0] corresponds to value at position `lo`
    int lo = 1;           // 1 for Sigma_n, 0 for 0-fixing perms of {0..n}

    Perm() = default;
    Perm(std::vector<int> images, int low = 1) : img(std::move(images)), lo(low) {
        if (lo == 0 && (img.empty() || img[0] != 0))
            throw std::invalid_argument("Perm: 0-based permutation must fix 0");
    }
    static Perm identity(int n, int low = 1) {
        std::vector<int> v(n + (low == 0 ? 1 : 0));
        for (size_t k = 0; k < v.size(); ++k) v[k] = (int)k + low;
        return Perm(std::move(v), low);
    }

    int size() const { return (int)img.size() - (lo == 0 ? 1 : 0); } // moving points
    int operator()(int k) const { return img[k - lo]; }

    Perm inverse() const {
        Perm r = *this;
        for (int k = lo; k < lo + (int)img.size(); ++k) r.img[(*this)(k) - lo] = k;
        return r;
    }
    // (a*b)(k) = a(b(k))
    friend Perm operator*(const Perm& a, const Perm& b) {
        if (a.lo != b.lo || a.img.size() != b.img.size())
            throw std::invalid_argument("Perm: size mismatch in product");
        Perm r = a;
        for (int k = a.lo; k < a.lo + (int)a.img.size(); ++k) r.img[k - a.lo] = a(b(k));
        return r;
    }
    bool operator==(const Perm& p) const { return lo == p.lo && img == p.img; }
};

// Block insertion of tau (on {1..n}) into the slot labeled i of sigma,
// yielding a permutation of {1..m+n-1}. Values above i shift by n-1.
inline Perm perm_insert(const Perm& sigma, int i, const Perm& tau) {
    if (tau.lo != 1) throw std::invalid_argument("perm_insert: inner permutation must be 1-based");
    const int m = sigma.size(), n = tau.size();
    if (i < 1 || i > m) throw std::invalid_argument("perm_insert: slot out of range");
    const int pos = sigma.inverse()(i); // position of the value i
    auto shift = [&](int v) { return v < i ? v : v + n - 1; };
    std::vector<int> out;
    if (sigma.lo == 0) out.push_back(0);
    for (int k = sigma.lo; k <= m; ++k) {
        if (k == pos) {
            for (int j = 1; j <= n; ++j) out.push_back(tau(j) + (i - 1));
        } else {
            out.push_back(shift(sigma(k)));
        }
    }
    return Perm(std::move(out), sigma.lo);
}

// Frozen-slot insertion: both permutations fix 0; tau's block comes first.
inline Perm perm_insert0(const Perm& sigma, const Perm& tau) {
    if (sigma.lo != 0 || tau.lo != 0)
        throw std::invalid_argument("perm_insert0: both permutations must fix 0");
    const int m = sigma.size(), n = tau.size();
    std::vector<int> out(m + n + 1);
    out[0] = 0;
    for (int k = 1; k <= n; ++k) out[k] = tau(k);
    for (int k = n + 1; k <= n + m; ++k) out[k] = sigma(k - n) + n;
    return Perm(std::move(out), 0);
}

} // namespace kvf
