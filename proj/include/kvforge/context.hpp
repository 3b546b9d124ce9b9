#pragma once

#include <stdexcept>
#include <string>

namespace kvf {

// Truncation context shared by every graded element. Letters are stored
// 0-based internally; `offset0` marks shifted algebras whose displayed
// letter indices start at 0 (frozen strand) instead of 1.
struct Context {
    int n = 0;          // number of generators
    int max_degree = 0; // elements are exact through this degree
    bool offset0 = false;

    Context() = default;
    Context(int n_, int max_degree_, bool offset0_ = false)
        : n(n_), max_degree(max_degree_), offset0(offset0_) {
        if (n < 1) throw std::invalid_argument("Context: need at least one generator");
        if (max_degree < 1) throw std::invalid_argument("Context: max_degree must be >= 1");
    }

    int letter_base() const { return offset0 ? 0 : 1; }

    bool operator==(const Context& c) const {
        return n == c.n && max_degree == c.max_degree && offset0 == c.offset0;
    }
    bool operator!=(const Context& c) const { return !(*this == c); }

    std::string str() const {
        return "(n=" + std::to_string(n) + ", N=" + std::to_string(max_degree) +
               (offset0 ? ", shifted)" : ")");
    }
};

inline void require_same_context(const Context& a, const Context& b, const char* op) {
    if (a != b)
        throw std::invalid_argument(std::string(op) + ": context mismatch " + a.str() + " vs " + b.str());
}

} // namespace kvf
