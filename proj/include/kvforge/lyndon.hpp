#pragma once

#include "kvforge/ass.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace kvf {

// Lyndon-word machinery for one alphabet size: the basis words per degree,
// their standard factorizations, and cached expansions of the associated
// bracketings into the free associative algebra. Shared via registry().
class LyndonTable {
  public:
    explicit LyndonTable(int n) : n_(n) {}

    // Lyndon words of length d over n letters, lexicographic (Duval).
    const std::vector<Word>& words(int d);

    // standard factorization w = uv, v the longest proper Lyndon suffix
    std::pair<Word, Word> factorize(const Word& w);

    // sparse expansion of the standard bracketing of w, coefficients in Z
    const std::map<Word, Rat>& expansion(const Word& w);

    // structure constants: [b_p, b_q] in Lyndon coordinates, truncated at cap
    const std::map<Word, Rat>& bracket_basis(const Word& p, const Word& q, int cap);

    static LyndonTable& registry(int n);

  private:
    int n_;
    std::map<int, std::vector<Word>> words_;
    std::map<Word, std::map<Word, Rat>> exp_;
    std::map<std::pair<Word, Word>, std::map<Word, Rat>> sc_;
    std::mutex mu_;
};

} // namespace kvf
