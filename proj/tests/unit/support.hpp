#pragma once

#include <doctest.h>

#include <string>

#include "dbruhat/io.hpp"

namespace test {

using namespace dbruhat;

inline WeylElement W_(const RootSystem& R, const std::string& word) { return parse_weyl(R, word); }
inline Coweight C_(const RootSystem& R, const std::string& text) { return parse_coweight(R, text); }
inline RootIndex A_(const RootSystem& R, const std::string& text) { return parse_root(R, text); }
inline AffineElement X_(const RootSystem& R, const std::string& text) { return parse_affine(R, text); }

// Inversion count straight from the definition.
inline int inversions(const WeylElement& w) {
  const RootSystem& R = w.system();
  int n = 0;
  for (RootIndex a = 0; a < R.num_positive(); ++a) n += R.is_positive(w(a)) ? 0 : 1;
  return n;
}

// Every subword of a reduced word of w2, evaluated as a group element.
inline bool subword_leq(const WeylElement& w, const WeylElement& w2) {
  const auto& word = w2.reduced_word();
  const RootSystem& R = w.system();
  const std::size_t n = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(word[i]);
    if (WeylElement::from_word(R, sub) == w) return true;
  }
  return false;
}

}  // namespace test
