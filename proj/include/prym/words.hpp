#pragma once

#include <map>
#include <string>
#include <vector>

#include "prym/types.hpp"

namespace prym {

// A word in named generators with integer exponents, e.g. "Ta1^2 Tb1".
struct TwistWord {
  struct Term {
    std::string gen;
    Int exp = 1;
  };
  std::vector<Term> terms;

  TwistWord() = default;
  TwistWord(std::initializer_list<Term> t) : terms(t) {}

  // whitespace-separated tokens of the form name or name^k
  static TwistWord parse(const std::string& text);

  TwistWord& append(const std::string& gen, Int exp = 1);
  TwistWord concat(const TwistWord& other) const;
  std::string str() const;
  Int length() const;  // sum of |exp|
};

// A representation handle: a finite generator table. Matrices must be
// unimodular (negative powers invert exactly over the integers).
struct Rep {
  int dim = 0;
  std::map<std::string, IMat> table;

  Rep() = default;
  Rep(int d) : dim(d) {}

  Rep& add(const std::string& name, const IMat& m);
  const IMat& gen(const std::string& name) const;  // UsageError if unknown

  // Product of gen^exp in word order; the empty word gives the identity.
  IMat eval(const TwistWord& w) const;
};

// Every generator acts as the identity in the given dimension.
Rep trivial_rep(int dim, const std::vector<std::string>& names);

} // namespace prym
