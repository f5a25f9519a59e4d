#include "prym/words.hpp"

#include <cstdlib>
#include <sstream>

#include "prym/errors.hpp"
#include "prym/snf.hpp"

namespace prym {

namespace {

constexpr Int kEntryLimit = Int(1) << 50;

void guard(const IMat& m) {
  if (m.size() > 0 && m.cwiseAbs().maxCoeff() >= kEntryLimit)
    throw InternalError("word evaluation overflowed the entry guard");
}

} // namespace

TwistWord TwistWord::parse(const std::string& text) {
  TwistWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto caret = tok.find('^');
    Term t;
    if (caret == std::string::npos) {
      t.gen = tok;
    } else {
      t.gen = tok.substr(0, caret);
      const std::string exp = tok.substr(caret + 1);
      char* end = nullptr;
      t.exp = std::strtoll(exp.c_str(), &end, 10);
      if (t.gen.empty() || exp.empty() || *end != '\0')
        throw UsageError("malformed word token: " + tok);
    }
    w.terms.push_back(std::move(t));
  }
  return w;
}

TwistWord& TwistWord::append(const std::string& gen, Int exp) {
  terms.push_back({gen, exp});
  return *this;
}

TwistWord TwistWord::concat(const TwistWord& other) const {
  TwistWord w = *this;
  w.terms.insert(w.terms.end(), other.terms.begin(), other.terms.end());
  return w;
}

std::string TwistWord::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out << ' ';
    out << terms[i].gen;
    if (terms[i].exp != 1) out << '^' << terms[i].exp;
  }
  return out.str();
}

Int TwistWord::length() const {
  Int n = 0;
  for (const auto& t : terms) n += std::abs(t.exp);
  return n;
}

Rep& Rep::add(const std::string& name, const IMat& m) {
  if (dim == 0) dim = static_cast<int>(m.rows());
  if (m.rows() != dim || m.cols() != dim)
    throw UsageError("generator dimension mismatch: " + name);
  table[name] = m;
  return *this;
}

const IMat& Rep::gen(const std::string& name) const {
  auto it = table.find(name);
  if (it == table.end()) throw UsageError("unknown generator: " + name);
  return it->second;
}

IMat Rep::eval(const TwistWord& w) const {
  IMat acc = IMat::Identity(dim, dim);
  for (const auto& t : w.terms) {
    IMat base = gen(t.gen);
    Int e = t.exp;
    if (e < 0) {
      base = unimodular_inverse(base);
      e = -e;
    }
    for (Int k = 0; k < e; ++k) {
      acc = acc * base;
      guard(acc);
    }
  }
  return acc;
}

Rep trivial_rep(int dim, const std::vector<std::string>& names) {
  Rep r(dim);
  for (const auto& n : names) r.add(n, IMat::Identity(dim, dim));
  return r;
}

} // namespace prym
