#include "fest/involution.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "fest/errors.hpp"
#include "fest/text.hpp"

namespace fest {
namespace {

constexpr Symbol kDenseLimit = 1u << 16;

Symbol parse_code(const std::string& token) {
  if (!token.empty() && std::all_of(token.begin(), token.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    std::uint64_t v = text::parse_u64(token);
    if (v > 0xFFFFFFFFull) throw UsageError("involution code out of range: " + token);
    return static_cast<Symbol>(v);
  }
  return text::parse_symbol_token(token);
}

}  // namespace

InvolutionTable InvolutionTable::dna() {
  InvolutionTable f;
  f.add_pair('A', 'T');
  f.add_pair('C', 'G');
  return f;
}

InvolutionTable InvolutionTable::adjacent_pairs(Symbol alphabet) {
  InvolutionTable f;
  for (Symbol c = 0; c + 1 < alphabet; c += 2) f.add_pair(c, c + 1);
  return f;
}

InvolutionTable InvolutionTable::parse(std::istream& in) {
  InvolutionTable f;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string a, b, rest;
    if (!(fields >> a) || a.front() == '#') continue;
    if (!(fields >> b) || (fields >> rest)) {
      throw UsageError("involution line " + std::to_string(lineno) + ": expected 'codeA codeB'");
    }
    try {
      f.add_pair(parse_code(a), parse_code(b));
    } catch (const UsageError& e) {
      throw UsageError("involution line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return f;
}

void InvolutionTable::add_pair(Symbol a, Symbol b) {
  Symbol fa = (*this)(a);
  Symbol fb = (*this)(b);
  if (fa == b && fb == a) return;
  if (fa != a || fb != b) {
    throw UsageError("pair " + std::to_string(a) + " " + std::to_string(b) +
                     " conflicts with an existing mapping");
  }
  set(a, b);
  set(b, a);
  pairs_.emplace_back(a, b);
  max_symbol_ = std::max({max_symbol_, a, b});
}

void InvolutionTable::set(Symbol from, Symbol to) {
  if (from < kDenseLimit) {
    if (dense_.size() <= from) {
      Symbol old = static_cast<Symbol>(dense_.size());
      dense_.resize(from + 1);
      for (Symbol c = old; c <= from; ++c) dense_[c] = c;
    }
    dense_[from] = to;
  } else {
    sparse_[from] = to;
  }
}

}  // namespace fest
