#include "hadj/dexterity.hpp"

#include <algorithm>

#include "hadj/errors.hpp"

namespace hadj {

const char* to_string(Parity p) noexcept { return p == Parity::Even ? "Even" : "Odd"; }
const char* to_string(PairKind k) noexcept {
  return k == PairKind::Parity ? "Parity" : "Nonparity";
}

DexterityFunction::DexterityFunction(std::vector<Side> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("dexterity function must have length >= 1");
}

DexterityFunction DexterityFunction::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty dexterity function");
  std::vector<Side> entries;
  entries.reserve(text.size());
  for (char ch : text) {
    if (ch == 'L') {
      entries.push_back(Side::L);
    } else if (ch == 'R') {
      entries.push_back(Side::R);
    } else {
      throw ParseError("dexterity function must be a string over {L,R}: '" + std::string(text) +
                       "'");
    }
  }
  return DexterityFunction(std::move(entries));
}

Side DexterityFunction::at(std::size_t index) const {
  if (index < 1 || index > entries_.size()) {
    throw DomainError("index " + std::to_string(index) + " out of range 1.." +
                      std::to_string(entries_.size()));
  }
  return entries_[index - 1];
}

std::string DexterityFunction::str() const {
  std::string out;
  out.reserve(entries_.size());
  for (Side s : entries_) out.push_back(to_char(s));
  return out;
}

DexterityFunction constant(Side s, std::size_t n) {
  if (n == 0) throw DomainError("dexterity function must have length >= 1");
  return DexterityFunction(std::vector<Side>(n, s));
}

DexterityFunction even_function(std::size_t n) { return constant(Side::R, n); }

DexterityFunction odd_function(std::size_t n) {
  if (n == 0) throw DomainError("dexterity function must have length >= 1");
  std::vector<Side> entries(n, Side::R);
  entries.back() = Side::L;
  return DexterityFunction(std::move(entries));
}

DexterityFunction build(DexterityVariant variant, std::size_t n) {
  switch (variant.kind) {
    case DexterityVariant::Kind::Constant:
      return constant(variant.side, n);
    case DexterityVariant::Kind::Even:
      return even_function(n);
    case DexterityVariant::Kind::Odd:
      return odd_function(n);
    case DexterityVariant::Kind::SingleLAt: {
      if (n == 0) throw DomainError("dexterity function must have length >= 1");
      if (variant.index < 1 || variant.index > n) {
        throw DomainError("single_L_at index " + std::to_string(variant.index) +
                          " out of range 1.." + std::to_string(n));
      }
      std::vector<Side> entries(n, Side::R);
      entries[variant.index - 1] = Side::L;
      return DexterityFunction(std::move(entries));
    }
  }
  throw DomainError("unknown dexterity variant");
}

std::size_t l_count(const DexterityFunction& a) noexcept {
  const auto& e = a.entries();
  return static_cast<std::size_t>(std::count(e.begin(), e.end(), Side::L));
}

Parity parity(const DexterityFunction& a) noexcept {
  return l_count(a) % 2 == 0 ? Parity::Even : Parity::Odd;
}

static void require_same_length(const DexterityFunction& a, const DexterityFunction& b) {
  if (a.length() != b.length()) {
    throw DomainError("length mismatch: " + a.str() + " vs " + b.str());
  }
}

PairKind parity_pair(const DexterityFunction& a, const DexterityFunction& b) {
  require_same_length(a, b);
  return parity(a) == parity(b) ? PairKind::Parity : PairKind::Nonparity;
}

DexterityFunction canonical(const DexterityFunction& a) {
  return parity(a) == Parity::Even ? even_function(a.length()) : odd_function(a.length());
}

DexterityFunction interchange(const DexterityFunction& a, std::size_t j) {
  const std::size_t n = a.length();
  if (j < 1 || j + 1 > n) {
    throw DomainError("interchange position " + std::to_string(j) + " invalid for length " +
                      std::to_string(n) + " (need 1 <= j <= n-1)");
  }
  std::vector<Side> entries = a.entries();
  entries[j - 1] = negate(entries[j - 1]);
  entries[j] = negate(entries[j]);
  return DexterityFunction(std::move(entries));
}

RewriteTrace normalize_witness(const DexterityFunction& a, const DexterityFunction& b) {
  if (parity_pair(a, b) == PairKind::Nonparity) {
    throw DomainError("Nonparity pair: " + a.str() + " and " + b.str() +
                      " have L-counts of different parity");
  }
  RewriteTrace trace;
  DexterityFunction current = a;
  for (std::size_t j = 1; j < a.length(); ++j) {
    if (current.at(j) != b.at(j)) {
      current = interchange(current, j);
      trace.push_back(j);
    }
  }
  return trace;
}

DexterityFunction replay(const DexterityFunction& a, const RewriteTrace& trace) {
  DexterityFunction current = a;
  for (std::size_t j : trace) current = interchange(current, j);
  return current;
}

std::vector<DexterityFunction> all_functions(std::size_t n) {
  if (n == 0 || n >= 8 * sizeof(std::size_t) - 1) throw DomainError("length out of range");
  std::vector<DexterityFunction> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    std::vector<Side> entries(n);
    for (std::size_t i = 0; i < n; ++i) {
      entries[i] = ((code >> (n - 1 - i)) & 1U) ? Side::R : Side::L;
    }
    out.emplace_back(std::move(entries));
  }
  return out;
}

}  // namespace hadj
