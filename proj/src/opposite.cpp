#include "hadj/opposite.hpp"

#include "hadj/errors.hpp"

namespace hadj {

OppositeFunction::OppositeFunction(std::vector<Direction> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("opposite function must have N >= 1");
}

OppositeFunction OppositeFunction::parse(std::string_view text) {
  std::vector<Direction> entries;
  for (char ch : text) {
    if (ch == 'i') {
      entries.push_back(Direction::Id);
    } else if (ch == 'o') {
      entries.push_back(Direction::Op);
    } else {
      throw ParseError("opposite function must be a string over {i,o}: '" + std::string(text) +
                       "'");
    }
  }
  if (entries.empty()) throw ParseError("empty opposite function");
  return OppositeFunction(std::move(entries));
}

Direction OppositeFunction::at(std::size_t position) const {
  if (position < 1 || position > entries_.size()) {
    throw DomainError("position " + std::to_string(position) + " out of range 1.." +
                      std::to_string(entries_.size()));
  }
  return entries_[position - 1];
}

std::string OppositeFunction::str() const {
  std::string out;
  for (Direction d : entries_) out.push_back(d == Direction::Id ? 'i' : 'o');
  return out;
}

nlohmann::json OppositeFunction::to_json() const {
  auto arr = nlohmann::json::array();
  for (Direction d : entries_) arr.push_back(d == Direction::Id ? "id" : "op");
  return arr;
}

OppositeFunction build_opposite(OppositeVariant variant, std::size_t N) {
  if (N == 0) throw DomainError("opposite function must have N >= 1");
  std::vector<Direction> entries(N, Direction::Id);
  for (std::size_t j = 1; j <= N; ++j) {
    Direction d = Direction::Id;
    switch (variant.kind) {
      case OppositeVariant::Kind::EvenOp:
        d = (j % 2 == 0) ? Direction::Op : Direction::Id;
        break;
      case OppositeVariant::Kind::OddOp:
        d = (j % 2 == 1) ? Direction::Op : Direction::Id;
        break;
      case OppositeVariant::Kind::Constant:
        d = variant.value;
        break;
    }
    entries[j - 1] = d;
  }
  return OppositeFunction(std::move(entries));
}

OppositeFunction op_for_pair(const DexterityFunction& a, const DexterityFunction& b,
                             std::size_t k, std::size_t N) {
  if (a.length() != b.length()) {
    throw DomainError("length mismatch: " + a.str() + " vs " + b.str());
  }
  const std::size_t n = a.length();
  if (k < 1) throw DomainError("k must be >= 1");
  if (k + n > N) {
    throw DomainError("k + n = " + std::to_string(k + n) + " exceeds N = " + std::to_string(N));
  }
  std::vector<Direction> entries(N, Direction::Id);
  std::size_t prefix_l = 0;  // L-count of a|j plus b|j
  for (std::size_t j = 0; j <= n; ++j) {
    if (j >= 1) {
      prefix_l += (a.at(j) == Side::L) + (b.at(j) == Side::L);
    }
    entries[j + k - 1] = (prefix_l % 2 == 1) ? Direction::Op : Direction::Id;
  }
  return OppositeFunction(std::move(entries));
}

OppositeFunction op_for(const DexterityFunction& a, std::size_t N) {
  return op_for_pair(a, even_function(a.length()), 1, N);
}

OppositeFunction negate_opposite(const OppositeFunction& o) {
  std::vector<Direction> entries = o.entries();
  for (auto& d : entries) d = (d == Direction::Id) ? Direction::Op : Direction::Id;
  return OppositeFunction(std::move(entries));
}

OppositeFunction xor_compose(const OppositeFunction& lhs, const OppositeFunction& rhs) {
  if (lhs.size() != rhs.size()) {
    throw DomainError("length mismatch: " + lhs.str() + " vs " + rhs.str());
  }
  std::vector<Direction> entries(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    entries[i] = (lhs.entries()[i] != rhs.entries()[i]) ? Direction::Op : Direction::Id;
  }
  return OppositeFunction(std::move(entries));
}

}  // namespace hadj
