#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hadj {

enum class Side : unsigned char { L, R };

constexpr Side negate(Side s) noexcept { return s == Side::L ? Side::R : Side::L; }
constexpr char to_char(Side s) noexcept { return s == Side::L ? 'L' : 'R'; }

enum class Parity { Even, Odd };
enum class PairKind { Parity, Nonparity };

const char* to_string(Parity p) noexcept;
const char* to_string(PairKind k) noexcept;

/// A map {1..n} -> {L, R}. Textual form is the string over {L, R} with index 1
/// leftmost, e.g. "RRL" is odd^3.
class DexterityFunction {
 public:
  explicit DexterityFunction(std::vector<Side> entries);

  static DexterityFunction parse(std::string_view text);

  std::size_t length() const noexcept { return entries_.size(); }
  /// 1-based access, matching the usual indexing of dexterity functions.
  Side at(std::size_t index) const;
  const std::vector<Side>& entries() const noexcept { return entries_; }

  std::string str() const;

  friend bool operator==(const DexterityFunction&, const DexterityFunction&) = default;
  friend auto operator<=>(const DexterityFunction&, const DexterityFunction&) = default;

 private:
  std::vector<Side> entries_;
};

/// 1-based interchange positions; replaying them left to right is a rewrite path.
using RewriteTrace = std::vector<std::size_t>;

struct DexterityVariant {
  enum class Kind { Constant, Even, Odd, SingleLAt } kind;
  Side side = Side::R;    // Constant only
  std::size_t index = 0;  // SingleLAt only, 1-based
};

DexterityFunction build(DexterityVariant variant, std::size_t n);
DexterityFunction constant(Side s, std::size_t n);
DexterityFunction even_function(std::size_t n);
DexterityFunction odd_function(std::size_t n);

std::size_t l_count(const DexterityFunction& a) noexcept;
Parity parity(const DexterityFunction& a) noexcept;
PairKind parity_pair(const DexterityFunction& a, const DexterityFunction& b);
DexterityFunction canonical(const DexterityFunction& a);

/// Negates entries j and j+1 (1 <= j <= n-1).
DexterityFunction interchange(const DexterityFunction& a, std::size_t j);

/// Ascending scan: emits j whenever the current function disagrees with b at j.
/// Throws DomainError for nonparity pairs.
RewriteTrace normalize_witness(const DexterityFunction& a, const DexterityFunction& b);

DexterityFunction replay(const DexterityFunction& a, const RewriteTrace& trace);

/// All 2^n functions of length n, in lexicographic order with L < R.
std::vector<DexterityFunction> all_functions(std::size_t n);

}  // namespace hadj
