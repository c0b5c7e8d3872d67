#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "a1h/errors.hpp"

namespace a1h {

inline constexpr std::size_t kMaxVars = 8;

/// Name of the distinguished homotopy variable.
inline constexpr std::string_view kHomotopyVar = "T";

/// Dense exponent vector. Unused trailing slots stay zero.
struct Monomial {
  std::array<std::uint32_t, kMaxVars> exp{};

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool is_one() const {
    return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] != 0 && o.exp[i] != 0) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] + o.exp[i];
    return r;
  }
  /// Requires `o.divides(*this)`.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] - o.exp[i];
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(exp[i], o.exp[i]);
    return r;
  }
  Monomial gcd(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::min(exp[i], o.exp[i]);
    return r;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class VarKind : std::uint8_t {
  kBase,       ///< coordinate of the local base; localized at the origin
  kHomotopy,   ///< the affine-line parameter T
  kAuxiliary,  ///< internal tag / Rabinowitsch variables
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring descriptor: variable names, their roles, and the monomial
/// order. Exponent vectors follow `variables()` order.
///
/// The order is graded reverse lexicographic over a ranking of the variables
/// (rank 0 is the greatest). An elimination ring splits the ranking into a
/// leading block compared first and the remaining block compared on ties.
class Ring {
 public:
  /// k[x1..xn], x1 > x2 > ... in grevlex.
  static RingPtr base(std::vector<std::string> names) {
    std::vector<VarKind> kinds(names.size(), VarKind::kBase);
    return make(std::move(names), std::move(kinds), {}, 0);
  }

  /// k[x1..xn][T]; T is stored last but ranks greatest.
  static RingPtr with_homotopy(std::vector<std::string> base_names) {
    base_names.emplace_back(kHomotopyVar);
    std::vector<VarKind> kinds(base_names.size(), VarKind::kBase);
    kinds.back() = VarKind::kHomotopy;
    std::vector<std::size_t> rank;
    rank.push_back(base_names.size() - 1);
    for (std::size_t i = 0; i + 1 < base_names.size(); ++i) rank.push_back(i);
    return make(std::move(base_names), std::move(kinds), std::move(rank), 0);
  }

  const std::vector<std::string>& variables() const { return names_; }
  std::size_t arity() const { return names_.size(); }
  VarKind kind(std::size_t i) const { return kinds_[i]; }
  bool has_homotopy() const {
    return std::find(kinds_.begin(), kinds_.end(), VarKind::kHomotopy) != kinds_.end();
  }
  /// True when every variable is a base coordinate.
  bool is_base() const {
    return std::all_of(kinds_.begin(), kinds_.end(),
                       [](VarKind k) { return k == VarKind::kBase; });
  }
  std::size_t elimination_block() const { return block_; }
  const std::vector<std::size_t>& ranking() const { return rank_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }
  std::size_t require_index(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw DomainError("unknown variable '" + std::string(name) + "'");
    return *i;
  }
  std::vector<std::string> base_variables() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (kinds_[i] == VarKind::kBase) out.push_back(names_[i]);
    return out;
  }

  /// Same variables, block order with `names` forming the leading block.
  RingPtr eliminating(const std::vector<std::string>& names) const {
    std::vector<std::size_t> rank;
    for (const auto& n : names) rank.push_back(require_index(n));
    for (std::size_t r : rank_)
      if (std::find(rank.begin(), rank.end(), r) == rank.end()) rank.push_back(r);
    return make(names_, kinds_, std::move(rank), names.size());
  }

  /// Appends a variable, ranked greatest.
  RingPtr adjoin(const std::string& name, VarKind kind) const {
    if (index_of(name)) throw DomainError("variable '" + name + "' already present");
    auto names = names_;
    auto kinds = kinds_;
    names.push_back(name);
    kinds.push_back(kind);
    std::vector<std::size_t> rank{names_.size()};
    rank.insert(rank.end(), rank_.begin(), rank_.end());
    return make(std::move(names), std::move(kinds), std::move(rank), 0);
  }

  /// Drops a variable, keeping the relative ranking of the rest.
  RingPtr without(std::string_view name) const {
    const std::size_t drop = require_index(name);
    std::vector<std::string> names;
    std::vector<VarKind> kinds;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (i == drop) continue;
      names.push_back(names_[i]);
      kinds.push_back(kinds_[i]);
    }
    std::vector<std::size_t> rank;
    for (std::size_t r : rank_) {
      if (r == drop) continue;
      rank.push_back(r > drop ? r - 1 : r);
    }
    return make(std::move(names), std::move(kinds), std::move(rank), 0);
  }

  /// The ring of base coordinates only.
  RingPtr base_ring() const {
    RingPtr r = base(base_variables());
    return r;
  }

  /// -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (block_ > 0) {
      int c = grevlex(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex(a, b, block_, rank_.size());
    }
    return grevlex(a, b, 0, rank_.size());
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.kinds_ == b.kinds_ && a.rank_ == b.rank_ &&
           a.block_ == b.block_;
  }

 private:
  Ring() = default;

  static RingPtr make(std::vector<std::string> names, std::vector<VarKind> kinds,
                      std::vector<std::size_t> rank, std::size_t block) {
    if (names.size() > kMaxVars)
      throw DomainError("at most " + std::to_string(kMaxVars) + " variables supported");
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j]) throw DomainError("duplicate variable '" + names[i] + "'");
    if (rank.empty())
      for (std::size_t i = 0; i < names.size(); ++i) rank.push_back(i);
    auto r = std::shared_ptr<Ring>(new Ring());
    r->names_ = std::move(names);
    r->kinds_ = std::move(kinds);
    r->rank_ = std::move(rank);
    r->block_ = block;
    return r;
  }

  int grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
    std::uint32_t da = 0, db = 0;
    for (std::size_t k = lo; k < hi; ++k) {
      da += a.exp[rank_[k]];
      db += b.exp[rank_[k]];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = hi; k-- > lo;) {
      const auto ea = a.exp[rank_[k]];
      const auto eb = b.exp[rank_[k]];
      if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
  }

  std::vector<std::string> names_;
  std::vector<VarKind> kinds_;
  std::vector<std::size_t> rank_;
  std::size_t block_ = 0;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace a1h
