#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hall {

/// Opaque ordered token used for indices, set elements, and vertices.
/// Two tokens denote the same thing iff the strings are equal; string
/// order is the canonical order everywhere.
using Token = std::string;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateIndex : Error {
  explicit DuplicateIndex(const Token& i)
      : Error("duplicate index: " + i), index(i) {}
  Token index;
};

struct UnknownIndex : Error {
  explicit UnknownIndex(const Token& i)
      : Error("unknown index: " + i), index(i) {}
  Token index;
};

struct UnknownElement : Error {
  explicit UnknownElement(const Token& e)
      : Error("unknown element: " + e), element(e) {}
  Token element;
};

struct UnknownVertex : Error {
  explicit UnknownVertex(const Token& v)
      : Error("unknown vertex: " + v), vertex(v) {}
  Token vertex;
};

struct SelfLoop : Error {
  explicit SelfLoop(const Token& v)
      : Error("self-loop at vertex: " + v), vertex(v) {}
  Token vertex;
};

/// Instance is over the hard size limit of an exhaustive routine.
struct CapExceeded : Error {
  using Error::Error;
};

/// Caller broke an explicit API contract (not a reported verdict).
struct ContractViolation : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

struct HorizonExceeded : Error {
  using Error::Error;
};

/// Level-compatibility failure of an inverse system: some x in X_{n+1}
/// whose image under the step map is not in X_n.
struct FpropViolation : Error {
  FpropViolation(std::size_t n, const Token& x)
      : Error("fprop violation at level " + std::to_string(n) +
              ": step image of " + x + " missing from level below"),
        level(n),
        element(x) {}
  std::size_t level;
  Token element;
};

struct InvalidColoring : Error {
  using Error::Error;
};

/// Canonical finite set of tokens: strictly increasing, duplicate-free.
/// Structural equality coincides with set equality.
class FiniteSet {
 public:
  FiniteSet() = default;

  /// Sorts and deduplicates.
  static FiniteSet of(std::vector<Token> xs);
  static FiniteSet single(Token x);

  std::size_t card() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Token& x) const;
  bool subset_of(const FiniteSet& other) const;

  FiniteSet unite(const FiniteSet& other) const;
  FiniteSet subtract(const FiniteSet& other) const;
  FiniteSet intersect(const FiniteSet& other) const;

  /// Least member; set must be nonempty.
  const Token& least() const;

  const std::vector<Token>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const FiniteSet&) const = default;
  auto operator<=>(const FiniteSet&) const = default;

 private:
  std::vector<Token> members_;
};

}  // namespace hall
