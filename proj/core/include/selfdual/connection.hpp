#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "selfdual/token.hpp"

namespace selfdual {

enum class ViolationCode {
  letter_outside_alphabet,
  first_numeral_not_zero,
  growth_violation,
  choice_count_mismatch,
  choice_not_increasing,
  choice_out_of_range,
  choice_not_in_class,
  choice_outside_window,
};

const char* to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  // Token position for surjection codes, choice index for choice codes.
  int position;

  bool operator==(const Violation&) const = default;
};

/// Outcome of checking a token sequence and a choice sequence against the
/// rigid surjection and choice injection invariants.
struct ValidationReport {
  int length = 0;  // L, number of tokens
  int image = 0;   // K, one plus the largest numeral (0 if none)
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

/// Checks every invariant; never throws for well-formed sequences.
/// K is inferred as one plus the largest numeral.
ValidationReport validate_connection(std::span<const Token> tokens, std::span<const int> choice,
                                     int alphabet_size);

/// Surjection-only part of validate_connection.
ValidationReport validate_surjection(std::span<const Token> tokens, int alphabet_size);

/// A rigid surjection t: A u L -> A u K. Only the L numeric positions are stored;
/// the identity on the alphabet is implicit.
class RigidSurjection {
 public:
  RigidSurjection() = default;

  /// Throws InvariantViolation when the tokens are not rigid.
  static RigidSurjection make(int alphabet_size, std::vector<Token> tokens);

  int alphabet_size() const { return alphabet_; }
  int length() const { return static_cast<int>(tokens_.size()); }
  int image() const { return image_; }
  std::span<const Token> tokens() const { return tokens_; }
  Token operator[](int position) const { return tokens_[static_cast<std::size_t>(position)]; }

  /// E_k, the first position carrying numeral k; E_K is the length.
  int first_occurrence(int k) const;

  /// The free class r^{-1}({k}) in increasing order.
  std::vector<int> free_class(int k) const;

  auto operator<=>(const RigidSurjection&) const = default;
  bool operator==(const RigidSurjection&) const = default;

 private:
  friend class Connection;
  RigidSurjection(int alphabet, std::vector<Token> tokens, int image)
      : alphabet_(alphabet), image_(image), tokens_(std::move(tokens)) {}

  int alphabet_ = 0;
  int image_ = 0;
  std::vector<Token> tokens_;

  friend RigidSurjection unchecked_surjection(int, std::vector<Token>, int);
};

/// Builds without validation. Callers must already know the result is rigid.
RigidSurjection unchecked_surjection(int alphabet_size, std::vector<Token> tokens, int image);

/// An increasing injection K -> L.
class Injection {
 public:
  Injection() = default;

  /// Throws InvariantViolation unless strictly increasing with values < codomain.
  static Injection make(std::vector<int> values, int codomain);

  int domain() const { return static_cast<int>(values_.size()); }
  int codomain() const { return codomain_; }
  std::span<const int> values() const { return values_; }
  int operator[](int k) const { return values_[static_cast<std::size_t>(k)]; }

  auto operator<=>(const Injection&) const = default;
  bool operator==(const Injection&) const = default;

 private:
  Injection(std::vector<int> values, int codomain) : codomain_(codomain), values_(std::move(values)) {}

  int codomain_ = 0;
  std::vector<int> values_;
};

/// A pair (r, c) in F^A_{L,K}: a rigid surjection and a choice injection that
/// picks, for each numeral k, a position of class k inside [E_k, E_{k+1}).
class Connection {
 public:
  Connection() = default;

  /// Throws InvariantViolation carrying the rendered report.
  static Connection make(int alphabet_size, std::vector<Token> tokens, std::vector<int> choice);

  static Connection identity(int n, int alphabet_size = 0);
  static Connection empty(int alphabet_size = 0) { return identity(0, alphabet_size); }

  int alphabet_size() const { return surj_.alphabet_size(); }
  /// Numeric domain size; letters are never counted.
  int length() const { return surj_.length(); }
  int image() const { return surj_.image(); }

  const RigidSurjection& surjection() const { return surj_; }
  std::span<const Token> tokens() const { return surj_.tokens(); }
  std::span<const int> choice() const { return choice_; }
  Injection injection() const;

  int first_occurrence(int k) const { return surj_.first_occurrence(k); }

  // Lexicographic on tokens, then on choice values.
  auto operator<=>(const Connection&) const = default;
  bool operator==(const Connection&) const = default;

 private:
  Connection(RigidSurjection surj, std::vector<int> choice)
      : surj_(std::move(surj)), choice_(std::move(choice)) {}

  RigidSurjection surj_;
  std::vector<int> choice_;

  friend Connection unchecked_connection(int, std::vector<Token>, std::vector<int>);
};

/// Builds without validation; K is taken from the choice length.
Connection unchecked_connection(int alphabet_size, std::vector<Token> tokens, std::vector<int> choice);

/// Tokens 0..n-1 as numerals.
std::vector<Token> numerals(int n);

}  // namespace selfdual
