#pragma once

#include <span>
#include <vector>

#include "selfdual/connection.hpp"
#include "selfdual/errors.hpp"
#include "selfdual/words.hpp"

namespace selfdual {

/// sigma(w) = ((r1,c1).base)[0] where r1 spells w on the first |w| classes of
/// base and enumerates the rest as 0,1,...; c1 is the least valid choice.
/// Throws DomainError when |w| exceeds the image of base or alphabets differ.
Connection sigma(const Word& w, const Connection& base);

/// Recovers w from a 0-segment of a reduct of base. The word length is the
/// number of base classes the segment covers. Throws NotInRange when no
/// (r1,c1) produces the segment.
Word sigma_inverse(const Connection& seg, const Connection& base);

enum class ShiftKind { h_extend, h_prime };

/// Bijections between A u omega and a larger alphabet u omega.
///   h_extend over A:   alpha -> alpha, 0 -> alpha_|A|, n -> n-1.
///   h_prime with N:    m -> alpha_m for m < N, m -> m-N otherwise (A has N letters).
struct AlphabetShift {
  ShiftKind kind = ShiftKind::h_extend;
  int base_alphabet = 0;  // |A|
  int absorbed = 1;       // numerals turned into letters: 1 for h_extend, N for h_prime

  static AlphabetShift h_extend(int base_alphabet) { return {ShiftKind::h_extend, base_alphabet, 1}; }
  static AlphabetShift h_prime(int N) { return {ShiftKind::h_prime, N, N}; }

  /// Alphabet the conjugated surjection lives over (B for h, A for h').
  int letter_side_alphabet() const { return kind == ShiftKind::h_extend ? base_alphabet + 1 : base_alphabet; }
  /// Alphabet after conjugation (A for h, empty for h').
  int numeral_side_alphabet() const { return kind == ShiftKind::h_extend ? base_alphabet : 0; }

  Token map(Token t) const;
  Token inverse_map(Token t) const;
};

/// inverse = false: (s,j) over the letter side -> (shift^-1 o s o shift, j')
/// over the numeral side, with j' fixing the absorbed positions.
/// inverse = true undoes it. Throws DomainError on an incompatible input.
Connection apply_shift(const AlphabetShift& shift, const Connection& conn, bool inverse);

enum class ThetaVariant { claim1, claim4 };

/// theta(s,j) = (conjugated (s,j)).base, and its inverse by witness solving.
class ThetaMap {
 public:
  /// base over A; the domain is F^{A+1}_{L,K} with L + 1 = image of base.
  static ThetaMap claim1(Connection base);
  /// base over the empty alphabet; the domain is F^{A}_{L,K}, |A| = N,
  /// with L + N = image of base.
  static ThetaMap claim4(Connection base, int N);

  ThetaVariant variant() const { return variant_; }
  const Connection& base() const { return base_; }
  const AlphabetShift& shift() const { return shift_; }
  int domain_alphabet() const { return shift_.letter_side_alphabet(); }
  int domain_length() const { return base_.image() - shift_.absorbed; }

  /// base[1] for claim1, base[N] for claim4; every forward image extends it.
  Connection anchor_segment() const;

  Connection forward(const Connection& x) const;
  /// Throws NotInRange when y is not an image at this truncation.
  Connection inverse(const Connection& y) const;

 private:
  ThetaMap(ThetaVariant variant, Connection base, AlphabetShift shift)
      : variant_(variant), base_(std::move(base)), shift_(shift) {}

  ThetaVariant variant_;
  Connection base_;
  AlphabetShift shift_;
};

/// Single-call form. N is only read for claim4.
Connection theta(const Connection& x, const Connection& base, ThetaVariant variant, bool inverse, int N = 0);

/// r2 on w' = w0 ^ x_0 ^ ... ^ x_{p-1}: letters copied, a v in block m
/// (the block of x_{m-1}) becomes numeral m-1. Throws DomainError when some
/// x is not left-variable or alphabets differ.
RigidSurjection left_word_to_connection(const Word& w0, std::span<const VariableWord> xs);

class FrozenWitnessInvalid : public InvariantViolation {
 public:
  explicit FrozenWitnessInvalid(ValidationReport report)
      : InvariantViolation("frozen witness is not a connection: " + report.describe()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Identity on positions and choice indices below n, witness values above.
/// Throws FrozenWitnessInvalid when the result is not a connection.
Connection freeze_below(const Connection& witness, int n);

class FusionIncoherent : public Error {
 public:
  explicit FusionIncoherent(int index)
      : Error("fusion chain incoherent at index " + std::to_string(index)), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// [(r_n,c_n)[n] for each n] after checking (r_{n+1},c_{n+1})[n] == (r_n,c_n)[n].
std::vector<Connection> fuse(std::span<const Connection> chain);

/// (s0,j0) in F_{N,K}: s0 = 0,1,...,K-1 then zeros, j0 = identity on K.
Connection canonical_projection(int N, int K);

}  // namespace selfdual
