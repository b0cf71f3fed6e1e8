#include "selfdual/proof_maps.hpp"

#include <optional>

#include "selfdual/algebra.hpp"

namespace selfdual {

Connection sigma(const Word& w, const Connection& base) {
  if (w.alphabet != base.alphabet_size()) throw DomainError("sigma: word and base use different alphabets");
  const int K = w.length();
  const int M = base.image();
  if (K > M) throw DomainError("sigma: word longer than the image of base");

  std::vector<Token> tokens;
  std::vector<int> choice;
  for (const int a : w.letters) tokens.push_back(Token::letter(a));
  for (int n = K; n < M; ++n) {
    tokens.push_back(Token::numeral(n - K));
    choice.push_back(n);
  }
  const Connection r1 = unchecked_connection(base.alphabet_size(), std::move(tokens), std::move(choice));
  return segment(compose(r1, base), 0);
}

Word sigma_inverse(const Connection& seg, const Connection& base) {
  if (seg.alphabet_size() != base.alphabet_size()) throw DomainError("sigma_inverse: alphabet mismatch");
  if (seg.image() != 0) throw NotInRange("sigma_inverse: not a 0-segment");
  if (seg.length() > base.length()) throw NotInRange("sigma_inverse: segment longer than base");

  std::vector<std::optional<int>> forced;
  for (int y = 0; y < seg.length(); ++y) {
    const Token b = base.tokens()[static_cast<std::size_t>(y)];
    const Token t = seg.tokens()[static_cast<std::size_t>(y)];
    if (b.is_letter()) {
      if (t != b) throw NotInRange("sigma_inverse: segment disagrees with a base letter at " + std::to_string(y));
      continue;
    }
    const auto m = static_cast<std::size_t>(b.value());
    if (m >= forced.size()) forced.resize(m + 1);
    if (forced[m] && *forced[m] != t.value())
      throw NotInRange("sigma_inverse: class " + std::to_string(m) + " would need two letters");
    forced[m] = t.value();
  }
  // The composite reaches numeral 0 exactly at the first position of the
  // next uncovered base class.
  const int p = static_cast<int>(forced.size());
  if (seg.length() != base.first_occurrence(p))
    throw NotInRange("sigma_inverse: segment does not end where a base class opens");

  Word w{base.alphabet_size(), {}};
  for (const auto& letter : forced) w.letters.push_back(*letter);
  return w;
}

Token AlphabetShift::map(Token t) const {
  if (kind == ShiftKind::h_extend) {
    if (t.is_letter()) return t;
    return t.value() == 0 ? Token::letter(base_alphabet) : Token::numeral(t.value() - 1);
  }
  if (t.is_letter()) throw DomainError("h' is defined on numerals only");
  return t.value() < absorbed ? Token::letter(t.value()) : Token::numeral(t.value() - absorbed);
}

Token AlphabetShift::inverse_map(Token t) const {
  const int keep = numeral_side_alphabet();
  if (t.is_letter()) {
    if (t.value() >= letter_side_alphabet()) throw DomainError("letter outside the shifted alphabet");
    return t.value() < keep ? t : Token::numeral(t.value() - keep);
  }
  return Token::numeral(t.value() + absorbed);
}

Connection apply_shift(const AlphabetShift& shift, const Connection& conn, bool inverse) {
  const int P = shift.absorbed;
  if (!inverse) {
    if (conn.alphabet_size() != shift.letter_side_alphabet())
      throw DomainError("apply_shift: connection alphabet does not match the shift source");
    std::vector<Token> tokens = numerals(P);
    for (const Token t : conn.tokens()) tokens.push_back(shift.inverse_map(t));
    std::vector<int> choice;
    for (int m = 0; m < P; ++m) choice.push_back(m);
    for (const int j : conn.choice()) choice.push_back(j + P);
    return Connection::make(shift.numeral_side_alphabet(), std::move(tokens), std::move(choice));
  }

  if (conn.alphabet_size() != shift.numeral_side_alphabet())
    throw DomainError("apply_shift: connection alphabet does not match the shift target");
  if (conn.length() < P || conn.image() < P) throw DomainError("apply_shift: too short to unshift");
  for (int m = 0; m < P; ++m) {
    if (conn.tokens()[static_cast<std::size_t>(m)] != Token::numeral(m) || conn.choice()[static_cast<std::size_t>(m)] != m)
      throw DomainError("apply_shift: absorbed positions are not fixed");
  }
  std::vector<Token> tokens;
  for (int y = P; y < conn.length(); ++y) {
    const Token t = conn.tokens()[static_cast<std::size_t>(y)];
    tokens.push_back(t.is_letter() ? t : shift.map(t));
  }
  std::vector<int> choice;
  for (int m = P; m < conn.image(); ++m) choice.push_back(conn.choice()[static_cast<std::size_t>(m)] - P);
  return Connection::make(shift.letter_side_alphabet(), std::move(tokens), std::move(choice));
}

ThetaMap ThetaMap::claim1(Connection base) {
  if (base.image() < 1) throw DomainError("theta: base needs at least one class");
  const AlphabetShift shift = AlphabetShift::h_extend(base.alphabet_size());
  return ThetaMap(ThetaVariant::claim1, std::move(base), shift);
}

ThetaMap ThetaMap::claim4(Connection base, int N) {
  if (base.alphabet_size() != 0) throw DomainError("theta': base must use the empty alphabet");
  if (N < 0 || base.image() < N) throw DomainError("theta': base has fewer than N classes");
  return ThetaMap(ThetaVariant::claim4, std::move(base), AlphabetShift::h_prime(N));
}

Connection ThetaMap::anchor_segment() const { return segment(base_, shift_.absorbed); }

Connection ThetaMap::forward(const Connection& x) const {
  if (x.length() != domain_length())
    throw DomainError("theta: input length " + std::to_string(x.length()) + " but base admits " +
                      std::to_string(domain_length()));
  return compose(apply_shift(shift_, x, false), base_);
}

Connection ThetaMap::inverse(const Connection& y) const {
  if (y.alphabet_size() != base_.alphabet_size() || y.length() != base_.length())
    throw NotInRange("theta inverse: not a reduct of base");
  const auto witness = reduct_witness(y, base_);
  if (!witness) throw NotInRange("theta inverse: not a reduct of base");
  const int P = shift_.absorbed;
  if (witness->image() < P) throw NotInRange("theta inverse: too few classes");
  for (int m = 0; m < P; ++m)
    if (witness->tokens()[static_cast<std::size_t>(m)] != Token::numeral(m) ||
        witness->choice()[static_cast<std::size_t>(m)] != m)
      throw NotInRange("theta inverse: witness does not fix the absorbed classes");
  try {
    return apply_shift(shift_, *witness, true);
  } catch (const InvariantViolation& e) {
    throw NotInRange(std::string("theta inverse: ") + e.what());
  }
}

Connection theta(const Connection& x, const Connection& base, ThetaVariant variant, bool inverse, int N) {
  const ThetaMap map = variant == ThetaVariant::claim1 ? ThetaMap::claim1(base) : ThetaMap::claim4(base, N);
  return inverse ? map.inverse(x) : map.forward(x);
}

RigidSurjection left_word_to_connection(const Word& w0, std::span<const VariableWord> xs) {
  std::vector<Token> tokens;
  for (const int a : w0.letters) tokens.push_back(Token::letter(a));
  for (std::size_t m = 0; m < xs.size(); ++m) {
    const VariableWord& x = xs[m];
    if (x.alphabet() != w0.alphabet) throw DomainError("left_word_to_connection: alphabet mismatch");
    if (!x.left_variable()) throw DomainError("left_word_to_connection: x_" + std::to_string(m) + " is not left-variable");
    for (const int s : x.symbols())
      tokens.push_back(s == kVariable ? Token::numeral(static_cast<int>(m)) : Token::letter(s));
  }
  return RigidSurjection::make(w0.alphabet, std::move(tokens));
}

Connection freeze_below(const Connection& witness, int n) {
  if (n < 0 || n > witness.length()) throw DomainError("freeze_below: witness shorter than n");
  std::vector<Token> tokens = numerals(n);
  tokens.insert(tokens.end(), witness.tokens().begin() + n, witness.tokens().end());
  std::vector<int> choice;
  for (int m = 0; m < n; ++m) choice.push_back(m);
  for (int m = n; m < witness.image(); ++m) choice.push_back(witness.choice()[static_cast<std::size_t>(m)]);
  ValidationReport report = validate_connection(tokens, choice, witness.alphabet_size());
  if (!report.ok()) throw FrozenWitnessInvalid(std::move(report));
  return unchecked_connection(witness.alphabet_size(), std::move(tokens), std::move(choice));
}

std::vector<Connection> fuse(std::span<const Connection> chain) {
  std::vector<Connection> out;
  for (std::size_t n = 0; n < chain.size(); ++n) {
    const int idx = static_cast<int>(n);
    if (chain[n].image() < idx) throw DomainError("fuse: element " + std::to_string(n) + " has fewer than n classes");
    out.push_back(segment(chain[n], idx));
  }
  for (std::size_t n = 0; n + 1 < chain.size(); ++n) {
    const int idx = static_cast<int>(n);
    const Connection& next = chain[n + 1];
    if (next.alphabet_size() != chain[n].alphabet_size() || segment(next, idx) != out[n] ||
        !is_initial_segment(out[n], out[n + 1]))
      throw FusionIncoherent(idx);
  }
  return out;
}

Connection canonical_projection(int N, int K) {
  if (K < 0 || K > N) throw DomainError("canonical_projection needs K <= N");
  if (K == 0 && N > 0) throw DomainError("canonical_projection: no surjection onto 0 classes");
  std::vector<Token> tokens = numerals(K);
  tokens.resize(static_cast<std::size_t>(N), Token::numeral(0));
  const Connection id = Connection::identity(K);
  return Connection::make(0, std::move(tokens), std::vector<int>(id.choice().begin(), id.choice().end()));
}

}  // namespace selfdual
