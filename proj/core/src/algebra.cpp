#include "selfdual/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "selfdual/enumerate.hpp"
#include "selfdual/errors.hpp"

namespace selfdual {

namespace {

std::string shape(const Connection& c) {
  return "F_{" + std::to_string(c.length()) + "," + std::to_string(c.image()) + "}";
}

std::vector<Token> apply(std::span<const Token> outer, std::span<const Token> inner) {
  std::vector<Token> out;
  out.reserve(inner.size());
  for (const Token t : inner) out.push_back(t.is_letter() ? t : outer[static_cast<std::size_t>(t.value())]);
  return out;
}

}  // namespace

Connection compose(const Connection& outer, const Connection& inner) {
  if (outer.alphabet_size() != inner.alphabet_size())
    throw DomainError("compose: alphabet mismatch");
  if (outer.length() != inner.image())
    throw DomainError("compose: cannot apply " + shape(outer) + " after " + shape(inner));

  std::vector<int> choice;
  choice.reserve(static_cast<std::size_t>(outer.image()));
  for (const int k : outer.choice()) choice.push_back(inner.choice()[static_cast<std::size_t>(k)]);

  Connection out = unchecked_connection(inner.alphabet_size(), apply(outer.tokens(), inner.tokens()), std::move(choice));
  assert(validate_connection(out.tokens(), out.choice(), out.alphabet_size()).ok());
  return out;
}

RigidSurjection compose(const RigidSurjection& outer, const RigidSurjection& inner) {
  if (outer.alphabet_size() != inner.alphabet_size())
    throw DomainError("compose: alphabet mismatch");
  if (outer.length() != inner.image()) throw DomainError("compose: surjection shape mismatch");
  return unchecked_surjection(inner.alphabet_size(), apply(outer.tokens(), inner.tokens()), outer.image());
}

Injection compose(const Injection& outer, const Injection& inner) {
  if (inner.codomain() != outer.domain()) throw DomainError("compose: injection shape mismatch");
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(inner.domain()));
  for (const int v : inner.values()) values.push_back(outer[v]);
  return Injection::make(std::move(values), outer.codomain());
}

Connection segment(const Connection& conn, int n) {
  if (n < 0 || n > conn.image())
    throw DomainError("segment index " + std::to_string(n) + " exceeds image " + std::to_string(conn.image()));
  const auto E = static_cast<std::size_t>(conn.first_occurrence(n));
  std::vector<Token> tokens(conn.tokens().begin(), conn.tokens().begin() + static_cast<std::ptrdiff_t>(E));
  std::vector<int> choice(conn.choice().begin(), conn.choice().begin() + n);
  return unchecked_connection(conn.alphabet_size(), std::move(tokens), std::move(choice));
}

bool is_initial_segment(const Connection& small, const Connection& big) {
  if (small.alphabet_size() != big.alphabet_size()) throw DomainError("is_initial_segment: alphabet mismatch");
  return small.length() <= big.length() && small.image() <= big.image() &&
         std::equal(small.tokens().begin(), small.tokens().end(), big.tokens().begin()) &&
         std::equal(small.choice().begin(), small.choice().end(), big.choice().begin());
}

bool is_segment_of(const Connection& small, const Connection& big) {
  return small.alphabet_size() == big.alphabet_size() && small.image() <= big.image() &&
         segment(big, small.image()) == small;
}

std::optional<Connection> reduct_witness(const Connection& candidate, const Connection& base) {
  if (candidate.alphabet_size() != base.alphabet_size()) throw DomainError("reduct_witness: alphabet mismatch");
  if (candidate.length() != base.length()) throw DomainError("reduct_witness: length mismatch");

  const int M = base.image();
  const int K = candidate.image();
  if (K > M) return std::nullopt;

  // r is forced pointwise through the surjective base: r(base(y)) = candidate(y).
  std::vector<std::optional<Token>> forced(static_cast<std::size_t>(M));
  for (int y = 0; y < base.length(); ++y) {
    const Token b = base.tokens()[static_cast<std::size_t>(y)];
    const Token want = candidate.tokens()[static_cast<std::size_t>(y)];
    if (b.is_letter()) {
      if (want != b) return std::nullopt;
      continue;
    }
    auto& slot = forced[static_cast<std::size_t>(b.value())];
    if (slot && *slot != want) return std::nullopt;
    slot = want;
  }
  std::vector<Token> tokens;
  tokens.reserve(static_cast<std::size_t>(M));
  for (const auto& slot : forced) tokens.push_back(*slot);

  // c is forced through the injective base choice: base_c(c(k)) = candidate_c(k).
  std::vector<int> choice;
  choice.reserve(static_cast<std::size_t>(K));
  for (const int target : candidate.choice()) {
    const auto it = std::find(base.choice().begin(), base.choice().end(), target);
    if (it == base.choice().end()) return std::nullopt;
    choice.push_back(static_cast<int>(it - base.choice().begin()));
  }

  if (!validate_connection(tokens, choice, base.alphabet_size()).ok()) return std::nullopt;
  Connection witness = unchecked_connection(base.alphabet_size(), std::move(tokens), std::move(choice));
  assert(compose(witness, base) == candidate);
  return witness;
}

std::vector<Connection> reducts(const Connection& base) {
  std::vector<Connection> out;
  for (int k = 0; k <= base.image(); ++k)
    for_each_connection(base.image(), k, base.alphabet_size(),
                        [&](const Connection& w) { out.push_back(compose(w, base)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Connection> segment_set(const Connection& base, int n) {
  const int M = base.image();
  if (n < 0 || n > M) throw DomainError("segment_set: n exceeds image of base");
  std::vector<Connection> out;
  for (int k = n; k <= M; ++k)
    for_each_connection(M, k, base.alphabet_size(),
                        [&](const Connection& w) { out.push_back(segment(compose(w, base), n)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Connection with_least_choice(const RigidSurjection& surj) {
  std::vector<int> choice;
  choice.reserve(static_cast<std::size_t>(surj.image()));
  for (int k = 0; k < surj.image(); ++k) choice.push_back(surj.first_occurrence(k));
  std::vector<Token> tokens(surj.tokens().begin(), surj.tokens().end());
  return unchecked_connection(surj.alphabet_size(), std::move(tokens), std::move(choice));
}

}  // namespace selfdual
