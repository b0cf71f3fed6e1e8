#pragma once

// Exhaustive property sweeps shared by the unit tests and the acceptance run.
// Each returns how many instances were checked and the first failure.

#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "selfdual/algebra.hpp"
#include "selfdual/enumerate.hpp"
#include "selfdual/errors.hpp"
#include "selfdual/proof_maps.hpp"
#include "selfdual/text.hpp"
#include "selfdual/words.hpp"

namespace props {

using namespace selfdual;

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0 && checked > 0; }
  void merge(const Tally& other) {
    checked += other.checked;
    if (other.failures && !failures) first_failure = other.first_failure;
    failures += other.failures;
  }
};

inline std::vector<Connection> universe(int max_L, int alphabet) {
  std::vector<Connection> out;
  for (int L = 0; L <= max_L; ++L)
    for (int K = 0; K <= L; ++K)
      for (const auto& c : enumerate_connections(L, K, alphabet)) out.push_back(c);
  return out;
}

inline std::string show(const Connection& c) { return format_connection(c); }

// Closure, associativity and both identity laws.
inline Tally algebra_laws(int max_L, int alphabet) {
  Tally t;
  const auto all = universe(max_L, alphabet);
  for (const auto& x : all) {
    t.check(compose(Connection::identity(x.image(), alphabet), x) == x, "left identity " + show(x));
    t.check(compose(x, Connection::identity(x.length(), alphabet)) == x, "right identity " + show(x));
  }
  for (const auto& b : all)
    for (const auto& a : all) {
      if (a.length() != b.image()) continue;
      const Connection ab = compose(a, b);
      t.check(validate_connection(ab.tokens(), ab.choice(), alphabet).ok() && ab == oracle::compose(a, b),
              "closure " + show(a) + " . " + show(b));
      for (const auto& c : all) {
        if (b.length() != c.image()) continue;
        t.check(compose(ab, c) == compose(a, compose(b, c)), "associativity " + show(a) + " " + show(b) + " " + show(c));
      }
    }
  return t;
}

// Witness soundness against the oracle, reflexivity, antisymmetry,
// transitivity, and segment-prefix coherence.
inline Tally reduct_and_segment_coherence(int max_L, int alphabet) {
  Tally t;
  for (int L = 0; L <= max_L; ++L) {
    std::vector<Connection> level;
    for (int K = 0; K <= L; ++K)
      for (const auto& c : enumerate_connections(L, K, alphabet)) level.push_back(c);
    for (const auto& y : level)
      for (const auto& x : level) {
        const auto w = reduct_witness(x, y);
        const auto brute = x.image() <= y.image() ? oracle::reduct_witnesses(x, y) : std::vector<Connection>{};
        t.check(w.has_value() == !brute.empty() && (!w || (compose(*w, y) == x && *w == brute.front())),
                "witness " + show(x) + " over " + show(y));
      }
    for (const auto& x : level) {
      t.check(reduct_witness(x, x) == Connection::identity(x.image(), alphabet), "reflexive " + show(x));
      for (const auto& y : level) {
        if (!is_reduct(x, y)) continue;
        if (is_reduct(y, x)) t.check(x == y, "antisymmetric " + show(x) + " " + show(y));
        for (const auto& z : level)
          if (is_reduct(y, z)) t.check(is_reduct(x, z), "transitive " + show(x) + " " + show(y) + " " + show(z));
      }
      for (int m = 0; m <= x.image(); ++m) {
        const Connection sm = segment(x, m);
        bool ok = validate_connection(sm.tokens(), sm.choice(), alphabet).ok() && is_initial_segment(sm, x) &&
                  sm == oracle::segment(x, m);
        for (int n = 0; n <= m; ++n) ok = ok && segment(sm, n) == segment(x, n);
        t.check(ok, "segment coherence " + show(x) + " at " + std::to_string(m));
      }
    }
  }
  return t;
}

inline std::vector<Word> words_up_to(int max_len, int alphabet) {
  std::vector<Word> out{Word{alphabet, {}}};
  if (alphabet == 0) return out;
  for (int n = 1; n <= max_len; ++n)
    for (auto& w : enumerate_words(n, alphabet)) out.push_back(std::move(w));
  return out;
}

// sigma_inverse . sigma = id and sigma lands in the 0-segment set; every
// letter-only string outside that set is rejected.
inline Tally sigma_round_trips(int max_L, int alphabet) {
  Tally t;
  for (const auto& base : universe(max_L, alphabet)) {
    const auto zero = segment_set(base, 0);
    const std::set<Connection> zero_set(zero.begin(), zero.end());
    for (const auto& w : words_up_to(base.image(), alphabet)) {
      const Connection s = sigma(w, base);
      bool ok = zero_set.contains(s);
      try {
        ok = ok && sigma_inverse(s, base) == w;
      } catch (const NotInRange&) {
        ok = false;
      }
      t.check(ok, "sigma round trip " + format_word(w) + " over " + show(base));
    }
    for (const auto& w : words_up_to(base.length(), alphabet)) {
      std::vector<Token> tokens;
      for (const int a : w.letters) tokens.push_back(Token::letter(a));
      const Connection s = Connection::make(alphabet, tokens, {});
      bool rejected = false;
      try {
        (void)sigma_inverse(s, base);
      } catch (const NotInRange&) {
        rejected = true;
      }
      t.check(rejected != zero_set.contains(s), "sigma_inverse range " + show(s) + " over " + show(base));
    }
  }
  return t;
}

inline Tally shift_round_trips(int max_L) {
  Tally t;
  std::vector<AlphabetShift> shifts{AlphabetShift::h_extend(0), AlphabetShift::h_extend(1), AlphabetShift::h_prime(1),
                                    AlphabetShift::h_prime(2)};
  for (const auto& shift : shifts)
    for (const auto& x : universe(max_L, shift.letter_side_alphabet())) {
      const Connection y = apply_shift(shift, x, false);
      t.check(apply_shift(shift, y, true) == x, "shift round trip " + show(x));
    }
  return t;
}

// theta and theta' forward/inverse over every domain element of length <= max_len.
inline Tally theta_round_trips(int max_len) {
  Tally t;
  std::vector<ThetaMap> maps;
  for (const int a : {0, 1})
    for (const auto& base : universe(max_len + 1, a))
      if (base.image() >= 1) maps.push_back(ThetaMap::claim1(base));
  for (const int N : {1, 2})
    for (const auto& base : universe(max_len + N, 0))
      if (base.image() >= N && base.image() - N <= max_len) maps.push_back(ThetaMap::claim4(base, N));

  for (const auto& map : maps) {
    const Connection anchor = map.anchor_segment();
    std::set<Connection> images;
    std::size_t domain = 0;
    for (int K = 0; K <= map.domain_length(); ++K)
      for (const auto& x : enumerate_connections(map.domain_length(), K, map.domain_alphabet())) {
        ++domain;
        const Connection y = map.forward(x);
        images.insert(y);
        bool ok = is_initial_segment(anchor, y) && is_reduct(y, map.base());
        try {
          ok = ok && map.inverse(y) == x;
        } catch (const NotInRange&) {
          ok = false;
        }
        t.check(ok, "theta round trip " + show(x) + " over " + show(map.base()));
      }
    t.check(images.size() == domain, "theta injective over " + show(map.base()));
    // forward . inverse is the identity wherever the inverse is defined.
    for (const auto& y : reducts(map.base())) {
      try {
        const Connection x = map.inverse(y);
        t.check(map.forward(x) == y, "theta inverse " + show(y) + " over " + show(map.base()));
      } catch (const NotInRange&) {
        t.check(!images.contains(y), "theta inverse missed " + show(y));
      }
    }
  }
  return t;
}

// r2 from (w0, xs) followed by fresh numerals p, p+1, ... up to M classes.
inline Connection r2_connection(const Word& w0, const std::vector<VariableWord>& xs, int extra) {
  const RigidSurjection r2 = left_word_to_connection(w0, xs);
  std::vector<Token> tokens(r2.tokens().begin(), r2.tokens().end());
  const int p = static_cast<int>(xs.size());
  for (int k = 0; k < extra; ++k) tokens.push_back(Token::numeral(p + k));
  return with_least_choice(RigidSurjection::make(w0.alphabet, std::move(tokens)));
}

// For (t,i) = ((r3,c3).(r2,c2).base)[0], sigma_inverse(t,i) relative to base
// must lie in w0 ^ [X]_A and spell the letters of ((r3,c3).(r2,c2))[0].
// X is xs followed by one "v" per padded class.
inline Tally transport(int alphabet) {
  Tally t;
  std::vector<std::vector<int>> left_words;
  for (int n = 1; n <= 2; ++n) {
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    // symbols: v then letters; position 0 fixed to v.
    const int digits = alphabet + 1;
    int total = 1;
    for (int i = 1; i < n; ++i) total *= digits;
    for (int code = 0; code < total; ++code) {
      std::vector<int> s{kVariable};
      int rest = code;
      for (int i = 1; i < n; ++i) {
        const int d = rest % digits;
        rest /= digits;
        s.push_back(d == 0 ? kVariable : d - 1);
      }
      left_words.push_back(s);
    }
  }
  std::vector<std::vector<VariableWord>> families;
  for (const auto& a : left_words) {
    families.push_back({VariableWord(alphabet, a)});
    for (const auto& b : left_words) families.push_back({VariableWord(alphabet, a), VariableWord(alphabet, b)});
  }
  for (const auto& w0 : words_up_to(1, alphabet))
    for (const auto& xs : families)
      for (const int extra : {0, 1}) {
        const Connection r2c2 = r2_connection(w0, xs, extra);
        // A padded class is one more factor "v" of the generating sequence.
        std::vector<VariableWord> family = xs;
        for (int k = 0; k < extra; ++k) family.push_back(VariableWord(alphabet, {kVariable}));
        const int M = r2c2.length();
        const int P = r2c2.image();
        std::vector<Connection> bases{Connection::identity(M, alphabet)};
        for (const auto& b : enumerate_connections(M + 1, M, alphabet)) bases.push_back(b);
        for (const auto& base : bases)
          for (int K = 0; K <= P; ++K)
            for (const auto& r3c3 : enumerate_connections(P, K, alphabet)) {
              const Connection inner = compose(r3c3, r2c2);
              const Connection seg = segment(compose(inner, base), 0);
              std::string what = "transport w0=" + format_word(w0) + " r3=" + show(r3c3) + " base=" + show(base);
              try {
                const Word w = sigma_inverse(seg, base);
                const Connection head = segment(inner, 0);
                std::vector<int> letters;
                for (const Token tok : head.tokens()) letters.push_back(tok.value());
                t.check(span_membership(w, w0, family).has_value() && w.letters == letters, what);
              } catch (const NotInRange&) {
                t.check(false, what + " (not in range)");
              }
            }
      }
  return t;
}

}  // namespace props
