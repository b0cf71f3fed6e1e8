#include "selfdual/enumerate.hpp"

#include <algorithm>

#include "selfdual/errors.hpp"

namespace selfdual {

const char* to_string(SpaceMode mode) {
  switch (mode) {
    case SpaceMode::connections: return "conn";
    case SpaceMode::surjections_only: return "surj";
    case SpaceMode::injections_only: return "inj";
  }
  return "?";
}

SpaceMode parse_space_mode(const std::string& text) {
  if (text == "conn" || text == "connections") return SpaceMode::connections;
  if (text == "surj" || text == "surjections_only") return SpaceMode::surjections_only;
  if (text == "inj" || text == "injections_only") return SpaceMode::injections_only;
  throw InputError("unknown space mode '" + text + "'");
}

namespace {

void check_shape(int L, int K, int alphabet) {
  if (L < 0 || K < 0 || alphabet < 0) throw DomainError("negative space parameter");
  if (K > L) throw DomainError("K > L: " + std::to_string(K) + " > " + std::to_string(L));
}

// Depth-first generation of rigid token strings in lexicographic order.
class SurjectionWalker {
 public:
  SurjectionWalker(int L, int K, int alphabet, const std::function<void(const std::vector<Token>&)>& emit)
      : L_(L), K_(K), alphabet_(alphabet), emit_(emit) {
    tokens_.reserve(static_cast<std::size_t>(L));
  }

  void run() { step(0, -1); }

 private:
  void step(int pos, int max_seen) {
    const int missing = K_ - (max_seen + 1);
    if (pos == L_) {
      if (missing == 0) emit_(tokens_);
      return;
    }
    const int room_after = L_ - pos - 1;
    if (missing <= room_after) {
      for (int a = 0; a < alphabet_; ++a) descend(Token::letter(a), pos, max_seen);
      for (int k = 0; k <= max_seen; ++k) descend(Token::numeral(k), pos, max_seen);
    }
    if (max_seen + 1 < K_) descend(Token::numeral(max_seen + 1), pos, max_seen + 1);
  }

  void descend(Token t, int pos, int max_seen) {
    tokens_.push_back(t);
    step(pos + 1, max_seen);
    tokens_.pop_back();
  }

  int L_, K_, alphabet_;
  const std::function<void(const std::vector<Token>&)>& emit_;
  std::vector<Token> tokens_;
};

void for_each_surjection_tokens(int L, int K, int alphabet,
                                const std::function<void(const std::vector<Token>&)>& emit) {
  SurjectionWalker(L, K, alphabet, emit).run();
}

// Admissible choice positions of class k: members of X_k inside [E_k, E_{k+1}).
std::vector<std::vector<int>> choice_windows(const std::vector<Token>& tokens, int K) {
  const int L = static_cast<int>(tokens.size());
  std::vector<int> first(static_cast<std::size_t>(K) + 1, L);
  for (int y = L - 1; y >= 0; --y)
    if (tokens[static_cast<std::size_t>(y)].is_numeral())
      first[static_cast<std::size_t>(tokens[static_cast<std::size_t>(y)].value())] = y;
  std::vector<std::vector<int>> windows(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k)
    for (int y = first[static_cast<std::size_t>(k)]; y < first[static_cast<std::size_t>(k) + 1]; ++y)
      if (tokens[static_cast<std::size_t>(y)] == Token::numeral(k)) windows[static_cast<std::size_t>(k)].push_back(y);
  return windows;
}

}  // namespace

void for_each_connection(int L, int K, int alphabet, const std::function<void(const Connection&)>& visit) {
  check_shape(L, K, alphabet);
  for_each_surjection_tokens(L, K, alphabet, [&](const std::vector<Token>& tokens) {
    const auto windows = choice_windows(tokens, K);
    std::vector<std::size_t> odometer(static_cast<std::size_t>(K), 0);
    std::vector<int> choice(static_cast<std::size_t>(K));
    while (true) {
      for (std::size_t k = 0; k < odometer.size(); ++k) choice[k] = windows[k][odometer[k]];
      visit(unchecked_connection(alphabet, tokens, choice));
      // Rightmost digit moves fastest so choices come out lexicographically.
      std::size_t k = odometer.size();
      while (k > 0) {
        --k;
        if (++odometer[k] < windows[k].size()) break;
        odometer[k] = 0;
        if (k == 0) return;
      }
      if (odometer.empty()) return;
    }
  });
}

std::vector<Connection> enumerate_connections(int L, int K, int alphabet) {
  std::vector<Connection> out;
  for_each_connection(L, K, alphabet, [&](const Connection& c) { out.push_back(c); });
  return out;
}

std::vector<RigidSurjection> enumerate_surjections(int L, int K, int alphabet) {
  check_shape(L, K, alphabet);
  std::vector<RigidSurjection> out;
  for_each_surjection_tokens(L, K, alphabet, [&](const std::vector<Token>& tokens) {
    out.push_back(unchecked_surjection(alphabet, tokens, K));
  });
  return out;
}

std::vector<Injection> enumerate_injections(int K, int L) {
  check_shape(L, K, 0);
  std::vector<Injection> out;
  std::vector<int> values(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) values[static_cast<std::size_t>(k)] = k;
  while (true) {
    out.push_back(Injection::make(values, L));
    int k = K - 1;
    while (k >= 0 && values[static_cast<std::size_t>(k)] == L - K + k) --k;
    if (k < 0) break;
    ++values[static_cast<std::size_t>(k)];
    for (int m = k + 1; m < K; ++m) values[static_cast<std::size_t>(m)] = values[static_cast<std::size_t>(m) - 1] + 1;
  }
  return out;
}

std::vector<SpaceElement> enumerate_space(const SpaceSpec& spec) {
  check_shape(spec.L, spec.K, spec.alphabet);
  std::vector<SpaceElement> out;
  switch (spec.mode) {
    case SpaceMode::connections:
      for_each_connection(spec.L, spec.K, spec.alphabet, [&](const Connection& c) { out.emplace_back(c); });
      break;
    case SpaceMode::surjections_only:
      for (auto& s : enumerate_surjections(spec.L, spec.K, spec.alphabet)) out.emplace_back(std::move(s));
      break;
    case SpaceMode::injections_only:
      if (spec.alphabet != 0) throw DomainError("injections space takes no alphabet");
      for (auto& j : enumerate_injections(spec.K, spec.L)) out.emplace_back(std::move(j));
      break;
  }
  return out;
}

std::uint64_t space_size(const SpaceSpec& spec) {
  check_shape(spec.L, spec.K, spec.alphabet);
  std::uint64_t count = 0;
  switch (spec.mode) {
    case SpaceMode::connections:
      for_each_connection(spec.L, spec.K, spec.alphabet, [&](const Connection&) { ++count; });
      break;
    case SpaceMode::surjections_only:
      for_each_surjection_tokens(spec.L, spec.K, spec.alphabet, [&](const std::vector<Token>&) { ++count; });
      break;
    case SpaceMode::injections_only:
      if (spec.alphabet != 0) throw DomainError("injections space takes no alphabet");
      count = enumerate_injections(spec.K, spec.L).size();
      break;
  }
  return count;
}

std::uint64_t stirling2(int L, int K) {
  if (L < 0 || K < 0 || K > L) return 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(K) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int n = 1; n <= L; ++n) {
    for (int k = std::min(n, K); k >= 1; --k)
      row[static_cast<std::size_t>(k)] =
          static_cast<std::uint64_t>(k) * row[static_cast<std::size_t>(k)] + row[static_cast<std::size_t>(k) - 1];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(K)];
}

}  // namespace selfdual
