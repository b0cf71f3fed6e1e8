#include "selfdual/connection.hpp"

#include <algorithm>
#include <sstream>

#include "selfdual/errors.hpp"

namespace selfdual {

const char* to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::letter_outside_alphabet: return "letter_outside_alphabet";
    case ViolationCode::first_numeral_not_zero: return "first_numeral_not_zero";
    case ViolationCode::growth_violation: return "growth_violation";
    case ViolationCode::choice_count_mismatch: return "choice_count_mismatch";
    case ViolationCode::choice_not_increasing: return "choice_not_increasing";
    case ViolationCode::choice_out_of_range: return "choice_out_of_range";
    case ViolationCode::choice_not_in_class: return "choice_not_in_class";
    case ViolationCode::choice_outside_window: return "choice_outside_window";
  }
  return "unknown";
}

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << to_string(violations[i].code) << " at " << violations[i].position;
  }
  return out.str();
}

ValidationReport validate_surjection(std::span<const Token> tokens, int alphabet_size) {
  ValidationReport report;
  report.length = static_cast<int>(tokens.size());
  int max_seen = -1;
  for (int y = 0; y < report.length; ++y) {
    const Token t = tokens[static_cast<std::size_t>(y)];
    if (t.is_letter()) {
      if (t.value() >= alphabet_size)
        report.violations.push_back({ViolationCode::letter_outside_alphabet, y});
      continue;
    }
    if (max_seen < 0 && t.value() != 0) {
      report.violations.push_back({ViolationCode::first_numeral_not_zero, y});
    } else if (t.value() > max_seen + 1) {
      report.violations.push_back({ViolationCode::growth_violation, y});
    }
    max_seen = std::max(max_seen, t.value());
  }
  report.image = max_seen + 1;
  return report;
}

ValidationReport validate_connection(std::span<const Token> tokens, std::span<const int> choice,
                                     int alphabet_size) {
  ValidationReport report = validate_surjection(tokens, alphabet_size);
  const int L = report.length;
  const int K = report.image;

  if (static_cast<int>(choice.size()) != K)
    report.violations.push_back({ViolationCode::choice_count_mismatch, static_cast<int>(choice.size())});

  // First occurrences are only meaningful for a rigid token sequence, but the
  // checks below degrade gracefully: missing numerals get E = L.
  std::vector<int> first(static_cast<std::size_t>(K) + 1, L);
  for (int y = L - 1; y >= 0; --y) {
    const Token t = tokens[static_cast<std::size_t>(y)];
    if (t.is_numeral()) first[static_cast<std::size_t>(t.value())] = y;
  }

  const int n = std::min<int>(K, static_cast<int>(choice.size()));
  for (int k = 0; k < static_cast<int>(choice.size()); ++k) {
    const int c = choice[static_cast<std::size_t>(k)];
    if (k > 0 && c <= choice[static_cast<std::size_t>(k - 1)])
      report.violations.push_back({ViolationCode::choice_not_increasing, k});
    if (c < 0 || c >= L) {
      report.violations.push_back({ViolationCode::choice_out_of_range, k});
      continue;
    }
    if (k >= n) continue;
    const Token t = tokens[static_cast<std::size_t>(c)];
    if (!t.is_numeral() || t.value() != k) {
      report.violations.push_back({ViolationCode::choice_not_in_class, k});
      continue;
    }
    if (c >= first[static_cast<std::size_t>(k) + 1])
      report.violations.push_back({ViolationCode::choice_outside_window, k});
  }
  return report;
}

RigidSurjection RigidSurjection::make(int alphabet_size, std::vector<Token> tokens) {
  const ValidationReport report = validate_surjection(tokens, alphabet_size);
  if (!report.ok()) throw InvariantViolation("invalid rigid surjection: " + report.describe());
  return RigidSurjection(alphabet_size, std::move(tokens), report.image);
}

RigidSurjection unchecked_surjection(int alphabet_size, std::vector<Token> tokens, int image) {
  return RigidSurjection(alphabet_size, std::move(tokens), image);
}

int RigidSurjection::first_occurrence(int k) const {
  if (k >= image_) return length();
  const auto it = std::find(tokens_.begin(), tokens_.end(), Token::numeral(k));
  return static_cast<int>(it - tokens_.begin());
}

std::vector<int> RigidSurjection::free_class(int k) const {
  std::vector<int> out;
  for (int y = 0; y < length(); ++y)
    if (tokens_[static_cast<std::size_t>(y)] == Token::numeral(k)) out.push_back(y);
  return out;
}

Injection Injection::make(std::vector<int> values, int codomain) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < 0 || values[k] >= codomain)
      throw InvariantViolation("injection value out of range at " + std::to_string(k));
    if (k > 0 && values[k] <= values[k - 1])
      throw InvariantViolation("injection not increasing at " + std::to_string(k));
  }
  return Injection(std::move(values), codomain);
}

Connection Connection::make(int alphabet_size, std::vector<Token> tokens, std::vector<int> choice) {
  const ValidationReport report = validate_connection(tokens, choice, alphabet_size);
  if (!report.ok()) throw InvariantViolation("invalid connection: " + report.describe());
  return Connection(RigidSurjection(alphabet_size, std::move(tokens), report.image), std::move(choice));
}

Connection unchecked_connection(int alphabet_size, std::vector<Token> tokens, std::vector<int> choice) {
  const int image = static_cast<int>(choice.size());
  return Connection(unchecked_surjection(alphabet_size, std::move(tokens), image), std::move(choice));
}

Connection Connection::identity(int n, int alphabet_size) {
  std::vector<int> choice(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) choice[static_cast<std::size_t>(k)] = k;
  return Connection(RigidSurjection(alphabet_size, numerals(n), n), std::move(choice));
}

Injection Connection::injection() const {
  return Injection::make(std::vector<int>(choice_.begin(), choice_.end()), length());
}

std::vector<Token> numerals(int n) {
  std::vector<Token> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back(Token::numeral(k));
  return out;
}

}  // namespace selfdual
