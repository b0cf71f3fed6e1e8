#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace selfdual {

/// Marks the variable v inside a VariableWord.
inline constexpr int kVariable = -1;

/// A finite string over the letters 0..alphabet-1.
struct Word {
  int alphabet = 0;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;
};

/// A finite string over letters and kVariable, with at least one kVariable.
class VariableWord {
 public:
  /// Throws DomainError when the variable is absent or a letter is out of range.
  VariableWord(int alphabet, std::vector<int> symbols);

  int alphabet() const { return alphabet_; }
  int length() const { return static_cast<int>(symbols_.size()); }
  std::span<const int> symbols() const { return symbols_; }
  bool left_variable() const { return symbols_.front() == kVariable; }

  bool operator==(const VariableWord&) const = default;

 private:
  int alphabet_;
  std::vector<int> symbols_;
};

enum class WordKind { constant_word, variable_word, left_variable_word };

const char* to_string(WordKind kind);

WordKind classify(std::span<const int> symbols);

/// x(letter): every v replaced by the letter.
Word substitute(const VariableWord& x, int letter);

Word concat(const Word& a, const Word& b);

/// Witness for w = w0 ^ x_{n_0}(a_0) ^ ... ^ x_{n_k}(a_k).
struct Decomposition {
  std::vector<int> indices;
  std::vector<int> letters;

  bool operator==(const Decomposition&) const = default;
};

/// Rebuilds w0 ^ x_{n_0}(a_0) ^ ... from a decomposition.
Word recombine(const Word& w0, std::span<const VariableWord> xs, const Decomposition& d);

/// Membership of w in w0 ^ [X]_A, where the empty product is admitted so that
/// w0 itself is a member. Returns the lexicographically least witness
/// (indices first; the letters are then forced).
std::optional<Decomposition> span_membership(const Word& w, const Word& w0, std::span<const VariableWord> xs);

struct CombinatorialLine {
  VariableWord root;
  std::vector<Word> words;  // root(a) for each letter a, in letter order
};

/// Every variable word of length N with its line, v ordered before the letters.
std::vector<CombinatorialLine> enumerate_lines(int N, int alphabet);

/// Index of a word of fixed length in the base-|A| numbering used by
/// enumerate_words (first letter most significant).
std::size_t word_index(const Word& w);
std::vector<Word> enumerate_words(int N, int alphabet);

// Text form: comma-separated letters, the variable written as 'v'.
Word parse_word(std::string_view text, int alphabet = -1);
VariableWord parse_variable_word(std::string_view text, int alphabet = -1);
std::string format_word(const Word& w);
std::string format_symbols(std::span<const int> symbols);

}  // namespace selfdual
