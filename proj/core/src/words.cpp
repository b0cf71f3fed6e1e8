#include "selfdual/words.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "selfdual/errors.hpp"

namespace selfdual {

namespace {

// 'v' is reserved for the variable, so word text covers 21 letters.
constexpr char kVariableChar = 'v';
constexpr int kWordTextLetters = kVariableChar - 'a';

std::vector<int> parse_symbols(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    const std::string_view item = text.substr(start, end - start);
    if (item.size() != 1 || item[0] < 'a' || item[0] > kVariableChar)
      throw InputError("expected a letter a..u or 'v', got '" + std::string(item) + "'", start);
    out.push_back(item[0] == kVariableChar ? kVariable : item[0] - 'a');
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int infer_alphabet(const std::vector<int>& symbols) {
  int alphabet = 0;
  for (const int s : symbols) alphabet = std::max(alphabet, s + 1);
  return alphabet;
}

}  // namespace

VariableWord::VariableWord(int alphabet, std::vector<int> symbols) : alphabet_(alphabet), symbols_(std::move(symbols)) {
  if (std::find(symbols_.begin(), symbols_.end(), kVariable) == symbols_.end())
    throw DomainError("variable word without the variable");
  for (const int s : symbols_)
    if (s != kVariable && (s < 0 || s >= alphabet_)) throw DomainError("letter outside alphabet");
}

const char* to_string(WordKind kind) {
  switch (kind) {
    case WordKind::constant_word: return "constant_word";
    case WordKind::variable_word: return "variable_word";
    case WordKind::left_variable_word: return "left_variable_word";
  }
  return "?";
}

WordKind classify(std::span<const int> symbols) {
  if (std::find(symbols.begin(), symbols.end(), kVariable) == symbols.end()) return WordKind::constant_word;
  return symbols.front() == kVariable ? WordKind::left_variable_word : WordKind::variable_word;
}

Word substitute(const VariableWord& x, int letter) {
  if (letter < 0 || letter >= x.alphabet()) throw DomainError("substituted letter outside alphabet");
  Word out{x.alphabet(), {}};
  out.letters.reserve(static_cast<std::size_t>(x.length()));
  for (const int s : x.symbols()) out.letters.push_back(s == kVariable ? letter : s);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word recombine(const Word& w0, std::span<const VariableWord> xs, const Decomposition& d) {
  Word out = w0;
  for (std::size_t i = 0; i < d.indices.size(); ++i)
    out = concat(out, substitute(xs[static_cast<std::size_t>(d.indices[i])], d.letters[i]));
  return out;
}

std::optional<Decomposition> span_membership(const Word& w, const Word& w0, std::span<const VariableWord> xs) {
  if (w.length() < w0.length() || !std::equal(w0.letters.begin(), w0.letters.end(), w.letters.begin()))
    return std::nullopt;

  // Each factor contains v, so the substituted letter is read off w and the
  // search only branches on indices. Depth-first in increasing index order
  // visits index sequences lexicographically.
  const int n = w.length();
  std::map<std::pair<int, int>, bool> dead;  // (position, next index) with no completion
  Decomposition current;

  auto match = [&](const VariableWord& x, int pos) -> std::optional<int> {
    if (pos + x.length() > n) return std::nullopt;
    std::optional<int> letter;
    for (int i = 0; i < x.length(); ++i) {
      const int have = w.letters[static_cast<std::size_t>(pos + i)];
      const int s = x.symbols()[static_cast<std::size_t>(i)];
      if (s == kVariable) {
        if (letter && *letter != have) return std::nullopt;
        letter = have;
      } else if (s != have) {
        return std::nullopt;
      }
    }
    return letter;
  };

  auto search = [&](auto&& self, int pos, int next) -> bool {
    if (pos == n) return true;
    if (dead.contains({pos, next})) return false;
    for (int j = next; j < static_cast<int>(xs.size()); ++j) {
      const auto letter = match(xs[static_cast<std::size_t>(j)], pos);
      if (!letter) continue;
      current.indices.push_back(j);
      current.letters.push_back(*letter);
      if (self(self, pos + xs[static_cast<std::size_t>(j)].length(), j + 1)) return true;
      current.indices.pop_back();
      current.letters.pop_back();
    }
    dead[{pos, next}] = true;
    return false;
  };

  if (!search(search, w0.length(), 0)) return std::nullopt;
  return current;
}

std::vector<CombinatorialLine> enumerate_lines(int N, int alphabet) {
  std::vector<CombinatorialLine> out;
  if (N <= 0) return out;
  // Symbols ordered v < a < b < ...; odometer over alphabet + 1 digits.
  std::vector<int> digits(static_cast<std::size_t>(N), 0);
  while (true) {
    std::vector<int> symbols;
    symbols.reserve(digits.size());
    for (const int d : digits) symbols.push_back(d == 0 ? kVariable : d - 1);
    if (classify(symbols) != WordKind::constant_word) {
      VariableWord root(alphabet, std::move(symbols));
      std::vector<Word> words;
      for (int a = 0; a < alphabet; ++a) words.push_back(substitute(root, a));
      out.push_back({std::move(root), std::move(words)});
    }
    int k = N - 1;
    while (k >= 0 && digits[static_cast<std::size_t>(k)] == alphabet) digits[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++digits[static_cast<std::size_t>(k)];
  }
  return out;
}

std::size_t word_index(const Word& w) {
  std::size_t index = 0;
  for (const int a : w.letters) index = index * static_cast<std::size_t>(w.alphabet) + static_cast<std::size_t>(a);
  return index;
}

std::vector<Word> enumerate_words(int N, int alphabet) {
  std::vector<Word> out;
  if (N < 0 || alphabet <= 0) return N == 0 ? std::vector<Word>{Word{alphabet, {}}} : out;
  std::vector<int> letters(static_cast<std::size_t>(N), 0);
  while (true) {
    out.push_back(Word{alphabet, letters});
    int k = N - 1;
    while (k >= 0 && letters[static_cast<std::size_t>(k)] == alphabet - 1) letters[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++letters[static_cast<std::size_t>(k)];
  }
  return out;
}

Word parse_word(std::string_view text, int alphabet) {
  std::vector<int> symbols = parse_symbols(text);
  if (classify(symbols) != WordKind::constant_word) throw InputError("word contains the variable 'v'");
  if (alphabet < 0) alphabet = infer_alphabet(symbols);
  for (const int s : symbols)
    if (s >= alphabet) throw DomainError("letter outside alphabet");
  return Word{alphabet, std::move(symbols)};
}

VariableWord parse_variable_word(std::string_view text, int alphabet) {
  std::vector<int> symbols = parse_symbols(text);
  if (classify(symbols) == WordKind::constant_word) throw InputError("variable word without 'v'");
  if (alphabet < 0) alphabet = infer_alphabet(symbols);
  return VariableWord(alphabet, std::move(symbols));
}

std::string format_symbols(std::span<const int> symbols) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += ',';
    if (symbols[i] == kVariable) {
      out += kVariableChar;
    } else {
      if (symbols[i] >= kWordTextLetters) throw DomainError("letter has no word text form");
      out += static_cast<char>('a' + symbols[i]);
    }
  }
  return out;
}

std::string format_word(const Word& w) { return format_symbols(w.letters); }

}  // namespace selfdual
