#include "selfdual/text.hpp"

#include <charconv>

#include "selfdual/errors.hpp"

namespace selfdual {

namespace {

constexpr int kTextLetters = 26;

template <class Item, class ParseItem>
std::vector<Item> parse_list(std::string_view text, std::size_t base_offset, ParseItem parse_item) {
  std::vector<Item> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_item(text.substr(start, end - start), base_offset + start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int parse_nat(std::string_view item, std::size_t offset) {
  if (item.empty()) throw InputError("empty item", offset);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
  if (ec != std::errc() || ptr != item.data() + item.size() || value < 0 || item.front() == '+')
    throw InputError("expected natural number, got '" + std::string(item) + "'", offset);
  return value;
}

Token parse_token(std::string_view item, std::size_t offset) {
  if (item.size() == 1 && item[0] >= 'a' && item[0] <= 'z') return Token::letter(item[0] - 'a');
  return Token::numeral(parse_nat(item, offset));
}

}  // namespace

std::vector<Token> parse_tokens(std::string_view text) { return parse_list<Token>(text, 0, parse_token); }

std::vector<int> parse_naturals(std::string_view text) { return parse_list<int>(text, 0, parse_nat); }

ParsedConnection parse_connection_text(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) throw InputError("missing '|' separator", text.size());
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw InputError("unexpected second '|'", text.find('|', bar + 1));
  ParsedConnection out;
  out.tokens = parse_list<Token>(text.substr(0, bar), 0, parse_token);
  out.choice = parse_list<int>(text.substr(bar + 1), bar + 1, parse_nat);
  return out;
}

Connection parse_connection(std::string_view text, int alphabet) {
  ParsedConnection parsed = parse_connection_text(text);
  if (alphabet < 0) {
    alphabet = 0;
    for (const Token t : parsed.tokens)
      if (t.is_letter()) alphabet = std::max(alphabet, t.value() + 1);
  }
  return Connection::make(alphabet, std::move(parsed.tokens), std::move(parsed.choice));
}

std::string format_token(Token t) {
  if (t.is_letter()) {
    if (t.value() >= kTextLetters) throw DomainError("letter index beyond 'z' has no text form");
    return std::string(1, static_cast<char>('a' + t.value()));
  }
  return std::to_string(t.value());
}

std::string format_tokens(std::span<const Token> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ',';
    out += format_token(tokens[i]);
  }
  return out;
}

std::string format_naturals(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_connection(const Connection& conn) {
  return format_tokens(conn.tokens()) + "|" + format_naturals(conn.choice());
}

std::string format_element(const SpaceElement& element) {
  if (const auto* c = std::get_if<Connection>(&element)) return format_connection(*c);
  if (const auto* s = std::get_if<RigidSurjection>(&element)) return format_tokens(s->tokens());
  return "|" + format_naturals(std::get<Injection>(element).values());
}

nlohmann::json to_json(const Connection& conn) {
  nlohmann::json t = nlohmann::json::array();
  for (const Token tok : conn.tokens()) t.push_back(format_token(tok));
  return {{"alphabet", conn.alphabet_size()},
          {"t", std::move(t)},
          {"i", std::vector<int>(conn.choice().begin(), conn.choice().end())}};
}

nlohmann::json to_json(const SpaceElement& element) {
  if (const auto* c = std::get_if<Connection>(&element)) return to_json(*c);
  if (const auto* s = std::get_if<RigidSurjection>(&element)) {
    nlohmann::json t = nlohmann::json::array();
    for (const Token tok : s->tokens()) t.push_back(format_token(tok));
    return {{"alphabet", s->alphabet_size()}, {"t", std::move(t)}};
  }
  const auto& j = std::get<Injection>(element);
  return {{"i", std::vector<int>(j.values().begin(), j.values().end())}, {"L", j.codomain()}};
}

Connection connection_from_json(const nlohmann::json& j) {
  try {
    const int alphabet = j.at("alphabet").get<int>();
    std::vector<Token> tokens;
    std::size_t pos = 0;
    for (const auto& item : j.at("t")) {
      tokens.push_back(parse_token(item.get<std::string>(), pos));
      ++pos;
    }
    return Connection::make(alphabet, std::move(tokens), j.at("i").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed connection JSON: ") + e.what());
  }
}

nlohmann::json to_json(const SpaceSpec& spec) {
  return {{"alphabet", spec.alphabet}, {"L", spec.L}, {"K", spec.K}, {"mode", to_string(spec.mode)}};
}

SpaceSpec space_from_json(const nlohmann::json& j) {
  try {
    SpaceSpec spec;
    spec.alphabet = j.value("alphabet", 0);
    spec.L = j.at("L").get<int>();
    spec.K = j.at("K").get<int>();
    spec.mode = parse_space_mode(j.value("mode", std::string("conn")));
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed space JSON: ") + e.what());
  }
}

}  // namespace selfdual
