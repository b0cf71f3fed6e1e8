#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "selfdual/connection.hpp"
#include "selfdual/enumerate.hpp"

namespace selfdual {

// Text grammar:
//   conn  := tpart '|' ipart
//   tpart := token (',' token)* | <empty>
//   token := nat | letter          letters 'a'..'z' are alpha_0..alpha_25
//   ipart := nat (',' nat)* | <empty>

/// Comma-separated tokens. Throws InputError with the offending offset.
std::vector<Token> parse_tokens(std::string_view text);
std::vector<int> parse_naturals(std::string_view text);

struct ParsedConnection {
  std::vector<Token> tokens;
  std::vector<int> choice;
};

/// Grammar only; no invariant checks.
ParsedConnection parse_connection_text(std::string_view text);

/// Grammar plus validation. alphabet < 0 infers the smallest alphabet that
/// covers the letters used. Grammar errors throw InputError; invariant
/// failures throw InvariantViolation with the rendered report.
Connection parse_connection(std::string_view text, int alphabet = -1);

std::string format_token(Token t);
std::string format_tokens(std::span<const Token> tokens);
std::string format_naturals(std::span<const int> values);
std::string format_connection(const Connection& conn);
std::string format_element(const SpaceElement& element);

nlohmann::json to_json(const Connection& conn);
nlohmann::json to_json(const SpaceElement& element);
Connection connection_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpaceSpec& spec);
SpaceSpec space_from_json(const nlohmann::json& j);

}  // namespace selfdual
