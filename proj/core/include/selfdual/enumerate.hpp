#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "selfdual/connection.hpp"

namespace selfdual {

enum class SpaceMode { connections, surjections_only, injections_only };

const char* to_string(SpaceMode mode);
/// Accepts the CLI spellings conn|surj|inj as well as the full names.
SpaceMode parse_space_mode(const std::string& text);

/// F^A_{L,K} or one of its degenerate readings (bare rigid surjections L -> K,
/// bare increasing injections K -> L).
struct SpaceSpec {
  int alphabet = 0;
  int L = 0;
  int K = 0;
  SpaceMode mode = SpaceMode::connections;

  bool operator==(const SpaceSpec&) const = default;
};

using SpaceElement = std::variant<Connection, RigidSurjection, Injection>;

/// Every element exactly once, tokens lexicographic (letters before numerals),
/// then choice values lexicographic. Throws DomainError when K > L, or when an
/// injections space is given a nonempty alphabet.
std::vector<SpaceElement> enumerate_space(const SpaceSpec& spec);

std::vector<Connection> enumerate_connections(int L, int K, int alphabet = 0);
std::vector<RigidSurjection> enumerate_surjections(int L, int K, int alphabet = 0);
std::vector<Injection> enumerate_injections(int K, int L);

/// Streaming form of enumerate_connections.
void for_each_connection(int L, int K, int alphabet, const std::function<void(const Connection&)>& visit);

/// Size of the space, computed by enumeration.
std::uint64_t space_size(const SpaceSpec& spec);

/// Stirling numbers of the second kind, S(L,K) = K S(L-1,K) + S(L-1,K-1).
std::uint64_t stirling2(int L, int K);

}  // namespace selfdual
