#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "selfdual/connection.hpp"

namespace selfdual {

/// Literal truncation (s restricted to n, j restricted to |im(s restricted to n)|).
/// The last kept choice value may point at or past n; tail_relaxed records that.
struct ApproximationRecord {
  int alphabet = 0;
  std::vector<Token> tokens;
  std::vector<int> choice;
  bool tail_relaxed = false;

  bool operator==(const ApproximationRecord&) const = default;
};

/// Throws DomainError when n exceeds the length.
ApproximationRecord u_prime_n(const Connection& conn, int n);

/// u_n is the segment map; alias kept for symmetry with u_prime_n.
Connection u_n(const Connection& conn, int n);

struct ClauseResult {
  std::string clause;  // "A.1(1)", ...
  bool passed = true;
  std::uint64_t instances = 0;
  std::string counterexample;  // first failing instance in connection grammar
  std::string note;
};

struct AxiomReport {
  int max_L = 0;
  int max_alphabet = 0;
  std::uint64_t elements = 0;
  std::vector<ClauseResult> clauses;

  bool all_passed() const;
};

/// Exhaustive check of A.1-A.3 on F^A_{L,K}, L <= max_L, |A| <= max_alphabet.
/// Finite approximations are the segments (r,c)[n]; cylinders range over
/// reducts of the same length. Throws BoundExceeded when the enumerated
/// universe would exceed `guard` elements.
AxiomReport check_axioms(int max_L, int max_alphabet, std::uint64_t guard = 1'000'000);

struct A4Outcome {
  Connection reduct;
  bool inside = true;  // u_{n+1}[t, reduct] is inside O (else inside the complement)
  std::vector<Connection> approximations;
};

/// Searches reducts of base (base first, then the others in sorted order) that
/// extend t as a segment for one whose nonempty set
///   { s in segment_set(reduct, n+1) : s[n] == t }
/// lies inside O or inside its complement. n is the image of t. Returns
/// nullopt when no reduct at this truncation works. Throws DomainError for a
/// member of O that is not an (n+1)-approximation, BoundExceeded when more than
/// candidate_limit candidates would be examined (0 = no limit).
std::optional<A4Outcome> verify_a4_instance(const Connection& base, const Connection& t,
                                            const std::set<Connection>& O, std::size_t candidate_limit = 0);

}  // namespace selfdual
