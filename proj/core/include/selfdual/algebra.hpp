#pragma once

#include <optional>
#include <vector>

#include "selfdual/connection.hpp"

namespace selfdual {

/// (s,j).(r,c) = (s o r, c o j). outer is in F^A_{L,K}, inner in F^A_{M,L};
/// the result is in F^A_{M,K}. Throws DomainError on a shape or alphabet mismatch.
Connection compose(const Connection& outer, const Connection& inner);

/// outer o inner for bare rigid surjections (inner: M -> L, outer: L -> K).
RigidSurjection compose(const RigidSurjection& outer, const RigidSurjection& inner);

/// outer o inner for increasing injections (inner: K -> L, outer: L -> M).
Injection compose(const Injection& outer, const Injection& inner);

/// (r,c)[n] = (r restricted to E_n, c restricted to n), with E_K = L.
Connection segment(const Connection& conn, int n);

/// Prefix relation on both coordinates (Definition-1 initial segments).
bool is_initial_segment(const Connection& small, const Connection& big);

/// True when small == big[n] for some n, the relation used between finite
/// approximations.
bool is_segment_of(const Connection& small, const Connection& big);

/// The unique (r,c) with candidate = (r,c).base, if any. Both must have the
/// same alphabet and length (DomainError otherwise).
std::optional<Connection> reduct_witness(const Connection& candidate, const Connection& base);

inline bool is_reduct(const Connection& candidate, const Connection& base) {
  return candidate.alphabet_size() == base.alphabet_size() && candidate.length() == base.length() &&
         reduct_witness(candidate, base).has_value();
}

/// Every reduct of base, i.e. w.base for w in F^A_{M,K'} with K' <= M, sorted.
std::vector<Connection> reducts(const Connection& base);

/// {((r1,c1).base)[n] : (r1,c1) in F^A_{M,M'}, n <= M' <= M}, sorted and deduplicated.
std::vector<Connection> segment_set(const Connection& base, int n);

/// Pairs a rigid surjection with the least valid choice (c(k) = E_k).
Connection with_least_choice(const RigidSurjection& surj);

}  // namespace selfdual
