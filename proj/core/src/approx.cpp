#include "selfdual/approx.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "selfdual/algebra.hpp"
#include "selfdual/enumerate.hpp"
#include "selfdual/errors.hpp"
#include "selfdual/text.hpp"

namespace selfdual {

ApproximationRecord u_prime_n(const Connection& conn, int n) {
  if (n < 0 || n > conn.length()) throw DomainError("u_prime_n: n exceeds length");
  ApproximationRecord rec;
  rec.alphabet = conn.alphabet_size();
  rec.tokens.assign(conn.tokens().begin(), conn.tokens().begin() + n);
  int image = 0;
  for (const Token t : rec.tokens)
    if (t.is_numeral()) image = std::max(image, t.value() + 1);
  rec.choice.assign(conn.choice().begin(), conn.choice().begin() + image);
  rec.tail_relaxed = image > 0 && rec.choice.back() >= n;
  return rec;
}

Connection u_n(const Connection& conn, int n) { return segment(conn, n); }

bool AxiomReport::all_passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
}

namespace {

// All of F^A_{L,K} for L <= max_L over one alphabet, with segment and reduct
// tables expressed as indices into `elems`.
struct Universe {
  int alphabet = 0;
  std::vector<Connection> elems;
  std::map<Connection, int> index;
  std::vector<std::vector<int>> segs;     // segs[x][n] = x[n]
  std::vector<std::vector<int>> reducts;  // sorted; same length, any image <= image(x)
  std::vector<std::vector<int>> by_length;

  bool is_seg(int t, int x) const {
    const auto& s = segs[static_cast<std::size_t>(x)];
    return std::find(s.begin(), s.end(), t) != s.end();
  }
  bool fin(int a, int b) const {
    const auto& r = reducts[static_cast<std::size_t>(b)];
    return std::binary_search(r.begin(), r.end(), a);
  }
  // [t, x]: reducts of x that extend t as a segment.
  std::vector<int> cylinder(int t, int x) const {
    std::vector<int> out;
    for (const int z : reducts[static_cast<std::size_t>(x)])
      if (is_seg(t, z)) out.push_back(z);
    return out;
  }
  const Connection& at(int i) const { return elems[static_cast<std::size_t>(i)]; }
};

Universe build_universe(int max_L, int alphabet) {
  Universe u;
  u.alphabet = alphabet;
  u.by_length.resize(static_cast<std::size_t>(max_L) + 1);
  for (int L = 0; L <= max_L; ++L)
    for (int K = 0; K <= L; ++K)
      for_each_connection(L, K, alphabet, [&](const Connection& c) {
        const int i = static_cast<int>(u.elems.size());
        u.index.emplace(c, i);
        u.elems.push_back(c);
        u.by_length[static_cast<std::size_t>(L)].push_back(i);
      });
  u.segs.resize(u.elems.size());
  u.reducts.resize(u.elems.size());
  for (std::size_t i = 0; i < u.elems.size(); ++i) {
    const Connection& x = u.elems[i];
    for (int n = 0; n <= x.image(); ++n) u.segs[i].push_back(u.index.at(segment(x, n)));
    for (const Connection& r : reducts(x)) u.reducts[i].push_back(u.index.at(r));
    std::sort(u.reducts[i].begin(), u.reducts[i].end());
  }
  return u;
}

class ClauseRunner {
 public:
  explicit ClauseRunner(std::string name) { result_.clause = std::move(name); }

  // Counts one instance; keeps the first failure.
  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.instances;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }
  ClauseResult& result() { return result_; }

 private:
  ClauseResult result_;
};

std::string fmt(const Universe& u, int i) { return format_connection(u.at(i)); }

void run_a1(const Universe& u, ClauseRunner& a11, ClauseRunner& a12, ClauseRunner& a13) {
  const int n_elems = static_cast<int>(u.elems.size());
  for (int x = 0; x < n_elems; ++x) {
    const Connection& seg0 = u.at(u.segs[static_cast<std::size_t>(x)][0]);
    const bool letters_only = seg0.image() == 0 &&
                              std::all_of(seg0.tokens().begin(), seg0.tokens().end(), [](Token t) { return t.is_letter(); });
    a11.check(u.alphabet == 0 ? seg0.length() == 0 && seg0.image() == 0 : letters_only,
              [&] { return fmt(u, x) + " has u_0 = " + format_connection(seg0); });
  }

  // Distinct elements of one F_{L,K} differ in some segment.
  std::map<std::vector<int>, int> seen;
  for (int x = 0; x < n_elems; ++x) {
    std::vector<int> key = u.segs[static_cast<std::size_t>(x)];
    key.push_back(u.at(x).length());
    const auto [it, fresh] = seen.emplace(key, x);
    a12.check(fresh, [&] { return fmt(u, x) + " and " + fmt(u, it->second) + " share every segment"; });
  }

  // u_n(x) = u_m(y) forces n = m and equal lower segments.
  std::map<int, std::pair<int, int>> first_seen;  // segment -> (element, n)
  for (int x = 0; x < n_elems; ++x) {
    const auto& sx = u.segs[static_cast<std::size_t>(x)];
    for (int n = 0; n < static_cast<int>(sx.size()); ++n) {
      const auto [it, fresh] = first_seen.emplace(sx[static_cast<std::size_t>(n)], std::make_pair(x, n));
      if (fresh) continue;
      const auto [y, m] = it->second;
      const auto& sy = u.segs[static_cast<std::size_t>(y)];
      const bool ok = n == m && std::equal(sx.begin(), sx.begin() + n, sy.begin());
      a13.check(ok, [&] {
        return "u_" + std::to_string(n) + "(" + fmt(u, x) + ") = u_" + std::to_string(m) + "(" + fmt(u, y) + ")";
      });
    }
  }
}

void run_a2(const Universe& u, ClauseRunner& a21, ClauseRunner& a22, ClauseRunner& a23, std::string& listing) {
  const int n_elems = static_cast<int>(u.elems.size());
  for (int t = 0; t < n_elems; ++t) {
    const Connection& tc = u.at(t);
    // Route 1: solve for a witness against every same-length element.
    std::vector<int> by_witness;
    for (const int x : u.by_length[static_cast<std::size_t>(tc.length())])
      if (u.at(x).image() <= tc.image() && reduct_witness(u.at(x), tc)) by_witness.push_back(x);
    // Route 2: compose every F_{M,K'} element with t (the precomputed table).
    const auto& by_compose = u.reducts[static_cast<std::size_t>(t)];
    a21.check(by_witness == by_compose, [&] { return fmt(u, t) + ": witness and composition routes disagree"; });
    if (u.alphabet == 0 && tc == Connection::identity(2)) {
      listing = "{";
      for (std::size_t i = 0; i < by_compose.size(); ++i)
        listing += (i ? ", " : "") + fmt(u, by_compose[i]);
      listing += "}";
    }
  }

  for (std::size_t L = 0; L < u.by_length.size(); ++L) {
    for (const int x : u.by_length[L]) {
      for (const int y : u.by_length[L]) {
        const bool lhs = u.fin(x, y);
        bool rhs = true;
        for (const int xs : u.segs[static_cast<std::size_t>(x)]) {
          const auto& ys = u.segs[static_cast<std::size_t>(y)];
          rhs = rhs && std::any_of(ys.begin(), ys.end(), [&](int s) { return u.fin(xs, s); });
        }
        a22.check(lhs == rhs, [&] {
          return fmt(u, x) + " vs " + fmt(u, y) + (lhs ? ": reduct but some segment unmatched" : ": not a reduct yet every segment matched");
        });
      }
    }
  }

  // t' segment of t, t <=_fin t''  =>  some segment of t'' has t' as a reduct.
  for (int t = 0; t < n_elems; ++t) {
    for (const int t2 : u.by_length[static_cast<std::size_t>(u.at(t).length())]) {
      if (!u.fin(t, t2)) continue;
      for (const int t1 : u.segs[static_cast<std::size_t>(t)]) {
        const auto& s2 = u.segs[static_cast<std::size_t>(t2)];
        const bool ok = std::any_of(s2.begin(), s2.end(), [&](int s) { return u.fin(t1, s); });
        a23.check(ok, [&] { return "t'=" + fmt(u, t1) + " t=" + fmt(u, t) + " t''=" + fmt(u, t2); });
      }
    }
  }
}

void run_a3(const Universe& u, ClauseRunner& a31, ClauseRunner& a32) {
  const int n_elems = static_cast<int>(u.elems.size());
  for (int base = 0; base < n_elems; ++base) {
    const auto& below = u.reducts[static_cast<std::size_t>(base)];
    std::vector<int> approximations;
    for (const int x : below)
      for (const int s : u.segs[static_cast<std::size_t>(x)]) approximations.push_back(s);
    std::sort(approximations.begin(), approximations.end());
    approximations.erase(std::unique(approximations.begin(), approximations.end()), approximations.end());

    for (const int t : approximations) {
      const std::vector<int> cyl = u.cylinder(t, base);
      for (const int x : cyl)
        a31.check(!u.cylinder(t, x).empty(), [&] { return "t=" + fmt(u, t) + " (r,c)=" + fmt(u, base) + " (r',c')=" + fmt(u, x); });
    }

    for (const int r1 : below) {
      for (const int t : approximations) {
        const std::vector<int> target = u.cylinder(t, r1);
        if (target.empty()) continue;
        bool ok = false;
        for (const int r2 : u.cylinder(t, base)) {
          const std::vector<int> inner = u.cylinder(t, r2);
          if (!inner.empty() && std::includes(target.begin(), target.end(), inner.begin(), inner.end())) {
            ok = true;
            break;
          }
        }
        a32.check(ok, [&] { return "t=" + fmt(u, t) + " (r,c)=" + fmt(u, base) + " (r',c')=" + fmt(u, r1); });
      }
    }
  }
}

}  // namespace

AxiomReport check_axioms(int max_L, int max_alphabet, std::uint64_t guard) {
  if (max_L < 0 || max_alphabet < 0) throw DomainError("check_axioms: negative bound");
  AxiomReport report;
  report.max_L = max_L;
  report.max_alphabet = max_alphabet;
  for (int a = 0; a <= max_alphabet; ++a)
    for (int L = 0; L <= max_L; ++L)
      for (int K = 0; K <= L; ++K) {
        report.elements += space_size(SpaceSpec{a, L, K, SpaceMode::connections});
        if (report.elements > guard)
          throw BoundExceeded("check_axioms: more than " + std::to_string(guard) + " elements to enumerate");
      }

  ClauseRunner a11("A.1(1)"), a12("A.1(2)"), a13("A.1(3)"), a21("A.2(1)"), a22("A.2(2)"), a23("A.2(3)"),
      a31("A.3(1)"), a32("A.3(2)");
  std::string listing;
  for (int a = 0; a <= max_alphabet; ++a) {
    const Universe u = build_universe(max_L, a);
    run_a1(u, a11, a12, a13);
    run_a2(u, a21, a22, a23, listing);
    run_a3(u, a31, a32);
  }
  a11.result().note = "u_0 is empty over the empty alphabet, letters only otherwise";
  a12.result().note = "distinct elements of one F_{L,K} differ in some segment";
  a13.result().note = "equal segments have equal index and equal lower segments";
  a21.result().note = "reduct sets agree via witness solving and via composition";
  if (!listing.empty()) a21.result().note += "; reducts of 0,1|0,1: " + listing;
  a22.result().note = "x <= y iff every segment of x is <=_fin some segment of y";
  a23.result().note = "amalgamation over segments";
  a31.result().note = "nonempty cylinders stay nonempty below their members";
  a32.result().note = "cylinder refinement inside [t,(r,c)]";
  for (auto* r : {&a11, &a12, &a13, &a21, &a22, &a23, &a31, &a32}) report.clauses.push_back(r->result());
  return report;
}

std::optional<A4Outcome> verify_a4_instance(const Connection& base, const Connection& t, const std::set<Connection>& O,
                                            std::size_t candidate_limit) {
  const int n = t.image();
  if (t.alphabet_size() != base.alphabet_size()) throw DomainError("verify_a4_instance: alphabet mismatch");
  for (const Connection& o : O)
    if (o.alphabet_size() != base.alphabet_size() || o.image() != n + 1)
      throw DomainError("verify_a4_instance: " + format_connection(o) + " is not an (n+1)-approximation");

  std::vector<Connection> candidates = reducts(base);
  std::erase(candidates, base);
  candidates.insert(candidates.begin(), base);

  std::size_t examined = 0;
  for (const Connection& x : candidates) {
    if (x.image() < n + 1 || segment(x, n) != t) continue;
    if (candidate_limit != 0 && ++examined > candidate_limit)
      throw BoundExceeded("verify_a4_instance: candidate limit reached");
    std::vector<Connection> approximations;
    for (const Connection& s : segment_set(x, n + 1))
      if (segment(s, n) == t) approximations.push_back(s);
    if (approximations.empty()) continue;
    const bool inside = std::all_of(approximations.begin(), approximations.end(),
                                    [&](const Connection& s) { return O.contains(s); });
    const bool outside = std::none_of(approximations.begin(), approximations.end(),
                                      [&](const Connection& s) { return O.contains(s); });
    if (inside || outside) return A4Outcome{x, inside, std::move(approximations)};
  }
  return std::nullopt;
}

}  // namespace selfdual
