#include <doctest.h>

#include "properties.hpp"
#include "selfdual/approx.hpp"

using namespace selfdual;

namespace {

Connection C(const char* text, int alphabet = -1) { return parse_connection(text, alphabet); }

const ClauseResult& clause(const AxiomReport& r, const std::string& name) {
  for (const auto& c : r.clauses)
    if (c.clause == name) return c;
  throw std::out_of_range(name);
}

// Direct recheck of an A.4 answer.
bool decides(const A4Outcome& o, const Connection& t, const std::set<Connection>& O) {
  const int n = t.image();
  std::vector<Connection> u;
  for (const auto& s : segment_set(o.reduct, n + 1))
    if (segment(s, n) == t) u.push_back(s);
  if (u.empty() || u != o.approximations || !is_segment_of(t, o.reduct)) return false;
  return std::all_of(u.begin(), u.end(), [&](const Connection& s) { return O.contains(s) == o.inside; });
}

}  // namespace

TEST_SUITE("approx-axioms") {
  TEST_CASE("u_prime_n examples") {
    const auto r = u_prime_n(C("0,1,0,1,1|0,3"), 2);
    CHECK(format_tokens(r.tokens) == "0,1");
    CHECK(r.choice == std::vector<int>{0, 3});
    CHECK(r.tail_relaxed);

    const auto e = u_prime_n(C("0,1,0,1,1|0,3"), 0);
    CHECK(e.tokens.empty());
    CHECK(e.choice.empty());
    CHECK_FALSE(e.tail_relaxed);

    const auto s = u_prime_n(C("0,0,1|0,2"), 2);
    CHECK(format_tokens(s.tokens) == "0,0");
    CHECK(s.choice == std::vector<int>{0});
    CHECK_FALSE(s.tail_relaxed);

    CHECK_THROWS_AS(u_prime_n(C("0,0,1|0,2"), 4), DomainError);
  }

  TEST_CASE("u_prime_n at first occurrences is a segment") {
    for (const int a : {0, 1})
      for (const auto& c : props::universe(5, a)) {
        for (int k = 0; k <= c.image(); ++k) {
          const auto r = u_prime_n(c, c.first_occurrence(k));
          CHECK_FALSE(r.tail_relaxed);
          const Connection s = u_n(c, k);
          CHECK(r.tokens == std::vector<Token>(s.tokens().begin(), s.tokens().end()));
          CHECK(r.choice == std::vector<int>(s.choice().begin(), s.choice().end()));
        }
        for (int n = 0; n <= c.length(); ++n) {
          const auto r = u_prime_n(c, n);
          if (!r.tail_relaxed) CHECK(validate_connection(r.tokens, r.choice, a).ok());
        }
      }
  }

  TEST_CASE("axioms hold on the empty alphabet up to length 4") {
    const AxiomReport r = check_axioms(4, 0);
    for (const auto& c : r.clauses) CHECK_MESSAGE(c.passed, c.clause << ": " << c.counterexample);
    CHECK(r.all_passed());
    CHECK(r.clauses.size() == 8);
    CHECK(clause(r, "A.2(1)").note.find("{0,0|0, 0,0|1, 0,1|0,1}") != std::string::npos);
  }

  TEST_CASE("segment injectivity and coherence up to length 5") {
    const AxiomReport r = check_axioms(5, 0);
    CHECK(clause(r, "A.1(1)").passed);
    CHECK(clause(r, "A.1(2)").passed);
    CHECK(clause(r, "A.1(3)").passed);
    CHECK(r.all_passed());
  }

  TEST_CASE("reducts of the identity of F_{2,2}") {
    const auto rs = reducts(Connection::identity(2));
    CHECK(rs == std::vector<Connection>{C("0,0|0"), C("0,0|1"), C("0,1|0,1")});
  }

  TEST_CASE("guard") {
    CHECK_THROWS_AS(check_axioms(8, 2, 1000), BoundExceeded);
    CHECK_THROWS_AS(check_axioms(-1, 0), DomainError);
  }

  TEST_CASE("A.4 trivial sides") {
    const Connection base = Connection::identity(3);
    const Connection t = segment(base, 1);
    const auto all = segment_set(base, 2);
    const std::set<Connection> everything(all.begin(), all.end());
    const auto in = verify_a4_instance(base, t, everything);
    REQUIRE(in);
    CHECK(in->reduct == base);
    CHECK(in->inside);
    CHECK(decides(*in, t, everything));

    const auto out = verify_a4_instance(base, t, {});
    REQUIRE(out);
    CHECK(out->reduct == base);
    CHECK_FALSE(out->inside);
  }

  TEST_CASE("A.4 snapshot on the identity of F_{4,4}") {
    const Connection base = Connection::identity(4);
    const Connection t = segment(base, 1);
    std::set<Connection> O;
    for (const auto& s : segment_set(base, 2)) {
      const auto tk = s.tokens();
      if (tk.size() >= 2 && tk[tk.size() - 1] == tk[tk.size() - 2]) O.insert(s);
    }
    CHECK(O.size() == 10);
    const auto r = verify_a4_instance(base, t, O);
    REQUIRE(r);
    CHECK(r->reduct == C("0,1,0,0|0,1"));
    CHECK(r->inside);
    CHECK(r->approximations == std::vector<Connection>{C("0,1,0,0|0,1")});
    CHECK(decides(*r, t, O));
  }

  TEST_CASE("A.4 answers are sound") {
    const Connection base = Connection::identity(4);
    for (int n = 0; n <= 2; ++n) {
      const Connection t = segment(base, n);
      const auto pool = segment_set(base, n + 1);
      // Every O cut out by a prefix of the sorted pool.
      for (std::size_t cut = 0; cut <= pool.size(); ++cut) {
        const std::set<Connection> O(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(cut));
        const auto r = verify_a4_instance(base, t, O);
        if (r) CHECK(decides(*r, t, O));
      }
    }
  }

  TEST_CASE("A.4 input checks") {
    const Connection base = Connection::identity(3);
    CHECK_THROWS_AS(verify_a4_instance(base, segment(base, 1), {C("0|0")}), DomainError);
    CHECK_THROWS_AS(verify_a4_instance(base, C("a|", 1), {}), DomainError);
    // The base does not decide this O, so a limit of one candidate is hit.
    const Connection id4 = Connection::identity(4);
    std::set<Connection> O;
    for (const auto& s : segment_set(id4, 2)) {
      const auto tk = s.tokens();
      if (tk.size() >= 2 && tk[tk.size() - 1] == tk[tk.size() - 2]) O.insert(s);
    }
    CHECK_THROWS_AS(verify_a4_instance(id4, segment(id4, 1), O, 1), BoundExceeded);
    CHECK(verify_a4_instance(id4, segment(id4, 1), O, 0));
  }
}
