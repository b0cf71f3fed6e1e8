#include <doctest.h>

#include "properties.hpp"
#include "selfdual/proof_maps.hpp"

using namespace selfdual;

namespace {

Connection C(const char* text, int alphabet = -1) { return parse_connection(text, alphabet); }

}  // namespace

TEST_SUITE("proof-maps") {
  TEST_CASE("sigma examples") {
    const Connection base = C("a,0,1,1|1,2", 1);
    CHECK(sigma(parse_word("a", 1), base) == C("a,a|", 1));
    CHECK(sigma(Word{0, {}}, Connection::identity(3)) == C("|"));
    const Connection s = sigma(parse_word("a,a", 1), base);
    for (const Token t : s.tokens()) CHECK(t.is_letter());
    CHECK(s.length() == base.length());
    CHECK_THROWS_AS(sigma(parse_word("a,a,a", 1), base), DomainError);
    CHECK_THROWS_AS(sigma(parse_word("a", 1), Connection::identity(2)), DomainError);
  }

  TEST_CASE("sigma_inverse examples") {
    const Connection base = C("a,0,1,1|1,2", 1);
    CHECK(format_word(sigma_inverse(C("a,a|", 1), base)) == "a");
    CHECK(sigma_inverse(C("a|", 1), base).length() == 0);
    CHECK_THROWS_AS(sigma_inverse(C("a,a,a|", 1), base), NotInRange);
    CHECK_THROWS_AS(sigma_inverse(C("b|", 2), C("a,0,1,1|1,2", 2)), NotInRange);
    CHECK_THROWS_AS(sigma_inverse(C("0|0", 1), base), NotInRange);
  }

  TEST_CASE("sigma round trips and image") {
    for (const int a : {0, 1}) {
      const props::Tally t = props::sigma_round_trips(4, a);
      CHECK_MESSAGE(t.ok(), t.first_failure);
    }
  }

  TEST_CASE("shift examples") {
    const AlphabetShift h = AlphabetShift::h_extend(0);
    CHECK(h.map(Token::numeral(0)) == Token::letter(0));
    CHECK(h.map(Token::numeral(3)) == Token::numeral(2));
    CHECK(h.inverse_map(Token::letter(0)) == Token::numeral(0));
    const AlphabetShift hp = AlphabetShift::h_prime(2);
    CHECK(hp.map(Token::numeral(0)) == Token::letter(0));
    CHECK(hp.map(Token::numeral(1)) == Token::letter(1));
    CHECK(hp.map(Token::numeral(2)) == Token::numeral(0));
    CHECK_THROWS_AS(hp.map(Token::letter(0)), DomainError);
    CHECK(apply_shift(h, C("a,0|1", 1), false) == C("0,0,1|0,2"));
    CHECK_THROWS_AS(apply_shift(h, C("0|0"), false), DomainError);
    CHECK_THROWS_AS(apply_shift(h, C("0,0|1"), true), DomainError);
  }

  TEST_CASE("shift round trips") {
    const props::Tally t = props::shift_round_trips(4);
    CHECK_MESSAGE(t.ok(), t.first_failure);
  }

  TEST_CASE("theta round trips") {
    const props::Tally t = props::theta_round_trips(3);
    CHECK_MESSAGE(t.ok(), t.first_failure);
  }

  TEST_CASE("theta' on the identity of F_{3,3} with N = 1") {
    const Connection base = Connection::identity(3);
    const ThetaMap map = ThetaMap::claim4(base, 1);
    CHECK(map.domain_alphabet() == 1);
    CHECK(map.domain_length() == 2);
    std::set<Connection> images;
    for (int K = 0; K <= 2; ++K)
      for (const auto& x : enumerate_connections(2, K, 1)) images.insert(map.forward(x));
    std::set<Connection> expected;
    for (const auto& y : reducts(base))
      if (y.image() >= 1 && y.tokens()[0] == Token::numeral(0) && y.choice()[0] == 0) expected.insert(y);
    CHECK(images == expected);
  }

  TEST_CASE("theta domain errors") {
    CHECK_THROWS_AS(ThetaMap::claim1(C("|")), DomainError);
    CHECK_THROWS_AS(ThetaMap::claim4(C("a,0|1", 1), 1), DomainError);
    CHECK_THROWS_AS(ThetaMap::claim4(Connection::identity(1), 2), DomainError);
    const ThetaMap map = ThetaMap::claim1(Connection::identity(2));
    CHECK_THROWS_AS(map.forward(C("0,0|0", 1)), DomainError);
    CHECK_THROWS_AS(map.inverse(C("0,0|1")), NotInRange);
    CHECK(theta(C("a|", 1), Connection::identity(2), ThetaVariant::claim1, false) == C("0,0|0"));
    CHECK(theta(C("0,0|0"), Connection::identity(2), ThetaVariant::claim1, true) == C("a|", 1));
  }

  TEST_CASE("left_word_to_connection examples") {
    const std::vector<VariableWord> xs{parse_variable_word("v,b", 2), parse_variable_word("v", 2)};
    CHECK(format_tokens(left_word_to_connection(parse_word("a", 2), xs).tokens()) == "a,0,b,1");
    const std::vector<VariableWord> single{parse_variable_word("v", 0)};
    CHECK(format_tokens(left_word_to_connection(Word{0, {}}, single).tokens()) == "0");
    const std::vector<VariableWord> bad{parse_variable_word("b,v", 2)};
    CHECK_THROWS_AS(left_word_to_connection(parse_word("a", 2), bad), DomainError);
    const std::vector<VariableWord> mixed{parse_variable_word("v", 3)};
    CHECK_THROWS_AS(left_word_to_connection(parse_word("a", 2), mixed), DomainError);
  }

  TEST_CASE("transport property") {
    for (const int a : {1, 2}) {
      const props::Tally t = props::transport(a);
      CHECK_MESSAGE(t.ok(), t.first_failure);
    }
  }

  TEST_CASE("freeze_below examples") {
    CHECK(freeze_below(C("0,0,1|0,2"), 0) == C("0,0,1|0,2"));
    CHECK(freeze_below(C("0,0,1|0,2"), 1) == C("0,0,1|0,2"));
    CHECK(freeze_below(C("0,0|1"), 2) == Connection::identity(2));
    CHECK_THROWS_AS(freeze_below(C("0,0|1"), 3), DomainError);
  }

  TEST_CASE("freeze_below always yields a connection at finite size") {
    for (const int a : {0, 1})
      for (const auto& w : props::universe(5, a))
        for (int n = 0; n <= w.length(); ++n) {
          const Connection f = freeze_below(w, n);
          CHECK(validate_connection(f.tokens(), f.choice(), a).ok());
          for (int m = 0; m < n; ++m) CHECK(f.tokens()[static_cast<std::size_t>(m)] == Token::numeral(m));
        }
  }

  TEST_CASE("fuse examples") {
    const Connection c = C("0,1,0,2,1,2|0,1,3");
    const std::vector<Connection> constant{c, c, c};
    CHECK(fuse(constant) == std::vector<Connection>{segment(c, 0), segment(c, 1), segment(c, 2)});

    const Connection base = Connection::identity(6);
    const Connection e1 = compose(freeze_below(c, 1), base);
    const Connection e2 = compose(freeze_below(C("0,1,0|0,1"), 2), e1);
    const std::vector<Connection> chain{base, e1, e2};
    const auto fused = fuse(chain);
    REQUIRE(fused.size() == 3);
    CHECK(fused[1] == C("0|0"));
    CHECK(fused[2] == e2);
    CHECK(is_initial_segment(fused[1], fused[2]));

    const std::vector<Connection> broken{base, e1, C("0,0,1|1,2")};
    try {
      fuse(broken);
      FAIL("expected an incoherent chain");
    } catch (const FusionIncoherent& e) {
      CHECK(e.index() == 1);
    }
  }

  TEST_CASE("canonical projection") {
    CHECK(canonical_projection(5, 2) == C("0,1,0,0,0|0,1"));
    CHECK(canonical_projection(3, 3) == Connection::identity(3));
    CHECK(canonical_projection(3, 1) == C("0,0,0|0"));
    CHECK(canonical_projection(0, 0) == C("|"));
    CHECK_THROWS_AS(canonical_projection(3, 0), DomainError);
    CHECK_THROWS_AS(canonical_projection(2, 3), DomainError);
    for (int M = 1; M <= 4; ++M)
      for (int K = 1; K <= M; ++K)
        for (int N = M; N <= 5; ++N)
          for (const auto& r : enumerate_connections(N, M)) {
            const Connection p = compose(canonical_projection(M, K), r);
            CHECK(validate_connection(p.tokens(), p.choice(), 0).ok());
            CHECK(p.image() == K);
          }
  }
}
