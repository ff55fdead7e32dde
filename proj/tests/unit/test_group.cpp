#include <catch2/catch_amalgamated.hpp>

#include "lmg/error.hpp"
#include "lmg/group.hpp"
#include "random_elements.hpp"

using namespace lmg;
using testing_support::random_point;
using testing_support::random_word;

namespace {
  Word w(std::string_view s, int n) {
    return parse_finite_word(s, n);
  }

  Word random_y_index(std::mt19937& rng, int n, std::size_t max_len) {
    for (;;) {
      Word s = random_word(rng, n, 1, max_len);
      if (is_y_index(s)) {
        return s;
      }
    }
  }

  GroupWord random_group_word(std::mt19937& rng, int n, std::size_t len,
                              std::size_t max_len = 4) {
    GroupWord                   g(n);
    std::bernoulli_distribution coin;
    std::bernoulli_distribution pick_y(0.5);
    std::uniform_int_distribution<int> gen(0, n - 2);
    for (std::size_t k = 0; k < len; ++k) {
      YSign const s = coin(rng) ? YSign::plus() : YSign::minus();
      if (pick_y(rng)) {
        g.push_back(GroupLetter::y(random_y_index(rng, n, max_len), s));
      } else {
        g.push_back(GroupLetter::x(gen(rng), random_word(rng, n, 0, 2), s));
      }
    }
    return g;
  }

  // Agreement on a batch of random points and on the two endpoints.
  template <class A, class B>
  void same_map(A const& a, B const& b, int n, std::mt19937& rng) {
    std::vector<EvPeriodicWord> pts{zero_point(n), last_point(n)};
    for (int k = 0; k < 40; ++k) {
      pts.push_back(random_point(rng, n));
    }
    for (auto const& x : pts) {
      INFO("point " << to_string(x));
      REQUIRE(evaluate(a, x) == evaluate(b, x));
    }
  }
}  // namespace

TEST_CASE("Y(n) membership", "[group]") {
  CHECK(is_y_index(w("10", 2)));
  CHECK(is_y_index(w("30", 4)));
  CHECK(is_y_index(w("111", 4)));
  CHECK_FALSE(is_y_index(w("1", 2)));
  CHECK_FALSE(is_y_index(w("000", 3)));
  CHECK_FALSE(is_y_index(w("22", 3)));
  CHECK_FALSE(is_y_index(w("1", 3)));
  CHECK_FALSE(is_y_index(Word(3)));
  CHECK(y_index_violation(w("1", 3))->find("digit sum") != std::string::npos);
  CHECK(y_index_violation(w("00", 3))->find("power of 0") != std::string::npos);
  CHECK(y_index_violation(w("33", 4))->find("power of n-1") != std::string::npos);
  CHECK(y_index_violation(Word(4))->find("empty") != std::string::npos);
  CHECK_THROWS_AS(GroupLetter::y(w("11", 4)), DomainError);
}

TEST_CASE("group word text", "[group]") {
  auto g = parse_group_word("n=4 x0 x1[21]^-2 y[30]^3 id x2", 0);
  CHECK(g.arity() == 4);
  CHECK(g.size() == 7);
  CHECK(to_string(g) == "x0 x1[21]^-2 y[30]^3 x2");
  CHECK(parse_group_word(to_string(g), 4) == g);
  CHECK(to_string(GroupWord(3)) == "id");
  auto big = parse_group_word("y[10,1] x10[11,0]", 12);
  CHECK(to_string(big) == "y[10,1] x10[11,0]");

  CHECK_THROWS_AS(parse_group_word("x0", 0), ParseError);
  CHECK_THROWS_AS(parse_group_word("n=3 z1", 0), ParseError);
  CHECK_THROWS_AS(parse_group_word("n=3 y", 0), ParseError);
  CHECK_THROWS_AS(parse_group_word("n=3 x0^a", 0), ParseError);
  CHECK_THROWS_AS(parse_group_word("n=3 x2", 0), DomainError);
  CHECK_THROWS_AS(parse_group_word("n=3 y[1]", 0), DomainError);
  try {
    parse_group_word("n=3 x0 q", 0);
    FAIL("no throw");
  } catch (ParseError const& e) {
    CHECK(e.position() == 7);
  }
}

TEST_CASE("binary y on a finite example", "[group]") {
  GroupWord g(2, {GroupLetter::y(w("001", 2))});
  auto      z = evaluate(g, parse_point("00101101(1)*", 2));
  CHECK(z.expand(7) == w("0011001", 2));
  // y on 1... emits 11 and stays in y, so the tail of ones is fixed.
  CHECK(z == parse_point("0011001(1)*", 2));
}

TEST_CASE("calculation of a point by a weak standard form", "[group]") {
  StandardForm form(TreePair::identity(4),
                    {{w("300", 4), -1}, {w("30", 4), 1}, {w("1", 4), 1}});
  auto c = calculation_of(form, parse_point("3002(0)*", 4));
  CHECK(to_string(c) == "3 0 y 0 y' 2(0)*");
  CHECK(exponent(c) == 0);
  CHECK(resolve_point(c) == evaluate(form, parse_point("3002(0)*", 4)));
}

TEST_CASE("moves preserve the element", "[group][moves]") {
  std::mt19937 rng(11);
  int const    n = GENERATE(2, 3, 4);
  auto         top = static_cast<Letter>(n - 1);
  for (int trial = 0; trial < 40; ++trial) {
    Word const  s = random_y_index(rng, n, 4);
    GroupWord   g(n, {GroupLetter::y(s), GroupLetter::y(s, YSign::minus())});
    same_map(g, expansion_move(g, 0), n, rng);
    same_map(g, expansion_move(g, 1), n, rng);
    CHECK(cancellation_move(g, 0).size() == 0);

    // y_t x_{0[s']} with t deep enough that x is defined on it.
    Word t = s;
    t.push_back(top).push_back(0).push_back(top);
    if (is_y_index(t)) {
      GroupWord h(n, {GroupLetter::y(t), GroupLetter::x(0, s)});
      same_map(h, rearranging_move(h, 0), n, rng);
    }
    Word const other = random_y_index(rng, n, 4);
    if (independent(s, other)) {
      GroupWord h(n, {GroupLetter::y(s), GroupLetter::y(other, YSign::minus())});
      same_map(h, commuting_move(h, 0), n, rng);
    }
  }
  GroupWord bad(3, {GroupLetter::y(w("11", 3)), GroupLetter::y(w("1111", 3))});
  CHECK_THROWS_AS(commuting_move(bad, 0), DomainError);
  CHECK_THROWS_AS(cancellation_move(bad, 0), DomainError);
  GroupWord undefined(3, {GroupLetter::y(w("11", 3)), GroupLetter::x(0, w("11", 3))});
  CHECK_THROWS_AS(rearranging_move(undefined, 0), DomainError);
}

TEST_CASE("defining relations hold", "[group][relations]") {
  std::mt19937 rng(12);
  for (int n = 2; n <= 5; ++n) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) {
        auto [l, r] = conjugation_relation(i, j, n);
        same_map(l, r, n, rng);
        CHECK(normalize(l) == normalize(r));
      }
    }
    for (int trial = 0; trial < 15; ++trial) {
      Word const s = random_y_index(rng, n, 4);
      auto [l, r]  = expansion_relation(s);
      same_map(l, r, n, rng);
      CHECK(normalize(l) == normalize(r));

      Word const alpha = random_word(rng, n, 0, 3);
      auto [xl, xr]    = x_normal_form_relation(0, alpha);
      CHECK(normalize(xl) == normalize(xr));

      Word const t = random_y_index(rng, n, 5);
      if (independent(s, t)) {
        auto [cl, cr] = commuting_relation(s, t);
        CHECK(normalize(cl) == normalize(cr));
      }
      for (YSign d : {YSign::plus(), YSign::minus()}) {
        auto image = apply_prefix(GroupLetter::x(0, alpha, d).as_tree_pair(), t);
        if (image && is_y_index(*image)) {
          auto [rl, rr] = rearranging_relation(t, 0, alpha, d);
          same_map(rl, rr, n, rng);
          CHECK(normalize(rl) == normalize(rr));
        }
      }
    }
  }
}

TEST_CASE("contraction example", "[group][normal]") {
  int const    n = 4;
  StandardForm form(TreePair::identity(n),
                    standardize({{w("300", n), 1},
                                 {w("3030", n), -1},
                                 {w("3031", n), 1},
                                 {w("3033", n), 1},
                                 {w("30", n), 1}}));
  REQUIRE(is_standard(form.ys));
  auto site = find_potential_contraction(form.ys);
  REQUIRE(site);
  CHECK(site->s == w("30", n));
  CHECK(site->type == 1);
  auto after = contraction_move(form, *site);
  CHECK(after.f == invert(generator(0, w("30", n))));
  std::vector<YFactor> expected{{w("301", n), 1}, {w("30", n), 2}};
  CHECK(after.ys == expected);
  std::mt19937 rng(3);
  same_map(form, after, n, rng);
}

TEST_CASE("ER move", "[group][normal]") {
  int const            n = 3;
  std::vector<YFactor> units{{w("1111", n), 1}, {w("11", n), -1}};
  auto r = er_move(TreePair::identity(n), units, 1);
  REQUIRE(r);
  CHECK(r->ys.size() == 4);
  // x_{0[11]} is undefined on 110, so y_{110} blocks the move.
  std::vector<YFactor> blocked{{w("110", n), 1}, {w("11", n), 1}};
  CHECK_FALSE(er_move(TreePair::identity(n), blocked, 1));
}

TEST_CASE("normalization is sound and canonical", "[group][normal]") {
  std::mt19937 rng(2024);
  int const    n = GENERATE(2, 3, 4, 5);
  for (int trial = 0; trial < 60; ++trial) {
    GroupWord const g = random_group_word(rng, n, 1 + trial % 8);
    INFO("word " << to_string(g));
    StandardForm const nf = normalize(g);
    INFO("normal form " << to_string(nf));
    CHECK(is_normal_form(nf));
    same_map(g, nf, n, rng);
    CHECK(normalize(nf) == nf);
    CHECK(normalize(to_group_word(nf)) == nf);

    auto sf = standard_form(g, 3);
    CHECK(is_standard(sf.ys));
    CHECK(depth(sf.ys).value_or(3) >= 3);
    same_map(g, sf, n, rng);
  }
}

TEST_CASE("equal words have equal normal forms", "[group][normal]") {
  std::mt19937 rng(77);
  int const    n = GENERATE(2, 3, 4);
  for (int trial = 0; trial < 40; ++trial) {
    GroupWord a = random_group_word(rng, n, 4);
    GroupWord b = random_group_word(rng, n, 3);
    // a b = a (s-expansion of some y) b, and a b b^-1 a^-1 = id.
    Word const s = random_y_index(rng, n, 3);
    GroupWord  lhs = a;
    lhs.push_back(GroupLetter::y(s)).append(b);
    GroupWord rhs = a;
    rhs.append(expansion_relation(s).second).append(b);
    CHECK(normalize(lhs) == normalize(rhs));

    GroupWord id = lhs;
    id.append(lhs.inverse());
    CHECK(normalize(id).is_identity());
  }
}

TEST_CASE("group laws on normal forms", "[group][normal]") {
  std::mt19937 rng(5);
  int const    n = GENERATE(2, 3, 4);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = normalize(random_group_word(rng, n, 4));
    auto b = normalize(random_group_word(rng, n, 4));
    auto c = normalize(random_group_word(rng, n, 4));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, inverse(a)).is_identity());
    CHECK(multiply(inverse(a), a).is_identity());
    CHECK(inverse(inverse(a)) == a);
    CHECK(power(a, 3) == multiply(a, multiply(a, a)));
    CHECK(power(a, -2) == inverse(multiply(a, a)));
    CHECK(power(a, 0).is_identity());
    CHECK(equals(multiply(a, b), normalize(GroupWord(n).append(to_group_word(a))
                                               .append(to_group_word(b)))));
    same_map(multiply(a, b), GroupWord(n).append(to_group_word(a)).append(to_group_word(b)),
             n, rng);
  }
}

TEST_CASE("a vanishes on x_{0[s]} for y indices", "[group]") {
  for (int n = 2; n <= 5; ++n) {
    // Every word of length up to 4.
    std::vector<Word> level{Word(n)};
    for (int len = 1; len <= 4; ++len) {
      std::vector<Word> next;
      for (auto const& v : level) {
        for (int a = 0; a < n; ++a) {
          next.push_back(v.child(static_cast<Letter>(a)));
        }
      }
      level = next;
      for (auto const& s : level) {
        if (is_y_index(s)) {
          auto const a = abelianization_a(generator(0, s));
          CHECK(a == std::vector<long long>(static_cast<std::size_t>(n), 0));
        }
      }
    }
  }
}
