#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "lmg/words.hpp"

using namespace lmg;

namespace {
  std::vector<Word> all_words(int n, std::size_t max_len) {
    std::vector<Word> out{Word(n)};
    std::size_t       begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t const end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (int a = 0; a < n; ++a) {
          out.push_back(out[i].child(static_cast<Letter>(a)));
        }
      }
      begin = end;
    }
    return out;
  }

  // Straight from the two cases of the definition.
  bool order_by_cases(Word const& s, Word const& t) {
    if (t.is_proper_prefix_of(s)) {
      return true;
    }
    if (s.is_prefix_of(t) || t.is_prefix_of(s)) {
      return false;
    }
    for (std::size_t i = 0;; ++i) {
      if (s[i] != t[i]) {
        return s[i] < t[i];
      }
    }
  }

  Word naive_expand(Word const& pre, Word const& per, std::size_t len) {
    Word w = pre;
    while (w.size() < len) {
      w.append(per);
    }
    return w.prefix(len);
  }

  Word random_word(std::mt19937& rng, int n, std::size_t max_len,
                   std::size_t min_len = 0) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<int>         letter(0, n - 1);
    Word                                       w(n);
    for (std::size_t k = len(rng); k > 0; --k) {
      w.push_back(static_cast<Letter>(letter(rng)));
    }
    return w;
  }
}  // namespace

TEST_CASE("prefix relation", "[words]") {
  int const n = 3;
  CHECK(prefix_relation(Word(n), Word(n, {0, 1})) == PrefixRelation::ProperPrefix);
  CHECK(prefix_relation(Word(n, {0, 1}), Word(n, {0, 1})) == PrefixRelation::Equal);
  CHECK(prefix_relation(Word(n, {0, 2}), Word(n, {0, 1})) == PrefixRelation::Independent);
  CHECK(prefix_relation(Word(n, {0, 1, 1}), Word(n, {0, 1})) == PrefixRelation::Extends);
  CHECK_THROWS_AS(prefix_relation(Word(3), Word(4)), DomainError);
}

TEST_CASE("word order examples", "[words]") {
  int const n = 3;
  CHECK(word_lt(Word(n, {0, 1}), Word(n, {0})));
  CHECK(word_lt(Word(n, {0}), Word(n, {1})));
  CHECK_FALSE(word_lt(Word(n, {1}), Word(n, {0, 1})));
  CHECK_THROWS_AS(word_lt(Word(n, {1}), Word(n, {1})), DomainError);
  CHECK_FALSE(word_lt_or_false(Word(n, {1}), Word(n, {1})));
}

TEST_CASE("word order is a strict total order", "[words][property]") {
  for (int n = 2; n <= 4; ++n) {
    auto const words = all_words(n, n == 4 ? 3 : 4);
    for (auto const& s : words) {
      for (auto const& t : words) {
        if (s == t) {
          continue;
        }
        bool const st = word_lt(s, t);
        REQUIRE(st == order_by_cases(s, t));
        REQUIRE(st != word_lt(t, s));
        REQUIRE((prefix_relation(s, t) == PrefixRelation::Independent)
                == (prefix_relation(t, s) == PrefixRelation::Independent));
      }
    }
    // transitivity on a sample of triples
    std::mt19937 rng(7 + n);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int k = 0; k < 20000; ++k) {
      auto const& a = words[pick(rng)];
      auto const& b = words[pick(rng)];
      auto const& c = words[pick(rng)];
      if (a == b || b == c || a == c) {
        continue;
      }
      if (word_lt(a, b) && word_lt(b, c)) {
        REQUIRE(word_lt(a, c));
      }
    }
  }
}

TEST_CASE("digit sums", "[words]") {
  CHECK(digit_sum_mod(Word(4), 3) == 0);
  CHECK(digit_sum_mod(Word(4, {3, 0}), 3) == 0);
  CHECK(digit_sum_mod(Word(4, {2, 1}), 3) == 0);
  CHECK(digit_sum_mod(Word(4, {2, 2}), 3) == 1);
}

TEST_CASE("canonical eventually periodic words", "[words]") {
  auto const a = canonicalize_ep(Word(2, {0}), Word(2, {1, 1}));
  CHECK(a.preperiod() == Word(2, {0}));
  CHECK(a.period() == Word(2, {1}));

  auto const b = canonicalize_ep(Word(2, {0, 1}), Word(2, {0}));
  CHECK(b.preperiod() == Word(2, {0, 1}));
  CHECK(b.period() == Word(2, {0}));
  CHECK(b.expand(32) == Word(2, {0, 1}) + Word(2, Word::storage_type(30, 0)));

  auto const c = canonicalize_ep(Word(2), Word(2, {0, 1}));
  CHECK(c.preperiod().empty());
  CHECK(c.period() == Word(2, {0, 1}));

  // rotation absorbs the preperiod
  auto const d = canonicalize_ep(Word(3, {2, 1, 0}), Word(3, {1, 0}));
  CHECK(d.preperiod() == Word(3, {2}));
  CHECK(d.period() == Word(3, {1, 0}));

  CHECK_THROWS_AS(canonicalize_ep(Word(3), Word(3)), DomainError);
}

TEST_CASE("canonical form is decided by expansions", "[words][property]") {
  std::mt19937 rng(11);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 3000; ++trial) {
      Word const pre1 = random_word(rng, n, 4);
      Word const per1 = random_word(rng, n, 3, 1);
      Word const pre2 = random_word(rng, n, 4);
      Word const per2 = random_word(rng, n, 3, 1);
      auto const x = canonicalize_ep(pre1, per1);
      auto const y = canonicalize_ep(pre2, per2);
      REQUIRE(canonicalize_ep(x.preperiod(), x.period()) == x);
      std::size_t const horizon
          = 4 * (pre1.size() + per1.size() + pre2.size() + per2.size());
      REQUIRE(x.expand(horizon) == naive_expand(pre1, per1, horizon));
      bool const same = x.expand(horizon) == y.expand(horizon);
      REQUIRE(same == (x == y));
      if (!same) {
        Word const ex = x.expand(64);
        Word const ey = y.expand(64);
        if (ex != ey) {
          REQUIRE(ep_point_lt(x, y) == (ex.letters() < ey.letters()));
        }
      }
    }
  }
}

TEST_CASE("point order examples", "[words]") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(ep_point_lt(zero_point(n), last_point(n)));
    Letter const top = static_cast<Letter>(n - 1);
    CHECK(ep_point_lt(EvPeriodicWord(Word(n, {0}), Word(n, {top})),
                      EvPeriodicWord(Word(n, {top}), Word(n, {0}))));
    CHECK_THROWS_AS(ep_point_lt(zero_point(n), zero_point(n)), DomainError);
  }
  CHECK_FALSE(ep_point_lt(canonicalize_ep(Word(2, {0}), Word(2, {1, 0})),
                          canonicalize_ep(Word(2, {0, 1}), Word(2, {0}))));
}

TEST_CASE("word and point text", "[words]") {
  CHECK(to_string(Word(4, {3, 0, 1})) == "301");
  CHECK(to_string(Word(4)) == "e");
  CHECK(parse_finite_word("301", 4) == Word(4, {3, 0, 1}));
  CHECK(parse_finite_word("e", 4) == Word(4));
  CHECK(parse_finite_word("[10,3,0]", 12) == Word(12, {10, 3, 0}));
  CHECK(to_string(Word(12, {10, 3, 0})) == "[10,3,0]");
  CHECK_THROWS_AS(parse_finite_word("34", 4), ParseError);
  CHECK_THROWS_AS(parse_finite_word("3a", 4), ParseError);

  auto const x = parse_point("30(12)*", 4);
  CHECK(x.preperiod() == Word(4, {3, 0}));
  CHECK(x.period() == Word(4, {1, 2}));
  CHECK(to_string(x) == "30(12)*");
  CHECK(to_string(parse_point("[10](0,11)*", 12)) == "[10](0,11)*");
  CHECK(parse_point("0(00)*", 3) == zero_point(3));
  CHECK_THROWS_AS(parse_point("30()*", 4), ParseError);
  CHECK_THROWS_AS(parse_point("30(12)", 4), ParseError);
}
