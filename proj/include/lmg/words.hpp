#pragma once

// Finite and eventually periodic words over the alphabet {0, ..., n-1}, the
// prefix relations between them and the order used by standard forms.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include "lmg/error.hpp"

namespace lmg {

  using Letter = std::uint8_t;

  inline constexpr int kMinArity = 2;
  inline constexpr int kMaxArity = 256;

  // The letter set {0, ..., n-1}.
  class Alphabet {
   public:
    explicit Alphabet(int n);

    int arity() const noexcept {
      return _n;
    }
    Letter last() const noexcept {
      return static_cast<Letter>(_n - 1);
    }
    bool contains(int letter) const noexcept {
      return letter >= 0 && letter < _n;
    }
    // Letters strictly between 0 and n-1.
    bool is_middle(Letter a) const noexcept {
      return a != 0 && a != last();
    }
    bool operator==(Alphabet const&) const = default;

   private:
    int _n;
  };

  // Throws DomainError unless 2 <= n <= kMaxArity.
  void validate_arity(int n);

  // A finite word; every letter is < arity. The empty word is the root of the
  // n-ary tree.
  class Word {
   public:
    using storage_type = std::basic_string<Letter>;

    explicit Word(int arity);
    Word(int arity, std::initializer_list<int> letters);
    Word(int arity, storage_type letters);

    int arity() const noexcept {
      return _arity;
    }
    Alphabet alphabet() const {
      return Alphabet(_arity);
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const noexcept {
      return _letters[i];
    }
    Letter back() const noexcept {
      return _letters.back();
    }
    storage_type const& letters() const noexcept {
      return _letters;
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }

    Word& push_back(Letter a);
    Word& append(Word const& other);
    Word prefix(std::size_t k) const;
    Word suffix(std::size_t from) const;
    Word child(Letter a) const {
      Word w(*this);
      return w.push_back(a);
    }

    // s.is_prefix_of(t) iff s is a (not necessarily proper) prefix of t.
    bool is_prefix_of(Word const& t) const noexcept;
    bool is_proper_prefix_of(Word const& t) const noexcept {
      return size() < t.size() && is_prefix_of(t);
    }
    // True iff every letter is 0 or n-1.
    bool is_extremal() const noexcept;
    // True iff the word is a^k for some k >= 1.
    bool is_power_of(Letter a) const noexcept;

    friend Word operator+(Word lhs, Word const& rhs) {
      return lhs.append(rhs);
    }

    // Storage order: arity first, then plain lexicographic order on letters.
    // For the order on y-indices use word_lt.
    friend bool operator==(Word const&, Word const&) = default;
    friend std::strong_ordering operator<=>(Word const& a, Word const& b) {
      if (auto c = a._arity <=> b._arity; c != 0) {
        return c;
      }
      return a._letters.compare(b._letters) <=> 0;
    }

   private:
    int          _arity;
    storage_type _letters;
  };

  enum class PrefixRelation { ProperPrefix, Equal, Extends, Independent };

  // How s relates to t: ProperPrefix means s is a proper prefix of t, Extends
  // means t is a proper prefix of s.
  PrefixRelation prefix_relation(Word const& s, Word const& t);

  inline bool independent(Word const& s, Word const& t) {
    return prefix_relation(s, t) == PrefixRelation::Independent;
  }

  // The strict order on finite words used for standard forms: s < t iff t is a
  // proper prefix of s, or s and t are independent and s is smaller at the
  // first differing letter. Throws DomainError if s == t.
  bool word_lt(Word const& s, Word const& t);

  // Same order, but returns false on equal words. Suitable for sorting.
  bool word_lt_or_false(Word const& s, Word const& t) noexcept;

  // (sum of letters) mod m.
  std::size_t digit_sum_mod(Word const& s, std::size_t m);

  // An eventually periodic point pre.per.per... of the n-ary Cantor space.
  // Always canonical: the period is primitive and the preperiod is as short as
  // possible, so two values denote the same point iff they compare equal.
  class EvPeriodicWord {
   public:
    EvPeriodicWord(Word preperiod, Word period);

    int arity() const noexcept {
      return _pre.arity();
    }
    Word const& preperiod() const noexcept {
      return _pre;
    }
    Word const& period() const noexcept {
      return _per;
    }

    Letter letter_at(std::size_t i) const noexcept;
    // The first len letters.
    Word expand(std::size_t len) const;
    bool starts_with(Word const& s) const;
    // The point with the first k letters removed.
    EvPeriodicWord drop(std::size_t k) const;
    // s followed by this point.
    EvPeriodicWord prepend(Word const& s) const;
    // True iff every letter of the infinite word is 0 or n-1.
    bool is_extremal() const noexcept {
      return _pre.is_extremal() && _per.is_extremal();
    }

    friend bool operator==(EvPeriodicWord const&,
                           EvPeriodicWord const&) = default;
    friend auto operator<=>(EvPeriodicWord const&, EvPeriodicWord const&)
        = default;

   private:
    Word _pre;
    Word _per;
  };

  // Canonical form of pre.per.per...; throws DomainError on an empty period.
  EvPeriodicWord canonicalize_ep(Word const& pre, Word const& per);

  // Lexicographic order on points; throws DomainError on equal points.
  bool ep_point_lt(EvPeriodicWord const& x, EvPeriodicWord const& y);

  // 0̄ and (n-1)̄.
  EvPeriodicWord zero_point(int n);
  EvPeriodicWord last_point(int n);

  ////////////////////////////////////////////////////////////////////////
  // Text syntax
  ////////////////////////////////////////////////////////////////////////

  // For n <= 10 letters are decimal digits ("3012"); otherwise a bracketed,
  // comma separated list ("[10,3,0]"). The empty word is "" or "e".
  std::string to_string(Word const& w);
  Word        parse_finite_word(std::string_view text, int n);

  // Points are written pre(per)*, e.g. "30(12)*" or "[10](0,11)*".
  std::string    to_string(EvPeriodicWord const& x);
  EvPeriodicWord parse_point(std::string_view text, int n);

  // Letters written without the surrounding brackets, used inside y[...] and
  // x0[...]: digits for n <= 10 (commas allowed), comma separated otherwise.
  std::string word_body(Word const& w);
  Word        parse_word_body(std::string_view body, int n, std::size_t offset);

}  // namespace lmg
