#include "lmg/words.hpp"

#include <algorithm>
#include <numeric>

namespace lmg {

  void validate_arity(int n) {
    if (n < kMinArity || n > kMaxArity) {
      throw DomainError("arity must lie in [2, 256], found "
                        + std::to_string(n));
    }
  }

  Alphabet::Alphabet(int n) : _n(n) {
    validate_arity(n);
  }

  Word::Word(int arity) : _arity(arity), _letters() {
    validate_arity(arity);
  }

  Word::Word(int arity, std::initializer_list<int> letters) : Word(arity) {
    for (int a : letters) {
      if (a < 0 || a >= arity) {
        throw DomainError("letter " + std::to_string(a) + " not below arity "
                          + std::to_string(arity));
      }
      _letters.push_back(static_cast<Letter>(a));
    }
  }

  Word::Word(int arity, storage_type letters)
      : _arity(arity), _letters(std::move(letters)) {
    validate_arity(arity);
    for (Letter a : _letters) {
      if (a >= arity) {
        throw DomainError("letter " + std::to_string(a) + " not below arity "
                          + std::to_string(arity));
      }
    }
  }

  Word& Word::push_back(Letter a) {
    if (a >= _arity) {
      throw DomainError("letter " + std::to_string(a) + " not below arity "
                        + std::to_string(_arity));
    }
    _letters.push_back(a);
    return *this;
  }

  Word& Word::append(Word const& other) {
    if (other._arity != _arity) {
      throw DomainError("cannot concatenate words of arity "
                        + std::to_string(_arity) + " and "
                        + std::to_string(other._arity));
    }
    _letters.append(other._letters);
    return *this;
  }

  Word Word::prefix(std::size_t k) const {
    Word w(_arity);
    w._letters = _letters.substr(0, k);
    return w;
  }

  Word Word::suffix(std::size_t from) const {
    Word w(_arity);
    if (from < _letters.size()) {
      w._letters = _letters.substr(from);
    }
    return w;
  }

  bool Word::is_prefix_of(Word const& t) const noexcept {
    return size() <= t.size()
           && std::equal(_letters.begin(), _letters.end(), t._letters.begin());
  }

  bool Word::is_extremal() const noexcept {
    Letter const top = static_cast<Letter>(_arity - 1);
    return std::all_of(_letters.begin(), _letters.end(), [top](Letter a) {
      return a == 0 || a == top;
    });
  }

  bool Word::is_power_of(Letter a) const noexcept {
    return !_letters.empty()
           && std::all_of(_letters.begin(), _letters.end(), [a](Letter b) {
                return a == b;
              });
  }

  namespace {
    void check_same_arity(Word const& s, Word const& t) {
      if (s.arity() != t.arity()) {
        throw DomainError("alphabet mismatch: arity "
                          + std::to_string(s.arity()) + " vs "
                          + std::to_string(t.arity()));
      }
    }
  }  // namespace

  PrefixRelation prefix_relation(Word const& s, Word const& t) {
    check_same_arity(s, t);
    std::size_t const k = std::min(s.size(), t.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (s[i] != t[i]) {
        return PrefixRelation::Independent;
      }
    }
    if (s.size() == t.size()) {
      return PrefixRelation::Equal;
    }
    return s.size() < t.size() ? PrefixRelation::ProperPrefix
                               : PrefixRelation::Extends;
  }

  bool word_lt_or_false(Word const& s, Word const& t) noexcept {
    std::size_t const k = std::min(s.size(), t.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (s[i] != t[i]) {
        return s[i] < t[i];
      }
    }
    // One is a prefix of the other; the longer word is the smaller one.
    return s.size() > t.size();
  }

  bool word_lt(Word const& s, Word const& t) {
    check_same_arity(s, t);
    if (s == t) {
      throw DomainError("word_lt is strict: both arguments equal "
                        + to_string(s));
    }
    return word_lt_or_false(s, t);
  }

  std::size_t digit_sum_mod(Word const& s, std::size_t m) {
    if (m == 0) {
      throw DomainError("digit_sum_mod: modulus must be positive");
    }
    std::size_t sum = 0;
    for (Letter a : s) {
      sum += a;
    }
    return sum % m;
  }

  ////////////////////////////////////////////////////////////////////////
  // EvPeriodicWord
  ////////////////////////////////////////////////////////////////////////

  EvPeriodicWord canonicalize_ep(Word const& pre, Word const& per) {
    check_same_arity(pre, per);
    if (per.empty()) {
      throw DomainError("eventually periodic word needs a nonempty period");
    }
    auto const& p = per.letters();
    std::size_t len = p.size();
    for (std::size_t d = 1; d < p.size(); ++d) {
      if (p.size() % d != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = d; i < p.size() && periodic; ++i) {
        periodic = p[i] == p[i - d];
      }
      if (periodic) {
        len = d;
        break;
      }
    }
    Word::storage_type period = p.substr(0, len);
    Word::storage_type prefix = pre.letters();
    while (!prefix.empty() && prefix.back() == period.back()) {
      prefix.pop_back();
      std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    }
    return EvPeriodicWord(Word(pre.arity(), std::move(prefix)),
                          Word(pre.arity(), std::move(period)));
  }

  EvPeriodicWord::EvPeriodicWord(Word preperiod, Word period)
      : _pre(std::move(preperiod)), _per(std::move(period)) {
    check_same_arity(_pre, _per);
    if (_per.empty()) {
      throw DomainError("eventually periodic word needs a nonempty period");
    }
    // The canonicalizing call below constructs EvPeriodicWords itself; only
    // recurse when the input is not already canonical.
    bool canonical = _pre.empty() || _pre.back() != _per.back();
    if (canonical) {
      for (std::size_t d = 1; d < _per.size() && canonical; ++d) {
        if (_per.size() % d != 0) {
          continue;
        }
        bool periodic = true;
        for (std::size_t i = d; i < _per.size() && periodic; ++i) {
          periodic = _per[i] == _per[i - d];
        }
        canonical = !periodic;
      }
    }
    if (!canonical) {
      *this = canonicalize_ep(_pre, _per);
    }
  }

  Letter EvPeriodicWord::letter_at(std::size_t i) const noexcept {
    if (i < _pre.size()) {
      return _pre[i];
    }
    return _per[(i - _pre.size()) % _per.size()];
  }

  Word EvPeriodicWord::expand(std::size_t len) const {
    Word::storage_type out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
      out.push_back(letter_at(i));
    }
    return Word(arity(), std::move(out));
  }

  bool EvPeriodicWord::starts_with(Word const& s) const {
    check_same_arity(s, _pre);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (letter_at(i) != s[i]) {
        return false;
      }
    }
    return true;
  }

  EvPeriodicWord EvPeriodicWord::drop(std::size_t k) const {
    if (k <= _pre.size()) {
      return EvPeriodicWord(_pre.suffix(k), _per);
    }
    std::size_t const shift = (k - _pre.size()) % _per.size();
    return EvPeriodicWord(Word(arity()),
                          _per.suffix(shift) + _per.prefix(shift));
  }

  EvPeriodicWord EvPeriodicWord::prepend(Word const& s) const {
    return EvPeriodicWord(s + _pre, _per);
  }

  bool ep_point_lt(EvPeriodicWord const& x, EvPeriodicWord const& y) {
    if (x.arity() != y.arity()) {
      throw DomainError("alphabet mismatch in point comparison");
    }
    if (x == y) {
      throw DomainError("ep_point_lt is strict: both points equal "
                        + to_string(x));
    }
    // Distinct eventually periodic words differ before this horizon.
    std::size_t const horizon
        = std::max(x.preperiod().size(), y.preperiod().size())
          + std::lcm(x.period().size(), y.period().size());
    for (std::size_t i = 0; i < horizon; ++i) {
      Letter const a = x.letter_at(i), b = y.letter_at(i);
      if (a != b) {
        return a < b;
      }
    }
    throw InvariantError("distinct canonical points agree up to horizon");
  }

  EvPeriodicWord zero_point(int n) {
    return EvPeriodicWord(Word(n), Word(n, {0}));
  }

  EvPeriodicWord last_point(int n) {
    return EvPeriodicWord(Word(n), Word(n, {n - 1}));
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  std::string word_body(Word const& w) {
    std::string out;
    if (w.arity() <= 10) {
      for (Letter a : w) {
        out.push_back(static_cast<char>('0' + a));
      }
      return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out.push_back(',');
      }
      out += std::to_string(w[i]);
    }
    return out;
  }

  std::string to_string(Word const& w) {
    if (w.arity() <= 10) {
      return w.empty() ? std::string("e") : word_body(w);
    }
    return "[" + word_body(w) + "]";
  }

  Word parse_word_body(std::string_view body, int n, std::size_t offset) {
    validate_arity(n);
    Word w(n);
    bool const comma_separated
        = n > 10 || body.find(',') != std::string_view::npos;
    if (body == "e") {
      return w;
    }
    if (!comma_separated) {
      for (std::size_t i = 0; i < body.size(); ++i) {
        char const c = body[i];
        if (c < '0' || c > '9') {
          throw ParseError(std::string("unexpected character '") + c
                               + "' in word",
                           offset + i);
        }
        if (c - '0' >= n) {
          throw ParseError("letter " + std::string(1, c) + " not below arity "
                               + std::to_string(n),
                           offset + i);
        }
        w.push_back(static_cast<Letter>(c - '0'));
      }
      return w;
    }
    std::size_t i = 0;
    while (i < body.size()) {
      std::size_t j = i;
      int         value = 0;
      while (j < body.size() && body[j] >= '0' && body[j] <= '9') {
        value = value * 10 + (body[j] - '0');
        if (value >= n) {
          throw ParseError("letter not below arity " + std::to_string(n),
                           offset + i);
        }
        ++j;
      }
      if (j == i) {
        throw ParseError("expected a letter", offset + i);
      }
      w.push_back(static_cast<Letter>(value));
      if (j < body.size()) {
        if (body[j] != ',') {
          throw ParseError("expected ',' between letters", offset + j);
        }
        ++j;
        if (j == body.size()) {
          throw ParseError("trailing ','", offset + j);
        }
      }
      i = j;
    }
    return w;
  }

  namespace {
    // Parses a word that is either bare digits or a bracketed list.
    Word parse_word_token(std::string_view text, int n, std::size_t offset) {
      if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') {
          throw ParseError("unterminated '['", offset + text.size());
        }
        return parse_word_body(text.substr(1, text.size() - 2), n, offset + 1);
      }
      if (n > 10 && !text.empty() && text != "e") {
        throw ParseError("words over more than 10 letters need brackets",
                         offset);
      }
      return parse_word_body(text, n, offset);
    }
  }  // namespace

  Word parse_finite_word(std::string_view text, int n) {
    return parse_word_token(text, n, 0);
  }

  std::string to_string(EvPeriodicWord const& x) {
    std::string pre = x.preperiod().empty() ? std::string()
                                            : to_string(x.preperiod());
    return pre + "(" + word_body(x.period()) + ")*";
  }

  EvPeriodicWord parse_point(std::string_view text, int n) {
    std::size_t const open = text.rfind('(');
    if (open == std::string_view::npos) {
      throw ParseError("expected pre(per)* syntax for a point", 0);
    }
    if (text.size() < open + 3 || text.substr(text.size() - 2) != ")*") {
      throw ParseError("point must end with ')*'", text.size());
    }
    Word pre = parse_word_token(text.substr(0, open), n, 0);
    std::string_view body = text.substr(open + 1, text.size() - open - 3);
    if (!body.empty() && body.front() == '[') {
      body = body.substr(1, body.size() >= 2 ? body.size() - 2 : 0);
    }
    Word per = parse_word_body(body, n, open + 1);
    if (per.empty()) {
      throw ParseError("empty period", open + 1);
    }
    return canonicalize_ep(pre, per);
  }

}  // namespace lmg
