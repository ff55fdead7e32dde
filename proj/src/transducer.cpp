#include "lmg/transducer.hpp"

#include <cctype>
#include <map>
#include <utility>

namespace lmg {

  bool needs_lookahead(YSign sign, Letter first, int n) {
    Letter const top = static_cast<Letter>(n - 1);
    return sign == YSign::plus() ? first == 0 : first == top;
  }

  TransducerStep y_step(YSign sign, Letter first, std::optional<Letter> second,
                        int n) {
    Alphabet const alpha(n);
    Letter const   top = alpha.last();
    if (!alpha.contains(first) || (second && !alpha.contains(*second))) {
      throw DomainError("y_step: letter not below arity " + std::to_string(n));
    }
    if (needs_lookahead(sign, first, n) && !second) {
      throw DomainError("y_step: rule needs a second letter");
    }
    auto word = [n](std::initializer_list<int> l) { return Word(n, l); };
    if (sign == YSign::plus()) {
      if (first == 0) {
        Letter const b = *second;
        if (b == 0) {
          // y(00z) = 0 y(z)
          return {word({0}), 2, TransducerState::y(YSign::plus())};
        } else if (b == top) {
          // y(0(n-1)z) = (n-1)0 y^{-1}(z)
          return {word({top, 0}), 2, TransducerState::y(YSign::minus())};
        }
        // y(0kz) = kz
        return {word({b}), 2, TransducerState::copy()};
      } else if (first == top) {
        // y((n-1)z) = (n-1)(n-1) y(z)
        return {word({top, top}), 1, TransducerState::y(YSign::plus())};
      }
      // y(kz) = (n-1)kz
      return {word({top, first}), 1, TransducerState::copy()};
    }
    if (first == 0) {
      // y^{-1}(0z) = 00 y^{-1}(z)
      return {word({0, 0}), 1, TransducerState::y(YSign::minus())};
    } else if (first == top) {
      Letter const b = *second;
      if (b == 0) {
        // y^{-1}((n-1)0z) = 0(n-1) y(z)
        return {word({0, top}), 2, TransducerState::y(YSign::plus())};
      } else if (b == top) {
        // y^{-1}((n-1)(n-1)z) = (n-1) y^{-1}(z)
        return {word({top}), 2, TransducerState::y(YSign::minus())};
      }
      // y^{-1}((n-1)kz) = kz
      return {word({b}), 2, TransducerState::copy()};
    }
    // y^{-1}(kz) = 0kz
    return {word({0, first}), 1, TransducerState::copy()};
  }

  FiniteApplication y_apply_finite(YSign sign, Word const& w) {
    int const       n = w.arity();
    Word            out(n);
    TransducerState state = TransducerState::y(sign);
    std::size_t     pos   = 0;
    while (pos < w.size()) {
      if (state.kind == TransducerState::Kind::Copy) {
        Word rest = w.suffix(pos);
        out.append(rest);
        return {std::move(out), YResidue::gone(), std::move(rest)};
      }
      Letter const first = w[pos];
      if (needs_lookahead(state.sign, first, n) && pos + 1 == w.size()) {
        return {std::move(out), YResidue::pending(state.sign), w.suffix(pos)};
      }
      std::optional<Letter> second;
      if (pos + 1 < w.size()) {
        second = w[pos + 1];
      }
      auto step = y_step(state.sign, first, second, n);
      out.append(step.emitted);
      pos += step.consumed;
      state = step.next;
    }
    if (state.kind == TransducerState::Kind::Copy) {
      return {std::move(out), YResidue::gone(), Word(n)};
    }
    return {std::move(out), YResidue::pending(state.sign), Word(n)};
  }

  EvPeriodicWord y_apply_ep(YSign sign, EvPeriodicWord const& x) {
    int const         n   = x.arity();
    std::size_t const pre = x.preperiod().size();
    std::size_t const per = x.period().size();

    Word::storage_type                           out;
    std::map<std::pair<int, std::size_t>, std::size_t> seen;
    TransducerState                              state = TransducerState::y(sign);
    std::size_t                                  pos   = 0;
    for (;;) {
      if (state.kind == TransducerState::Kind::Copy) {
        return x.drop(pos).prepend(Word(n, std::move(out)));
      }
      if (pos >= pre) {
        auto key = std::make_pair(state.sign.value(), (pos - pre) % per);
        auto it  = seen.find(key);
        if (it != seen.end()) {
          Word head(n, out.substr(0, it->second));
          Word cycle(n, out.substr(it->second));
          return canonicalize_ep(head, cycle);
        }
        seen.emplace(key, out.size());
      }
      Letter const first = x.letter_at(pos);
      auto step = y_step(state.sign, first, x.letter_at(pos + 1), n);
      out.append(step.emitted.letters());
      pos += step.consumed;
      state = step.next;
    }
  }

  EvPeriodicWord y_power_ep(int t, EvPeriodicWord const& x) {
    EvPeriodicWord result = x;
    YSign const    s(t == 0 ? 1 : t);
    for (int i = 0; i < (t < 0 ? -t : t); ++i) {
      result = y_apply_ep(s, result);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Calculation
  ////////////////////////////////////////////////////////////////////////

  Calculation::Calculation(int arity, std::vector<CalcToken> tokens,
                           std::optional<EvPeriodicWord> tail)
      : _arity(arity), _tokens(std::move(tokens)), _tail(std::move(tail)) {
    validate_arity(arity);
    for (auto const& t : _tokens) {
      if (!t.is_y && t.letter >= arity) {
        throw DomainError("calculation letter not below arity");
      }
    }
    if (_tail && _tail->arity() != arity) {
      throw DomainError("calculation tail has the wrong arity");
    }
  }

  std::size_t Calculation::y_count() const noexcept {
    std::size_t k = 0;
    for (auto const& t : _tokens) {
      k += t.is_y;
    }
    return k;
  }

  Calculation& Calculation::push_letter(Letter a) {
    if (a >= _arity) {
      throw DomainError("calculation letter not below arity");
    }
    _tokens.push_back(CalcToken::of_letter(a));
    return *this;
  }

  Calculation& Calculation::push_letters(Word const& w) {
    for (Letter a : w) {
      push_letter(a);
    }
    return *this;
  }

  Calculation& Calculation::push_y(YSign s) {
    _tokens.push_back(CalcToken::of_y(s));
    return *this;
  }

  namespace {
    // Performs one substitution at the y token at index i, if some rule
    // applies. Returns false otherwise.
    bool substitute_at(std::vector<CalcToken>& tokens, std::size_t i, int n) {
      YSign const sign = tokens[i].sign;
      if (i + 1 >= tokens.size() || tokens[i + 1].is_y) {
        return false;
      }
      Letter const          first = tokens[i + 1].letter;
      std::optional<Letter> second;
      if (i + 2 < tokens.size() && !tokens[i + 2].is_y) {
        second = tokens[i + 2].letter;
      }
      if (needs_lookahead(sign, first, n) && !second) {
        return false;
      }
      auto step = y_step(sign, first, second, n);
      std::vector<CalcToken> replacement;
      for (Letter a : step.emitted) {
        replacement.push_back(CalcToken::of_letter(a));
      }
      if (step.next.kind == TransducerState::Kind::Y) {
        replacement.push_back(CalcToken::of_y(step.next.sign));
      }
      auto first_it = tokens.begin() + static_cast<std::ptrdiff_t>(i);
      auto last_it  = first_it + static_cast<std::ptrdiff_t>(1 + step.consumed);
      tokens.insert(tokens.erase(first_it, last_it), replacement.begin(),
                    replacement.end());
      return true;
    }
  }  // namespace

  Calculation substitute_all(Calculation const& c) {
    if (!c.is_finite()) {
      throw DomainError("substitute_all requires a finite calculation");
    }
    std::vector<CalcToken> tokens = c.tokens();
    bool                   changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = tokens.size(); i-- > 0;) {
        if (tokens[i].is_y && substitute_at(tokens, i, c.arity())) {
          changed = true;
          break;
        }
      }
    }
    return Calculation(c.arity(), std::move(tokens));
  }

  EvPeriodicWord resolve_point(Calculation const& c) {
    if (c.is_finite()) {
      throw DomainError("resolve_point requires a calculation with a tail");
    }
    EvPeriodicWord point = *c.tail();
    auto const&    tokens = c.tokens();
    // Walk right to left, applying each y to everything on its right.
    for (std::size_t i = tokens.size(); i-- > 0;) {
      if (tokens[i].is_y) {
        point = y_apply_ep(tokens[i].sign, point);
      } else {
        point = point.prepend(Word(c.arity(), {tokens[i].letter}));
      }
    }
    return point;
  }

  bool is_potential_cancellation(YSign t1, Word const& sigma, YSign t2) {
    auto const app = y_apply_finite(t1, sigma);
    return !app.residue.vanished && app.unconsumed.empty()
           && app.residue.sign == -t2;
  }

  bool contains_potential_cancellation(Calculation const& c) {
    auto const&       tokens = c.tokens();
    std::size_t const none   = tokens.size();
    std::size_t       prev_y = none;
    Word              sigma(c.arity());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (!tokens[i].is_y) {
        sigma.push_back(tokens[i].letter);
        continue;
      }
      if (prev_y != none
          && is_potential_cancellation(tokens[prev_y].sign, sigma,
                                       tokens[i].sign)) {
        return true;
      }
      prev_y = i;
      sigma  = Word(c.arity());
    }
    return false;
  }

  std::size_t exponent(Calculation const& c) {
    if (contains_potential_cancellation(c)) {
      throw DomainError("exponent: calculation contains a potential "
                        "cancellation");
    }
    Letter const top       = static_cast<Letter>(c.arity() - 1);
    bool         suffix_ok = !c.tail() || c.tail()->is_extremal();
    std::size_t  count     = 0;
    auto const&  tokens    = c.tokens();
    for (std::size_t i = tokens.size(); i-- > 0;) {
      if (tokens[i].is_y) {
        count += suffix_ok;
      } else if (tokens[i].letter != 0 && tokens[i].letter != top) {
        suffix_ok = false;
      }
    }
    return count;
  }

  std::string to_string(Calculation const& c) {
    std::string out;
    for (auto const& t : c.tokens()) {
      if (!out.empty()) {
        out.push_back(' ');
      }
      if (t.is_y) {
        out += t.sign == YSign::plus() ? "y" : "y'";
      } else {
        out += to_string(Word(c.arity(), {t.letter}));
      }
    }
    if (c.tail()) {
      if (!out.empty()) {
        out.push_back(' ');
      }
      out += to_string(*c.tail());
    }
    return out;
  }

  Calculation parse_calculation(std::string_view text, int n) {
    std::vector<CalcToken>        tokens;
    std::optional<EvPeriodicWord> tail;
    std::size_t                   i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size()
             && !std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      std::string_view tok = text.substr(i, j - i);
      if (tail) {
        throw ParseError("nothing may follow the tail point", i);
      }
      if (tok == "y" || tok == "y^1") {
        tokens.push_back(CalcToken::of_y(YSign::plus()));
      } else if (tok == "y'" || tok == "y^-1") {
        tokens.push_back(CalcToken::of_y(YSign::minus()));
      } else if (tok.size() >= 2 && tok.substr(tok.size() - 2) == ")*") {
        try {
          tail = parse_point(tok, n);
        } catch (ParseError const& e) {
          throw ParseError(std::string("bad tail: ") + e.what(), i);
        }
      } else {
        Word w(n);
        try {
          w = tok.front() == '[' || n <= 10
                  ? parse_finite_word(tok, n)
                  : parse_word_body(tok, n, 0);
        } catch (ParseError const& e) {
          throw ParseError(e.what(), i);
        }
        for (Letter a : w) {
          tokens.push_back(CalcToken::of_letter(a));
        }
      }
      i = j;
    }
    return Calculation(n, std::move(tokens), std::move(tail));
  }

}  // namespace lmg
