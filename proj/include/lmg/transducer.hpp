#pragma once

// The homeomorphism y of the n-ary Cantor space as a finite state transducer,
// and calculations: words over the letters and y^{+1}, y^{-1} that record
// deferred applications of y.

#include <optional>
#include <string>
#include <vector>

#include "lmg/words.hpp"

namespace lmg {

  // The exponent of a single y letter. Never zero.
  class YSign {
   public:
    constexpr YSign() noexcept = default;
    constexpr explicit YSign(int v) : _v(v > 0 ? 1 : -1) {
      if (v == 0) {
        throw DomainError("y sign must be +1 or -1");
      }
    }
    static constexpr YSign plus() noexcept {
      return YSign();
    }
    static constexpr YSign minus() noexcept {
      YSign s;
      s._v = -1;
      return s;
    }
    constexpr int value() const noexcept {
      return _v;
    }
    constexpr YSign operator-() const noexcept {
      return _v > 0 ? minus() : plus();
    }
    constexpr bool operator==(YSign const&) const = default;

   private:
    int _v = 1;
  };

  // Y(sign) applies y^sign to the remaining input; Copy passes it through.
  struct TransducerState {
    enum class Kind { Y, Copy };
    Kind  kind = Kind::Y;
    YSign sign;

    static TransducerState y(YSign s) {
      return {Kind::Y, s};
    }
    static TransducerState copy() {
      return {Kind::Copy, YSign()};
    }
    bool operator==(TransducerState const&) const = default;
  };

  struct TransducerStep {
    Word            emitted;
    std::size_t     consumed;  // 1 or 2
    TransducerState next;
  };

  // True iff the rule for y^sign starting with `first` inspects a second letter
  // (y on 0., y^{-1} on (n-1).).
  bool needs_lookahead(YSign sign, Letter first, int n);

  // One rule of y^sign. `second` is required exactly when needs_lookahead;
  // throws DomainError when it is missing.
  TransducerStep y_step(YSign sign, Letter first, std::optional<Letter> second,
                        int n);

  // Either a y of the given sign is still waiting at the end of the processed
  // input, or the y has vanished into the copy state.
  struct YResidue {
    bool  vanished = false;
    YSign sign;

    static YResidue pending(YSign s) {
      return {false, s};
    }
    static YResidue gone() {
      return {true, YSign()};
    }
    bool operator==(YResidue const&) const = default;
  };

  struct FiniteApplication {
    Word     out;
    YResidue residue;
    // Pending: letters the last rule could not consume (at most one).
    // Vanished: the verbatim copied remainder, which is also part of `out`.
    Word unconsumed;
  };

  // Pushes y^sign through the finite word w, rule by rule.
  FiniteApplication y_apply_finite(YSign sign, Word const& w);

  // y^sign(x), computed by running the transducer until its (state, phase in
  // period) pair repeats.
  EvPeriodicWord y_apply_ep(YSign sign, EvPeriodicWord const& x);

  // y^t(x) for any integer t.
  EvPeriodicWord y_power_ep(int t, EvPeriodicWord const& x);

  ////////////////////////////////////////////////////////////////////////
  // Calculations
  ////////////////////////////////////////////////////////////////////////

  struct CalcToken {
    bool   is_y   = false;
    Letter letter = 0;  // when !is_y
    YSign  sign;        // when is_y

    static CalcToken of_letter(Letter a) {
      return {false, a, YSign()};
    }
    static CalcToken of_y(YSign s) {
      return {true, 0, s};
    }
    bool operator==(CalcToken const&) const = default;
  };

  class Calculation {
   public:
    explicit Calculation(int arity) : _arity(arity) {
      validate_arity(arity);
    }
    Calculation(int arity, std::vector<CalcToken> tokens,
                std::optional<EvPeriodicWord> tail = std::nullopt);

    int arity() const noexcept {
      return _arity;
    }
    std::vector<CalcToken> const& tokens() const noexcept {
      return _tokens;
    }
    std::optional<EvPeriodicWord> const& tail() const noexcept {
      return _tail;
    }
    bool is_finite() const noexcept {
      return !_tail.has_value();
    }
    std::size_t y_count() const noexcept;

    Calculation& push_letter(Letter a);
    Calculation& push_letters(Word const& w);
    Calculation& push_y(YSign s);

    bool operator==(Calculation const&) const = default;

   private:
    int                           _arity;
    std::vector<CalcToken>        _tokens;
    std::optional<EvPeriodicWord> _tail;
  };

  // Applies substitutions until none applies. Requires a finite calculation.
  Calculation substitute_all(Calculation const& c);

  // The point denoted by a calculation with an infinite tail.
  EvPeriodicWord resolve_point(Calculation const& c);

  // True iff y^{t1} sigma y^{t2} is a potential cancellation: pushing y^{t1}
  // through sigma consumes all of sigma and leaves exactly y^{-t2}.
  bool is_potential_cancellation(YSign t1, Word const& sigma, YSign t2);

  // True iff some subword y^{t1} sigma y^{t2} (sigma without y's) is a
  // potential cancellation.
  bool contains_potential_cancellation(Calculation const& c);

  // The number of y letters followed only by 0, n-1 and y letters (tail
  // included). Throws DomainError if c contains a potential cancellation.
  std::size_t exponent(Calculation const& c);

  // "y 0 y' 2 (0)*" style text: letters as digits (or bracketed lists when
  // n > 10), y and y' for y^{-1}, optional trailing point tail "pre(per)*".
  std::string to_string(Calculation const& c);
  Calculation parse_calculation(std::string_view text, int n);

}  // namespace lmg
