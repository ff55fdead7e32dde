#pragma once

// Elements of G_0(n): words over X(n) and Y(n), the moves between them,
// standard forms and the normal form.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lmg/transducer.hpp"
#include "lmg/tree_pair.hpp"
#include "lmg/words.hpp"

namespace lmg {

  ////////////////////////////////////////////////////////////////////////
  // Y(n)
  ////////////////////////////////////////////////////////////////////////

  // Empty if y_s is in Y(n), otherwise the violated condition.
  std::optional<std::string> y_index_violation(Word const& s);
  bool                       is_y_index(Word const& s);
  // Throws DomainError naming the violated condition.
  void check_y_index(Word const& s);

  ////////////////////////////////////////////////////////////////////////
  // Words over Z(n)
  ////////////////////////////////////////////////////////////////////////

  // x_{i[index]}^sign or y_{index}^sign.
  struct GroupLetter {
    enum class Kind { X, Y };
    Kind  kind = Kind::X;
    int   i    = 0;  // generator number, X letters only
    Word  index;
    YSign sign;

    static GroupLetter x(int i, Word alpha, YSign s = YSign::plus());
    static GroupLetter y(Word s, YSign sign = YSign::plus());

    bool        is_x() const noexcept {
      return kind == Kind::X;
    }
    GroupLetter inverse() const;
    // The tree pair of an X letter.
    TreePair    as_tree_pair() const;

    bool operator==(GroupLetter const&) const = default;
  };

  class GroupWord {
   public:
    explicit GroupWord(int arity) : _arity(arity) {
      validate_arity(arity);
    }
    GroupWord(int arity, std::vector<GroupLetter> letters);

    int arity() const noexcept {
      return _arity;
    }
    std::vector<GroupLetter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }

    GroupWord& push_back(GroupLetter const& a);
    GroupWord& append(GroupWord const& w);
    // The letters of an F(n) element: its X_t normal form.
    GroupWord& append_f(TreePair const& f);
    GroupWord  inverse() const;

    bool operator==(GroupWord const&) const = default;

   private:
    int                      _arity;
    std::vector<GroupLetter> _letters;
  };

  // The homeomorphism, applied letter by letter.
  EvPeriodicWord evaluate(GroupWord const& w, EvPeriodicWord const& x);

  // Text: "x0 x1[21]^-2 y[30]^3 id"; an optional leading "n=<arity>" token.
  // Pass arity 0 to require the header. Exponents expand into repeated
  // letters.
  GroupWord   parse_group_word(std::string_view text, int arity);
  std::string to_string(GroupWord const& w);

  ////////////////////////////////////////////////////////////////////////
  // Moves on words. Each returns the rewritten word and throws DomainError
  // when the move does not apply at the given position.
  ////////////////////////////////////////////////////////////////////////

  // y_t^a x^d -> x^d y_{x^d(t)}^a at positions (pos, pos+1).
  GroupWord rearranging_move(GroupWord const& w, std::size_t pos);
  // y_s -> x_{0[s]} y_{s0} y_{s(n-1)0}^-1 y_{s(n-1)(n-1)} and
  // y_s^-1 -> x_{0[s]}^-1 y_{s00}^-1 y_{s0(n-1)} y_{s(n-1)}^-1.
  GroupWord expansion_move(GroupWord const& w, std::size_t pos);
  // y_u y_v -> y_v y_u for independent u, v.
  GroupWord commuting_move(GroupWord const& w, std::size_t pos);
  // y_s^d y_s^-d -> nothing.
  GroupWord cancellation_move(GroupWord const& w, std::size_t pos);

  ////////////////////////////////////////////////////////////////////////
  // Defining relations, as (lhs, rhs) pairs of words.
  ////////////////////////////////////////////////////////////////////////

  using Relation = std::pair<GroupWord, GroupWord>;

  // X_i^-1 X_j X_i = X_{j+n-1} for i < j.
  Relation conjugation_relation(std::size_t i, std::size_t j, int n);
  // x_{i[alpha]} = its normal form in the X_t.
  Relation x_normal_form_relation(int i, Word const& alpha);
  // y_t x_{i[s]}^d = x_{i[s]}^d y_{x_{i[s]}^d(t)}; DomainError when undefined.
  Relation rearranging_relation(Word const& t, int i, Word const& s,
                                YSign d = YSign::plus());
  // y_s y_t = y_t y_s for s and t independent.
  Relation commuting_relation(Word const& s, Word const& t);
  // y_s = x_{0[s]} y_{s0} y_{s(n-1)0}^-1 y_{s(n-1)(n-1)}.
  Relation expansion_relation(Word const& s);

  ////////////////////////////////////////////////////////////////////////
  // Standard forms
  ////////////////////////////////////////////////////////////////////////

  struct YFactor {
    Word      s;
    long long t = 1;
    bool      operator==(YFactor const&) const = default;
  };

  // f y_{s_1}^{t_1} ... y_{s_m}^{t_m}. Standard when s_1 < ... < s_m in the
  // word order (all distinct, all t nonzero).
  struct StandardForm {
    TreePair             f;
    std::vector<YFactor> ys;

    explicit StandardForm(int n) : f(TreePair::identity(n)) {}
    StandardForm(TreePair f_, std::vector<YFactor> ys_)
        : f(std::move(f_)), ys(std::move(ys_)) {}

    int arity() const noexcept {
      return f.arity();
    }
    bool is_identity() const noexcept {
      return f.is_identity() && ys.empty();
    }
    bool operator==(StandardForm const&) const = default;
  };

  // s_j subset s_i implies i < j (extensions before prefixes).
  bool is_weak_standard(std::vector<YFactor> const& ys);
  bool is_standard(std::vector<YFactor> const& ys);

  // Minimum index length, or nothing for a form without y factors.
  std::optional<std::size_t> depth(std::vector<YFactor> const& ys);

  // Sorts a weak standard list into the order of a standard form using only
  // swaps of independent neighbours, then merges equal indices. Throws
  // DomainError if the input is not weak standard.
  std::vector<YFactor> standardize(std::vector<YFactor> ys);

  // (outer, inner) positions of a potential cancellation in a weak standard
  // list: s_inner = s_outer sigma with nothing strictly between, and
  // y^{t_outer} sigma y^{t_inner} a potential cancellation. Pairs are scanned
  // by the inner index in the word order, then the outer one.
  struct AdjacentPair {
    std::size_t outer;
    std::size_t inner;
  };
  std::optional<AdjacentPair> find_potential_cancellation(
      std::vector<YFactor> const& ys);

  struct ContractionSite {
    Word s;
    int  type;  // 1: y_{s0} y_{s(n-1)0}^-1 y_{s(n-1)(n-1)}, 2: the inverse shape
    bool operator==(ContractionSite const&) const = default;
  };
  // The site with the longest s (then smallest in the word order).
  std::optional<ContractionSite> find_potential_contraction(
      std::vector<YFactor> const& ys);
  // Applies the contraction move at a site of a standard form.
  StandardForm contraction_move(StandardForm const& form,
                                ContractionSite const& site);

  // ER move on unit factor k of a weak standard list of unit factors (t = +-1):
  // f y_{s_1}...y_{s_{k-1}} y_u^d ... -> f x_{0[u]}^d (mapped prefix) triple ...
  // Returns nothing when x_{0[u]}^d is undefined on some earlier index.
  struct ERResult {
    TreePair             f;
    std::vector<YFactor> ys;
  };
  std::optional<ERResult> er_move(TreePair const& f,
                                  std::vector<YFactor> const& units,
                                  std::size_t k);

  // Rewrites any word into a standard form of depth at least min_depth.
  StandardForm standard_form(GroupWord const& w, std::size_t min_depth = 0);

  ////////////////////////////////////////////////////////////////////////
  // Normal form and the group operations
  ////////////////////////////////////////////////////////////////////////

  // An equal standard form without potential cancellations.
  StandardForm remove_potential_cancellations(StandardForm const& form);
  // Requires a form without potential cancellations.
  StandardForm remove_potential_contractions(StandardForm const& form);

  StandardForm normalize(GroupWord const& w);
  StandardForm normalize(StandardForm const& form);
  bool         is_normal_form(StandardForm const& form);

  StandardForm multiply(StandardForm const& a, StandardForm const& b);
  StandardForm inverse(StandardForm const& a);
  StandardForm power(StandardForm const& a, long long k);
  bool         equals(StandardForm const& a, StandardForm const& b);

  // As a word: the X normal form of f followed by the y factors.
  GroupWord   to_group_word(StandardForm const& form);
  std::string to_string(StandardForm const& form);

  EvPeriodicWord evaluate(StandardForm const& form, EvPeriodicWord const& x);

  // The tree pair of f, plus a tree spanned by the y indices with y_s^t
  // drawn as a black circle at s (white for t < 0) labelled t.
  std::string to_dot(StandardForm const& form);

  // The calculation of x by the form (f applied, then each y_s inserted
  // after the prefix s).
  Calculation calculation_of(StandardForm const& form, EvPeriodicWord const& x);
  // exponent(calculation_of(form, x)); DomainError on a potential
  // cancellation.
  std::size_t exponent_of_element_at(StandardForm const& form,
                                     EvPeriodicWord const& x);

}  // namespace lmg
