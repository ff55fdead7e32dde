#include <algorithm>
#include <map>
#include <sstream>

#include "lmg/group.hpp"

namespace lmg {

  bool is_weak_standard(std::vector<YFactor> const& ys) {
    for (std::size_t i = 0; i < ys.size(); ++i) {
      for (std::size_t j = i + 1; j < ys.size(); ++j) {
        if (ys[i].s.is_proper_prefix_of(ys[j].s)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_standard(std::vector<YFactor> const& ys) {
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (ys[i].t == 0) {
        return false;
      }
      if (i + 1 < ys.size() && !word_lt_or_false(ys[i].s, ys[i + 1].s)) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::size_t> depth(std::vector<YFactor> const& ys) {
    std::optional<std::size_t> d;
    for (auto const& y : ys) {
      if (!d || y.s.size() < *d) {
        d = y.s.size();
      }
    }
    return d;
  }

  // Only pairs related by a prefix are ordered in a weak standard list, and
  // the sort keeps them in place, so every inversion it removes is a pair of
  // independent indices.
  std::vector<YFactor> standardize(std::vector<YFactor> ys) {
    if (!is_weak_standard(ys)) {
      throw DomainError("standardize: the list is not weak standard");
    }
    std::stable_sort(ys.begin(), ys.end(), [](YFactor const& a, YFactor const& b) {
      return word_lt_or_false(a.s, b.s);
    });
    std::vector<YFactor> out;
    for (auto& y : ys) {
      if (!out.empty() && out.back().s == y.s) {
        out.back().t += y.t;
      } else {
        out.push_back(std::move(y));
      }
      if (out.back().t == 0) {
        out.pop_back();
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Potential cancellations and contractions
  ////////////////////////////////////////////////////////////////////////

  std::optional<AdjacentPair> find_potential_cancellation(
      std::vector<YFactor> const& ys) {
    // index -> (first position, last position)
    std::map<Word, std::pair<std::size_t, std::size_t>> where;
    for (std::size_t k = 0; k < ys.size(); ++k) {
      if (ys[k].t == 0) {
        continue;
      }
      auto [it, fresh] = where.try_emplace(ys[k].s, k, k);
      if (!fresh) {
        it->second.second = k;
      }
    }
    std::optional<AdjacentPair> best;
    for (auto const& [u, pos] : where) {
      std::size_t const k = pos.second;
      // The longest proper prefix of u in the list, at its first copy.
      for (std::size_t len = u.size(); len-- > 0;) {
        auto it = where.find(u.prefix(len));
        if (it == where.end()) {
          continue;
        }
        std::size_t const outer = it->second.first;
        YSign const       a(ys[outer].t > 0 ? 1 : -1);
        YSign const       b(ys[k].t > 0 ? 1 : -1);
        if (is_potential_cancellation(a, u.suffix(len), b)
            && (!best || word_lt(u, ys[best->inner].s))) {
          best = AdjacentPair{outer, k};
        }
        break;
      }
    }
    return best;
  }

  namespace {
    Word ext(Word const& s, std::initializer_list<int> tail) {
      Word w = s;
      for (int a : tail) {
        w.push_back(static_cast<Letter>(a));
      }
      return w;
    }

    long long exponent_in(std::vector<YFactor> const& ys, Word const& s) {
      long long t = 0;
      for (auto const& y : ys) {
        if (y.s == s) {
          t += y.t;
        }
      }
      return t;
    }

    template <typename Exponent>
    bool contracts_by(Exponent const& e, Word const& s, int type) {
      int const top = s.arity() - 1;
      if (type == 1) {
        return e(ext(s, {0})) > 0 && e(ext(s, {top, 0})) < 0
               && e(ext(s, {top, top})) > 0 && e(ext(s, {top})) == 0;
      }
      return e(ext(s, {0, 0})) < 0 && e(ext(s, {0, top})) > 0
             && e(ext(s, {top})) < 0 && e(ext(s, {0})) == 0;
    }

    bool contracts(std::vector<YFactor> const& ys, Word const& s, int type) {
      return contracts_by([&](Word const& u) { return exponent_in(ys, u); }, s, type);
    }
  }  // namespace

  std::optional<ContractionSite> find_potential_contraction(
      std::vector<YFactor> const& ys) {
    std::optional<ContractionSite> best;
    std::map<Word, long long>      total;
    for (auto const& y : ys) {
      total[y.s] += y.t;
    }
    auto const e = [&](Word const& u) {
      auto it = total.find(u);
      return it == total.end() ? 0LL : it->second;
    };
    auto consider = [&](Word const& s) {
      for (int type : {1, 2}) {
        if (!contracts_by(e, s, type)) {
          continue;
        }
        if (!best || s.size() > best->s.size()
            || (s.size() == best->s.size() && word_lt_or_false(s, best->s))) {
          best = ContractionSite{s, type};
        }
      }
    };
    for (auto const& y : ys) {
      for (std::size_t cut : {1, 2}) {
        if (y.s.size() >= cut) {
          consider(y.s.prefix(y.s.size() - cut));
        }
      }
    }
    return best;
  }

  StandardForm contraction_move(StandardForm const& form,
                                ContractionSite const& site) {
    if (!is_standard(form.ys) || !contracts(form.ys, site.s, site.type)) {
      throw DomainError("contraction move does not apply at "
                        + to_string(site.s));
    }
    int const   top = site.s.arity() - 1;
    Word const& s   = site.s;
    // The triple, and the index whose unit closes it in the standard order.
    std::vector<std::pair<Word, long long>> triple;
    TreePair                                x = generator(0, s);
    if (site.type == 1) {
      triple = {{ext(s, {0}), 1}, {ext(s, {top, 0}), -1}, {ext(s, {top, top}), 1}};
      x      = invert(x);
    } else {
      triple = {{ext(s, {0, 0}), -1}, {ext(s, {0, top}), 1}, {ext(s, {top}), -1}};
    }
    Word const&          last = triple.back().first;
    std::vector<YFactor> ys;
    bool                 placed = false;
    for (auto y : form.ys) {
      for (auto const& [w, t] : triple) {
        if (y.s == w) {
          y.t -= t;
        }
      }
      if (y.s == last || word_lt_or_false(y.s, last)) {
        auto image = apply_prefix(x, y.s);
        if (!image) {
          throw InvariantError("contraction move: generator undefined on "
                               + to_string(y.s));
        }
        y.s = *image;
      } else if (!placed) {
        // The new y_s goes right after the mapped block.
        ys.push_back(YFactor{s, site.type == 1 ? 1 : -1});
        placed = true;
      }
      if (y.t != 0) {
        ys.push_back(std::move(y));
      }
    }
    if (!placed) {
      ys.push_back(YFactor{s, site.type == 1 ? 1 : -1});
    }
    return StandardForm(compose(form.f, x), standardize(std::move(ys)));
  }

  std::optional<ERResult> er_move(TreePair const& f,
                                  std::vector<YFactor> const& units,
                                  std::size_t k) {
    if (k >= units.size() || (units[k].t != 1 && units[k].t != -1)) {
      throw DomainError("er_move: position is not a unit factor");
    }
    int const   top = f.arity() - 1;
    Word const& u   = units[k].s;
    bool const  pos = units[k].t > 0;
    TreePair    x   = generator(0, u);
    if (!pos) {
      x = invert(x);
    }
    ERResult r{compose(f, x), {}};
    r.ys.reserve(units.size() + 2);
    for (std::size_t j = 0; j < k; ++j) {
      auto image = apply_prefix(x, units[j].s);
      if (!image) {
        return std::nullopt;
      }
      r.ys.push_back(YFactor{*image, units[j].t});
    }
    if (pos) {
      r.ys.push_back({ext(u, {0}), 1});
      r.ys.push_back({ext(u, {top, 0}), -1});
      r.ys.push_back({ext(u, {top, top}), 1});
    } else {
      r.ys.push_back({ext(u, {0, 0}), -1});
      r.ys.push_back({ext(u, {0, top}), 1});
      r.ys.push_back({ext(u, {top}), -1});
    }
    r.ys.insert(r.ys.end(), units.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                units.end());
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation and calculations
  ////////////////////////////////////////////////////////////////////////

  EvPeriodicWord evaluate(StandardForm const& form, EvPeriodicWord const& x) {
    if (x.arity() != form.arity()) {
      throw DomainError("evaluate: arity mismatch");
    }
    EvPeriodicWord z = apply_ep(form.f, x);
    for (auto const& y : form.ys) {
      if (z.starts_with(y.s)) {
        z = y_power_ep(static_cast<int>(y.t), z.drop(y.s.size())).prepend(y.s);
      }
    }
    return z;
  }

  Calculation calculation_of(StandardForm const& form, EvPeriodicWord const& x) {
    if (x.arity() != form.arity()) {
      throw DomainError("calculation_of: arity mismatch");
    }
    EvPeriodicWord const z = apply_ep(form.f, x);
    std::size_t          L = 0;
    for (auto const& y : form.ys) {
      L = std::max(L, y.s.size());
    }
    Word const letters = z.expand(L);
    // slots[p]: the y tokens sitting right after letter p-1.
    std::vector<std::vector<CalcToken>> slots(L + 1);
    for (auto const& y : form.ys) {
      if (!y.s.is_prefix_of(letters)) {
        continue;
      }
      YSign const sign(y.t > 0 ? 1 : -1);
      auto&       slot = slots[y.s.size()];
      slot.insert(slot.begin(), static_cast<std::size_t>(y.t > 0 ? y.t : -y.t),
                  CalcToken::of_y(sign));
    }
    std::vector<CalcToken> tokens;
    for (std::size_t p = 0; p <= L; ++p) {
      tokens.insert(tokens.end(), slots[p].begin(), slots[p].end());
      if (p < L) {
        tokens.push_back(CalcToken::of_letter(letters[p]));
      }
    }
    return Calculation(form.arity(), std::move(tokens), z.drop(L));
  }

  std::size_t exponent_of_element_at(StandardForm const& form,
                                     EvPeriodicWord const& x) {
    return exponent(calculation_of(form, x));
  }

  GroupWord to_group_word(StandardForm const& form) {
    GroupWord w(form.arity());
    w.append_f(form.f);
    for (auto const& y : form.ys) {
      YSign const sign(y.t > 0 ? 1 : -1);
      for (long long k = 0; k < (y.t > 0 ? y.t : -y.t); ++k) {
        w.push_back(GroupLetter::y(y.s, sign));
      }
    }
    return w;
  }

  std::string to_string(StandardForm const& form) {
    return to_string(to_group_word(form));
  }

  std::string to_dot(StandardForm const& form) {
    std::string dot = to_dot(form.f);
    if (form.ys.empty()) {
      return dot;
    }
    dot.erase(dot.rfind('}'));
    std::vector<Word> nodes{Word(form.arity())};
    for (auto const& y : form.ys) {
      for (std::size_t k = 1; k <= y.s.size(); ++k) {
        nodes.push_back(y.s.prefix(k));
      }
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    auto id = [](Word const& w) {
      return "\"y_" + (w.empty() ? std::string("r") : word_body(w)) + "\"";
    };
    std::ostringstream out;
    out << "  subgraph cluster_y {\n"
        << "    label=\"y\";\n";
    for (auto const& v : nodes) {
      out << "    " << id(v) << ";\n";
      if (!v.empty()) {
        out << "    " << id(v.prefix(v.size() - 1)) << " -> " << id(v)
            << " [label=\"" << static_cast<int>(v.back()) << "\"];\n";
      }
    }
    for (auto const& y : form.ys) {
      out << "    " << id(y.s) << " [shape=circle, width=0.2, style=filled, "
          << "fillcolor=" << (y.t > 0 ? "black" : "white") << ", xlabel=\""
          << y.t << "\"];\n";
    }
    out << "  }\n}\n";
    return dot + out.str();
  }

}  // namespace lmg
