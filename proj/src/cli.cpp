#include "lmg/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11/CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lmg/error.hpp"
#include "lmg/group.hpp"
#include "lmg/homomorphisms.hpp"

namespace lmg {

  namespace {
    using nlohmann::json;

    json form_json(StandardForm const& g) {
      json f = json::array();
      for (std::size_t k = 0; k < g.f.leaf_count(); ++k) {
        f.push_back({to_string(g.f.domain()[k]), to_string(g.f.range()[k])});
      }
      json ys = json::array();
      for (auto const& y : g.ys) {
        ys.push_back({to_string(y.s), y.t});
      }
      return {{"arity", g.arity()}, {"f", f}, {"ys", ys}, {"text", to_string(g)}};
    }

    std::string vector_text(std::vector<long long> const& v) {
      std::string s = "(";
      for (std::size_t k = 0; k < v.size(); ++k) {
        s += (k ? ", " : "") + std::to_string(v[k]);
      }
      return s + ")";
    }

    struct Options {
      int                      n     = 0;
      bool                     as_json = false;
      bool                     show_calc = false;
      int                      from = 0;
      int                      to   = 0;
      std::vector<std::string> words;
      std::string              point;
    };

    void emit(std::ostream& out, Options const& o, json j, std::string const& text) {
      if (o.as_json) {
        j["schema"] = 1;
        out << j.dump() << "\n";
      } else {
        out << text << "\n";
      }
    }

    GroupWord word_arg(Options const& o, std::size_t k) {
      return parse_group_word(o.words.at(k), o.n);
    }

    int cmd_normalize(Options const& o, std::ostream& out) {
      auto const g = normalize(word_arg(o, 0));
      emit(out, o, form_json(g), to_string(g));
      return kExitOk;
    }

    int cmd_eq(Options const& o, std::ostream& out) {
      auto const a  = normalize(word_arg(o, 0));
      auto const b  = normalize(parse_group_word(o.words.at(1), a.arity()));
      bool const eq = a == b;
      emit(out, o, {{"equal", eq}, {"lhs", form_json(a)}, {"rhs", form_json(b)}},
           eq ? "equal" : "different");
      return kExitOk;
    }

    int cmd_eval(Options const& o, std::ostream& out) {
      auto const w = word_arg(o, 0);
      auto const x = parse_point(o.point, w.arity());
      auto const z = evaluate(w, x);
      json       j{{"arity", w.arity()}, {"point", to_string(x)}, {"image", to_string(z)}};
      std::string text = to_string(z);
      if (o.show_calc) {
        // The calculation by the word's own standard form.
        auto const c = calculation_of(standard_form(w), x);
        j["calculation"] = to_string(c);
        text += "\n" + to_string(c);
      }
      emit(out, o, j, text);
      return kExitOk;
    }

    int cmd_exponent(Options const& o, std::ostream& out) {
      auto const g = normalize(word_arg(o, 0));
      auto const x = parse_point(o.point, g.arity());
      auto const e = exponent_of_element_at(g, x);
      emit(out, o, {{"arity", g.arity()}, {"point", to_string(x)}, {"exponent", e}},
           std::to_string(e));
      return kExitOk;
    }

    int cmd_transduce(Options const& o, std::ostream& out) {
      if (o.n == 0) {
        throw ParseError("transduce needs -n", 0);
      }
      auto const  c = parse_calculation(o.words.at(0), o.n);
      Calculation finite(o.n, c.tokens());
      auto const  sub = substitute_all(finite);
      json        j{{"arity", o.n}, {"substituted", to_string(sub)}};
      std::string text = to_string(sub);
      if (c.tail()) {
        auto const z = resolve_point(c);
        j["point"]   = to_string(z);
        text += "\npoint: " + to_string(z);
      }
      if (contains_potential_cancellation(c)) {
        j["exponent"] = nullptr;
        text += "\nexponent: none (potential cancellation)";
      } else {
        auto const e  = exponent(c);
        j["exponent"] = e;
        text += "\nexponent: " + std::to_string(e);
      }
      emit(out, o, j, text);
      return kExitOk;
    }

    int cmd_embed(Options const& o, std::ostream& out) {
      arity_ratio(o.from, o.to);
      auto const g = normalize(parse_group_word(o.words.at(0), o.from));
      auto const h = embed(g, o.to);
      emit(out, o, form_json(h), to_string(h));
      return kExitOk;
    }

    int cmd_abelianize(Options const& o, std::ostream& out) {
      auto const v = abelianize(normalize(word_arg(o, 0)));
      emit(out, o, {{"vector", v}}, vector_text(v));
      return kExitOk;
    }

    int cmd_draw(Options const& o, std::ostream& out) {
      auto const g = normalize(word_arg(o, 0));
      emit(out, o, {{"dot", to_dot(g)}}, to_dot(g));
      return kExitOk;
    }

    struct Golden {
      std::vector<std::string> args;
      std::string              expected;
      int                      code;
    };

    std::vector<Golden> const& golden_corpus() {
      static std::vector<Golden> const corpus{
          {{"eval", "-n", "2", "y[001]", "00101101(0)*"}, "001100111(0)*\n", 0},
          {{"transduce", "-n", "2", "0 0 1 y 0 1 1 0"},
           "0 0 1 1 0 0 1 y\nexponent: 1\n", 0},
          {{"eval", "--calculation", "-n", "4", "y[300]^-1 y[30]", "3002(0)*"},
           "30032(0)*\n3 0 y 0 y' 2(0)*\n", 0},
          {{"transduce", "-n", "3", "y y (00002)*"},
           "y y\npoint: (02222)*\nexponent: 2\n", 0},
          {{"transduce", "-n", "4", "y y (00003)*"},
           "y y\npoint: (03333)*\nexponent: 2\n", 0},
          {{"transduce", "-n", "4", "y 0 y 0 2 y' 3 y 0 (0)*"},
           "2 y' 3 y 0\npoint: 203(0)*\nexponent: 2\n", 0},
          {{"transduce", "-n", "4", "y 1 0 (0)*"},
           "3 1 0\npoint: 31(0)*\nexponent: 0\n", 0},
          {{"normalize", "-n", "4", "y[300] y[3030]^-1 y[3033] y[30]"},
           "x0[3] x0[33] x0[3]^-2 y[30]^2\n", 0},
          {{"eq", "-n", "3", "y[20]", "x0[20] y[200] y[2020]^-1 y[2022]"}, "equal\n", 0},
          {{"embed", "--from", "3", "--to", "7", "x1"}, "x3\n", 0},
          {{"abelianize", "-n", "3", "y[20] x1"}, "(0, 1, 0, 1)\n", 0},
          {{"normalize", "-n", "3", "y[1]"}, "", kExitDomain},
          {{"normalize", "-n", "3", "x0 w"}, "", kExitParse},
      };
      return corpus;
    }

    int cmd_selftest(Options const& o, std::ostream& out) {
      json        cases = json::array();
      std::size_t failed = 0;
      for (auto const& g : golden_corpus()) {
        std::ostringstream first_out, first_err, second_out, second_err;
        int const          code   = run(g.args, first_out, first_err);
        int const          again  = run(g.args, second_out, second_err);
        bool const         stable = code == again && first_out.str() == second_out.str();
        bool const         ok = stable && code == g.code
                        && (g.code != kExitOk || first_out.str() == g.expected);
        failed += !ok;
        std::string line;
        for (auto const& a : g.args) {
          line += (line.empty() ? "" : " ") + (a.find(' ') == std::string::npos
                                                   ? a
                                                   : "\"" + a + "\"");
        }
        cases.push_back({{"command", line}, {"ok", ok}, {"exit", code}});
        if (!o.as_json) {
          out << (ok ? "PASS " : "FAIL ") << line << "\n";
        }
      }
      if (o.as_json) {
        out << json{{"schema", 1}, {"cases", cases}, {"failed", failed}}.dump() << "\n";
      } else {
        out << (golden_corpus().size() - failed) << "/" << golden_corpus().size()
            << " passed\n";
      }
      return failed == 0 ? kExitOk : kExitInvariant;
    }

    void report(std::ostream& out, std::ostream& err, bool as_json,
                char const* kind, std::string const& msg,
                std::optional<std::size_t> pos = std::nullopt) {
      err << "lmg: " << kind << " error: " << msg << "\n";
      if (as_json) {
        json j{{"schema", 1}, {"error", kind}, {"message", msg}};
        if (pos) {
          j["position"] = *pos;
        }
        out << j.dump() << "\n";
      }
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    Options  o;
    CLI::App app{"Words, normal forms and embeddings in the n-adic Lodha-Moore group",
                 "lmg"};
    app.require_subcommand(1);

    using Handler = std::function<int(Options const&, std::ostream&)>;
    std::vector<std::pair<CLI::App*, Handler>> handlers;
    auto add = [&](char const* name, char const* help, Handler h, int words,
                   bool point, bool arity = true) {
      CLI::App* sub = app.add_subcommand(name, help);
      if (arity) {
        sub->add_option("-n,--arity", o.n, "arity n (or an n=<k> header)")
            ->check(CLI::Range(kMinArity, kMaxArity));
      }
      sub->add_flag("--json", o.as_json, "JSON output");
      o.words.resize(2);
      if (words > 0) {
        sub->add_option("word", o.words[0], "a word, e.g. \"x0 y[10]^-1\"")->required();
      }
      if (words > 1) {
        sub->add_option("other", o.words[1], "the second word")->required();
      }
      if (point) {
        sub->add_option("point", o.point, "point pre(per)*")->required();
      }
      handlers.emplace_back(sub, std::move(h));
      return sub;
    };
    add("normalize", "print the normal form", cmd_normalize, 1, false);
    add("eq", "decide whether two words are equal", cmd_eq, 2, false);
    add("eval", "apply a word to a point", cmd_eval, 1, true)
        ->add_flag("--calculation", o.show_calc, "also print the calculation");
    add("exponent", "exponent of the normal form at a point", cmd_exponent, 1, true);
    add("transduce", "substitute a calculation", cmd_transduce, 1, false);
    auto* emb = add("embed", "the embedding G0(p) -> G0(q)", cmd_embed, 1, false, false);
    emb->add_option("--from", o.from, "source arity p")->required();
    emb->add_option("--to", o.to, "target arity q")->required();
    add("abelianize", "image in Z^{n+1}", cmd_abelianize, 1, false);
    add("draw", "DOT drawing of the normal form", cmd_draw, 1, false);
    add("selftest", "run the bundled golden corpus", cmd_selftest, 0, false, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kExitOk;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (CLI::ParseError const& e) {
      report(out, err, false, "parse", e.what());
      return kExitParse;
    }
    try {
      for (auto const& [sub, h] : handlers) {
        if (sub->parsed()) {
          return h(o, out);
        }
      }
      return kExitParse;
    } catch (ParseError const& e) {
      report(out, err, o.as_json, "parse", e.what(), e.position());
      return kExitParse;
    } catch (DomainError const& e) {
      report(out, err, o.as_json, "domain", e.what());
      return kExitDomain;
    } catch (InvariantError const& e) {
      report(out, err, o.as_json, "invariant", e.what());
      return kExitInvariant;
    }
  }

}  // namespace lmg
