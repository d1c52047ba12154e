// Command-line front end.
//
// Exit status: 0 computed (or true), 1 negative answer, 2 input error,
// 3 guard refusal.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aronszajn/algebra.hpp"
#include "aronszajn/coding.hpp"
#include "aronszajn/decomposition.hpp"
#include "aronszajn/errors.hpp"
#include "aronszajn/labeled_tree.hpp"
#include "aronszajn/quasi_order.hpp"
#include "aronszajn/random_terms.hpp"
#include "aronszajn/realization.hpp"
#include "aronszajn/term.hpp"

namespace {

using namespace aronszajn;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kGuard = 3;

struct Options {
  std::string labels_path;
  bool json = false;
  bool q_below_c = true;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// `@path` reads the argument from a file.
std::string arg_text(const std::string& raw) {
  return !raw.empty() && raw.front() == '@' ? read_file(raw.substr(1)) : raw;
}

// Label names mentioned by the inputs. Used to build the default alphabet.
class LabelPool {
 public:
  void add(const std::string& name) {
    if (!is_reserved_label(name)) names_.insert(name);
  }
  void add(const Term& t) {
    for (const auto& l : collect_labels(t)) add(l);
  }
  void add(const LabeledTree& t) {
    for (std::size_t v = 0; v < t.size(); ++v) add(t.label(v));
  }
  std::vector<std::string> names() const {
    std::set<std::string> all = names_;
    all.insert(std::string(kUnitLabel));
    return {all.begin(), all.end()};
  }

 private:
  std::set<std::string> names_;
};

// --labels FILE, or else every label mentioned by the inputs (plus the unit
// label) as an antichain.
TypeAlgebra make_algebra(const Options& opt, const LabelPool& pool) {
  const BaseTable table = BaseTable::standard(opt.q_below_c);
  if (!opt.labels_path.empty()) {
    return TypeAlgebra(parse_quasi_order(read_file(opt.labels_path)), table);
  }
  return TypeAlgebra(QuasiOrder::antichain(pool.names()), table);
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text << '\n';
  }
}

int emit_bool(const Options& opt, bool value, json j = json::object()) {
  j["result"] = value;
  emit(opt, j, value ? "true" : "false");
  return value ? kOk : kNegative;
}

json map_json(const TreeMap& f) { return json(f); }

std::string map_text(const TreeMap& f) {
  std::string out;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (v) out += ' ';
    out += std::to_string(v) + "->" + std::to_string(f[v]);
  }
  return out;
}

json cover_json(const CoverSolution& c) {
  json entries = json::array();
  for (const auto& e : c.entries) {
    entries.push_back({{"nodes", e.nodes},
                       {"subtree", to_sexpr(e.subtree)},
                       {"into_original", e.into_original},
                       {"onto_subtree", e.onto_subtree}});
  }
  return {{"n", c.bound}, {"entries", entries}};
}

std::string cover_text(const CoverSolution& c) {
  std::ostringstream out;
  out << "n = " << c.bound;
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& e = c.entries[i];
    out << "\ntree " << i << ": nodes {";
    for (std::size_t k = 0; k < e.nodes.size(); ++k) out << (k ? " " : "") << e.nodes[k];
    out << "} subtree " << to_sexpr(e.subtree) << "\n  onto subtree: " << map_text(e.onto_subtree);
  }
  return out.str();
}

std::vector<LabeledTree> parse_trees(const std::vector<std::string>& raw, LabelPool& pool) {
  std::vector<LabeledTree> out;
  for (const auto& r : raw) {
    out.push_back(parse_tree(arg_text(r)));
    pool.add(out.back());
  }
  return out;
}

Term parse_input_term(const std::string& raw, LabelPool& pool) {
  Term t = parse_term(arg_text(raw));
  pool.add(t);
  return t;
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::kPlus;
  if (s == "-" || s == "minus") return Sign::kMinus;
  throw InputError("unknown sign '" + s + "' (expected + or -)");
}

int run(int argc, char** argv) {
  CLI::App app{"Order-type algebra of fragmented Aronszajn lines and countable orders"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--labels", opt.labels_path, "Quasi-order file (elements: ... / a <= b)");
  app.add_flag("--json", opt.json, "Structured output");
  app.add_flag("!--no-q-below-c", opt.q_below_c, "Make Q incomparable with C and C*");

  std::function<int()> action;
  std::vector<std::string> args;
  int depth = 3, cap = 6;
  std::size_t n = 1, count = 500;
  std::uint64_t seed = 0;
  std::string kind_text = "1", sign_text, label = std::string(kUnitLabel);
  int level = 0, gen_depth = 3;

  auto term1 = [&](const char* name, const char* help, auto body) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("term", args, "Term s-expression or @file")->required()->expected(1);
    sub->callback([&, body] {
      action = [&, body] {
        LabelPool pool;
        const Term t = parse_input_term(args.at(0), pool);
        const TypeAlgebra alg = make_algebra(opt, pool);
        alg.validate(t);
        return body(alg, t);
      };
    });
    return sub;
  };
  auto term2 = [&](const char* name, const char* help, auto body) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("terms", args, "Two terms")->required()->expected(2);
    sub->callback([&, body] {
      action = [&, body] {
        LabelPool pool;
        const Term s = parse_input_term(args.at(0), pool);
        const Term t = parse_input_term(args.at(1), pool);
        const TypeAlgebra alg = make_algebra(opt, pool);
        alg.validate(s);
        alg.validate(t);
        return body(alg, s, t);
      };
    });
    return sub;
  };
  auto trees = [&](const char* name, const char* help, int expected, auto body) {
    auto* sub = app.add_subcommand(name, help);
    auto* o = sub->add_option("trees", args, "Tree s-expressions or @file")->required();
    if (expected > 0) o->expected(expected);
    sub->callback([&, body] {
      action = [&, body] {
        LabelPool pool;
        const auto ts = parse_trees(args, pool);
        const TypeAlgebra alg = make_algebra(opt, pool);
        return body(alg.qplus(), ts);
      };
    });
    return sub;
  };

  term1("parse", "Parse and print canonically", [&](const TypeAlgebra&, const Term& t) {
    emit(opt, {{"term", to_sexpr(t)}}, to_sexpr(t));
    return kOk;
  });
  term1("normalize", "Normal form", [&](const TypeAlgebra& alg, const Term& t) {
    const Term nf = alg.normalize(t);
    emit(opt, {{"term", to_sexpr(nf)}}, to_sexpr(nf));
    return kOk;
  });
  term2("leq", "Embeddability s <= t", [&](const TypeAlgebra& alg, const Term& s, const Term& t) {
    return emit_bool(opt, alg.leq(s, t));
  });
  term2("equiv", "Equivalence", [&](const TypeAlgebra& alg, const Term& s, const Term& t) {
    return emit_bool(opt, alg.equiv(s, t));
  });
  term1("ai-check", "Algebraic indecomposability", [&](const TypeAlgebra& alg, const Term& t) {
    return emit_bool(opt, alg.is_ai(alg.normalize(t)));
  });
  term1("h-check", "Membership in H (no Sum after normalization)",
        [&](const TypeAlgebra& alg, const Term& t) {
          return emit_bool(opt, is_h_member(alg.normalize(t)));
        });
  term1("decompose", "Finite sum of AI pieces", [&](const TypeAlgebra& alg, const Term& t) {
    const Decomposition d = decompose(alg, t);
    json pieces = json::array();
    std::string text;
    for (const auto& p : d.pieces) {
      pieces.push_back(to_sexpr(p));
      text += to_sexpr(p) + '\n';
    }
    text += std::string("input <= sum: ") + (d.input_below_sum ? "true" : "false") +
            "\nsum <= input: " + (d.sum_below_input ? "true" : "false");
    emit(opt,
         {{"pieces", pieces},
          {"input_below_sum", d.input_below_sum},
          {"sum_below_input", d.sum_below_input}},
         text);
    return d.certified() ? kOk : kNegative;
  });
  {
    auto* sub = app.add_subcommand("d-line", "D+/D- line of level n");
    sub->add_option("n", level, "Level")->required();
    sub->add_option("sign", sign_text, "+ or -")->required();
    sub->add_option("--label", label, "Point label");
    sub->callback([&] {
      action = [&] {
        const Term t = d_line(level, parse_sign(sign_text), label);
        emit(opt, {{"term", to_sexpr(t)}}, to_sexpr(t));
        return kOk;
      };
    });
  }
  term2("product", "Sum of copies of phi indexed by index",
        [&](const TypeAlgebra& alg, const Term& phi, const Term& index) {
          const Term p = alg.product(phi, index);
          emit(opt, {{"term", to_sexpr(p)}}, to_sexpr(p));
          return kOk;
        });
  term1("encode", "Code tree of an H-term", [&](const TypeAlgebra& alg, const Term& t) {
    const Term nf = alg.normalize(t);
    if (!is_h_member(nf)) throw InputError("term has a Sum after normalization; decompose first");
    const std::string code = to_sexpr(encode(nf));
    emit(opt, {{"tree", code}}, code);
    return kOk;
  });
  trees("decode", "Term of a code tree", 1, [&](const QPlus&, const std::vector<LabeledTree>& ts) {
    const std::string t = to_sexpr(decode(ts.at(0)));
    emit(opt, {{"term", t}}, t);
    return kOk;
  });
  trees("tree-leq", "Tree order s <= t", 2,
        [&](const QPlus& q, const std::vector<LabeledTree>& ts) {
          const auto kind = parse_tree_order_kind(kind_text);
          if (!kind) throw InputError("unknown tree order kind '" + kind_text + "'");
          const auto w = find_tree_embedding(q, *kind, ts.at(0), ts.at(1));
          json j = json::object();
          if (w) j["witness"] = map_json(*w);
          j["result"] = w.has_value();
          emit(opt, j, w ? "true\nwitness: " + map_text(*w) : "false");
          return w ? kOk : kNegative;
        })
      ->add_option("--kind", kind_text, "1, i, s or m")
      ->check(CLI::IsMember({"1", "i", "s", "m"}));
  trees("treetops", "Number of leaves", 1, [&](const QPlus&, const std::vector<LabeledTree>& ts) {
    const std::size_t k = treetops(ts.at(0));
    emit(opt, {{"treetops", k}}, std::to_string(k));
    return kOk;
  });
  trees("cover", "Cover with at most n treetops", 0,
        [&](const QPlus& q, const std::vector<LabeledTree>& ts) {
          const auto c = find_cover(q, ts, n);
          if (!c) {
            emit(opt, {{"result", false}}, "none");
            return kNegative;
          }
          emit(opt, cover_json(*c), cover_text(*c));
          return kOk;
        })
      ->add_option("--n", n, "Treetop bound")
      ->required();
  trees("cover-min", "Least cover number", 0,
        [&](const QPlus& q, const std::vector<LabeledTree>& ts) {
          const std::size_t k = minimal_cover_number(q, ts);
          const auto c = find_cover(q, ts, k);
          emit(opt, cover_json(*c), cover_text(*c));
          return kOk;
        });
  term1("ramsey-bound", "Treetop bound on the big Ramsey degree",
        [&](const TypeAlgebra& alg, const Term& t) {
          const std::size_t b = ramsey_bound(alg, t);
          emit(opt, {{"bound", b}}, std::to_string(b));
          return kOk;
        });
  term1("realize", "Finite truncation of a countable-base term",
        [&](const TypeAlgebra& alg, const Term& t) {
          const auto r = realize(alg.normalize(t), depth);
          emit(opt, {{"labels", r.labels}, {"depth", r.depth}}, to_text(r.labels));
          return kOk;
        })
      ->add_option("--depth", depth, "Truncation depth")
      ->required();
  {
    auto* sub = app.add_subcommand("embed", "Finite labeled linear order embedding");
    sub->add_option("sequences", args, "Two whitespace-separated label sequences")
        ->required()
        ->expected(2);
    sub->callback([&] {
      action = [&] {
        LabelPool pool;
        const auto a = parse_realization(arg_text(args.at(0)));
        const auto b = parse_realization(arg_text(args.at(1)));
        for (const auto& l : a) pool.add(l);
        for (const auto& l : b) pool.add(l);
        const TypeAlgebra alg = make_algebra(opt, pool);
        return emit_bool(opt, finite_embed(alg.labels(), a, b));
      };
    });
  }
  {
    auto* sub = term2("oracle-check", "Check s <= t against finite truncations",
                      [&](const TypeAlgebra& alg, const Term& s, const Term& t) {
                        const OracleReport r = oracle_compare(alg, s, t, depth, cap);
                        json j = {{"term_leq", r.term_holds},
                                  {"inconclusive", r.inconclusive},
                                  {"note", r.note}};
                        std::string text = std::string("term_leq: ") +
                                           (r.term_holds ? "true" : "false");
                        if (r.found_depth) {
                          j["found_depth"] = *r.found_depth;
                          text += "\nfound at depth " + std::to_string(*r.found_depth);
                        }
                        if (r.inconclusive) {
                          text += "\ninconclusive: " + r.note;
                          std::cerr << "warning: " << r.note << '\n';
                        }
                        emit(opt, j, text);
                        return r.term_holds ? kOk : kNegative;
                      });
    sub->add_option("--depth", depth, "Source truncation depth");
    sub->add_option("--cap", cap, "Largest target depth");
  }
  {
    auto* sub = app.add_subcommand("soundness-batch",
                                   "Random H-term pairs: tree order on codes vs term order");
    sub->add_option("--count", count, "Number of pairs");
    sub->add_option("--seed", seed, "Random seed")->required();
    sub->add_option("--depth", gen_depth, "Maximum term depth");
    sub->callback([&] {
      action = [&] {
        const TypeAlgebra alg = make_algebra(opt, LabelPool{});
        TermGenOptions gen;
        gen.labels = alg.labels().elements();
        gen.max_depth = gen_depth;
        gen.allow_sum = false;
        std::mt19937_64 rng(seed);
        std::vector<std::pair<Term, Term>> pairs;
        for (std::size_t i = 0; i < count; ++i) pairs.push_back(random_related_pair(rng, gen));
        const SoundnessSummary s = soundness_batch(alg, pairs);
        auto examples = [](const auto& v) {
          json a = json::array();
          for (const auto& [x, y] : v) a.push_back({to_sexpr(x), to_sexpr(y)});
          return a;
        };
        std::ostringstream text;
        text << "pairs " << s.pairs << "\nterm_leq " << s.term_holds << "\ntree_s "
             << s.tree_s_holds << "\ntree_m " << s.tree_m_holds << "\nviolations_s "
             << s.violations_s << "\nviolations_m " << s.violations_m;
        for (const auto& [x, y] : s.examples_m) {
          text << "\nviolation: " << to_sexpr(x) << "  " << to_sexpr(y);
        }
        emit(opt,
             {{"pairs", s.pairs},
              {"term_leq", s.term_holds},
              {"tree_s", s.tree_s_holds},
              {"tree_m", s.tree_m_holds},
              {"violations_s", s.violations_s},
              {"violations_m", s.violations_m},
              {"examples_s", examples(s.examples_s)},
              {"examples_m", examples(s.examples_m)}},
             text.str());
        return s.violations_s + s.violations_m == 0 ? kOk : kNegative;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return action();
  } catch (const GuardRefusal& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kGuard;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
