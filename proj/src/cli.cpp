#include "fiveclass/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "fiveclass/ahss.hpp"
#include "fiveclass/algebra.hpp"
#include "fiveclass/bordism.hpp"
#include "fiveclass/bundle.hpp"
#include "fiveclass/error.hpp"
#include "fiveclass/expression_parser.hpp"
#include "fiveclass/manifold_json.hpp"
#include "fiveclass/sampling.hpp"

namespace fiveclass::cli {

using nlohmann::ordered_json;
using algebra::Invariants;
using algebra::StandardForm;
using bordism::Category;

namespace {

std::string big(const forms::Integer& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string vector_text(const std::vector<forms::Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + big(v[i]);
  return s + ")";
}

ordered_json form_json(const StandardForm& f) {
  ordered_json j;
  j["expression"] = f.to_string();
  j["pretty"] = f.pretty();
  j["category"] = bordism::to_string(f.category);
  j["family"] = algebra::to_string(f.family);
  j["type"] = algebra::to_string(f.type());
  j["p"] = f.p;
  j["q"] = f.q;
  j["s"] = f.s();
  j["k"] = f.k;
  j["r"] = f.r();
  return j;
}

ordered_json invariants_json(const Invariants& inv) {
  ordered_json j;
  j["category"] = bordism::to_string(inv.category);
  j["type"] = algebra::to_string(inv.type);
  j["r"] = inv.r;
  j["p_class"] = inv.p_class.to_string();
  j["canonical_class"] = inv.canonical().element().to_string();
  j["ks"] = inv.ks;
  return j;
}

std::string level_word(algebra::Level l) {
  switch (l) {
    case algebra::Level::Diffeo: return "diffeomorphic";
    case algebra::Level::Homeo: return "homeomorphic";
    case algebra::Level::Homotopy: return "homotopy equivalent";
  }
  return "?";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidForm, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --- classify --------------------------------------------------------------

struct ClassifyArgs {
  std::string input;
  std::string c1;
  bool json = false;
};

int do_classify(const ClassifyArgs& a, std::ostream& out) {
  ManifoldFile file = parse_manifold_json(read_file(a.input));
  if (!a.c1.empty()) {
    file.c1 = parse_class(a.c1);
  }
  if (!file.c1) {
    throw Error(ErrorCode::InvalidForm, "no c1 given (use --c1 or a \"c1\" key)");
  }
  const bundle::BundleInput in{file.form, file.ks, *file.c1};
  const bundle::Classification c = bundle::classify(in);

  if (a.json) {
    ordered_json j;
    j["m"] = big(c.m);
    j["r"] = c.r;
    j["w2type"] = algebra::to_string(c.type);
    j["q"] = c.q;
    j["s"] = c.s;
    j["k"] = c.k;
    j["c_tilde_square"] = big(c.c_tilde_square);
    j["smoothable"] = c.smoothable;
    j["homeo_form"] = form_json(c.homeo_form);
    ordered_json smooth = ordered_json::array();
    for (const auto& f : c.smooth_forms) smooth.push_back(form_json(f));
    j["smooth_forms"] = smooth;
    j["invariants"] = invariants_json(c.invariants);
    j["rule"] = c.rule;
    out << j.dump(2) << '\n';
    return kOk;
  }

  const forms::IntersectionForm& q = in.form;
  out << "base: rank " << q.rank() << ", signature " << forms::signature(q)
      << ", " << (forms::is_even(q) ? "even" : "odd") << ", KS " << in.ks
      << '\n';
  out << "c1 = " << vector_text(in.c1.pairings()) << ", divisibility " << big(c.m)
      << ", c~^2 = " << big(c.c_tilde_square) << '\n';
  out << "w2-type " << algebra::to_string(c.type) << ", r = " << c.r
      << ", q = " << c.q;
  if (c.type == algebra::W2Type::I) out << ", s = " << c.s;
  out << ", k = " << c.k << '\n';
  out << "homeomorphism type: " << c.homeo_form.to_string() << "   "
      << c.homeo_form.pretty() << "  (per " << c.rule << ")\n";
  out << "invariants: " << c.invariants.to_string() << '\n';
  if (!c.smoothable) {
    out << "smoothable: no (KS(X) = 1 and c1 has even divisibility)\n";
    return kOk;
  }
  out << "smoothable: yes\n";
  if (c.smooth_forms.size() == 1) {
    out << "diffeomorphism type: " << c.smooth_forms[0].to_string() << "   "
        << c.smooth_forms[0].pretty() << '\n';
  } else {
    out << "diffeomorphism type, up to an ambiguity of order 2:";
    for (std::size_t i = 0; i < c.smooth_forms.size(); ++i)
      out << (i ? ", " : " ") << c.smooth_forms[i].to_string();
    out << '\n';
  }
  return kOk;
}

// --- expression commands ---------------------------------------------------

struct ExpressionArgs {
  std::string text;
  std::string other;
  std::string category = "smooth";
  std::string level = "homeo";
  bool json = false;
};

int do_invariants(const ExpressionArgs& a, std::ostream& out) {
  const auto e = parse_expression(a.text, bordism::parse_category(a.category));
  const Invariants inv = algebra::invariants(e);
  if (a.json) {
    ordered_json j;
    j["expression"] = e.to_string();
    j["invariants"] = invariants_json(inv);
    j["relations_hold"] = algebra::check_relations(inv);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << e.to_string() << '\n';
  out << "  category: " << bordism::to_string(inv.category) << '\n';
  out << "  w2-type:  " << algebra::to_string(inv.type) << '\n';
  out << "  r:        " << inv.r << '\n';
  out << "  [P]:      " << inv.p_class.to_string() << "  (+-class "
      << inv.canonical().element().to_string() << ")\n";
  if (inv.category == Category::Top) out << "  KS:       " << inv.ks << '\n';
  return kOk;
}

int do_normalize(const ExpressionArgs& a, std::ostream& out) {
  const auto e = parse_expression(a.text, bordism::parse_category(a.category));
  const StandardForm f = algebra::normalize(e);
  if (a.json) {
    ordered_json j;
    j["input"] = e.to_string();
    j["standard_form"] = form_json(f);
    j["invariants"] = invariants_json(f.invariants());
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << f.to_string() << '\n';
  out << "  " << f.pretty() << '\n';
  out << "  (standard form of w2-type " << algebra::to_string(f.type())
      << ", " << bordism::to_string(f.category) << " classification)\n";
  return kOk;
}

int do_compare(const ExpressionArgs& a, std::ostream& out) {
  const Category cat = bordism::parse_category(a.category);
  const algebra::Level level = algebra::parse_level(a.level);
  const Invariants x = algebra::invariants(parse_expression(a.text, cat));
  const Invariants y = algebra::invariants(parse_expression(a.other, cat));
  const bool same = algebra::equivalent(x, y, level);
  if (a.json) {
    ordered_json j;
    j["level"] = algebra::to_string(level);
    j["equivalent"] = same;
    j["first"] = invariants_json(x);
    j["second"] = invariants_json(y);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << level_word(level) << ": " << (same ? "yes" : "no") << '\n';
  return kOk;
}

// --- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  int r_max = 0;
  std::string category = "smooth";
  std::string type;
  bool json = false;
};

int do_enumerate(const EnumerateArgs& a, std::ostream& out) {
  if (a.r_max < 0) throw Error(ErrorCode::RangeExceeded, "--r-max must be >= 0");
  std::optional<algebra::W2Type> filter;
  if (!a.type.empty()) filter = algebra::parse_w2type(a.type);
  ordered_json list = ordered_json::array();
  for (const StandardForm& f :
       algebra::enumerate(a.r_max, bordism::parse_category(a.category))) {
    if (filter && f.type() != *filter) continue;
    if (a.json) {
      list.push_back(form_json(f));
      continue;
    }
    out << "r=" << f.r() << "  type=" << std::left << std::setw(3)
        << algebra::to_string(f.type()) << "  q=" << f.q << "  s=" << f.s();
    if (f.category == Category::Top) out << "  p=" << f.p;
    out << "  " << f.to_string() << std::right << '\n';
  }
  if (a.json) out << list.dump(2) << '\n';
  return kOk;
}

// --- bordism ---------------------------------------------------------------

int do_bordism_info(const std::string& kind_text, std::ostream& out) {
  std::vector<bordism::GroupKind> kinds;
  if (kind_text.empty()) {
    kinds = bordism::all_kinds();
  } else {
    kinds.push_back(bordism::parse_kind(kind_text));
  }
  out << std::left << std::setw(10) << "group" << std::setw(14) << "orders"
      << std::setw(8) << "|G|" << std::setw(18) << "generators"
      << "invariants\n";
  for (const auto& k : kinds) {
    const bordism::GroupInfo g = bordism::group_info(k);
    auto join = [](const auto& v) {
      std::ostringstream os;
      os << '[';
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      os << ']';
      return os.str();
    };
    out << std::setw(10) << bordism::kind_name(k) << std::setw(14)
        << join(g.orders) << std::setw(8) << g.group_order() << std::setw(18)
        << join(g.generators) << join(g.invariants) << '\n';
  }
  out << std::right;
  return kOk;
}

// --- ahss ------------------------------------------------------------------

struct AhssArgs {
  int r = 0;
  std::string twist = "none";
  bool dump = false;
  bool json = false;
};

int do_ahss(const AhssArgs& a, std::ostream& out) {
  const ahss::TwistKind twist = ahss::parse_twist(a.twist);
  if (a.dump) out << ahss::dump(ahss::compute_page(a.r, twist)) << '\n';
  if (a.dump && a.r > ahss::kMaxOrderFactors) {
    out << "(orders are only computed for r <= " << ahss::kMaxOrderFactors
        << ")\n";
    return kOk;
  }
  const ahss::Omega5Report rep = ahss::omega5(a.r, twist);
  const bool match = rep.order == rep.expected;
  if (a.json) {
    ordered_json j;
    j["r"] = rep.r;
    j["twist"] = ahss::to_string(twist);
    j["e3_log2"] = {{"5,0", rep.e3_50}, {"4,1", rep.e3_41}, {"3,2", rep.e3_32},
                    {"1,4", rep.e3_14}, {"4,2", rep.e3_42}};
    j["d3_rank"] = rep.d3_rank;
    j["d3_policy"] = rep.d3_policy;
    j["order"] = rep.order;
    j["closed_form"] = rep.expected;
    j["match"] = match;
    j["structure"] = rep.structure;
    out << j.dump(2) << '\n';
  } else {
    out << "Omega_5^Spin(RP^inf x (CP^inf)^" << rep.r << "; "
        << ahss::to_string(twist) << ")\n";
    out << "  E3 on p+q=5 (log2): (5,0) " << rep.e3_50 << ", (4,1) " << rep.e3_41
        << ", (3,2) " << rep.e3_32 << ", (1,4) " << rep.e3_14 << '\n';
    out << "  " << rep.d3_policy << " (rank " << rep.d3_rank << ", E3(4,2) has log2 "
        << rep.e3_42 << ")\n";
    out << "  order: " << rep.order << "   closed form: " << rep.expected
        << (match ? "   ok" : "   MISMATCH") << '\n';
    out << "  structure (stated, not computed): " << rep.structure << '\n';
  }
  return match ? kOk : kConsistencyFailure;
}

// --- selftest --------------------------------------------------------------

struct SelftestArgs {
  std::uint64_t seed = sampling::kDefaultSeed;
  int count = 50;
};

int do_selftest(const SelftestArgs& a, std::ostream& out) {
  sampling::Rng rng(a.seed);
  int failures = 0;
  auto report = [&](const std::string& name, int bad, int total) {
    out << (bad ? "FAIL  " : "ok    ") << name << "  (" << total - bad << "/"
        << total << ")\n";
    failures += bad;
  };

  int bad = 0;
  for (int i = 0; i < a.count; ++i) {
    const auto s = sampling::random_form(rng);
    const auto c = sampling::random_characteristic(rng, s.form);
    const forms::Integer sq = forms::square(s.form, c);
    const int sigma = forms::signature(s.form);
    if ((sq - sigma) % 8 != 0 || (sq - static_cast<int>(s.form.rank())) % 2 != 0)
      ++bad;
  }
  report("characteristic squares: c^2 = sigma (mod 8), c^2 = rank (mod 2)", bad,
         a.count);

  bad = 0;
  for (int i = 0; i < a.count; ++i) {
    const bundle::BundleInput in = sampling::random_bundle_input(rng, 20);
    try {
      const auto c = bundle::classify(in);
      const bundle::BundleInput st{
          in.form.direct_sum(forms::IntersectionForm::block(forms::NamedBlock::Hyperbolic)),
          in.ks, in.c1.extended(2)};
      const auto d = bundle::classify(st);
      if (d.r != c.r + 2 || d.k != c.k + 1 || d.type != c.type || d.q != c.q ||
          d.s != c.s)
        ++bad;
    } catch (const Error&) {
      ++bad;
    }
  }
  report("bundle classification and stabilization", bad, a.count);

  bad = 0;
  int total = 0;
  for (Category cat : {Category::Smooth, Category::Top}) {
    for (const StandardForm& f : algebra::enumerate(6, cat)) {
      ++total;
      const Invariants inv = f.invariants();
      if (!algebra::check_relations(inv) || algebra::normalize(f.expression()) != f)
        ++bad;
    }
  }
  report("standard forms r <= 6: relations and normalization", bad, total);

  bad = 0;
  total = 0;
  for (auto t : {ahss::TwistKind::None, ahss::TwistKind::TwoEta, ahss::TwistKind::Gamma}) {
    for (int r = t == ahss::TwistKind::Gamma ? 1 : 0; r <= ahss::kMaxOrderFactors; ++r) {
      ++total;
      try {
        if (ahss::omega5_order(r, t) != ahss::closed_form_order(r, t)) ++bad;
      } catch (const Error&) {
        ++bad;
      }
    }
  }
  report("spectral sequence orders against closed forms", bad, total);

  out << "seed " << a.seed << ": " << (failures ? "FAILED" : "all checks passed")
      << '\n';
  return failures ? kConsistencyFailure : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Classification of 5-manifolds with fundamental group Z/2",
               "fiveclass"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand(
      "classify", "Classify a circle bundle total space over a 4-manifold");
  classify->add_option("--input", classify_args.input, "manifold JSON file")
      ->required();
  classify->add_option("--c1", classify_args.c1,
                       "Chern class as comma-separated pairings, e.g. 2,0,0");
  classify->add_flag("--json", classify_args.json, "machine-readable output");

  ExpressionArgs expr_args;
  auto add_expression_options = [&](CLI::App* sub) {
    sub->add_option("--category", expr_args.category, "smooth or top")
        ->capture_default_str();
    sub->add_flag("--json", expr_args.json, "machine-readable output");
  };
  auto* invariants = app.add_subcommand("invariants", "Invariants of an expression");
  invariants->add_option("expression", expr_args.text)->required();
  add_expression_options(invariants);
  auto* normalize = app.add_subcommand("normalize", "Standard form of an expression");
  normalize->add_option("expression", expr_args.text)->required();
  add_expression_options(normalize);
  auto* compare = app.add_subcommand("compare", "Compare two expressions");
  compare->add_option("first", expr_args.text)->required();
  compare->add_option("second", expr_args.other)->required();
  compare->add_option("--level", expr_args.level, "diffeo, homeo or homotopy")
      ->capture_default_str();
  add_expression_options(compare);

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List standard forms");
  enumerate->add_option("--r-max", enum_args.r_max)->required();
  enumerate->add_option("--category", enum_args.category, "smooth or top")
      ->capture_default_str();
  enumerate->add_option("--type", enum_args.type, "I, II or III");
  enumerate->add_flag("--json", enum_args.json, "machine-readable output");

  auto* bord = app.add_subcommand("bordism", "Pin bordism group arithmetic");
  bord->require_subcommand(1);
  std::string kind_text, x_text, y_text;
  auto* info = bord->add_subcommand("info", "Group table");
  info->add_option("kind", kind_text, "e.g. pinc, top-pin+");
  auto* add = bord->add_subcommand("add", "Sum of two elements");
  add->add_option("a", x_text)->required();
  add->add_option("b", y_text)->required();
  auto* neg = bord->add_subcommand("neg", "Negative of an element");
  neg->add_option("a", x_text)->required();
  auto* canon = bord->add_subcommand("canon", "Representative modulo +-1");
  canon->add_option("a", x_text)->required();
  auto* forget = bord->add_subcommand("forget", "Image in the topological group");
  forget->add_option("a", x_text)->required();

  AhssArgs ahss_args;
  auto* ahss_cmd = app.add_subcommand(
      "ahss", "Order of Omega_5^Spin(RP^inf x (CP^inf)^r; twist)");
  ahss_cmd->add_option("--r", ahss_args.r)->required();
  ahss_cmd->add_option("--twist", ahss_args.twist, "none, 2eta or gamma")
      ->capture_default_str();
  ahss_cmd->add_flag("--dump-pages", ahss_args.dump, "print E2, d2 and E3");
  ahss_cmd->add_flag("--json", ahss_args.json, "machine-readable output");

  SelftestArgs self_args;
  auto* selftest = app.add_subcommand("selftest", "Randomized consistency checks");
  selftest->add_option("--seed", self_args.seed)->capture_default_str();
  selftest->add_option("--count", self_args.count)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*classify) return do_classify(classify_args, out);
    if (*invariants) return do_invariants(expr_args, out);
    if (*normalize) return do_normalize(expr_args, out);
    if (*compare) return do_compare(expr_args, out);
    if (*enumerate) return do_enumerate(enum_args, out);
    if (*bord) {
      if (*info) return do_bordism_info(kind_text, out);
      const auto x = bordism::BordismElement::parse(x_text);
      if (*add) {
        out << bordism::add(x, bordism::BordismElement::parse(y_text)).to_string()
            << '\n';
      } else if (*neg) {
        out << bordism::neg(x).to_string() << '\n';
      } else if (*canon) {
        out << bordism::canonicalize(x).element().to_string() << '\n';
      } else if (*forget) {
        out << bordism::forget_smooth(x).to_string() << '\n';
      }
      return kOk;
    }
    if (*ahss_cmd) return do_ahss(ahss_args, out);
    if (*selftest) return do_selftest(self_args, out);
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return e.is_consistency_failure() ? kConsistencyFailure : kInputError;
  }
  return kInputError;
}

}  // namespace fiveclass::cli
