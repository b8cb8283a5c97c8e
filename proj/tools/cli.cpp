#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "cache.hpp"
#include "shuffle/bialgebra.hpp"
#include "shuffle/errors.hpp"
#include "shuffle/generators.hpp"
#include "shuffle/hall_geometry.hpp"
#include "shuffle/phi_map.hpp"
#include "shuffle/suites.hpp"
#include "shuffle/symfunc.hpp"
#include "shuffle/x_identities.hpp"

namespace shuffle::cli {
namespace {

using nlohmann::json;

json coeff_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class coeff_from(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

json poly_json(const LaurentPoly& p, bool with_z) {
  json arr = json::array();
  for (const auto& t : p.terms()) {
    json row = {coeff_json(t.coeff.numerator()), coeff_json(t.coeff.denominator()), t.mono.s(), t.mono.q2()};
    if (with_z) {
      json z = json::array();
      for (int i = 0; i < p.var_count(); ++i) z.push_back(t.mono.zexp(i));
      row.push_back(z);
    }
    arr.push_back(row);
  }
  return arr;
}

LaurentPoly poly_from(const json& arr, int var_count) {
  std::vector<Term> terms;
  for (const auto& row : arr) {
    Monomial m = Monomial::params(row.at(2).get<int>(), row.at(3).get<int>());
    if (var_count > 0) {
      const auto& z = row.at(4);
      if (static_cast<int>(z.size()) != var_count) throw ParseError("json: z exponent count does not match k");
      for (int i = 0; i < var_count; ++i) m.set(Monomial::z_slot(i), z[i].get<int>());
    }
    mpq_class c(coeff_from(row.at(0)), coeff_from(row.at(1)));
    c.canonicalize();
    terms.push_back({m, Rational(c)});
  }
  return LaurentPoly::from_terms(var_count, std::move(terms));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError("expected an integer, got '" + s + "'");
  return v;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> v;
  if (s.empty()) return v;
  for (const auto& part : split(s, ',')) v.push_back(to_int(part));
  return v;
}

struct Options {
  std::optional<int> max_k;
  int window = 6;
  int jobs = 0;
  bool no_cache = false;
  bool json_out = false;
  long max_terms = 2'000'000;
  std::uint32_t seed = 1;
};

class Session {
 public:
  Session(const Options& o, std::ostream& out) : opt_(o), out_(out), cache_(default_cache_dir(), !o.no_cache) {}

  // kind plus its arguments, e.g. {"P", "2", "1"}
  ShuffleElement element(const std::string& kind, const std::vector<std::string>& a) {
    const std::string key = cache_key(kind, a);
    if (auto hit = cache_.get(key)) {
      try {
        return ShuffleElement::parse(*hit);
      } catch (const ParseError&) {
        std::error_code ec;
        std::filesystem::remove(cache_.path_for(key), ec);
      }
    }
    ShuffleElement e = compute(kind, a);
    if (static_cast<long>(e.num().size()) > opt_.max_terms)
      throw ResourceLimit("resource guard: " + std::to_string(e.num().size()) + " numerator terms, ceiling " + std::to_string(opt_.max_terms));
    cache_.put(key, e.str());
    return e;
  }

  // P:2:1, X:0,1, Xeps:2:1:2:0 ...
  ShuffleElement ref(const std::string& text) {
    auto parts = split(text, ':');
    const std::string kind = parts.front();
    parts.erase(parts.begin());
    return element(kind, parts);
  }

  void emit(const ShuffleElement& e) {
    if (opt_.json_out)
      out_ << to_json(e).dump() << "\n";
    else
      out_ << e.str();
  }

  int report(const Report& r) {
    if (opt_.json_out) {
      json arr = json::array();
      for (const auto& l : r.lines) arr.push_back({{"id", l.id}, {"pass", l.pass}, {"detail", l.detail}});
      out_ << arr.dump(1) << "\n";
    } else {
      out_ << r.str();
    }
    return r.ok() ? kExitPass : kExitFail;
  }

  const Options& opt() const { return opt_; }
  Cache& cache() { return cache_; }

 private:
  static std::string cache_key(const std::string& kind, const std::vector<std::string>& a) {
    std::string key = kind;
    for (const auto& x : a) key += ":" + x;
    return key;
  }

  static void need(const std::vector<std::string>& a, std::size_t lo, std::size_t hi, const std::string& what) {
    if (a.size() < lo || a.size() > hi) throw ParseError(what);
  }

  ShuffleElement compute(const std::string& kind, const std::vector<std::string>& a) {
    if (kind == "P") {
      need(a, 2, 2, "P takes k d");
      return build_P(to_int(a[0]), to_int(a[1]));
    }
    if (kind == "Precursive") {
      need(a, 2, 3, "Precursive takes k d [rank]");
      return build_P_recursive(to_int(a[0]), to_int(a[1]), a.size() == 3 ? to_int(a[2]) : 0).element;
    }
    if (kind == "X") {
      need(a, 1, 1, "X takes a comma-separated exponent list");
      auto m = int_list(a[0]);
      if (m.empty()) throw ParseError("X needs at least one exponent");
      return build_X(m);
    }
    if (kind == "Xeps") {
      need(a, 3, 4, "Xeps takes a b n [bits]");
      return build_X_eps(EpsilonVector(to_int(a[0]), to_int(a[1]), to_int(a[2]), a.size() == 4 ? a[3] : ""));
    }
    if (kind == "theta" || kind == "Q") {
      need(a, 3, 3, kind + " takes a b n");
      const int n = to_int(a[2]);
      if (n < 1) throw ParseError(kind + ": n must be positive");
      ThetaQ tq = build_theta_Q(to_int(a[0]), to_int(a[1]), n);
      return kind == "theta" ? tq.theta[n - 1] : tq.Q[n - 1];
    }
    throw ParseError("unknown element kind '" + kind + "'");
  }

  Options opt_;
  std::ostream& out_;
  Cache cache_;
};

const Grid kExtra = {{5, -2}, {5, -1}, {5, 1}, {5, 2}};

Grid main_grid(const Options& o) {
  const int mk = o.max_k.value_or(4);
  return mk == 4 ? standard_grid() : make_grid(mk, 5);
}

Report wheel_on_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  ShuffleElement e = read_element(buf.str());
  Report r;
  std::string why;
  const bool sym = is_symmetric(e.num(), e.k(), &why);
  r.add("symmetry " + path, sym, sym ? "symmetric" : why);
  why.clear();
  const bool wheel = wheel_check(e.num(), e.k(), &why);
  r.add("wheel " + path, wheel, wheel ? "wheel conditions hold" : why);
  return r;
}

using SuiteFn = std::function<Report(const Options&, const std::string& element_file)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"main-theorem", [](const Options& o, const std::string&) { return main_theorem_suite(main_grid(o)); }},
      {"minimal", [](const Options& o, const std::string&) { return minimal_suite(main_grid(o)); }},
      {"hall", [](const Options& o, const std::string&) { return hall_coverage_suite(o.max_k.value_or(4), 3); }},
      {"slope", [](const Options& o, const std::string&) { return slope_suite(30, o.max_k.value_or(4), o.seed); }},
      {"wheel",
       [](const Options& o, const std::string& file) {
         return file.empty() ? wheel_suite(50, o.max_k.value_or(5), o.seed) : wheel_on_file(file);
       }},
      {"id1",
       [](const Options& o, const std::string&) {
         Report r;
         for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
           r.append(id1_suite(a, b, o.max_k.value_or(4), 3, o.seed));
           r.append(x_concat_suite(a, b, 3, 3, o.seed));
         }
         return r;
       }},
      {"phi",
       [](const Options& o, const std::string&) {
         Report r = fry_suite(30, o.max_k.value_or(5), o.seed);
         r.append(phi_P_suite(4, 5, kExtra));
         for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 1}}) r.append(phi_X_suite(a, b, 3));
         r.append(phi_Q_suite(1, 1, 3));
         return r;
       }},
      {"pairing",
       [](const Options& o, const std::string&) {
         Report r = pairing_suite();
         r.append(bialgebra_property_suite(o.window));
         return r;
       }},
      {"gram",
       [](const Options&, const std::string&) {
         Report r = gram_suite(GramConvention::kStated);
         r.append(gram_suite(GramConvention::kHopf));
         return r;
       }},
      {"delta",
       [](const Options& o, const std::string&) {
         Report r = primitivity_suite(o.max_k.value_or(4), 5);
         r.append(expdelta_suite(1, 1, 3));
         r.append(multiplicativity_suite(o.window));
         r.append(coassociativity_suite(o.window));
         r.append(hecke_suite(o.window));
         r.append(quasi_empty_component_suite(o.window));
         r.append(delta_consistency_suite(o.window));
         return r;
       }},
      {"visa",
       [](const Options&, const std::string&) {
         Report r = ribbon_rule_suite(5);
         r.append(check_visa(1, 1, 3));
         r.append(check_visa(2, 1, 3));
         return r;
       }},
      {"dimension", [](const Options& o, const std::string&) { return dimension_suite(o.max_k.value_or(3), 3); }},
      {"determinism", [](const Options& o, const std::string&) { return determinism_suite(main_grid(o)); }},
  };
  return table;
}

}  // namespace

json to_json(const ShuffleElement& e) {
  return {{"k", e.k()}, {"d", e.d()}, {"num", poly_json(e.num(), true)}, {"den", poly_json(e.den(), false)}};
}

ShuffleElement from_json(const json& j) {
  const int k = j.at("k").get<int>(), d = j.at("d").get<int>();
  LaurentPoly num = poly_from(j.at("num"), k);
  if (num.is_zero()) return ShuffleElement::zero(k, d);
  ShuffleElement e = ShuffleElement::from_parts(k, num, poly_from(j.at("den"), 0));
  if (e.d() != d) throw ParseError("json: d disagrees with the numerator");
  return e;
}

ShuffleElement read_element(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw ParseError(std::string("json: ") + e.what());
    }
  }
  return ShuffleElement::parse(text);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact shuffle-algebra generators and verification suites", "shuffle_cli"};
  app.require_subcommand(1);
  Options opt;
  long seed = 1;
  app.add_option("--max-k", opt.max_k, "Upper bound on k for suite grids")->check(CLI::Range(1, kMaxZ));
  app.add_option("--window", opt.window, "Coproduct truncation window")->check(CLI::Range(0, 20));
  app.add_option("--jobs", opt.jobs, "Worker threads (0 keeps the runtime default)")->check(CLI::NonNegativeNumber);
  app.add_flag("--no-cache", opt.no_cache, "Neither read nor write the element cache");
  app.add_flag("--json", opt.json_out, "Machine-readable output");
  app.add_option("--max-terms", opt.max_terms, "Abort builds whose numerator exceeds this many terms")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized suites");

  std::vector<std::string> build_args;
  auto* build = app.add_subcommand("build", "Print a generator in canonical form");
  build->add_option("kind_args", build_args, "P k d | Precursive k d [rank] | X m1,m2,... | Xeps a b n [bits] | theta a b n | Q a b n")
      ->required();

  std::string suite, element_file;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> names;
  for (const auto& [name, fn] : suites()) names.push_back(name);
  names.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(names));
  verify->add_option("--element", element_file, "Element file for the wheel suite")->check(CLI::ExistingFile);

  std::string left_word, right_ref;
  auto* pair = app.add_subcommand("pair", "Pair a word with an element");
  pair->add_option("--left-word", left_word, "Comma-separated letters")->required();
  pair->add_option("--right", right_ref, "Element reference such as P:2:1")->required();

  std::string mu_text, delta_ref;
  auto* delta = app.add_subcommand("delta", "Coproduct of an element");
  delta->add_option("--mu", mu_text, "Slope for the leading part");
  delta->add_option("element", delta_ref, "Element reference")->required();

  std::string phi_ref;
  auto* phi_cmd = app.add_subcommand("phi", "Evaluate the phi map");
  phi_cmd->add_option("element", phi_ref, "Element reference")->required();

  std::string ray_text;
  int max_n = 3;
  auto* visa = app.add_subcommand("visa", "Check the ribbon map on a ray");
  visa->add_option("--ray", ray_text, "a,b")->required();
  visa->add_option("--max-n", max_n, "Largest n")->check(CLI::Range(1, 6));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  opt.seed = static_cast<std::uint32_t>(seed);
  if (opt.jobs > 0) omp_set_num_threads(opt.jobs);

  Session session(opt, out);
  try {
    if (*build) {
      const std::string kind = build_args.front();
      session.emit(session.element(kind, {build_args.begin() + 1, build_args.end()}));
      return kExitPass;
    }
    if (*verify) {
      Report r;
      for (const auto& [name, fn] : suites())
        if (suite == "all" || suite == name) r.append(fn(opt, name == "wheel" ? element_file : std::string()));
      return session.report(r);
    }
    if (*pair) {
      ParamScalar v = pair_word_element(WordExpression::word(int_list(left_word)), session.ref(right_ref));
      out << v.str() << "\n";
      return kExitPass;
    }
    if (*delta) {
      ShuffleElement p = session.ref(delta_ref);
      if (mu_text.empty()) {
        out << delta_truncated(p, opt.window).str();
        return kExitPass;
      }
      auto parts = delta_mu(p, Rational::parse(mu_text));
      for (std::size_t i = 0; i < parts.size(); ++i)
        out << "i=" << i << " " << (parts[i] ? parts[i]->str() : std::string("none")) << "\n";
      return kExitPass;
    }
    if (*phi_cmd) {
      out << phi(session.ref(phi_ref)).str() << "\n";
      return kExitPass;
    }
    if (*visa) {
      auto ab = int_list(ray_text);
      if (ab.size() != 2) throw ParseError("--ray takes a,b");
      return session.report(check_visa(ab[0], ab[1], max_n));
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace shuffle::cli
