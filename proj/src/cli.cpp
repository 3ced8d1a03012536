#include "partzeta/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "partzeta/error.hpp"
#include "partzeta/identities.hpp"
#include "partzeta/numeric.hpp"
#include "partzeta/parser.hpp"
#include "partzeta/rational.hpp"
#include "partzeta/serialize.hpp"

namespace partzeta::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

std::string read_input(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  const std::string path = arg.substr(1);
  std::ifstream in(path);
  if (!in) throw Error("cannot read expression file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The command line works over s1..sn only.
Expression parse_cli_expression(const std::string& arg) {
  Expression e = parse_expression(read_input(arg));
  if (!e.universe().is_contiguous_from_one()) {
    throw Error("variables must be exactly s1..sn; found " + e.universe().to_string());
  }
  return e;
}

std::vector<Method> parse_methods(const std::string& s) {
  std::vector<Method> out;
  for (const std::string& name : split(s, ',')) out.push_back(method_from_string(name));
  if (out.empty()) throw Error("--methods is empty");
  return out;
}

Assignment parse_assignment(const std::string& s) {
  std::map<unsigned, double> values;
  for (const std::string& item : split(s, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || item.size() < 2 || item[0] != 's') {
      throw Error("malformed assignment '" + item + "', expected s<k>=<value>");
    }
    unsigned idx = 0;
    double v = 0.0;
    try {
      std::size_t used = 0;
      const std::string idx_text = item.substr(1, eq - 1);
      idx = static_cast<unsigned>(std::stoul(idx_text, &used));
      if (used != idx_text.size()) throw std::invalid_argument("index");
      const std::string v_text = item.substr(eq + 1);
      v = std::stod(v_text, &used);
      if (used != v_text.size()) throw std::invalid_argument("value");
    } catch (const std::logic_error&) {
      throw Error("malformed assignment '" + item + "', expected s<k>=<value>");
    }
    if (!values.emplace(idx, v).second) throw Error("s" + std::to_string(idx) + " assigned twice");
  }
  return Assignment(std::move(values));
}

std::uint64_t default_seed() {
  const char* env = std::getenv("MZV_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("seed");
    return v;
  } catch (const std::logic_error&) {
    throw Error(std::string("MZV_SEED is not an unsigned integer: '") + env + "'");
  }
}

struct Options {
  std::string input;
  std::string second;
  std::string methods;
  std::string format = "text";
  std::string assign;
  long long truncation = 50;
  std::uint64_t seed = 0;
  unsigned samples = 20;
  unsigned n = 0;
  unsigned cap = kDefaultHoffmanCap;
  bool verify = false;
  bool check = false;
};

int report_verdict(const IdentityReport& r, Format f, std::ostream& out) {
  out << serialize(r, f);
  return r.identity ? int{kIdentity} : int{kNotIdentity};
}

NumericParams numeric_params(const Options& o) {
  NumericParams p;
  if (o.truncation < 2) throw Error("--N must be >= 2");
  p.truncation = static_cast<unsigned>(o.truncation);
  p.seed = o.seed;
  p.samples = o.samples;
  return p;
}

void print(const std::string& s, std::ostream& out) {
  out << s;
  if (s.empty() || s.back() != '\n') out << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Check linear relations among products of multiple zeta functions", "partzeta"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  try {
    o.seed = default_seed();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  };
  auto add_numeric = [&](CLI::App* sub) {
    sub->add_option("--N", o.truncation, "truncation level for numeric checks")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for sample points (default: MZV_SEED or 0)");
    sub->add_option("--samples", o.samples, "numeric sample assignments")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "decide whether an expression vanishes identically");
  verify->add_option("expr", o.input, "expression or @file")->required();
  o.methods = "canonical,rational,numeric";
  verify->add_option("--methods", o.methods, "comma list of canonical,rational,numeric")->capture_default_str();
  add_numeric(verify);
  add_format(verify);
  verify->callback([&] {
    action = [&] {
      const Expression e = parse_cli_expression(o.input);
      return report_verdict(partzeta::verify(e, parse_methods(o.methods), numeric_params(o)),
                            format_from_string(o.format), out);
    };
  });

  auto* normalize_cmd = app.add_subcommand("normalize", "expand into single zeta functions");
  normalize_cmd->add_option("expr", o.input, "expression or @file")->required();
  add_format(normalize_cmd);
  normalize_cmd->callback([&] {
    action = [&] {
      print(serialize(normalize(parse_cli_expression(o.input)), format_from_string(o.format)), out);
      return 0;
    };
  });

  auto* stuffle = app.add_subcommand("stuffle", "stuffle product of two argument lists");
  stuffle->add_option("u", o.input, "argument list, e.g. \"s1,s2+s3\"")->required();
  stuffle->add_option("v", o.second, "argument list over disjoint variables")->required();
  add_format(stuffle);
  stuffle->callback([&] {
    action = [&] {
      const StuffleResult r = stuffle_product(parse_arglist(o.input), parse_arglist(o.second));
      print(serialize(r, format_from_string(o.format)), out);
      return 0;
    };
  });

  auto* hoffman = app.add_subcommand("hoffman", "Hoffman's permutation identity on s1..sn");
  hoffman->add_option("n", o.n, "number of variables")->required();
  hoffman->add_option("--cap", o.cap, "largest accepted n")->capture_default_str();
  hoffman->add_flag("--verify", o.verify, "also verify the identity");
  hoffman->add_option("--methods", o.methods, "verification methods (default canonical,numeric)");
  add_numeric(hoffman);
  add_format(hoffman);
  hoffman->callback([&] {
    action = [&] {
      const Expression e = hoffman_identity(o.n, o.cap);
      const Format f = format_from_string(o.format);
      if (!o.verify) {
        print(serialize(e, f), out);
        return 0;
      }
      const std::string methods = hoffman->count("--methods") ? o.methods : "canonical,numeric";
      const IdentityReport r = partzeta::verify(e, parse_methods(methods), numeric_params(o));
      if (f == Format::structured) {
        const nlohmann::json j = {{"kind", "hoffman_verification"},
                                  {"n", o.n},
                                  {"expression", nlohmann::json::parse(to_structured(e))},
                                  {"report", nlohmann::json::parse(to_structured(r))}};
        out << j.dump(2) << '\n';
        return r.identity ? int{kIdentity} : int{kNotIdentity};
      }
      print(to_text(e), out);
      return report_verdict(r, f, out);
    };
  });

  auto* rational = app.add_subcommand("rational", "rational function of each term");
  rational->add_option("expr", o.input, "expression or @file")->required();
  rational->add_flag("--check", o.check, "decide whether the combination vanishes");
  add_format(rational);
  rational->callback([&] {
    action = [&] {
      const RationalCombination comb = rational_combination_of(parse_cli_expression(o.input));
      const Format f = format_from_string(o.format);
      if (!o.check) {
        print(serialize(comb, f), out);
        return 0;
      }
      const bool zero = is_zero_combination(comb);
      if (f == Format::text) {
        out << to_text(comb) << "zero: " << (zero ? "true" : "false") << '\n';
      } else {
        nlohmann::json j = nlohmann::json::parse(to_structured(comb));
        j["zero"] = zero;
        out << j.dump(2) << '\n';
      }
      return zero ? int{kIdentity} : int{kNotIdentity};
    };
  });

  auto* eval = app.add_subcommand("eval", "truncated nested-sum value and residual");
  eval->add_option("expr", o.input, "expression or @file")->required();
  eval->add_option("--assign", o.assign, "s1=2.5,s2=1.7,...")->required();
  eval->add_option("--N", o.truncation, "truncation level")->capture_default_str();
  add_format(eval);
  eval->callback([&] {
    action = [&] {
      const Expression e = parse_cli_expression(o.input);
      const Assignment a = parse_assignment(o.assign);
      const TruncationLevel level(o.truncation);
      const double value = eval_expression(e, a, level);
      const Residual r = residual_report(e, a, level);
      if (format_from_string(o.format) == Format::text) {
        out << "value: " << format_double(value) << '\n'
            << "absolute_residual: " << format_double(r.absolute) << '\n'
            << "relative_residual: " << format_double(r.relative) << '\n'
            << "magnitude: " << format_double(r.magnitude) << '\n';
      } else {
        nlohmann::json j = {{"kind", "evaluation"},       {"N", level.value()},
                            {"value", value},             {"absolute_residual", r.absolute},
                            {"relative_residual", r.relative}, {"magnitude", r.magnitude}};
        out << j.dump(2) << '\n';
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    return action ? action() : kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"partzeta"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace partzeta::cli
