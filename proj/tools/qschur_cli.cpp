#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qschur/oracle.hpp"
#include "qschur/reps.hpp"
#include "qschur/schur.hpp"
#include "qschur/stab.hpp"
#include "qschur/verify.hpp"

using namespace qschur;

namespace {

// Bad user input; reported with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

IntMatZ read_matrix(const std::string& text, const char* flag) {
  try {
    return parse_matrix(text);
  } catch (const std::exception& e) {
    throw InputError(std::string(flag) + ": " + e.what());
  }
}

Window read_window(const std::string& text) {
  try {
    return Window::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("--window: ") + e.what());
  }
}

void require_in_schur(const IntMatZ& a, const Window& w, Entry r, const char* flag) {
  if (!a.is_nonneg()) throw InputError(std::string(flag) + ": " + a.str() + " has a negative entry");
  if (!a.supported_in(w)) throw InputError(std::string(flag) + ": " + a.str() + " is not supported in " + w.str());
  if (stats(a).sigma != r)
    throw InputError(std::string(flag) + ": " + a.str() + " has entry sum " + std::to_string(stats(a).sigma) + ", expected " + std::to_string(r));
}

std::string seq_str(const std::vector<Entry>& xs) {
  std::string out = "(";
  for (size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out + ")";
}

struct Options {
  std::string window, a, b, mu, scope = "all", format = "text";
  Entry r = -1;
  std::vector<int> qs{2, 3};
  bool perturb = false;
};

std::string cmd_multiply(const Options& o) {
  Window w = read_window(o.window);
  if (o.r < 0) throw InputError("--r is required");
  IntMatZ a = read_matrix(o.a, "--a"), b = read_matrix(o.b, "--b");
  require_in_schur(a, w, o.r, "--a");
  require_in_schur(b, w, o.r, "--b");
  SchurElem x = multiply(SchurElem::basis(w, a), SchurElem::basis(w, b));
  return o.format == "json" ? x.json() : x.str();
}

std::string cmd_fpoly(const Options& o) {
  IntMatZ a = read_matrix(o.a, "--a"), b = read_matrix(o.b, "--b");
  if (!a.offdiag_nonneg() || !b.offdiag_nonneg()) throw InputError("off-diagonal entries must be nonnegative");
  const StabTerms& terms = f_poly(a, b);
  if (o.format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& [c, f] : terms) rows.push_back({{"C", c.str()}, {"f", f.str()}, {"at_one", f.at_one().str()}});
    return rows.dump(2);
  }
  std::string out = "C\tf(v,v')\tv'=1";
  for (const auto& [c, f] : terms) out += "\n" + c.str() + "\t" + f.str() + "\t" + f.at_one().str();
  return out;
}

std::string cmd_verify(const Options& o, bool& ok) {
  Window w = read_window(o.window);
  if (o.r < 0) throw InputError("--r is required");
  if (o.scope != "presentation" && o.scope != "bases" && o.scope != "oracle" && o.scope != "all")
    throw InputError("--scope must be presentation, bases, oracle or all");
  if (o.scope == "oracle" || o.scope == "all") {
    auto limits = oracle::Limits::from_env();
    for (int q : o.qs)
      if (q > limits.max_q || o.r > limits.max_r || w.size() > limits.max_window)
        throw InputError("oracle scale guard exceeded (q=" + std::to_string(q) + ", r=" + std::to_string(o.r) +
                         ", window=" + w.str() + "); override with QSCHUR_ORACLE_LIMITS=\"q=..,r=..,window=..\"");
  }
  VerifyOptions opts{o.perturb};
  Report rep;
  if (o.scope == "presentation" || o.scope == "all") rep.append(verify_presentation(w, o.r, opts));
  if (o.scope == "bases" || o.scope == "all") rep.append(basis_report(w, o.r, opts));
  if (o.scope == "oracle" || o.scope == "all") rep.append(oracle_report(w, o.r, o.qs));
  rep.sort();
  ok = rep.ok();
  return o.format == "json" ? rep.json() : rep.text() + (ok ? "all claims pass" : "some claims fail");
}

std::string cmd_weights(const Options& o) {
  Window w = read_window(o.window);
  Composition mu;
  try {
    mu = parse_composition(o.mu, 1);
  } catch (const std::exception& e) {
    throw InputError(std::string("--mu: ") + e.what());
  }
  if (!is_partition(mu)) throw InputError("--mu: " + o.mu + " is not a partition");
  auto dims = weyl_weight_dims(mu, w);
  auto order = enum_compositions(w, mu.sum());
  std::size_t total = 0;
  for (const auto& [lambda, d] : dims) total += d;
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["mu"] = mu.on(Window(1, std::max<int>(1, static_cast<int>(mu.parts().size()))));
    j["window"] = w.str();
    j["weights"] = nlohmann::ordered_json::array();
    for (const auto& lambda : order) j["weights"].push_back({{"lambda", lambda.on(w)}, {"dim", dims.at(lambda)}});
    j["total"] = total;
    return j.dump(2);
  }
  std::string out;
  for (const auto& lambda : order) out += seq_str(lambda.on(w)) + "\t" + std::to_string(dims.at(lambda)) + "\n";
  return out + "total " + std::to_string(total);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Schur algebras of infinite rank: products, stabilization, presentation checks, weights"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* mult = app.add_subcommand("multiply", "[A][B] in K(window, r)");
  mult->add_option("--window", o.window, "Window m:n")->required();
  mult->add_option("--r", o.r, "Degree")->required();
  mult->add_option("--a", o.a, "Left matrix literal (E12, D(1,1), or [[i,j,a],...])")->required();
  mult->add_option("--b", o.b, "Right matrix literal")->required();
  add_format(mult);

  auto* fpoly = app.add_subcommand("fpoly", "Stabilized structure constants f_{A,B,C}(v, v')");
  fpoly->add_option("--a", o.a, "Left matrix literal")->required();
  fpoly->add_option("--b", o.b, "Right matrix literal")->required();
  add_format(fpoly);

  auto* verify = app.add_subcommand("verify", "Check relations, bases and flag-count agreement");
  verify->add_option("--scope", o.scope, "presentation | bases | oracle | all");
  verify->add_option("--window", o.window, "Window m:n")->required();
  verify->add_option("--r", o.r, "Degree")->required();
  verify->add_option("--q", o.qs, "Field sizes for the oracle scope")->delimiter(',');
  verify->add_flag("--perturb", o.perturb, "Negative control: perturb the e/f commutator and drop the idempotent from m^(A)");
  add_format(verify);

  auto* weights = app.add_subcommand("weights", "Weight-space dimensions of a Weyl module");
  weights->add_option("--mu", o.mu, "Partition, e.g. 2,1")->required();
  weights->add_option("--window", o.window, "Window m:n")->required();
  add_format(weights);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    bool ok = true;
    std::string out;
    if (*mult) out = cmd_multiply(o);
    if (*fpoly) out = cmd_fpoly(o);
    if (*verify) out = cmd_verify(o, ok);
    if (*weights) out = cmd_weights(o);
    std::cout << out << "\n";
    return ok ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
