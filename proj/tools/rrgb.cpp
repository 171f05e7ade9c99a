// rrgb: Gröbner bases in reduction rings from the command line.
//
//   rrgb gb     [FILE] [--ring R --vars V --order O --gens G] [--certify] [--trace] [--check] [--monic] [--json]
//   rrgb member [FILE] [--probe P]...
//   rrgb check  [FILE] (--axioms | --is-gb)
//
// Exit codes: 0 ok, 1 negative verdict, 2 parse or usage error, 3 step cap exceeded, 4 internal contract violation.

#include <chrono>
#include <iomanip>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rr/axioms.hpp"
#include "rr/buchberger.hpp"
#include "rr/errors.hpp"
#include "rr/problem.hpp"
#include "rr/reduction.hpp"

namespace {

using nlohmann::json;

enum Exit : int { kOk = 0, kNegative = 1, kParse = 2, kCap = 3, kInternal = 4 };

struct Options {
  std::string file;
  std::string ring;
  std::string vars;
  std::string order;
  std::vector<std::string> gens;
  std::vector<std::string> probes;
  std::string chain_criterion;  // "", "on" or "off"
  bool certify = false;
  bool trace = false;
  bool check = false;
  bool monic = false;
  bool json = false;
  bool axioms = false;
  bool is_gb = false;
  std::size_t max_steps = 1'000'000;
  std::size_t samples = 10'000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rr::ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// File contents first, then command-line overrides. Elements given with
// --gens/--probe are reported at line 0.
rr::ProblemFile load_problem(const Options& opt) {
  rr::ProblemFile problem;
  if (!opt.file.empty()) problem = rr::parse_problem(read_file(opt.file));
  try {
    if (!opt.ring.empty()) {
      auto ring = rr::parse_ring_selector(opt.ring);
      ring.variables = problem.ring.variables;
      ring.order = problem.ring.order;
      problem.ring = ring;
      problem.has_ring = true;
    }
    if (!opt.vars.empty()) problem.ring.variables = rr::parse_variable_list(opt.vars);
    if (!opt.order.empty()) problem.ring.order = rr::parse_term_order(opt.order);
  } catch (const rr::DomainError& e) {
    throw rr::ParseError(e.what(), 0, 0);
  }
  if (!problem.has_ring) throw rr::ParseError("no ring given (use a problem file or --ring)", 0, 0);
  if (!opt.gens.empty()) {
    problem.gens.clear();
    for (const auto& g : opt.gens) problem.gens.push_back({g, 0, 1});
  }
  if (!opt.probes.empty()) {
    problem.probes.clear();
    for (const auto& p : opt.probes) problem.probes.push_back({p, 0, 1});
  }
  return problem;
}

template <class D>
std::vector<typename D::Element> parse_all(const D& dom, const std::vector<rr::SourceText>& sources) {
  std::vector<typename D::Element> out;
  out.reserve(sources.size());
  for (const auto& s : sources) out.push_back(rr::parse_element(dom, s));
  return out;
}

// Canonical display form of a basis element.
template <class D>
typename D::Element present(const D&, const typename D::Element& e, bool) {
  return e;
}
mpz_class present(const rr::IntegerRing&, const mpz_class& e, bool) { return rr::normalize_sign(e); }
mpq_class present(const rr::RationalField&, const mpq_class& e, bool monic) {
  return monic && sgn(e) != 0 ? mpq_class(1) : e;
}
rr::Polynomial<mpq_class> present(const rr::PolynomialRing<rr::RationalField>& dom, const rr::Polynomial<mpq_class>& e,
                                  bool monic) {
  if (!monic || e.is_zero()) return e;
  mpq_class scale = 1 / dom.leading_monomial(e).coefficient;
  return dom.mono_mul({scale, rr::PowerProduct(dom.variables().size())}, e);
}

template <class D>
bool chain_default(const D&) {
  return requires { D::restricted_multipliers; };
}

template <class D>
rr::GbOptions gb_options(const D& dom, const Options& opt) {
  rr::GbOptions o;
  o.chain_criterion = opt.chain_criterion.empty() ? chain_default(dom) : opt.chain_criterion == "on";
  o.max_steps = opt.max_steps;
  o.max_reduction_steps = opt.max_steps;
  return o;
}

template <class D>
int run_gb(const D& dom, const rr::ProblemFile& problem, const Options& opt) {
  using E = typename D::Element;
  const auto gens = parse_all(dom, problem.gens);
  const auto start = std::chrono::steady_clock::now();
  const auto result = rr::gb(dom, gens, gb_options(dom, opt));
  const double elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::vector<E> shown;
  for (const auto& e : result.basis) shown.push_back(present(dom, e, opt.monic));

  const bool certified = !opt.certify || rr::verify_cofactors(dom, result.rows, gens);
  const bool checked = !opt.check || rr::is_groebner_basis(dom, std::span<const E>(shown), opt.max_steps);

  if (opt.json) {
    json out;
    out["ring"] = dom.name();
    out["basis"] = json::array();
    for (const auto& e : shown) out["basis"].push_back(dom.render(e));
    out["rows"] = json::array();
    for (const auto& row : result.rows) {
      json r{{"element", dom.render(row.element)}, {"cofactors", json::array()}};
      for (const auto& c : row.cofactors) r["cofactors"].push_back(dom.render(c));
      out["rows"].push_back(std::move(r));
    }
    if (opt.certify) out["certified"] = certified;
    if (opt.check) out["is_groebner_basis"] = checked;
    std::ostringstream digest;
    digest << std::hex << std::setw(16) << std::setfill('0') << result.trace.digest();
    out["trace_digest"] = digest.str();
    if (opt.trace) out["trace"] = result.trace.to_json();
    out["stats"] = {{"pairs_processed", result.stats.pairs_processed},
                    {"mntcrs_examined", result.stats.mntcrs_examined},
                    {"critical_pairs_reduced", result.stats.critical_pairs_reduced},
                    {"chain_skips", result.stats.chain_skips},
                    {"additions", result.stats.additions}};
    out["timing_ms"] = elapsed_ms;
    std::cout << out.dump(2) << '\n';
  } else {
    if (opt.trace) std::cout << result.trace.to_text() << "---\n";
    for (const auto& e : shown) std::cout << dom.render(e) << '\n';
    if (opt.certify) {
      std::cout << "---\n";
      for (std::size_t k = 0; k < result.rows.size(); ++k) {
        std::cout << "row " << k << ": " << dom.render(result.rows[k].element) << " =";
        const auto& cof = result.rows[k].cofactors;
        bool first = true;
        for (std::size_t i = 0; i < cof.size(); ++i) {
          if (rr::is_zero(dom, cof[i])) continue;
          std::cout << (first ? " " : " + ") << '(' << dom.render(cof[i]) << ")*g" << i;
          first = false;
        }
        if (first) std::cout << " 0";
        std::cout << '\n';
      }
      std::cout << "certified: " << (certified ? "yes" : "no") << '\n';
    }
    if (opt.check) std::cout << "is-gb: " << (checked ? "YES" : "NO") << '\n';
  }
  return certified && checked ? kOk : kNegative;
}

template <class D>
int run_member(const D& dom, const rr::ProblemFile& problem, const Options& opt) {
  if (problem.probes.empty()) throw rr::ParseError("no probes given (use a probes: section or --probe)", 0, 0);
  const auto gens = parse_all(dom, problem.gens);
  const auto probes = parse_all(dom, problem.probes);
  auto options = gb_options(dom, opt);
  options.record_trace = false;
  const auto basis = rr::gb(dom, gens, options).basis;

  bool all_members = true;
  json verdicts = json::array();
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const auto nf = rr::normal_form(dom, probes[k], std::span<const typename D::Element>(basis), opt.max_steps);
    const bool member = rr::is_zero(dom, nf.value);
    all_members = all_members && member;
    if (opt.json) {
      verdicts.push_back({{"probe", problem.probes[k].text}, {"member", member}, {"normal_form", dom.render(nf.value)}});
    } else {
      std::cout << (member ? "MEMBER " : "NOT-MEMBER ") << dom.render(nf.value) << '\n';
    }
  }
  if (opt.json) std::cout << json{{"ring", dom.name()}, {"results", verdicts}}.dump(2) << '\n';
  return all_members ? kOk : kNegative;
}

template <class D>
int run_check(const D& dom, const rr::ProblemFile& problem, const Options& opt) {
  if (opt.axioms == opt.is_gb) throw rr::ParseError("check needs exactly one of --axioms or --is-gb", 0, 0);
  if (opt.axioms) {
    const auto report = rr::check_axioms(dom, opt.samples);
    if (opt.json) {
      std::cout << report.to_json().dump(2) << '\n';
    } else {
      std::cout << report.to_text();
    }
    return report.all_passed() ? kOk : kNegative;
  }
  const auto gens = parse_all(dom, problem.gens);
  const bool verdict = rr::is_groebner_basis(dom, std::span<const typename D::Element>(gens), opt.max_steps);
  if (opt.json) {
    std::cout << json{{"ring", dom.name()}, {"is_groebner_basis", verdict}}.dump(2) << '\n';
  } else {
    std::cout << (verdict ? "YES" : "NO") << '\n';
  }
  return verdict ? kOk : kNegative;
}

void add_common(CLI::App* app, Options& opt) {
  app->add_option("file", opt.file, "Problem file");
  app->add_option("--ring", opt.ring, "q | z | zmod:N");
  app->add_option("--vars", opt.vars, "Variables, comma separated (makes the ring polynomial)");
  app->add_option("--order", opt.order, "lex | deglex | degrevlex");
  app->add_option("--gens", opt.gens, "Generators (replace the file's gens)")->delimiter(';');
  app->add_option("--chain-criterion", opt.chain_criterion, "on | off (default: on for polynomial rings)")
      ->check(CLI::IsMember({"on", "off"}));
  app->add_option("--max-steps", opt.max_steps, "Cap on examined common reducibles and reduction steps");
  app->add_flag("--json", opt.json, "Structured output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gröbner bases in reduction rings"};
  app.require_subcommand(1);
  Options opt;

  auto* gb_cmd = app.add_subcommand("gb", "Compute a Gröbner basis");
  add_common(gb_cmd, opt);
  gb_cmd->add_flag("--certify", opt.certify, "Print and verify cofactor rows");
  gb_cmd->add_flag("--trace", opt.trace, "Print the completion trace");
  gb_cmd->add_flag("--check", opt.check, "Re-verify the printed basis");
  gb_cmd->add_flag("--monic", opt.monic, "Scale field-coefficient output to leading coefficient 1");

  auto* member_cmd = app.add_subcommand("member", "Decide ideal membership of probes");
  add_common(member_cmd, opt);
  member_cmd->add_option("--probe", opt.probes, "Probe element (repeatable)");

  auto* check_cmd = app.add_subcommand("check", "Check axioms or the Gröbner criterion");
  add_common(check_cmd, opt);
  check_cmd->add_flag("--axioms", opt.axioms, "Run the axiom report for the ring");
  check_cmd->add_flag("--is-gb", opt.is_gb, "Decide whether the generators form a Gröbner basis");
  check_cmd->add_option("--samples", opt.samples, "Sample budget for infinite carriers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    const auto problem = load_problem(opt);
    return rr::with_domain(problem.ring, [&](const auto& dom) -> int {
      if (gb_cmd->parsed()) return run_gb(dom, problem, opt);
      if (member_cmd->parsed()) return run_member(dom, problem, opt);
      return run_check(dom, problem, opt);
    });
  } catch (const rr::ParseError& e) {
    std::cerr << "error";
    if (e.line() > 0) std::cerr << " at line " << e.line() << ", column " << e.column();
    std::cerr << ": " << e.what() << '\n';
    return kParse;
  } catch (const rr::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const rr::NonTerminationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const rr::ContractViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
