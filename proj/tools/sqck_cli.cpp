// Command line front end: build CK bracket tables, run structural checks,
// compute second cohomology, and sweep the whole family.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sqck/ckalgebra.hpp"
#include "sqck/cohomology.hpp"
#include "sqck/realization.hpp"

using namespace sqck;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 1;

std::vector<Rational> parse_omega(const std::string& text, int n) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    auto q = parse_rational(tok);
    if (!q) throw CLI::ValidationError("--omega", "bad rational token '" + tok + "'");
    out.push_back(*q);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(out.size()) != n)
    throw CLI::ValidationError("--omega", "expected " + std::to_string(n) + " entries");
  return out;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output path " + out_path);
  f << text;
}

std::string algebra_text(const StructureConstants& g) {
  std::string out = family_name(parse_family(g.family)) + "_omega(" + std::to_string(g.n + 1) +
                    "), omega = (" + OmegaPattern(g.n, g.omega).label() + "), dim " +
                    std::to_string(g.dim) + "\n";
  out += "basis:";
  for (const auto& b : g.basis) out += " " + b.name();
  out += "\nbrackets (nonzero, i < j):\n";
  for (const auto& [ij, terms] : g.table) {
    out += "  [" + g.basis[ij.first].name() + ", " + g.basis[ij.second].name() + "] =";
    bool first = true;
    for (const Term& t : terms) {
      std::string c = to_string(t.coeff);
      out += first ? " " : " + ";
      if (c == "1")
        out += g.basis[t.index].name();
      else if (c == "-1")
        out += "-" + g.basis[t.index].name();
      else
        out += c + " " + g.basis[t.index].name();
      first = false;
    }
    out += "\n";
  }
  return out;
}

int cmd_algebra(int n, const std::string& omega, const std::string& emit,
                const std::string& out_path) {
  OmegaPattern p(n, parse_omega(omega, n));
  StructureConstants g = build_sq(p);
  std::string text;
  if (emit == "json")
    text = to_json(g).dump(2) + "\n";
  else {
    text = algebra_text(g);
    for (int a = 1; a <= n; ++a)
      if (is_zero(p.omega(a)))
        text += "note: omega_" + std::to_string(a) +
                " = 0, semidirect split t(.)(" + "sq(" + std::to_string(a) + ") + sq(" +
                std::to_string(n + 1 - a) + ")) applies\n";
  }
  write_output(out_path, text);
  return 0;
}

int cmd_verify(int n, const std::string& omega, std::vector<std::string> checks,
               const std::string& out_path) {
  OmegaPattern p(n, parse_omega(omega, n));
  if (checks.empty()) checks = {"jacobi", "matrix", "grading", "reversal", "semidirect"};
  std::string text;
  bool ok = true;
  for (const auto& check : checks) {
    std::string line = check + ": ";
    try {
      if (check == "jacobi") {
        auto v = verify_jacobi(build_sq(p));
        if (v.empty())
          line += "pass";
        else {
          ok = false;
          line += "FAIL (first violation at triple " + std::to_string(v[0].i) + "," +
                  std::to_string(v[0].j) + "," + std::to_string(v[0].l) + ")";
        }
      } else if (check == "matrix") {
        auto v = realization_consistency(p);
        bool anti = true;
        for (const auto& gen : sq_basis(n))
          anti = anti && antihermiticity_check(p, realize_generator(p, gen));
        if (v.empty() && anti)
          line += "pass";
        else {
          ok = false;
          line += v.empty() ? "FAIL (antihermiticity)"
                            : "FAIL ([" + v[0].left.name() + "," + v[0].right.name() + "]: " +
                                  v[0].detail + ")";
        }
      } else if (check == "grading") {
        StructureConstants g = build_sq(p);
        for (long long mask = 0; mask < (1LL << (n + 1)); ++mask) {
          std::vector<int> subset;
          for (int a = 0; a <= n; ++a)
            if (mask & (1LL << a)) subset.push_back(a);
          grading_automorphism(g, subset);
        }
        line += "pass (" + std::to_string(1LL << (n + 1)) + " involutions)";
      } else if (check == "reversal") {
        reversal_isomorphism(p);
        line += "pass";
      } else if (check == "semidirect") {
        int zeros = 0;
        for (int a = 1; a <= n; ++a)
          if (is_zero(p.omega(a))) {
            auto rep = semidirect_analysis(p, a);
            line += "a=" + std::to_string(a) + " dim t=" + std::to_string(rep.dim_t) + " ";
            ++zeros;
          }
        line += zeros ? "pass" : "skipped (no zero omega entry)";
      } else {
        throw CLI::ValidationError("--checks", "unknown check '" + check + "'");
      }
    } catch (const CLI::Error&) {
      throw;
    } catch (const std::exception& e) {
      ok = false;
      line += std::string("FAIL (") + e.what() + ")";
    }
    text += line + "\n";
  }
  write_output(out_path, text);
  return ok ? 0 : kExitCheckFailed;
}

int cmd_h2(int n, const std::string& omega, const std::string& family, const std::string& emit,
           const std::string& out_path) {
  OmegaPattern p(n, parse_omega(omega, n));
  CohomologyReport rep = h2(build_family(p, parse_family(family)));
  std::string text;
  if (emit == "json")
    text = to_json(rep).dump(2) + "\n";
  else {
    text = rep.family + "_omega(" + std::to_string(n + 1) + "), omega = (" + p.label() +
           "): dim Z2 = " + std::to_string(rep.dim_z2) +
           ", dim B2 = " + std::to_string(rep.dim_b2) +
           ", dim H2 = " + std::to_string(rep.dim_h2) + "\n";
    for (const auto& xi : rep.representatives) {
      text += "  representative:";
      StructureConstants g = build_family(p, parse_family(family));
      for (const auto& [ij, v] : xi.values)
        text += " xi(" + g.basis[ij.first].name() + "," + g.basis[ij.second].name() + ")=" +
                to_string(v);
      text += "\n";
    }
  }
  write_output(out_path, text);
  return 0;
}

int cmd_sweep(int n, const std::string& family, const std::string& values, int jobs,
              const std::string& out_path) {
  std::vector<Rational> value_set;
  for (const auto& q : parse_omega(values, static_cast<int>(std::count(values.begin(),
                                                                       values.end(), ',') + 1)))
    value_set.push_back(q);
  Family fam = parse_family(family);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<long long>(value_set.size());
  std::vector<OmegaPattern> patterns;
  for (long long t = 0; t < total; ++t) {
    long long rest = t;
    std::vector<Rational> vals(n);
    for (int i = 0; i < n; ++i) {
      vals[i] = value_set[rest % value_set.size()];
      rest /= value_set.size();
    }
    patterns.emplace_back(n, std::move(vals));
  }
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs <= 0) jobs = 1;
  std::vector<CohomologyReport> reports(patterns.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= patterns.size()) return;
      reports[k] = h2(build_family(patterns[k], fam));
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<int, int> by_dim;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& rep : reports) {
    ++by_dim[rep.dim_h2];
    out.push_back(to_json(rep));
  }
  std::string summary = family + " sweep, N = " + std::to_string(n) + ", " +
                        std::to_string(patterns.size()) + " patterns\n";
  for (const auto& [dim, count] : by_dim)
    summary += "  dim H2 = " + std::to_string(dim) + ": " + std::to_string(count) +
               " pattern(s)\n";
  std::cout << summary;
  if (!out_path.empty()) write_output(out_path, out.dump(2) + "\n");
  if (fam == Family::Sq && (by_dim.size() != 1 || by_dim.begin()->first != 0)) {
    std::cerr << "sweep: the quaternionic family produced a non-trivial H2\n";
    return kExitCheckFailed;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic quasi-unitary Cayley-Klein algebras: exact structure "
               "constants, verification, and second cohomology"};
  app.require_subcommand(1);

  int n = 1;
  std::string omega, family = "sq", emit = "text", out_path, checks_arg, values = "-1,0,1";
  int jobs = 0;

  auto* alg = app.add_subcommand("algebra", "Build and print a bracket table");
  alg->add_option("--n", n, "Number of contraction parameters N")->required();
  alg->add_option("--omega", omega, "Comma-separated rationals omega_1..omega_N")->required();
  alg->add_option("--emit", emit, "text|json")->check(CLI::IsMember({"text", "json"}));
  alg->add_option("--out", out_path, "Write output to this path");

  auto* ver = app.add_subcommand("verify", "Run structural checks");
  ver->add_option("--n", n)->required();
  ver->add_option("--omega", omega)->required();
  ver->add_option("--checks", checks_arg, "jacobi,matrix,grading,reversal,semidirect");
  ver->add_option("--out", out_path);

  auto* h2cmd = app.add_subcommand("h2", "Compute second cohomology");
  h2cmd->add_option("--n", n)->required();
  h2cmd->add_option("--omega", omega)->required();
  h2cmd->add_option("--family", family)->check(CLI::IsMember({"sq", "u1", "u2", "u3", "so"}));
  h2cmd->add_option("--emit", emit)->check(CLI::IsMember({"text", "json"}));
  h2cmd->add_option("--out", out_path);

  auto* sweep = app.add_subcommand("sweep", "Compute H2 for every pattern in value_set^N");
  sweep->add_option("--n", n)->required();
  sweep->add_option("--family", family)->check(CLI::IsMember({"sq", "u1", "u2", "u3", "so"}));
  sweep->add_option("--values", values, "Comma-separated value set (default -1,0,1)");
  sweep->add_option("--jobs", jobs, "Worker threads (default: logical cores)");
  sweep->add_option("--out", out_path, "Write one JSON report per pattern to this path");

  try {
    app.parse(argc, argv);
    if (alg->parsed()) return cmd_algebra(n, omega, emit, out_path);
    if (ver->parsed()) {
      std::vector<std::string> checks;
      std::size_t pos = 0;
      while (!checks_arg.empty() && pos <= checks_arg.size()) {
        auto comma = checks_arg.find(',', pos);
        checks.push_back(checks_arg.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      return cmd_verify(n, omega, checks, out_path);
    }
    if (h2cmd->parsed()) return cmd_h2(n, omega, family, emit, out_path);
    return cmd_sweep(n, family, values, jobs, out_path);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
