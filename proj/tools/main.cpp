// Command-line front end. Every subcommand prints deterministic JSON (or
// CSV for bench-tetra); exit codes distinguish parse errors (1), bad primes
// (2), unsupported term counts (3), uncertified precision (4), and oracle
// budget exhaustion (5).
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "padic/json_io.hpp"
#include "padic/oracle.hpp"

namespace {

using nlohmann::json;
using namespace padic;

SparsePoly parse_poly_arg(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t");
  if (i != std::string::npos && text[i] == '{') {
    return poly_from_json(json::parse(text));
  }
  return SparsePoly::parse(text);
}

mpz_class parse_prime(const std::string& text) {
  mpz_class p;
  if (mpz_set_str(p.get_mpz_t(), text.c_str(), 10) != 0) {
    throw invalid_prime_error("prime must be a decimal integer: " + text);
  }
  PadicContext probe(p, 1);  // rejects composites and p = 2
  return p;
}

PrecisionPolicy parse_policy(const std::string& name, unsigned k_cap) {
  PrecisionPolicy policy;
  if (name == "resultant") {
    policy.kind = PolicyKind::ExactResultant;
  } else if (name == "adaptive") {
    policy.kind = PolicyKind::AdaptiveDoubling;
  } else if (name == "yu") {
    policy.kind = PolicyKind::YuFormula;
  } else {
    throw CLI::ValidationError("--policy must be resultant, adaptive, or yu");
  }
  if (k_cap > 0) policy.k_cap = k_cap;
  return policy;
}

// Run op over one polynomial (pretty JSON) or a batch file (one polynomial
// per line, one compact JSON line out per line in, in input order).
int run_poly_op(const std::string& poly_text, const std::string& file,
                const std::function<json(const SparsePoly&)>& op) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open " << file << "\n";
      return 1;
    }
    std::string line;
    while (std::getline(in, line)) {
      std::size_t i = line.find_first_not_of(" \t");
      if (i == std::string::npos || line[i] == '#') continue;
      std::cout << op(parse_poly_arg(line)).dump() << "\n";
    }
    return 0;
  }
  std::cout << op(parse_poly_arg(poly_text)).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact root counting and solving over Q_p for sparse "
               "polynomials"};
  app.require_subcommand(1);

  std::string prime_text, poly_text, file, policy_name = "resultant";
  unsigned k_cap = 0, k = 0, target_k = 6;
  unsigned long budget = 10000000;
  if (const char* env = std::getenv("PADICSOLVE_ORACLE_BUDGET")) {
    budget = std::strtoul(env, nullptr, 10);
  }
  std::string seed_text = "0";
  std::string h_text, d_list = "4,6,8,10";

  auto add_common = [&](CLI::App* sub, bool need_poly) {
    sub->add_option("-p,--prime", prime_text, "odd prime")->required();
    if (need_poly) {
      sub->add_option("poly", poly_text, "polynomial (text or JSON)");
      sub->add_option("-f,--file", file, "batch file, one polynomial per line");
    }
    return sub;
  };

  auto* solve_cmd = add_common(app.add_subcommand("solve", "solve over Q_p"),
                               true);
  solve_cmd->add_option("--policy", policy_name,
                        "precision policy: resultant|adaptive|yu");
  solve_cmd->add_option("--k-cap", k_cap, "adaptive precision cap");

  auto* count_cmd = add_common(
      app.add_subcommand("count", "count roots in Q_p"), true);
  count_cmd->add_option("--policy", policy_name,
                        "precision policy: resultant|adaptive|yu");

  auto* tree_cmd = add_common(
      app.add_subcommand("tree", "digit-refinement tree mod p^k"), true);
  tree_cmd->add_option("-k", k, "precision")->required();

  add_common(app.add_subcommand("polygon", "lower Newton polygon"), true);
  add_common(app.add_subcommand("bound", "separation bounds"), true);

  auto* lift_cmd = add_common(
      app.add_subcommand("lift", "Newton-lift a seed residue"), true);
  lift_cmd->add_option("--seed", seed_text, "seed residue (decimal)");
  lift_cmd->add_option("-K,--target", target_k, "target digit count");

  auto* oracle_cmd = add_common(
      app.add_subcommand("oracle", "brute-force root count"), true);
  oracle_cmd->add_option("--budget", budget, "evaluation budget");

  auto* bench = app.add_subcommand("bench-tetra",
                                   "tetranomial separation benchmark (CSV)");
  bench->set_help_flag("--help", "print help");  // frees -h for the parameter
  bench->add_option("-p,--prime", prime_text, "odd prime")->required();
  bench->add_option("--h", h_text, "height parameter h >= 3")->required();
  bench->add_option("--d-list", d_list, "comma-separated even degrees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    mpz_class p = parse_prime(prime_text);
    if (solve_cmd->parsed()) {
      PrecisionPolicy policy = parse_policy(policy_name, k_cap);
      bool uncertified = false;
      int rc = run_poly_op(poly_text, file, [&](const SparsePoly& f) {
        SolveReport rep = solve(f, p, policy);
        if (!rep.certified) uncertified = true;
        return report_to_json(rep);
      });
      return rc != 0 ? rc : (uncertified ? 4 : 0);
    }
    if (count_cmd->parsed()) {
      PrecisionPolicy policy = parse_policy(policy_name, k_cap);
      bool uncertified = false;
      int rc = run_poly_op(poly_text, file, [&](const SparsePoly& f) {
        SolveReport rep = solve(f, p, policy);
        if (!rep.certified) uncertified = true;
        return json{{"count", rep.root_count}};
      });
      return rc != 0 ? rc : (uncertified ? 4 : 0);
    }
    if (tree_cmd->parsed()) {
      return run_poly_op(poly_text, file, [&](const SparsePoly& f) {
        PadicContext ctx(p, k);
        return tree_to_json(build_tree(f, ctx));
      });
    }
    if (app.get_subcommand("polygon")->parsed()) {
      return run_poly_op(poly_text, file, [&](const SparsePoly& f) {
        return polygon_to_json(lower_hull(f, p));
      });
    }
    if (app.get_subcommand("bound")->parsed()) {
      return run_poly_op(poly_text, file, [&](const SparsePoly& f) {
        return bounds_to_json(f, p);
      });
    }
    if (lift_cmd->parsed()) {
      return run_poly_op(poly_text, file, [&](const SparsePoly& f) {
        mpz_class seed;
        if (mpz_set_str(seed.get_mpz_t(), seed_text.c_str(), 10) != 0) {
          throw syntax_error("bad seed residue", 0);
        }
        mpz_class z = lift_to_precision(f, seed, target_k, p);
        json out;
        out["value"] = z.get_str();
        out["digits"] = digits_of(z, p, target_k);
        return out;
      });
    }
    if (oracle_cmd->parsed()) {
      return run_poly_op(poly_text, file, [&](const SparsePoly& f) {
        return json{{"count", count_qp_roots_oracle(f, p, budget)}};
      });
    }
    if (bench->parsed()) {
      long h = std::stol(h_text);
      std::cout << "p,h,d,expected_gap,measured_gap,digits,wall_time\n";
      std::stringstream ds(d_list);
      std::string item;
      while (std::getline(ds, item, ',')) {
        long d = std::stol(item);
        auto t0 = std::chrono::steady_clock::now();
        TetranomialInstance inst = make_instance(p, h, d);
        SeparationResult sep = measure_separation(
            inst, static_cast<unsigned>(inst.expected_gap) + 8);
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        std::cout << p.get_str() << "," << h << "," << d << ","
                  << inst.expected_gap << "," << sep.measured_gap << ","
                  << sep.digits_to_distinguish << "," << secs << "\n";
      }
      return 0;
    }
    return 1;
  } catch (const invalid_prime_error& e) {
    std::cerr << "invalid prime: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const precision_not_certified_error& e) {
    std::cerr << "uncertified precision: " << e.what() << "\n";
    return 4;
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 5;
  } catch (const syntax_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
