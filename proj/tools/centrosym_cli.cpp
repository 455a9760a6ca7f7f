// Command-line front end. Every verb parses JSON, calls one library entry
// point and prints JSON; exit codes: 0 success, 1 domain failure, 2 usage or
// input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "centrosym/cauchy.hpp"
#include "centrosym/eigenpairs.hpp"
#include "centrosym/errors.hpp"
#include "centrosym/inverse.hpp"
#include "centrosym/json_io.hpp"
#include "centrosym/product.hpp"
#include "centrosym/structure.hpp"
#include "centrosym/verify.hpp"

namespace {

using centro::Json;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_source(path));
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

void emit(const Json& j, const std::string& out_path) {
  const std::string text = centro::dump(j) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("CT_SEED must be an unsigned integer");
    }
  }
  return 20150421;
}

centro::Kind parse_kind(const std::string& s) {
  if (s == "centro") return centro::Kind::centro;
  if (s == "skew") return centro::Kind::skew;
  return centro::Kind::general;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centrosymmetric tensor toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("-o,--output", out_path, "Write JSON here instead of stdout");

  std::optional<std::uint64_t> seed_flag;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random structured tensor");
  std::size_t gen_order = 2, gen_dim = 2;
  std::string gen_kind = "centro";
  gen->add_option("--order", gen_order, "Tensor order m")->required()->check(CLI::PositiveNumber);
  gen->add_option("--dim", gen_dim, "Dimension n")->required()->check(CLI::PositiveNumber);
  gen->add_option("--kind", gen_kind, "centro | skew | general")
      ->check(CLI::IsMember({"centro", "skew", "general"}));
  gen->add_option("--seed", seed_flag, "RNG seed (default: $CT_SEED or built-in)");

  // check
  auto* check = app.add_subcommand("check", "Classify a tensor as centro/skew");
  std::string check_in = "-", check_method = "direct";
  std::optional<double> check_tol;
  check->add_option("input", check_in, "Tensor JSON file or - for stdin");
  check->add_option("--tol", check_tol, "Absolute tolerance (default 1e-12*max(1,max|a|))")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--method", check_method, "direct | J | commute")
      ->check(CLI::IsMember({"direct", "J", "commute"}));

  // prod
  auto* prod = app.add_subcommand("prod", "General tensor product A1 A2 ... (left-associated)");
  std::vector<std::string> prod_in;
  prod->add_option("inputs", prod_in, "Tensor JSON files")->required()->expected(2, -1);

  // hadamard
  auto* had = app.add_subcommand("hadamard", "Elementwise product");
  std::vector<std::string> had_in;
  had->add_option("inputs", had_in, "Two tensor JSON files")->required()->expected(2);

  // decompose
  auto* dec = app.add_subcommand("decompose", "Split into centro + skew parts");
  std::string dec_in = "-";
  dec->add_option("input", dec_in, "Tensor JSON file or -");

  // eig
  auto* eig = app.add_subcommand("eig", "Real H-eigenpairs by multistart Newton");
  std::string eig_in = "-";
  centro::SolverOptions solver;
  eig->add_option("input", eig_in, "Tensor JSON file or -");
  eig->add_option("--starts", solver.starts, "Number of random starts");
  eig->add_option("--seed", seed_flag, "RNG seed");
  eig->add_option("--tol", solver.tol, "Residual tolerance")->check(CLI::PositiveNumber);

  // cauchy
  auto* cau = app.add_subcommand("cauchy", "Materialize or test a Cauchy tensor spec");
  std::string cau_in = "-";
  bool cau_check = false;
  double cau_tol = 1e-10;
  cau->add_option("input", cau_in, "Cauchy spec JSON file or -");
  cau->add_flag("--check", cau_check, "Report structure predicates instead of the tensor");
  cau->add_option("--tol", cau_tol, "Tolerance for the predicates")->check(CLI::NonNegativeNumber);

  // inverse
  auto* inv = app.add_subcommand("inverse", "Left/right inverse of a centrosymmetric tensor");
  std::string inv_in = "-", inv_side = "left";
  std::size_t inv_order = 2;
  inv->add_option("input", inv_in, "Tensor JSON file or -");
  inv->add_option("--side", inv_side, "left | right")->check(CLI::IsMember({"left", "right"}));
  inv->add_option("--order", inv_order, "Order k of the inverse (k > 2 needs a diagonal tensor)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{16}));

  // verify-all
  auto* ver = app.add_subcommand("verify-all", "Run every structural property on random instances");
  centro::VerifyOptions verify;
  ver->add_option("--trials", verify.trials, "Instances per property");
  ver->add_option("--seed", seed_flag, "RNG seed");
  ver->add_option("--starts", verify.eigen_starts, "Multistart count for eigen properties");
  ver->add_option("--inject-fault", verify.fault, "Flip the expectation of the named property")
      ->check(CLI::IsMember(centro::property_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const std::uint64_t seed = seed_flag ? *seed_flag : default_seed();

    if (*gen) {
      emit(centro::to_json(centro::random_structured(gen_order, gen_dim, parse_kind(gen_kind), seed)),
           out_path);
    } else if (*check) {
      const auto a = centro::tensor_from_json(read_json(check_in));
      const auto report = check_method == "J"         ? centro::check_via_J(a, check_tol)
                          : check_method == "commute" ? centro::check_commutation(a, check_tol)
                                                      : centro::check_structure(a, check_tol);
      emit(centro::to_json(report), out_path);
    } else if (*prod) {
      std::vector<centro::DenseTensor> factors;
      for (const auto& p : prod_in) factors.push_back(centro::tensor_from_json(read_json(p)));
      emit(centro::to_json(centro::chain_product(factors)), out_path);
    } else if (*had) {
      const auto a = centro::tensor_from_json(read_json(had_in[0]));
      const auto b = centro::tensor_from_json(read_json(had_in[1]));
      emit(centro::to_json(centro::hadamard(a, b)), out_path);
    } else if (*dec) {
      emit(centro::to_json(centro::decompose(centro::tensor_from_json(read_json(dec_in)))), out_path);
    } else if (*eig) {
      solver.seed = seed;
      const auto a = centro::tensor_from_json(read_json(eig_in));
      emit(centro::to_json(centro::solve_eigen(a, solver)), out_path);
    } else if (*cau) {
      const auto spec = centro::cauchy_spec_from_json(read_json(cau_in));
      if (cau_check) {
        centro::validate(spec);
        emit(Json{{"centrosymmetric", centro::cauchy_is_centro(spec, cau_tol)},
                  {"skew_centrosymmetric", centro::cauchy_is_skew(spec, cau_tol)},
                  {"JC_equals_C", centro::cauchy_check_JC(spec, cau_tol)}},
             out_path);
      } else {
        emit(centro::to_json(centro::materialize(spec)), out_path);
      }
    } else if (*inv) {
      const auto a = centro::tensor_from_json(read_json(inv_in));
      const auto side = inv_side == "right" ? centro::Side::right : centro::Side::left;
      const auto result = centro::find_inverse(a, side, inv_order);
      emit(centro::to_json(result), out_path);
      return result.found() ? kOk : kDomainFailure;
    } else if (*ver) {
      verify.seed = seed;
      const auto report = centro::verify_all(verify);
      emit(centro::to_json(report), out_path);
      for (const auto& o : report.outcomes) {
        if (!o.passed()) std::cerr << "property failed: " << o.name << "\n";
      }
      return report.all_passed() ? kOk : kDomainFailure;
    }
    return kOk;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const centro::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const centro::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const centro::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const centro::TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kDomainFailure;
  }
}
