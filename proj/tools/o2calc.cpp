#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "o2/errors.hpp"
#include "o2/expression.hpp"
#include "o2/rep_numeric.hpp"
#include "o2/suite.hpp"
#include "o2/tower.hpp"
#include "o2/zcross.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

void print_element(std::ostream& out, const o2::AlgebraElement& x) {
  out << (x.is_zero() ? std::string("0\n") : o2::serialize(x));
}

o2::AlgebraElement evaluate(const std::string& text, const o2::Limits& limits) {
  return o2::eval(o2::parse_expression(text), limits);
}

int cmd_tower(unsigned steps, const std::string& direction, const o2::Limits& limits) {
  bool ok = true;
  auto emit = [&](const o2::TowerLevel& level) {
    const auto report = o2::verify_level(level, limits);
    std::cout << o2::to_string(level) << report.to_string();
    ok = ok && report.ok();
  };

  std::vector<o2::TowerLevel> levels{o2::base_level()};
  if (direction == "down") {
    emit(levels.back());
    for (unsigned k = 0; k < steps; ++k) {
      levels.push_back(o2::descend(levels.back(), limits));
      emit(levels.back());
    }
    return ok ? kOk : kFail;
  }

  // Going up, each flip comes from the descent that produced the level.
  for (unsigned k = 1; k < steps; ++k) levels.push_back(o2::descend(levels.back(), limits));
  o2::TowerLevel current = levels.back();
  emit(current);
  for (unsigned k = 0; k < steps; ++k) {
    o2::TowerLevel next = o2::ascend(current, limits);
    const std::size_t pos = levels.size() - 1 - (k + 1);
    if (k + 1 < levels.size()) {
      const auto& recorded = levels[pos];
      if (!(next.r == recorded.r && next.t == recorded.t)) {
        std::cout << "mismatch with descended level " << recorded.index << "\n";
        ok = false;
      }
      next.w = recorded.w;
    }
    emit(next);
    current = std::move(next);
  }
  return ok ? kOk : kFail;
}

int cmd_commutant(unsigned depth) {
  const auto passing = o2::commuting_diagonal_projections(depth);
  const std::size_t len = std::size_t{1} << depth;
  bool only_constants = passing.size() == 2;
  for (const auto& chi : passing) {
    std::string bits;
    for (int b : chi) bits += static_cast<char>('0' + b);
    std::cout << bits << "\n";
    only_constants = only_constants && (bits == std::string(len, '0') || bits == std::string(len, '1'));
  }
  std::cout << "passing: " << passing.size() << " of " << (std::uint64_t{1} << len) << "\n";
  return only_constants ? kOk : kFail;
}

int cmd_zcross() {
  bool ok = true;
  const auto cov = o2::check_covariance();
  std::cout << "covariance\n" << cov.to_string();
  ok = ok && cov.ok();

  const std::pair<const char*, o2::SampledField> fields[] = {
      {"v", o2::field_v()}, {"s1", o2::field_s1()}, {"s2", o2::field_s2()}};
  for (const auto& [name, f] : fields) {
    const bool boundary = f.at(0) == o2::sigma_hat(f.at(o2::kGridSize - 1));
    std::cout << name << "\n" << (boundary ? "PASS" : "FAIL") << " boundary\n";
    const auto report = o2::corollary_form(f);
    std::cout << report.to_string();
    ok = ok && boundary && report.ok();
  }

  const auto v = o2::field_v();
  std::cout << "v pointwise\n";
  for (std::size_t k = 0; k < o2::kGridSize; ++k) {
    const auto& x = v.at(k);
    const bool unitary = x * o2::adjoint(x) == o2::gen::one() && o2::adjoint(x) * x == o2::gen::one();
    const auto square = (x * x).as_scalar();
    std::cout << (unitary ? "PASS" : "FAIL") << " unitary t=" << o2::grid_label(k) << "\n"
              << (square ? "PASS" : "FAIL") << " v^2 scalar t=" << o2::grid_label(k)
              << (square ? " (" + square->to_string() + ")" : std::string()) << "\n";
    ok = ok && unitary && square;
  }
  return ok ? kOk : kFail;
}

int cmd_suite(const o2::SuiteOptions& options, const std::string& report_path) {
  std::ofstream file;
  if (!report_path.empty()) {
    file.open(report_path);
    if (!file) {
      std::cerr << "error: cannot open " << report_path << "\n";
      return kUsage;
    }
  }
  std::ostream& report = report_path.empty() ? std::cerr : file;

  const auto results = o2::run_suite(options);
  std::size_t failed = 0;
  for (const auto& r : results) {
    const char* status = r.passed ? "PASS" : "FAIL";
    std::cout << "[" << status << "] " << r.id;
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << "\n";
    report << status << " " << r.id << "\n";
    failed += !r.passed;
  }
  std::cout << results.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for O2 and its crossed products"};
  app.require_subcommand(1);

  unsigned max_depth = o2::Limits::kDefaultMaxDepth;
  app.add_option("--max-depth", max_depth, "Interval depth ceiling for products")->capture_default_str();

  std::string expr_a;
  std::string expr_b;

  auto* norm = app.add_subcommand("norm", "Print the canonical form");
  norm->add_option("expr", expr_a)->required();
  auto* eq = app.add_subcommand("eq", "Compare two expressions");
  eq->add_option("lhs", expr_a)->required();
  eq->add_option("rhs", expr_b)->required();
  auto* sig = app.add_subcommand("sigma", "Apply the flip automorphism");
  sig->add_option("expr", expr_a)->required();
  auto* fix = app.add_subcommand("fix", "Split into flip-fixed and flip-odd parts");
  fix->add_option("expr", expr_a)->required();
  auto* pair = app.add_subcommand("pair", "Write as f + g W with f, g in O2");
  pair->add_option("expr", expr_a)->required();

  unsigned depth = 2;
  std::string format = "dense";
  auto* matrix = app.add_subcommand("matrix", "Exact step-function matrix");
  matrix->add_option("expr", expr_a)->required();
  matrix->add_option("--depth", depth, "Source depth")->required();
  matrix->add_option("--format", format)->check(CLI::IsMember({"dense", "sparse"}))->capture_default_str();

  unsigned steps = 3;
  std::string direction = "down";
  auto* tower = app.add_subcommand("tower", "Walk the tower from (S1, S2, W)");
  tower->add_option("--steps", steps)->capture_default_str();
  tower->add_option("--direction", direction)->check(CLI::IsMember({"up", "down"}))->capture_default_str();

  unsigned commutant_depth = 2;
  auto* commutant = app.add_subcommand("commutant", "Diagonal projections commuting with the depth-d translations");
  commutant->add_option("--depth", commutant_depth)->required()->check(CLI::Range(1, 4));

  auto* zcross = app.add_subcommand("zcross-suite", "Checks on the sampled Z crossed product");

  o2::SuiteOptions suite_options;
  std::string report_path;
  auto* suite = app.add_subcommand("suite", "Run every check");
  suite->add_option("--depth", suite_options.depth, "Largest commutant depth")
      ->capture_default_str()
      ->check(CLI::Range(1, 4));
  suite->add_option("--report", report_path, "Write PASS/FAIL lines here instead of stderr");
  suite->add_flag("--right-multiplied-b1", suite_options.right_multiplied_b1,
                  "Build B1 as (S1 + S1 W)/r2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const o2::Limits limits{max_depth};
  try {
    if (*norm) {
      print_element(std::cout, evaluate(expr_a, limits));
    } else if (*eq) {
      const bool same = o2::equals(evaluate(expr_a, limits), evaluate(expr_b, limits));
      std::cout << (same ? "equal" : "not equal") << "\n";
      return same ? kOk : kFail;
    } else if (*sig) {
      print_element(std::cout, o2::sigma(evaluate(expr_a, limits)));
    } else if (*fix) {
      const auto x = evaluate(expr_a, limits);
      std::cout << "fixed:\n";
      print_element(std::cout, o2::fixed_part(x));
      std::cout << "anti:\n";
      print_element(std::cout, o2::anti_part(x));
    } else if (*pair) {
      const auto [f, g] = o2::to_pair(evaluate(expr_a, limits));
      std::cout << "f:\n";
      print_element(std::cout, f);
      std::cout << "g:\n";
      print_element(std::cout, g);
    } else if (*matrix) {
      const auto m = o2::matrix_of(evaluate(expr_a, limits), depth);
      std::cout << "# " << m.rows() << "x" << m.cols() << " source depth " << m.source().depth
                << " target depth " << m.target().depth << "\n";
      std::cout << (format == "sparse" ? m.to_sparse_string() : m.to_dense_string());
    } else if (*tower) {
      return cmd_tower(steps, direction, limits);
    } else if (*commutant) {
      return cmd_commutant(commutant_depth);
    } else if (*zcross) {
      return cmd_zcross();
    } else if (*suite) {
      return cmd_suite(suite_options, report_path);
    }
  } catch (const o2::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const o2::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const o2::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const o2::DivisionByZero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const o2::DepthTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const o2::RelationViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kOk;
}
