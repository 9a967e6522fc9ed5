#include "o2/tower.hpp"

#include "o2/errors.hpp"

namespace o2 {

namespace {

std::string block(const AlgebraElement& x) {
  const std::string s = serialize(x);
  return s.empty() ? "0\n" : s;
}

void require_valid(const TowerLevel& level, const Limits& limits, const char* op) {
  const LevelReport report = verify_level(level, limits);
  if (!report.ok()) {
    throw RelationViolation(std::string(op) + ": level " + std::to_string(level.index) +
                            " violates the tower relations\n" + report.to_string());
  }
}

}  // namespace

bool LevelReport::ok() const {
  for (const auto& check : checks) {
    if (check.passed == false) return false;
  }
  return true;
}

std::string LevelReport::to_string() const {
  std::string out;
  for (const auto& check : checks) {
    const char* status = !check.passed ? "SKIP" : (*check.passed ? "PASS" : "FAIL");
    out += std::string(status) + " " + check.name + "\n";
  }
  return out;
}

TowerLevel base_level() { return {gen::S1(), gen::S2(), gen::W(), 0}; }

LevelReport verify_level(const TowerLevel& level, const Limits& limits) {
  const auto one = gen::one();
  const auto& r = level.r;
  const auto& t = level.t;
  const auto r_adj = adjoint(r);
  const auto t_adj = adjoint(t);

  LevelReport report{level.index, {}};
  if (level.w) {
    const auto& w = *level.w;
    report.checks.push_back({"w^2=1", mul(w, w, limits) == one});
    report.checks.push_back({"wt=rw", mul(w, t, limits) == mul(r, w, limits)});
  } else {
    report.checks.push_back({"w^2=1", std::nullopt});
    report.checks.push_back({"wt=rw", std::nullopt});
  }
  report.checks.push_back({"r*r=1", mul(r_adj, r, limits) == one});
  report.checks.push_back({"t*t=1", mul(t_adj, t, limits) == one});
  report.checks.push_back({"rr*+tt*=1", mul(r, r_adj, limits) + mul(t, t_adj, limits) == one});
  return report;
}

TowerLevel descend(const TowerLevel& level, const Limits& limits) {
  require_valid(level, limits, "descend");
  const Scalar half_root = inv(Scalar::sqrt2());
  const auto w = mul(level.r, adjoint(level.r), limits) - mul(level.t, adjoint(level.t), limits);
  const auto r = half_root * (level.r + level.t);
  const auto t = mul(mul(w, r, limits), w, limits);
  return {r, t, w, level.index - 1};
}

TowerLevel ascend(const TowerLevel& level, const Limits& limits) {
  if (!level.w) {
    throw RelationViolation("ascend: level " + std::to_string(level.index) +
                            " has no flip unitary in the ambient algebra");
  }
  require_valid(level, limits, "ascend");
  const Scalar half_root = inv(Scalar::sqrt2());
  const auto wr = mul(*level.w, level.r, limits);
  return {half_root * (level.r + wr), half_root * (level.r - wr), std::nullopt, level.index + 1};
}

std::string to_string(const TowerLevel& level) {
  std::string out = "level " + std::to_string(level.index) + "\n";
  out += "r:\n" + block(level.r);
  out += "t:\n" + block(level.t);
  out += "w:\n" + (level.w ? block(*level.w) : std::string("unavailable\n"));
  return out;
}

}  // namespace o2
