// Acceptance criteria 1-11, exact. One PASS/FAIL line per criterion.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "o2/expression.hpp"
#include "o2/matrix2.hpp"
#include "o2/rep_numeric.hpp"
#include "o2/tower.hpp"
#include "o2/zcross.hpp"
#include "oracles.hpp"

using namespace o2;
using namespace o2::gen;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

const Scalar h = inv(Scalar::sqrt2());

Outcome cuntz_kernel() {
  Outcome out;
  out.require(adjoint(S1()) * S1() == one(), "S1'S1");
  out.require(adjoint(S2()) * S2() == one(), "S2'S2");
  out.require(S1() * adjoint(S1()) + S2() * adjoint(S2()) == one(), "S1S1'+S2S2'");
  for (unsigned d = 1; d <= 3; ++d) {
    const auto m1 = matrix_of(S1(), d);
    const auto m2 = matrix_of(S2(), d);
    const auto id = NumericOperator::identity(d);
    out.require(m1.adjoint() * m1 == id && m2.adjoint() * m2 == id, "isometry matrices d=" + std::to_string(d));
    out.require(m1 * m1.adjoint() + m2 * m2.adjoint() == NumericOperator::identity(m1.target().depth),
                "relation matrix d=" + std::to_string(d));
  }
  return out;
}

Outcome grading() {
  Outcome out;
  out.require(adjoint(U()) == U(), "U'=U");
  out.require(U() * U() == one(), "U^2=1");
  out.require(sigma(U()) == -U(), "sigma(U)=-U");
  auto rng = oracle::rng(101);
  int bad = 0;
  for (int n = 0; n < 100; ++n) {
    const auto a = random_element(rng, {4, 4, false});
    const auto f = fixed_part(a);
    const auto g = anti_part(a);
    bad += !(f + g == a && sigma(f) == f && sigma(g * U()) == g * U());
  }
  out.require(bad == 0, std::to_string(bad) + " random elements");
  return out;
}

Outcome fixed_point() {
  Outcome out;
  const auto t = T();
  const auto v = Vgen();
  out.require(adjoint(t) * t == one(), "T'T");
  out.require(adjoint(v) * v == one(), "V'V");
  out.require(t * adjoint(t) + v * adjoint(v) == one(), "TT'+VV'");
  out.require(sigma(t) == t && sigma(v) == v, "sigma-fixed");
  out.require(v == U() * t * U(), "V=UTU");
  out.require(v == h * ((S1() - S2()) * U()), "V=(S1-S2)U/r2");
  return out;
}

Outcome crossed_product() {
  Outcome out;
  const auto w = W();
  out.require(w * w == one(), "W^2");
  out.require(w * S1() * w == S2(), "WS1W");
  const auto p = S1() * adjoint(S1()) * w;
  out.require(p + adjoint(p) == w, "S1S1'W + adjoint");
  out.require(adjoint(B1()) * B1() == one() && adjoint(B2()) * B2() == one(), "B isometries");
  out.require(B1() * adjoint(B1()) + B2() * adjoint(B2()) == one(), "B Cuntz");
  out.require(B1() * adjoint(B1()) - B2() * adjoint(B2()) == w, "B1B1'-B2B2'=W");
  const auto right = h * (S1() + S1() * w);
  const auto bb = adjoint(right) * right;
  out.require(bb == one() + w, "right variant gives 1+W");
  out.require(!(bb == one()), "right variant must not be an isometry");
  return out;
}

Outcome m2_machinery() {
  using namespace mat;
  Outcome out;
  const auto id = Mat2::identity();
  out.require(adjoint(Tmat1()) * Tmat1() == id && adjoint(Tmat2()) * Tmat2() == id, "T isometries");
  out.require(Tmat1() * adjoint(Tmat1()) + Tmat2() * adjoint(Tmat2()) == id, "T Cuntz");
  out.require(Ymat() == Xi(), "Y=Xi");
  out.require(R2() == Ymat() * R1() * Ymat(), "R2=YR1Y");

  const std::array<Mat2, 4> letters{Tmat1(), Tmat2(), adjoint(Tmat1()), adjoint(Tmat2())};
  std::vector<Mat2> all;
  std::vector<Mat2> frontier{id};
  for (int len = 1; len <= 4; ++len) {
    std::vector<Mat2> next;
    for (const auto& x : frontier) {
      for (const auto& l : letters) next.push_back(x * l);
    }
    frontier = std::move(next);
    all.insert(all.end(), frontier.begin(), frontier.end());
  }
  int bad = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& x = all[k];
    const auto& y = all[(k * 37 + 11) % all.size()];
    bad += !(has_lemma_form(x) && has_lemma_form(adjoint(x)) && has_lemma_form(x + y));
  }
  for (std::size_t k = 0; k < 20; ++k) {
    for (std::size_t j = 0; j < 20; ++j) bad += !has_lemma_form(all[k] * all[j]);
  }
  out.require(all.size() == 340, "word count");
  out.require(bad == 0, std::to_string(bad) + " closure failures");
  return out;
}

Outcome tower() {
  Outcome out;
  std::vector<TowerLevel> levels{base_level()};
  out.require(verify_level(levels[0]).ok(), "base");
  for (int k = 1; k <= 3; ++k) {
    levels.push_back(descend(levels.back()));
    out.require(verify_level(levels.back()).ok(), "descent " + std::to_string(k));
  }
  for (int k = 0; k < 3; ++k) {
    const auto& level = levels[k];
    const auto up = ascend(level);
    out.require(verify_level(up).ok(), "ascent from " + std::to_string(level.index));
    const auto back = descend(up);
    out.require(serialize(back.r) == serialize(level.r) && serialize(back.t) == serialize(level.t) &&
                    serialize(*back.w) == serialize(*level.w) && back.index == level.index,
                "roundtrip from " + std::to_string(level.index));
  }
  return out;
}

bool same_target(const NumericOperator& x, const NumericOperator& y) {
  const unsigned t = std::max(x.target().depth, y.target().depth);
  return x.source().depth == y.source().depth && x.embed_target(t) == y.embed_target(t);
}

Outcome numeric_oracle() {
  Outcome out;
  auto rng = oracle::rng(107);
  int disagree = 0;
  int equal = 0;
  for (int n = 0; n < 200; ++n) {
    const auto x = random_element(rng);
    AlgebraElement y = AlgebraElement::from_terms(oracle::scramble(x, rng, 1));
    if (n % 3 == 1) y += random_element(rng, {4, 1, true});
    if (n % 3 == 2) y = random_element(rng);
    const bool symbolic = equals(x, y);
    equal += symbolic;
    disagree += symbolic != numeric_equals(x, y, 5);
  }
  out.require(disagree == 0, std::to_string(disagree) + " disagreements");
  out.require(equal > 0 && equal < 200, "both outcomes exercised");

  int bad = 0;
  for (int n = 0; n < 100; ++n) {
    const auto x = random_element(rng);
    const auto y = random_element(rng);
    const unsigned d = std::max({(x * y).depth(), x.depth(), y.depth()});
    const auto mx = matrix_of(x, d);
    const auto my = matrix_of(y, d);
    const auto lifted = my.embed_target(std::max(my.target().depth, x.depth()));
    const bool prod = same_target(matrix_of(x * y, d), matrix_of(x, lifted.target().depth) * lifted);
    const unsigned top = std::max(mx.target().depth, my.target().depth);
    const bool sum = same_target(matrix_of(x + y, d), mx.embed_target(top) + my.embed_target(top));
    const auto ma = matrix_of(adjoint(x), mx.target().depth);
    const unsigned deep = std::max(ma.target().depth, d);
    const bool star = NumericOperator::refinement(d, deep).adjoint() * ma.embed_target(deep) == mx.adjoint();
    bad += !(prod && sum && star);
  }
  out.require(bad == 0, std::to_string(bad) + " homomorphism failures");
  return out;
}

Outcome odometer_rep() {
  using L = OdometerLetter;
  Outcome out;
  constexpr std::size_t n = 128;
  const std::array<L, 1> t1{L::T1};
  const std::array<L, 1> t2{L::T2};
  const auto m1 = odometer(t1, n);
  const auto m2 = odometer(t2, n);
  bool fixed = m1.at(0, 0) == 1;
  for (std::size_t r = 1; r < n; ++r) fixed = fixed && m1.at(r, 0) == 0;
  out.require(fixed, "T1 e0 = e0");
  for (std::size_t c = 0; c < 64; ++c) {
    bool eigen = true;
    for (std::size_t r = 0; r < n; ++r) eigen = eigen && (r == c || m2.at(r, c) == 0);
    out.require(!eigen, "T2 e" + std::to_string(c) + " is an eigenvector");
  }
  auto word = [&](L a, L b) {
    const std::array<L, 2> w{a, b};
    return odometer(w, n);
  };
  const auto sum = word(L::T1, L::T1adj) + word(L::T2, L::T2adj);
  const auto a11 = word(L::T1adj, L::T1);
  const auto a22 = word(L::T2adj, L::T2);
  for (std::size_t c = 0; c < n / 4; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      const int id = r == c;
      if (sum.at(r, c) != id || a11.at(r, c) != id || a22.at(r, c) != id) {
        out.require(false, "Cuntz prefix at column " + std::to_string(c));
        return out;
      }
    }
  }
  return out;
}

Outcome commutant() {
  Outcome out;
  for (unsigned d = 1; d <= 3; ++d) {
    const std::size_t len = std::size_t{1} << d;
    int passing = 0;
    bool constants = true;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::vector<int> chi(len);
      for (std::size_t k = 0; k < len; ++k) chi[k] = (bits >> k) & 1;
      if (diagonal_commutant_test(chi, d)) {
        ++passing;
        constants = constants && (bits == 0 || bits == (std::uint64_t{1} << len) - 1);
      }
    }
    out.require(passing == 2 && constants, "depth " + std::to_string(d) + ": " + std::to_string(passing) + " pass");
  }
  return out;
}

Outcome z_crossed() {
  Outcome out;
  const auto v = field_v();
  const auto s1 = field_s1();
  const auto s2 = field_s2();
  auto boundary = [](const SampledField::Values& x) { return x.front() == sigma_hat(x.back()); };
  out.require(boundary(v.values()) && boundary(s1.values()) && boundary(s2.values()), "generator boundary");
  const std::array<SampledField::Values, 6> letters{v.values(), s1.values(), s2.values(),
                                                    adjoint(v).values(), adjoint(s1).values(), adjoint(s2).values()};
  auto rng = oracle::rng(110);
  int bad = 0;
  for (int n = 0; n < 50; ++n) {
    SampledField::Values acc;
    acc.fill(one());
    const int len = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int k = 0; k < len; ++k) {
      const auto& l = letters[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
      for (std::size_t p = 0; p < kGridSize; ++p) acc[p] = acc[p] * l[p];
    }
    bad += !boundary(acc);
  }
  out.require(bad == 0, std::to_string(bad) + " random words off the boundary");
  for (std::size_t p = 0; p < kGridSize; ++p) {
    const auto& x = v.at(p);
    out.require(x * adjoint(x) == one() && adjoint(x) * x == one(), "unitary at " + grid_label(p));
    out.require((x * x).as_scalar().has_value(), "v^2 scalar at " + grid_label(p));
    out.require(x * s1.at(p) * adjoint(x) == s2.at(p), "v s1 v* at " + grid_label(p));
    out.require(x * s2.at(p) * adjoint(x) == s1.at(p), "v s2 v* at " + grid_label(p));
  }
  return out;
}

std::pair<int, std::string> run(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string output;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli() {
  Outcome out;
  auto rng = oracle::rng(111);
  int bad = 0;
  for (int n = 0; n < 100; ++n) {
    const auto x = random_element(rng);
    const auto text = serialize(x);
    const auto back = parse_element(text);
    bad += !(back == x && serialize(back) == text);
  }
  out.require(bad == 0, std::to_string(bad) + " round-trip failures");

  const std::string prog = O2CALC_PATH;
  const std::string golden = GOLDEN_DIR;
  const auto [suite_status, suite_out] = run("'" + prog + "' suite 2>/dev/null");
  out.require(suite_status == 0, "suite exit " + std::to_string(suite_status));

  const std::pair<const char*, const char*> cases[] = {
      {"norm B1", "norm_b1.txt"},
      {"norm \"S1*S1' + S2*S2'\"", "norm_cuntz.txt"},
      {"matrix \"(1/r2)*(S1+S2)\" --depth 2", "matrix_t_d2.txt"},
      {"matrix W --depth 2 --format sparse", "matrix_w_d2_sparse.txt"},
      {"tower --steps 2", "tower_steps2.txt"},
  };
  for (const auto& [args, file] : cases) {
    const auto [status, text] = run("'" + prog + "' " + args);
    out.require(status == 0 && text == slurp(golden + "/" + file), std::string("golden ") + file);
  }
  return out;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"cuntz kernel", cuntz_kernel},
      {"grading", grading},
      {"fixed-point generators", fixed_point},
      {"crossed product", crossed_product},
      {"M2 machinery", m2_machinery},
      {"tower", tower},
      {"numeric oracle agreement", numeric_oracle},
      {"odometer", odometer_rep},
      {"commutant", commutant},
      {"Z crossed product", z_crossed},
      {"cli", cli},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome result;
    try {
      result = check();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (result.ok ? "PASS" : "FAIL") << " " << index << " " << name;
    if (!result.ok) std::cout << ": " << result.note;
    std::cout << "\n";
    failed += !result.ok;
  }
  std::cout << (11 - failed) << "/11 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
