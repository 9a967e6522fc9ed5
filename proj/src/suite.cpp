#include "o2/suite.hpp"

#include <array>
#include <functional>
#include <random>
#include <set>

#include "o2/algebra.hpp"
#include "o2/expression.hpp"
#include "o2/matrix2.hpp"
#include "o2/rep_numeric.hpp"
#include "o2/sampling.hpp"
#include "o2/tower.hpp"
#include "o2/zcross.hpp"

namespace o2 {

namespace {

std::string show(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string s = serialize(x);
  s.pop_back();
  for (auto& ch : s) {
    if (ch == '\n') ch = ';';
  }
  return s;
}

class Recorder {
 public:
  void check(std::string id, bool passed, std::string detail = {}) {
    results_.push_back({std::move(id), passed, std::move(detail)});
  }

  // Runs a group; an escaping exception becomes a failed check.
  void guard(const std::string& id, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(id, false, std::string("exception: ") + e.what());
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

// Both operators share a source; compare after embedding in a common target.
bool same_operator(const NumericOperator& x, const NumericOperator& y) {
  if (x.source().depth != y.source().depth) return false;
  const unsigned target = std::max(x.target().depth, y.target().depth);
  return x.embed_target(target) == y.embed_target(target);
}

void cuntz_checks(Recorder& rec) {
  const auto one = gen::one();
  const auto s1 = gen::S1();
  const auto s2 = gen::S2();
  rec.check("cuntz.s1.isometry", adjoint(s1) * s1 == one, "S1'S1 = " + show(adjoint(s1) * s1));
  rec.check("cuntz.s2.isometry", adjoint(s2) * s2 == one, "S2'S2 = " + show(adjoint(s2) * s2));
  const auto sum = s1 * adjoint(s1) + s2 * adjoint(s2);
  rec.check("cuntz.relation", sum == one, "S1S1'+S2S2' = " + show(sum));
  rec.check("cuntz.orthogonal", (adjoint(s1) * s2).is_zero(), "S1'S2 = " + show(adjoint(s1) * s2));

  for (unsigned d = 1; d <= 3; ++d) {
    const auto m1 = matrix_of(s1, d);
    const auto m2 = matrix_of(s2, d);
    const bool isometries = m1.adjoint() * m1 == NumericOperator::identity(d) &&
                            m2.adjoint() * m2 == NumericOperator::identity(d);
    const unsigned up = m1.target().depth;
    const bool relation = m1 * m1.adjoint() + m2 * m2.adjoint() == NumericOperator::identity(up);
    rec.check("cuntz.matrix.d" + std::to_string(d), isometries && relation,
              std::to_string(m1.rows()) + "x" + std::to_string(m1.cols()) + " step matrices");
  }
}

void grading_checks(Recorder& rec, std::mt19937_64& rng) {
  const auto u = gen::U();
  rec.check("grading.u.selfadjoint", adjoint(u) == u);
  rec.check("grading.u.square", u * u == gen::one(), "U^2 = " + show(u * u));
  rec.check("grading.sigma.u", sigma(u) == -u, "sigma(U) = " + show(sigma(u)));

  int failures = 0;
  std::string first;
  for (int n = 0; n < 100; ++n) {
    const auto a = random_element(rng, {4, 4, false});
    const auto f = fixed_part(a);
    const auto g = anti_part(a);
    const auto gu = g * u;
    const bool ok = f + g == a && sigma(f) == f && sigma(g) == -g && sigma(gu) == gu;
    if (!ok && failures++ == 0) first = show(a);
  }
  rec.check("grading.decomposition", failures == 0,
            failures == 0 ? "100 random elements" : std::to_string(failures) + " failures, first " + first);
}

void fixed_checks(Recorder& rec) {
  const auto one = gen::one();
  const auto t = gen::T();
  const auto v = gen::Vgen();
  const auto u = gen::U();
  rec.check("fixed.t.isometry", adjoint(t) * t == one, "T'T = " + show(adjoint(t) * t));
  rec.check("fixed.v.isometry", adjoint(v) * v == one, "V'V = " + show(adjoint(v) * v));
  const auto sum = t * adjoint(t) + v * adjoint(v);
  rec.check("fixed.cuntz", sum == one, "TT'+VV' = " + show(sum));
  rec.check("fixed.sigma.t", sigma(t) == t);
  rec.check("fixed.sigma.v", sigma(v) == v);
  const auto alt = inv(Scalar::sqrt2()) * ((gen::S1() - gen::S2()) * u);
  rec.check("fixed.v.formula", v == u * t * u && v == alt, "V = " + show(v));
}

void crossed_checks(Recorder& rec, const SuiteOptions& options) {
  const auto one = gen::one();
  const auto s1 = gen::S1();
  const auto s2 = gen::S2();
  const auto w = gen::W();
  rec.check("crossed.w.square", w * w == one, "W^2 = " + show(w * w));
  rec.check("crossed.w.s1.w", w * s1 * w == s2, "WS1W = " + show(w * s1 * w));
  const auto p = s1 * adjoint(s1) * w;
  rec.check("crossed.w.recovery", p + adjoint(p) == w, "S1S1'W + (S1S1'W)' = " + show(p + adjoint(p)));

  const Scalar h = inv(Scalar::sqrt2());
  const auto right = h * (s1 + s1 * w);
  const auto b1 = options.right_multiplied_b1 ? right : gen::B1();
  const auto b2 = gen::B2();
  rec.check("tau.b1.isometry", adjoint(b1) * b1 == one, "B1'B1 = " + show(adjoint(b1) * b1));
  rec.check("tau.b2.isometry", adjoint(b2) * b2 == one, "B2'B2 = " + show(adjoint(b2) * b2));
  const auto sum = b1 * adjoint(b1) + b2 * adjoint(b2);
  rec.check("tau.cuntz", sum == one, "B1B1'+B2B2' = " + show(sum));
  const auto diff = b1 * adjoint(b1) - b2 * adjoint(b2);
  rec.check("tau.w", diff == w, "B1B1'-B2B2' = " + show(diff));

  // The substitution S1 -> B1, S2 -> B2 carries U to W and T to S1.
  Bindings tau{{"S1", b1}, {"S2", b2}};
  const auto tu = substitute(parse_expression("S1*S1' - S2*S2'"), tau);
  const auto tt = substitute(parse_expression("(S1 + S2)/r2"), tau);
  rec.check("tau.chain", tu == w && tt == s1, "tau(U) = " + show(tu) + ", tau(T) = " + show(tt));

  const auto bb = adjoint(right) * right;
  rec.check("tau.b1.right.variant", bb == one + w && bb != one,
            "(S1+S1W)/r2 gives B'B = " + show(bb));
}

void m2_checks(Recorder& rec) {
  using namespace mat;
  const auto id = Mat2::identity();
  const auto t1 = Tmat1();
  const auto t2 = Tmat2();
  rec.check("m2.t1.isometry", adjoint(t1) * t1 == id);
  rec.check("m2.t2.isometry", adjoint(t2) * t2 == id);
  rec.check("m2.cuntz", t1 * adjoint(t1) + t2 * adjoint(t2) == id);
  rec.check("m2.y.xi", Ymat() == Xi());
  rec.check("m2.r2.yr1y", R2() == Ymat() * R1() * Ymat());
  rec.check("m2.tau.t1", tau_conj(t1) == t2);
  rec.check("m2.z.not.lemma", !has_lemma_form(Z()));

  const std::array<Mat2, 4> letters{t1, t2, adjoint(t1), adjoint(t2)};
  std::vector<Mat2> words{id};
  std::vector<Mat2> frontier{id};
  std::vector<Mat2> short_words{id};
  for (int len = 1; len <= 4; ++len) {
    std::vector<Mat2> next;
    for (const auto& w : frontier) {
      for (const auto& l : letters) next.push_back(w * l);
    }
    frontier = std::move(next);
    words.insert(words.end(), frontier.begin(), frontier.end());
    if (len <= 2) short_words.insert(short_words.end(), frontier.begin(), frontier.end());
  }
  int bad = 0;
  for (const auto& w : words) {
    if (!has_lemma_form(w) || !has_lemma_form(adjoint(w))) ++bad;
  }
  rec.check("m2.block.words", bad == 0,
            std::to_string(words.size()) + " words, " + std::to_string(bad) + " outside");

  bad = 0;
  for (const auto& x : short_words) {
    for (const auto& y : short_words) {
      if (!has_lemma_form(x + y) || !has_lemma_form(x * y)) ++bad;
    }
  }
  rec.check("m2.block.closure", bad == 0,
            std::to_string(short_words.size() * short_words.size()) + " pairs, " +
                std::to_string(bad) + " outside");
}

void tower_checks(Recorder& rec, const SuiteOptions& options) {
  const TowerLevel base = base_level();
  rec.check("tower.level0", verify_level(base).ok());

  std::vector<TowerLevel> levels{base};
  for (unsigned k = 1; k <= options.tower_steps; ++k) {
    levels.push_back(descend(levels.back()));
    const auto report = verify_level(levels.back());
    rec.check("tower.descend." + std::to_string(k), report.ok(),
              "level " + std::to_string(levels.back().index) + ", " +
                  std::to_string(levels.back().r.size()) + "+" +
                  std::to_string(levels.back().t.size()) + " terms");
  }
  if (levels.size() > 1) {
    const auto& l1 = levels[1];
    rec.check("tower.descend.values",
              l1.r == gen::T() && l1.t == gen::U() * gen::T() * gen::U() && l1.w == gen::U());
  }

  bool growth = true;
  std::string depths;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const unsigned d = std::max({levels[k].r.depth(), levels[k].t.depth(), levels[k].w->depth()});
    growth = growth && d <= (k + 1) * base.r.depth();
    depths += (k ? "," : "") + std::to_string(d);
  }
  rec.check("tower.growth", growth, "depths " + depths);

  const auto up = ascend(base);
  rec.check("tower.ascend.b", up.r == gen::B1() && up.t == gen::B2() && verify_level(up).ok(),
            "r = " + show(up.r));

  for (unsigned k = 0; k < options.tower_steps && k < levels.size(); ++k) {
    const auto& level = levels[k];
    const auto back = descend(ascend(level));
    const auto report = verify_level(ascend(level));
    rec.check("tower.roundtrip." + std::to_string(k + 1),
              report.ok() && back.r == level.r && back.t == level.t && back.w == level.w &&
                  back.index == level.index,
              "from level " + std::to_string(level.index));
  }
}

void oracle_checks(Recorder& rec, std::mt19937_64& rng) {
  int agree = 0;
  int equal_pairs = 0;
  std::string first;
  for (int n = 0; n < 200; ++n) {
    const auto x = random_element(rng);
    AlgebraElement y;
    switch (n % 4) {
      case 0: {
        // Same operator written through split keys.
        std::vector<AlgebraElement::Term> terms;
        for (const auto& [key, c] : x.terms()) {
          if (key.depth() < 4) {
            const auto [lo, hi] = split(key, 4);
            terms.emplace_back(lo, c);
            terms.emplace_back(hi, c);
          } else {
            terms.emplace_back(key, c);
          }
        }
        y = AlgebraElement::from_terms(terms);
        break;
      }
      case 1:
        y = x + random_element(rng, {4, 1, true});
        break;
      case 2:
        y = random_element(rng);
        break;
      default: {
        const auto z = random_element(rng, {3, 2, true});
        y = (x + z) - z;
        break;
      }
    }
    const bool symbolic = equals(x, y);
    equal_pairs += symbolic;
    if (symbolic == numeric_equals(x, y, 5)) {
      ++agree;
    } else if (first.empty()) {
      first = show(x) + " vs " + show(y);
    }
  }
  rec.check("oracle.equals", agree == 200,
            std::to_string(agree) + "/200 agree, " + std::to_string(equal_pairs) + " equal pairs" +
                (first.empty() ? "" : ", first disagreement " + first));

  int hom = 0;
  for (int n = 0; n < 100; ++n) {
    const auto x = random_element(rng);
    const auto y = random_element(rng);
    const auto xy = x * y;
    const unsigned d = std::max({xy.depth(), y.depth(), x.depth(), 1u});
    const auto my = matrix_of(y, d);
    const auto lifted = my.embed_target(std::max(my.target().depth, x.depth()));
    const bool product = same_operator(matrix_of(xy, d), matrix_of(x, lifted.target().depth) * lifted);
    const auto mx = matrix_of(x, d);
    const unsigned top = std::max(mx.target().depth, my.target().depth);
    const bool sum = same_operator(matrix_of(x + y, d), mx.embed_target(top) + my.embed_target(top));
    // The restriction's adjoint is x* followed by projection onto depth d.
    const auto ma = matrix_of(adjoint(x), mx.target().depth);
    const unsigned deep = std::max(ma.target().depth, d);
    const auto back = NumericOperator::refinement(d, deep).adjoint() * ma.embed_target(deep);
    const bool star = back == mx.adjoint();
    hom += product && sum && star;
  }
  rec.check("oracle.homomorphism", hom == 100, std::to_string(hom) + "/100 pairs");
}

void odometer_checks(Recorder& rec) {
  constexpr std::size_t n = 128;
  using L = OdometerLetter;
  const std::array<L, 1> w1{L::T1};
  const std::array<L, 1> w2{L::T2};
  const auto t1 = odometer(w1, n);
  const auto t2 = odometer(w2, n);
  bool fixed = t1.at(0, 0) == 1;
  for (std::size_t row = 1; row < n; ++row) fixed = fixed && t1.at(row, 0) == 0;
  rec.check("odometer.t1.fixed", fixed, "T1 e0 = e0");

  int eigen = 0;
  for (std::size_t col = 0; col < 64; ++col) {
    bool off = false;
    for (std::size_t row = 0; row < n; ++row) off = off || (row != col && t2.at(row, col) != 0);
    eigen += !off;
  }
  rec.check("odometer.t2.no.eigenvector", eigen == 0, std::to_string(eigen) + " of 64 basis vectors");

  auto word = [&](L a, L b) {
    const std::array<L, 2> w{a, b};
    return odometer(w, n);
  };
  const auto a11 = word(L::T1adj, L::T1);
  const auto a22 = word(L::T2adj, L::T2);
  const auto a12 = word(L::T1adj, L::T2);
  const auto sum = word(L::T1, L::T1adj) + word(L::T2, L::T2adj);
  bool exact = true;
  for (std::size_t col = 0; col < n / 4; ++col) {
    for (std::size_t row = 0; row < n; ++row) {
      const int id = row == col ? 1 : 0;
      exact = exact && a11.at(row, col) == id && a22.at(row, col) == id && a12.at(row, col) == 0 &&
              sum.at(row, col) == id;
    }
  }
  rec.check("odometer.cuntz.prefix", exact, "columns n < " + std::to_string(n / 4) + " of N = " + std::to_string(n));
}

void commutant_checks(Recorder& rec, unsigned depth) {
  for (unsigned d = 1; d <= depth; ++d) {
    const auto passing = commuting_diagonal_projections(d);
    const std::size_t len = std::size_t{1} << d;
    const std::set<std::vector<int>> expected{std::vector<int>(len, 0), std::vector<int>(len, 1)};
    const std::set<std::vector<int>> got(passing.begin(), passing.end());
    rec.check("commutant.d" + std::to_string(d), got == expected && passing.size() == 2,
              std::to_string(passing.size()) + " of " + std::to_string(std::uint64_t{1} << len) +
                  " diagonal projections commute");
  }
}

bool boundary_holds(const SampledField::Values& values) {
  return values.front() == sigma_hat(values.back());
}

void zcross_checks(Recorder& rec, std::mt19937_64& rng) {
  const auto v = field_v();
  const auto s1 = field_s1();
  const auto s2 = field_s2();
  rec.check("zcross.boundary.v", boundary_holds(v.values()));
  rec.check("zcross.boundary.s1", boundary_holds(s1.values()));
  rec.check("zcross.boundary.s2", boundary_holds(s2.values()));

  // Words are multiplied pointwise on raw values so the boundary test is not
  // just the constructor's own.
  const std::array<SampledField::Values, 6> letters{v.values(),  s1.values(), s2.values(),
                                                    adjoint(v).values(), adjoint(s1).values(),
                                                    adjoint(s2).values()};
  int bad = 0;
  for (int n = 0; n < 50; ++n) {
    const auto len = std::uniform_int_distribution<int>(1, 6)(rng);
    SampledField::Values acc;
    acc.fill(gen::one());
    for (int k = 0; k < len; ++k) {
      const auto& l = letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)];
      for (std::size_t p = 0; p < kGridSize; ++p) acc[p] = acc[p] * l[p];
    }
    bad += !boundary_holds(acc);
  }
  rec.check("zcross.boundary.words", bad == 0, "50 random words, " + std::to_string(bad) + " violations");

  bool unitary = true;
  bool scalar_square = true;
  for (std::size_t p = 0; p < kGridSize; ++p) {
    const auto& x = v.at(p);
    unitary = unitary && x * adjoint(x) == gen::one() && adjoint(x) * x == gen::one();
    scalar_square = scalar_square && (x * x).as_scalar().has_value();
  }
  rec.check("zcross.v.unitary", unitary);
  rec.check("zcross.v.square.scalar", scalar_square);
  const auto cov = check_covariance();
  rec.check("zcross.covariance", cov.ok(), std::to_string(cov.checks.size()) + " grid checks");
}

void cli_checks(Recorder& rec, std::mt19937_64& rng) {
  int bad = 0;
  for (int n = 0; n < 100; ++n) {
    const auto x = random_element(rng);
    const auto text = serialize(x);
    const auto back = parse_element(text);
    bad += !(back == x && serialize(back) == text);
  }
  rec.check("cli.roundtrip", bad == 0, "100 random elements, " + std::to_string(bad) + " mismatches");

  const auto t = eval(parse_expression("(1/r2)*(S1+S2)"));
  rec.check("cli.eval", t == gen::T() && eval(parse_expression("W*S1*W")) == gen::S2() &&
                            eval(parse_expression("U*U")) == gen::one() &&
                            eval(parse_expression("0*S1")).is_zero());
}

}  // namespace

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
  Recorder rec;
  std::mt19937_64 rng(options.seed);
  rec.guard("cuntz", [&] { cuntz_checks(rec); });
  rec.guard("grading", [&] { grading_checks(rec, rng); });
  rec.guard("fixed", [&] { fixed_checks(rec); });
  rec.guard("crossed", [&] { crossed_checks(rec, options); });
  rec.guard("m2", [&] { m2_checks(rec); });
  rec.guard("tower", [&] { tower_checks(rec, options); });
  rec.guard("oracle", [&] { oracle_checks(rec, rng); });
  rec.guard("odometer", [&] { odometer_checks(rec); });
  rec.guard("commutant", [&] { commutant_checks(rec, options.depth); });
  rec.guard("zcross", [&] { zcross_checks(rec, rng); });
  rec.guard("cli", [&] { cli_checks(rec, rng); });
  return rec.take();
}

}  // namespace o2
