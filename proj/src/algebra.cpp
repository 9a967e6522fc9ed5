#include "o2/algebra.hpp"

#include <set>
#include <sstream>

#include "o2/errors.hpp"

namespace o2 {

AlgebraElement::AlgebraElement(const BasisIsometry& key, const Scalar& coeff) {
  if (!coeff.is_zero()) terms_.emplace(key, coeff);
}

AlgebraElement AlgebraElement::from_terms(const std::vector<Term>& terms) {
  TermMap raw;
  for (const auto& [key, coeff] : terms) raw[key] += coeff;
  return AlgebraElement(canonicalize(std::move(raw)));
}

AlgebraElement AlgebraElement::scalar(const Scalar& c) {
  return AlgebraElement(projection(DyadicInterval::whole()), c);
}

AlgebraElement::TermMap AlgebraElement::canonicalize(TermMap raw) {
  std::erase_if(raw, [](const auto& term) { return term.second.is_zero(); });

  // Push coefficients of keys that have refinements in the map down to
  // the leaves, so that the remaining keys have disjoint supports within
  // each affine class.
  std::set<BasisIsometry> ancestors;
  for (const auto& [key, coeff] : raw) {
    for (auto p = parent(key); p && ancestors.insert(*p).second; p = parent(*p)) {
    }
  }
  for (;;) {
    std::vector<Term> pushed;
    for (auto it = raw.begin(); it != raw.end();) {
      if (ancestors.contains(it->first)) {
        pushed.push_back(*it);
        it = raw.erase(it);
      } else {
        ++it;
      }
    }
    if (pushed.empty()) break;
    for (const auto& [key, coeff] : pushed) {
      const auto [lo, hi] = split(key);
      raw[lo] += coeff;
      raw[hi] += coeff;
    }
  }
  std::erase_if(raw, [](const auto& term) { return term.second.is_zero(); });

  // Merge equal-coefficient siblings bottom-up.
  for (bool merged = true; merged;) {
    merged = false;
    std::vector<BasisIsometry> keys;
    keys.reserve(raw.size());
    for (const auto& term : raw) keys.push_back(term.first);
    for (auto k = keys.rbegin(); k != keys.rend(); ++k) {
      const auto it = raw.find(*k);
      if (it == raw.end()) continue;
      const auto up = parent(*k);
      if (!up) continue;
      const auto sib = raw.find(sibling(*k));
      if (sib == raw.end() || !(sib->second == it->second)) continue;
      Scalar coeff = it->second;
      raw.erase(sib);
      raw.erase(it);
      raw.emplace(*up, std::move(coeff));
      merged = true;
    }
  }
  return raw;
}

unsigned AlgebraElement::depth() const {
  unsigned d = 0;
  for (const auto& term : terms_) d = std::max(d, term.first.depth());
  return d;
}

std::optional<Scalar> AlgebraElement::as_scalar() const {
  if (terms_.empty()) return Scalar();
  if (terms_.size() == 1 && terms_.begin()->first == projection(DyadicInterval::whole())) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  TermMap raw = terms_;
  for (const auto& [key, coeff] : other.terms_) raw[key] += coeff;
  terms_ = canonicalize(std::move(raw));
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  TermMap raw = terms_;
  for (const auto& [key, coeff] : other.terms_) raw[key] -= coeff;
  terms_ = canonicalize(std::move(raw));
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  TermMap out = terms_;
  for (auto& term : out) term.second = -term.second;
  return AlgebraElement(std::move(out));
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return mul(x, y); }

AlgebraElement operator*(const Scalar& c, const AlgebraElement& x) {
  if (c.is_zero()) return {};
  AlgebraElement::TermMap out = x.terms_;
  for (auto& term : out) term.second *= c;
  return AlgebraElement(std::move(out));
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) { return x + y; }
AlgebraElement neg(const AlgebraElement& x) { return -x; }
AlgebraElement scalar_mul(const Scalar& c, const AlgebraElement& x) { return c * x; }

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y, const Limits& limits) {
  AlgebraElement::TermMap raw;
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      const auto key = compose(kx, ky);
      if (!key) continue;
      if (key->depth() > limits.max_depth) {
        throw ResourceError("product term " + key->to_string() + " exceeds depth ceiling " +
                            std::to_string(limits.max_depth));
      }
      raw[*key] += cx * cy;
    }
  }
  return AlgebraElement(AlgebraElement::canonicalize(std::move(raw)));
}

AlgebraElement adjoint(const AlgebraElement& x) {
  AlgebraElement::TermMap raw;
  for (const auto& [key, coeff] : x.terms_) raw.emplace(adjoint(key), conj(coeff));
  return AlgebraElement(AlgebraElement::canonicalize(std::move(raw)));
}

bool equals(const AlgebraElement& x, const AlgebraElement& y) { return x == y; }

AlgebraElement sigma(const AlgebraElement& x) {
  AlgebraElement::TermMap raw;
  for (const auto& [key, coeff] : x.terms_) {
    raw.emplace(BasisIsometry{reflect(key.target), reflect(key.source), key.orientation}, coeff);
  }
  return AlgebraElement(AlgebraElement::canonicalize(std::move(raw)));
}

AlgebraElement sigma_hat(const AlgebraElement& x) {
  std::vector<AlgebraElement::Term> terms;
  for (const auto& [key, coeff] : x.terms()) {
    terms.emplace_back(key, key.orientation == Orientation::minus ? -coeff : coeff);
  }
  return AlgebraElement::from_terms(terms);
}

AlgebraElement fixed_part(const AlgebraElement& x) {
  return Scalar(Rational(1, 2)) * (x + sigma(x));
}

AlgebraElement anti_part(const AlgebraElement& x) {
  return Scalar(Rational(1, 2)) * (x - sigma(x));
}

std::pair<AlgebraElement, AlgebraElement> to_pair(const AlgebraElement& x) {
  // V-(I,J) = V+(I,-J) W
  std::vector<AlgebraElement::Term> even;
  std::vector<AlgebraElement::Term> odd;
  for (const auto& [key, coeff] : x.terms()) {
    if (key.orientation == Orientation::plus) {
      even.emplace_back(key, coeff);
    } else {
      odd.emplace_back(BasisIsometry{key.target, reflect(key.source), Orientation::plus}, coeff);
    }
  }
  return {AlgebraElement::from_terms(even), AlgebraElement::from_terms(odd)};
}

bool in_O2(const AlgebraElement& x) {
  for (const auto& term : x.terms()) {
    if (term.first.orientation != Orientation::plus) return false;
  }
  return true;
}

bool is_symmetric(const AlgebraElement& x) { return sigma(x) == x; }
bool is_antisymmetric(const AlgebraElement& x) { return sigma(x) == -x; }

std::string serialize(const AlgebraElement& x) {
  std::string out;
  for (const auto& [key, coeff] : x.terms()) {
    out += coeff.to_string();
    out += ' ';
    out += key.to_string();
    out += '\n';
  }
  return out;
}

AlgebraElement parse_element(std::string_view text) {
  std::vector<AlgebraElement::Term> terms;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (!line.empty()) {
      const std::size_t sep = line.rfind(" V");
      if (sep == std::string_view::npos) {
        throw ParseError("expected '<scalar> V<sign>(...)'", line_start);
      }
      terms.emplace_back(BasisIsometry::parse(line.substr(sep + 1)),
                         Scalar::parse(line.substr(0, sep)));
    }
    line_start = line_end + 1;
  }
  return AlgebraElement::from_terms(terms);
}

namespace gen {

AlgebraElement one() { return AlgebraElement::scalar(1); }
AlgebraElement zero() { return {}; }

AlgebraElement S1() {
  return AlgebraElement(BasisIsometry{{1, 1}, DyadicInterval::whole(), Orientation::plus});
}

AlgebraElement S2() {
  return AlgebraElement(BasisIsometry{{1, 0}, DyadicInterval::whole(), Orientation::plus});
}

AlgebraElement W() {
  return AlgebraElement(
      BasisIsometry{DyadicInterval::whole(), DyadicInterval::whole(), Orientation::minus});
}

AlgebraElement U() {
  const auto s1 = S1();
  const auto s2 = S2();
  return s1 * adjoint(s1) - s2 * adjoint(s2);
}

AlgebraElement T() { return inv(Scalar::sqrt2()) * (S1() + S2()); }

AlgebraElement Vgen() {
  const auto u = U();
  return u * T() * u;
}

AlgebraElement B1() { return inv(Scalar::sqrt2()) * (S1() + W() * S1()); }
AlgebraElement B2() { return inv(Scalar::sqrt2()) * (S1() - W() * S1()); }

}  // namespace gen

}  // namespace o2
