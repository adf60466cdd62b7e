#include "quadrep/representation.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadrep {

Representation Representation::make(Nat x, Nat y, Nat d, Nat m) {
  Representation rep{std::move(x), std::move(y), std::move(d), std::move(m), false};
  rep.proper = gcd(rep.x, rep.y) == 1;
  rep.check();
  return rep;
}

void Representation::check() const {
  if (sgn(x) < 0 || sgn(y) < 0) {
    throw std::logic_error("representation components must be non-negative");
  }
  if (x * x + d * y * y != m) {
    throw std::logic_error("representation identity fails: " + to_string());
  }
  if (proper != (gcd(x, y) == 1)) {
    throw std::logic_error("representation proper flag is wrong: " + to_string());
  }
  // A proper solution with d >= 2, m >= 2 and gcd(d, m) = 1 has xy != 0, gcd(xy, m) = 1
  // and m >= d + 1.
  if (proper && d >= 2 && m >= 2 && gcd(d, m) == 1) {
    if (sgn(x) == 0 || sgn(y) == 0 || gcd(x * y, m) != 1 || m < d + 1) {
      throw std::logic_error("proper representation violates xy coprime to m: " +
                             to_string());
    }
  }
}

std::pair<Nat, Nat> Representation::canonical() const {
  if (d == 1 && x < y) return {y, x};
  return {x, y};
}

std::string Representation::to_string() const {
  return m.get_str() + " = " + x.get_str() + "^2 + " + d.get_str() + "*" +
         y.get_str() + "^2 (" + (proper ? "proper" : "improper") + ")";
}

void canonicalize(std::vector<Representation>& reps) {
  for (auto& rep : reps) {
    auto [cx, cy] = rep.canonical();
    rep.x = std::move(cx);
    rep.y = std::move(cy);
  }
  std::sort(reps.begin(), reps.end(), [](const Representation& l, const Representation& r) {
    return std::tie(l.x, l.y) < std::tie(r.x, r.y);
  });
  reps.erase(std::unique(reps.begin(), reps.end(),
                         [](const Representation& l, const Representation& r) {
                           return l.x == r.x && l.y == r.y;
                         }),
             reps.end());
}

void ProblemSpec::validate() const {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (m < 2) throw std::invalid_argument("m must be >= 2");
  if (gcd(d, m) != 1) {
    throw std::invalid_argument("gcd(d, m) = " + gcd(d, m).get_str() + ", must be 1");
  }
}

}  // namespace quadrep
