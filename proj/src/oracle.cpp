#include "quadrep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace quadrep {

namespace {

std::uint64_t isqrt64(std::uint64_t n) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

}  // namespace

Nat brute_y_max(const Nat& d, const Nat& m) {
  if (d < 1 || m < 1) throw std::invalid_argument("brute force needs d, m >= 1");
  return isqrt(m / d);
}

std::vector<Representation> brute_solutions_range(const Nat& d, const Nat& m,
                                                  const Nat& y_begin, const Nat& y_end) {
  const Nat y_stop = std::min(Nat(y_end), Nat(brute_y_max(d, m) + 1));
  std::vector<Representation> out;
  if (m < (Nat(1) << 62) && d < (Nat(1) << 31)) {
    const std::uint64_t mm = m.get_ui();
    const std::uint64_t dd = d.get_ui();
    for (std::uint64_t y = y_begin.get_ui(); y < y_stop.get_ui(); ++y) {
      const std::uint64_t rest = mm - dd * y * y;
      const std::uint64_t x = isqrt64(rest);
      if (x * x == rest) out.push_back(Representation::make(Nat(x), Nat(y), d, m));
    }
  } else {
    for (Nat y = y_begin; y < y_stop; ++y) {
      if (auto x = perfect_square(m - d * y * y)) {
        out.push_back(Representation::make(*x, y, d, m));
      }
    }
  }
  return out;
}

std::vector<Representation> brute_solutions(const Nat& d, const Nat& m) {
  auto out = brute_solutions_range(d, m, 0, brute_y_max(d, m) + 1);
  canonicalize(out);
  return out;
}

std::vector<Representation> brute_proper(const Nat& d, const Nat& m) {
  auto all = brute_solutions(d, m);
  std::erase_if(all, [](const Representation& r) { return !r.proper; });
  return all;
}

}  // namespace quadrep
