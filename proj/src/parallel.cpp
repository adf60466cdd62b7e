#include "quadrep/parallel.hpp"

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "quadrep/oracle.hpp"

namespace quadrep {

namespace {

// Exceptions may not leave an OpenMP region; keep the first and rethrow.
class FirstError {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

std::vector<Representation> solve_one(const ProblemSpec& spec) {
  return solve_proper(spec, factorize(spec.m));
}

}  // namespace

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

ProperReport solve_proper_report_parallel(const ProblemSpec& spec, const Factorization& f) {
  spec.validate();
  ProperReport report;
  report.roots = RootSet{spec.m, -Int(spec.d), {}};
  if (spec.d >= 2 && spec.m <= spec.d) return report;

  report.roots = sqrt_minus_d_mod_m(spec.d, spec.m, f);
  const auto& roots = report.roots.roots;
  const long n = static_cast<long>(roots.size());
  report.attempts.resize(roots.size());
  FirstError err;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    err.run([&] { report.attempts[i] = attempt_root(roots[i], spec); });
  }
  err.rethrow();
  for (const auto& a : report.attempts) {
    if (a.rep) report.solutions.push_back(*a.rep);
  }
  return report;
}

std::vector<Representation> brute_solutions_parallel(const Nat& d, const Nat& m) {
  const Nat ymax = brute_y_max(d, m);
  constexpr long kChunk = 1 << 14;
  if (!ymax.fits_slong_p() || ymax < kChunk) return brute_solutions(d, m);

  const long count = ymax.get_si() + 1;
  const long chunks = (count + kChunk - 1) / kChunk;
  std::vector<std::vector<Representation>> parts(static_cast<std::size_t>(chunks));
  FirstError err;
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < chunks; ++c) {
    err.run([&] {
      parts[c] = brute_solutions_range(d, m, c * kChunk, std::min(count, (c + 1) * kChunk));
    });
  }
  err.rethrow();
  std::vector<Representation> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  canonicalize(out);
  return out;
}

std::vector<std::vector<Representation>> solve_proper_batch(std::span<const ProblemSpec> problems) {
  std::vector<std::vector<Representation>> out(problems.size());
  const long n = static_cast<long>(problems.size());
  FirstError err;
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i) {
    err.run([&] { out[i] = solve_one(problems[i]); });
  }
  err.rethrow();
  return out;
}

std::vector<std::vector<Representation>> solve_proper_batch_serial(
    std::span<const ProblemSpec> problems) {
  std::vector<std::vector<Representation>> out;
  out.reserve(problems.size());
  for (const auto& p : problems) out.push_back(solve_one(p));
  return out;
}

std::vector<std::vector<Representation>> brute_proper_batch(std::span<const ProblemSpec> problems) {
  std::vector<std::vector<Representation>> out(problems.size());
  const long n = static_cast<long>(problems.size());
  FirstError err;
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i) {
    err.run([&] { out[i] = brute_proper(problems[i].d, problems[i].m); });
  }
  err.rethrow();
  return out;
}

std::vector<std::vector<Representation>> brute_proper_batch_serial(
    std::span<const ProblemSpec> problems) {
  std::vector<std::vector<Representation>> out;
  out.reserve(problems.size());
  for (const auto& p : problems) out.push_back(brute_proper(p.d, p.m));
  return out;
}

}  // namespace quadrep
