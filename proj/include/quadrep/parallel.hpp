#pragma once

// OpenMP kernels. Each has a serial counterpart with identical output that
// serves as the reference in tests and benchmarks.

#include <span>
#include <vector>

#include "quadrep/cornacchia.hpp"
#include "quadrep/representation.hpp"

namespace quadrep {

// solve_proper_report with the per-root runs distributed over threads.
ProperReport solve_proper_report_parallel(const ProblemSpec& spec, const Factorization& f);

// brute_solutions with the y range split into chunks.
std::vector<Representation> brute_solutions_parallel(const Nat& d, const Nat& m);

// Factorize + solve_proper for each problem. Results in input order.
std::vector<std::vector<Representation>> solve_proper_batch(std::span<const ProblemSpec> problems);
std::vector<std::vector<Representation>> solve_proper_batch_serial(
    std::span<const ProblemSpec> problems);

// brute_proper for each problem. Results in input order.
std::vector<std::vector<Representation>> brute_proper_batch(std::span<const ProblemSpec> problems);
std::vector<std::vector<Representation>> brute_proper_batch_serial(
    std::span<const ProblemSpec> problems);

// Number of threads OpenMP will use (1 without OpenMP).
int worker_threads();

}  // namespace quadrep
