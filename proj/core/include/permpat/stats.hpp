#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permpat/perm.hpp"
#include "permpat/qfield.hpp"
#include "permpat/rational.hpp"

namespace permpat {

enum class TiePolicy { Error, RandomBreak };

struct RankedSample {
  Permutation perm;
  bool ties_broken = false;
};

/// Induced permutation of paired data. Ties throw TiesPresent unless the
/// policy breaks them at random (seeded).
RankedSample ranks_to_perm(std::span<const PlanePoint> sample, TiePolicy policy = TiePolicy::Error,
                           std::uint64_t seed = 0);

enum class Statistic { KendallTau, SpearmanRho, FisherLeeDelta, HoeffdingD, BkrB, BergsmaDassios };

std::string to_string(Statistic s);
/// "tau", "rho", "delta", "D", "B", "BD" (also the long names); throws InvalidArgument.
Statistic parse_statistic(std::string_view name);

/// value(pi) = <weights, P_k(pi)>; the weights may depend on n.
struct LinearForm {
  int k = 0;
  std::vector<QNum> weights;  // length k!, lexicographic order
  QNum evaluate(std::span<const std::uint64_t> counts, int n) const;
  QNum evaluate(const Permutation& pi) const;
};

LinearForm linear_form(Statistic s, int n);

Rational kendall_tau(const Permutation& pi);
Rational spearman_rho(const Permutation& pi);
Rational fisher_lee_delta(const Permutation& pi);
QNum hoeffding_D(const Permutation& pi);
QNum bkr_B(const Permutation& pi);
QNum bergsma_dassios(const Permutation& pi);
/// P1234+P1243+P2134+P2143+P3412+P3421+P4312+P4321.
Rational bergsma_dassios_densities(const Permutation& pi);
/// <alpha R^{32}_{4,4} + (1-alpha) R^{221}_{3,3}, P_5>.
QNum independence_family(const Permutation& pi, const Rational& alpha);
/// <R^{22}_{2,2}, P_4>; tends to 0 exactly for quasirandom sequences.
QNum quasirandom_score(const Permutation& pi);

/// Value of the statistic on pi, exact.
QNum statistic_value(Statistic s, const Permutation& pi);

/// Matrix element R^lambda_{i,j} (1-based) of the builtin representations as a
/// k!-vector over S_k in lexicographic order. Tables are built once and cached.
std::vector<QNum> builtin_matrix_element(int k, std::string_view lambda, int i, int j);

struct PValue {
  double p = 1.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t exceedances = 0;
};

/// (1 + #{|T(sim)| >= |observed|}) / (samples + 1) under uniform permutations.
PValue null_pvalue(Statistic s, const QNum& observed, int n, std::uint64_t samples, std::uint64_t seed,
                   unsigned threads = 1);

struct TestResult {
  std::string name;
  QNum value;
  int n = 0;
  bool ties_broken = false;
  std::optional<PValue> p_value;
};

TestResult run_test(Statistic s, std::span<const PlanePoint> sample, TiePolicy policy,
                    std::uint64_t seed, std::uint64_t null_samples = 0, unsigned threads = 1);

}  // namespace permpat
