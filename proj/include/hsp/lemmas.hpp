#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsp/combinatorics.hpp"
#include "hsp/frame.hpp"
#include "hsp/measurement.hpp"

namespace hsp {

// One named check. Equalities report slack = |lhs - rhs|; inequalities
// report slack = rhs - lhs. status is "pass", "fail" or "hypothesis-not-met".
struct LemmaResult {
  std::string lemma;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
  std::string status;
  std::string detail;
  bool pass() const { return status != "fail"; }
};

nlohmann::json to_json(const std::vector<LemmaResult>& results);

// E_g[X(rho,b,g)^2] and the homogeneous-component double sum
// 4^-k sum_{I1,I2 nonempty} sum_tau (chi_tau(h)/d_tau) ||Pi_tau (b (x) b)||^2.
struct SecondMoment {
  double lhs = 0;
  double rhs = 0;
};
SecondMoment second_moment_check(const HiddenInvolution& s, const RhoTuple& rho, const Eigen::VectorXcd& b);

struct LemmaSuiteOptions {
  unsigned k = 1;
  Rational epsilon = Rational(1, 5);
  std::vector<std::uint64_t> seeds{1};  // frame seeds for the averaged lemmas
  FrameKind kind = FrameKind::basis;
  unsigned random_vectors = 20;          // per tuple, for chioverd and proj-hom
  std::size_t max_tuple_dimension = 16;  // tuples checked vector-by-vector
  unsigned states = 1;                   // t in the sqrt(t delta2) bound
  std::uint64_t vector_seed = 1;
};

// chioverd, proj-hom, mubbound, delta1, Xtotvar, avg-distance, sqrt-bound.
std::vector<LemmaResult> lemma_suite(const HiddenInvolution& s, const LemmaSuiteOptions& options);

// likemub, projection-length and expected-multiplicity as exact averages.
std::vector<LemmaResult> facts_suite(const IrrepList& irreps, unsigned random_vectors, std::uint64_t seed);

}  // namespace hsp
