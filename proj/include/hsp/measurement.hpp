#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hsp/frame.hpp"
#include "hsp/irrep.hpp"

namespace hsp {

// Raised when a request would exceed the simulation work caps.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hidden subgroup H = {1, h} together with everything the simulation needs:
// the complete irrep list, the distinct conjugates of h, and per irrep the
// rank r = (d + chi(h)) / 2 of rho(H).
class HiddenInvolution {
 public:
  // Throws std::invalid_argument unless h is an involution and the irreps
  // are complete.
  HiddenInvolution(IrrepList irreps, Element h);

  const FiniteGroup& group() const { return irreps_.front().group(); }
  const IrrepList& irreps() const { return irreps_; }
  Element h() const { return h_; }
  // Distinct conjugates g h g^-1; each is hit by |C(h)| elements g.
  const std::vector<Element>& conjugates() const { return conjugates_; }
  unsigned rank(std::size_t irrep) const { return ranks_[irrep]; }
  int chi_h(std::size_t irrep) const { return chi_h_[irrep]; }
  // Position of c in conjugates(); throws std::out_of_range for other elements.
  std::size_t conjugate_index(Element c) const;
  // (I + rho(c)) / 2 for the conjugate at index j, the projector rho(H^c).
  const Eigen::MatrixXcd& half_projector(std::size_t irrep, std::size_t j) const { return projectors_[irrep][j]; }

 private:
  IrrepList irreps_;
  Element h_;
  std::vector<Element> conjugates_;
  std::vector<unsigned> ranks_;
  std::vector<int> chi_h_;
  std::vector<long> conjugate_slot_;
  std::vector<std::vector<Eigen::MatrixXcd>> projectors_;
};

// An irrep tuple (rho_1, ..., rho_k), stored as indices into the irrep list.
// Tuple ids are mixed radix with the first register most significant.
using RhoTuple = std::vector<std::size_t>;
std::size_t tuple_count(const HiddenInvolution& s, unsigned k);
RhoTuple decode_tuple(const HiddenInvolution& s, unsigned k, std::size_t id);
std::size_t tuple_dimension(const HiddenInvolution& s, const RhoTuple& rho);
std::string tuple_label(const HiddenInvolution& s, const RhoTuple& rho);

// One frame per irrep tuple, seeded by mix_seed(seed, tuple id).
struct KMeasurement {
  unsigned k = 1;
  std::uint64_t seed = 0;
  FrameKind kind = FrameKind::basis;
  std::vector<Frame> frames;

  static KMeasurement random(const HiddenInvolution& s, unsigned k, std::uint64_t seed, FrameKind kind);
};

// Work estimate |C(h)| * (sum_rho d_rho^3)^k for the exact simulation.
double simulation_work(const HiddenInvolution& s, unsigned k);
inline constexpr double kSimulationWorkCap = 1e8;
// Throws ResourceCapError naming the largest tuple dimension.
void check_simulation_cap(const HiddenInvolution& s, unsigned k);

// M_H(rho) = prod 2 d_i r_i / |G|.
double irrep_probability(const HiddenInvolution& s, const RhoTuple& rho);
// P(rho) = prod d_i^2 / |G|.
double plancherel_probability(const HiddenInvolution& s, const RhoTuple& rho);

// <b| rho((H^c)^k) |b> with rho((H^c)^k) = kron_i (I + rho_i(c)) / 2.
double projector_form(const HiddenInvolution& s, const RhoTuple& rho, const Eigen::VectorXcd& b, Element conjugate);

// a_b <b|rho((H^c)^k)|b> / r_rho(H^k), or 0 when r = 0. With no conjugate the
// hidden subgroup is trivial and the value is a_b / d_rho.
double conditional_prob(const HiddenInvolution& s, const RhoTuple& rho, const Eigen::VectorXcd& b, double a_b,
                        std::optional<Element> conjugate);

// <b|rho((H^c)^k)|b> - 2^-k. Throws std::runtime_error if the quadratic form
// has an imaginary part above 1e-8.
double x_function(const HiddenInvolution& s, const RhoTuple& rho, const Eigen::VectorXcd& b, Element conjugate);

// Outcome law over (rho tuple, row bucket, frame vector). The row index is
// uniform and independent of b, so each tuple keeps one bucket of mass 1.
struct MeasurementDistribution {
  std::vector<std::string> labels;               // per tuple
  std::vector<std::vector<double>> probability;  // [tuple][frame vector]
  double total() const;
  double min_entry() const;
  std::string to_csv() const;  // "rho_label,b_index,probability"
};

MeasurementDistribution full_distribution(const HiddenInvolution& s, const KMeasurement& m,
                                          std::optional<Element> conjugate);

struct TvReport {
  std::vector<Element> conjugates;
  std::vector<double> l1;  // l1 distance to the trivial-subgroup law, per conjugate
  double average_l1 = 0;   // E_g, uniform over G
  double max_l1 = 0;
  double average_tv() const { return average_l1 / 2; }
  double max_tv() const { return max_l1 / 2; }
};

TvReport avg_tv_over_conjugates(const HiddenInvolution& s, const KMeasurement& m);

// || E_g[sigma_{H^g}^{(x)t}] - sigma_{1}^{(x)t} ||_tr evaluated per Fourier
// block: (1/|G|^t) sum_rho d_rho || E_c[kron (I + rho_i(c))] - I ||_tr.
// Caps: t <= 3 for |G| <= 100, t <= 2 for |G| <= 600, t = 1 otherwise.
double mixed_conjugate_trace_distance(const HiddenInvolution& s, unsigned t);

}  // namespace hsp
