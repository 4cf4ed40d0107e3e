#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "hsp/coset.hpp"
#include "hsp/frame.hpp"
#include "hsp/group.hpp"
#include "hsp/group_spec.hpp"
#include "hsp/measurement.hpp"
#include "hsp/parallel.hpp"

using namespace hsp;

namespace {

double trace_norm(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m);
  return eig.eigenvalues().cwiseAbs().sum();
}

// Position-basis oracle: || E_g sigma_{H^g}^{(x)t} - sigma_1^{(x)t} ||_tr.
double brute_mixed_distance(const FiniteGroup& g, Element h, unsigned t) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::Index dim = 1;
  for (unsigned i = 0; i < t; ++i) dim *= n;
  Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(dim, dim);
  for (Element x = 0; x < g.order(); ++x) {
    const Element c = g.conjugate(x, h);
    const Eigen::MatrixXcd sigma = coset_state(Subgroup(g, {g.identity(), c}));
    Eigen::MatrixXcd power = sigma;
    for (unsigned i = 1; i < t; ++i) power = Eigen::kroneckerProduct(power, sigma).eval();
    mixed += power / static_cast<double>(g.order());
  }
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
  return trace_norm(mixed - identity);
}

}  // namespace

TEST_CASE("frames resolve the identity") {
  for (FrameKind kind : {FrameKind::basis, FrameKind::fused})
    for (std::size_t d : {1u, 2u, 5u, 9u}) {
      const Frame f = random_frame(d, 42 + d, kind);
      CHECK(completeness_error(f) < 1e-10);
    }
  CHECK_THROWS(parse_frame_kind("spiral"));
}

TEST_CASE("measurement distribution is a normalized law") {
  const FiniteGroup g = make_wreath_s2(3);
  const Element h = wreath_swap(g);
  const HiddenInvolution s(irreps_for(g), h);
  for (unsigned k : {1u, 2u}) {
    const KMeasurement m = KMeasurement::random(s, k, 3, FrameKind::basis);
    for (std::optional<Element> c : {std::optional<Element>(h), std::optional<Element>()}) {
      const MeasurementDistribution dist = full_distribution(s, m, c);
      CHECK(dist.total() == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(dist.min_entry() > -1e-12);
      for (std::size_t i = 0; i < dist.probability.size(); ++i) {
        double row = 0;
        for (double p : dist.probability[i]) row += p;
        const RhoTuple rho = decode_tuple(s, k, i);
        CHECK(row == doctest::Approx(c ? irrep_probability(s, rho) : plancherel_probability(s, rho)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("l1 distances agree with the explicit distributions") {
  const FiniteGroup g = make_symmetric(4);
  const HiddenInvolution s(irreps_for(g), parse_element(g, "(1 2)"));
  const KMeasurement m = KMeasurement::random(s, 1, 9, FrameKind::fused);
  const TvReport tv = avg_tv_over_conjugates(s, m);
  const MeasurementDistribution trivial = full_distribution(s, m, std::nullopt);
  REQUIRE(tv.conjugates.size() == 6);
  double avg = 0;
  for (std::size_t j = 0; j < tv.conjugates.size(); ++j) {
    const MeasurementDistribution hidden = full_distribution(s, m, tv.conjugates[j]);
    double l1 = 0;
    for (std::size_t i = 0; i < hidden.probability.size(); ++i)
      for (std::size_t b = 0; b < hidden.probability[i].size(); ++b)
        l1 += std::abs(hidden.probability[i][b] - trivial.probability[i][b]);
    CHECK(tv.l1[j] == doctest::Approx(l1).epsilon(1e-10));
    avg += l1 / 6;
  }
  CHECK(tv.average_l1 == doctest::Approx(avg).epsilon(1e-10));
}

TEST_CASE("simulation is identical across thread counts") {
  const FiniteGroup g = make_wreath_s2(3);
  const HiddenInvolution s(irreps_for(g), wreath_swap(g));
  const KMeasurement m = KMeasurement::random(s, 2, 11, FrameKind::basis);
  set_thread_count(1);
  const TvReport a = avg_tv_over_conjugates(s, m);
  set_thread_count(5);
  const TvReport b = avg_tv_over_conjugates(s, m);
  set_thread_count(0);
  CHECK(a.l1 == b.l1);
  CHECK(a.average_l1 == b.average_l1);
}

TEST_CASE("Fourier-side trace distance matches the position-basis oracle") {
  const FiniteGroup d4 = make_dihedral(4);
  const Element h = default_involution(d4);
  const HiddenInvolution s(irreps_for(d4), h);
  for (unsigned t : {1u, 2u}) CHECK(mixed_conjugate_trace_distance(s, t) == doctest::Approx(brute_mixed_distance(d4, h, t)).epsilon(1e-9));
  CHECK(mixed_conjugate_trace_distance(s, 1) == doctest::Approx(0.5));
  const FiniteGroup s3 = make_symmetric(3);
  const HiddenInvolution s3h(irreps_for(s3), 1);
  CHECK(mixed_conjugate_trace_distance(s3h, 2) == doctest::Approx(brute_mixed_distance(s3, 1, 2)).epsilon(1e-9));
}

TEST_CASE("work cap rejects oversized simulations") {
  const FiniteGroup g = make_psl2(13);
  const HiddenInvolution s(irreps_for(g), default_involution(g));
  CHECK_THROWS_AS(check_simulation_cap(s, 4), ResourceCapError);
  CHECK_NOTHROW(check_simulation_cap(s, 1));
}
