#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "hsp/coset.hpp"
#include "hsp/fourier.hpp"
#include "hsp/group.hpp"
#include "hsp/group_spec.hpp"
#include "hsp/irrep.hpp"

using namespace hsp;

TEST_CASE("QFT is unitary") {
  for (const char* spec : {"s3", "dihedral:4", "cyclic:6", "wreath:3", "psl2:5"}) {
    CAPTURE(spec);
    const FiniteGroup g = parse_group_spec(spec);
    const Eigen::MatrixXcd f = qft(g, irreps_for(g));
    const auto n = static_cast<Eigen::Index>(g.order());
    CHECK((f * f.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("coset state of a hidden involution") {
  const FiniteGroup g = make_wreath_s2(3);
  const Subgroup h(g, {g.identity(), wreath_swap(g)});
  const Eigen::MatrixXcd sigma = coset_state(h);
  CHECK(sigma.trace().real() == doctest::Approx(1.0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(sigma);
  int rank = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    CHECK(eig.eigenvalues()[i] > -1e-12);
    if (eig.eigenvalues()[i] > 1e-9) ++rank;
  }
  CHECK(rank == 36);
}

TEST_CASE("Fourier blocks match the transformed coset state") {
  for (const char* spec : {"s4", "dihedral:4", "wreath:3", "psl2:5"}) {
    CAPTURE(spec);
    const FiniteGroup g = parse_group_spec(spec);
    const IrrepList irreps = irreps_for(g);
    const Subgroup h(g, {g.identity(), default_involution(g)});
    CHECK(fourier_roundtrip_error(irreps, h) < 1e-9);

    const Eigen::MatrixXcd f = qft(g, irreps);
    const Eigen::MatrixXcd transformed = f * coset_state(h) * f.adjoint();
    const BlockDensity blocks = fourier_blocks(irreps, h);
    CHECK(blocks.total_trace() == doctest::Approx(1.0));
    CHECK(blocks.min_eigenvalue() > -1e-9);
    Eigen::Index row = 0;
    for (std::size_t i = 0; i < irreps.size(); ++i) {
      const auto d2 = static_cast<Eigen::Index>(irreps[i].degree() * irreps[i].degree());
      const double weight = transformed.diagonal().segment(row, d2).real().sum();
      row += d2;
      CHECK(blocks.blocks[i].probability == doctest::Approx(weight).epsilon(1e-9));
      CHECK(blocks.blocks[i].multiplicity == irreps[i].degree());
    }
  }
}

TEST_CASE("weak Fourier probability of the trivial wreath irrep") {
  const FiniteGroup g = make_wreath_s2(3);
  const IrrepList irreps = irreps_for(g);
  const Subgroup h(g, {g.identity(), wreath_swap(g)});
  const BlockDensity blocks = fourier_blocks(irreps, h);
  CHECK(blocks.blocks[0].probability == doctest::Approx(1.0 / 36.0));
}

TEST_CASE("subgroup projector is an orthogonal projection of rank r") {
  const FiniteGroup g = make_symmetric(4);
  const Subgroup h(g, {g.identity(), parse_element(g, "(1 2)")});
  for (const auto& rho : irreps_for(g)) {
    const Eigen::MatrixXcd p = subgroup_projector(rho, h);
    CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((p - p.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(p.trace().real() == doctest::Approx(rank_r(rho, h)));
  }
}
