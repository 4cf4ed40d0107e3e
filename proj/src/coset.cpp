#include "hsp/coset.hpp"

#include <algorithm>
#include <stdexcept>

#include "hsp/fourier.hpp"

namespace hsp {

Eigen::MatrixXcd coset_state(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const std::size_t n = g.order();
  if (n > 2000) throw std::invalid_argument("coset_state needs |G| <= 2000");
  Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(n, n);
  const double value = 1.0 / static_cast<double>(n);
  for (Element x = 0; x < n; ++x)
    for (Element s : h.elements()) sigma(x, g.compose(x, s)) = value;
  return sigma;
}

double BlockDensity::total_trace() const {
  double t = 0;
  for (const auto& b : blocks) t += static_cast<double>(b.multiplicity) * b.block.trace().real();
  return t;
}

double BlockDensity::hermitian_error() const {
  double e = 0;
  for (const auto& b : blocks) e = std::max(e, (b.block - b.block.adjoint()).cwiseAbs().maxCoeff());
  return e;
}

double BlockDensity::min_eigenvalue() const {
  double m = 0;
  for (const auto& b : blocks) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b.block, Eigen::EigenvaluesOnly);
    m = std::min(m, es.eigenvalues().minCoeff());
  }
  return m;
}

BlockDensity fourier_blocks(const IrrepList& irreps, const Subgroup& h) {
  const double n = static_cast<double>(h.parent().order());
  const double sub = static_cast<double>(h.order());
  BlockDensity out;
  for (const auto& rho : irreps) {
    FourierBlock b{rho, (sub / n) * subgroup_projector(rho, h).conjugate(), rho.degree(), 0};
    b.probability = static_cast<double>(rho.degree()) * sub * rank_r(rho, h) / n;
    out.blocks.push_back(std::move(b));
  }
  return out;
}

Eigen::MatrixXcd assemble(const BlockDensity& density) {
  std::size_t dim = 0;
  for (const auto& b : density.blocks) dim += b.multiplicity * b.block.rows();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  std::size_t offset = 0;
  for (const auto& b : density.blocks) {
    const auto d = b.block.rows();
    for (std::size_t i = 0; i < b.multiplicity; ++i, offset += d) m.block(offset, offset, d, d) = b.block;
  }
  return m;
}

double fourier_roundtrip_error(const IrrepList& irreps, const Subgroup& h) {
  const Eigen::MatrixXcd f = qft(h.parent(), irreps);
  const Eigen::MatrixXcd conjugated = f * coset_state(h) * f.adjoint();
  return (conjugated - assemble(fourier_blocks(irreps, h))).cwiseAbs().maxCoeff();
}

}  // namespace hsp
