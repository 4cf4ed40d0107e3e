#include "hsp/frame.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/QR>

namespace hsp {

FrameKind parse_frame_kind(const std::string& text) {
  if (text == "basis") return FrameKind::basis;
  if (text == "fused") return FrameKind::fused;
  throw std::invalid_argument("unknown frame kind '" + text + "' (expected basis or fused)");
}

std::string to_string(FrameKind kind) { return kind == FrameKind::basis ? "basis" : "fused"; }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {
Eigen::MatrixXcd ginibre(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd z(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < z.cols(); ++j)
    for (Eigen::Index i = 0; i < z.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = {re, im};
    }
  return z;
}
}  // namespace

Eigen::MatrixXcd haar_unitary(std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Eigen::MatrixXcd z = ginibre(d, d, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  // Fix the phases so the distribution is exactly Haar.
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const std::complex<double> diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0) q.col(j) *= diag / mag;
  }
  return q;
}

Eigen::VectorXcd random_unit_vector(std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::VectorXcd v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

Frame random_frame(std::size_t d, std::uint64_t seed, FrameKind kind) {
  if (d == 0) throw std::invalid_argument("frame dimension must be positive");
  Frame f;
  f.dimension = d;
  if (kind == FrameKind::basis) {
    f.vectors = haar_unitary(d, seed);
    f.weights.assign(d, 1.0);
  } else {
    f.vectors.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(2 * d));
    f.vectors.leftCols(static_cast<Eigen::Index>(d)) = haar_unitary(d, mix_seed(seed, 0));
    f.vectors.rightCols(static_cast<Eigen::Index>(d)) = haar_unitary(d, mix_seed(seed, 1));
    f.weights.assign(2 * d, 0.5);
  }
  return f;
}

double completeness_error(const Frame& f) {
  const auto d = static_cast<Eigen::Index>(f.dimension);
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index b = 0; b < f.vectors.cols(); ++b)
    s += f.weights[static_cast<std::size_t>(b)] * f.vectors.col(b) * f.vectors.col(b).adjoint();
  return (s - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
}

}  // namespace hsp
