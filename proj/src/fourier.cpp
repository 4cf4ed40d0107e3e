#include "hsp/fourier.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace hsp {

Eigen::MatrixXcd qft(const FiniteGroup& g, const IrrepList& irreps) {
  if (sum_squared_degrees(irreps) != g.order())
    throw std::invalid_argument("incomplete irrep list: sum of squared degrees " +
                                std::to_string(sum_squared_degrees(irreps)) + " != |G| = " + std::to_string(g.order()));
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXcd f(n, n);
  Eigen::Index row = 0;
  for (const auto& rho : irreps) {
    const auto d = static_cast<Eigen::Index>(rho.degree());
    const double scale = std::sqrt(static_cast<double>(d) / static_cast<double>(n));
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j, ++row)
        for (Element x = 0; x < g.order(); ++x) f(row, x) = scale * rho.matrix(x)(i, j);
  }
  return f;
}

Eigen::MatrixXcd subgroup_projector(const Irrep& rho, const Subgroup& h) {
  const auto d = static_cast<Eigen::Index>(rho.degree());
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
  for (Element x : h.elements()) p += rho.matrix(x);
  return p / static_cast<double>(h.order());
}

unsigned rank_r(const Irrep& rho, const Subgroup& h) {
  Complex avg = 0;
  for (Element x : h.elements()) avg += rho.character(x);
  avg /= static_cast<double>(h.order());
  const double rounded = std::round(avg.real());
  if (std::abs(avg - Complex(rounded, 0)) > 1e-6)
    throw std::runtime_error("character average over subgroup is not an integer for " + rho.label());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(subgroup_projector(rho, h), Eigen::EigenvaluesOnly);
  double rank = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
    if (eig.eigenvalues()(i) > 0.5) rank += 1;
  if (std::abs(rank - rounded) > 1e-6)
    throw std::runtime_error("projector rank disagrees with character average for " + rho.label());
  return static_cast<unsigned>(rounded);
}

std::size_t factor_degree(const FactorList& theta) {
  std::size_t d = 1;
  for (const auto& f : theta) d *= f.irrep.degree();
  return d;
}

Eigen::MatrixXcd factor_matrix(const FactorList& theta, Element g) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (const auto& f : theta) {
    const auto d = static_cast<Eigen::Index>(f.irrep.degree());
    if (f.identity)
      m = Eigen::kroneckerProduct(m, Eigen::MatrixXcd::Identity(d, d)).eval();
    else
      m = Eigen::kroneckerProduct(m, f.irrep.matrix(g)).eval();
  }
  return m;
}

Complex factor_character(const FactorList& theta, Element g) {
  Complex c = 1;
  for (const auto& f : theta) c *= f.identity ? Complex(static_cast<double>(f.irrep.degree())) : f.irrep.character(g);
  return c;
}

Eigen::VectorXcd apply_kron(const std::vector<const Eigen::MatrixXcd*>& factors, const Eigen::VectorXcd& v) {
  // Treat v as a tensor with axes (d_1, ..., d_n); apply each factor to its axis.
  Eigen::VectorXcd cur = v;
  Eigen::Index outer = 1;
  Eigen::Index total = v.size();
  for (const auto* m : factors) {
    if (m == nullptr || m->rows() != m->cols()) throw std::invalid_argument("apply_kron needs square factors");
    const Eigen::Index d = m->rows();
    const Eigen::Index inner = total / (outer * d);
    Eigen::VectorXcd next(total);
    for (Eigen::Index o = 0; o < outer; ++o) {
      // Slice (o, :, inner) viewed as a d x inner matrix.
      Eigen::Map<const Eigen::MatrixXcd, 0, Eigen::OuterStride<>> slice(cur.data() + o * d * inner, inner, d,
                                                                        Eigen::OuterStride<>(inner));
      Eigen::Map<Eigen::MatrixXcd, 0, Eigen::OuterStride<>> out(next.data() + o * d * inner, inner, d,
                                                                Eigen::OuterStride<>(inner));
      out.noalias() = slice * m->transpose();
    }
    cur.swap(next);
    outer *= d;
  }
  return cur;
}

Eigen::VectorXcd apply_factors(const FactorList& theta, Element g, const Eigen::VectorXcd& v) {
  std::vector<Eigen::MatrixXcd> identities;
  identities.reserve(theta.size());
  std::vector<const Eigen::MatrixXcd*> mats;
  for (const auto& f : theta) {
    if (f.identity) {
      const auto d = static_cast<Eigen::Index>(f.irrep.degree());
      identities.push_back(Eigen::MatrixXcd::Identity(d, d));
      mats.push_back(&identities.back());
    } else {
      mats.push_back(&f.irrep.matrix(g));
    }
  }
  return apply_kron(mats, v);
}

unsigned clebsch_gordan_multiplicity(const FactorList& theta, const Irrep& tau) {
  const auto& g = tau.group();
  Complex s = 0;
  for (Element x = 0; x < g.order(); ++x) s += factor_character(theta, x) * std::conj(tau.character(x));
  s /= static_cast<double>(g.order());
  const double rounded = std::round(s.real());
  if (std::abs(s - Complex(rounded, 0)) > 1e-6 || rounded < 0)
    throw std::runtime_error("non-integral Clebsch-Gordan multiplicity for " + tau.label());
  return static_cast<unsigned>(rounded);
}

Eigen::MatrixXcd homogeneous_projector(const FactorList& theta, const Irrep& tau) {
  const auto& g = tau.group();
  const auto d = static_cast<Eigen::Index>(factor_degree(theta));
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
  for (Element x = 0; x < g.order(); ++x) p += std::conj(tau.character(x)) * factor_matrix(theta, x);
  return p * (static_cast<double>(tau.degree()) / static_cast<double>(g.order()));
}

}  // namespace hsp
