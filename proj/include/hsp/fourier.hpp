#pragma once

#include <vector>

#include "hsp/irrep.hpp"

namespace hsp {

// Rows indexed (rho, i, j) in irrep order then row-major; column g holds
// sqrt(d_rho / |G|) rho_ij(g). Throws if sum d^2 != |G|.
Eigen::MatrixXcd qft(const FiniteGroup& g, const IrrepList& irreps);

// (1/|H|) sum_{h in H} rho(h).
Eigen::MatrixXcd subgroup_projector(const Irrep& rho, const Subgroup& h);

// r_rho(H) = (1/|H|) sum chi(h), checked against the numerical rank of the
// projector. Throws std::runtime_error if either is 1e-6 away from an integer
// or they disagree.
unsigned rank_r(const Irrep& rho, const Subgroup& h);

// One tensor factor of a representation of the diagonal G inside G^n: an
// irrep, or the identity representation of the same degree.
struct TensorFactor {
  Irrep irrep;
  bool identity = false;
};
using FactorList = std::vector<TensorFactor>;

std::size_t factor_degree(const FactorList& theta);
// theta(g) = kron of the factor matrices (identity factors give I_d).
Eigen::MatrixXcd factor_matrix(const FactorList& theta, Element g);
Complex factor_character(const FactorList& theta, Element g);
// theta(g) v without forming the Kronecker product.
Eigen::VectorXcd apply_factors(const FactorList& theta, Element g, const Eigen::VectorXcd& v);

// a^theta_tau = (1/|G|) sum_g chi_theta(g) conj chi_tau(g), rounded; throws
// std::runtime_error when the inner product is 1e-6 away from an integer.
unsigned clebsch_gordan_multiplicity(const FactorList& theta, const Irrep& tau);

// d_tau E_g[conj chi_tau(g) theta(g)].
Eigen::MatrixXcd homogeneous_projector(const FactorList& theta, const Irrep& tau);

// Kronecker product of a list of square matrices applied to v; the first
// factor is the most significant index.
Eigen::VectorXcd apply_kron(const std::vector<const Eigen::MatrixXcd*>& factors, const Eigen::VectorXcd& v);

}  // namespace hsp
