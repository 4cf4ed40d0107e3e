#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hsp/irrep.hpp"

namespace hsp {

// sigma_H = (1/|G|) sum_g |gH><gH| in the element basis:
// entry [x][y] = [x^-1 y in H] / |G|. |G| <= 2000.
Eigen::MatrixXcd coset_state(const Subgroup& h);

// Fourier form of sigma_H for one irrep: each of the d_rho row copies holds
// the column-space block (|H|/|G|) conj(rho(H)).
struct FourierBlock {
  Irrep irrep;
  Eigen::MatrixXcd block;
  std::size_t multiplicity = 0;  // d_rho
  double probability = 0;        // d_rho |H| r_rho(H) / |G|
};

struct BlockDensity {
  std::vector<FourierBlock> blocks;
  double total_trace() const;
  // Largest deviation from Hermitian or most negative eigenvalue over blocks.
  double hermitian_error() const;
  double min_eigenvalue() const;
};

BlockDensity fourier_blocks(const IrrepList& irreps, const Subgroup& h);

// The block-diagonal matrix in the row order of qft().
Eigen::MatrixXcd assemble(const BlockDensity& density);

// max |F sigma_H F^dagger - assemble(fourier_blocks)|.
double fourier_roundtrip_error(const IrrepList& irreps, const Subgroup& h);

}  // namespace hsp
