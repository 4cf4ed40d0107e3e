#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hsp/group.hpp"

namespace hsp {

using Complex = std::complex<double>;

// Unitary representation of a finite group given by one matrix per element.
// Copies are cheap and share the matrices.
class Irrep {
 public:
  Irrep(FiniteGroup group, std::string label, std::vector<Eigen::MatrixXcd> matrices);

  const FiniteGroup& group() const { return data_->group; }
  const std::string& label() const { return data_->label; }
  std::size_t degree() const { return data_->degree; }
  const Eigen::MatrixXcd& matrix(Element g) const { return data_->matrices[g]; }
  Complex character(Element g) const { return data_->characters[g]; }
  const std::vector<Complex>& characters() const { return data_->characters; }

 private:
  struct Data {
    FiniteGroup group;
    std::string label;
    std::size_t degree;
    std::vector<Eigen::MatrixXcd> matrices;
    std::vector<Complex> characters;
  };
  std::shared_ptr<const Data> data_;
};

using IrrepList = std::vector<Irrep>;

// Largest entrywise deviation from rho(x) rho(y) = rho(xy) over all pairs.
double homomorphism_error(const Irrep& rho);
// Largest entrywise deviation of rho(g) rho(g)^dagger from the identity.
double unitarity_error(const Irrep& rho);
// (1/|G|) sum_g |chi(g)|^2; equals 1 exactly for irreducible representations.
double character_norm(const Irrep& rho);
std::uint64_t sum_squared_degrees(const IrrepList& irreps);
std::uint64_t sum_degrees(const IrrepList& irreps);

// Entrywise complex conjugate in the constructed basis, labelled "<label>*"
// unless the representation is real.
Irrep conjugate_irrep(const Irrep& rho);

// Integer partitions of n in descending lexicographic order, e.g. n = 3:
// [3], [2,1], [1,1,1].
std::vector<std::vector<unsigned>> partitions(unsigned n);
std::string partition_label(const std::vector<unsigned>& lambda);

// Young's orthogonal form, indexed like partitions(n). 1 <= n <= 5.
IrrepList irreps_symmetric(const FiniteGroup& sn);
IrrepList irreps_symmetric(unsigned n);

// Irreps of S_n wr S_2 (2 <= n <= 4) in the order theta_i, theta'_i
// (i over partitions of n), then kappa_{i,j} for i < j in lexicographic order.
IrrepList irreps_wreath(const FiniteGroup& wreath);

// Characters g^a -> exp(2 pi i j a / n) for j = 0..n-1.
IrrepList irreps_cyclic(const FiniteGroup& zn);

// Tensor products of the base group's irreps, first coordinate slowest.
IrrepList irreps_direct_power(const FiniteGroup& power);

// Decomposition of the regular representation (|G| <= 2000). A random
// Hermitian element of the commutant is diagonalised; its eigenspaces are
// irreducible subrepresentations. Ambiguous eigenvalue gaps (< tol) make the
// routine retry with the next seed up to 5 times, then throw
// std::runtime_error("degenerate split; retry with new random seed").
// The result is in canonical order with labels "1a", "1b", "3a", ...
IrrepList irreps_generic(const FiniteGroup& g, double tol = 1e-6, std::uint64_t seed = 1);

// Picks the analytic construction when one exists, else irreps_generic.
IrrepList irreps_for(const FiniteGroup& g);

// Sorts by degree, then by the character vector over classes (ordered by size,
// then representative), comparing real parts before imaginary parts.
void sort_canonical(IrrepList& irreps);

}  // namespace hsp
