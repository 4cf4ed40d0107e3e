#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hsp {

enum class FrameKind { basis, fused };

FrameKind parse_frame_kind(const std::string& text);
std::string to_string(FrameKind kind);

// Rank-one POVM {a_b |b><b|} on C^d; vectors are the columns.
struct Frame {
  std::size_t dimension = 0;
  std::vector<double> weights;
  Eigen::MatrixXcd vectors;
  std::size_t size() const { return weights.size(); }
};

// basis: one Haar-random orthonormal basis, all weights 1.
// fused: two independent Haar bases, all weights 1/2.
Frame random_frame(std::size_t d, std::uint64_t seed, FrameKind kind);

// max entrywise deviation of sum_b a_b |b><b| from the identity.
double completeness_error(const Frame& f);

// Haar-random unitary of size d.
Eigen::MatrixXcd haar_unitary(std::size_t d, std::uint64_t seed);
// Haar-random unit vector in C^d.
Eigen::VectorXcd random_unit_vector(std::size_t d, std::uint64_t seed);

// SplitMix64 step; used to derive independent seeds from (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace hsp
