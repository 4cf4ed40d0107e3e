#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "hsp/irrep.hpp"

namespace hsp {

namespace {

Eigen::MatrixXcd swap_matrix(Eigen::Index d) {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) s(b * d + a, a * d + b) = 1;
  return s;
}

std::string inner(const std::vector<unsigned>& lambda) {
  const auto label = partition_label(lambda);
  return label.substr(1, label.size() - 2);
}

}  // namespace

IrrepList irreps_wreath(const FiniteGroup& wreath) {
  const auto kind = wreath.kind();
  if (kind.family != GroupFamily::wreath) throw std::invalid_argument(wreath.name() + " is not a wreath product");
  if (kind.param > 4) throw std::invalid_argument("irreps_wreath supports n <= 4, got " + std::to_string(kind.param));

  const FiniteGroup base = wreath_base(wreath);
  const IrrepList factors = irreps_symmetric(base);
  const auto shapes = partitions(kind.param);
  const std::size_t p = factors.size();

  struct Parts {
    Element pi, sigma;
    int b;
  };
  std::vector<Parts> parts(wreath.order());
  for (Element x = 0; x < wreath.order(); ++x) {
    const auto t = wreath_decode(wreath, x);
    parts[x] = {symmetric_element(base, t.pi), symmetric_element(base, t.sigma), t.b};
  }

  IrrepList out;
  // theta_i: t acts as SWAP; theta'_i: t acts as -SWAP.
  for (int sign : {1, -1}) {
    for (std::size_t i = 0; i < p; ++i) {
      const auto d = static_cast<Eigen::Index>(factors[i].degree());
      const Eigen::MatrixXcd swap = static_cast<double>(sign) * swap_matrix(d);
      std::vector<Eigen::MatrixXcd> mats(wreath.order());
      for (Element x = 0; x < wreath.order(); ++x) {
        Eigen::MatrixXcd m = Eigen::kroneckerProduct(factors[i].matrix(parts[x].pi), factors[i].matrix(parts[x].sigma));
        mats[x] = parts[x].b ? Eigen::MatrixXcd(m * swap) : m;
      }
      out.emplace_back(wreath, std::string(sign > 0 ? "theta" : "theta'") + "[" + inner(shapes[i]) + "]",
                       std::move(mats));
    }
  }
  // kappa_{i,j} = induced from phi_i (x) phi_j on S_n x S_n.
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      const auto block = static_cast<Eigen::Index>(factors[i].degree() * factors[j].degree());
      Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(2 * block, 2 * block);
      t.topRightCorner(block, block).setIdentity();
      t.bottomLeftCorner(block, block).setIdentity();
      std::vector<Eigen::MatrixXcd> mats(wreath.order());
      for (Element x = 0; x < wreath.order(); ++x) {
        const auto& a = parts[x];
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * block, 2 * block);
        m.topLeftCorner(block, block) = Eigen::kroneckerProduct(factors[i].matrix(a.pi), factors[j].matrix(a.sigma));
        m.bottomRightCorner(block, block) =
            Eigen::kroneckerProduct(factors[i].matrix(a.sigma), factors[j].matrix(a.pi));
        mats[x] = a.b ? Eigen::MatrixXcd(m * t) : m;
      }
      out.emplace_back(wreath, "kappa[" + inner(shapes[i]) + "|" + inner(shapes[j]) + "]", std::move(mats));
    }
  return out;
}

}  // namespace hsp
