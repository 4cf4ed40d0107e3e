#include "hsp/irrep.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsp {

Irrep::Irrep(FiniteGroup group, std::string label, std::vector<Eigen::MatrixXcd> matrices) {
  if (matrices.size() != group.order()) throw std::invalid_argument("irrep needs one matrix per group element");
  const auto degree = static_cast<std::size_t>(matrices.front().rows());
  std::vector<Complex> characters(matrices.size());
  for (std::size_t g = 0; g < matrices.size(); ++g) {
    if (static_cast<std::size_t>(matrices[g].rows()) != degree || matrices[g].cols() != matrices[g].rows())
      throw std::invalid_argument("irrep matrices must be square of equal size");
    characters[g] = matrices[g].trace();
  }
  data_ = std::make_shared<const Data>(
      Data{std::move(group), std::move(label), degree, std::move(matrices), std::move(characters)});
}

double homomorphism_error(const Irrep& rho) {
  const auto& g = rho.group();
  double worst = 0;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      const double err = (rho.matrix(x) * rho.matrix(y) - rho.matrix(g.compose(x, y))).cwiseAbs().maxCoeff();
      worst = std::max(worst, err);
    }
  return worst;
}

double unitarity_error(const Irrep& rho) {
  const auto d = static_cast<Eigen::Index>(rho.degree());
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  double worst = 0;
  for (Element x = 0; x < rho.group().order(); ++x)
    worst = std::max(worst, (rho.matrix(x) * rho.matrix(x).adjoint() - id).cwiseAbs().maxCoeff());
  return worst;
}

double character_norm(const Irrep& rho) {
  double total = 0;
  for (const auto& c : rho.characters()) total += std::norm(c);
  return total / static_cast<double>(rho.group().order());
}

std::uint64_t sum_squared_degrees(const IrrepList& irreps) {
  std::uint64_t s = 0;
  for (const auto& r : irreps) s += r.degree() * r.degree();
  return s;
}

std::uint64_t sum_degrees(const IrrepList& irreps) {
  std::uint64_t s = 0;
  for (const auto& r : irreps) s += r.degree();
  return s;
}

Irrep conjugate_irrep(const Irrep& rho) {
  std::vector<Eigen::MatrixXcd> mats;
  mats.reserve(rho.group().order());
  bool real = true;
  for (Element x = 0; x < rho.group().order(); ++x) {
    mats.push_back(rho.matrix(x).conjugate());
    if (rho.matrix(x).imag().cwiseAbs().maxCoeff() > 1e-12) real = false;
  }
  return Irrep(rho.group(), real ? rho.label() : rho.label() + "*", std::move(mats));
}

std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::string partition_label(const std::vector<unsigned>& lambda) {
  std::string s = "[";
  for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
  return s + "]";
}

void sort_canonical(IrrepList& irreps) {
  if (irreps.empty()) return;
  const auto classes = conjugacy_classes(irreps.front().group());
  constexpr double tie = 1e-7;
  auto less = [&](const Irrep& a, const Irrep& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (const auto& c : classes) {
      const Complex x = a.character(c.representative), y = b.character(c.representative);
      if (std::abs(x.real() - y.real()) > tie) return x.real() < y.real();
      if (std::abs(x.imag() - y.imag()) > tie) return x.imag() < y.imag();
    }
    return false;
  };
  std::stable_sort(irreps.begin(), irreps.end(), less);
}

IrrepList irreps_for(const FiniteGroup& g) {
  const auto kind = g.kind();
  switch (kind.family) {
    case GroupFamily::symmetric:
      if (kind.param <= 5) return irreps_symmetric(g);
      break;
    case GroupFamily::wreath:
      if (kind.param <= 4) return irreps_wreath(g);
      break;
    case GroupFamily::cyclic:
      return irreps_cyclic(g);
    case GroupFamily::direct_power:
      return irreps_direct_power(g);
    default:
      break;
  }
  return irreps_generic(g);
}

}  // namespace hsp
