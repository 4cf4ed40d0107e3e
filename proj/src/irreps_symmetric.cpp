#include <cmath>
#include <map>
#include <stdexcept>

#include "hsp/irrep.hpp"

namespace hsp {

namespace {

struct Tableau {
  std::vector<int> row, col;  // position of entry m (0-based)
};

std::vector<Tableau> standard_tableaux(const std::vector<unsigned>& lambda) {
  const unsigned n = [&] {
    unsigned s = 0;
    for (unsigned p : lambda) s += p;
    return s;
  }();
  std::vector<Tableau> out;
  std::vector<unsigned> filled(lambda.size(), 0);
  Tableau current{std::vector<int>(n), std::vector<int>(n)};
  auto rec = [&](auto&& self, unsigned m) -> void {
    if (m == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      if (filled[r] == lambda[r] || (r > 0 && filled[r - 1] <= filled[r])) continue;
      current.row[m] = static_cast<int>(r);
      current.col[m] = static_cast<int>(filled[r]);
      ++filled[r];
      self(self, m + 1);
      --filled[r];
    }
  };
  rec(rec, 0);
  return out;
}

// Matrix of the adjacent transposition (i, i+1) in Young's orthogonal form.
Eigen::MatrixXd adjacent_transposition(const std::vector<Tableau>& tableaux,
                                       const std::map<std::vector<int>, std::size_t>& index, unsigned i) {
  const auto d = static_cast<Eigen::Index>(tableaux.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index t = 0; t < d; ++t) {
    const auto& tab = tableaux[static_cast<std::size_t>(t)];
    const int axial = (tab.col[i + 1] - tab.row[i + 1]) - (tab.col[i] - tab.row[i]);
    const double r = axial;
    m(t, t) = 1.0 / r;
    if (std::abs(axial) == 1) continue;
    Tableau swapped = tab;
    std::swap(swapped.row[i], swapped.row[i + 1]);
    std::swap(swapped.col[i], swapped.col[i + 1]);
    std::vector<int> key = swapped.row;
    key.insert(key.end(), swapped.col.begin(), swapped.col.end());
    const auto s = static_cast<Eigen::Index>(index.at(key));
    m(s, t) = std::sqrt(1.0 - 1.0 / (r * r));
  }
  return m;
}

}  // namespace

IrrepList irreps_symmetric(const FiniteGroup& sn) {
  const auto kind = sn.kind();
  if (kind.family != GroupFamily::symmetric) throw std::invalid_argument(sn.name() + " is not a symmetric group");
  const unsigned n = kind.param;
  if (n < 1 || n > 5) throw std::invalid_argument("irreps_symmetric supports 1 <= n <= 5, got " + std::to_string(n));

  std::vector<Element> adjacent;
  for (unsigned i = 0; i + 1 < n; ++i) {
    Permutation p = identity_permutation(n);
    std::swap(p[i], p[i + 1]);
    adjacent.push_back(symmetric_element(sn, p));
  }

  IrrepList irreps;
  for (const auto& lambda : partitions(n)) {
    const auto tableaux = standard_tableaux(lambda);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t t = 0; t < tableaux.size(); ++t) {
      std::vector<int> key = tableaux[t].row;
      key.insert(key.end(), tableaux[t].col.begin(), tableaux[t].col.end());
      index.emplace(std::move(key), t);
    }
    std::vector<Eigen::MatrixXd> gens;
    for (unsigned i = 0; i + 1 < n; ++i) gens.push_back(adjacent_transposition(tableaux, index, i));

    const auto d = static_cast<Eigen::Index>(tableaux.size());
    std::vector<Eigen::MatrixXd> real(sn.order());
    std::vector<bool> done(sn.order(), false);
    real[sn.identity()] = Eigen::MatrixXd::Identity(d, d);
    done[sn.identity()] = true;
    std::vector<Element> queue{sn.identity()};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Element g = queue[q];
      for (std::size_t i = 0; i < adjacent.size(); ++i) {
        const Element y = sn.compose(adjacent[i], g);
        if (done[y]) continue;
        real[y] = gens[i] * real[g];
        done[y] = true;
        queue.push_back(y);
      }
    }
    std::vector<Eigen::MatrixXcd> mats(sn.order());
    for (Element g = 0; g < sn.order(); ++g) mats[g] = real[g].cast<Complex>();
    irreps.emplace_back(sn, partition_label(lambda), std::move(mats));
  }
  return irreps;
}

IrrepList irreps_symmetric(unsigned n) { return irreps_symmetric(make_symmetric(n)); }

}  // namespace hsp
