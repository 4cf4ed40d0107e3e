#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "hsp/irrep.hpp"
#include "hsp/parallel.hpp"

namespace hsp {

namespace {

constexpr std::size_t kGenericLimit = 2000;
constexpr double kEigenNoise = 1e-9;

struct DegenerateSplit {};

class RegularDecomposer {
 public:
  RegularDecomposer(const FiniteGroup& g, double tol, std::uint64_t seed)
      : g_(g), n_(static_cast<Eigen::Index>(g.order())), tol_(tol), rng_(seed), classes_(conjugacy_classes(g)) {}

  // Invariant irreducible subspaces of the left regular representation,
  // one orthonormal basis per irreducible block found.
  std::vector<Eigen::MatrixXcd> run() {
    std::vector<Eigen::MatrixXcd> blocks;
    split(Eigen::MatrixXcd(), 0, blocks);
    return blocks;
  }

  // chi(g) for each class representative of the subrepresentation on span(u).
  std::vector<Complex> class_characters(const Eigen::MatrixXcd& u) const {
    std::vector<Complex> chi;
    for (const auto& c : classes_) chi.push_back(trace_on(u, c.representative));
    return chi;
  }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }

  // U^dagger L(x) U with (L(x) U)[y] = U[x^{-1} y].
  Eigen::MatrixXcd restrict(const Eigen::MatrixXcd& u, Element x) const {
    Eigen::MatrixXcd moved(u.rows(), u.cols());
    const Element xi = g_.inverse(x);
    for (Eigen::Index y = 0; y < n_; ++y) moved.row(y) = u.row(g_.compose(xi, static_cast<Element>(y)));
    return u.adjoint() * moved;
  }

 private:
  Complex trace_on(const Eigen::MatrixXcd& u, Element x) const {
    const Element xi = g_.inverse(x);
    Complex t = 0;
    for (Eigen::Index y = 0; y < n_; ++y) {
      const auto moved = u.row(g_.compose(xi, static_cast<Element>(y)));
      for (Eigen::Index i = 0; i < u.cols(); ++i) t += std::conj(u(y, i)) * moved(i);
    }
    return t;
  }

  double norm_of(const std::vector<Complex>& chi) const {
    double s = 0;
    for (std::size_t c = 0; c < classes_.size(); ++c) s += static_cast<double>(classes_[c].size()) * std::norm(chi[c]);
    return s / static_cast<double>(n_);
  }

  // Hermitian commutant element A[a][b] = f(a^{-1} b) with f(z^{-1}) = conj f(z).
  Eigen::MatrixXcd random_commutant() {
    std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(static_cast<double>(n_)));
    std::vector<Complex> f(static_cast<std::size_t>(n_));
    std::vector<bool> set(f.size(), false);
    for (Element z = 0; z < g_.order(); ++z) {
      if (set[z]) continue;
      const Element zi = g_.inverse(z);
      if (zi == z) {
        f[z] = normal(rng_);
      } else {
        const double re = normal(rng_), im = normal(rng_);
        f[z] = {re, im};
        f[zi] = {re, -im};
        set[zi] = true;
      }
      set[z] = true;
    }
    Eigen::MatrixXcd a(n_, n_);
    for (Eigen::Index x = 0; x < n_; ++x) {
      const Element xi = g_.inverse(static_cast<Element>(x));
      for (Eigen::Index y = 0; y < n_; ++y) a(x, y) = f[g_.compose(xi, static_cast<Element>(y))];
    }
    return a;
  }

  // u empty means the whole space.
  void split(const Eigen::MatrixXcd& u, int depth, std::vector<Eigen::MatrixXcd>& blocks) {
    if (depth > 6) throw std::runtime_error("regular representation failed to split");
    const Eigen::MatrixXcd a = random_commutant();
    const Eigen::MatrixXcd b = u.size() == 0 ? a : Eigen::MatrixXcd(u.adjoint() * a * u);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(b);
    if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    const auto& w = eig.eigenvalues();
    const Eigen::Index m = w.size();
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= m; ++i) {
      if (i < m) {
        const double gap = w(i) - w(i - 1);
        if (gap < kEigenNoise) continue;
        if (gap < tol_) throw DegenerateSplit{};
      }
      Eigen::MatrixXcd cluster = eig.eigenvectors().middleCols(start, i - start);
      if (u.size() != 0) cluster = u * cluster;
      const double norm = norm_of(class_characters(cluster));
      if (std::abs(norm - 1) < 1e-6) {
        blocks.push_back(std::move(cluster));
      } else if (std::abs(norm - std::round(norm)) < 1e-6) {
        split(cluster, depth + 1, blocks);
      } else {
        throw std::runtime_error("non-integral character norm while splitting regular representation");
      }
      start = i;
    }
  }

  const FiniteGroup& g_;
  Eigen::Index n_;
  double tol_;
  std::mt19937_64 rng_;
  std::vector<ConjugacyClass> classes_;
};

bool same_character(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-6) return false;
  return true;
}

std::string atlas_suffix(std::size_t index) {
  std::string s(1, static_cast<char>('a' + index % 26));
  if (index >= 26) s += std::to_string(index / 26);
  return s;
}

}  // namespace

IrrepList irreps_generic(const FiniteGroup& g, double tol, std::uint64_t seed) {
  if (g.order() > kGenericLimit)
    throw std::length_error("irreps_generic supports |G| <= 2000, got " + std::to_string(g.order()));
  for (int attempt = 0; attempt < 5; ++attempt) {
    RegularDecomposer dec(g, tol, seed + static_cast<std::uint64_t>(attempt));
    std::vector<Eigen::MatrixXcd> blocks;
    try {
      blocks = dec.run();
    } catch (const DegenerateSplit&) {
      continue;
    }
    // One representative block per character; each type must occur d times.
    std::vector<std::vector<Complex>> chars;
    std::vector<Eigen::MatrixXcd> reps;
    std::vector<std::size_t> copies;
    for (auto& blk : blocks) {
      auto chi = dec.class_characters(blk);
      std::size_t t = 0;
      while (t < chars.size() && !same_character(chars[t], chi)) ++t;
      if (t == chars.size()) {
        chars.push_back(std::move(chi));
        reps.push_back(std::move(blk));
        copies.push_back(0);
      }
      ++copies[t];
    }
    std::size_t total = 0;
    for (std::size_t t = 0; t < reps.size(); ++t) {
      const auto d = static_cast<std::size_t>(reps[t].cols());
      if (copies[t] != d) throw std::runtime_error("irrep multiplicity in regular representation differs from degree");
      total += d * d;
    }
    if (total != g.order()) throw std::runtime_error("irreducible blocks do not exhaust the regular representation");

    IrrepList irreps;
    for (const auto& u : reps) {
      std::vector<Eigen::MatrixXcd> mats(g.order());
      parallel_for(g.order(), [&](std::size_t x) { mats[x] = dec.restrict(u, static_cast<Element>(x)); });
      irreps.emplace_back(g, "", std::move(mats));
    }
    sort_canonical(irreps);
    IrrepList labelled;
    std::size_t run = 0;
    for (std::size_t i = 0; i < irreps.size(); ++i) {
      run = (i > 0 && irreps[i].degree() == irreps[i - 1].degree()) ? run + 1 : 0;
      std::vector<Eigen::MatrixXcd> mats(g.order());
      for (Element x = 0; x < g.order(); ++x) mats[x] = irreps[i].matrix(x);
      labelled.emplace_back(g, std::to_string(irreps[i].degree()) + atlas_suffix(run), std::move(mats));
    }
    return labelled;
  }
  throw std::runtime_error("degenerate split; retry with new random seed");
}

IrrepList irreps_cyclic(const FiniteGroup& zn) {
  if (zn.kind().family != GroupFamily::cyclic) throw std::invalid_argument(zn.name() + " is not cyclic");
  const std::size_t n = zn.order();
  IrrepList out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Eigen::MatrixXcd> mats(n);
    for (std::size_t a = 0; a < n; ++a) {
      const double angle = 2 * std::numbers::pi * static_cast<double>((j * a) % n) / static_cast<double>(n);
      mats[a] = Eigen::MatrixXcd::Constant(1, 1, Complex(std::cos(angle), std::sin(angle)));
    }
    out.emplace_back(zn, "chi[" + std::to_string(j) + "]", std::move(mats));
  }
  return out;
}

IrrepList irreps_direct_power(const FiniteGroup& power) {
  if (power.kind().family != GroupFamily::direct_power) throw std::invalid_argument(power.name() + " is not a direct power");
  if (power.order() > kGenericLimit)
    throw std::length_error("irrep matrices for " + power.name() + " exceed the |G| <= 2000 limit");
  const FiniteGroup base = power_base(power);
  const IrrepList factors = irreps_for(base);
  const unsigned k = power.kind().param;
  std::vector<std::vector<Element>> coords(power.order());
  for (Element x = 0; x < power.order(); ++x) coords[x] = power_decode(power, x);

  IrrepList out;
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    std::string label = "(";
    for (unsigned i = 0; i < k; ++i) label += (i ? ", " : "") + factors[pick[i]].label();
    label += ")";
    std::vector<Eigen::MatrixXcd> mats(power.order());
    for (Element x = 0; x < power.order(); ++x) {
      Eigen::MatrixXcd m = factors[pick[0]].matrix(coords[x][0]);
      for (unsigned i = 1; i < k; ++i) m = Eigen::kroneckerProduct(m, factors[pick[i]].matrix(coords[x][i])).eval();
      mats[x] = std::move(m);
    }
    out.emplace_back(power, label, std::move(mats));
    unsigned pos = k;
    while (pos > 0 && ++pick[pos - 1] == factors.size()) pick[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

}  // namespace hsp
