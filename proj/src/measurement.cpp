#include "hsp/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "hsp/fourier.hpp"
#include "hsp/parallel.hpp"

namespace hsp {

HiddenInvolution::HiddenInvolution(IrrepList irreps, Element h) : irreps_(std::move(irreps)), h_(h) {
  if (irreps_.empty()) throw std::invalid_argument("no irreps supplied");
  const FiniteGroup& g = group();
  if (sum_squared_degrees(irreps_) != g.order()) throw std::invalid_argument("irrep list is incomplete");
  if (h == g.identity() || g.compose(h, h) != g.identity())
    throw std::invalid_argument("hidden subgroup generator must be an involution");
  conjugates_ = conjugacy_class(g, h);
  std::sort(conjugates_.begin(), conjugates_.end());
  conjugate_slot_.assign(g.order(), -1);
  for (std::size_t j = 0; j < conjugates_.size(); ++j) conjugate_slot_[conjugates_[j]] = static_cast<long>(j);
  for (const auto& rho : irreps_) {
    const double chi = rho.character(h).real();
    const long rounded = std::lround(chi);
    if (std::abs(rho.character(h) - Complex(static_cast<double>(rounded), 0)) > 1e-6)
      throw std::runtime_error("character of " + rho.label() + " at h is not an integer");
    chi_h_.push_back(static_cast<int>(rounded));
    ranks_.push_back(static_cast<unsigned>((static_cast<long>(rho.degree()) + rounded) / 2));
    std::vector<Eigen::MatrixXcd> per_conjugate;
    const auto d = static_cast<Eigen::Index>(rho.degree());
    for (Element c : conjugates_)
      per_conjugate.push_back(0.5 * (Eigen::MatrixXcd::Identity(d, d) + rho.matrix(c)));
    projectors_.push_back(std::move(per_conjugate));
  }
}

std::size_t HiddenInvolution::conjugate_index(Element c) const {
  if (c >= conjugate_slot_.size() || conjugate_slot_[c] < 0) throw std::out_of_range("element is not a conjugate of h");
  return static_cast<std::size_t>(conjugate_slot_[c]);
}

std::size_t tuple_count(const HiddenInvolution& s, unsigned k) {
  std::size_t n = 1;
  for (unsigned i = 0; i < k; ++i) n *= s.irreps().size();
  return n;
}

RhoTuple decode_tuple(const HiddenInvolution& s, unsigned k, std::size_t id) {
  const std::size_t base = s.irreps().size();
  RhoTuple rho(k);
  for (unsigned i = k; i-- > 0;) {
    rho[i] = id % base;
    id /= base;
  }
  return rho;
}

std::size_t tuple_dimension(const HiddenInvolution& s, const RhoTuple& rho) {
  std::size_t d = 1;
  for (auto i : rho) d *= s.irreps()[i].degree();
  return d;
}

std::string tuple_label(const HiddenInvolution& s, const RhoTuple& rho) {
  if (rho.size() == 1) return s.irreps()[rho[0]].label();
  std::string out = "(";
  for (std::size_t i = 0; i < rho.size(); ++i) out += (i ? " x " : "") + s.irreps()[rho[i]].label();
  return out + ")";
}

KMeasurement KMeasurement::random(const HiddenInvolution& s, unsigned k, std::uint64_t seed, FrameKind kind) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  KMeasurement m;
  m.k = k;
  m.seed = seed;
  m.kind = kind;
  m.frames.resize(tuple_count(s, k));
  parallel_for(m.frames.size(), [&](std::size_t id) {
    m.frames[id] = random_frame(tuple_dimension(s, decode_tuple(s, k, id)), mix_seed(seed, id), kind);
  });
  return m;
}

double simulation_work(const HiddenInvolution& s, unsigned k) {
  double cubes = 0;
  for (const auto& rho : s.irreps()) cubes += std::pow(static_cast<double>(rho.degree()), 3);
  return static_cast<double>(s.conjugates().size()) * std::pow(cubes, k);
}

void check_simulation_cap(const HiddenInvolution& s, unsigned k) {
  const double work = simulation_work(s, k);
  if (work <= kSimulationWorkCap) return;
  std::size_t max_degree = 0;
  for (const auto& rho : s.irreps()) max_degree = std::max(max_degree, rho.degree());
  std::ostringstream msg;
  msg << "simulation work " << work << " exceeds the cap " << kSimulationWorkCap << " (largest rho tuple dimension "
      << std::pow(static_cast<double>(max_degree), k) << " = " << max_degree << "^" << k << ")";
  throw ResourceCapError(msg.str());
}

double irrep_probability(const HiddenInvolution& s, const RhoTuple& rho) {
  const double n = static_cast<double>(s.group().order());
  double p = 1;
  for (auto i : rho) p *= 2.0 * static_cast<double>(s.irreps()[i].degree()) * s.rank(i) / n;
  return p;
}

double plancherel_probability(const HiddenInvolution& s, const RhoTuple& rho) {
  const double n = static_cast<double>(s.group().order());
  double p = 1;
  for (auto i : rho) {
    const double d = static_cast<double>(s.irreps()[i].degree());
    p *= d * d / n;
  }
  return p;
}

namespace {

Complex projector_form_complex(const HiddenInvolution& s, const RhoTuple& rho, const Eigen::VectorXcd& b,
                               std::size_t slot) {
  std::vector<const Eigen::MatrixXcd*> factors;
  factors.reserve(rho.size());
  for (auto i : rho) factors.push_back(&s.half_projector(i, slot));
  return b.dot(apply_kron(factors, b));
}

unsigned tuple_rank(const HiddenInvolution& s, const RhoTuple& rho) {
  unsigned r = 1;
  for (auto i : rho) r *= s.rank(i);
  return r;
}

}  // namespace

double projector_form(const HiddenInvolution& s, const RhoTuple& rho, const Eigen::VectorXcd& b, Element conjugate) {
  return projector_form_complex(s, rho, b, s.conjugate_index(conjugate)).real();
}

double conditional_prob(const HiddenInvolution& s, const RhoTuple& rho, const Eigen::VectorXcd& b, double a_b,
                        std::optional<Element> conjugate) {
  if (!conjugate) return a_b / static_cast<double>(tuple_dimension(s, rho));
  const unsigned r = tuple_rank(s, rho);
  if (r == 0) return 0;
  return a_b * projector_form(s, rho, b, *conjugate) / r;
}

double x_function(const HiddenInvolution& s, const RhoTuple& rho, const Eigen::VectorXcd& b, Element conjugate) {
  const Complex form = projector_form_complex(s, rho, b, s.conjugate_index(conjugate));
  if (std::abs(form.imag()) > 1e-8) throw std::runtime_error("quadratic form of a projector has an imaginary part");
  return form.real() - std::ldexp(1.0, -static_cast<int>(rho.size()));
}

double MeasurementDistribution::total() const {
  std::vector<double> per_tuple;
  for (const auto& row : probability) per_tuple.push_back(pairwise_sum(row));
  return pairwise_sum(per_tuple);
}

double MeasurementDistribution::min_entry() const {
  double m = 0;
  for (const auto& row : probability)
    for (double p : row) m = std::min(m, p);
  return m;
}

std::string MeasurementDistribution::to_csv() const {
  std::ostringstream out;
  out << "rho_label,b_index,probability\n";
  char buf[64];
  for (std::size_t t = 0; t < probability.size(); ++t)
    for (std::size_t b = 0; b < probability[t].size(); ++b) {
      std::snprintf(buf, sizeof buf, "%.12g", probability[t][b]);
      const bool quote = labels[t].find(',') != std::string::npos;
      out << (quote ? "\"" : "") << labels[t] << (quote ? "\"" : "") << "," << b << "," << buf << "\n";
    }
  return out.str();
}

MeasurementDistribution full_distribution(const HiddenInvolution& s, const KMeasurement& m,
                                          std::optional<Element> conjugate) {
  const std::size_t count = tuple_count(s, m.k);
  if (m.frames.size() != count) throw std::invalid_argument("measurement is missing frames for some rho tuples");
  MeasurementDistribution dist;
  dist.labels.resize(count);
  dist.probability.resize(count);
  parallel_for(count, [&](std::size_t id) {
    const RhoTuple rho = decode_tuple(s, m.k, id);
    const Frame& f = m.frames[id];
    dist.labels[id] = tuple_label(s, rho);
    const double weight = conjugate ? irrep_probability(s, rho) : plancherel_probability(s, rho);
    auto& row = dist.probability[id];
    row.resize(f.size());
    for (std::size_t b = 0; b < f.size(); ++b)
      row[b] = weight == 0 ? 0.0 : weight * conditional_prob(s, rho, f.vectors.col(b), f.weights[b], conjugate);
  });
  return dist;
}

TvReport avg_tv_over_conjugates(const HiddenInvolution& s, const KMeasurement& m) {
  check_simulation_cap(s, m.k);
  const std::size_t count = tuple_count(s, m.k);
  if (m.frames.size() != count) throw std::invalid_argument("measurement is missing frames for some rho tuples");
  const auto& conj = s.conjugates();
  std::vector<std::vector<double>> partial(count);
  parallel_for(count, [&](std::size_t id) {
    const RhoTuple rho = decode_tuple(s, m.k, id);
    const Frame& f = m.frames[id];
    const double d = static_cast<double>(tuple_dimension(s, rho));
    const double hidden = irrep_probability(s, rho);
    const double trivial = plancherel_probability(s, rho);
    const unsigned r = tuple_rank(s, rho);
    auto& out = partial[id];
    out.assign(conj.size(), 0.0);
    for (std::size_t j = 0; j < conj.size(); ++j) {
      std::vector<double> terms(f.size());
      for (std::size_t b = 0; b < f.size(); ++b) {
        const double a = f.weights[b];
        const double q = r == 0 ? 0.0 : a * projector_form_complex(s, rho, f.vectors.col(b), j).real() / r;
        terms[b] = std::abs(hidden * q - trivial * a / d);
      }
      out[j] = pairwise_sum(terms);
    }
  });
  TvReport rep;
  rep.conjugates = conj;
  rep.l1.resize(conj.size());
  for (std::size_t j = 0; j < conj.size(); ++j) {
    std::vector<double> column(count);
    for (std::size_t id = 0; id < count; ++id) column[id] = partial[id][j];
    rep.l1[j] = pairwise_sum(column);
  }
  rep.average_l1 = pairwise_sum(rep.l1) / static_cast<double>(conj.size());
  rep.max_l1 = *std::max_element(rep.l1.begin(), rep.l1.end());
  return rep;
}

double mixed_conjugate_trace_distance(const HiddenInvolution& s, unsigned t) {
  const std::size_t order = s.group().order();
  const unsigned cap = order <= 100 ? 3 : order <= 600 ? 2 : 1;
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  if (t > cap)
    throw ResourceCapError("mixed conjugate trace distance supports t <= " + std::to_string(cap) + " for |G| = " +
                           std::to_string(order));
  const std::size_t count = tuple_count(s, t);
  const auto& conj = s.conjugates();
  std::vector<double> contribution(count);
  parallel_for(count, [&](std::size_t id) {
    const RhoTuple rho = decode_tuple(s, t, id);
    const auto dim = static_cast<Eigen::Index>(tuple_dimension(s, rho));
    Eigen::MatrixXcd average = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t j = 0; j < conj.size(); ++j) {
      Eigen::MatrixXcd product = Eigen::MatrixXcd::Identity(1, 1);
      for (auto i : rho) {
        const Eigen::MatrixXcd doubled = 2.0 * s.half_projector(i, j);
        product = Eigen::kroneckerProduct(product, doubled).eval();
      }
      average += product;
    }
    average /= static_cast<double>(conj.size());
    average -= Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(average, Eigen::EigenvaluesOnly);
    contribution[id] = static_cast<double>(dim) * es.eigenvalues().cwiseAbs().sum();
  });
  return pairwise_sum(contribution) / std::pow(static_cast<double>(order), t);
}

}  // namespace hsp
