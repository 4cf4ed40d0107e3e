#include "hsp/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hsp/group.hpp"

namespace hsp {

namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

Integer CharacterData::irrep_count() const {
  Integer n = 0;
  for (const auto& r : rows) n += r.count;
  return n;
}

Integer CharacterData::sum_squared_degrees() const {
  Integer s = 0;
  for (const auto& r : rows) s += r.count * r.degree * r.degree;
  return s;
}

Integer CharacterData::sum_degrees() const {
  Integer s = 0;
  for (const auto& r : rows) s += r.count * r.degree;
  return s;
}

CharacterData character_data(const IrrepList& irreps, Element h) {
  if (irreps.empty()) throw std::invalid_argument("character_data: no irreps");
  CharacterData data;
  data.group_order = irreps.front().group().order();
  for (const auto& rho : irreps) {
    const Complex c = rho.character(h);
    const double rounded = std::round(c.real());
    if (std::abs(c - Complex(rounded, 0)) > 1e-6)
      throw std::runtime_error("character of " + rho.label() + " at an involution is not an integer");
    data.rows.push_back({rho.label(), Integer(rho.degree()), Integer(static_cast<long long>(rounded)), 1});
  }
  return data;
}

long double Epsilon::value() const {
  const long double b = to_long_double(base);
  if (b > 0 && std::isnormal(b)) return std::pow(b, 1.0L / root);
  return std::exp(log_of(base) / root);
}

bool Epsilon::at_most(const Rational& x) const {
  if (x < 0) return false;
  return rational_pow(x, root) >= base;
}

bool Epsilon::times_below_one(const Rational& factor) const {
  if (factor <= 0) return true;
  return rational_pow(factor, root) * base < 1;
}

std::string Epsilon::to_string() const {
  std::ostringstream out;
  out << base;
  if (root != 1) out << "^(1/" << root << ")";
  return out.str();
}

long double BoundParams::delta1_cauchy_schwarz() const {
  const long double ratio = to_long_double(Rational(irrep_count, group_order));
  return epsilon_value() + sum_dchi.convert_to<long double>() * std::sqrt(ratio);
}

long double BoundParams::delta2(unsigned k) const {
  const long double eps = epsilon_value();
  const long double kk = k;
  const long double tail = to_long_double(Rational(d_epsilon, group_order));
  return std::pow(2.0L, kk) * (1 + 2 * kk * eps) * std::sqrt(delta1) + 3 * kk * eps + 3 * kk * tail;
}

bool BoundParams::hypothesis_ok(unsigned k) const { return epsilon.times_below_one(Rational(2 * k)); }

BoundParams bound_params_from_sums(const Epsilon& epsilon, const Integer& group_order,
                                   std::vector<std::string> s_epsilon_labels, const Integer& d_epsilon,
                                   const Integer& sum_dchi, const Integer& sum_d, const Integer& irrep_count) {
  if (epsilon.base <= 0) throw std::invalid_argument("epsilon must be positive");
  if (group_order <= 0) throw std::invalid_argument("group order must be positive");
  BoundParams p;
  p.epsilon = epsilon;
  p.group_order = group_order;
  p.s_epsilon_labels = std::move(s_epsilon_labels);
  p.d_epsilon = d_epsilon;
  p.sum_dchi = sum_dchi;
  p.sum_d = sum_d;
  p.irrep_count = irrep_count;
  const Rational tail(sum_dchi * sum_d, group_order);
  p.delta1 = epsilon.value() + to_long_double(tail);
  if (epsilon.root == 1) {
    p.delta1_exact = epsilon.base + tail;
    p.delta1 = to_long_double(*p.delta1_exact);
  }
  return p;
}

BoundParams bound_params(const CharacterData& data, const Epsilon& epsilon) {
  if (epsilon.base <= 0) throw std::invalid_argument("epsilon must be positive");
  if (data.sum_squared_degrees() != data.group_order)
    throw std::invalid_argument("incomplete character data: sum of squared degrees differs from |G|");
  std::vector<std::string> labels;
  Integer d_eps = 0, sum_dchi = 0;
  for (const auto& r : data.rows) {
    if (!epsilon.at_most(Rational(abs_int(r.chi_h), r.degree))) continue;
    labels.push_back(r.count == 1 ? r.label : r.label + " (x" + r.count.str() + ")");
    d_eps += r.count * r.degree * r.degree;
    sum_dchi += r.count * r.degree * abs_int(r.chi_h);
  }
  return bound_params_from_sums(epsilon, data.group_order, std::move(labels), d_eps, sum_dchi, data.sum_degrees(),
                                data.irrep_count());
}

unsigned entanglement_lower_bound(const BoundParams& params, long double threshold, unsigned states) {
  if (!(threshold > 0 && threshold < 1)) throw std::invalid_argument("threshold must lie in (0, 1)");
  if (states < 1) throw std::invalid_argument("state count must be at least 1");
  unsigned best = 0;
  // delta2 grows at least like 2^k sqrt(delta1), so the scan ends quickly.
  for (unsigned k = 1; k < 4096; ++k) {
    if (!params.hypothesis_ok(k)) break;
    const long double d2 = params.delta2(k);
    if (!(std::sqrt(states * d2) < threshold)) break;
    best = k;
  }
  return best;
}

std::vector<GallagherEntry> gallagher_check(const CharacterData& data, const Integer& centralizer_order) {
  const Rational limit = 1 - Rational(2 * centralizer_order, data.group_order);
  std::vector<GallagherEntry> out;
  for (const auto& r : data.rows) {
    GallagherEntry e;
    e.label = r.label;
    e.ratio = Rational(abs_int(r.chi_h), r.degree);
    e.in_lambda = abs_int(r.chi_h) == r.degree;
    e.strict = e.in_lambda || e.ratio < limit;
    if (!e.in_lambda && e.ratio > limit)
      throw std::logic_error("irrep " + r.label + " violates both branches of the involution dichotomy");
    out.push_back(e);
  }
  return out;
}

Rational trace_norm_eta(const CharacterData& data) {
  Integer s = 0;
  for (const auto& r : data.rows) s += r.count * r.degree * abs_int(r.chi_h);
  return Rational(s, data.group_order);
}

Rational trace_norm_bound(const CharacterData& data, unsigned t) {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  return trace_norm_eta(data) * Rational(Integer(1) << t);
}

unsigned trace_norm_t_min(const CharacterData& data, const Rational& threshold) {
  const Rational eta = trace_norm_eta(data);
  if (eta <= 0) throw std::invalid_argument("eta is zero");
  unsigned t = 1;
  while (eta * Rational(Integer(1) << t) < threshold) ++t;
  return t;
}

}  // namespace hsp
