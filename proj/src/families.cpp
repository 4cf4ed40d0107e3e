#include "hsp/families.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hsp/finite_field.hpp"
#include "hsp/irrep.hpp"
#include "hsp/psl_tables.hpp"
#include "hsp/report.hpp"

namespace hsp {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Integer int_pow(const Integer& base, unsigned e) { return boost::multiprecision::pow(base, e); }

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

std::string rule_note() {
  return "k_lower_bound is the largest k with sqrt(t*delta2(k)) < threshold and 2*k*eps < 1; the threshold "
         "stands in for 'polynomially large information'";
}

}  // namespace

void finish_report(FamilyReport& report) {
  report.delta2_by_k.clear();
  report.k_lower_bound = 0;
  if (!report.bounds) return;
  const BoundParams& b = *report.bounds;
  for (unsigned k = 1; k <= report.options.k_max; ++k) report.delta2_by_k.push_back({k, b.delta2(k), b.hypothesis_ok(k)});
  report.k_lower_bound = entanglement_lower_bound(b, report.options.threshold, report.options.states);
}

FamilyReport wreath_bound(unsigned n, const Rational& alpha, const BoundOptions& options) {
  if (n < 2 || n > 40) throw std::out_of_range("wreath bound needs 2 <= n <= 40, got " + std::to_string(n));
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  const Integer a = numerator(alpha), b = denominator(alpha);
  if (b > 64 || a * n > 4000) throw std::invalid_argument("alpha numerator/denominator too large");
  const unsigned root = b.convert_to<unsigned>();
  const Integer cap = int_pow(Integer(n), (a * n).convert_to<unsigned>());  // d^b <= n^(a n)

  const auto lambdas = partitions(n);
  Integer sum_d = 0, sum_d2 = 0, sum_dchi = 0, d_eps = 0;
  std::vector<std::string> theta, theta_prime;
  for (const auto& lambda : lambdas) {
    const Integer d = hook_length_degree(lambda);
    sum_d += d;
    sum_d2 += d * d;
    if (int_pow(d, root) <= cap) {
      theta.push_back("theta" + partition_label(lambda));
      theta_prime.push_back("theta'" + partition_label(lambda));
      sum_dchi += 2 * d * d * d;
      d_eps += 2 * d * d * d * d;
    }
  }
  const Integer nfact = factorial_big(n);
  if (sum_d2 != nfact) throw std::logic_error("hook-length degrees do not square-sum to n!");
  const Integer p = lambdas.size();
  const Integer order = 2 * nfact * nfact;
  const Integer irreps = p * (p - 1) / 2 + 2 * p;
  // theta, theta' have degree d_i^2, kappa_{ij} degree 2 d_i d_j.
  const Integer sum_nu = nfact + sum_d * sum_d;
  theta.insert(theta.end(), theta_prime.begin(), theta_prime.end());

  FamilyReport r;
  r.family = "wreath";
  r.params = {{"n", n}, {"alpha", rational_string(alpha)}};
  r.options = options;
  r.bounds = bound_params_from_sums(Epsilon{Rational(Integer(1), cap), root}, order, theta, d_eps, sum_dchi, sum_nu,
                                    irreps);
  r.asymptotic = r.bounds->epsilon_value();
  r.asymptotic_formula = "n^(-alpha*n)";
  const long double nu = std::numbers::pi_v<long double> * std::sqrt(2.0L / 3.0L);
  const Integer pn = partition_number(n);
  r.details = {{"partition_number", big_json(pn)},
               {"partition_number_enumerated", big_json(p)},
               {"partition_estimate_exp_nu_sqrt_n", sig12(std::exp(nu * std::sqrt(static_cast<long double>(n))))},
               {"nu", sig12(nu)},
               {"h", "(e|e|1)"}};
  if (pn != p) throw std::logic_error("partition count mismatch");
  r.notes.push_back(rule_note());
  r.notes.push_back("S_eps = {theta_l, theta'_l : d_l^b <= n^(a*n)} for alpha = a/b; kappa irreps vanish at h");
  finish_report(r);
  return r;
}

namespace {

FamilyReport psl_report(const PslTable& t, const BoundOptions& options, nlohmann::json params) {
  FamilyReport r;
  r.family = "psl2";
  r.params = std::move(params);
  r.options = options;
  r.bounds = bound_params(t.data, Epsilon::of(t.epsilon));
  const long double q = t.q.convert_to<long double>();
  r.asymptotic = 1.0L / std::sqrt(q);
  r.asymptotic_formula = "delta2 <= 2^k O(q^(-1/2)); value is q^(-1/2)";
  const char* kind = t.kind == PslCase::even ? "q even" : t.kind == PslCase::one_mod_four ? "q = 1 mod 4" : "q = 3 mod 4";
  r.details = {{"case", kind},
               {"centralizer_order", big_json(t.centralizer_order)},
               {"involution_class_size", big_json(t.data.group_order / t.centralizer_order)},
               {"class_data_source", "centralizer-order formula"},
               {"epsilon_rational", rational_string(t.epsilon)},
               {"h", "[[1,1],[0,1]] for even q, a diagonal or antidiagonal involution for odd q"}};
  r.notes.push_back(rule_note());
  r.notes.push_back(
      "the stated rate 'k = Omega(log|G|) = Omega(q)' is inconsistent (log|G| is Theta(log q)); the computed k "
      "grows like log q at a fixed threshold");
  if (t.kind == PslCase::three_mod_four)
    r.notes.push_back("theta_k and eta_l have |chi(h)|/d equal to eps exactly and are kept in S_eps (>= definition)");
  return r;
}

}  // namespace

FamilyReport psl_bound(unsigned q, const BoundOptions& options) {
  const PslTable t = psl_table(q);
  FamilyReport r = psl_report(t, options, {{"q", q}});
  if (q <= 13) {
    const FiniteGroup g = make_psl2(q);
    const auto invs = involutions(g);
    const auto cls = conjugacy_class(g, invs.front());
    r.details["class_data_source"] = "enumeration";
    r.details["involution_class_size"] = cls.size();
    r.details["centralizer_order"] = g.order() / cls.size();
    r.details["involutions_enumerated"] = invs.size();
    r.details["involutions_stated"] = big_json(t.stated_involution_count);
  }
  finish_report(r);
  return r;
}

FamilyReport psl_bound_prime_power(unsigned p, unsigned e, const BoundOptions& options) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  const Integer q = int_pow(Integer(p), e);
  if (q < 4) throw std::invalid_argument("psl2 needs q >= 4");
  FamilyReport r = psl_report(psl_table_prime_power(q, p), options,
                              {{"q", big_json(q)}, {"p", p}, {"exponent", e}});
  finish_report(r);
  return r;
}

FamilyReport gl_bound(unsigned n, unsigned p, unsigned m, const BoundOptions& options) {
  if (n < 2) throw std::invalid_argument("gl bound needs n >= 2");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  const unsigned half = n / 2;
  std::optional<FamilyReport> wreath, psl;
  nlohmann::json branches = nlohmann::json::object();
  if (half >= 2 && half <= 40) {
    wreath = wreath_bound(half, Rational(1, 4), options);
    branches["wreath"] = {{"n", half}, {"k_lower_bound", wreath->k_lower_bound}};
  } else {
    branches["wreath"] = {{"n", half}, {"skipped", "needs 2 <= floor(n/2) <= 40"}};
  }
  const unsigned e = half * m;
  const Integer q = int_pow(Integer(p), e);
  if (q >= 4) {
    psl = psl_bound_prime_power(p, e, options);
    branches["psl2"] = {{"q", big_json(q)}, {"k_lower_bound", psl->k_lower_bound}};
  } else {
    branches["psl2"] = {{"q", big_json(q)}, {"skipped", "needs q >= 4"}};
  }

  FamilyReport r;
  r.family = "gl";
  r.params = {{"n", n}, {"p", p}, {"m", m}};
  r.options = options;
  if (!wreath && !psl) {
    r.applicable = false;
    r.inapplicable_reason = "neither the wreath branch (floor(n/2) >= 2) nor the psl2 branch (p^(floor(n/2) m) >= 4) applies";
    r.details = {{"branches", branches}};
    return r;
  }
  const bool wreath_wins = wreath && (!psl || wreath->k_lower_bound >= psl->k_lower_bound);
  const FamilyReport& win = wreath_wins ? *wreath : *psl;
  r.bounds = win.bounds;
  r.asymptotic = win.asymptotic;
  r.asymptotic_formula = win.asymptotic_formula;
  branches["winner"] = wreath_wins ? "wreath" : "psl2";
  r.details = {{"branches", branches},
               {"transfer",
                wreath_wins ? "S_{n/2} wr S_2 <= S_n <= GL(n, F_q), subgroup transfer"
                            : "PSL(2, F_{q^{floor(n/2)}}) is a quotient of SL(2, .) <= GL(2, .) <= GL(n, F_q)"}};
  r.notes.push_back(rule_note());
  r.notes.push_back("bound parameters are those of the winning branch; ties go to the wreath branch");
  finish_report(r);
  return r;
}

FamilyReport direct_power_bound(const FiniteGroup& g, Element h, unsigned n, const DirectPowerOptions& dp,
                                const BoundOptions& options) {
  if (g.order() > 2000) throw std::invalid_argument("direct power bound needs |G| <= 2000");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (h == g.identity() || g.compose(h, h) != g.identity()) throw std::invalid_argument("h must be an involution");
  const IrrepList irreps = irreps_for(g);
  const CharacterData data = character_data(irreps, h);
  const Integer order = g.order();
  const Integer centralizer = hsp::centralizer(g, h).order();
  const auto gallagher = gallagher_check(data, centralizer);

  Integer lambda = 0, nu = 0;
  nlohmann::json lambda_labels = nlohmann::json::array(), ratios = nlohmann::json::array();
  for (std::size_t i = 0; i < data.rows.size(); ++i) {
    const auto& row = data.rows[i];
    if (gallagher[i].in_lambda) {
      lambda += row.degree * row.degree;
      lambda_labels.push_back(row.label);
    } else {
      nu += row.degree * abs_int(row.chi_h);
    }
    ratios.push_back({{"label", row.label},
                      {"ratio", rational_string(gallagher[i].ratio)},
                      {"in_lambda", gallagher[i].in_lambda},
                      {"strict", gallagher[i].strict}});
  }
  const Integer mu = order - lambda;
  const Integer sum_d = data.sum_degrees();
  const Integer count = data.irrep_count();
  const bool direct1 = order > lambda * sum_d;
  const bool direct2 = order > count * lambda * lambda;
  const Rational threshold_T = 1 - Rational(2 * centralizer, order);

  FamilyReport r;
  r.family = "power";
  r.params = {{"group", g.name()}, {"h", g.format(h)}, {"n", n}};
  r.options = options;
  r.notes.push_back(rule_note());
  r.details = {
      {"centralizer_order", big_json(centralizer)},
      {"lambda_irreps", lambda_labels},
      {"lambda", big_json(lambda)},
      {"mu", big_json(mu)},
      {"gallagher", ratios},
      {"gallagher_threshold", rational_string(threshold_T)},
      {"direct1", {{"holds", direct1}, {"inequality", "|G| > lambda * sum_d: " + order.str() + " > " + lambda.str() + "*" + sum_d.str()}}},
      {"direct2",
       {{"holds", direct2},
        {"inequality", "sqrt(|G|) > sqrt(|irreps|) * lambda: sqrt(" + order.str() + ") > " + lambda.str() + "*sqrt(" +
                           count.str() + ")"}}}};
  if (!direct1) {
    r.applicable = false;
    r.inapplicable_reason = "bound inapplicable: " + r.details["direct1"]["inequality"].get<std::string>() + " fails";
    return r;
  }
  if (threshold_T <= 0) {
    r.applicable = false;
    r.inapplicable_reason = "bound inapplicable: 1 - 2|C(h)|/|G| <= 0";
    return r;
  }

  // kappa: the bound assumes |G| > lambda (1 + kappa) sum_d.
  const Rational kappa_max = Rational(order, lambda * sum_d) - 1;
  const Rational kappa = dp.kappa ? *dp.kappa : kappa_max / 2;
  if (kappa <= 0) throw std::invalid_argument("kappa must be positive");
  const bool kappa_ok = Rational(order) > Rational(lambda * sum_d) * (1 + kappa);
  const long double log_ratio = log_of(Rational(order, lambda));
  const long double log_kappa = std::log1p(to_long_double(kappa));
  unsigned c_for_kappa = 0;
  for (unsigned c = 2; c < 10000000; ++c)
    if ((std::log(static_cast<long double>(c)) + 1 + log_ratio) / c <= log_kappa) {
      c_for_kappa = c;
      break;
    }
  r.details["kappa"] = {{"value", rational_string(kappa)},
                        {"hypothesis_holds", kappa_ok},
                        {"inequality", "|G| > lambda (1 + kappa) sum_d"},
                        {"c_with_closed_form_below_1_plus_kappa", c_for_kappa}};

  std::vector<Rational> candidates;
  if (dp.c) {
    candidates.push_back(*dp.c);
  } else {
    for (unsigned c = 2; c <= 16; ++c) candidates.push_back(c);
  }
  const Rational c_floor = mu == 0 ? Rational(0) : Rational(order, mu);
  nlohmann::json search = nlohmann::json::array();
  std::optional<FamilyReport> best;
  Rational best_c;
  for (const Rational& c : candidates) {
    if (mu == 0 || c <= c_floor) {
      if (dp.c) throw std::invalid_argument("c must exceed |G|/mu = " + rational_string(c_floor));
      continue;
    }
    const BinomialTail tail = binomial_tail(Rational(lambda), Rational(mu), n, c);
    const unsigned t = tail.t;
    Integer d_eps = numerator(tail.exact), dchi = 0;
    for (unsigned l = n - t; l <= n; ++l) dchi += binomial(n, l) * int_pow(lambda, l) * int_pow(nu, n - l);
    FamilyReport cand = r;
    cand.bounds = bound_params_from_sums(Epsilon::of(rational_pow(threshold_T, t)), int_pow(order, n),
                                         {"tuples with at least n-t factors in Lambda (contains S_eps)"}, d_eps, dchi,
                                         int_pow(sum_d, n), int_pow(count, n));
    finish_report(cand);
    cand.details["c"] = rational_string(c);
    cand.details["t"] = t;
    cand.details["tail_exact"] = big_json(d_eps);
    cand.details["tail_closed_form"] = sig12(tail.bound);
    search.push_back({{"c", rational_string(c)}, {"t", t}, {"k_lower_bound", cand.k_lower_bound}});
    if (!best || cand.k_lower_bound > best->k_lower_bound) {
      best = std::move(cand);
      best_c = c;
    }
  }
  if (!best) {
    r.applicable = false;
    r.inapplicable_reason = "no c in 2..16 satisfies c > |G|/mu = " + rational_string(c_floor);
    return r;
  }
  best->details["c_search"] = search;
  best->details["omega_n_conclusion"] = true;
  best->notes.push_back(
      "D_eps and sum_dchi are upper bounds: exact binomial tails over tuples with at most t factors outside Lambda "
      "(the closed form is reported for comparison and is never smaller)");
  best->notes.push_back("c is chosen to maximise k, ties to the smallest c");
  return *best;
}

nlohmann::json to_json(const FamilyReport& r) {
  nlohmann::json j;
  j["family"] = r.family;
  j["params"] = r.params;
  j["applicable"] = r.applicable;
  if (!r.applicable) j["inapplicable_reason"] = r.inapplicable_reason;
  if (r.bounds) {
    const BoundParams& b = *r.bounds;
    j["group_order"] = big_json(b.group_order);
    j["epsilon"] = sig12(b.epsilon_value());
    j["epsilon_exact"] = b.epsilon.to_string();
    j["s_epsilon_labels"] = b.s_epsilon_labels;
    j["d_epsilon"] = big_json(b.d_epsilon);
    j["sum_dchi"] = big_json(b.sum_dchi);
    j["sum_d"] = big_json(b.sum_d);
    j["irrep_count"] = big_json(b.irrep_count);
    j["delta1"] = sig12(b.delta1);
    if (b.delta1_exact) j["delta1_exact"] = rational_string(*b.delta1_exact);
    j["delta1_cauchy_schwarz"] = sig12(b.delta1_cauchy_schwarz());
  } else {
    for (const char* key : {"group_order", "epsilon", "s_epsilon_labels", "d_epsilon", "sum_dchi", "sum_d", "delta1"})
      j[key] = nullptr;
  }
  nlohmann::json d2 = nlohmann::json::array();
  for (const auto& e : r.delta2_by_k) d2.push_back({{"k", e.k}, {"value", sig12(e.value)}, {"hypothesis_ok", e.hypothesis_ok}});
  j["delta2_by_k"] = d2;
  j["k_lower_bound"] = r.k_lower_bound;
  j["threshold"] = sig12(r.options.threshold);
  j["states_t"] = r.options.states;
  if (r.asymptotic) j["asymptotic"] = {{"formula", r.asymptotic_formula}, {"value", sig12(*r.asymptotic)}};
  j["interpretation_notes"] = r.notes;
  j["details"] = r.details;
  return j;
}

std::string to_csv(const FamilyReport& r) {
  std::ostringstream out;
  out << "key,value\n";
  out << "family," << r.family << "\n";
  out << "applicable," << (r.applicable ? "true" : "false") << "\n";
  if (r.bounds) {
    const BoundParams& b = *r.bounds;
    out << "group_order," << b.group_order << "\n";
    out << "epsilon," << format_sig12(b.epsilon_value()) << "\n";
    out << "d_epsilon," << b.d_epsilon << "\n";
    out << "sum_dchi," << b.sum_dchi << "\n";
    out << "sum_d," << b.sum_d << "\n";
    out << "delta1," << format_sig12(b.delta1) << "\n";
  }
  for (const auto& e : r.delta2_by_k) out << "delta2_k" << e.k << "," << format_sig12(e.value) << "\n";
  out << "k_lower_bound," << r.k_lower_bound << "\n";
  out << "threshold," << format_sig12(r.options.threshold) << "\n";
  return out.str();
}

std::string to_text(const FamilyReport& r) {
  std::ostringstream out;
  out << "family " << r.family << " " << r.params.dump() << "\n";
  if (!r.applicable) out << "inapplicable: " << r.inapplicable_reason << "\n";
  if (r.bounds) {
    const BoundParams& b = *r.bounds;
    out << "|G| = " << b.group_order << "\n";
    out << "epsilon = " << format_sig12(b.epsilon_value()) << " (" << b.epsilon.to_string() << ")\n";
    out << "S_eps:";
    for (const auto& l : b.s_epsilon_labels) out << " " << l;
    out << "\nD_eps = " << b.d_epsilon << ", sum d|chi(h)| = " << b.sum_dchi << ", sum d = " << b.sum_d << "\n";
    out << "delta1 = " << format_sig12(b.delta1) << "\n";
  }
  for (const auto& e : r.delta2_by_k)
    out << "delta2(" << e.k << ") = " << format_sig12(e.value) << (e.hypothesis_ok ? "" : " (2k eps >= 1)") << "\n";
  out << "k lower bound = " << r.k_lower_bound << " at threshold " << format_sig12(r.options.threshold) << ", t = "
      << r.options.states << "\n";
  return out.str();
}

}  // namespace hsp
