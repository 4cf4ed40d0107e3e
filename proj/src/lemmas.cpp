#include "hsp/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hsp/bounds.hpp"
#include "hsp/fourier.hpp"
#include "hsp/parallel.hpp"
#include "hsp/report.hpp"

namespace hsp {

nlohmann::json to_json(const std::vector<LemmaResult>& results) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json j{{"lemma", r.lemma}, {"status", r.status}};
    if (r.status == "hypothesis-not-met") {
      j["lhs"] = nullptr;
      j["rhs"] = nullptr;
      j["slack"] = nullptr;
      j["pass"] = nullptr;
    } else {
      j["lhs"] = sig12(r.lhs);
      j["rhs"] = sig12(r.rhs);
      j["slack"] = sig12(r.slack);
      j["pass"] = r.pass();
    }
    if (!r.detail.empty()) j["detail"] = r.detail;
    out.push_back(j);
  }
  return out;
}

namespace {

LemmaResult equality(std::string name, double lhs, double rhs, double tol, std::string detail = "") {
  const double slack = std::abs(lhs - rhs);
  return {std::move(name), lhs, rhs, slack, slack <= tol ? "pass" : "fail", std::move(detail)};
}

LemmaResult inequality(std::string name, double lhs, double rhs, bool strict, std::string detail = "") {
  const bool ok = strict ? lhs < rhs : lhs <= rhs + 1e-12;
  return {std::move(name), lhs, rhs, rhs - lhs, ok ? "pass" : "fail", std::move(detail)};
}

LemmaResult not_met(std::string name, std::string detail) {
  return {std::move(name), 0, 0, 0, "hypothesis-not-met", std::move(detail)};
}

// Conjugated characters at class representatives, for projections by class sums.
struct ClassData {
  std::vector<ConjugacyClass> classes;
  std::vector<std::vector<Complex>> conj_chi;  // [tau][class]
};

ClassData class_data(const HiddenInvolution& s) {
  ClassData c;
  c.classes = conjugacy_classes(s.group());
  for (const auto& tau : s.irreps()) {
    std::vector<Complex> row;
    for (const auto& cls : c.classes) row.push_back(std::conj(tau.character(cls.representative)));
    c.conj_chi.push_back(std::move(row));
  }
  return c;
}

// rho^I(g) applied to vectors of one tuple, for every nonempty I (bit mask).
class TupleAction {
 public:
  TupleAction(const HiddenInvolution& s, const RhoTuple& rho) : s_(s), rho_(rho) {
    for (auto i : rho) {
      const auto d = static_cast<Eigen::Index>(s.irreps()[i].degree());
      identities_.push_back(Eigen::MatrixXcd::Identity(d, d));
    }
  }

  unsigned subsets() const { return 1u << rho_.size(); }

  Eigen::VectorXcd apply(unsigned mask, Element g, const Eigen::VectorXcd& b) const {
    std::vector<const Eigen::MatrixXcd*> f;
    for (std::size_t i = 0; i < rho_.size(); ++i)
      f.push_back((mask >> i) & 1u ? &s_.irreps()[rho_[i]].matrix(g) : &identities_[i]);
    return apply_kron(f, b);
  }

  // images[mask][g] = rho^mask(g) b
  std::vector<std::vector<Eigen::VectorXcd>> images(const Eigen::VectorXcd& b) const {
    const std::size_t n = s_.group().order();
    std::vector<std::vector<Eigen::VectorXcd>> out(subsets());
    for (unsigned mask = 1; mask < subsets(); ++mask) {
      out[mask].reserve(n);
      for (Element g = 0; g < n; ++g) out[mask].push_back(apply(mask, g, b));
    }
    return out;
  }

 private:
  const HiddenInvolution& s_;
  RhoTuple rho_;
  std::vector<Eigen::MatrixXcd> identities_;
};

struct VectorAnalysis {
  double lhs = 0, rhs = 0;                 // chioverd
  double ph_lhs = 0, ph_rhs = 0;           // proj-hom case with least slack
  double ph_slack = std::numeric_limits<double>::infinity();
};

VectorAnalysis analyse_vector(const HiddenInvolution& s, const ClassData& cd, const RhoTuple& rho,
                              const Eigen::VectorXcd& b) {
  const TupleAction act(s, rho);
  const auto img = act.images(b);
  const double n = static_cast<double>(s.group().order());
  const auto dim = b.size();
  VectorAnalysis out;

  std::vector<double> x2;
  for (Element c : s.conjugates()) {
    const double x = x_function(s, rho, b, c);
    x2.push_back(x * x);
  }
  out.lhs = pairwise_sum(x2) / static_cast<double>(x2.size());

  std::vector<double> second(act.subsets(), 0.0);  // E_g |<b|rho^I(g)|b>|^2
  for (unsigned mask = 1; mask < act.subsets(); ++mask) {
    std::vector<double> v;
    for (const auto& u : img[mask]) v.push_back(std::norm(b.dot(u)));
    second[mask] = pairwise_sum(v) / n;
  }

  std::vector<double> rhs_terms;
  Eigen::VectorXcd kron(dim * dim);
  for (unsigned m1 = 1; m1 < act.subsets(); ++m1)
    for (unsigned m2 = 1; m2 < act.subsets(); ++m2) {
      std::vector<Eigen::VectorXcd> class_sum;
      for (const auto& cls : cd.classes) {
        Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(dim * dim);
        for (Element g : cls.members) {
          const auto& u = img[m1][g];
          const auto& w = img[m2][g];
          for (Eigen::Index a = 0; a < dim; ++a) acc.segment(a * dim, dim) += u[a] * w;
        }
        class_sum.push_back(std::move(acc));
      }
      for (std::size_t t = 0; t < s.irreps().size(); ++t) {
        const double d = static_cast<double>(s.irreps()[t].degree());
        Eigen::VectorXcd proj = Eigen::VectorXcd::Zero(dim * dim);
        for (std::size_t c = 0; c < cd.classes.size(); ++c) proj += cd.conj_chi[t][c] * class_sum[c];
        proj *= d / n;
        const double norm2 = proj.squaredNorm();
        rhs_terms.push_back(s.chi_h(t) / d * norm2);
        const double bound = d * d / 2 * (second[m1] + second[m2]);
        if (bound - norm2 < out.ph_slack) {
          out.ph_slack = bound - norm2;
          out.ph_lhs = norm2;
          out.ph_rhs = bound;
        }
      }
    }
  out.rhs = pairwise_sum(rhs_terms) / std::pow(4.0, static_cast<double>(rho.size()));
  return out;
}

std::uint64_t vector_seed(std::uint64_t base, std::size_t tuple, unsigned v) {
  return mix_seed(mix_seed(base, tuple), v);
}

}  // namespace

SecondMoment second_moment_check(const HiddenInvolution& s, const RhoTuple& rho, const Eigen::VectorXcd& b) {
  const VectorAnalysis a = analyse_vector(s, class_data(s), rho, b);
  return {a.lhs, a.rhs};
}

std::vector<LemmaResult> lemma_suite(const HiddenInvolution& s, const LemmaSuiteOptions& o) {
  std::vector<LemmaResult> out;
  const unsigned k = o.k;
  const ClassData cd = class_data(s);
  const std::size_t count = tuple_count(s, k);

  // chioverd and proj-hom, vector by vector on small tuples.
  {
    std::vector<VectorAnalysis> worst_eq(count), worst_ph(count);
    std::vector<double> eq_err(count, -1), ph_slack(count, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> checked(count, 0);
    parallel_for(count, [&](std::size_t id) {
      const RhoTuple rho = decode_tuple(s, k, id);
      const std::size_t d = tuple_dimension(s, rho);
      if (d > o.max_tuple_dimension) return;
      for (unsigned v = 0; v < o.random_vectors; ++v) {
        const auto b = random_unit_vector(d, vector_seed(o.vector_seed, id, v));
        const VectorAnalysis a = analyse_vector(s, cd, rho, b);
        ++checked[id];
        if (std::abs(a.lhs - a.rhs) > eq_err[id]) {
          eq_err[id] = std::abs(a.lhs - a.rhs);
          worst_eq[id] = a;
        }
        if (a.ph_slack < ph_slack[id]) {
          ph_slack[id] = a.ph_slack;
          worst_ph[id] = a;
        }
      }
    });
    std::size_t we = count, wp = count, total = 0;
    for (std::size_t id = 0; id < count; ++id) {
      total += checked[id];
      if (!checked[id]) continue;
      if (we == count || eq_err[id] > eq_err[we]) we = id;
      if (wp == count || ph_slack[id] < ph_slack[wp]) wp = id;
    }
    if (we == count) {
      out.push_back(not_met("chioverd", "no rho tuple within the dimension limit"));
      out.push_back(not_met("proj-hom", "no rho tuple within the dimension limit"));
    } else {
      const std::string where = std::to_string(total) + " vectors; worst tuple ";
      out.push_back(equality("chioverd", worst_eq[we].lhs, worst_eq[we].rhs, 1e-8,
                             where + tuple_label(s, decode_tuple(s, k, we))));
      out.push_back(inequality("proj-hom", worst_ph[wp].ph_lhs, worst_ph[wp].ph_rhs, false,
                               where + tuple_label(s, decode_tuple(s, k, wp))));
    }
  }

  const Epsilon eps = Epsilon::of(o.epsilon);
  const double epsilon = static_cast<double>(eps.value());
  const BoundParams params = bound_params(character_data(s.irreps(), s.h()), eps);
  const double n = static_cast<double>(s.group().order());
  const double sum_d = static_cast<double>(sum_degrees(s.irreps()));
  const double mub_rhs = sum_d / n;
  const double delta1_rhs = static_cast<double>(params.delta1);
  const bool hypothesis = params.hypothesis_ok(k);
  const double delta2 = static_cast<double>(params.delta2(k));
  const double d_eps_term = 3.0 * k * to_long_double(Rational(params.d_epsilon, params.group_order));
  const auto& conj = s.conjugates();

  std::optional<LemmaResult> mub, delta1, xtv, thm, cor;
  auto keep_worst = [](std::optional<LemmaResult>& slot, LemmaResult r) {
    if (!slot || (slot->pass() && !r.pass()) || (slot->pass() == r.pass() && r.slack < slot->slack)) slot = std::move(r);
  };

  for (std::uint64_t seed : o.seeds) {
    check_simulation_cap(s, k);
    const KMeasurement m = KMeasurement::random(s, k, seed, o.kind);
    const std::string tag = "seed " + std::to_string(seed);
    const unsigned masks = 1u << k;
    // Per tuple: Plancherel-and-natural weighted sums.
    std::vector<std::vector<double>> mub_part(count), mu_part(count);
    std::vector<double> x2_part(count);
    parallel_for(count, [&](std::size_t id) {
      const RhoTuple rho = decode_tuple(s, k, id);
      const Frame& f = m.frames[id];
      const double d = static_cast<double>(f.dimension);
      const double p = plancherel_probability(s, rho);
      const TupleAction act(s, rho);
      mub_part[id].assign(masks, 0.0);
      mu_part[id].assign(conj.size(), 0.0);
      std::vector<double> x2_terms;
      for (std::size_t b = 0; b < f.size(); ++b) {
        const double w = p * f.weights[b] / d;
        const Eigen::VectorXcd vec = f.vectors.col(b);
        for (unsigned mask = 1; mask < masks; ++mask) {
          std::vector<double> v;
          for (Element g = 0; g < s.group().order(); ++g) v.push_back(std::norm(vec.dot(act.apply(mask, g, vec))));
          mub_part[id][mask] += w * pairwise_sum(v) / n;
        }
        std::vector<double> sq;
        for (std::size_t j = 0; j < conj.size(); ++j) {
          const double x = x_function(s, rho, vec, conj[j]);
          sq.push_back(x * x);
          mu_part[id][j] += w * std::abs(x);
        }
        x2_terms.push_back(w * pairwise_sum(sq) / static_cast<double>(conj.size()));
      }
      x2_part[id] = pairwise_sum(x2_terms);
    });
    for (unsigned mask = 1; mask < masks; ++mask) {
      std::vector<double> col(count);
      for (std::size_t id = 0; id < count; ++id) col[id] = mub_part[id][mask];
      keep_worst(mub, inequality("mubbound", pairwise_sum(col), mub_rhs, false, tag + ", I mask " + std::to_string(mask)));
    }
    keep_worst(delta1, inequality("delta1", pairwise_sum(x2_part), delta1_rhs, true, tag));

    if (!hypothesis) continue;
    const TvReport tv = avg_tv_over_conjugates(s, m);
    for (std::size_t j = 0; j < conj.size(); ++j) {
      std::vector<double> col(count);
      for (std::size_t id = 0; id < count; ++id) col[id] = mu_part[id][j];
      const double mu = pairwise_sum(col);
      const double rhs = std::ldexp(1.0, static_cast<int>(k)) * (1 + 2.0 * k * epsilon) * mu + 3.0 * k * epsilon + d_eps_term;
      keep_worst(xtv, inequality("Xtotvar", tv.l1[j], rhs, true, tag + ", conjugate " + s.group().format(conj[j])));
    }
    keep_worst(thm, inequality("avg-distance", tv.average_l1, delta2, false, tag + ", l1 distance averaged over g"));
    const double root = std::sqrt(o.states * delta2);
    std::size_t close = 0;
    for (double v : tv.l1) close += v <= root;
    const double fraction = static_cast<double>(close) / static_cast<double>(conj.size());
    LemmaResult c = inequality("sqrt-bound", tv.max_l1, root, false,
                               tag + ", t = " + std::to_string(o.states) + ", fraction within bound " +
                                   format_sig12(fraction) + " (needs >= " + format_sig12(1 - root) + ")");
    if (fraction < 1 - root) c.status = "fail";
    keep_worst(cor, c);
  }
  out.push_back(*mub);
  out.push_back(*delta1);
  const std::string why = "2k*eps = " + format_sig12(2.0 * k * epsilon) + " is not below 1";
  out.push_back(hypothesis ? *xtv : not_met("Xtotvar", why));
  out.push_back(hypothesis ? *thm : not_met("avg-distance", why));
  out.push_back(hypothesis ? *cor : not_met("sqrt-bound", why));
  return out;
}

std::vector<LemmaResult> facts_suite(const IrrepList& irreps, unsigned random_vectors, std::uint64_t seed) {
  std::vector<LemmaResult> out;
  const FiniteGroup& g = irreps.front().group();
  const double n = static_cast<double>(g.order());

  // E_g |<b|tau(g)|b>|^2 = 1/d_tau
  std::optional<LemmaResult> likemub;
  for (std::size_t t = 0; t < irreps.size(); ++t) {
    const auto& tau = irreps[t];
    for (unsigned v = 0; v < random_vectors; ++v) {
      const auto b = random_unit_vector(tau.degree(), vector_seed(seed, t, v));
      std::vector<double> terms;
      for (Element x = 0; x < g.order(); ++x) terms.push_back(std::norm(b.dot(tau.matrix(x) * b)));
      LemmaResult r = equality("likemub", pairwise_sum(terms) / n, 1.0 / static_cast<double>(tau.degree()), 1e-10,
                               "tau = " + tau.label());
      if (!likemub || r.slack > likemub->slack) likemub = r;
    }
  }
  out.push_back(*likemub);

  // E_b ||Pi_W b||^2 = dim W / dim V under the natural distribution.
  std::optional<LemmaResult> projection;
  for (unsigned v = 0; v < random_vectors; ++v) {
    const std::size_t d = std::max<std::size_t>(2, irreps[v % irreps.size()].degree() + v % 3);
    const std::size_t w = 1 + v % d;
    const auto frame = random_frame(d, mix_seed(seed, 1000 + v), v % 2 ? FrameKind::fused : FrameKind::basis);
    Eigen::MatrixXcd span = haar_unitary(d, mix_seed(seed, 2000 + v)).leftCols(w);
    std::vector<double> terms;
    for (std::size_t b = 0; b < frame.size(); ++b)
      terms.push_back(frame.weights[b] / static_cast<double>(d) * (span.adjoint() * frame.vectors.col(b)).squaredNorm());
    LemmaResult r = equality("projection-length", pairwise_sum(terms), static_cast<double>(w) / static_cast<double>(d),
                             1e-10, "dim V = " + std::to_string(d) + ", dim W = " + std::to_string(w));
    if (!projection || r.slack > projection->slack) projection = r;
  }
  out.push_back(*projection);

  // E_theta[a_tau / d_theta] = d_tau / |G| with theta Plancherel-distributed
  // and one identity factor appended.
  std::optional<LemmaResult> multiplicity;
  const std::size_t m = irreps.size();
  for (unsigned factors = 1; factors <= 2; ++factors) {
    const std::size_t tuples = factors == 1 ? m : m * m;
    for (std::size_t t = 0; t < m; ++t) {
      std::vector<double> terms(tuples);
      parallel_for(tuples, [&](std::size_t id) {
        FactorList theta;
        double p = 1;
        std::size_t rest = id;
        for (unsigned f = 0; f < factors; ++f) {
          const auto& rho = irreps[rest % m];
          rest /= m;
          const double d = static_cast<double>(rho.degree());
          p *= d * d / n;
          theta.push_back({rho, false});
        }
        theta.push_back({irreps.back(), true});
        const double a = clebsch_gordan_multiplicity(theta, irreps[t]);
        terms[id] = p * a / static_cast<double>(factor_degree(theta));
      });
      LemmaResult r = equality("expected-multiplicity", pairwise_sum(terms),
                               static_cast<double>(irreps[t].degree()) / n, 1e-10,
                               "tau = " + irreps[t].label() + ", " + std::to_string(factors) + " Plancherel factor(s)");
      if (!multiplicity || r.slack > multiplicity->slack) multiplicity = r;
    }
  }
  out.push_back(*multiplicity);
  return out;
}

}  // namespace hsp
