#include "hsp/group.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "group_model.hpp"
#include "hsp/finite_field.hpp"

namespace hsp {

using detail::GroupModel;

namespace {

class SymmetricModel final : public GroupModel {
 public:
  explicit SymmetricModel(unsigned n) : n_(n) {
    const auto count = factorial(n);
    perms_.reserve(count);
    for (std::uint64_t r = 0; r < count; ++r) perms_.push_back(lex_unrank(r, n));
  }
  std::size_t order() const override { return perms_.size(); }
  Element compose(Element x, Element y) const override {
    return static_cast<Element>(lex_rank(hsp::compose(perms_[x], perms_[y])));
  }
  Element inverse(Element x) const override { return static_cast<Element>(lex_rank(hsp::inverse(perms_[x]))); }
  std::string format(Element x) const override { return to_cycle_string(perms_[x]); }
  std::vector<Element> generators() const override {
    if (n_ < 2) return {};
    Permutation transposition = identity_permutation(n_);
    std::swap(transposition[0], transposition[1]);
    Permutation cycle(n_);
    for (unsigned i = 0; i < n_; ++i) cycle[i] = static_cast<std::uint8_t>((i + 1) % n_);
    return {static_cast<Element>(lex_rank(transposition)), static_cast<Element>(lex_rank(cycle))};
  }
  GroupKind kind() const override { return {GroupFamily::symmetric, n_}; }
  std::string name() const override { return "s" + std::to_string(n_); }

  unsigned degree() const { return n_; }
  const Permutation& permutation(Element x) const { return perms_[x]; }

 private:
  unsigned n_;
  std::vector<Permutation> perms_;
};

class WreathModel final : public GroupModel {
 public:
  explicit WreathModel(unsigned n) : n_(n), base_(make_symmetric(n)), m_(static_cast<Element>(base_.order())) {}

  std::size_t order() const override { return 2 * std::size_t{m_} * m_; }

  struct Parts {
    Element pi, sigma;
    int b;
  };
  Parts split(Element x) const { return {(x % (m_ * m_)) / m_, x % m_, static_cast<int>(x / (m_ * m_))}; }
  Element join(Element pi, Element sigma, int b) const {
    return static_cast<Element>(b) * m_ * m_ + pi * m_ + sigma;
  }

  // (pi1, s1, 0)(pi2, s2, b) = (pi1 pi2, s1 s2, b); (pi1, s1, 1)(pi2, s2, b) = (pi1 s2, s1 pi2, 1 + b).
  Element compose(Element x, Element y) const override {
    const auto a = split(x);
    const auto c = split(y);
    if (a.b == 0) return join(base_.compose(a.pi, c.pi), base_.compose(a.sigma, c.sigma), c.b);
    return join(base_.compose(a.pi, c.sigma), base_.compose(a.sigma, c.pi), 1 - c.b);
  }
  Element inverse(Element x) const override {
    const auto a = split(x);
    if (a.b == 0) return join(base_.inverse(a.pi), base_.inverse(a.sigma), 0);
    return join(base_.inverse(a.sigma), base_.inverse(a.pi), 1);
  }
  std::string format(Element x) const override {
    const auto a = split(x);
    return "(" + base_.format(a.pi) + "|" + base_.format(a.sigma) + "|" + std::to_string(a.b) + ")";
  }
  std::vector<Element> generators() const override {
    std::vector<Element> gens;
    for (Element s : base_.generators()) {
      gens.push_back(join(s, 0, 0));
      gens.push_back(join(0, s, 0));
    }
    gens.push_back(join(0, 0, 1));
    return gens;
  }
  GroupKind kind() const override { return {GroupFamily::wreath, n_}; }
  std::string name() const override { return "wreath:" + std::to_string(n_); }

  unsigned n() const { return n_; }
  const FiniteGroup& base() const { return base_; }

 private:
  unsigned n_;
  FiniteGroup base_;
  Element m_;
};

class CyclicModel final : public GroupModel {
 public:
  explicit CyclicModel(unsigned n) : n_(n) {}
  std::size_t order() const override { return n_; }
  Element compose(Element x, Element y) const override { return (x + y) % n_; }
  Element inverse(Element x) const override { return (n_ - x) % n_; }
  std::string format(Element x) const override { return x == 0 ? "e" : "g^" + std::to_string(x); }
  std::vector<Element> generators() const override {
    if (n_ == 1) return {};
    return {1};
  }
  GroupKind kind() const override { return {GroupFamily::cyclic, n_}; }
  std::string name() const override { return "cyclic:" + std::to_string(n_); }

 private:
  unsigned n_;
};

// D_n of order 2n; element r^a s^b has id a + n b.
class DihedralModel final : public GroupModel {
 public:
  explicit DihedralModel(unsigned n) : n_(n) {}
  std::size_t order() const override { return 2 * std::size_t{n_}; }
  Element compose(Element x, Element y) const override {
    const Element a1 = x % n_, b1 = x / n_, a2 = y % n_, b2 = y / n_;
    const Element a = b1 ? (a1 + n_ - a2) % n_ : (a1 + a2) % n_;
    return a + n_ * (b1 ^ b2);
  }
  Element inverse(Element x) const override {
    const Element a = x % n_, b = x / n_;
    return b ? x : (n_ - a) % n_;
  }
  std::string format(Element x) const override {
    const Element a = x % n_, b = x / n_;
    if (a == 0 && b == 0) return "e";
    std::string s = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    if (b) s += s.empty() ? "s" : " s";
    return s;
  }
  std::vector<Element> generators() const override {
    std::vector<Element> gens;
    if (n_ > 1) gens.push_back(1);
    gens.push_back(n_);
    return gens;
  }
  GroupKind kind() const override { return {GroupFamily::dihedral, n_}; }
  std::string name() const override { return "dihedral:" + std::to_string(n_); }

 private:
  unsigned n_;
};

// A permutation group given by an explicit sorted element list, each element
// carrying the 2x2 matrix it came from.
class LinearModel final : public GroupModel {
 public:
  LinearModel(GroupFamily family, unsigned q) : family_(family), q_(q), field_(q) {
    std::map<Permutation, std::array<unsigned, 4>> found;
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b)
        for (unsigned c = 0; c < q; ++c)
          for (unsigned d = 0; d < q; ++d) {
            if (field_.sub(field_.mul(a, d), field_.mul(b, c)) != 1) continue;
            const std::array<unsigned, 4> m{a, b, c, d};
            found.emplace(action(m), m);  // keeps the lexicographically first matrix
          }
    for (auto& [perm, m] : found) {
      perms_.push_back(perm);
      matrices_.push_back(m);
    }
  }

  Permutation action(const std::array<unsigned, 4>& m) const {
    const auto& f = field_;
    if (family_ == GroupFamily::psl2) {
      // Moebius action on the projective line; point q is infinity.
      Permutation p(q_ + 1);
      for (unsigned z = 0; z <= q_; ++z) {
        unsigned image;
        if (z == q_) {
          image = m[2] == 0 ? q_ : f.mul(m[0], f.inv(m[2]));
        } else {
          const unsigned num = f.add(f.mul(m[0], z), m[1]);
          const unsigned den = f.add(f.mul(m[2], z), m[3]);
          image = den == 0 ? q_ : f.mul(num, f.inv(den));
        }
        p[z] = static_cast<std::uint8_t>(image);
      }
      return p;
    }
    // Linear action on the nonzero vectors (x, y), encoded as x q + y - 1.
    Permutation p(q_ * q_ - 1);
    for (unsigned x = 0; x < q_; ++x)
      for (unsigned y = 0; y < q_; ++y) {
        if (x == 0 && y == 0) continue;
        const unsigned nx = f.add(f.mul(m[0], x), f.mul(m[1], y));
        const unsigned ny = f.add(f.mul(m[2], x), f.mul(m[3], y));
        p[x * q_ + y - 1] = static_cast<std::uint8_t>(nx * q_ + ny - 1);
      }
    return p;
  }

  Element lookup(const Permutation& p) const {
    const auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
    if (it == perms_.end() || *it != p) throw std::logic_error("permutation outside the group");
    return static_cast<Element>(it - perms_.begin());
  }

  std::size_t order() const override { return perms_.size(); }
  Element compose(Element x, Element y) const override { return lookup(hsp::compose(perms_[x], perms_[y])); }
  Element inverse(Element x) const override { return lookup(hsp::inverse(perms_[x])); }
  std::string format(Element x) const override {
    const auto& m = matrices_[x];
    return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) + "," +
           std::to_string(m[3]) + "]]";
  }
  std::vector<Element> generators() const override {
    std::vector<Element> gens;
    for (unsigned a = 1; a < q_; ++a) {
      gens.push_back(lookup(action({1, a, 0, 1})));
      gens.push_back(lookup(action({1, 0, a, 1})));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
  }
  GroupKind kind() const override { return {family_, q_}; }
  std::string name() const override {
    return (family_ == GroupFamily::psl2 ? "psl2:" : "sl2:") + std::to_string(q_);
  }

  const std::array<unsigned, 4>& matrix(Element x) const { return matrices_[x]; }
  unsigned q() const { return q_; }

 private:
  GroupFamily family_;
  unsigned q_;
  FiniteField field_;
  std::vector<Permutation> perms_;
  std::vector<std::array<unsigned, 4>> matrices_;
};

class DirectPowerModel final : public GroupModel {
 public:
  DirectPowerModel(FiniteGroup base, unsigned k) : base_(std::move(base)), k_(k) {
    order_ = 1;
    for (unsigned i = 0; i < k; ++i) order_ *= base_.order();
  }
  std::vector<Element> decode(Element x) const {
    std::vector<Element> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
      c[i] = static_cast<Element>(x % base_.order());
      x = static_cast<Element>(x / base_.order());
    }
    return c;
  }
  Element encode(const std::vector<Element>& c) const {
    std::size_t x = 0;
    for (unsigned i = k_; i-- > 0;) x = x * base_.order() + c[i];
    return static_cast<Element>(x);
  }
  std::size_t order() const override { return order_; }
  Element compose(Element x, Element y) const override {
    auto a = decode(x);
    const auto b = decode(y);
    for (unsigned i = 0; i < k_; ++i) a[i] = base_.compose(a[i], b[i]);
    return encode(a);
  }
  Element inverse(Element x) const override {
    auto a = decode(x);
    for (auto& c : a) c = base_.inverse(c);
    return encode(a);
  }
  std::string format(Element x) const override {
    const auto a = decode(x);
    std::string s = "(";
    for (unsigned i = 0; i < k_; ++i) s += (i ? ", " : "") + base_.format(a[i]);
    return s + ")";
  }
  std::vector<Element> generators() const override {
    std::vector<Element> gens;
    for (unsigned i = 0; i < k_; ++i)
      for (Element s : base_.generators()) {
        std::vector<Element> c(k_, 0);
        c[i] = s;
        gens.push_back(encode(c));
      }
    return gens;
  }
  GroupKind kind() const override { return {GroupFamily::direct_power, k_}; }
  std::string name() const override { return "power:" + base_.name() + "^" + std::to_string(k_); }

  const FiniteGroup& base() const { return base_; }

 private:
  FiniteGroup base_;
  unsigned k_;
  std::size_t order_;
};

template <class Model>
const Model& model_as(const FiniteGroup& g, const char* what) {
  const auto* m = dynamic_cast<const Model*>(&g.model());
  if (m == nullptr) throw std::invalid_argument(g.name() + " is not a " + what + " group");
  return *m;
}

}  // namespace

// --- FiniteGroup ------------------------------------------------------------

FiniteGroup::FiniteGroup(std::shared_ptr<const GroupModel> model)
    : model_(std::move(model)), order_(model_->order()) {
  inverse_.resize(order_);
  for (std::size_t x = 0; x < order_; ++x) inverse_[x] = model_->inverse(static_cast<Element>(x));
  if (order_ <= kTableLimit) {
    table_.resize(order_ * order_);
    for (std::size_t x = 0; x < order_; ++x)
      for (std::size_t y = 0; y < order_; ++y)
        table_[x * order_ + y] = model_->compose(static_cast<Element>(x), static_cast<Element>(y));
  }
  generators_ = model_->generators();
}

Element FiniteGroup::compose(Element x, Element y) const {
  if (!table_.empty()) return table_[std::size_t{x} * order_ + y];
  return model_->compose(x, y);
}

Element FiniteGroup::power(Element x, std::uint64_t e) const {
  Element result = identity();
  Element base = x;
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

unsigned FiniteGroup::element_order(Element x) const {
  unsigned k = 1;
  for (Element y = x; y != identity(); y = compose(y, x)) ++k;
  return k;
}

GroupKind FiniteGroup::kind() const { return model_->kind(); }
std::string FiniteGroup::name() const { return model_->name(); }
std::string FiniteGroup::format(Element x) const { return model_->format(x); }

// --- constructors -------------------------------------------------------------

FiniteGroup make_symmetric(unsigned n) {
  if (n < 1 || n > 8) throw std::invalid_argument("symmetric group degree " + std::to_string(n) + " outside 1..8");
  return FiniteGroup(std::make_shared<SymmetricModel>(n));
}

FiniteGroup make_wreath_s2(unsigned n) {
  if (n < 2 || n > 5) throw std::invalid_argument("wreath product degree " + std::to_string(n) + " outside 2..5");
  return FiniteGroup(std::make_shared<WreathModel>(n));
}

FiniteGroup make_cyclic(unsigned n) {
  if (n < 1 || n > 1000000) throw std::invalid_argument("cyclic order " + std::to_string(n) + " outside 1..10^6");
  return FiniteGroup(std::make_shared<CyclicModel>(n));
}

FiniteGroup make_dihedral(unsigned n) {
  if (n < 1 || n > 500000) throw std::invalid_argument("dihedral parameter " + std::to_string(n) + " outside 1..5*10^5");
  return FiniteGroup(std::make_shared<DihedralModel>(n));
}

namespace {
void check_linear_q(unsigned q) {
  const auto pp = prime_power_decomposition(q);
  if (pp.m == 0 || q < 2 || q > 16)
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a supported prime power (2..16)");
  if (pp.m > 1 && !(q == 4 || q == 8 || q == 9 || q == 16))
    throw std::invalid_argument("q = " + std::to_string(q) + " has no fixed field polynomial");
}
}  // namespace

FiniteGroup make_psl2(unsigned q) {
  check_linear_q(q);
  return FiniteGroup(std::make_shared<LinearModel>(GroupFamily::psl2, q));
}

FiniteGroup make_sl2(unsigned q) {
  check_linear_q(q);
  return FiniteGroup(std::make_shared<LinearModel>(GroupFamily::sl2, q));
}

FiniteGroup make_direct_power(const FiniteGroup& base, unsigned k) {
  if (k < 1) throw std::invalid_argument("direct power exponent must be >= 1");
  long double order = 1;
  for (unsigned i = 0; i < k; ++i) order *= static_cast<long double>(base.order());
  if (order > 1e6L)
    throw std::length_error("order overflow: " + base.name() + "^" + std::to_string(k) + " exceeds 10^6 elements");
  return FiniteGroup(std::make_shared<DirectPowerModel>(base, k));
}

// --- Subgroup -------------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Element x : elements_)
    if (x >= parent_.order()) throw std::invalid_argument("subgroup element outside the parent group");
  if (!contains(parent_.identity())) throw std::invalid_argument("subgroup does not contain the identity");
  for (Element x : elements_) {
    if (!contains(parent_.inverse(x))) throw std::invalid_argument("subgroup not closed under inverse");
    for (Element y : elements_)
      if (!contains(parent_.compose(x, y))) throw std::invalid_argument("subgroup not closed under composition");
  }
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup(g, {g.identity()}); }

Subgroup Subgroup::whole(const FiniteGroup& g) {
  Subgroup h = Subgroup::trivial(g);
  h.elements_.resize(g.order());
  std::iota(h.elements_.begin(), h.elements_.end(), Element{0});
  return h;
}

Subgroup Subgroup::generated_by(const FiniteGroup& g, const std::vector<Element>& generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Element s : generators) {
      const Element y = g.compose(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  // In a finite group, closure under right multiplication by the generators is already a subgroup.
  Subgroup h = Subgroup::trivial(g);
  std::sort(members.begin(), members.end());
  h.elements_ = std::move(members);
  return h;
}

bool Subgroup::contains(Element x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

bool Subgroup::is_normal() const {
  for (Element s : parent_.generators())
    for (Element x : elements_)
      if (!contains(parent_.conjugate(s, x))) return false;
  return true;
}

// --- queries ----------------------------------------------------------------------

std::vector<Element> conjugacy_class(const FiniteGroup& g, Element x) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> orbit{x};
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (Element s : g.generators()) {
      const Element y = g.conjugate(s, orbit[i]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<ConjugacyClass> classes;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    auto members = conjugacy_class(g, x);
    for (Element y : members) seen[y] = true;
    classes.push_back({members.front(), std::move(members)});
  }
  std::stable_sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.representative < b.representative;
  });
  return classes;
}

std::vector<std::size_t> class_index_map(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes) {
  std::vector<std::size_t> index(g.order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Element x : classes[c].members) index[x] = c;
  return index;
}

Subgroup centralizer(const FiniteGroup& g, Element x) {
  std::vector<Element> members;
  for (Element c = 0; c < g.order(); ++c)
    if (g.compose(c, x) == g.compose(x, c)) members.push_back(c);
  return Subgroup::generated_by(g, members);
}

Subgroup conjugate_subgroup(const Subgroup& h, Element g) {
  const auto& parent = h.parent();
  std::vector<Element> members;
  members.reserve(h.order());
  for (Element x : h.elements()) members.push_back(parent.conjugate(g, x));
  return Subgroup(parent, std::move(members));
}

std::vector<Element> involutions(const FiniteGroup& g) {
  std::vector<Element> out;
  for (Element x = 1; x < g.order(); ++x)
    if (g.compose(x, x) == g.identity()) out.push_back(x);
  return out;
}

bool is_central(const FiniteGroup& g, Element x) {
  for (Element s : g.generators())
    if (g.compose(s, x) != g.compose(x, s)) return false;
  return true;
}

Element default_involution(const FiniteGroup& g) {
  const auto kind = g.kind();
  if (kind.family == GroupFamily::wreath) return wreath_swap(g);
  if (kind.family == GroupFamily::dihedral) return static_cast<Element>(kind.param);
  const auto invs = involutions(g);
  if (invs.empty()) throw std::invalid_argument(g.name() + " has no involution");
  for (Element x : invs)
    if (!is_central(g, x)) return x;
  return invs.front();
}

// --- decodings ------------------------------------------------------------------------

Permutation symmetric_permutation(const FiniteGroup& g, Element x) {
  return model_as<SymmetricModel>(g, "symmetric").permutation(x);
}

Element symmetric_element(const FiniteGroup& g, const Permutation& p) {
  const auto& m = model_as<SymmetricModel>(g, "symmetric");
  if (p.size() != m.degree()) throw std::invalid_argument("permutation degree mismatch");
  return static_cast<Element>(lex_rank(p));
}

WreathTriple wreath_decode(const FiniteGroup& g, Element x) {
  const auto& m = model_as<WreathModel>(g, "wreath");
  const auto parts = m.split(x);
  return {symmetric_permutation(m.base(), parts.pi), symmetric_permutation(m.base(), parts.sigma), parts.b};
}

Element wreath_encode(const FiniteGroup& g, const WreathTriple& t) {
  const auto& m = model_as<WreathModel>(g, "wreath");
  if (t.b != 0 && t.b != 1) throw std::invalid_argument("wreath swap bit must be 0 or 1");
  return m.join(symmetric_element(m.base(), t.pi), symmetric_element(m.base(), t.sigma), t.b);
}

Element wreath_swap(const FiniteGroup& g) {
  const auto& m = model_as<WreathModel>(g, "wreath");
  return m.join(0, 0, 1);
}

Permutation wreath_to_s2n(const FiniteGroup& g, Element x) {
  const auto& m = model_as<WreathModel>(g, "wreath");
  const unsigned n = m.n();
  const auto t = wreath_decode(g, x);
  Permutation diag(2 * n);
  for (unsigned i = 0; i < n; ++i) {
    diag[i] = t.pi[i];
    diag[n + i] = static_cast<std::uint8_t>(n + t.sigma[i]);
  }
  if (t.b == 0) return diag;
  Permutation swap(2 * n);
  for (unsigned i = 0; i < n; ++i) {
    swap[i] = static_cast<std::uint8_t>(n + i);
    swap[n + i] = static_cast<std::uint8_t>(i);
  }
  return compose(diag, swap);
}

FiniteGroup wreath_base(const FiniteGroup& g) { return model_as<WreathModel>(g, "wreath").base(); }

std::array<unsigned, 4> linear_matrix(const FiniteGroup& g, Element x) {
  return model_as<LinearModel>(g, "linear").matrix(x);
}

Element linear_element(const FiniteGroup& g, const std::array<unsigned, 4>& m) {
  const auto& model = model_as<LinearModel>(g, "linear");
  for (unsigned v : m)
    if (v >= model.q()) throw std::invalid_argument("matrix entry outside F_q");
  return model.lookup(model.action(m));
}

std::vector<Element> sl2_to_psl2_map(const FiniteGroup& sl, const FiniteGroup& psl) {
  if (sl.kind().family != GroupFamily::sl2 || psl.kind().family != GroupFamily::psl2 ||
      sl.kind().param != psl.kind().param)
    throw std::invalid_argument("sl2_to_psl2_map needs sl2:q and psl2:q with the same q");
  std::vector<Element> map(sl.order());
  for (Element x = 0; x < sl.order(); ++x) map[x] = linear_element(psl, linear_matrix(sl, x));
  return map;
}

FiniteGroup power_base(const FiniteGroup& g) { return model_as<DirectPowerModel>(g, "direct power").base(); }

std::vector<Element> power_decode(const FiniteGroup& g, Element x) {
  return model_as<DirectPowerModel>(g, "direct power").decode(x);
}

Element power_encode(const FiniteGroup& g, const std::vector<Element>& coords) {
  return model_as<DirectPowerModel>(g, "direct power").encode(coords);
}

namespace {
std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}
}  // namespace

Element parse_element(const FiniteGroup& g, const std::string& raw) {
  const std::string text = trim(raw);
  if (!text.empty() && text[0] == '#') {
    std::size_t used = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(text.substr(1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad element id '" + text + "'");
    }
    if (used + 1 != text.size() || id >= g.order())
      throw std::invalid_argument("element id '" + text + "' outside 0.." + std::to_string(g.order() - 1));
    return static_cast<Element>(id);
  }
  switch (g.kind().family) {
    case GroupFamily::symmetric:
      return symmetric_element(g, parse_cycles(text, g.kind().param));
    case GroupFamily::wreath: {
      if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw std::invalid_argument("wreath element must look like (pi|sigma|b), got '" + text + "'");
      const std::string body = text.substr(1, text.size() - 2);
      const auto p1 = body.find('|');
      const auto p2 = body.rfind('|');
      if (p1 == std::string::npos || p1 == p2) throw std::invalid_argument("wreath element needs two '|' in '" + text + "'");
      const unsigned n = g.kind().param;
      const std::string bit = trim(body.substr(p2 + 1));
      if (bit != "0" && bit != "1") throw std::invalid_argument("wreath swap bit '" + bit + "' must be 0 or 1");
      return wreath_encode(g, {parse_cycles(body.substr(0, p1), n), parse_cycles(body.substr(p1 + 1, p2 - p1 - 1), n),
                               bit == "1" ? 1 : 0});
    }
    case GroupFamily::psl2:
    case GroupFamily::sl2: {
      std::array<unsigned, 4> m{};
      char tail = 0;
      if (std::sscanf(text.c_str(), " [ [ %u , %u ] , [ %u , %u ] ]%c", &m[0], &m[1], &m[2], &m[3], &tail) != 4)
        throw std::invalid_argument("matrix element must look like [[a,b],[c,d]], got '" + text + "'");
      return linear_element(g, m);
    }
    default:
      throw std::invalid_argument("use '#<id>' to name elements of " + g.name() + ", got '" + text + "'");
  }
}

}  // namespace hsp
