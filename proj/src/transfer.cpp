#include "hsp/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "hsp/coset.hpp"

namespace hsp {

namespace {

std::vector<double> spectrum(const Subgroup& h) {
  const Eigen::MatrixXd sigma = coset_state(h).real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma, Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.begin(), v.end());
  return v;
}

void require_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<Element>& map) {
  if (map.size() != from.order()) throw std::invalid_argument("map must cover every element");
  for (Element x = 0; x < from.order(); ++x) {
    if (map[x] >= to.order()) throw std::invalid_argument("map image out of range");
    for (Element y = 0; y < from.order(); ++y)
      if (map[from.compose(x, y)] != to.compose(map[x], map[y])) throw std::invalid_argument("map is not a homomorphism");
  }
}

}  // namespace

TransferReport verify_transfer_subgroup(const FiniteGroup& big, const FiniteGroup& small,
                                        const std::vector<Element>& embedding, const Subgroup& h) {
  require_homomorphism(small, big, embedding);
  std::vector<Element> image = embedding;
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end())
    throw std::invalid_argument("group is not embedded: map is not injective");
  std::vector<Element> hb;
  for (Element x : h.elements()) hb.push_back(embedding[x]);
  std::sort(hb.begin(), hb.end());
  const Subgroup h_big(big, hb);

  const std::vector<double> a = spectrum(h_big);
  const std::vector<double> b = spectrum(h);
  const std::size_t index = big.order() / small.order();
  std::vector<double> expected;
  for (std::size_t c = 0; c < index; ++c)
    for (double v : b) expected.push_back(v / static_cast<double>(index));
  std::sort(expected.begin(), expected.end());
  TransferReport r;
  r.mode = "subgroup";
  r.index = static_cast<double>(index);
  r.compared = a.size();
  if (a.size() != expected.size()) throw std::logic_error("spectrum sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i) r.max_error = std::max(r.max_error, std::abs(a[i] - expected[i]));
  r.detail = big.name() + " over " + small.name() + ", index " + std::to_string(index);
  return r;
}

TransferReport verify_transfer_quotient(const FiniteGroup& big, const FiniteGroup& quotient,
                                        const std::vector<Element>& projection, const Subgroup& h) {
  require_homomorphism(big, quotient, projection);
  std::vector<bool> hit(quotient.order(), false);
  for (Element y : projection) hit[y] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw std::invalid_argument("projection is not surjective");
  std::vector<Element> pre;
  for (Element x = 0; x < big.order(); ++x)
    if (h.contains(projection[x])) pre.push_back(x);
  const Subgroup h_big(big, pre);

  auto nonzero = [](std::vector<double> v) {
    std::erase_if(v, [](double x) { return std::abs(x) < 1e-12; });
    return v;
  };
  const std::vector<double> a = nonzero(spectrum(h_big));
  const std::vector<double> b = nonzero(spectrum(h));
  TransferReport r;
  r.mode = "quotient";
  r.compared = std::min(a.size(), b.size());
  r.max_error = a.size() == b.size() ? 0.0 : 1.0;
  for (std::size_t i = 0; i < r.compared; ++i) r.max_error = std::max(r.max_error, std::abs(a[i] - b[i]));
  r.detail = big.name() + " onto " + quotient.name() + ", kernel of order " +
             std::to_string(big.order() / quotient.order()) + ", " + std::to_string(a.size()) + " vs " +
             std::to_string(b.size()) + " nonzero eigenvalues";
  return r;
}

TransferReport transfer_wreath_in_symmetric(unsigned n) {
  const FiniteGroup w = make_wreath_s2(n);
  const FiniteGroup s = make_symmetric(2 * n);
  std::vector<Element> embedding(w.order());
  for (Element x = 0; x < w.order(); ++x) embedding[x] = symmetric_element(s, wreath_to_s2n(w, x));
  const Element h = wreath_swap(w);
  return verify_transfer_subgroup(s, w, embedding, Subgroup(w, {w.identity(), h}));
}

TransferReport transfer_sl2_to_psl2(unsigned q) {
  const FiniteGroup sl = make_sl2(q);
  const FiniteGroup psl = make_psl2(q);
  const Element h = involutions(psl).front();
  return verify_transfer_quotient(sl, psl, sl2_to_psl2_map(sl, psl), Subgroup(psl, {psl.identity(), h}));
}

}  // namespace hsp
