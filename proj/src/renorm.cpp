#include "qfconv/renorm.hpp"

#include <stdexcept>

namespace qfconv::renorm {

using laurent::pole_part;

LaurentSeries Character::operator()(const Tree& t) const {
  auto it = cache_->find(t.encoding());
  if (it != cache_->end()) return it->second;
  LaurentSeries v = on_tree_(t);
  cache_->emplace(t.encoding(), v);
  return v;
}

LaurentSeries Character::operator()(const Forest& f) const {
  LaurentSeries v = LaurentSeries::one();
  for (const Tree& t : f.trees()) v = v * (*this)(t);
  return v;
}

LaurentSeries Character::operator()(const LinComb& x) const {
  LaurentSeries v;
  for (const auto& [f, c] : x.terms()) v += c * (*this)(f);
  return v;
}

LaurentSeries toy_amplitude(const Tree& t, const ToyModelParams& params) {
  const int s = t.size();
  if (params.order < s)
    throw std::domain_error("toy_amplitude: truncation order below tree size");
  // a^{s*eps} expanded far enough that dividing by eps^s still resolves
  // coefficients up to params.order.
  LaurentSeries scale = laurent::exp_eps_log(Rat(s), params.order + s);
  const Rat prefactor = Rat(1) / Rat(tree_factorial(t));
  return prefactor * (scale * LaurentSeries(Poly(Rat(1)), -s));
}

Character toy_feynman_rules(const ToyModelParams& params) {
  return Character(
      [params](const Tree& t) { return toy_amplitude(t, params); });
}

Bphz::Bphz(Character feynman) : f_(std::move(feynman)) {}

LaurentSeries Bphz::prepare(const Tree& t) {
  LaurentSeries p = f_(t);
  for (const auto& [pair, c] : hopf::coproduct(t).terms()) {
    if (pair.first.empty() || pair.second.empty()) continue;
    p += c * (counterterm(pair.first) * f_(pair.second));
  }
  return p;
}

LaurentSeries Bphz::counterterm(const Tree& t) {
  auto it = c_cache_.find(t.encoding());
  if (it != c_cache_.end()) return it->second;
  LaurentSeries c = -pole_part(prepare(t));
  c_cache_.emplace(t.encoding(), c);
  return c;
}

LaurentSeries Bphz::counterterm(const Forest& f) {
  LaurentSeries v = LaurentSeries::one();
  for (const Tree& t : f.trees()) v = v * counterterm(t);
  return v;
}

LaurentSeries Bphz::renormalize(const Tree& t) {
  return prepare(t) + counterterm(t);
}

LaurentSeries Bphz::renormalize(const Forest& f) {
  LaurentSeries v = LaurentSeries::one();
  for (const Tree& t : f.trees()) v = v * renormalize(t);
  return v;
}

bool Bphz::check_convolution_identity(const Forest& f) {
  LaurentSeries via_convolution = hopf::convolve<LaurentSeries>(
      [this](const Forest& g) { return counterterm(g); },
      [this](const Forest& g) { return f_(g); }, f);
  return via_convolution.agrees_with(renormalize(f));
}

LaurentSeries prepare(const Tree& t, const Character& feynman) {
  return Bphz(feynman).prepare(t);
}

LaurentSeries counterterm(const Tree& t, const Character& feynman) {
  return Bphz(feynman).counterterm(t);
}

LaurentSeries renormalize(const Tree& t, const Character& feynman) {
  return Bphz(feynman).renormalize(t);
}

bool check_convolution_identity(const Forest& f, const Character& feynman) {
  return Bphz(feynman).check_convolution_identity(f);
}

WeightedSum forest_weights(int max_nodes) {
  WeightedSum w;
  for (const Forest& f : hopf::all_forests(max_nodes))
    w.terms.push_back(
        {f, f.size(), Rat(1) / Rat(forest_automorphisms(f))});
  return w;
}

ZRenReport z_ren(const Rat& g, int max_nodes, const Character& feynman,
                 const ToyModelParams& params) {
  if (max_nodes < 0 || max_nodes > 6)
    throw std::invalid_argument("z_ren: max_nodes must be in [0, 6]");
  Bphz engine(feynman);
  ZRenReport rep;
  LaurentSeries z;
  Rat g_power = 1;
  for (const auto& term : forest_weights(max_nodes).terms) {
    g_power = 1;
    for (int k = 0; k < term.coupling_power; ++k) g_power *= g;
    z += (g_power * term.weight) * engine.renormalize(term.forest);
  }
  rep.series = z;
  rep.finite_part = z.coeff(0);
  rep.finite_part_value = rep.finite_part.eval(params.scale_log);
  if (rep.finite_part_value != 0)
    rep.normalization = Rat(1) / rep.finite_part_value;
  rep.pole_free = z.pole_free();
  return rep;
}

}  // namespace qfconv::renorm
