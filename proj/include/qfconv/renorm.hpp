#pragma once

#include "qfconv/hopf.hpp"
#include "qfconv/laurent.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace qfconv::renorm {

using hopf::Forest;
using hopf::LinComb;
using hopf::Tree;
using laurent::LaurentSeries;

struct ToyModelParams {
  // Evaluation value for the formal symbol L = ln a in numeric reports.
  Rat scale_log = 1;
  // Highest tracked eps exponent of amplitude tails.
  int order = 6;
};

// Multiplicative linear map H -> Laurent series, defined by its value on
// trees. Memoizes per instance; confine one instance to one thread.
class Character {
 public:
  explicit Character(std::function<LaurentSeries(const Tree&)> on_tree)
      : on_tree_(std::move(on_tree)),
        cache_(std::make_shared<std::map<std::string, LaurentSeries>>()) {}

  LaurentSeries operator()(const Tree& t) const;
  LaurentSeries operator()(const Forest& f) const;
  LaurentSeries operator()(const LinComb& x) const;

 private:
  std::function<LaurentSeries(const Tree&)> on_tree_;
  std::shared_ptr<std::map<std::string, LaurentSeries>> cache_;
};

// F(t) = prod over vertices v of a^eps / (w(v) eps), with w(v) the size of
// the subtree rooted at v; i.e. a^{size*eps} / (t! eps^size).
LaurentSeries toy_amplitude(const Tree& t, const ToyModelParams& params);
Character toy_feynman_rules(const ToyModelParams& params);

// Subtraction engine for a fixed Feynman-rules character.
class Bphz {
 public:
  explicit Bphz(Character feynman);

  const Character& feynman() const { return f_; }
  // P(t) = F(t) + sum over proper cuts C(branches) F(trunk).
  LaurentSeries prepare(const Tree& t);
  // C(t) = -T(P(t)); multiplicative on forests.
  LaurentSeries counterterm(const Tree& t);
  LaurentSeries counterterm(const Forest& f);
  // R(t) = P(t) + C(t); multiplicative on forests.
  LaurentSeries renormalize(const Tree& t);
  LaurentSeries renormalize(const Forest& f);
  // R == C*F checked coefficient-wise over the common window.
  bool check_convolution_identity(const Forest& f);

 private:
  Character f_;
  std::map<std::string, LaurentSeries> c_cache_;
};

// Convenience wrappers building a one-shot engine.
LaurentSeries prepare(const Tree& t, const Character& feynman);
LaurentSeries counterterm(const Tree& t, const Character& feynman);
LaurentSeries renormalize(const Tree& t, const Character& feynman);
bool check_convolution_identity(const Forest& f, const Character& feynman);

// g^{nodes} / |Aut| per forest, up to max_nodes total vertices.
struct WeightedSum {
  struct Term {
    Forest forest;
    int coupling_power = 0;
    Rat weight;  // 1/|Aut|
  };
  std::vector<Term> terms;
};
WeightedSum forest_weights(int max_nodes);

struct ZRenReport {
  LaurentSeries series;      // sum of g^{|f|} R(f)/|Autف(f)|
  Poly finite_part;          // coefficient of eps^0
  Rat finite_part_value;     // finite part at L = scale_log
  std::optional<Rat> normalization;  // 1/finite_part_value when nonzero
  bool pole_free = false;
};
// Truncated renormalized partition sum over forests with <= max_nodes nodes.
ZRenReport z_ren(const Rat& g, int max_nodes, const Character& feynman,
                 const ToyModelParams& params);

}  // namespace qfconv::renorm
