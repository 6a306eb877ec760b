#pragma once

#include "ordlogic/order_ops.hpp"
#include "ordlogic/poset.hpp"
#include "ordlogic/rational.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ordlogic {

// Longest-chain heights (edge counts); works without declared bounds,
// counting from the minimal elements.
std::vector<int> heights(const Poset& p);

struct HeightProfile {
  std::vector<int> ht;     // = b(x), longest chain up to x
  std::vector<int> t;      // longest chain from x to the top
  std::vector<Rat> rht;    // ht(x) / ht(top)
  std::vector<Rat> ratio;  // b / (b + t); 0 for an isolated point
  std::vector<Rat> pr;     // comparable-count / |X|, x counted as comparable to itself
  int ht_top = 0;
};

// Requires a bounded poset (rht and t need the bounds).
HeightProfile height_profile(const Poset& p);

ElemSet maxht_set(const Poset& p, const ElemSet& xs);
ElemSet minht_set(const Poset& p, const ElemSet& xs);

enum class DdOp { Meet2p, Join2p, Neg2p };

// The double-primed operators: maxht/minht filters on the plain results.
ElemSet dd_op(const Poset& p, const ElemSet& xs, const ElemSet* ys, DdOp which);

enum class ProbMode { MaxHt, Sum };

// MaxHt: ht(X)/ht(top).  Sum: sum of member heights over the total.
Rat prob(const Poset& p, const ElemSet& xs, ProbMode mode);

enum class IndMode { Product, Conditional };

struct IndependenceVerdict {
  bool independent = false;
  Rat p_a, p_b, p_ab;
};

IndependenceVerdict independence(const Poset& p, const ElemSet& a, const ElemSet& b,
                                 IndMode mode);

// Pairs ordered by strict value-sum comparison. Bounds are declared when
// the sum order has a unique minimum / maximum.
Poset product_order(const Poset& p1, const Poset& p2,
                    const std::map<std::string, Rat>& values1,
                    const std::map<std::string, Rat>& values2);

// ---------------------------------------------------------------------------
// Size by translation to sets

struct SizeTranslation {
  std::vector<std::vector<std::string>> tokens;  // per element, sorted
  std::vector<std::string> universe;
  int card(int elem) const { return static_cast<int>(tokens[elem].size()); }
  Rat relative_size(int elem) const;
};

// Bottom-up construction; strictly order-embedding on every input:
// x < y gives a strict token-set inclusion, incomparable elements get
// mutually non-included token sets.
SizeTranslation size_translation(const Poset& p);

// ---------------------------------------------------------------------------
// Core of a set

struct CoreParams {
  std::vector<std::string> universe;
  std::function<Rat(const std::string&, const std::string&)> distance;
  Rat m = Rat(2);
};

struct CoreResult {
  std::set<std::string> core;
  std::map<std::string, Rat> depth;
  Rat set_depth;
  bool degenerate_singleton = false;
};

CoreResult core(const CoreParams& params, const std::set<std::string>& x);

struct CoreLayers {
  std::vector<std::set<std::string>> layers;  // peeled outside-in
  std::set<std::string> core;                 // union of the inner half
};

CoreLayers core_layers(const CoreParams& params, const std::set<std::string>& x);

// ---------------------------------------------------------------------------
// Set means

struct MeanRow {
  std::set<std::string> z;
  std::vector<int> interior;  // card(Z - A_i)
  std::vector<int> exterior;  // card(A_i - Z)
};

MeanRow score_candidate(const std::vector<std::set<std::string>>& sets,
                        const std::set<std::string>& z);

enum class MeanScheme { InteriorLex, ExteriorLex, Weighted, Squared, Equalized };

struct MeanOptions {
  Rat w_interior = Rat(1);
  Rat w_exterior = Rat(1);
  std::vector<Rat> set_weights;  // empty = all 1
};

// Scores every candidate Z inside the union of the input sets and
// returns the optima (all ties, sorted).
std::vector<MeanRow> set_mean(const std::vector<std::set<std::string>>& sets,
                              MeanScheme scheme, const MeanOptions& opt = {});

// Distance-based generalization of symmetric revision to several sets.
std::set<std::string> revision_mean(
    const std::vector<std::set<std::string>>& sets,
    const std::function<Rat(const std::string&, const std::string&)>& distance);

// ---------------------------------------------------------------------------
// Similarity and uncertainty

// Longest common bottom-chain prefix of x and y.
int similarity(const Poset& p, int x, int y);
// Number of elements incomparable with x.
int uncertainty(const Poset& p, int x);
// card{y : y < x}
int downset_size(const Poset& p, int x);

}  // namespace ordlogic
