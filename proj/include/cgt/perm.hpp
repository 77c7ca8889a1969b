#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cgt/error.hpp"

namespace cgt::perm {

using Point = uint32_t;

/// Permutation of {0..n-1}, stored by images.  Composition is left-to-right:
/// (a * b)[x] = b[a[x]], i.e. apply a first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(size_t n) : img_(n) {
    for (size_t i = 0; i < n; ++i) img_[i] = static_cast<Point>(i);
  }
  explicit Perm(std::vector<Point> images);

  size_t degree() const { return img_.size(); }
  Point operator[](Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;
  unsigned long long order() const;
  Perm power(long long e) const;

  /// Conjugate this^g = g^-1 * this * g.
  Perm conj(const Perm& g) const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  /// Parse disjoint-cycle notation, e.g. "(0 1 2)(3 4)"; points 0-based.
  static Perm from_cycles(size_t n, const std::string& text);
  std::string cycle_string() const;

  size_t hash() const;

 private:
  std::vector<Point> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const { return p.hash(); }
};

/// One level of a stabilizer chain: a base point, the generators of the
/// level's group, and the Schreier tree of the base point's orbit.
struct ChainLevel {
  Point base = 0;
  std::vector<Perm> gens;
  std::vector<int32_t> orbit_pos;  // point -> index into orbit, or -1
  std::vector<Point> orbit;        // BFS order; orbit[0] == base
  std::vector<int32_t> tree_gen;   // index into gens reaching this point, -1 at root
  std::vector<Point> tree_from;    // predecessor point in the Schreier tree

  bool in_orbit(Point x) const { return orbit_pos[x] >= 0; }
  /// Transversal element u with base^u = x (x must be in the orbit).
  Perm transversal(Point x, size_t degree) const;
};

/// Permutation group with a stabilizer chain (base and strong generating
/// set), built deterministically at construction.  Immutable afterwards; all
/// queries are const.
class PermGroup {
 public:
  PermGroup();  // trivial group of degree 1
  /// `base_hint` points are used first when choosing the base.
  PermGroup(size_t degree, std::vector<Perm> generators,
            const std::vector<Point>& base_hint = {});

  size_t degree() const { return degree_; }
  unsigned long long order() const { return order_; }
  const std::vector<Perm>& gens() const { return gens_; }
  const std::vector<ChainLevel>& chain() const { return chain_; }
  std::vector<Point> base() const;

  bool contains(const Perm& g) const;
  bool is_trivial() const { return order_ == 1; }

  /// Sift g through the chain; returns the residue (identity iff g in group).
  Perm sift(const Perm& g) const;

  /// Deterministic pseudo-random element (seeded stream index).
  Perm random_element(uint64_t seed) const;

  /// All elements; requires order() <= cap.
  std::vector<Perm> elements(unsigned long long cap = 2000000) const;

  /// Orbit of a point under the group.
  std::vector<Point> orbit_of(Point x) const;
  /// Orbits as sorted lists, in increasing order of least element.
  std::vector<std::vector<Point>> orbits() const;

  /// Express g as a word in the original generators (by chain factorization).
  /// Returns indices into gens(); negative index ~i means inverse of gens()[i].
  std::vector<int> factorize(const Perm& g) const;

  bool is_subgroup_of(const PermGroup& g) const;

 private:
  void build_chain(const std::vector<Point>& base_hint);

  size_t degree_ = 1;
  std::vector<Perm> gens_;
  std::vector<ChainLevel> chain_;
  unsigned long long order_ = 1;
};

// ---- structure queries ----------------------------------------------------

struct StructureReport {
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::vector<unsigned long long> derived_series_orders;
  std::vector<unsigned long long> lower_central_orders;
  unsigned long long center_order = 1;
};

PermGroup derived_subgroup(const PermGroup& g);
std::vector<PermGroup> derived_series(const PermGroup& g);
std::vector<PermGroup> lower_central_series(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);
bool is_solvable(const PermGroup& g);
bool is_abelian(const PermGroup& g);
PermGroup center(const PermGroup& g);
StructureReport structure_tests(const PermGroup& g);

/// Normal closure of the subgroup generated by `seed` in g.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seed);

PermGroup subgroup_generated(size_t degree, const std::vector<Perm>& gens);
PermGroup join(const PermGroup& a, const PermGroup& b);
bool is_normal(const PermGroup& g, const PermGroup& n);

// ---- backtrack searches ---------------------------------------------------

/// Centralizer of a set of permutations (all must lie in Sym(degree)).
PermGroup centralizer(const PermGroup& g, const std::vector<Perm>& xs);
PermGroup centralizer(const PermGroup& g, const Perm& x);
PermGroup centralizer(const PermGroup& g, const PermGroup& h);

/// Normalizer of h in g; h <= g is checked (NotASubgroup).
PermGroup normalizer(const PermGroup& g, const PermGroup& h);

/// True iff N_g(h) = h, via an early-exit search for an outside normalizing
/// element.  Much cheaper than computing the full normalizer.
bool is_self_normalizing(const PermGroup& g, const PermGroup& h);

/// Exhaustive-scan oracles (require order() <= cap); used as the independent
/// checks for the backtrack results.
PermGroup normalizer_brute(const PermGroup& g, const PermGroup& h,
                           unsigned long long cap = 2000000);
PermGroup centralizer_brute(const PermGroup& g, const std::vector<Perm>& xs,
                            unsigned long long cap = 2000000);

// ---- Sylow / Hall ----------------------------------------------------------

/// Sylow p-subgroup (trivial if p does not divide |g|).  Deterministic.
PermGroup sylow(const PermGroup& g, unsigned p);

/// Hall pi-subgroup of a solvable group (NotSolvable otherwise).
PermGroup hall(const PermGroup& g, const std::vector<unsigned>& pi);

/// Largest normal odd-order subgroup O(g) of a group with a normal Sylow
/// 2-subgroup context; implemented as the odd Hall subgroup of a solvable g.
PermGroup odd_core(const PermGroup& g);

// ---- conjugacy -------------------------------------------------------------

/// Conjugacy class of x in g by closure under generator conjugation.
std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x,
                                  size_t cap = 5000000);
unsigned long long conjugacy_class_size(const PermGroup& g, const Perm& x,
                                        size_t cap = 5000000);
bool is_conjugate(const PermGroup& g, const Perm& a, const Perm& b);

/// Least k with 1 < k < |x|, gcd(k,|x|) = 1 and x^k conjugate to x, if any.
std::optional<unsigned> power_witness(const PermGroup& g, const Perm& x);

/// Conjugacy class representatives (requires order() <= cap).
std::vector<Perm> class_representatives(const PermGroup& g,
                                        unsigned long long cap = 2000000);

// ---- quotients -------------------------------------------------------------

/// Action of g on the cosets of a normal subgroup n, with pullback support.
class CosetAction {
 public:
  CosetAction(const PermGroup& g, const PermGroup& n, size_t max_index = 100000);

  const PermGroup& image() const { return image_; }
  size_t index() const { return reps_.size(); }

  /// Image of an arbitrary element of g.
  Perm image_of(const Perm& x) const;

  /// Full preimage in g of a subgroup of the image.
  PermGroup preimage(const PermGroup& sub) const;

  /// Some element of g mapping to the given image element.
  Perm lift(const Perm& image_elem) const;

 private:
  size_t coset_of(const Perm& x) const;
  std::vector<uint32_t> fingerprint(const Perm& x) const;

  const PermGroup* g_;
  PermGroup n_;
  std::vector<Perm> reps_;
  std::vector<Point> probe_points_;
  std::vector<int32_t> point_orbit_id_;  // N-orbit id per point
  // fingerprint -> candidate coset indices
  std::vector<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>> buckets_;
  PermGroup image_;
};

// ---- minimal normal subgroups / chief series -------------------------------

struct SimpleFactorInfo {
  std::string kind;           // "cyclic", "alternating", "psl", "other"
  unsigned long long order = 1;
  unsigned param_a = 0;       // p for cyclic, n for Alt(n), n for PSL(n,q)
  unsigned param_b = 0;       // q for PSL
  std::string label;          // e.g. "Z_2", "Alt(5)", "PSL(2,27)"
};

/// One minimal normal subgroup of g (deterministic choice: smallest order
/// found, ties by canonical key).
PermGroup minimal_normal_subgroup(const PermGroup& g);

/// All minimal normal subgroups (exact at desk scale).
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g);

struct ChiefSeries {
  std::vector<PermGroup> terms;  // G = terms[0] > ... > terms.back() = 1
  // factors[i] describes terms[i]/terms[i+1] as simple factors T_{i,1..k}
  std::vector<std::vector<SimpleFactorInfo>> factors;
};

ChiefSeries chief_series(const PermGroup& g);

/// Direct factors of a group known to be a direct product of nonabelian
/// simple groups acting on disjoint supports (chief-factor decomposition).
std::vector<PermGroup> simple_direct_factors(const PermGroup& m);

/// Identify a simple group by order/degree heuristics with brute
/// confirmation at desk scale.
SimpleFactorInfo identify_simple(const PermGroup& t);

bool is_simple(const PermGroup& g, unsigned long long cap = 200000);

// ---- induced automorphisms --------------------------------------------------

/// Aut_H(A/B): the permutation action of H on the element set of A/B by
/// conjugation, with the kernel C_H(A/B) quotiented out.  Requires every
/// generator of H to normalize A and B, and |A/B| <= max_section.
PermGroup induced_autos(const PermGroup& h, const PermGroup& a, const PermGroup& b,
                        size_t max_section = 10000);

/// Order of Aut_H(A) for B = {e} without building the big-degree action:
/// |H| / |C_H(A)| with the centralizer via backtrack.
unsigned long long induced_autos_order(const PermGroup& h, const PermGroup& a);

// ---- subgroup enumeration ----------------------------------------------------

struct SubgroupClass {
  PermGroup rep;
  std::vector<uint32_t> elem_ids;  // sorted ids into the parent element list
  bool normal = false;
};

/// All subgroups of g up to conjugacy, via cyclic extension from the bottom
/// with perfect-subgroup seeding.  Requires |g| <= bound (TooLarge).
std::vector<SubgroupClass> enumerate_subgroups(const PermGroup& g,
                                               unsigned long long bound = 5000);

/// Block-stabilizer via Schreier generators: given the action of g on k
/// blocks (block_image maps each generator index to a permutation of blocks),
/// returns generators of the stabilizer of `block`.
std::vector<Perm> block_stabilizer_gens(const PermGroup& g,
                                        const std::vector<Perm>& block_action,
                                        Point block);

std::vector<unsigned> prime_factors(unsigned long long n);

}  // namespace cgt::perm
