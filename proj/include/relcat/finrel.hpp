#pragma once

// Finite sets and binary relations: the evaluation substrate for every law
// check in this library. Composition is written diagrammatically throughout:
// compose(f, g) means "f then g".

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relcat {

/// Thrown when two morphisms or objects do not line up (wrong dom/cod).
class TypeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a construction-time invariant is violated.
class InvariantError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A named, ordered collection of distinct element labels. A set may be a
/// cartesian product of factors, in which case its elements are exactly the
/// lexicographic product of the factors' elements (last factor fastest) and
/// each label renders as "(a,b,...)".
///
/// Sets compare equal iff their element label sequences are equal; names and
/// factor structure are display/bookkeeping data only. Copies are cheap
/// (shared immutable payload).
class FiniteSet {
public:
  FiniteSet() = default;

  /// Atomic set. Labels must be nonempty, distinct, and free of '(' ')' ','
  /// and whitespace (so product tuples render unambiguously).
  static FiniteSet make(std::string name, std::vector<std::string> elements);

  /// Cartesian product of the given factors (kept as-is; factors may
  /// themselves be products, giving nested tuple labels).
  static FiniteSet product(std::vector<FiniteSet> factors,
                           std::string name = "");

  /// The monoidal unit: the distinguished one-element set I = { * }.
  static const FiniteSet& unit();

  const std::string& name() const { return data_->name; }
  std::size_t size() const { return data_->elements.size(); }
  const std::vector<std::string>& labels() const { return data_->elements; }
  const std::string& label(std::size_t i) const { return data_->elements[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool is_product() const { return !data_->factors.empty(); }
  const std::vector<FiniteSet>& factors() const { return data_->factors; }

  /// True iff this set is the unit up to equality (single element "*").
  bool is_unit() const;

  /// Non-unit leaf sets, in order, recursing through factors.
  std::vector<FiniteSet> leaves() const;
  std::size_t leaf_count() const;

  /// Leaf indices of element i (unit leaves dropped), outermost-left first.
  std::vector<std::size_t> element_leaf_indices(std::size_t i) const;

  /// Element index corresponding to the given leaf indices.
  std::size_t index_from_leaf_indices(std::span<const std::size_t> leaf_idx) const;

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) {
    return a.data_ == b.data_ || a.data_->elements == b.data_->elements;
  }
  friend bool operator!=(const FiniteSet& a, const FiniteSet& b) {
    return !(a == b);
  }

private:
  struct Data {
    std::string name;
    std::vector<std::string> elements;
    std::vector<FiniteSet> factors;
  };
  explicit FiniteSet(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;

  void collect_leaves(std::vector<FiniteSet>& out) const;
  void collect_leaf_indices(std::size_t i, std::vector<std::size_t>& out) const;
};

/// Convenience: binary tensor on objects, product({a, b}).
FiniteSet tensor_set(const FiniteSet& a, const FiniteSet& b);

/// A morphism of FinRel: a set of (dom-index, cod-index) pairs, stored
/// sorted and duplicate-free.
class Relation {
public:
  using Pair = std::pair<std::uint32_t, std::uint32_t>;

  static Relation from_pairs(FiniteSet dom, FiniteSet cod,
                             std::vector<Pair> pairs);
  static Relation from_labels(
      const FiniteSet& dom, const FiniteSet& cod,
      const std::vector<std::pair<std::string, std::string>>& pairs);
  static Relation empty(FiniteSet dom, FiniteSet cod);
  static Relation full(FiniteSet dom, FiniteSet cod);

  const FiniteSet& dom() const { return dom_; }
  const FiniteSet& cod() const { return cod_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t pair_count() const { return pairs_.size(); }
  bool contains(std::uint32_t a, std::uint32_t b) const;

  /// Sorted cod-indices related to dom-index a.
  std::vector<std::uint32_t> image_of(std::uint32_t a) const;

  bool is_total() const;
  bool is_single_valued() const;
  bool is_function() const { return is_total() && is_single_valued(); }

  /// Canonical serialization: one "a -> b" line per pair, sorted by
  /// (dom-index, cod-index), labels as rendered.
  std::string to_lines() const;

  /// Structural equality (same dom, cod and graph). For the checked variant
  /// that rejects mismatched types, see relations_equal.
  friend bool operator==(const Relation& a, const Relation& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.pairs_ == b.pairs_;
  }
  friend bool operator!=(const Relation& a, const Relation& b) {
    return !(a == b);
  }

private:
  Relation(FiniteSet dom, FiniteSet cod, std::vector<Pair> pairs)
      : dom_(std::move(dom)), cod_(std::move(cod)), pairs_(std::move(pairs)) {}
  FiniteSet dom_, cod_;
  std::vector<Pair> pairs_;  // sorted, unique
};

// ---------------------------------------------------------------------------
// Backends. The pair-set backend is the readable ground truth; the bitset
// boolean-matrix backend is the fast path (composition as boolean matrix
// multiply). Auto mode switches to the matrix when a set exceeds the
// threshold.
// ---------------------------------------------------------------------------

enum class Backend { Pairs, Matrix, Auto };

struct BackendConfig {
  Backend mode = Backend::Auto;
  std::size_t matrix_threshold = 64;
};

BackendConfig backend_config();
void set_backend_config(BackendConfig cfg);

namespace detail {
// Exposed so the differential tests can drive each backend directly.
Relation compose_pairs(const Relation& f, const Relation& g);
Relation compose_matrix(const Relation& f, const Relation& g);
Relation tensor_pairs(const Relation& f, const Relation& g);
Relation tensor_matrix(const Relation& f, const Relation& g);
Relation dagger_pairs(const Relation& f);
Relation dagger_matrix(const Relation& f);
}  // namespace detail

// ---------------------------------------------------------------------------
// Categorical operations (diagrammatic order).
// ---------------------------------------------------------------------------

/// f then g. Requires cod(f) == dom(g) as sets (element sequences), not
/// merely equal cardinality.
Relation compose(const Relation& f, const Relation& g);

/// Chain of composites, left to right.
template <typename... Rs>
Relation seq(Relation acc, const Rs&... rest) {
  ((acc = compose(acc, rest)), ...);
  return acc;
}

/// Parallel composition: ((a,c),(b,d)) in tensor(f,g) iff (a,b) in f and
/// (c,d) in g; dom = dom(f)⊗dom(g), cod = cod(f)⊗cod(g).
Relation tensor(const Relation& f, const Relation& g);

Relation identity(const FiniteSet& a);

/// The symmetry A⊗B → B⊗A, (a,b) ↦ (b,a).
Relation braid(const FiniteSet& a, const FiniteSet& b);

/// Converse relation; dagger(dagger(f)) == f.
Relation dagger(const Relation& f);

/// Exact graph equality. Throws TypeError (naming both sets) if the doms or
/// cods differ.
bool relations_equal(const Relation& f, const Relation& g);

// Structural relabelings. These are the explicit coherence isomorphisms for
// the strictly left-to-right product representation; every well-typed
// composite of them is an identity after relabeling.

/// (A⊗B)⊗C → A⊗(B⊗C).
Relation reassociate(const FiniteSet& a, const FiniteSet& b,
                     const FiniteSet& c);

/// A⊗I → A.
Relation drop_unit(const FiniteSet& a);

/// I⊗A → A.
Relation drop_unit_left(const FiniteSet& a);

/// Relabeling along a permutation of leaf positions: element x of `from`
/// maps to the element of `to` whose k-th leaf equals x's perm[k]-th leaf.
/// Requires leaves(to)[k] == leaves(from)[perm[k]] for all k.
Relation leaf_permutation(const FiniteSet& from, const FiniteSet& to,
                          std::span<const std::size_t> perm);

/// Identity-shaped relabeling between two sets with the same leaf sequence
/// (e.g. differently nested products of the same factors).
Relation coherence(const FiniteSet& from, const FiniteSet& to);

/// The middle-four interchange (A⊗B)⊗(C⊗D) → (A⊗C)⊗(B⊗D).
Relation interchange(const FiniteSet& a, const FiniteSet& b,
                     const FiniteSet& c, const FiniteSet& d);

/// Lexicographically first (by dom label) input whose images differ, with
/// both image label sets. Requires equal doms and cods.
struct Difference {
  std::string input;
  std::vector<std::string> lhs_image;
  std::vector<std::string> rhs_image;
};
std::optional<Difference> first_difference(const Relation& lhs,
                                           const Relation& rhs);

}  // namespace relcat
