#include "relcat/finrel.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace relcat {

namespace {

bool valid_atomic_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == '(' || c == ')' || c == ',' || c == ' ' || c == '\t' ||
        c == '\n' || c == '\r')
      return false;
  }
  return true;
}

constexpr std::size_t kMaxSetSize = std::size_t{1} << 20;

}  // namespace

FiniteSet FiniteSet::make(std::string name,
                          std::vector<std::string> elements) {
  if (elements.empty())
    throw InvariantError("set '" + name + "' must have at least one element");
  std::unordered_set<std::string_view> seen;
  for (const auto& e : elements) {
    if (!valid_atomic_label(e))
      throw InvariantError("set '" + name + "': bad element label '" + e +
                           "' (labels must be nonempty and free of "
                           "parentheses, commas and whitespace)");
    if (!seen.insert(e).second)
      throw InvariantError("set '" + name + "': duplicate element '" + e +
                           "'");
  }
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->elements = std::move(elements);
  return FiniteSet(std::move(d));
}

FiniteSet FiniteSet::product(std::vector<FiniteSet> factors,
                             std::string name) {
  if (factors.empty())
    throw InvariantError("product of zero factors is not representable; "
                         "use the unit set");
  std::size_t total = 1;
  for (const auto& f : factors) {
    if (total > kMaxSetSize / f.size())
      throw InvariantError("product set too large");
    total *= f.size();
  }
  if (name.empty()) {
    std::string n = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) n += "*";
      n += factors[i].name();
    }
    n += ")";
    name = std::move(n);
  }
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->elements.reserve(total);
  // Lexicographic product, last factor fastest.
  std::vector<std::size_t> idx(factors.size(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    std::string label = "(";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) label += ",";
      label += factors[k].label(idx[k]);
    }
    label += ")";
    d->elements.push_back(std::move(label));
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++idx[k] < factors[k].size()) break;
      idx[k] = 0;
    }
  }
  d->factors = std::move(factors);
  return FiniteSet(std::move(d));
}

const FiniteSet& FiniteSet::unit() {
  static const FiniteSet u = FiniteSet::make("I", {"*"});
  return u;
}

std::optional<std::size_t> FiniteSet::index_of(std::string_view label) const {
  const auto& es = data_->elements;
  for (std::size_t i = 0; i < es.size(); ++i)
    if (es[i] == label) return i;
  return std::nullopt;
}

bool FiniteSet::is_unit() const { return *this == unit(); }

void FiniteSet::collect_leaves(std::vector<FiniteSet>& out) const {
  if (is_unit()) return;
  if (!is_product()) {
    out.push_back(*this);
    return;
  }
  for (const auto& f : data_->factors) f.collect_leaves(out);
}

std::vector<FiniteSet> FiniteSet::leaves() const {
  std::vector<FiniteSet> out;
  collect_leaves(out);
  return out;
}

std::size_t FiniteSet::leaf_count() const {
  if (is_unit()) return 0;
  if (!is_product()) return 1;
  std::size_t n = 0;
  for (const auto& f : data_->factors) n += f.leaf_count();
  return n;
}

void FiniteSet::collect_leaf_indices(std::size_t i,
                                     std::vector<std::size_t>& out) const {
  if (is_unit()) return;
  if (!is_product()) {
    out.push_back(i);
    return;
  }
  // Decompose i into factor coordinates (mixed radix, last factor fastest).
  const auto& fs = data_->factors;
  std::vector<std::size_t> coord(fs.size());
  for (std::size_t k = fs.size(); k-- > 0;) {
    coord[k] = i % fs[k].size();
    i /= fs[k].size();
  }
  for (std::size_t k = 0; k < fs.size(); ++k)
    fs[k].collect_leaf_indices(coord[k], out);
}

std::vector<std::size_t> FiniteSet::element_leaf_indices(std::size_t i) const {
  std::vector<std::size_t> out;
  collect_leaf_indices(i, out);
  return out;
}

std::size_t FiniteSet::index_from_leaf_indices(
    std::span<const std::size_t> leaf_idx) const {
  struct Walker {
    std::span<const std::size_t> idx;
    std::size_t pos = 0;
    std::size_t walk(const FiniteSet& s) {
      if (s.is_unit()) return 0;
      if (!s.is_product()) return idx[pos++];
      std::size_t acc = 0;
      for (const auto& f : s.factors()) acc = acc * f.size() + walk(f);
      return acc;
    }
  };
  Walker w{leaf_idx};
  std::size_t r = w.walk(*this);
  if (w.pos != leaf_idx.size())
    throw InvariantError("leaf index tuple has wrong arity for set '" +
                         name() + "'");
  return r;
}

FiniteSet tensor_set(const FiniteSet& a, const FiniteSet& b) {
  return FiniteSet::product({a, b});
}

// ---------------------------------------------------------------------------
// Relation
// ---------------------------------------------------------------------------

Relation Relation::from_pairs(FiniteSet dom, FiniteSet cod,
                              std::vector<Pair> pairs) {
  for (const auto& [a, b] : pairs) {
    if (a >= dom.size() || b >= cod.size())
      throw InvariantError("relation pair (" + std::to_string(a) + "," +
                           std::to_string(b) + ") out of range for " +
                           dom.name() + " -> " + cod.name());
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return Relation(std::move(dom), std::move(cod), std::move(pairs));
}

Relation Relation::from_labels(
    const FiniteSet& dom, const FiniteSet& cod,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Pair> ps;
  ps.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = dom.index_of(a);
    if (!ia)
      throw TypeError("label '" + a + "' is not an element of " + dom.name());
    auto ib = cod.index_of(b);
    if (!ib)
      throw TypeError("label '" + b + "' is not an element of " + cod.name());
    ps.emplace_back(static_cast<std::uint32_t>(*ia),
                    static_cast<std::uint32_t>(*ib));
  }
  return from_pairs(dom, cod, std::move(ps));
}

Relation Relation::empty(FiniteSet dom, FiniteSet cod) {
  return Relation(std::move(dom), std::move(cod), {});
}

Relation Relation::full(FiniteSet dom, FiniteSet cod) {
  std::vector<Pair> ps;
  ps.reserve(dom.size() * cod.size());
  for (std::uint32_t a = 0; a < dom.size(); ++a)
    for (std::uint32_t b = 0; b < cod.size(); ++b) ps.emplace_back(a, b);
  return Relation(std::move(dom), std::move(cod), std::move(ps));
}

bool Relation::contains(std::uint32_t a, std::uint32_t b) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{a, b});
}

std::vector<std::uint32_t> Relation::image_of(std::uint32_t a) const {
  std::vector<std::uint32_t> out;
  auto lo = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{a, 0});
  for (auto it = lo; it != pairs_.end() && it->first == a; ++it)
    out.push_back(it->second);
  return out;
}

bool Relation::is_total() const {
  std::vector<bool> hit(dom_.size(), false);
  for (const auto& [a, b] : pairs_) hit[a] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

bool Relation::is_single_valued() const {
  for (std::size_t i = 1; i < pairs_.size(); ++i)
    if (pairs_[i].first == pairs_[i - 1].first) return false;
  return true;
}

std::string Relation::to_lines() const {
  std::string out;
  for (const auto& [a, b] : pairs_) {
    out += dom_.label(a);
    out += " -> ";
    out += cod_.label(b);
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Backends
// ---------------------------------------------------------------------------

namespace {

std::mutex g_backend_mutex;
BackendConfig g_backend_config;

// Row-major bitset view of a relation.
struct BitMatrix {
  std::size_t rows, cols, words_per_row;
  std::vector<std::uint64_t> bits;

  BitMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), words_per_row((c + 63) / 64), bits(r * words_per_row, 0) {}

  void set(std::size_t r, std::size_t c) {
    bits[r * words_per_row + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  std::uint64_t* row(std::size_t r) { return bits.data() + r * words_per_row; }
  const std::uint64_t* row(std::size_t r) const {
    return bits.data() + r * words_per_row;
  }
};

BitMatrix to_matrix(const Relation& f) {
  BitMatrix m(f.dom().size(), f.cod().size());
  for (const auto& [a, b] : f.pairs()) m.set(a, b);
  return m;
}

std::vector<Relation::Pair> matrix_pairs(const BitMatrix& m) {
  std::vector<Relation::Pair> ps;
  for (std::size_t r = 0; r < m.rows; ++r) {
    const std::uint64_t* row = m.row(r);
    for (std::size_t w = 0; w < m.words_per_row; ++w) {
      std::uint64_t word = row[w];
      while (word) {
        unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
        ps.emplace_back(static_cast<std::uint32_t>(r),
                        static_cast<std::uint32_t>(w * 64 + bit));
        word &= word - 1;
      }
    }
  }
  return ps;
}

bool use_matrix(const Relation& f, const Relation& g) {
  BackendConfig cfg = backend_config();
  switch (cfg.mode) {
    case Backend::Pairs:
      return false;
    case Backend::Matrix:
      return true;
    case Backend::Auto:
      return std::max({f.dom().size(), f.cod().size(), g.dom().size(),
                       g.cod().size()}) > cfg.matrix_threshold;
  }
  return false;
}

void require_composable(const Relation& f, const Relation& g) {
  if (f.cod() != g.dom())
    throw TypeError("cannot compose: cod of first is " + f.cod().name() +
                    " (" + std::to_string(f.cod().size()) +
                    " elements) but dom of second is " + g.dom().name() +
                    " (" + std::to_string(g.dom().size()) + " elements)");
}

}  // namespace

BackendConfig backend_config() {
  std::lock_guard<std::mutex> lock(g_backend_mutex);
  return g_backend_config;
}

void set_backend_config(BackendConfig cfg) {
  std::lock_guard<std::mutex> lock(g_backend_mutex);
  g_backend_config = cfg;
}

namespace detail {

Relation compose_pairs(const Relation& f, const Relation& g) {
  require_composable(f, g);
  std::vector<Relation::Pair> out;
  // f.pairs() sorted by (a,b); for each a, union the g-images of its b's.
  std::size_t i = 0;
  const auto& fp = f.pairs();
  while (i < fp.size()) {
    std::uint32_t a = fp[i].first;
    std::vector<bool> hit(g.cod().size(), false);
    for (; i < fp.size() && fp[i].first == a; ++i)
      for (std::uint32_t c : g.image_of(fp[i].second))
        if (!hit[c]) {
          hit[c] = true;
          out.emplace_back(a, c);
        }
  }
  return Relation::from_pairs(f.dom(), g.cod(), std::move(out));
}

Relation compose_matrix(const Relation& f, const Relation& g) {
  require_composable(f, g);
  BitMatrix mg = to_matrix(g);
  BitMatrix mr(f.dom().size(), g.cod().size());
  for (const auto& [a, b] : f.pairs()) {
    std::uint64_t* dst = mr.row(a);
    const std::uint64_t* src = mg.row(b);
    for (std::size_t w = 0; w < mr.words_per_row; ++w) dst[w] |= src[w];
  }
  return Relation::from_pairs(f.dom(), g.cod(), matrix_pairs(mr));
}

Relation tensor_pairs(const Relation& f, const Relation& g) {
  FiniteSet dom = tensor_set(f.dom(), g.dom());
  FiniteSet cod = tensor_set(f.cod(), g.cod());
  std::vector<Relation::Pair> out;
  out.reserve(f.pair_count() * g.pair_count());
  const std::size_t gd = g.dom().size(), gc = g.cod().size();
  for (const auto& [a, b] : f.pairs())
    for (const auto& [c, d] : g.pairs())
      out.emplace_back(static_cast<std::uint32_t>(a * gd + c),
                       static_cast<std::uint32_t>(b * gc + d));
  return Relation::from_pairs(std::move(dom), std::move(cod), std::move(out));
}

Relation tensor_matrix(const Relation& f, const Relation& g) {
  FiniteSet dom = tensor_set(f.dom(), g.dom());
  FiniteSet cod = tensor_set(f.cod(), g.cod());
  BitMatrix mg = to_matrix(g);
  BitMatrix mr(dom.size(), cod.size());
  const std::size_t gd = g.dom().size(), gc = g.cod().size();
  for (const auto& [a, b] : f.pairs())
    for (std::size_t c = 0; c < gd; ++c) {
      const std::uint64_t* src = mg.row(c);
      // Shifted OR of g's row c into the block row (a*gd+c) at column b*gc.
      for (std::size_t w = 0; w < mg.words_per_row; ++w) {
        std::uint64_t word = src[w];
        while (word) {
          unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
          mr.set(a * gd + c, b * gc + w * 64 + bit);
          word &= word - 1;
        }
      }
    }
  return Relation::from_pairs(std::move(dom), std::move(cod),
                              matrix_pairs(mr));
}

Relation dagger_pairs(const Relation& f) {
  std::vector<Relation::Pair> out;
  out.reserve(f.pair_count());
  for (const auto& [a, b] : f.pairs()) out.emplace_back(b, a);
  return Relation::from_pairs(f.cod(), f.dom(), std::move(out));
}

Relation dagger_matrix(const Relation& f) {
  BitMatrix m = to_matrix(f);
  BitMatrix t(f.cod().size(), f.dom().size());
  for (std::size_t r = 0; r < m.rows; ++r) {
    const std::uint64_t* row = m.row(r);
    for (std::size_t w = 0; w < m.words_per_row; ++w) {
      std::uint64_t word = row[w];
      while (word) {
        unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
        t.set(w * 64 + bit, r);
        word &= word - 1;
      }
    }
  }
  return Relation::from_pairs(f.cod(), f.dom(), matrix_pairs(t));
}

}  // namespace detail

Relation compose(const Relation& f, const Relation& g) {
  return use_matrix(f, g) ? detail::compose_matrix(f, g)
                          : detail::compose_pairs(f, g);
}

Relation tensor(const Relation& f, const Relation& g) {
  return use_matrix(f, g) ? detail::tensor_matrix(f, g)
                          : detail::tensor_pairs(f, g);
}

Relation dagger(const Relation& f) {
  return use_matrix(f, f) ? detail::dagger_matrix(f)
                          : detail::dagger_pairs(f);
}

Relation identity(const FiniteSet& a) {
  std::vector<Relation::Pair> ps;
  ps.reserve(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) ps.emplace_back(i, i);
  return Relation::from_pairs(a, a, std::move(ps));
}

Relation braid(const FiniteSet& a, const FiniteSet& b) {
  FiniteSet dom = tensor_set(a, b);
  FiniteSet cod = tensor_set(b, a);
  std::vector<Relation::Pair> ps;
  ps.reserve(dom.size());
  for (std::uint32_t i = 0; i < a.size(); ++i)
    for (std::uint32_t j = 0; j < b.size(); ++j)
      ps.emplace_back(i * b.size() + j, j * a.size() + i);
  return Relation::from_pairs(std::move(dom), std::move(cod), std::move(ps));
}

bool relations_equal(const Relation& f, const Relation& g) {
  if (f.dom() != g.dom())
    throw TypeError("relations_equal: doms differ (" + f.dom().name() +
                    " vs " + g.dom().name() + ")");
  if (f.cod() != g.cod())
    throw TypeError("relations_equal: cods differ (" + f.cod().name() +
                    " vs " + g.cod().name() + ")");
  return f.pairs() == g.pairs();
}

Relation leaf_permutation(const FiniteSet& from, const FiniteSet& to,
                          std::span<const std::size_t> perm) {
  auto from_leaves = from.leaves();
  auto to_leaves = to.leaves();
  if (perm.size() != from_leaves.size() || perm.size() != to_leaves.size())
    throw TypeError("leaf_permutation: arity mismatch between " +
                    from.name() + " and " + to.name());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= from_leaves.size())
      throw TypeError("leaf_permutation: bad permutation entry");
    if (to_leaves[k] != from_leaves[perm[k]])
      throw TypeError("leaf_permutation: leaf " + std::to_string(k) + " of " +
                      to.name() + " does not match leaf " +
                      std::to_string(perm[k]) + " of " + from.name());
  }
  if (from.size() != to.size())
    throw TypeError("leaf_permutation: sizes differ");
  std::vector<Relation::Pair> ps;
  ps.reserve(from.size());
  std::vector<std::size_t> permuted(perm.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto leaf_idx = from.element_leaf_indices(i);
    for (std::size_t k = 0; k < perm.size(); ++k)
      permuted[k] = leaf_idx[perm[k]];
    std::size_t j = to.index_from_leaf_indices(permuted);
    ps.emplace_back(static_cast<std::uint32_t>(i),
                    static_cast<std::uint32_t>(j));
  }
  return Relation::from_pairs(from, to, std::move(ps));
}

Relation coherence(const FiniteSet& from, const FiniteSet& to) {
  std::vector<std::size_t> id_perm(from.leaf_count());
  std::iota(id_perm.begin(), id_perm.end(), 0);
  return leaf_permutation(from, to, id_perm);
}

Relation reassociate(const FiniteSet& a, const FiniteSet& b,
                     const FiniteSet& c) {
  return coherence(tensor_set(tensor_set(a, b), c),
                   tensor_set(a, tensor_set(b, c)));
}

Relation drop_unit(const FiniteSet& a) {
  return coherence(tensor_set(a, FiniteSet::unit()), a);
}

Relation drop_unit_left(const FiniteSet& a) {
  return coherence(tensor_set(FiniteSet::unit(), a), a);
}

Relation interchange(const FiniteSet& a, const FiniteSet& b,
                     const FiniteSet& c, const FiniteSet& d) {
  FiniteSet from = tensor_set(tensor_set(a, b), tensor_set(c, d));
  FiniteSet to = tensor_set(tensor_set(a, c), tensor_set(b, d));
  const std::size_t na = a.leaf_count(), nb = b.leaf_count(),
                    nc = c.leaf_count(), nd = d.leaf_count();
  std::vector<std::size_t> perm;
  perm.reserve(na + nb + nc + nd);
  for (std::size_t k = 0; k < na; ++k) perm.push_back(k);
  for (std::size_t k = 0; k < nc; ++k) perm.push_back(na + nb + k);
  for (std::size_t k = 0; k < nb; ++k) perm.push_back(na + k);
  for (std::size_t k = 0; k < nd; ++k) perm.push_back(na + nb + nc + k);
  return leaf_permutation(from, to, perm);
}

std::optional<Difference> first_difference(const Relation& lhs,
                                           const Relation& rhs) {
  if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod())
    throw TypeError("first_difference: mismatched types");
  if (lhs.pairs() == rhs.pairs()) return std::nullopt;
  // Lexicographically first differing input, ordered by label text.
  std::vector<std::uint32_t> order(lhs.dom().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return lhs.dom().label(x) < lhs.dom().label(y);
  });
  for (std::uint32_t a : order) {
    auto il = lhs.image_of(a);
    auto ir = rhs.image_of(a);
    if (il != ir) {
      Difference d;
      d.input = lhs.dom().label(a);
      for (auto b : il) d.lhs_image.push_back(lhs.cod().label(b));
      for (auto b : ir) d.rhs_image.push_back(rhs.cod().label(b));
      return d;
    }
  }
  return std::nullopt;
}

}  // namespace relcat
