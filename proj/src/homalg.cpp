#include "rfd/homalg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <queue>

#include "rfd/errors.hpp"

namespace rfd {

namespace {

bool is_unit_entry(const Polynomial& f) { return !f.is_zero() && f.is_constant(); }

const PolyRingPtr& ambient_of(const RingPtr& ring) { return ring->ambient(); }

// g·e_i for every g in the basis of J and every i < rank.
std::vector<FreeElement> relation_multiples(const RingPtr& ring, std::size_t rank) {
  std::vector<FreeElement> out;
  for (const auto& g : ring->relation_basis())
    for (std::size_t i = 0; i < rank; ++i) {
      FreeElement e = FreeElement::zero(ambient_of(ring), rank);
      e[i] = g;
      out.push_back(std::move(e));
    }
  return out;
}

FreeElement drop_coordinate(const FreeElement& v, std::size_t i) {
  FreeElement r;
  r.coords.reserve(v.rank() - 1);
  for (std::size_t k = 0; k < v.rank(); ++k)
    if (k != i) r.coords.push_back(v[k]);
  return r;
}

// v ← v − (v_i / u_i)·u, assuming u_i is a nonzero constant.
void eliminate_with(FreeElement& v, const FreeElement& u, std::size_t i, const Field& field) {
  if (v[i].is_zero()) return;
  const Coeff factor = field.div(Coeff(1), u[i].leading_term().coeff);
  v -= u.scaled(v[i].scaled(factor));
}

std::optional<std::array<std::size_t, 2>> find_unit(const std::vector<FreeElement>& cols) {
  for (std::size_t u = 0; u < cols.size(); ++u)
    for (std::size_t i = 0; i < cols[u].rank(); ++i)
      if (is_unit_entry(cols[u][i])) return std::array<std::size_t, 2>{u, i};
  return std::nullopt;
}

void reduce_and_clean(const RingPtr& ring, std::vector<FreeElement>& cols) {
  std::vector<FreeElement> out;
  for (auto& c : cols) {
    FreeElement r = ring->reduce(c);
    if (r.is_zero()) continue;
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  cols = std::move(out);
}

unsigned column_degree(const FreeElement& v) {
  unsigned d = 0;
  for (const auto& c : v.coords)
    if (!c.is_zero()) d = std::max(d, c.total_degree());
  return d;
}

// Drops generators lying in the span of the ones kept before them (together
// with J·S^rank). Generators are visited by increasing degree.
std::vector<FreeElement> trim_generators(const RingPtr& ring, std::size_t rank, std::vector<FreeElement> gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [](const FreeElement& a, const FreeElement& b) { return column_degree(a) < column_degree(b); });
  const auto base = relation_multiples(ring, rank);
  std::vector<FreeElement> kept;
  for (auto& g : gens) {
    std::vector<FreeElement> span = base;
    span.insert(span.end(), kept.begin(), kept.end());
    const auto gb = buchberger(span, ambient_of(ring), rank);
    if (!normal_form(g, gb, ambient_of(ring)).is_zero()) kept.push_back(std::move(g));
  }
  return kept;
}

// Generators of { c : Σ c_j cols_j ∈ J·S^rank }, entries reduced mod J.
std::vector<FreeElement> syzygies_over_ring(const RingPtr& ring, std::size_t rank, const std::vector<FreeElement>& cols) {
  if (cols.empty()) return {};
  const auto jmult = relation_multiples(ring, rank);
  auto syz = syzygies_modulo(cols, jmult, ambient_of(ring), rank, ring->relation_basis());
  reduce_and_clean(ring, syz);
  return syz;
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::vector<FreeElement> columns) : rows_(rows), columns_(std::move(columns)) {
  for (const auto& c : columns_)
    if (c.rank() != rows_) throw InputError("matrix column has the wrong length");
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out += "[";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) out += ", ";
      out += entry(i, j).to_string();
    }
    out += "]\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// ModulePresentation

ModulePresentation::ModulePresentation(RingPtr ring, std::size_t rank, std::vector<FreeElement> relations)
    : ring_(std::move(ring)), rank_(rank), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw InputError("module over a null ring");
  for (const auto& r : relations)
    if (r.rank() != rank_) throw InputError("relation has the wrong rank");
  reduce_and_clean(ring_, relations);
  relations_ = std::move(relations);
}

ModulePresentation ModulePresentation::free(RingPtr ring, std::size_t rank) {
  return ModulePresentation(std::move(ring), rank, {});
}

ModulePresentation ModulePresentation::cyclic(RingPtr ring, std::vector<Polynomial> gens) {
  std::vector<FreeElement> rel;
  for (auto& g : gens) rel.push_back(FreeElement({std::move(g)}));
  return ModulePresentation(std::move(ring), 1, std::move(rel));
}

std::vector<FreeElement> ModulePresentation::lifted_relations() const {
  std::vector<FreeElement> out = relations_;
  auto j = relation_multiples(ring_, rank_);
  out.insert(out.end(), j.begin(), j.end());
  return out;
}

const std::vector<FreeElement>& ModulePresentation::relation_basis() const {
  if (!cache_) throw std::logic_error("default-constructed ModulePresentation");
  std::call_once(cache_->once, [this] {
    if (rank_ == 0) return;
    cache_->basis = buchberger(lifted_relations(), ambient_of(ring_), rank_);
  });
  return cache_->basis;
}

bool ModulePresentation::is_multigraded() const {
  const std::size_t n = ring_->nvars();
  using Degree = std::vector<long>;
  // Edges i -> k carrying deg(e_k) - deg(e_i).
  std::vector<std::vector<std::pair<std::size_t, Degree>>> adj(rank_);
  for (const auto& col : relations_) {
    std::optional<std::size_t> first;
    for (std::size_t k = 0; k < rank_; ++k) {
      if (col[k].is_zero()) continue;
      if (!col[k].is_term()) return false;
      if (!first) {
        first = k;
        continue;
      }
      const auto& a = col[*first].leading_term().monomial;
      const auto& b = col[k].leading_term().monomial;
      Degree d(n);
      for (std::size_t v = 0; v < n; ++v) d[v] = long(a[v]) - long(b[v]);
      Degree back(n);
      for (std::size_t v = 0; v < n; ++v) back[v] = -d[v];
      adj[*first].push_back({k, d});
      adj[k].push_back({*first, back});
    }
  }
  std::vector<std::optional<Degree>> deg(rank_);
  for (std::size_t s = 0; s < rank_; ++s) {
    if (deg[s]) continue;
    deg[s] = Degree(n, 0);
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop();
      for (const auto& [k, d] : adj[i]) {
        Degree want(n);
        for (std::size_t v = 0; v < n; ++v) want[v] = (*deg[i])[v] + d[v];
        if (!deg[k]) {
          deg[k] = want;
          q.push(k);
        } else if (*deg[k] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string ModulePresentation::key() const {
  std::string out = std::to_string(rank_) + "|";
  for (const auto& g : relation_basis()) out += g.to_string() + ";";
  return out;
}

std::string ModulePresentation::to_string() const {
  std::string out = "coker(rank " + std::to_string(rank_) + "; ";
  for (std::size_t j = 0; j < relations_.size(); ++j) {
    if (j) out += ", ";
    out += relations_[j].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Minimization, syzygies, resolutions

ModulePresentation minimize(const ModulePresentation& M) {
  const Field& field = ambient_of(M.ring())->field();
  std::vector<FreeElement> cols = M.relations();
  std::size_t rank = M.rank();
  while (auto hit = find_unit(cols)) {
    const auto [u, i] = *hit;
    const FreeElement pivot = cols[u];
    std::vector<FreeElement> next;
    next.reserve(cols.size() - 1);
    for (std::size_t v = 0; v < cols.size(); ++v) {
      if (v == u) continue;
      FreeElement c = cols[v];
      eliminate_with(c, pivot, i, field);
      next.push_back(drop_coordinate(c, i));
    }
    --rank;
    reduce_and_clean(M.ring(), next);
    cols = std::move(next);
  }
  return ModulePresentation(M.ring(), rank, std::move(cols));
}

ModulePresentation syzygy(const ModulePresentation& M) {
  const ModulePresentation m = minimize(M);
  const auto& a = m.relations();
  return ModulePresentation(m.ring(), a.size(), syzygies_over_ring(m.ring(), m.rank(), a));
}

ModulePresentation syzygy(const ModulePresentation& M, unsigned n) {
  ModulePresentation cur = M;
  for (unsigned k = 0; k < n; ++k) cur = syzygy(cur);
  return cur;
}

std::size_t Resolution::rank(std::size_t k) const {
  if (k == 0) return rank0;
  if (k <= maps.size()) return maps[k - 1].cols();
  if (terminated) return 0;
  throw std::out_of_range("resolution not computed this far");
}

class ResolutionBuilder {
 public:
  // Computes d_{k+1} from d_k = res.maps.back() (or the presentation for
  // k = 0) and prunes trivial summands against d_k.
  static bool step(Resolution& res) {
    const RingPtr& ring = res.ring;
    const Field& field = ambient_of(ring)->field();
    Matrix& dk = res.maps.back();
    std::vector<FreeElement> next = syzygies_over_ring(ring, dk.rows(), dk.columns_);
    next = trim_generators(ring, dk.cols(), std::move(next));
    while (auto hit = find_unit(next)) {
      const auto [u, i] = *hit;
      const FreeElement pivot = next[u];
      std::vector<FreeElement> pruned;
      for (std::size_t v = 0; v < next.size(); ++v) {
        if (v == u) continue;
        FreeElement c = next[v];
        eliminate_with(c, pivot, i, field);
        pruned.push_back(drop_coordinate(c, i));
      }
      reduce_and_clean(ring, pruned);
      next = std::move(pruned);
      dk.columns_.erase(dk.columns_.begin() + static_cast<std::ptrdiff_t>(i));
    }
    if (next.empty()) {
      res.terminated = true;
      if (dk.cols() == 0) res.maps.pop_back();
      return false;
    }
    res.maps.emplace_back(dk.cols(), std::move(next));
    return true;
  }
};

Resolution free_resolution(const ModulePresentation& M, std::size_t max_length) {
  Resolution res;
  const ModulePresentation m = minimize(M);
  res.ring = m.ring();
  res.rank0 = m.rank();
  if (m.rank() == 0 || m.relations().empty()) {
    res.terminated = true;
    return res;
  }
  res.maps.emplace_back(m.rank(), trim_generators(m.ring(), m.rank(), m.relations()));
  extend_resolution(res, max_length + 1);
  return res;
}

void extend_resolution(Resolution& res, std::size_t maps) {
  while (!res.terminated && res.maps.size() < maps)
    if (!ResolutionBuilder::step(res)) break;
}

ResolutionCheck verify_resolution(const Resolution& res) {
  ResolutionCheck out;
  const RingPtr& ring = res.ring;
  const auto& S = ambient_of(ring);
  for (std::size_t k = 0; k + 1 < res.maps.size(); ++k) {
    const Matrix& a = res.maps[k];
    const Matrix& b = res.maps[k + 1];
    for (const auto& col : b.columns()) {
      FreeElement img = FreeElement::zero(S, a.rows());
      for (std::size_t l = 0; l < a.cols(); ++l)
        if (!col[l].is_zero()) img += a.column(l).scaled(col[l]);
      if (!ring->reduce(img).is_zero()) out.complex = false;
    }
  }
  for (std::size_t k = 0; k < res.maps.size(); ++k) {
    const Matrix& a = res.maps[k];
    const auto kernel = syzygies_over_ring(ring, a.rows(), a.columns());
    if (k + 1 < res.maps.size()) {
      std::vector<FreeElement> span = relation_multiples(ring, a.cols());
      for (const auto& c : res.maps[k + 1].columns()) span.push_back(c);
      const auto gb = buchberger(span, S, a.cols());
      for (const auto& z : kernel)
        if (!normal_form(z, gb, S).is_zero()) out.exact = false;
    } else if (res.terminated && !kernel.empty()) {
      out.exact = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ext and subquotients

ModulePresentation subquotient(const RingPtr& ring, std::size_t rank, const std::vector<FreeElement>& gens,
                               const std::vector<FreeElement>& rels) {
  const auto& S = ambient_of(ring);
  std::vector<FreeElement> base = rels;
  auto j = relation_multiples(ring, rank);
  base.insert(base.end(), j.begin(), j.end());
  const auto gb = rank ? buchberger(base, S, rank) : std::vector<FreeElement>{};
  std::vector<FreeElement> k;
  for (const auto& g : gens) {
    FreeElement r = normal_form(g, gb, S);
    if (!r.is_zero() && std::find(k.begin(), k.end(), r) == k.end()) k.push_back(std::move(r));
  }
  if (k.empty()) return ModulePresentation::free(ring, 0);
  auto syz = syzygies_modulo(k, gb, S, rank, ring->relation_basis());
  return minimize(ModulePresentation(ring, k.size(), std::move(syz)));
}

namespace {

// Hom(d, M) for d : R^cols -> R^rows, as a map S^(m·rows) -> S^(m·cols);
// returns the images of the unit vectors e_(j,t), index j·m + t.
std::vector<FreeElement> dual_map(const Matrix& d, std::size_t m, const PolyRingPtr& S) {
  std::vector<FreeElement> out;
  out.reserve(d.rows() * m);
  for (std::size_t j = 0; j < d.rows(); ++j)
    for (std::size_t t = 0; t < m; ++t) {
      FreeElement v = FreeElement::zero(S, d.cols() * m);
      for (std::size_t l = 0; l < d.cols(); ++l) v[l * m + t] = d.entry(j, l);
      out.push_back(std::move(v));
    }
  return out;
}

std::vector<FreeElement> block_relations(const std::vector<FreeElement>& rels, std::size_t m, std::size_t blocks,
                                         const PolyRingPtr& S) {
  std::vector<FreeElement> out;
  for (std::size_t b = 0; b < blocks; ++b)
    for (const auto& r : rels) {
      FreeElement v = FreeElement::zero(S, m * blocks);
      for (std::size_t t = 0; t < m; ++t) v[b * m + t] = r[t];
      out.push_back(std::move(v));
    }
  return out;
}

}  // namespace

ModulePresentation ext(std::size_t i, const Resolution& resN, const ModulePresentation& M) {
  const RingPtr& ring = M.ring();
  const auto& S = ambient_of(ring);
  if (!resN.terminated && resN.length() < i + 1) throw std::out_of_range("resolution too short for Ext");
  const std::size_t m = M.rank();
  const std::size_t ri = resN.rank(i);
  const std::size_t rnext = resN.rank(i + 1);
  if (m == 0 || ri == 0) return ModulePresentation::free(ring, 0);

  const auto& relM = M.relation_basis();
  std::vector<FreeElement> kernel;
  if (rnext == 0) {
    for (std::size_t k = 0; k < m * ri; ++k) kernel.push_back(FreeElement::unit(S, m * ri, k));
  } else {
    const auto phi = dual_map(resN.maps[i], m, S);
    const auto target = block_relations(relM, m, rnext, S);
    kernel = syzygies_modulo(phi, target, S, m * rnext, ring->relation_basis());
  }
  std::vector<FreeElement> rels = block_relations(relM, m, ri, S);
  if (i > 0) {
    const auto psi = dual_map(resN.maps[i - 1], m, S);
    rels.insert(rels.end(), psi.begin(), psi.end());
  }
  return subquotient(ring, m * ri, kernel, rels);
}

ModulePresentation ext(std::size_t i, const ModulePresentation& N, const ModulePresentation& M) {
  return ext(i, free_resolution(N, i), M);
}

// ---------------------------------------------------------------------------
// Annihilators, support and related constructions

ModulePresentation kernel_of_map(const ModulePresentation& source, const ModulePresentation& target,
                                 const std::vector<FreeElement>& images) {
  if (images.size() != source.rank()) throw InputError("map needs one image per generator");
  const RingPtr& ring = source.ring();
  const auto& S = ambient_of(ring);
  std::vector<FreeElement> k;
  if (target.rank() == 0) {
    for (std::size_t j = 0; j < source.rank(); ++j) k.push_back(FreeElement::unit(S, source.rank(), j));
  } else {
    k = syzygies_modulo(images, target.relation_basis(), S, target.rank(), ring->relation_basis());
  }
  return subquotient(ring, source.rank(), k, source.relations());
}

Ideal annihilator(const ModulePresentation& M) {
  const RingPtr& ring = M.ring();
  const auto& S = ambient_of(ring);
  Ideal acc(S, {ring->one()});
  const auto& gb = M.relation_basis();
  for (std::size_t i = 0; i < M.rank(); ++i) {
    std::vector<FreeElement> tagged{FreeElement::unit(S, M.rank(), i)};
    std::vector<Polynomial> gens;
    for (auto& s : syzygies_modulo(tagged, gb, S, M.rank())) gens.push_back(std::move(s.coords[0]));
    acc = ideal_intersection(acc, Ideal(S, std::move(gens)));
  }
  return Ideal(S, acc.groebner_basis());
}

bool is_zero(const ModulePresentation& M) {
  if (M.rank() == 0) return true;
  const auto& S = ambient_of(M.ring());
  const auto& gb = M.relation_basis();
  for (std::size_t i = 0; i < M.rank(); ++i)
    if (!normal_form(FreeElement::unit(S, M.rank(), i), gb, S).is_zero()) return false;
  return true;
}

ModulePresentation quotient_by_ideal(const ModulePresentation& M, const Ideal& I) {
  const auto& S = ambient_of(M.ring());
  std::vector<FreeElement> rels = M.relations();
  for (const auto& g : I.generators())
    for (std::size_t i = 0; i < M.rank(); ++i) {
      FreeElement e = FreeElement::zero(S, M.rank());
      e[i] = g;
      rels.push_back(std::move(e));
    }
  return ModulePresentation(M.ring(), M.rank(), std::move(rels));
}

ModulePresentation direct_sum(const ModulePresentation& M, const ModulePresentation& N) {
  const auto& S = ambient_of(M.ring());
  const std::size_t r = M.rank() + N.rank();
  std::vector<FreeElement> rels;
  for (const auto& a : M.relations()) {
    FreeElement v = FreeElement::zero(S, r);
    for (std::size_t t = 0; t < M.rank(); ++t) v[t] = a[t];
    rels.push_back(std::move(v));
  }
  for (const auto& b : N.relations()) {
    FreeElement v = FreeElement::zero(S, r);
    for (std::size_t t = 0; t < N.rank(); ++t) v[M.rank() + t] = b[t];
    rels.push_back(std::move(v));
  }
  return ModulePresentation(M.ring(), r, std::move(rels));
}

ModulePresentation annihilated_submodule(const ModulePresentation& M, const Ideal& I) {
  const auto& gens = I.generators();
  if (gens.empty()) return M;
  const auto& S = ambient_of(M.ring());
  ModulePresentation target = M;
  for (std::size_t k = 1; k < gens.size(); ++k) target = direct_sum(target, M);
  const std::size_t r = M.rank();
  std::vector<FreeElement> images;
  for (std::size_t j = 0; j < r; ++j) {
    FreeElement v = FreeElement::zero(S, r * gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) v[k * r + j] = gens[k];
    images.push_back(std::move(v));
  }
  return kernel_of_map(M, target, images);
}

bool support_contains(const ModulePresentation& M, const Ideal& p) { return p.contains(annihilator(M)); }

bool annihilates(const ModulePresentation& M, const Polynomial& r) {
  const auto& S = ambient_of(M.ring());
  const auto& gb = M.relation_basis();
  for (std::size_t i = 0; i < M.rank(); ++i) {
    FreeElement e = FreeElement::zero(S, M.rank());
    e[i] = r;
    if (!normal_form(e, gb, S).is_zero()) return false;
  }
  return true;
}

}  // namespace rfd
