// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include "conedet/exact/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "conedet/errors.hpp"
#include "conedet/exact/simplex.hpp"

namespace conedet::exact {

namespace {

std::vector<Vec> canonical_sorted_unique(int space_dim, std::vector<Vec> vs, const char* what) {
  for (auto& v : vs) {
    if (static_cast<int>(v.size()) != space_dim) {
      throw InvalidArgument(std::string(what) + ": vector length does not match space_dim");
    }
    if (is_zero_vec(v)) throw InvalidArgument(std::string(what) + ": zero vector not allowed");
    v = canonical_ray(v);
  }
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Columns of a matrix whose rows are the given vectors restricted to the
// index set `which` (all when empty).
Mat columns_matrix(const std::vector<Vec>& vecs, int space_dim) {
  Mat a(space_dim, Vec(vecs.size(), Rational(0)));
  for (std::size_t j = 0; j < vecs.size(); ++j) {
    for (int i = 0; i < space_dim; ++i) a[i][j] = vecs[j][i];
  }
  return a;
}

// Dynamic bitset over inequality indices, small enough to keep by value.
struct TightSet {
  std::vector<std::uint64_t> bits;

  explicit TightSet(std::size_t n) : bits((n + 63) / 64, 0) {}
  void set(std::size_t i) { bits[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool subset_of(const TightSet& o) const {
    for (std::size_t k = 0; k < bits.size(); ++k) {
      if (bits[k] & ~o.bits[k]) return false;
    }
    return true;
  }
  TightSet intersect(const TightSet& o) const {
    TightSet r = *this;
    for (std::size_t k = 0; k < bits.size(); ++k) r.bits[k] &= o.bits[k];
    return r;
  }
};

}  // namespace

ConeV make_cone_v(int space_dim, std::vector<Vec> generators) {
  if (space_dim <= 0) throw InvalidArgument("make_cone_v: space_dim must be positive");
  return ConeV{space_dim, canonical_sorted_unique(space_dim, std::move(generators), "generator")};
}

ConeH make_cone_h(int space_dim, std::vector<Vec> inequalities) {
  if (space_dim <= 0) throw InvalidArgument("make_cone_h: space_dim must be positive");
  return ConeH{space_dim, canonical_sorted_unique(space_dim, std::move(inequalities), "inequality")};
}

ProperConeReport proper_report(const ConeV& v) {
  ProperConeReport rep;
  rep.is_full = rank(Mat(v.generators)) == v.space_dim;
  // Pointed iff no nonzero nonnegative combination of generators vanishes:
  // check {c >= 0 : G c = 0, sum c = 1} for infeasibility.
  Mat a = columns_matrix(v.generators, v.space_dim);
  a.emplace_back(v.generators.size(), Rational(1));
  Vec b(v.space_dim, Rational(0));
  b.push_back(1);
  rep.is_pointed = lp_feasible(a, b).status == LpStatus::Infeasible;
  return rep;
}

ProperConeReport proper_report(const ConeH& h) {
  ProperConeReport rep;
  rep.is_pointed = rank(Mat(h.inequalities)) == h.space_dim;
  // Full iff some x clears every inequality strictly; by scaling, iff
  // {(u, v, s) >= 0 : A(u - v) - s = 1} is feasible.
  const std::size_t m = h.inequalities.size();
  const int n = h.space_dim;
  Mat a(m, Vec(2 * n + m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      a[i][j] = h.inequalities[i][j];
      a[i][n + j] = -h.inequalities[i][j];
    }
    a[i][2 * n + i] = -1;
  }
  rep.is_full = lp_feasible(a, Vec(m, Rational(1))).status == LpStatus::Optimal;
  return rep;
}

ConeV prune_to_extreme(const ConeV& v) {
  std::vector<Vec> kept = v.generators;
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Vec> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    if (!others.empty() && member(ConeV{v.space_dim, others}, kept[i]).member) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return ConeV{v.space_dim, std::move(kept)};
}

std::vector<Vec> dd_rays(const Mat& rows, int space_dim) {
  const std::size_t m = rows.size();
  if (rank(rows) != space_dim) {
    throw NotProperCone("dd_rays: inequality system has a lineality direction");
  }
  const std::vector<int> base = independent_row_subset(rows, space_dim);
  Mat base_rows;
  for (int i : base) base_rows.push_back(rows[i]);
  const auto inv = invert(base_rows);
  if (!inv) throw Error("dd_rays: base rows not invertible (cannot happen)");

  // Start from the simplicial cone of the base rows: ray j is column j of
  // the inverse (tight on every base row except the j-th).
  std::vector<Vec> rays;
  std::vector<TightSet> tight;
  for (int j = 0; j < space_dim; ++j) {
    Vec r(space_dim);
    for (int i = 0; i < space_dim; ++i) r[i] = (*inv)[i][j];
    rays.push_back(canonical_ray(r));
    TightSet t(m);
    for (int i = 0; i < space_dim; ++i) {
      if (i != j) t.set(static_cast<std::size_t>(base[i]));
    }
    tight.push_back(std::move(t));
  }

  std::vector<bool> processed(m, false);
  for (int i : base) processed[static_cast<std::size_t>(i)] = true;
  std::vector<std::size_t> processed_list(base.begin(), base.end());

  auto exact_tight_set = [&](const Vec& r) {
    TightSet t(m);
    for (std::size_t s : processed_list) {
      if (dot(rows[s], r) == 0) t.set(s);
    }
    return t;
  };

  for (std::size_t t_row = 0; t_row < m; ++t_row) {
    if (processed[t_row]) continue;
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> plus, zero, minus;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(rows[t_row], rays[r]);
      if (val[r] > 0) {
        plus.push_back(r);
      } else if (val[r] == 0) {
        zero.push_back(r);
      } else {
        minus.push_back(r);
      }
    }
    processed[t_row] = true;
    processed_list.push_back(t_row);
    if (minus.empty()) {
      for (std::size_t r : zero) tight[r].set(t_row);
      continue;
    }

    std::vector<Vec> next_rays;
    std::vector<TightSet> next_tight;
    std::set<Vec> seen;
    auto keep = [&](std::size_t r, bool on_hyperplane) {
      if (on_hyperplane) tight[r].set(t_row);
      if (seen.insert(rays[r]).second) {
        next_rays.push_back(rays[r]);
        next_tight.push_back(tight[r]);
      }
    };
    for (std::size_t r : plus) keep(r, false);
    for (std::size_t r : zero) keep(r, true);

    // Adjacent (+,-) pairs spawn the new rays on the hyperplane.  Two rays
    // are adjacent iff no third ray is tight on everything both share
    // (Fukuda-Prodon combinatorial test; valid because the tight sets are
    // exact incidence data for the processed rows).
    for (std::size_t p : plus) {
      for (std::size_t q : minus) {
        const TightSet common = tight[p].intersect(tight[q]);
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.subset_of(tight[r])) adjacent = false;
        }
        if (!adjacent) continue;
        // val[p] * ray_q - val[q] * ray_p: a positive combination since
        // val[q] < 0, and tight on the new row by construction.
        Vec w = axpy(scale(rays[q], val[p]), -val[q], rays[p]);
        w = canonical_ray(w);
        if (!seen.insert(w).second) continue;
        next_tight.push_back(exact_tight_set(w));
        next_rays.push_back(std::move(w));
      }
    }
    rays = std::move(next_rays);
    tight = std::move(next_tight);
  }

  for (auto& r : rays) r = canonical_ray(r);
  std::sort(rays.begin(), rays.end(), lex_less);
  return rays;
}

ConeH to_h_rep(const ConeV& v) {
  const auto rep = proper_report(v);
  if (!rep.proper()) {
    throw NotProperCone("to_h_rep: cone is not proper (closed, pointed, full)");
  }
  return ConeH{v.space_dim, dd_rays(Mat(v.generators), v.space_dim)};
}

ConeV to_v_rep(const ConeH& h) {
  if (rank(Mat(h.inequalities)) != h.space_dim) {
    throw NotProperCone("to_v_rep: cone is not pointed");
  }
  auto rays = dd_rays(Mat(h.inequalities), h.space_dim);
  if (rank(Mat(rays)) != h.space_dim) {
    throw NotProperCone("to_v_rep: cone is not full-dimensional");
  }
  return ConeV{h.space_dim, std::move(rays)};
}

ConeV dual_cone(const ConeV& v) {
  const auto facets = to_h_rep(v);  // properness enforced there
  return ConeV{v.space_dim, facets.inequalities};
}

Cone cone_from_generators(const ConeV& v) {
  const auto facets = to_h_rep(v);  // properness enforced there
  return Cone{v.space_dim, prune_to_extreme(v).generators, facets.inequalities};
}

Cone cone_from_inequalities(const ConeH& h) {
  const auto rays = to_v_rep(h);  // properness enforced there
  // Irredundant facets: drop inequalities that are nonnegative combinations
  // of the others (valid pruning because the cone is full-dimensional).
  return Cone{h.space_dim, rays.generators,
              prune_to_extreme(ConeV{h.space_dim, h.inequalities}).generators};
}

Cone dual_of(const Cone& c) { return Cone{c.space_dim, c.facets, c.rays}; }

MembershipResult member(const ConeV& v, const Vec& x) {
  if (static_cast<int>(x.size()) != v.space_dim) {
    throw InvalidArgument("member: point length does not match space_dim");
  }
  MembershipResult res;
  const auto lp = lp_feasible(columns_matrix(v.generators, v.space_dim), x);
  if (lp.status == LpStatus::Optimal) {
    res.member = true;
    res.coefficients = lp.x;
  } else {
    // The Farkas vector y has y.g <= 0 on the generators and y.x > 0, so -y
    // separates: nonnegative on the cone, strictly negative on x.
    res.member = false;
    res.separating = scale(lp.farkas, Rational(-1));
  }
  return res;
}

MembershipResult member(const ConeH& h, const Vec& x) {
  if (static_cast<int>(x.size()) != h.space_dim) {
    throw InvalidArgument("member: point length does not match space_dim");
  }
  MembershipResult res;
  for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
    if (dot(h.inequalities[i], x) < 0) {
      res.member = false;
      res.violated_index = static_cast<int>(i);
      res.separating = h.inequalities[i];
      return res;
    }
  }
  res.member = true;
  return res;
}

bool contains(const Cone& c, const Vec& x) {
  for (const auto& f : c.facets) {
    if (dot(f, x) < 0) return false;
  }
  return true;
}

ConeH intersect(const ConeH& a, const ConeH& b) {
  if (a.space_dim != b.space_dim) throw InvalidArgument("intersect: space_dim mismatch");
  std::vector<Vec> all = a.inequalities;
  all.insert(all.end(), b.inequalities.begin(), b.inequalities.end());
  ConeH merged = make_cone_h(a.space_dim, std::move(all));
  if (proper_report(merged).proper()) {
    return ConeH{a.space_dim, cone_from_inequalities(merged).facets};
  }
  return merged;
}

ConeV conv_union(const ConeV& a, const ConeV& b) {
  if (a.space_dim != b.space_dim) throw InvalidArgument("conv_union: space_dim mismatch");
  std::vector<Vec> all = a.generators;
  all.insert(all.end(), b.generators.begin(), b.generators.end());
  ConeV merged = make_cone_v(a.space_dim, std::move(all));
  if (proper_report(merged).is_pointed) return prune_to_extreme(merged);
  return merged;
}

namespace {

std::vector<int> rays_on_tight_set(const Cone& c, const std::vector<int>& tight) {
  std::vector<int> ids;
  for (std::size_t r = 0; r < c.rays.size(); ++r) {
    bool on = true;
    for (int j : tight) {
      if (dot(c.facets[j], c.rays[r]) != 0) {
        on = false;
        break;
      }
    }
    if (on) ids.push_back(static_cast<int>(r));
  }
  return ids;
}

int span_dim(const Cone& c, const std::vector<int>& ray_ids) {
  if (ray_ids.empty()) return 0;
  Mat rows;
  for (int r : ray_ids) rows.push_back(c.rays[r]);
  return rank(rows);
}

Face face_from_tight(const Cone& c, std::vector<int> tight) {
  Face f;
  f.tight = std::move(tight);
  f.ray_ids = rays_on_tight_set(c, f.tight);
  f.dim = span_dim(c, f.ray_ids);
  return f;
}

}  // namespace

Face face_of(const Cone& c, const Vec& x) {
  if (static_cast<int>(x.size()) != c.space_dim) {
    throw InvalidArgument("face_of: point length does not match space_dim");
  }
  std::vector<int> tight;
  for (std::size_t j = 0; j < c.facets.size(); ++j) {
    const Rational v = dot(c.facets[j], x);
    if (v < 0) throw InvalidArgument("face_of: point lies outside the cone");
    if (v == 0) tight.push_back(static_cast<int>(j));
  }
  return face_from_tight(c, std::move(tight));
}

std::vector<Vec> face_generators(const Cone& c, const Face& f) {
  std::vector<Vec> gens;
  gens.reserve(f.ray_ids.size());
  for (int r : f.ray_ids) gens.push_back(c.rays[static_cast<std::size_t>(r)]);
  return gens;
}

Vec relint_point(const Cone& c, const Face& f) {
  Vec x(c.space_dim, Rational(0));
  for (int r : f.ray_ids) x = add(x, c.rays[static_cast<std::size_t>(r)]);
  return x;
}

Face complementary_face(const Cone& c, const Face& f) {
  const Cone d = dual_of(c);
  // Generators of the complementary face: dual extreme rays (primal facets)
  // orthogonal to every generator of f.
  std::vector<int> gen_ids;
  for (std::size_t j = 0; j < c.facets.size(); ++j) {
    bool orth = true;
    for (int r : f.ray_ids) {
      if (dot(c.facets[j], c.rays[static_cast<std::size_t>(r)]) != 0) {
        orth = false;
        break;
      }
    }
    if (orth) gen_ids.push_back(static_cast<int>(j));
  }
  Face g;
  g.ray_ids = std::move(gen_ids);
  // Tight inequalities of the complementary face, as a face of the dual:
  // the dual's facets are the primal rays.
  for (std::size_t i = 0; i < d.facets.size(); ++i) {
    bool tight_everywhere = true;
    for (int j : g.ray_ids) {
      if (dot(d.facets[i], d.rays[static_cast<std::size_t>(j)]) != 0) {
        tight_everywhere = false;
        break;
      }
    }
    if (tight_everywhere) g.tight.push_back(static_cast<int>(i));
  }
  g.dim = span_dim(d, g.ray_ids);
  return g;
}

Face whole_cone_face(const Cone& c) {
  std::vector<int> all(c.rays.size());
  for (std::size_t i = 0; i < c.rays.size(); ++i) all[i] = static_cast<int>(i);
  Face f;
  f.ray_ids = std::move(all);
  f.dim = c.space_dim;
  return f;  // no facet is tight on a full-dimensional cone's interior
}

Face apex_face(const Cone& c) {
  Face f;
  f.tight.resize(c.facets.size());
  for (std::size_t j = 0; j < c.facets.size(); ++j) f.tight[j] = static_cast<int>(j);
  f.dim = 0;
  return f;
}

bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.ray_ids.begin(), b.ray_ids.end(), a.ray_ids.begin(), a.ray_ids.end());
}

std::vector<Face> enumerate_faces(const Cone& c, int max_facets) {
  const std::size_t m = c.facets.size();
  if (static_cast<int>(m) > max_facets || m > 31) {
    throw BudgetExceeded("enumerate_faces: facet count exceeds the enumeration budget");
  }
  // Incidence mask per ray: which facets vanish on it.
  std::vector<std::uint32_t> ray_mask(c.rays.size(), 0);
  for (std::size_t r = 0; r < c.rays.size(); ++r) {
    for (std::size_t j = 0; j < m; ++j) {
      if (dot(c.facets[j], c.rays[r]) == 0) ray_mask[r] |= (std::uint32_t{1} << j);
    }
  }
  // Every face is an intersection of facets, so walking all facet subsets
  // and keying by the surviving ray set enumerates each face exactly once.
  std::set<std::vector<int>> seen;
  std::vector<Face> faces;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<int> rays_in;
    std::uint32_t closure = ~std::uint32_t{0};
    for (std::size_t r = 0; r < c.rays.size(); ++r) {
      if ((ray_mask[r] & mask) == mask) {
        rays_in.push_back(static_cast<int>(r));
        closure &= ray_mask[r];
      }
    }
    if (!seen.insert(rays_in).second) continue;
    Face f;
    if (rays_in.empty()) closure = (m == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << m) - 1);
    for (std::size_t j = 0; j < m; ++j) {
      if (closure & (std::uint32_t{1} << j)) f.tight.push_back(static_cast<int>(j));
    }
    f.ray_ids = std::move(rays_in);
    f.dim = span_dim(c, f.ray_ids);
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.ray_ids < b.ray_ids;
  });
  return faces;
}

}  // namespace conedet::exact
