// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "conedet/exact/linalg.hpp"
#include "conedet/rational.hpp"

namespace conedet::exact {

/// Generator (V) representation: the cone of nonnegative combinations of the
/// generators.  Canonical objects keep generators scaled (first nonzero
/// coordinate has absolute value one), deduplicated and lexicographically
/// sorted.
struct ConeV {
  int space_dim = 0;
  std::vector<Vec> generators;

  bool operator==(const ConeV&) const = default;
};

/// Inequality (H) representation: {x : h.x >= 0 for every h}.  Same canonical
/// scaling/ordering convention as ConeV.
struct ConeH {
  int space_dim = 0;
  std::vector<Vec> inequalities;

  bool operator==(const ConeH&) const = default;
};

/// Properness flags.  Polyhedral cones are always closed; the flag is kept so
/// reports read uniformly across backends.
struct ProperConeReport {
  bool is_closed = true;
  bool is_full = false;
  bool is_pointed = false;

  bool proper() const { return is_closed && is_full && is_pointed; }
};

/// Fully canonicalized proper cone: extreme rays plus irredundant facet
/// inequalities, both scaled and sorted.  Only proper cones get this far;
/// constructors throw NotProperCone otherwise.
struct Cone {
  int space_dim = 0;
  std::vector<Vec> rays;
  std::vector<Vec> facets;

  bool operator==(const Cone&) const = default;
};

/// A face, identified combinatorially inside a fixed Cone:
///  - tight:   indices of the facets that vanish on the face,
///  - ray_ids: indices of the extreme rays lying on the face,
///  - dim:     linear dimension of its span (0 for the apex face {0}).
struct Face {
  std::vector<int> tight;
  std::vector<int> ray_ids;
  int dim = 0;

  bool operator==(const Face&) const = default;
};

/// Membership outcome with a certificate for either answer: combination
/// coefficients over the generators (V route), or a separating functional
/// that is nonnegative on the cone and strictly negative on the point
/// (for the H route this is a violated inequality, reported by index).
struct MembershipResult {
  bool member = false;
  std::optional<Vec> coefficients;
  std::optional<Vec> separating;
  std::optional<int> violated_index;
};

// -- construction and properness ------------------------------------------

/// Validate, scale, deduplicate and sort.  Zero vectors and length
/// mismatches are rejected.
ConeV make_cone_v(int space_dim, std::vector<Vec> generators);
ConeH make_cone_h(int space_dim, std::vector<Vec> inequalities);

ProperConeReport proper_report(const ConeV& v);
ProperConeReport proper_report(const ConeH& h);

/// Drop generators that are nonnegative combinations of the others.  For a
/// pointed cone the survivors are exactly the extreme rays (the unique
/// minimal generating set, so the scan order does not matter).
ConeV prune_to_extreme(const ConeV& v);

/// Extreme rays of {x : row.x >= 0 for every row}, by the incremental double
/// description method with the combinatorial adjacency test.  Requires
/// rank(rows) == space_dim (otherwise the set has a lineality direction and
/// NotProperCone is thrown).
std::vector<Vec> dd_rays(const Mat& rows, int space_dim);

// -- representation conversion and duality --------------------------------

/// V -> H.  Throws NotProperCone unless the cone is proper.
ConeH to_h_rep(const ConeV& v);
/// H -> V.  Throws NotProperCone unless the cone is proper.
ConeV to_v_rep(const ConeH& h);

/// Generators of the dual cone {y : y.x >= 0 for all x in the cone}.
/// The dual of a proper cone is proper; input must be proper.
ConeV dual_cone(const ConeV& v);

Cone cone_from_generators(const ConeV& v);
Cone cone_from_inequalities(const ConeH& h);

/// The dual swaps the two representations: rays of the dual are the facet
/// normals of the primal and vice versa.
Cone dual_of(const Cone& c);

// -- membership -------------------------------------------------------------

MembershipResult member(const ConeV& v, const Vec& x);
MembershipResult member(const ConeH& h, const Vec& x);
bool contains(const Cone& c, const Vec& x);

// -- lattice operations ------------------------------------------------------

/// H-representation of the intersection (concatenate inequality systems);
/// fully canonicalized to the irredundant facet list when the result is
/// proper.
ConeH intersect(const ConeH& a, const ConeH& b);

/// V-representation of the closed convex hull of the union (concatenate
/// generators); pruned to extreme rays when the result is pointed.
ConeV conv_union(const ConeV& a, const ConeV& b);

// -- faces -------------------------------------------------------------------

/// The smallest face of c containing x (the intersection of all facets tight
/// at x).  Throws InvalidArgument when x lies outside the cone.
Face face_of(const Cone& c, const Vec& x);

/// Generators of a face (the extreme rays listed in ray_ids).
std::vector<Vec> face_generators(const Cone& c, const Face& f);

/// A point in the relative interior of the face: the sum of its extreme
/// rays (the zero vector for the apex face).
Vec relint_point(const Cone& c, const Face& f);

/// The complementary face {y in dual : y.x = 0 for all x in f}, returned as
/// a Face of dual_of(c).  Maps the apex face to the whole dual cone and the
/// whole cone to the dual's apex.
Face complementary_face(const Cone& c, const Face& f);

Face whole_cone_face(const Cone& c);
Face apex_face(const Cone& c);

/// True when every extreme ray of a also lies on b (equivalently a is a
/// subface of b).
bool face_subset(const Face& a, const Face& b);

/// All faces, sorted by (dim, ray_ids).  Walks the 2^f facet subsets, so it
/// refuses cones with more than max_facets facets (BudgetExceeded).
std::vector<Face> enumerate_faces(const Cone& c, int max_facets = 12);

}  // namespace conedet::exact
