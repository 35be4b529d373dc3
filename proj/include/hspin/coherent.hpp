#pragma once

#include <algorithm>
#include <vector>

#include "hspin/angle.hpp"
#include "hspin/hypgeom.hpp"

namespace hspin {

namespace detail {

inline TowerElem sqrt_in(const TowerSpec* spec, const TowerElem& x, const char* what) {
  auto r = tower_sqrt(x);
  check(r.has_value(), Err::AngleMatchFailure,
        std::string("required radical unavailable in tower: ") + what);
  return *r;
}

}  // namespace detail

// Exact cos(2*pi*p/N) for p = 1..floor(N/2), in `spec` or a quadratic
// extension of it when N = 15 demands one.
struct CosTable {
  const TowerSpec* spec;
  std::vector<TowerElem> cosv;  // cosv[p-1] = cos(2 pi p / N)
};

inline CosTable cos_table(int N, const TowerSpec* spec) {
  auto ratv = [&](const TowerSpec* s, Rat q) { return TowerElem::from_rat(s, q); };
  switch (N) {
    case 1: return {spec, {}};
    case 2: return {spec, {ratv(spec, -1)}};
    case 3: return {spec, {ratv(spec, rat(-1, 2))}};
    case 4: return {spec, {ratv(spec, 0), ratv(spec, -1)}};
    case 6: return {spec, {ratv(spec, rat(1, 2)), ratv(spec, rat(-1, 2)), ratv(spec, -1)}};
    case 5: {
      TowerElem r5 = detail::sqrt_in(spec, ratv(spec, 5), "sqrt5");
      return {spec, {(r5 - rat(1)) * rat(1, 4), -(r5 + rat(1)) * rat(1, 4)}};
    }
    case 10: {
      TowerElem r5 = detail::sqrt_in(spec, ratv(spec, 5), "sqrt5");
      TowerElem t = (r5 + rat(1)) * rat(1, 2);
      return {spec,
              {t * rat(1, 2), (t - rat(1)) * rat(1, 2), (TowerElem::from_rat(spec, 1) - t) * rat(1, 2),
               -(t * rat(1, 2)), ratv(spec, -1)}};
    }
    case 15: {
      // cos(2pi/15)-family lives in Q(sqrt5)(sqrt(9-3tau)); extend if needed.
      TowerElem rad15 = ratv(spec, rat(15, 2)) - detail::sqrt_in(spec, ratv(spec, 5), "sqrt5") * rat(3, 2);
      const TowerSpec* e = tower_sqrt(rad15).has_value() ? spec : tower_extend(spec, rad15);
      TowerElem t = tau(e);
      TowerElem r9 = detail::sqrt_in(e, TowerElem::from_rat(e, 9) - t * rat(3), "sqrt(9-3tau)");
      TowerElem r6 = detail::sqrt_in(e, TowerElem::from_rat(e, 6) + t * rat(3), "sqrt(6+3tau)");
      std::vector<TowerElem> cs;
      cs.push_back((t + r9) * rat(1, 4));                                // p=1
      cs.push_back((TowerElem::from_rat(e, 1) - t + r6) * rat(1, 4));    // p=2
      cs.push_back((t - rat(1)) * rat(1, 2));                           // p=3
      cs.push_back((t - r9) * rat(1, 4));                                // p=4
      cs.push_back(TowerElem::from_rat(e, rat(-1, 2)));                 // p=5
      cs.push_back(-(t * rat(1, 2)));                                   // p=6
      cs.push_back((TowerElem::from_rat(e, 1) - t - r6) * rat(1, 4));   // p=7
      return {e, cs};
    }
    default:
      fail(Err::AngleMatchFailure, "no exact cosine table for order " + std::to_string(N));
  }
}

// Coherent system of rotation angles of the elliptic isometry A at its fixed
// point x, canonicalized so that when the orientation determinant forces an
// odd number of negative angles the minus sign sits on the larger |p|.
// Output is sorted ascending, matching the convention of the case studies.
inline std::vector<RationalAngle> coherent_angles(const TMat& A, const ProjectivePoint& x) {
  const TowerSpec* g = A.spec();
  int dim = A.rows();
  check(dim % 2 == 1, Err::UnsupportedDimension, "expected odd ambient dimension n+1");
  int m = (dim - 1) / 2;
  check(m == 1 || m == 2, Err::UnsupportedDimension, "coherent angles for n in {2,4} only");
  check(A * x.x == x.x, Err::Internal, "given point is not fixed by the isometry");
  int N = matrix_order(A);
  if (N == 1) fail(Err::NonIsolatedFixedPoint, "identity has no isolated fixed point");

  // characteristic polynomial restricted to the tangent space: chi_A / (t - 1)
  auto chi = A.charpoly();
  TowerElem one = TowerElem::from_rat(g, 1);
  auto chi_t = poly_divide_linear(chi, one);
  check(!poly_eval(chi_t, one).is_zero(), Err::NonIsolatedFixedPoint,
        "tangent map has a +1 eigenvalue");

  CosTable table = cos_table(N, g);
  const TowerSpec* e = table.spec;
  auto cos_at = [&](int p) { return table.cosv[size_t(p - 1)]; };
  int pmax = int(table.cosv.size());

  std::vector<int> matched;  // |p| per plane, ascending
  if (m == 1) {
    // chi_t = t^2 - 2cos(theta) t + 1
    check((chi_t[0] - one).is_zero(), Err::AngleMatchFailure,
          "tangent map is not a rotation (constant term != 1)");
    TowerElem c = promote(-(chi_t[1]) * rat(1, 2), e);
    for (int p = 1; p <= pmax; ++p)
      if (cos_at(p) == c) matched.push_back(p);
    check(matched.size() == 1, Err::AngleMatchFailure,
          "cosine does not match any angle 2*pi*p/" + std::to_string(N));
  } else {
    // chi_t = (t^2 - 2c1 t + 1)(t^2 - 2c2 t + 1)
    check((chi_t[0] - one).is_zero() && (chi_t[1] - chi_t[3]).is_zero(), Err::AngleMatchFailure,
          "tangent characteristic polynomial is not palindromic");
    TowerElem sum2 = promote(-chi_t[3], e);            // 2c1 + 2c2
    TowerElem prod4 = promote(chi_t[2] - rat(2), e);   // 4 c1 c2
    for (int p1 = 1; p1 <= pmax && matched.empty(); ++p1)
      for (int p2 = p1; p2 <= pmax; ++p2) {
        if (!((cos_at(p1) + cos_at(p2)) * rat(2) == sum2)) continue;
        if (!(cos_at(p1) * cos_at(p2) * rat(4) == prod4)) continue;
        matched = {p1, p2};
        break;
      }
    check(matched.size() == 2, Err::AngleMatchFailure,
          "cosine pair does not match any angles 2*pi*p/" + std::to_string(N));
  }

  // invariant planes and the orientation determinant
  TMat Ae = promote_mat(A, e);
  TVec xe = promote_vec(x.x, e);
  std::vector<TVec> frame;  // w_k, z_k per plane
  auto plane_kernel = [&](int p) {
    TMat q = Ae * Ae - Ae * (cos_at(p) * rat(2)) + TMat::identity(e, dim);
    return q.kernel();
  };
  auto z_of = [&](const TVec& w, int p) {
    TVec aw = Ae * w;
    TVec z(dim, TowerElem(e));
    for (int i = 0; i < dim; ++i) z[i] = aw[i] - cos_at(p) * w[i];
    return z;
  };
  auto det_cols = [&](const std::vector<TVec>& cols) {
    TMat d(e, dim, dim);
    for (int j = 0; j < int(cols.size()); ++j)
      for (int i = 0; i < dim; ++i) d.at(i, j) = cols[j][i];
    return d.det();
  };

  if (m == 1) {
    auto ker = plane_kernel(matched[0]);
    check(ker.size() == 2, Err::Internal, "rotation plane has wrong dimension");
    frame.push_back(ker[0]);
    frame.push_back(z_of(ker[0], matched[0]));
  } else if (matched[0] != matched[1]) {
    for (int k = 0; k < 2; ++k) {
      auto ker = plane_kernel(matched[k]);
      check(ker.size() == 2, Err::Internal, "invariant plane has wrong dimension");
      frame.push_back(ker[0]);
      frame.push_back(z_of(ker[0], matched[k]));
    }
  } else {
    // equal angles: split the 4-dimensional eigenspace into any two planes
    auto ker = plane_kernel(matched[0]);
    check(ker.size() == 4, Err::Internal, "equal-angle eigenspace has wrong dimension");
    frame.push_back(ker[0]);
    frame.push_back(z_of(ker[0], matched[0]));
    bool found = false;
    for (size_t i = 1; i < ker.size() && !found; ++i) {
      std::vector<TVec> cols = frame;
      cols.push_back(ker[i]);
      cols.push_back(z_of(ker[i], matched[1]));
      cols.push_back(xe);
      if (!det_cols(cols).is_zero()) {
        frame.push_back(ker[i]);
        frame.push_back(z_of(ker[i], matched[1]));
        found = true;
      }
    }
    check(found, Err::Internal, "could not split equal-angle eigenspace");
  }
  std::vector<TVec> cols = frame;
  cols.push_back(xe);
  int dsign = certify_sign(det_cols(cols));
  check(dsign != 0, Err::Internal, "degenerate orientation determinant");

  std::vector<RationalAngle> out;
  if (m == 1) {
    out.push_back(RationalAngle(dsign > 0 ? matched[0] : -matched[0], N));
  } else if (dsign > 0) {
    out.push_back(RationalAngle(matched[0], N));
    out.push_back(RationalAngle(matched[1], N));
  } else {
    out.push_back(RationalAngle(matched[0], N));
    out.push_back(RationalAngle(-matched[1], N));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hspin
