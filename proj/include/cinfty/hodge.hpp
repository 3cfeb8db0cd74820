#pragma once

// Hodge homotopies on a finite-dimensional DGCA: validation of the contraction
// identities, construction from the standard inner product (monomial basis
// declared orthonormal, Laplacian inverted per degree), harmonic projection,
// and pairing-orthogonality reports.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gca.hpp"

namespace cinfty {

// Graded linear endo-map of fixed degree shift, stored as per-degree blocks.
struct LinearMap {
  int shift = 0;
  std::map<int, Mat> blocks;  // source degree -> matrix (target-dim x source-dim)

  static LinearMap from_function(const Dgca& A, int shift,
                                 const std::function<Element(int basis_id)>& f) {
    LinearMap L;
    L.shift = shift;
    for (int k = 0; k <= A.max_degree(); ++k) {
      const auto& src = A.ids_of_degree(k);
      if (src.empty()) continue;
      const auto& dst = A.ids_of_degree(k + shift);
      Mat m(int(dst.size()), int(src.size()));
      for (size_t j = 0; j < src.size(); ++j) {
        Element v = f(src[j]);
        for (const auto& [id, c] : v.coef) {
          if (A.degree_of(id) != k + shift)
            throw std::invalid_argument("LinearMap: value has wrong degree");
          m.at(A.position_in_degree(id), int(j)) = c;
        }
      }
      L.blocks.emplace(k, std::move(m));
    }
    return L;
  }

  Element apply(const Dgca& A, const Element& x) const {
    Element r;
    // group by degree
    std::map<int, Element> parts;
    for (const auto& [id, c] : x.coef) parts[A.degree_of(id)].add(id, c);
    for (const auto& [k, part] : parts) {
      auto it = blocks.find(k);
      if (it == blocks.end()) continue;
      auto v = it->second.apply(A.to_degree_vector(k, part));
      r.add(A.from_degree_vector(k + shift, v));
    }
    return r;
  }

  Element apply_basis(const Dgca& A, int id) const {
    Element e;
    e.add(id, Scalar(1));
    return apply(A, e);
  }
};

struct ContractionData {
  const Dgca* A = nullptr;
  LinearMap d;        // degree +1
  LinearMap d_minus;  // degree -1
  LinearMap pi;       // id - d d^- - d^- d
  std::map<int, std::vector<Element>> harmonic;  // degree -> basis

  // Coordinates in the harmonic basis: per degree, a selected row set S with
  // invertible submatrix and its inverse, so coords = inv * v[S].
  struct CoordSolver {
    std::vector<int> row_pick;
    Mat inv;
  };
  std::map<int, CoordSolver> coords;

  int harmonic_dim() const {
    int n = 0;
    for (const auto& [k, v] : harmonic) n += int(v.size());
    return n;
  }

  Element project(const Element& x) const { return pi.apply(*A, x); }

  // Coordinates of a harmonic element (anything in im pi) in the harmonic basis.
  std::vector<Scalar> harmonic_coords(int degree, const Element& x) const {
    auto hit = harmonic.find(degree);
    if (hit == harmonic.end()) {
      if (!x.zero()) throw std::invalid_argument("harmonic_coords: no harmonics in degree");
      return {};
    }
    const auto& cs = coords.at(degree);
    std::vector<Scalar> full = A->to_degree_vector(degree, x);
    std::vector<Scalar> sub(cs.row_pick.size());
    for (size_t i = 0; i < cs.row_pick.size(); ++i) sub[i] = full[cs.row_pick[i]];
    return cs.inv.apply(sub);
  }
};

namespace detail {

inline Mat inverse(const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  Mat aug(m.rows, 2 * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = 1;
  }
  auto piv = rref(aug);
  if (int(piv.size()) != m.rows || piv.back() != m.cols - 1) {
    // pivots must be exactly the first block
    bool ok = int(piv.size()) == m.rows;
    for (size_t i = 0; ok && i < piv.size(); ++i) ok = piv[i] == int(i);
    if (!ok) throw std::invalid_argument("inverse: singular matrix");
  }
  Mat inv(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

// harmonic basis matrix for one degree: columns are the basis vectors
inline Mat harmonic_matrix(const Dgca& A, int k, const std::vector<Element>& h) {
  Mat m(int(A.ids_of_degree(k).size()), int(h.size()));
  for (size_t j = 0; j < h.size(); ++j) {
    auto v = A.to_degree_vector(k, h[j]);
    for (size_t i = 0; i < v.size(); ++i) m.at(int(i), int(j)) = v[i];
  }
  return m;
}

inline void build_coord_solvers(ContractionData& C) {
  const Dgca& A = *C.A;
  for (const auto& [k, h] : C.harmonic) {
    Mat hb = harmonic_matrix(A, k, h);
    // independent rows via pivots of rref(hb^T)
    Mat t = hb.transposed();
    auto piv = rref(t);
    if (int(piv.size()) != hb.cols) throw std::logic_error("harmonic basis not independent");
    ContractionData::CoordSolver cs;
    cs.row_pick = piv;
    Mat sub(hb.cols, hb.cols);
    for (int i = 0; i < hb.cols; ++i)
      for (int j = 0; j < hb.cols; ++j) sub.at(i, j) = hb.at(piv[i], j);
    cs.inv = inverse(sub);
    C.coords.emplace(k, std::move(cs));
  }
}

inline void derive_pi_and_harmonics(ContractionData& C, bool harmonics_from_pi) {
  const Dgca& A = *C.A;
  C.pi = LinearMap::from_function(A, 0, [&](int id) {
    Element e;
    e.add(id, Scalar(1));
    Element r = e;
    r.add(C.d.apply(A, C.d_minus.apply(A, e)), Scalar(-1));
    r.add(C.d_minus.apply(A, C.d.apply(A, e)), Scalar(-1));
    return r;
  });
  if (harmonics_from_pi) {
    for (int k = 0; k <= A.max_degree(); ++k) {
      const auto& ids = A.ids_of_degree(k);
      if (ids.empty()) continue;
      const Mat& P = C.pi.blocks.at(k);
      Mat R = P;
      auto piv = rref(R);
      std::vector<Element> h;
      for (int col : piv) {
        std::vector<Scalar> v(P.rows);
        for (int i = 0; i < P.rows; ++i) v[i] = P.at(i, col);
        h.push_back(A.from_degree_vector(k, v));
      }
      if (!h.empty()) C.harmonic[k] = std::move(h);
    }
  }
  // Normalize degree 0 to the unit itself when it spans.
  auto it = C.harmonic.find(0);
  if (it != C.harmonic.end() && it->second.size() == 1) it->second[0] = A.unit();
  build_coord_solvers(C);
}

}  // namespace detail

// Degree -1 operator given as a sparse basis table; everything else derived.
inline ContractionData contraction_from_table(const Dgca& A,
                                              const std::map<int, Element>& dminus_table) {
  ContractionData C;
  C.A = &A;
  C.d = LinearMap::from_function(A, +1, [&](int id) { return A.d_of_basis(id); });
  C.d_minus = LinearMap::from_function(A, -1, [&](int id) {
    auto it = dminus_table.find(id);
    return it == dminus_table.end() ? Element{} : it->second;
  });
  detail::derive_pi_and_harmonics(C, true);
  return C;
}

// Declare the monomial basis orthonormal, invert the Laplacian per degree.
inline ContractionData hodge_from_inner_product(const Dgca& A) {
  ContractionData C;
  C.A = &A;
  C.d = LinearMap::from_function(A, +1, [&](int id) { return A.d_of_basis(id); });

  std::map<int, Mat> dblock;
  for (int k = 0; k <= A.max_degree(); ++k) dblock[k] = A.d_block(k);
  std::map<int, Mat> laplacian;
  std::map<int, std::vector<std::vector<Scalar>>> harm;
  for (int k = 0; k <= A.max_degree(); ++k) {
    const auto& ids = A.ids_of_degree(k);
    if (ids.empty()) continue;
    Mat L(int(ids.size()), int(ids.size()));
    if (k >= 1 && dblock.count(k - 1)) {
      const Mat& Dp = dblock[k - 1];
      L = L + Dp * Dp.transposed();
    }
    if (dblock.count(k)) {
      const Mat& Dk = dblock[k];
      L = L + Dk.transposed() * Dk;
    }
    harm[k] = kernel_basis(L);
    laplacian[k] = std::move(L);
  }

  C.d_minus.shift = -1;
  for (int k = 0; k <= A.max_degree(); ++k) {
    const auto& src = A.ids_of_degree(k);
    if (src.empty()) continue;
    const auto& dst = A.ids_of_degree(k - 1);
    Mat dm(int(dst.size()), int(src.size()));
    if (!dst.empty() && dblock.count(k - 1)) {
      const Mat Dt = dblock[k - 1].transposed();  // d* : k -> k-1
      const Mat& Lk = laplacian[k - 1];
      const auto& K = harm[k - 1];
      // Solve [Laplacian; K^T] x = [d* e_j; 0]: the coexact preimage.
      Mat sys(Lk.rows + int(K.size()), Lk.cols);
      for (int i = 0; i < Lk.rows; ++i)
        for (int j = 0; j < Lk.cols; ++j) sys.at(i, j) = Lk.at(i, j);
      for (size_t r = 0; r < K.size(); ++r)
        for (int j = 0; j < Lk.cols; ++j) sys.at(Lk.rows + int(r), j) = K[r][j];
      for (int j = 0; j < int(src.size()); ++j) {
        std::vector<Scalar> ej(src.size(), Scalar(0));
        ej[j] = 1;
        auto b = Dt.apply(ej);
        std::vector<Scalar> rhs = b;
        rhs.resize(Lk.rows + K.size(), Scalar(0));
        auto sol = solve_exact(sys, rhs);
        if (!sol.particular) throw std::logic_error("Laplacian solve failed");
        for (int i = 0; i < int(dst.size()); ++i) dm.at(i, j) = (*sol.particular)[i];
      }
    }
    C.d_minus.blocks.emplace(k, std::move(dm));
  }

  // Harmonic basis straight from the Laplacian kernels.
  for (auto& [k, vecs] : harm) {
    if (vecs.empty()) continue;
    std::vector<Element> h;
    for (auto& v : vecs) h.push_back(A.from_degree_vector(k, v));
    C.harmonic[k] = std::move(h);
  }
  detail::derive_pi_and_harmonics(C, false);
  return C;
}

inline Element harmonic_projection(const ContractionData& C, const Element& x) {
  return C.project(x);
}

// Pairing orthogonality: <im d^-, im d^-> = 0 and <im pi, im d^-> = 0.
inline std::vector<std::string> orthogonality_report(const ContractionData& C) {
  const Dgca& A = *C.A;
  if (!A.fundamental) throw std::logic_error("orthogonality_report: no fundamental functional");
  std::vector<std::string> bad;
  for (int i = 0; i < A.dim(); ++i) {
    Element di = C.d_minus.apply_basis(A, i);
    if (di.zero()) continue;
    for (int j = 0; j < A.dim(); ++j) {
      if (A.degree_of(i) + A.degree_of(j) != A.fundamental->top + 2) continue;
      Element dj = C.d_minus.apply_basis(A, j);
      if (!dj.zero() && !is_zero(A.pair(di, dj)))
        bad.push_back("<im d-, im d-> != 0 at " + A.monomial_name(i) + ", " + A.monomial_name(j));
    }
    for (int j = 0; j < A.dim(); ++j) {
      if (A.degree_of(j) + A.degree_of(i) - 1 != A.fundamental->top) continue;
      Element pj = C.pi.apply_basis(A, j);
      if (!pj.zero() && !is_zero(A.pair(pj, di)))
        bad.push_back("<im pi, im d-> != 0 at " + A.monomial_name(j) + ", " + A.monomial_name(i));
    }
  }
  return bad;
}

// Every contraction identity, checked exactly on the full monomial basis.
// Failures are data: the report lists each violated identity with a witness.
inline std::vector<std::string> validate_hodge(const ContractionData& C) {
  const Dgca& A = *C.A;
  std::vector<std::string> bad;
  auto check_zero = [&](const std::function<Element(const Element&)>& op, const std::string& name) {
    for (int id = 0; id < A.dim(); ++id) {
      Element e;
      e.add(id, Scalar(1));
      if (!op(e).zero()) {
        bad.push_back(name + " fails at " + A.monomial_name(id));
        return;
      }
    }
  };
  auto dm = [&](const Element& x) { return C.d_minus.apply(A, x); };
  auto dd = [&](const Element& x) { return C.d.apply(A, x); };
  auto pi = [&](const Element& x) { return C.pi.apply(A, x); };

  check_zero([&](const Element& x) { return dm(dm(x)); }, "(d-)^2 = 0");
  check_zero([&](const Element& x) { return dm(dd(dm(x))) - dm(x); }, "d- d d- = d-");
  check_zero([&](const Element& x) { return dd(dm(dd(x))) - dd(x); }, "d d- d = d");
  check_zero([&](const Element& x) { return dd(pi(x)); }, "d pi = 0");
  check_zero([&](const Element& x) { return pi(dd(x)); }, "pi d = 0");
  check_zero([&](const Element& x) { return dm(pi(x)); }, "d- pi = 0");
  check_zero([&](const Element& x) { return pi(dm(x)); }, "pi d- = 0");
  check_zero([&](const Element& x) { return pi(pi(x)) - pi(x); }, "pi idempotent");
  if (!dm(A.unit()).zero()) bad.push_back("d-(1) != 0");

  // pi restricted to the harmonic basis is the identity there.
  for (const auto& [k, h] : C.harmonic)
    for (size_t j = 0; j < h.size(); ++j)
      if (!(pi(h[j]) == h[j])) {
        bad.push_back("pi not identity on harmonic basis (degree " + std::to_string(k) + ")");
        break;
      }

  // Direct sum: dim harmonic + rank(d d-) + rank(d- d) per degree.
  for (int k = 0; k <= A.max_degree(); ++k) {
    const auto& ids = A.ids_of_degree(k);
    if (ids.empty()) continue;
    int hd = C.harmonic.count(k) ? int(C.harmonic.at(k).size()) : 0;
    Mat ddm(int(ids.size()), int(ids.size()));
    Mat dmd(int(ids.size()), int(ids.size()));
    for (size_t j = 0; j < ids.size(); ++j) {
      Element e;
      e.add(ids[j], Scalar(1));
      auto v1 = A.to_degree_vector(k, dd(dm(e)));
      auto v2 = A.to_degree_vector(k, dm(dd(e)));
      for (size_t i = 0; i < ids.size(); ++i) {
        ddm.at(int(i), int(j)) = v1[i];
        dmd.at(int(i), int(j)) = v2[i];
      }
    }
    if (hd + rank(ddm) + rank(dmd) != int(ids.size()))
      bad.push_back("Hodge decomposition rank mismatch in degree " + std::to_string(k));
  }

  if (A.fundamental) {
    auto orth = orthogonality_report(C);
    bad.insert(bad.end(), orth.begin(), orth.end());
  }

  // Unitality bookkeeping assumes a one-dimensional degree-0 space.
  if (!C.harmonic.count(0) || C.harmonic.at(0).size() != 1 || !(pi(A.unit()) == A.unit()))
    bad.push_back("degenerate: harmonic degree-0 space is not spanned by the unit");

  return bad;
}

}  // namespace cinfty
