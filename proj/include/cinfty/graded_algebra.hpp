#pragma once

// The target world of homotopy transfer: a finite-dimensional graded
// commutative algebra H with a chosen basis, structure constants, and an
// optional Poincare pairing. Instances come from a contraction (harmonic
// basis of a DGCA) or directly from a Poincare GCA with zero differential.

#include <memory>
#include <string>
#include <vector>

#include "hodge.hpp"

namespace cinfty {

using HVec = SparseVec;  // coordinates over the H basis

struct GradedAlgebra {
  std::vector<int> degrees;          // basis index -> degree
  std::vector<std::string> labels;   // basis index -> printable name
  int unit = 0;
  std::map<int, std::vector<int>> by_degree;
  std::vector<std::vector<HVec>> mult;  // structure constants
  bool has_pairing = false;
  std::vector<std::vector<Scalar>> pairing_m;  // <e_i, e_j>
  int top = 0;                                 // pairing degree when present

  int dim() const { return int(degrees.size()); }
  const std::vector<int>& ids_of_degree(int k) const {
    static const std::vector<int> none;
    auto it = by_degree.find(k);
    return it == by_degree.end() ? none : it->second;
  }
  int max_degree() const { return by_degree.empty() ? 0 : by_degree.rbegin()->first; }
  bool degree_exists(int k) const { return by_degree.count(k) != 0; }

  HVec product(int i, int j) const { return mult[i][j]; }

  HVec product(const HVec& x, const HVec& y) const {
    HVec r;
    for (const auto& [i, cx] : x.coef)
      for (const auto& [j, cy] : y.coef) r.add(mult[i][j], cx * cy);
    return r;
  }

  Scalar pair(int i, int j) const { return pairing_m[i][j]; }

  Scalar pair(const HVec& x, const HVec& y) const {
    Scalar s(0);
    for (const auto& [i, cx] : x.coef)
      for (const auto& [j, cy] : y.coef) s += cx * cy * pairing_m[i][j];
    return s;
  }

  bool is_homogeneous(const HVec& x, int* degree_out = nullptr) const {
    if (x.zero()) {
      if (degree_out) *degree_out = 0;
      return true;
    }
    int d = degrees[x.coef.begin()->first];
    for (const auto& [i, c] : x.coef)
      if (degrees[i] != d) return false;
    if (degree_out) *degree_out = d;
    return true;
  }

  std::string to_string(const HVec& x) const {
    if (x.zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [i, c] : x.coef) {
      std::string cs = cinfty::to_string(c);
      if (!first) s += " + ";
      if (cs == "1")
        s += "[" + labels[i] + "]";
      else if (cs == "-1")
        s += "-[" + labels[i] + "]";
      else
        s += cs + "*[" + labels[i] + "]";
      first = false;
    }
    return s;
  }

  // Smallest positive degree with nonzero component (connectivity helper).
  int connectivity_r() const {
    for (const auto& [k, ids] : by_degree)
      if (k > 0 && !ids.empty()) return k;
    return 0;
  }
};

using HPtr = std::shared_ptr<const GradedAlgebra>;

// Harmonic basis of a contraction as a graded algebra: products are harmonic
// projections of ambient products (the cup product on cohomology).
inline HPtr algebra_from_contraction(const ContractionData& C) {
  auto H = std::make_shared<GradedAlgebra>();
  const Dgca& A = *C.A;
  std::vector<Element> reps;
  for (const auto& [k, h] : C.harmonic)
    for (size_t j = 0; j < h.size(); ++j) {
      H->degrees.push_back(k);
      H->labels.push_back(A.to_string(h[j]));
      if (k == 0) H->unit = int(reps.size());
      reps.push_back(h[j]);
    }
  int n = int(reps.size());
  for (int i = 0; i < n; ++i) H->by_degree[H->degrees[i]].push_back(i);

  // Index harmonic basis positions per degree for coordinate assembly.
  std::map<int, std::vector<int>> slot;  // degree -> global indices in order
  for (int i = 0; i < n; ++i) slot[H->degrees[i]].push_back(i);

  auto coords_of = [&](const Element& x, int degree) {
    HVec v;
    if (x.zero()) return v;
    auto c = C.harmonic_coords(degree, x);
    const auto& ids = slot.at(degree);
    for (size_t t = 0; t < c.size(); ++t) v.add(ids[t], c[t]);
    return v;
  };

  H->mult.assign(n, std::vector<HVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element prod = C.pi.apply(A, A.multiply(reps[i], reps[j]));
      if (!prod.zero()) H->mult[i][j] = coords_of(prod, H->degrees[i] + H->degrees[j]);
    }

  if (A.fundamental) {
    H->has_pairing = true;
    H->top = A.fundamental->top;
    H->pairing_m.assign(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) H->pairing_m[i][j] = A.pair(reps[i], reps[j]);
  }
  return H;
}

// A Poincare GCA (d = 0) used directly as the transfer target.
inline HPtr algebra_from_poincare_gca(const Dgca& A) {
  for (int id = 0; id < A.dim(); ++id)
    if (!A.d_of_basis(id).zero())
      throw std::invalid_argument("algebra_from_poincare_gca: differential must vanish");
  auto H = std::make_shared<GradedAlgebra>();
  int n = A.dim();
  H->degrees.resize(n);
  H->labels.resize(n);
  for (int i = 0; i < n; ++i) {
    H->degrees[i] = A.degree_of(i);
    H->labels[i] = A.monomial_name(i);
    H->by_degree[H->degrees[i]].push_back(i);
  }
  H->unit = A.unit_id();
  H->mult.assign(n, std::vector<HVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element e1, e2;
      e1.add(i, Scalar(1));
      e2.add(j, Scalar(1));
      H->mult[i][j] = A.multiply(e1, e2);  // basis ids coincide with coords
    }
  if (A.fundamental) {
    H->has_pairing = true;
    H->top = A.fundamental->top;
    H->pairing_m.assign(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Element e1, e2;
        e1.add(i, Scalar(1));
        e2.add(j, Scalar(1));
        H->pairing_m[i][j] = A.pair(e1, e2);
      }
  }
  return H;
}

}  // namespace cinfty
