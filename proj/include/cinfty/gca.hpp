#pragma once

// Exact-arithmetic graded commutative algebra engine: canonical monomials with
// Koszul signs, sparse elements, differentials, Poincare pairings, and graded
// cohomology. Two presentations share one interface:
//
//   * free mode: the free graded-commutative algebra on named generators,
//     differential given on generators and extended by the Leibniz rule;
//   * table mode: a finite basis ("generators" of arbitrary degree) with an
//     explicit structure-constant table; products absent from the table are
//     zero. This covers Poincare GCAs (zero differential) entered degreewise.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace cinfty {

struct Generator {
  std::string name;
  int degree = 0;
};

// Canonical monomial: generator indices sorted ascending; an odd generator
// appears at most once, even generators may repeat.
using Word = std::vector<int>;

// Sparse element over the algebra's monomial basis (basis ids).
using Element = SparseVec;

class Dgca {
 public:
  std::string name;
  std::vector<Generator> gens;
  bool table_mode = false;
  bool truncated = false;  // free mode with even generators: A^{>top} = 0
  std::optional<int> top_degree;

  // Monomial basis, sorted by (degree, lexicographic word). basis_[0] = 1.
  const std::vector<Word>& basis() const { return basis_; }
  int dim() const { return int(basis_.size()); }
  int degree_of(int id) const { return basis_degree_[id]; }
  int unit_id() const { return 0; }
  const std::vector<int>& ids_of_degree(int k) const {
    static const std::vector<int> none;
    auto it = by_degree_.find(k);
    return it == by_degree_.end() ? none : it->second;
  }
  int max_degree() const { return by_degree_.empty() ? 0 : by_degree_.rbegin()->first; }
  int position_in_degree(int id) const { return pos_in_degree_[id]; }
  int id_of_word(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
  }
  std::string monomial_name(int id) const;

  struct Fundamental {
    int top = 0;
    int orient_id = 0;
    Scalar scale = Scalar(1);
  };
  std::optional<Fundamental> fundamental;

  // -- construction ---------------------------------------------------------

  // Two-phase builders: monomial basis first, then the differential (the diff
  // callback sees the finished basis and can use monomial()/multiply()).
  struct FreeSpec {
    std::string name;
    std::vector<Generator> gens;
    std::optional<int> top_degree;
    size_t basis_cap = size_t(1) << 20;
  };
  static Dgca build_free(const FreeSpec& spec,
                         const std::function<Element(const Dgca&, int gen)>& diff_on_gen);

  struct TableSpec {
    std::string name;
    std::vector<Generator> gens;  // one per basis element of degree >= 1
    // products keyed by generator-index pair (i <= j); value over basis ids.
    // Built in the callback, after ids exist.
    size_t basis_cap = size_t(1) << 20;
  };
  static Dgca build_table(
      const TableSpec& spec,
      const std::function<void(Dgca&, std::map<std::pair<int, int>, Element>&,
                               std::map<int, Element>&)>& fill);

  void set_fundamental(int orient_id, Scalar scale = Scalar(1));

  // -- operations ------------------------------------------------------------

  // Koszul reordering of an arbitrary factor list; nullopt encodes zero
  // (a repeated odd generator).
  std::optional<std::pair<Word, int>> canonicalize(Word factors) const;

  Element monomial(const Word& unordered_factors) const;
  Element element_of_gen(int gen_index) const;
  Element unit() const { return monomial({}); }

  Element multiply(const Element& x, const Element& y) const;
  Element apply_d(const Element& x) const;
  const Element& d_of_basis(int id) const { return d_of_[id]; }

  // <x,y> = scale * orientation coefficient of x*y; zero without complement.
  Scalar pair(const Element& x, const Element& y) const;
  Scalar integrate(const Element& x) const;

  bool is_homogeneous(const Element& x, int* degree_out = nullptr) const;

  std::string to_string(const Element& x) const;

  // -- cohomology -------------------------------------------------------------

  struct Cohomology {
    std::map<int, std::vector<Element>> reps;  // degree -> representatives
    int betti(int k) const {
      auto it = reps.find(k);
      return it == reps.end() ? 0 : int(it->second.size());
    }
  };
  // Representatives of ker d / im d, plus projection of closed elements.
  Cohomology cohomology() const;
  // Coordinates of a closed homogeneous element in the degree-k representative
  // basis, modulo im d. Throws if x is not closed.
  std::vector<Scalar> project_to_cohomology(const Cohomology& H, const Element& x, int k) const;

  // d as a matrix block from degree k to k+1 (rows indexed by degree-k+1 ids).
  Mat d_block(int k) const;

  Element from_degree_vector(int k, const std::vector<Scalar>& v) const;
  std::vector<Scalar> to_degree_vector(int k, const Element& x) const;

 private:
  std::vector<Word> basis_;
  std::vector<int> basis_degree_;
  std::vector<int> pos_in_degree_;
  std::map<Word, int> index_;
  std::map<int, std::vector<int>> by_degree_;
  std::vector<Element> d_of_;
  std::map<std::pair<int, int>, Element> table_;  // generator-pair products
  mutable std::map<std::pair<int, int>, Element> prod_memo_;

  void enumerate_free_basis(size_t cap);
  void finalize_basis();
  Element multiply_basis(int i, int j) const;
  void validate_d_squared() const;
  void validate_table() const;
  void validate_fundamental() const;
};

// ---------------------------------------------------------------------------

inline std::optional<std::pair<Word, int>> Dgca::canonicalize(Word f) const {
  for (int g : f)
    if (g < 0 || g >= int(gens.size())) throw std::out_of_range("unknown generator index");
  // Insertion sort counting odd-odd transpositions.
  int sign = 1;
  for (size_t i = 1; i < f.size(); ++i) {
    size_t j = i;
    while (j > 0 && f[j - 1] > f[j]) {
      if (gens[f[j - 1]].degree % 2 != 0 && gens[f[j]].degree % 2 != 0) sign = -sign;
      std::swap(f[j - 1], f[j]);
      --j;
    }
  }
  for (size_t i = 1; i < f.size(); ++i)
    if (f[i] == f[i - 1] && gens[f[i]].degree % 2 != 0) return std::nullopt;
  return std::make_pair(std::move(f), sign);
}

inline Element Dgca::monomial(const Word& unordered) const {
  Element e;
  auto c = canonicalize(unordered);
  if (!c) return e;
  int id = id_of_word(c->first);
  if (id < 0) return e;  // outside the truncated basis
  e.add(id, Scalar(c->second));
  return e;
}

inline Element Dgca::element_of_gen(int g) const { return monomial({g}); }

inline Element Dgca::multiply_basis(int i, int j) const {
  if (i == 0) {
    Element e;
    e.add(j, Scalar(1));
    return e;
  }
  if (j == 0) {
    Element e;
    e.add(i, Scalar(1));
    return e;
  }
  auto key = std::make_pair(i, j);
  auto memo = prod_memo_.find(key);
  if (memo != prod_memo_.end()) return memo->second;
  Element result;
  if (!table_mode) {
    Word w = basis_[i];
    w.insert(w.end(), basis_[j].begin(), basis_[j].end());
    auto c = canonicalize(std::move(w));
    if (c) {
      int id = id_of_word(c->first);
      if (id >= 0) result.add(id, Scalar(c->second));
      // id < 0 only in truncated mode: the product lies above top_degree.
    }
  } else {
    // Basis words have length <= 1; product of two generators via the table.
    int gi = basis_[i][0], gj = basis_[j][0];
    bool flip = gi > gj;
    if (flip) std::swap(gi, gj);
    auto it = table_.find({gi, gj});
    if (it != table_.end()) {
      result = it->second;
      if (flip && gens[gi].degree % 2 != 0 && gens[gj].degree % 2 != 0)
        result = result.scaled(Scalar(-1));
    }
  }
  prod_memo_.emplace(key, result);
  return result;
}

inline Element Dgca::multiply(const Element& x, const Element& y) const {
  Element r;
  for (const auto& [i, cx] : x.coef)
    for (const auto& [j, cy] : y.coef) r.add(multiply_basis(i, j), cx * cy);
  return r;
}

inline Element Dgca::apply_d(const Element& x) const {
  Element r;
  for (const auto& [i, c] : x.coef) r.add(d_of_[i], c);
  return r;
}

inline Scalar Dgca::integrate(const Element& x) const {
  if (!fundamental) throw std::logic_error("integrate: no fundamental functional");
  return fundamental->scale * x.at(fundamental->orient_id);
}

inline Scalar Dgca::pair(const Element& x, const Element& y) const {
  if (!fundamental) throw std::logic_error("pair: no fundamental functional");
  return integrate(multiply(x, y));
}

inline bool Dgca::is_homogeneous(const Element& x, int* degree_out) const {
  if (x.zero()) {
    if (degree_out) *degree_out = 0;
    return true;
  }
  int deg = basis_degree_[x.coef.begin()->first];
  for (const auto& [i, c] : x.coef)
    if (basis_degree_[i] != deg) return false;
  if (degree_out) *degree_out = deg;
  return true;
}

inline std::string Dgca::monomial_name(int id) const {
  if (basis_[id].empty()) return "1";
  std::string s;
  for (size_t k = 0; k < basis_[id].size(); ++k) {
    if (k) s += "*";
    s += gens[basis_[id][k]].name;
  }
  return s;
}

inline std::string Dgca::to_string(const Element& x) const {
  if (x.zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [i, c] : x.coef) {
    std::string cs = cinfty::to_string(c);
    if (!first) s += " + ";
    if (cs == "1" && i != 0)
      s += monomial_name(i);
    else if (cs == "-1" && i != 0)
      s += "-" + monomial_name(i);
    else {
      s += cs;
      if (i != 0) s += "*" + monomial_name(i);
    }
    first = false;
  }
  return s;
}

inline void Dgca::enumerate_free_basis(size_t cap) {
  bool has_even = false;
  for (const auto& g : gens) {
    if (g.degree < 1) throw std::invalid_argument("free generators need degree >= 1");
    if (g.degree % 2 == 0) has_even = true;
  }
  if (has_even && !top_degree)
    throw std::invalid_argument("free algebra with even generators needs a top degree");
  truncated = has_even;
  int limit;
  if (top_degree && has_even) {
    limit = *top_degree;
  } else {
    limit = 0;
    for (const auto& g : gens) limit += g.degree;  // exterior: full algebra
  }
  // Depth-first over generator multiplicities within the degree budget.
  Word current;
  std::function<void(int, int)> rec = [&](int gi, int deg) {
    if (gi == int(gens.size())) {
      basis_.push_back(current);
      if (basis_.size() > cap) throw std::length_error("monomial basis exceeds cap");
      return;
    }
    rec(gi + 1, deg);
    int reps_allowed = gens[gi].degree % 2 != 0 ? 1 : limit;
    int used = 0;
    while (used < reps_allowed && deg + gens[gi].degree <= limit) {
      current.push_back(gi);
      deg += gens[gi].degree;
      ++used;
      rec(gi + 1, deg);
    }
    for (int k = 0; k < used; ++k) current.pop_back();
  };
  rec(0, 0);
  finalize_basis();
}

inline void Dgca::finalize_basis() {
  auto deg_of_word = [&](const Word& w) {
    int d = 0;
    for (int g : w) d += gens[g].degree;
    return d;
  };
  std::sort(basis_.begin(), basis_.end(), [&](const Word& a, const Word& b) {
    int da = deg_of_word(a), db = deg_of_word(b);
    if (da != db) return da < db;
    return a < b;
  });
  basis_degree_.resize(basis_.size());
  pos_in_degree_.resize(basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i) {
    basis_degree_[i] = deg_of_word(basis_[i]);
    index_[basis_[i]] = int(i);
    auto& bucket = by_degree_[basis_degree_[i]];
    pos_in_degree_[i] = int(bucket.size());
    bucket.push_back(int(i));
  }
  if (basis_.empty() || !basis_[0].empty()) throw std::logic_error("basis must contain the unit");
}

inline Dgca Dgca::build_free(const FreeSpec& spec,
                             const std::function<Element(const Dgca&, int)>& diff_on_gen) {
  Dgca A;
  A.name = spec.name;
  A.gens = spec.gens;
  A.top_degree = spec.top_degree;
  std::set<std::string> names;
  for (const auto& g : A.gens)
    if (!names.insert(g.name).second) throw std::invalid_argument("duplicate generator name");
  A.enumerate_free_basis(spec.basis_cap);
  // d on generators, then Leibniz over each basis word.
  std::vector<Element> dgen(A.gens.size());
  for (size_t g = 0; g < A.gens.size(); ++g) {
    dgen[g] = diff_on_gen(A, int(g));
    int dd = 0;
    if (!A.is_homogeneous(dgen[g], &dd) || (!dgen[g].zero() && dd != A.gens[g].degree + 1))
      throw std::invalid_argument("d(" + A.gens[g].name + ") must raise degree by one");
  }
  A.d_of_.resize(A.basis_.size());
  for (size_t id = 0; id < A.basis_.size(); ++id) {
    const Word& w = A.basis_[id];
    Element total;
    int sign_deg = 0;
    for (size_t p = 0; p < w.size(); ++p) {
      if (!dgen[w[p]].zero()) {
        // prefix * d(g_p) * suffix with the Koszul sign of the prefix.
        Element term = dgen[w[p]];
        Word prefix(w.begin(), w.begin() + p);
        Word suffix(w.begin() + p + 1, w.end());
        term = A.multiply(A.monomial(prefix), term);
        term = A.multiply(term, A.monomial(suffix));
        if (sign_deg % 2 != 0) term = term.scaled(Scalar(-1));
        total.add(term);
      }
      sign_deg += A.gens[w[p]].degree;
    }
    A.d_of_[id] = std::move(total);
  }
  A.validate_d_squared();
  return A;
}

inline Dgca Dgca::build_table(
    const TableSpec& spec,
    const std::function<void(Dgca&, std::map<std::pair<int, int>, Element>&,
                             std::map<int, Element>&)>& fill) {
  Dgca A;
  A.name = spec.name;
  A.gens = spec.gens;
  A.table_mode = true;
  std::set<std::string> names;
  for (const auto& g : A.gens) {
    if (g.degree < 1) throw std::invalid_argument("table basis elements need degree >= 1");
    if (!names.insert(g.name).second) throw std::invalid_argument("duplicate generator name");
  }
  A.basis_.push_back({});
  for (size_t g = 0; g < A.gens.size(); ++g) A.basis_.push_back({int(g)});
  if (A.basis_.size() > spec.basis_cap) throw std::length_error("basis exceeds cap");
  A.finalize_basis();
  std::map<std::pair<int, int>, Element> table;
  std::map<int, Element> diff;
  fill(A, table, diff);
  for (const auto& [key, val] : table) {
    if (key.first > key.second) throw std::invalid_argument("table keys must have i <= j");
    int want = A.gens[key.first].degree + A.gens[key.second].degree;
    int got = 0;
    if (!A.is_homogeneous(val, &got) || (!val.zero() && got != want))
      throw std::invalid_argument("table product has wrong degree");
    if (key.first == key.second && A.gens[key.first].degree % 2 != 0 && !val.zero())
      throw std::invalid_argument("square of an odd element must be zero");
  }
  A.table_ = std::move(table);
  A.d_of_.assign(A.basis_.size(), Element{});
  for (const auto& [g, dg] : diff) {
    int dd = 0;
    if (!A.is_homogeneous(dg, &dd) || (!dg.zero() && dd != A.gens[g].degree + 1))
      throw std::invalid_argument("d must raise degree by one");
    A.d_of_[g + 1] = dg;  // basis id of generator g is g+1
  }
  A.validate_table();
  A.validate_d_squared();
  return A;
}

inline void Dgca::validate_d_squared() const {
  for (int id = 0; id < dim(); ++id)
    if (!apply_d(d_of_[id]).zero())
      throw std::invalid_argument("d*d != 0 on monomial " + monomial_name(id));
}

inline void Dgca::validate_table() const {
  // Associativity on all basis triples and the Leibniz rule on all pairs.
  for (int i = 1; i < dim(); ++i) {
    for (int j = 1; j < dim(); ++j) {
      Element xy = multiply_basis(i, j);
      // graded commutativity is built into multiply_basis; check Leibniz:
      Element lhs = apply_d(xy);
      Element rhs = multiply(d_of_[i], monomial(basis_[j]));
      Element t2 = multiply(monomial(basis_[i]), apply_d(monomial(basis_[j])));
      rhs.add(t2, Scalar(basis_degree_[i] % 2 != 0 ? -1 : 1));
      if (!(lhs == rhs))
        throw std::invalid_argument("Leibniz fails on " + monomial_name(i) + ", " +
                                    monomial_name(j));
      for (int k = 1; k < dim(); ++k) {
        Element a = multiply(xy, monomial(basis_[k]));
        Element b = multiply(monomial(basis_[i]), multiply_basis(j, k));
        if (!(a == b))
          throw std::invalid_argument("associativity fails on " + monomial_name(i) + ", " +
                                      monomial_name(j) + ", " + monomial_name(k));
      }
    }
  }
}

inline void Dgca::set_fundamental(int orient_id, Scalar scale) {
  Fundamental f;
  f.top = basis_degree_[orient_id];
  f.orient_id = orient_id;
  f.scale = scale;
  fundamental = f;
  if (!top_degree) top_degree = f.top;
  validate_fundamental();
}

inline void Dgca::validate_fundamental() const {
  // integral of d(x) = 0 for every monomial of degree top-1: d is then graded
  // skew-adjoint for the induced pairing.
  for (int id : ids_of_degree(fundamental->top - 1))
    if (!is_zero(integrate(d_of_[id])))
      throw std::invalid_argument("fundamental functional does not kill im d (at " +
                                  monomial_name(id) + ")");
}

inline Mat Dgca::d_block(int k) const {
  const auto& src = ids_of_degree(k);
  const auto& dst = ids_of_degree(k + 1);
  Mat m(int(dst.size()), int(src.size()));
  for (size_t j = 0; j < src.size(); ++j)
    for (const auto& [id, c] : d_of_[src[j]].coef) m.at(pos_in_degree_[id], int(j)) = c;
  return m;
}

inline Element Dgca::from_degree_vector(int k, const std::vector<Scalar>& v) const {
  const auto& ids = ids_of_degree(k);
  Element e;
  for (size_t j = 0; j < ids.size(); ++j) e.add(ids[j], v[j]);
  return e;
}

inline std::vector<Scalar> Dgca::to_degree_vector(int k, const Element& x) const {
  const auto& ids = ids_of_degree(k);
  std::vector<Scalar> v(ids.size(), Scalar(0));
  for (const auto& [id, c] : x.coef) {
    if (basis_degree_[id] != k) throw std::invalid_argument("to_degree_vector: wrong degree");
    v[pos_in_degree_[id]] = c;
  }
  return v;
}

inline Dgca::Cohomology Dgca::cohomology() const {
  Cohomology H;
  for (int k = 0; k <= max_degree(); ++k) {
    const auto& ids = ids_of_degree(k);
    if (ids.empty()) continue;
    Mat dk = d_block(k);
    auto cycles = kernel_basis(dk);
    // image of d from below
    std::vector<std::vector<Scalar>> image;
    if (k >= 1) {
      Mat dprev = d_block(k - 1);
      for (int j = 0; j < dprev.cols; ++j) {
        std::vector<Scalar> col(dprev.rows);
        bool nz = false;
        for (int i = 0; i < dprev.rows; ++i) {
          col[i] = dprev.at(i, j);
          if (!is_zero(col[i])) nz = true;
        }
        if (nz) image.push_back(std::move(col));
      }
    }
    Subspace im = Subspace::span(int(ids.size()), image);
    Subspace acc = im;
    std::vector<Element> reps;
    for (const auto& z : cycles) {
      if (acc.contains(z)) continue;
      std::vector<std::vector<Scalar>> vecs;
      for (int r = 0; r < acc.basis.rows; ++r) {
        std::vector<Scalar> row(acc.dim_ambient);
        for (int j = 0; j < acc.dim_ambient; ++j) row[j] = acc.basis.at(r, j);
        vecs.push_back(std::move(row));
      }
      vecs.push_back(z);
      acc = Subspace::span(int(ids.size()), vecs);
      reps.push_back(from_degree_vector(k, z));
    }
    if (!reps.empty()) H.reps[k] = std::move(reps);
  }
  return H;
}

inline std::vector<Scalar> Dgca::project_to_cohomology(const Cohomology& H, const Element& x,
                                                       int k) const {
  if (!apply_d(x).zero()) throw std::invalid_argument("project_to_cohomology: element not closed");
  const auto& ids = ids_of_degree(k);
  auto itr = H.reps.find(k);
  int nreps = itr == H.reps.end() ? 0 : int(itr->second.size());
  // Solve [reps | im d] c = x and read the rep block.
  std::vector<std::vector<Scalar>> cols;
  for (int r = 0; r < nreps; ++r) cols.push_back(to_degree_vector(k, itr->second[r]));
  if (k >= 1) {
    Mat dprev = d_block(k - 1);
    for (int j = 0; j < dprev.cols; ++j) {
      std::vector<Scalar> col(dprev.rows);
      for (int i = 0; i < dprev.rows; ++i) col[i] = dprev.at(i, j);
      cols.push_back(std::move(col));
    }
  }
  Mat M(int(ids.size()), int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < ids.size(); ++i) M.at(int(i), int(j)) = cols[j][i];
  auto sol = solve_exact(M, to_degree_vector(k, x));
  if (!sol.particular) throw std::logic_error("closed element outside ker d span");
  return std::vector<Scalar>(sol.particular->begin(), sol.particular->begin() + nreps);
}

}  // namespace cinfty
