#pragma once

// Built-in models: the Heisenberg exterior algebra, the eight-generator
// nilmanifold sector with its product contraction, and small Poincare GCAs
// used by the formality machinery.

#include <array>

#include "hodge.hpp"

namespace cinfty::examples {

// Lambda(a,b,c), |a|=|b|=|c|=1, dc = ab, orientation abc.
inline Dgca heisenberg() {
  Dgca::FreeSpec s;
  s.name = "heisenberg";
  s.gens = {{"a", 1}, {"b", 1}, {"c", 1}};
  Dgca A = Dgca::build_free(s, [](const Dgca& A, int g) {
    return g == 2 ? A.monomial({0, 1}) : Element{};
  });
  A.set_fundamental(A.id_of_word({0, 1, 2}));
  return A;
}

// d-(ab) = c, zero elsewhere: the hand contraction for the Heisenberg model.
inline ContractionData heisenberg_given_contraction(const Dgca& A) {
  std::map<int, Element> t;
  t[A.id_of_word({0, 1})] = A.monomial({2});
  return contraction_from_table(A, t);
}

// Eight degree-1 generators mu, mubar, nu, nubar, eta, etabar, theta,
// thetabar with d(theta) = mu nu and d(thetabar) = mubar nubar; orientation
// is the product of all generators in declaration order.
inline Dgca fm8() {
  Dgca::FreeSpec s;
  s.name = "fm8";
  s.gens = {{"mu", 1},  {"mubar", 1},  {"nu", 1},    {"nubar", 1},
            {"eta", 1}, {"etabar", 1}, {"theta", 1}, {"thetabar", 1}};
  Dgca A = Dgca::build_free(s, [](const Dgca& A, int g) {
    if (g == 6) return A.monomial({0, 2});
    if (g == 7) return A.monomial({1, 3});
    return Element{};
  });
  A.set_fundamental(A.id_of_word({0, 1, 2, 3, 4, 5, 6, 7}));
  return A;
}

// The coboundary-to-primitive table for fm8, assembled as the tensor product
// of the two Heisenberg-type factors Lambda(mu,nu,theta) and
// Lambda(mubar,nubar,thetabar) with the spectator factor Lambda(eta,etabar):
//   d- = d1- ox 1  +  pi1 ox d2-.
// Within each factor, d-(mu nu) = theta and the harmonic monomials are
// {1, mu, nu, mu theta, nu theta, mu nu theta} (same with bars).
inline std::map<int, Element> fm8_given_homotopy_table(const Dgca& A) {
  auto in = [](const Word& w, std::initializer_list<int> set) {
    Word r;
    for (int g : w)
      for (int s : set)
        if (g == s) r.push_back(g);
    return r;
  };
  auto koszul_sign_to_grouping = [&](const Word& w, const Word& grouped) {
    // all generators have degree 1: sign = parity of the permutation
    std::vector<int> perm;
    for (int g : grouped)
      for (size_t i = 0; i < w.size(); ++i)
        if (w[i] == g) perm.push_back(int(i));
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) sign = -sign;
    return sign;
  };
  auto word_is = [](const Word& w, std::initializer_list<int> v) { return w == Word(v); };
  auto factor1_harmonic = [&](const Word& w1) {
    return w1.empty() || word_is(w1, {0}) || word_is(w1, {2}) || word_is(w1, {0, 6}) ||
           word_is(w1, {2, 6}) || word_is(w1, {0, 2, 6});
  };
  std::map<int, Element> table;
  for (int id = 0; id < A.dim(); ++id) {
    const Word& w = A.basis()[id];
    Word w1 = in(w, {0, 2, 6});   // mu, nu, theta
    Word w2 = in(w, {1, 3, 7});   // mubar, nubar, thetabar
    Word w3 = in(w, {4, 5});      // eta, etabar
    Word grouped = w1;
    grouped.insert(grouped.end(), w2.begin(), w2.end());
    grouped.insert(grouped.end(), w3.begin(), w3.end());
    int s = koszul_sign_to_grouping(w, grouped);
    Element val;
    if (word_is(w1, {0, 2})) {  // d1-(mu nu) = theta
      Word out = {6};
      out.insert(out.end(), w2.begin(), w2.end());
      out.insert(out.end(), w3.begin(), w3.end());
      val.add(A.monomial(out), Scalar(s));
    } else if (factor1_harmonic(w1) && word_is(w2, {1, 3})) {
      Word out = w1;
      out.push_back(7);  // thetabar
      out.insert(out.end(), w3.begin(), w3.end());
      int sgn = s * (int(w1.size()) % 2 != 0 ? -1 : 1);
      val.add(A.monomial(out), Scalar(sgn));
    }
    if (!val.zero()) table[id] = val;
  }
  return table;
}

inline ContractionData fm8_given_contraction(const Dgca& A) {
  return contraction_from_table(A, fm8_given_homotopy_table(A));
}

// (r-1)-connected Poincare GCA of degree 4r-1 with b_r = b:
// basis 1; e_1..e_b (deg r); p (deg 2r-1, the Lefschetz element);
// w (deg 2r); f_1..f_b (deg 3r-1); vol (deg 4r-1), with
//   e_i e_j = g_ij w,  e_i p = f_i,  e_i f_j = g_ij vol,  p w = vol.
// g symmetric for r even, antisymmetric for r odd.
inline Dgca poincare_4rm1(int r, const std::vector<std::vector<Scalar>>& g) {
  int b = int(g.size());
  Dgca::TableSpec s;
  s.name = "poincare_4rm1_r" + std::to_string(r) + "_b" + std::to_string(b);
  for (int i = 1; i <= b; ++i) s.gens.push_back({"e" + std::to_string(i), r});
  s.gens.push_back({"p", 2 * r - 1});
  s.gens.push_back({"w", 2 * r});
  for (int i = 1; i <= b; ++i) s.gens.push_back({"f" + std::to_string(i), 3 * r - 1});
  s.gens.push_back({"vol", 4 * r - 1});
  int P = b, W = b + 1, F0 = b + 2, VOL = 2 * b + 2;
  Dgca A = Dgca::build_table(
      s, [&](Dgca& A, std::map<std::pair<int, int>, Element>& table, std::map<int, Element>&) {
        for (int i = 0; i < b; ++i)
          for (int j = i; j < b; ++j)
            if (!is_zero(g[i][j])) table[{i, j}] = A.element_of_gen(W).scaled(g[i][j]);
        for (int i = 0; i < b; ++i) {
          table[{i, P}] = A.element_of_gen(F0 + i);
          for (int j = 0; j < b; ++j)
            if (!is_zero(g[i][j])) {
              auto key = std::minmax(i, F0 + j);
              table[{key.first, key.second}] = A.element_of_gen(VOL).scaled(g[i][j]);
            }
        }
        table[{P, W}] = A.element_of_gen(VOL);
      });
  A.set_fundamental(A.id_of_word({VOL}));
  return A;
}

// H^*(CP^2 x CP^2; Q): r = 2, n = 8, b_2 = 2, Lefschetz element a^2 + b^2.
inline Dgca cp2xcp2() {
  Dgca::TableSpec s;
  s.name = "cp2xcp2";
  s.gens = {{"a", 2},   {"b", 2},   {"aa", 4},  {"ab", 4},
            {"bb", 4},  {"aab", 6}, {"abb", 6}, {"aabb", 8}};
  enum { a, b, aa, ab, bb, aab, abb, aabb };
  Dgca A = Dgca::build_table(
      s, [&](Dgca& A, std::map<std::pair<int, int>, Element>& t, std::map<int, Element>&) {
        auto e = [&](int g) { return A.element_of_gen(g); };
        t[{a, a}] = e(aa);
        t[{a, b}] = e(ab);
        t[{b, b}] = e(bb);
        t[{a, ab}] = e(aab);
        t[{a, bb}] = e(abb);
        t[{b, aa}] = e(aab);
        t[{b, ab}] = e(abb);
        t[{a, abb}] = e(aabb);
        t[{b, aab}] = e(aabb);
        t[{aa, bb}] = e(aabb);
        t[{ab, ab}] = e(aabb);
      });
  A.set_fundamental(A.id_of_word({aabb}));
  return A;
}

// 1-connected DGCA with H^2 two-dimensional and a nontrivial contraction:
// free on x,y of degree 2 and c of degree 3 with dc = x^2, truncated above
// degree `top`. Exercises the even-degree symmetry lemmas.
inline Dgca even_r2_dgca(int top = 8) {
  Dgca::FreeSpec s;
  s.name = "even_r2";
  s.gens = {{"x", 2}, {"y", 2}, {"c", 3}};
  s.top_degree = top;
  return Dgca::build_free(s, [](const Dgca& A, int g) {
    return g == 2 ? A.monomial({0, 0}) : Element{};
  });
}

// Degree-8 Poincare GCA with b_2 = 2 and odd classes in degrees 3 and 5:
// used by the n = 4r formality solver. Basis:
//   1; e1,e2 (2); x (3); ph,w11,w12,w22 (4); y (5); f1,f2 (6); vol (8)
// with e_i e_j = w_ij, e_1 x = y, e_i ph = f_i, e_i w_jk = S_ijkl f_l,
// e_i f_j = delta_ij vol, x y = vol, ph^2 = vol, ph w_jj = vol,
// w_ij w_kl = S_ijkl vol, where S_ijkl is the symmetrized delta tensor.
inline Dgca formality_4r_fixture() {
  Dgca::TableSpec s;
  s.name = "formality_4r";
  s.gens = {{"e1", 2}, {"e2", 2}, {"x", 3},  {"ph", 4}, {"w11", 4}, {"w12", 4},
            {"w22", 4}, {"y", 5},  {"f1", 6}, {"f2", 6}, {"vol", 8}};
  enum { e1, e2, x, ph, w11, w12, w22, y, f1, f2, vol };
  auto dlt = [](int i, int j) { return i == j ? 1 : 0; };
  auto S = [&](int i, int j, int k, int l) {
    return dlt(i, j) * dlt(k, l) + dlt(i, k) * dlt(j, l) + dlt(i, l) * dlt(j, k);
  };
  Dgca A = Dgca::build_table(
      s, [&](Dgca& A, std::map<std::pair<int, int>, Element>& t, std::map<int, Element>&) {
        auto e = [&](int g) { return A.element_of_gen(g); };
        int w[3][3] = {{0, 0, 0}, {0, w11, w12}, {0, w12, w22}};
        int ee[3] = {0, e1, e2};
        int ff[3] = {0, f1, f2};
        for (int i = 1; i <= 2; ++i)
          for (int j = i; j <= 2; ++j) t[{ee[i], ee[j]}] = e(w[i][j]);
        t[{e1, x}] = e(y);
        for (int i = 1; i <= 2; ++i) t[{ee[i], ph}] = e(ff[i]);
        for (int i = 1; i <= 2; ++i)
          for (int j = 1; j <= 2; ++j)
            for (int k = j; k <= 2; ++k) {
              Element v;
              for (int l = 1; l <= 2; ++l) {
                int c = S(i, j, k, l);
                if (c) v.add(A.element_of_gen(ff[l]), Scalar(c));
              }
              if (!v.zero()) t[{ee[i], w[j][k]}] = v;
            }
        for (int i = 1; i <= 2; ++i) t[{ee[i], ff[i]}] = e(vol);
        t[{x, y}] = e(vol);
        t[{ph, ph}] = e(vol);
        t[{ph, w11}] = e(vol);
        t[{ph, w22}] = e(vol);
        const std::pair<int, int> widx[3] = {{1, 1}, {1, 2}, {2, 2}};
        const int wgen[3] = {w11, w12, w22};
        for (int u = 0; u < 3; ++u)
          for (int v = u; v < 3; ++v) {
            int c = S(widx[u].first, widx[u].second, widx[v].first, widx[v].second);
            if (c) t[{wgen[u], wgen[v]}] = e(vol).scaled(Scalar(c));
          }
      });
  A.set_fundamental(A.id_of_word({vol}));
  return A;
}

}  // namespace cinfty::examples
