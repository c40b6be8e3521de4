#pragma once
#include <cstdint>
#include <map>
#include <vector>

#include "matrix.hpp"
#include "weights.hpp"

namespace dybe {

// A word (i1,...,ik) stands for f_{i1} f_{i2} ... f_{ik} applied to the
// highest vector, outermost letter first.
using Word = std::vector<uint8_t>;

// Weight-space bases of a highest-weight module realized as f-word spans
// modulo the radical of the contravariant pairing.  Shared between the
// finite-dimensional quotient construction (ground field Rat) and Verma
// slices (Rat or RatFun highest weight).
template <Scalar S>
struct WordSpaces {
  RootSystem rs;
  std::vector<S> hw;  // highest weight, coroot values

  struct Space {
    LatticeWeight beta;            // the space sits at weight hw - beta
    std::vector<Word> basis;       // pivot words
    Matrix<S> gram;                // contravariant pairings, basis x basis
    std::vector<int> down;         // down[i] = id of space at beta - alpha_i, or -1
    std::vector<Matrix<S>> fmat;   // fmat[i]: space(beta - alpha_i) -> this, action of f_i
    std::vector<Matrix<S>> emat;   // emat[i]: this -> space(beta - alpha_i), action of e_i
  };

  std::vector<Space> spaces;           // sorted by (height, lex) of beta
  std::map<LatticeWeight, int> index;  // beta -> id, nonzero spaces only

  int find(const LatticeWeight& beta) const {
    auto it = index.find(beta);
    return it == index.end() ? -1 : it->second;
  }
  int dim(int id) const { return (int)spaces[id].basis.size(); }
};

// Build the weight spaces with beta of height <= maxdepth.  With
// `verma_dims` set, every space dimension must match the Kostant count
// (generic Verma slice); otherwise rank deficiency just shrinks the space
// (pairing-radical quotient, i.e. the irreducible module).
template <Scalar S>
WordSpaces<S> build_word_spaces(const RootSystem& rs, std::vector<S> hw, long maxdepth,
                                bool verma_dims) {
  WordSpaces<S> ws{rs, std::move(hw), {}, {}};
  const int r = rs.rank();
  const S szero = ws.hw[0] - ws.hw[0];
  const S sone = rat_like(szero, Rat(1));

  {
    typename WordSpaces<S>::Space top;
    top.beta = rs.zero();
    top.basis = {Word{}};
    top.gram = Matrix<S>(1, 1, szero);
    top.gram.at(0, 0) = sone;
    top.down.assign(r, -1);
    top.fmat.assign(r, Matrix<S>());
    top.emat.assign(r, Matrix<S>());
    ws.spaces.push_back(std::move(top));
    ws.index[rs.zero()] = 0;
  }

  for (const LatticeWeight& beta : rs.cone_below(maxdepth)) {
    if (beta.is_zero()) continue;
    std::vector<int> down(r, -1);
    // candidate spanning set: f_i applied to the basis below
    std::vector<std::pair<int, int>> cand;  // (simple index i, basis index in down[i])
    for (int i = 0; i < r; ++i) {
      LatticeWeight gamma = beta - rs.simple_root(i);
      if (!rs.in_root_cone(gamma)) continue;
      down[i] = ws.find(gamma);
      if (down[i] < 0) continue;
      for (int b = 0; b < ws.dim(down[i]); ++b) cand.emplace_back(i, b);
    }
    const int nc = (int)cand.size();
    if (nc == 0) {
      if (verma_dims && rs.kostant(beta) != 0)
        throw Error("verma slice lost a weight space at " + beta.str());
      continue;
    }

    // e_j action on each candidate f_i.b, expressed in the basis one level up:
    //   e_j (f_i b) = f_i (e_j b) + delta_ij <hw - (beta - alpha_i), alpha_i^vee> b
    // evec[j][c] = coordinates in space(beta - alpha_j), empty when that
    // space is absent (the action is then zero)
    std::vector<std::vector<std::vector<S>>> evec(r);
    for (int j = 0; j < r; ++j) {
      if (down[j] < 0) continue;
      const int dj = ws.dim(down[j]);
      evec[j].assign(nc, std::vector<S>(dj, szero));
      for (int c = 0; c < nc; ++c) {
        auto [i, b] = cand[c];
        const auto& gsp = ws.spaces[down[i]];
        // f_i (e_j b): e_j out of space(beta - alpha_i), then f_i back up;
        // an empty emat/fmat means the intermediate space is absent
        if (gsp.emat[j].cols() > 0) {
          const auto& tsp = ws.spaces[down[j]];
          if (tsp.fmat[i].cols() > 0) {
            for (int z = 0; z < gsp.emat[j].rows(); ++z) {
              const S& ez = gsp.emat[j].at(z, b);
              if (ScalarTraits<S>::is_zero(ez)) continue;
              for (int t = 0; t < dj; ++t) evec[j][c][t] += tsp.fmat[i].at(t, z) * ez;
            }
          }
        }
        if (i == j) {
          LatticeWeight gamma = beta - rs.simple_root(i);
          S h = ws.hw[i] - rat_like(szero, gamma.c[i]);
          evec[j][c][b] += h;
        }
      }
    }

    // contravariant pairings between candidates: peel the leading letter of
    // the row word and pair against the e-expansion of the column word
    Matrix<S> g(nc, nc, szero);
    for (int u = 0; u < nc; ++u) {
      auto [iu, bu] = cand[u];
      const auto& gram_dn = ws.spaces[down[iu]].gram;
      for (int w = 0; w < nc; ++w) {
        S acc = szero;
        for (int z = 0; z < ws.dim(down[iu]); ++z) {
          const S& ez = evec[iu][w][z];
          if (!ScalarTraits<S>::is_zero(ez)) acc += gram_dn.at(bu, z) * ez;
        }
        g.at(u, w) = acc;
      }
    }

    Rref<S> red = rref(g);
    const int rank = (int)red.pivot_cols.size();
    if (verma_dims && rank != rs.kostant(beta))
      throw NonGenericWeight("weight-space dimension " + std::to_string(rank) + " at " +
                             beta.str() + " does not match the Kostant count");
    if (rank == 0) continue;

    typename WordSpaces<S>::Space sp;
    sp.beta = beta;
    sp.down = down;
    std::vector<int> pos(nc, -1);  // candidate -> basis slot
    for (int k = 0; k < rank; ++k) {
      int c = red.pivot_cols[k];
      pos[c] = k;
      auto [i, b] = cand[c];
      Word wrd;
      wrd.push_back((uint8_t)i);
      const Word& tail = ws.spaces[down[i]].basis[b];
      wrd.insert(wrd.end(), tail.begin(), tail.end());
      sp.basis.push_back(std::move(wrd));
    }
    // coordinates of every candidate in the chosen basis
    auto cand_coords = [&](int c) {
      std::vector<S> v(rank, szero);
      if (pos[c] >= 0) {
        v[pos[c]] = sone;
      } else {
        for (int k = 0; k < rank; ++k) v[k] = red.m.at(k, c);
      }
      return v;
    };

    sp.gram = Matrix<S>(rank, rank, szero);
    for (int a = 0; a < rank; ++a)
      for (int b = 0; b < rank; ++b)
        sp.gram.at(a, b) = g.at(red.pivot_cols[a], red.pivot_cols[b]);

    sp.fmat.assign(r, Matrix<S>());
    sp.emat.assign(r, Matrix<S>());
    {
      // f_i columns: the candidate (i, b) reduced to the basis
      std::vector<std::vector<std::vector<S>>> fcols(r);
      for (int i = 0; i < r; ++i)
        if (down[i] >= 0) fcols[i].resize(ws.dim(down[i]));
      for (int c = 0; c < nc; ++c) {
        auto [i, b] = cand[c];
        fcols[i][b] = cand_coords(c);
      }
      for (int i = 0; i < r; ++i) {
        if (down[i] < 0) continue;
        const int dj = ws.dim(down[i]);
        sp.fmat[i] = Matrix<S>(rank, dj, szero);
        for (int b = 0; b < dj; ++b)
          for (int k = 0; k < rank; ++k) sp.fmat[i].at(k, b) = fcols[i][b][k];
      }
    }
    for (int j = 0; j < r; ++j) {
      if (down[j] < 0 || evec[j].empty()) continue;
      const int dj = ws.dim(down[j]);
      sp.emat[j] = Matrix<S>(dj, rank, szero);
      for (int k = 0; k < rank; ++k) {
        const auto& v = evec[j][red.pivot_cols[k]];
        for (int t = 0; t < dj; ++t) sp.emat[j].at(t, k) = v[t];
      }
    }

    ws.index[beta] = (int)ws.spaces.size();
    ws.spaces.push_back(std::move(sp));
  }
  return ws;
}

}  // namespace dybe
