#pragma once

#include <vector>

#include "macfact/mpoly.hpp"

namespace macfact {

// All operators act on the right: f.A.B means A is applied first.
// Slots are the first N variables of the polynomial's VarSet.

/// f.T_i (1 <= i < N), or f.T_i^{-1} with T_i^{-1} = (T_i - t + 1)/t.
MPoly apply_hecke(const MPoly& f, int i, bool inverse, const Field& field);

/// (f.tau)(x1..xN) = f(xN/q, x1, ..., x_{N-1}).
MPoly apply_affine(const MPoly& f, const Field& field);

/// f.xi_i = t^{1-i} f.T_{i-1}...T_1.tau.T_{N-1}^{-1}...T_i^{-1}.
MPoly apply_cherednik(const MPoly& f, int i, const Field& field);

/// f.Xi_i = t^{1-i} f.T_{i-1}...T_1.tau.(1 - 1/xN).T_{N-1}^{-1}...T_i^{-1} + f/x_i.
MPoly apply_knop(const MPoly& f, int i, const Field& field);

/// f.T_w for the word w = (i1, i2, ...), applied left to right.
MPoly apply_word(const MPoly& f, const std::vector<int>& word, const Field& field);

/// f times the sum of T_sigma over the symmetric group, via the coset factorization
/// S = A_1 A_2 ... A_{N-1}, A_k = 1 + T_k + T_k T_{k-1} + ... + T_k...T_1.
MPoly symmetrize(const MPoly& f, const Field& field);

}  // namespace macfact
