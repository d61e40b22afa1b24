#pragma once

#include "torimax/numeric.hpp"

#include <optional>
#include <vector>

namespace torimax {

/// Exact determinant (Bareiss fraction-free elimination). det of the 0x0 matrix is 1.
Int determinant(IntMat a);

/// Rank over the rationals.
int matrix_rank(const IntMat& a);

/// Basis of the integer kernel {x in Z^c : A x = 0} of an r x c matrix.
/// The kernel of an integer matrix is a saturated sublattice, so the result
/// is a lattice basis of it. Vectors are sign-normalized (first nonzero > 0)
/// and returned in lexicographic order.
std::vector<IntVec> integer_kernel(const IntMat& a);

/// Exact solution of A x = b for a full-column-rank A; nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_full_rank(const IntMat& a, const IntVec& b);

/// Integer normal vector to the hyperplane spanned by the rows of a
/// (d-1) x d matrix, via cofactor expansion. Zero vector iff the rows do not
/// span a hyperplane. Not reduced to primitive form. For d = 1 (no rows)
/// returns {1}.
IntVec cofactor_normal(const IntMat& rows, int d);

/// gcd of all r x r minors of an r x c matrix (r <= c). Equals the product of
/// the invariant factors; the rows extend to a basis of Z^c iff this is 1.
Int maximal_minor_gcd(const IntMat& rows);

/// Given n-1 vectors in Z^n forming a basis of a saturated rank-(n-1)
/// sublattice, returns b such that det[v_1 ... v_{n-1} b] = +1.
/// nullopt if the vectors do not form such a basis.
std::optional<IntVec> complete_to_unimodular(const std::vector<IntVec>& cols);

/// Inverse of an integer matrix with determinant +-1 (adjugate route).
IntMat unimodular_inverse(const IntMat& m);

IntMat transpose(const IntMat& a);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& x);
Int dot(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);

/// x with g = a*x.first + b*x.second, g = gcd(a,b) >= 0.
std::pair<Int, std::pair<Int, Int>> extended_gcd(Int a, Int b);

} // namespace torimax
