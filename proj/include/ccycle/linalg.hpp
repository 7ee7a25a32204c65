#pragma once

#include <optional>
#include <string>

#include "ccycle/rational.hpp"

namespace ccycle {

// Reduced row echelon form; drops zero rows. The result is a canonical basis
// of the row space.
QMat rref(QMat m);

int rank(const QMat& m);

bool row_space_equal(const QMat& a, const QMat& b);

// Is v contained in the row space of m?
bool row_space_contains(const QMat& m, const QVec& v);

// Is the row space of sub contained in the row space of sup?
bool row_space_subset(const QMat& sub, const QMat& sup);

// Basis of rowspace(a) ∩ rowspace(b); empty if trivial.
QMat row_space_intersection(const QMat& a, const QMat& b);

// Stable string key identifying a row space (rref, formatted).
std::string row_space_key(const QMat& m, int ncols);

QMat concat_rows(const QMat& a, const QMat& b);

// Basis (as rows) of the solution space {x : m·x = 0} in ncols coordinates.
QMat null_space_basis(const QMat& m, int ncols);

}  // namespace ccycle
