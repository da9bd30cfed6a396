#pragma once

#include <vector>

#include "cusp/field.hpp"

namespace cusp {

using FqVec = std::vector<fe>;
using FqMat = std::vector<FqVec>;  // row-major

// Row-reduces in place to reduced echelon form; returns pivot columns.
std::vector<int> rref(const FiniteField* F, FqMat& m, int ncols);
int rank(const FiniteField* F, FqMat m, int ncols);
// Basis of { c : m c = 0 }.
FqMat nullspace(const FiniteField* F, FqMat m, int ncols);
// Whether v lies in the row span of rows.
bool in_span(const FiniteField* F, const FqMat& rows, const FqVec& v);

// Echelon basis kept reduced as vectors are inserted.
class SpanBuilder {
 public:
  SpanBuilder(const FiniteField* F, int n) : F_(F), n_(n) {}
  // Reduces v against the basis; returns the remainder.
  FqVec reduce(FqVec v) const;
  // Inserts v; returns false if it was already in the span.
  bool insert(const FqVec& v);
  int dim() const { return static_cast<int>(rows_.size()); }
  const FqMat& rows() const { return rows_; }

 private:
  const FiniteField* F_;
  int n_;
  FqMat rows_;
  std::vector<int> piv_;
};

}  // namespace cusp
