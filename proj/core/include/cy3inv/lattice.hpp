#pragma once

#include "cy3inv/errors.hpp"
#include "cy3inv/numeric.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <vector>

namespace cy3inv {

/// Integer class in H^2(X,Z)/Tors, coordinates in a fixed basis of rank rho.
class DivisorClass {
public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Int> coords) : coords_(std::move(coords)) {}

  static DivisorClass zero(std::size_t rank);
  static DivisorClass basis(std::size_t rank, std::size_t i);

  std::size_t rank() const { return coords_.size(); }
  const Int& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Int>& coords() const { return coords_; }
  bool is_zero() const;

  bool operator==(const DivisorClass&) const = default;

private:
  std::vector<Int> coords_;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(const Int& scalar, const DivisorClass& a);

/// Integer class in H_2(X,Z)/Tors, coordinates in the dual basis.
class CurveClass {
public:
  CurveClass() = default;
  explicit CurveClass(std::vector<Int> coords) : coords_(std::move(coords)) {}

  static CurveClass zero(std::size_t rank);
  static CurveClass basis(std::size_t rank, std::size_t i);

  std::size_t rank() const { return coords_.size(); }
  const Int& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Int>& coords() const { return coords_; }
  bool is_zero() const;

  bool operator==(const CurveClass&) const = default;

private:
  std::vector<Int> coords_;
};

CurveClass operator+(const CurveClass& a, const CurveClass& b);
CurveClass operator-(const CurveClass& a);
CurveClass operator*(const Int& scalar, const CurveClass& a);

/// Sorted index triple i <= j <= k into the divisor basis.
using IndexTriple = std::array<std::size_t, 3>;

/// Symmetric integer trilinear form (the cup product on H^2).
///
/// One coefficient is stored per sorted triple; evaluation extends
/// symmetrically over all argument orders, so symmetry is structural.
/// Zero coefficients are never stored.
class CubicForm {
public:
  explicit CubicForm(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const { return rank_; }

  /// Sets mu(e_i, e_j, e_k); indices may come in any order. Zero erases.
  void set(std::size_t i, std::size_t j, std::size_t k, Int value);
  void add(std::size_t i, std::size_t j, std::size_t k, const Int& delta);
  Int coefficient(std::size_t i, std::size_t j, std::size_t k) const;

  const std::map<IndexTriple, Int>& coefficients() const { return coeffs_; }

  bool operator==(const CubicForm&) const = default;

private:
  std::size_t rank_ = 0;
  std::map<IndexTriple, Int> coeffs_;
};

/// Integer linear form on the divisor lattice (cup product with c_2).
class LinearForm {
public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}

  static LinearForm zero(std::size_t rank);

  std::size_t rank() const { return coeffs_.size(); }
  const Int& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool operator==(const LinearForm&) const = default;

private:
  std::vector<Int> coeffs_;
};

/// Symmetric integer matrix q_{ij} = mu(D, e_i, e_j), with exact rank and
/// determinant via fraction-free elimination.
class QuadricMatrix {
public:
  explicit QuadricMatrix(std::size_t dimension);

  std::size_t dimension() const { return dim_; }
  const Int& at(std::size_t i, std::size_t j) const;
  /// Adds v at (i,j) and, when i != j, at (j,i).
  void add_symmetric(std::size_t i, std::size_t j, const Int& v);

  Int determinant() const;
  std::size_t rank() const;
  /// True iff determinant is zero, equivalently rank < dimension.
  bool degenerate() const;

  /// v^T q v, the quadratic form applied to a divisor class.
  Int evaluate(const DivisorClass& v) const;

  bool operator==(const QuadricMatrix&) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<Int> entries_; // row-major, symmetric
};

/// Intersection pairing sum_i D_i C_i between dual lattices.
Int pair(const DivisorClass& divisor, const CurveClass& curve);

/// mu(D1, D2, D3) by symmetric extension of the stored coefficients.
Int eval_cubic(const CubicForm& cubic, const DivisorClass& d1,
               const DivisorClass& d2, const DivisorClass& d3);

/// c2 . D
Int eval_linear(const LinearForm& linear, const DivisorClass& divisor);

/// q_{ij} = mu(D, e_i, e_j); degeneracy of q is the Type II detector.
QuadricMatrix hessian_quadric(const CubicForm& cubic, const DivisorClass& divisor);

/// True iff D^3 = 0, i.e. D lies on the cubic cone.
bool is_on_cubic_cone(const CubicForm& cubic, const DivisorClass& divisor);

/// True iff the gcd of the coordinates is 1. The zero class is rejected.
bool is_primitive(const CurveClass& curve);

} // namespace cy3inv
