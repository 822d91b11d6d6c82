#include "cy3inv/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

namespace cy3inv {

namespace {

void require_same_rank(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": rank mismatch (" << a << " vs " << b << ")";
    throw DimensionError(msg.str());
  }
}

IndexTriple sorted_triple(std::size_t i, std::size_t j, std::size_t k) {
  IndexTriple t{i, j, k};
  std::sort(t.begin(), t.end());
  return t;
}

// Calls f once per distinct permutation of the sorted triple (i <= j <= k):
// one for a diagonal triple, three when exactly two indices coincide, six
// when all differ. Summing over these visits every ordered triple of the
// symmetric tensor exactly once.
template <typename F>
void for_each_distinct_permutation(const IndexTriple& t, F&& f) {
  const std::size_t i = t[0], j = t[1], k = t[2];
  f(i, j, k);
  if (i == j && j == k) return;
  if (i == j) {
    f(i, k, j);
    f(k, i, j);
    return;
  }
  if (j == k) {
    f(j, i, k);
    f(j, k, i);
    return;
  }
  f(i, k, j);
  f(j, i, k);
  f(j, k, i);
  f(k, i, j);
  f(k, j, i);
}

// Fraction-free (Bareiss) echelon form of a square integer matrix.
// Returns the matrix rank and the exact determinant (zero when singular).
struct EchelonResult {
  std::size_t rank = 0;
  Int det = 0;
};

EchelonResult fraction_free_echelon(std::vector<Int> m, std::size_t n) {
  EchelonResult out;
  if (n == 0) {
    out.det = 1;
    return out;
  }
  auto at = [&m, n](std::size_t r, std::size_t c) -> Int& { return m[r * n + c]; };
  int sign = 1;
  Int prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && at(pivot, col) == 0) ++pivot;
    if (pivot == n) continue; // column already clear below: rank deficiency
    if (pivot != row) {
      for (std::size_t c = col; c < n; ++c) std::swap(at(pivot, c), at(row, c));
      sign = -sign;
    }
    for (std::size_t r = row + 1; r < n; ++r) {
      for (std::size_t c = col + 1; c < n; ++c) {
        Int num = at(r, c) * at(row, col) - at(r, col) * at(row, c);
        Int q, rem;
        divide_qr(num, prev, q, rem);
        if (rem != 0) throw Error("internal: fraction-free elimination produced a non-exact division");
        at(r, c) = std::move(q);
      }
      at(r, col) = 0;
    }
    prev = at(row, col);
    ++row;
  }
  out.rank = row;
  out.det = (row == n) ? Int(sign * prev) : Int(0);
  return out;
}

} // namespace

DivisorClass DivisorClass::zero(std::size_t rank) {
  return DivisorClass(std::vector<Int>(rank, Int(0)));
}

DivisorClass DivisorClass::basis(std::size_t rank, std::size_t i) {
  std::vector<Int> c(rank, Int(0));
  c.at(i) = 1;
  return DivisorClass(std::move(c));
}

bool DivisorClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Int& x) { return x == 0; });
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same_rank(a.rank(), b.rank(), "divisor sum");
  std::vector<Int> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return DivisorClass(std::move(c));
}

DivisorClass operator-(const DivisorClass& a) { return Int(-1) * a; }

DivisorClass operator*(const Int& scalar, const DivisorClass& a) {
  std::vector<Int> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = scalar * a[i];
  return DivisorClass(std::move(c));
}

CurveClass CurveClass::zero(std::size_t rank) {
  return CurveClass(std::vector<Int>(rank, Int(0)));
}

CurveClass CurveClass::basis(std::size_t rank, std::size_t i) {
  std::vector<Int> c(rank, Int(0));
  c.at(i) = 1;
  return CurveClass(std::move(c));
}

bool CurveClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Int& x) { return x == 0; });
}

CurveClass operator+(const CurveClass& a, const CurveClass& b) {
  require_same_rank(a.rank(), b.rank(), "curve sum");
  std::vector<Int> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return CurveClass(std::move(c));
}

CurveClass operator-(const CurveClass& a) { return Int(-1) * a; }

CurveClass operator*(const Int& scalar, const CurveClass& a) {
  std::vector<Int> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = scalar * a[i];
  return CurveClass(std::move(c));
}

void CubicForm::set(std::size_t i, std::size_t j, std::size_t k, Int value) {
  if (i >= rank_ || j >= rank_ || k >= rank_) {
    std::ostringstream msg;
    msg << "cubic coefficient index (" << i << "," << j << "," << k
        << ") out of range for rank " << rank_;
    throw DimensionError(msg.str());
  }
  const IndexTriple t = sorted_triple(i, j, k);
  if (value == 0) {
    coeffs_.erase(t);
  } else {
    coeffs_[t] = std::move(value);
  }
}

void CubicForm::add(std::size_t i, std::size_t j, std::size_t k, const Int& delta) {
  set(i, j, k, coefficient(i, j, k) + delta);
}

Int CubicForm::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  const auto it = coeffs_.find(sorted_triple(i, j, k));
  return it == coeffs_.end() ? Int(0) : it->second;
}

LinearForm LinearForm::zero(std::size_t rank) {
  return LinearForm(std::vector<Int>(rank, Int(0)));
}

QuadricMatrix::QuadricMatrix(std::size_t dimension)
    : dim_(dimension), entries_(dimension * dimension, Int(0)) {}

const Int& QuadricMatrix::at(std::size_t i, std::size_t j) const {
  return entries_.at(i * dim_ + j);
}

void QuadricMatrix::add_symmetric(std::size_t i, std::size_t j, const Int& v) {
  entries_.at(i * dim_ + j) += v;
  if (i != j) entries_.at(j * dim_ + i) += v;
}

Int QuadricMatrix::determinant() const {
  return fraction_free_echelon(entries_, dim_).det;
}

std::size_t QuadricMatrix::rank() const {
  return fraction_free_echelon(entries_, dim_).rank;
}

bool QuadricMatrix::degenerate() const { return rank() < dim_; }

Int QuadricMatrix::evaluate(const DivisorClass& v) const {
  require_same_rank(v.rank(), dim_, "quadric evaluation");
  Int total = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) total += v[i] * at(i, j) * v[j];
  return total;
}

Int pair(const DivisorClass& divisor, const CurveClass& curve) {
  require_same_rank(divisor.rank(), curve.rank(), "pairing");
  Int total = 0;
  for (std::size_t i = 0; i < divisor.rank(); ++i) total += divisor[i] * curve[i];
  return total;
}

Int eval_cubic(const CubicForm& cubic, const DivisorClass& d1,
               const DivisorClass& d2, const DivisorClass& d3) {
  require_same_rank(d1.rank(), cubic.rank(), "cubic evaluation");
  require_same_rank(d2.rank(), cubic.rank(), "cubic evaluation");
  require_same_rank(d3.rank(), cubic.rank(), "cubic evaluation");
  Int total = 0;
  for (const auto& [triple, value] : cubic.coefficients()) {
    Int weight = 0;
    for_each_distinct_permutation(triple, [&](std::size_t p, std::size_t q, std::size_t r) {
      weight += d1[p] * d2[q] * d3[r];
    });
    total += value * weight;
  }
  return total;
}

Int eval_linear(const LinearForm& linear, const DivisorClass& divisor) {
  require_same_rank(divisor.rank(), linear.rank(), "linear evaluation");
  Int total = 0;
  for (std::size_t i = 0; i < divisor.rank(); ++i) total += linear[i] * divisor[i];
  return total;
}

QuadricMatrix hessian_quadric(const CubicForm& cubic, const DivisorClass& divisor) {
  require_same_rank(divisor.rank(), cubic.rank(), "hessian quadric");
  QuadricMatrix q(cubic.rank());
  // q_{ab} = sum_c D_c mu(e_c, e_a, e_b): feed D through the first slot of
  // every ordered incarnation of each stored coefficient.
  for (const auto& [triple, value] : cubic.coefficients()) {
    for_each_distinct_permutation(triple, [&](std::size_t p, std::size_t a, std::size_t b) {
      // The permutation (p,b,a) is visited too; add_symmetric covers both.
      if (a > b) return;
      q.add_symmetric(a, b, divisor[p] * value);
    });
  }
  return q;
}

bool is_on_cubic_cone(const CubicForm& cubic, const DivisorClass& divisor) {
  return eval_cubic(cubic, divisor, divisor, divisor) == 0;
}

bool is_primitive(const CurveClass& curve) {
  if (curve.rank() == 0 || curve.is_zero()) {
    throw DomainError("primitivity is undefined for the zero class");
  }
  Int g = 0;
  for (std::size_t i = 0; i < curve.rank(); ++i) g = gcd(g, abs(curve[i]));
  return g == 1;
}

} // namespace cy3inv
