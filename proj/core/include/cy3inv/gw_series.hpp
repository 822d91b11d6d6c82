#pragma once

#include "cy3inv/errors.hpp"
#include "cy3inv/numeric.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cy3inv {

/// Finitely supported map d -> n_d of instanton numbers attached to a
/// primitive curve class. Values may be negative. A value of zero means
/// "not in the support" and is never stored, so equality is canonical.
class InstantonSeries {
public:
  InstantonSeries() = default;
  explicit InstantonSeries(const std::map<Index, Int>& values);

  /// Sets n_d (d >= 1). Setting zero erases the entry.
  void set(Index d, Int value);
  /// n_d; zero off the support.
  Int value(Index d) const;
  const std::map<Index, Int>& values() const { return values_; }

  bool empty() const { return values_.empty(); }
  /// Largest degree in the support; 0 for the empty series.
  Index max_degree() const;
  std::optional<Int> min_value() const;
  std::optional<Int> max_value() const;
  /// Vacuously true when empty. Nonnegative series belong to Type I faces.
  bool all_nonnegative() const;

  bool operator==(const InstantonSeries&) const = default;

private:
  std::map<Index, Int> values_;
};

/// Normalized 3-point values G_m = Phi_{m.eta}(D,D,D) / (D.eta)^3 for
/// m = 1..M. G_m is the divisor sum sum_{d|m} n_d d^3, so the sequence
/// carries the full multiple-cover content without reference to D.
class GwSequence {
public:
  explicit GwSequence(std::vector<Int> normalized);

  Index length() const { return static_cast<Index>(normalized_.size()); }
  /// 1-based access to G_m.
  const Int& at(Index m) const;
  const std::vector<Int>& normalized() const { return normalized_; }

  bool operator==(const GwSequence&) const = default;

private:
  std::vector<Int> normalized_;
};

struct SeriesSums {
  Int linear; // sum_d n_d d    (drives the c2 correction under a flop)
  Int cubic;  // sum_d n_d d^3  (drives the cubic-form correction)

  bool operator==(const SeriesSums&) const = default;
};

SeriesSums series_sums(const InstantonSeries& series);

/// Phi_{m.eta}(D,D,D) = p^3 sum_{d|m} n_d d^3, with p = D.eta.
Int gw_total(const InstantonSeries& series, const Int& pairing, Index m);

/// Independent multiple-cover oracle for gw_total: enumerates all pairs
/// (k,d) with k d = m and evaluates (m p)^3 sum n_d / k^3 with exact
/// rational intermediates, asserting integrality of the result.
Int gw_brute(const InstantonSeries& series, const Int& pairing, Index m);

/// Divisor sums G_1..G_length of the series.
GwSequence gw_sequence(const InstantonSeries& series, Index length);

/// Recovers the instanton numbers from the divisor sums:
/// n_m = (1/m^3) sum_{d|m} moebius(m/d) G_d, exactly.
/// Throws InconsistencyError when some n_m is not an integer (the sequence
/// is not realizable by integer instanton numbers).
InstantonSeries invert_gw(const GwSequence& sequence);

/// Moebius function by trial factorization; k >= 1.
int moebius(Index k);

} // namespace cy3inv
