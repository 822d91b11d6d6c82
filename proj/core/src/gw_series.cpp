#include "cy3inv/gw_series.hpp"

#include <sstream>
#include <utility>

namespace cy3inv {

namespace {

void require_degree(Index d) {
  if (d < 1) {
    std::ostringstream msg;
    msg << "instanton degree must be >= 1, got " << d;
    throw DomainError(msg.str());
  }
}

Int cube(Index d) {
  Int v(d);
  return v * v * v;
}

} // namespace

InstantonSeries::InstantonSeries(const std::map<Index, Int>& values) {
  for (const auto& [d, n] : values) set(d, n);
}

void InstantonSeries::set(Index d, Int value) {
  require_degree(d);
  if (value == 0) {
    values_.erase(d);
  } else {
    values_[d] = std::move(value);
  }
}

Int InstantonSeries::value(Index d) const {
  const auto it = values_.find(d);
  return it == values_.end() ? Int(0) : it->second;
}

Index InstantonSeries::max_degree() const {
  return values_.empty() ? 0 : values_.rbegin()->first;
}

std::optional<Int> InstantonSeries::min_value() const {
  std::optional<Int> out;
  for (const auto& [d, n] : values_)
    if (!out || n < *out) out = n;
  return out;
}

std::optional<Int> InstantonSeries::max_value() const {
  std::optional<Int> out;
  for (const auto& [d, n] : values_)
    if (!out || n > *out) out = n;
  return out;
}

bool InstantonSeries::all_nonnegative() const {
  const auto m = min_value();
  return !m || *m >= 0;
}

GwSequence::GwSequence(std::vector<Int> normalized) : normalized_(std::move(normalized)) {
  if (normalized_.empty()) throw DomainError("a GW sequence must have length >= 1");
}

const Int& GwSequence::at(Index m) const {
  if (m < 1 || m > length()) {
    std::ostringstream msg;
    msg << "GW sequence index " << m << " outside 1.." << length();
    throw DomainError(msg.str());
  }
  return normalized_[static_cast<std::size_t>(m - 1)];
}

SeriesSums series_sums(const InstantonSeries& series) {
  SeriesSums out{Int(0), Int(0)};
  for (const auto& [d, n] : series.values()) {
    out.linear += n * d;
    out.cubic += n * cube(d);
  }
  return out;
}

Int gw_total(const InstantonSeries& series, const Int& pairing, Index m) {
  require_degree(m);
  Int divisor_sum = 0;
  for (const auto& [d, n] : series.values()) {
    if (m % d == 0) divisor_sum += n * cube(d);
  }
  return pairing * pairing * pairing * divisor_sum;
}

Int gw_brute(const InstantonSeries& series, const Int& pairing, Index m) {
  require_degree(m);
  Rat covers = 0;
  for (Index k = 1; k <= m; ++k) {
    if (m % k != 0) continue;
    const Index d = m / k;
    covers += Rat(series.value(d)) / Rat(cube(k));
  }
  const Int scale = pairing * m;
  const Rat total = Rat(scale * scale * scale) * covers;
  if (!is_integral(total)) {
    std::ostringstream msg;
    msg << "internal: multiple-cover sum " << total << " for m=" << m
        << " is not an integer";
    throw InconsistencyError(msg.str());
  }
  return numerator(total);
}

GwSequence gw_sequence(const InstantonSeries& series, Index length) {
  require_degree(length);
  std::vector<Int> normalized;
  normalized.reserve(static_cast<std::size_t>(length));
  for (Index m = 1; m <= length; ++m) normalized.push_back(gw_total(series, Int(1), m));
  return GwSequence(std::move(normalized));
}

InstantonSeries invert_gw(const GwSequence& sequence) {
  InstantonSeries out;
  for (Index m = 1; m <= sequence.length(); ++m) {
    Int acc = 0;
    for (Index d = 1; d <= m; ++d) {
      if (m % d == 0) acc += Int(moebius(m / d)) * sequence.at(d);
    }
    const Rat n_m = Rat(acc) / Rat(cube(m));
    if (!is_integral(n_m)) {
      std::ostringstream msg;
      msg << "GW sequence is not realizable by integer instanton numbers: n_" << m
          << " = " << n_m;
      throw InconsistencyError(msg.str());
    }
    out.set(m, numerator(n_m));
  }
  return out;
}

int moebius(Index k) {
  if (k < 1) {
    std::ostringstream msg;
    msg << "moebius is defined for k >= 1, got " << k;
    throw DomainError(msg.str());
  }
  int prime_count = 0;
  for (Index p = 2; p <= k / p; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0; // square factor
    ++prime_count;
  }
  if (k > 1) ++prime_count;
  return (prime_count % 2 == 0) ? 1 : -1;
}

} // namespace cy3inv
