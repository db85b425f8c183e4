#pragma once

#include <cstddef>
#include <deque>
#include <span>
#include <string>
#include <vector>

namespace congsig {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double mid() const noexcept { return 0.5 * (lo + hi); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// One interval per resource (edge or action).
using Signal = std::vector<Interval>;

struct Scheme {
  enum class Kind { Now, Mean, Extreme, FullExtreme, Subinterval };

  Kind kind = Kind::Now;
  std::size_t r = 1;   // window for Extreme / Subinterval
  double alpha = 1.0;  // shrink factor for Subinterval

  static Scheme now() { return {Kind::Now, 1, 1.0}; }
  static Scheme mean() { return {Kind::Mean, 1, 1.0}; }
  static Scheme extreme(std::size_t r);
  static Scheme full_extreme() { return {Kind::FullExtreme, 1, 1.0}; }
  static Scheme subinterval(std::size_t r, double alpha);

  /// Longest window of recent costs the scheme reads.
  std::size_t window() const noexcept;
  bool is_scalar() const noexcept { return kind == Kind::Now || kind == Kind::Mean; }
  /// "now", "mean", "extreme", "full-extreme" or "subinterval".
  std::string name() const;
  /// Throws ValidationError on r < 1 or alpha outside [0, 1].
  void validate() const;
};

/// Per-resource cost observations: a bounded window of recent values plus
/// running aggregates over everything ever recorded.
class CostHistory {
 public:
  CostHistory(std::size_t width, std::size_t window);

  std::size_t width() const noexcept { return series_.size(); }
  std::size_t window() const noexcept { return window_; }

  /// Appends one cost for resource m. Throws ValidationError on negative or non-finite input.
  void record(std::size_t m, double cost);
  /// Appends one cost for every resource.
  void record_period(std::span<const double> costs);

  /// Number of complete periods, i.e. the smallest per-resource count.
  std::size_t periods() const noexcept;

  std::size_t count(std::size_t m) const { return series_.at(m).count; }
  double sum(std::size_t m) const { return series_.at(m).sum; }
  double min(std::size_t m) const { return series_.at(m).min; }
  double max(std::size_t m) const { return series_.at(m).max; }
  double mean(std::size_t m) const;
  double last(std::size_t m) const { return series_.at(m).recent.back(); }
  const std::deque<double>& recent(std::size_t m) const { return series_.at(m).recent; }

  /// Min/max over the min(r, n) most recent costs of resource m (n >= 1 required).
  Interval window_envelope(std::size_t m, std::size_t r) const;

 private:
  struct Series {
    std::deque<double> recent;
    std::size_t count = 0;
    double sum = 0.0;
    double min = 0.0;
    double max = 0.0;
  };
  std::size_t window_;
  std::vector<Series> series_;
};

/// Signal from the history under the scheme, with the start-up rule: interval
/// schemes broadcast (0, 0) until two periods are recorded, scalar schemes
/// until one is.
Signal emit_signal(const CostHistory& history, const Scheme& scheme);

/// Signal from the history with no start-up rule; every resource needs at
/// least one observation. Windows clamp to the observations available.
Signal window_signal(const CostHistory& history, const Scheme& scheme);

/// True iff every interval lies inside the min(r, n)-window envelope of its resource.
bool validate_subinterval(const Signal& signal, const CostHistory& history, std::size_t r);

}  // namespace congsig
