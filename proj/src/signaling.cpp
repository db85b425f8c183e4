#include "congsig/signaling.hpp"

#include <algorithm>
#include <cmath>

#include "congsig/errors.hpp"

namespace congsig {

Scheme Scheme::extreme(std::size_t r) {
  Scheme s{Kind::Extreme, r, 1.0};
  s.validate();
  return s;
}

Scheme Scheme::subinterval(std::size_t r, double alpha) {
  Scheme s{Kind::Subinterval, r, alpha};
  s.validate();
  return s;
}

std::size_t Scheme::window() const noexcept {
  return (kind == Kind::Extreme || kind == Kind::Subinterval) ? r : 1;
}

std::string Scheme::name() const {
  switch (kind) {
    case Kind::Now: return "now";
    case Kind::Mean: return "mean";
    case Kind::Extreme: return "extreme";
    case Kind::FullExtreme: return "full-extreme";
    case Kind::Subinterval: return "subinterval";
  }
  return "unknown";
}

void Scheme::validate() const {
  if (r < 1) throw ValidationError("scheme window r must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("subinterval shrink factor must lie in [0, 1]");
}

CostHistory::CostHistory(std::size_t width, std::size_t window) : window_(std::max<std::size_t>(window, 1)), series_(width) {}

void CostHistory::record(std::size_t m, double cost) {
  if (!std::isfinite(cost) || cost < 0.0) throw ValidationError("recorded cost must be finite and nonnegative");
  Series& s = series_.at(m);
  if (s.count == 0) {
    s.min = s.max = cost;
  } else {
    s.min = std::min(s.min, cost);
    s.max = std::max(s.max, cost);
  }
  ++s.count;
  s.sum += cost;
  s.recent.push_back(cost);
  if (s.recent.size() > window_) s.recent.pop_front();
}

void CostHistory::record_period(std::span<const double> costs) {
  if (costs.size() != series_.size()) throw ValidationError("cost vector width does not match history");
  for (double c : costs) {
    if (!std::isfinite(c) || c < 0.0) throw ValidationError("recorded cost must be finite and nonnegative");
  }
  for (std::size_t m = 0; m < costs.size(); ++m) record(m, costs[m]);
}

std::size_t CostHistory::periods() const noexcept {
  if (series_.empty()) return 0;
  std::size_t n = series_.front().count;
  for (const Series& s : series_) n = std::min(n, s.count);
  return n;
}

double CostHistory::mean(std::size_t m) const {
  const Series& s = series_.at(m);
  return s.count == 0 ? 0.0 : s.sum / static_cast<double>(s.count);
}

Interval CostHistory::window_envelope(std::size_t m, std::size_t r) const {
  const Series& s = series_.at(m);
  if (s.recent.empty()) throw ValidationError("no observations for resource");
  const std::size_t k = std::min({r, s.recent.size(), s.count});
  const auto first = s.recent.end() - static_cast<std::ptrdiff_t>(k);
  const auto [lo, hi] = std::minmax_element(first, s.recent.end());
  return {*lo, *hi};
}

Signal window_signal(const CostHistory& history, const Scheme& scheme) {
  scheme.validate();
  Signal out(history.width());
  for (std::size_t m = 0; m < history.width(); ++m) {
    if (history.count(m) == 0) throw ValidationError("no observations for resource");
    switch (scheme.kind) {
      case Scheme::Kind::Now: out[m] = {history.last(m), history.last(m)}; break;
      case Scheme::Kind::Mean: out[m] = {history.mean(m), history.mean(m)}; break;
      case Scheme::Kind::FullExtreme: out[m] = {history.min(m), history.max(m)}; break;
      case Scheme::Kind::Extreme: out[m] = history.window_envelope(m, scheme.r); break;
      case Scheme::Kind::Subinterval: {
        const Interval env = history.window_envelope(m, scheme.r);
        const double half = 0.5 * scheme.alpha * (env.hi - env.lo);
        const double mid = env.mid();
        // Clamp guards against rounding pushing an endpoint outside the envelope.
        out[m] = {std::clamp(mid - half, env.lo, env.hi), std::clamp(mid + half, env.lo, env.hi)};
        break;
      }
    }
  }
  return out;
}

Signal emit_signal(const CostHistory& history, const Scheme& scheme) {
  const std::size_t needed = scheme.is_scalar() ? 1 : 2;
  if (history.periods() < needed) return Signal(history.width(), Interval{0.0, 0.0});
  return window_signal(history, scheme);
}

bool validate_subinterval(const Signal& signal, const CostHistory& history, std::size_t r) {
  if (signal.size() != history.width()) return false;
  for (std::size_t m = 0; m < signal.size(); ++m) {
    if (history.count(m) == 0) return false;
    const Interval env = history.window_envelope(m, r);
    const Interval& s = signal[m];
    if (!(env.lo <= s.lo && s.lo <= s.hi && s.hi <= env.hi)) return false;
  }
  return true;
}

}  // namespace congsig
