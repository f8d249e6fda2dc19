#include "latbench/tuning/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "latbench/error.hpp"

namespace latbench::tuning {

bool in_work_zone(const std::vector<double>& f, const WorkZone& zone) {
  if (f.size() != 3) throw ArgumentError("work zone needs (IAE, M_eps, M_zeta)");
  return f[0] <= zone.iae && f[1] <= zone.m_epsilon && f[2] <= zone.m_zeta;
}

ParetoArchive workzone_filter(const ParetoArchive& archive, const WorkZone& zone) {
  ParetoArchive out;
  for (const auto& e : archive.entries()) {
    if (in_work_zone(e.objectives, zone)) out.insert(e);
  }
  return out;
}

Selection select_setups(const std::vector<ArchiveEntry>& entries, const SelectionOptions& opt) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (in_work_zone(e.objectives, opt.zone) && e.robustness_pct && *e.robustness_pct >= opt.min_robustness_pct) {
      eligible.push_back(i);
    }
  }
  if (eligible.size() < 2) throw SelectionError("fewer than two eligible points for setup selection");

  auto before = [&](std::size_t a, std::size_t b) { return entries[a].candidate < entries[b].candidate; };
  auto iae = [&](std::size_t i) { return entries[i].objectives[0]; };
  auto eps = [&](std::size_t i) { return entries[i].objectives[1]; };

  std::vector<std::size_t> by_iae = eligible;
  std::sort(by_iae.begin(), by_iae.end(), [&](std::size_t a, std::size_t b) {
    return iae(a) != iae(b) ? iae(a) < iae(b) : before(a, b);
  });
  const std::size_t k = std::max<std::size_t>(1, std::min(opt.group, by_iae.size() / 2));
  const double low_cut = iae(by_iae[k - 1]);
  const double high_cut = iae(by_iae[by_iae.size() - k]);

  auto min_eps = [&](auto&& in_group) {
    std::size_t best = entries.size();
    for (std::size_t i : eligible) {
      if (!in_group(i)) continue;
      if (best == entries.size() || eps(i) < eps(best) || (eps(i) == eps(best) && before(i, best))) best = i;
    }
    return best;
  };
  const std::size_t s1 = min_eps([&](std::size_t i) { return iae(i) <= low_cut; });
  const std::size_t s3 = min_eps([&](std::size_t i) { return iae(i) >= high_cut; });

  auto normalized = [&](std::size_t i) {
    const auto& f = entries[i].objectives;
    return std::array<double, 3>{f[0] / opt.zone.iae, f[1] / opt.zone.m_epsilon, f[2] / opt.zone.m_zeta};
  };
  auto unit = [](std::array<double, 3> v) {
    const double n = std::hypot(v[0], v[1], v[2]);
    if (n > 0.0) for (double& x : v) x /= n;
    return v;
  };
  const auto u1 = unit(normalized(s1));
  const auto u3 = unit(normalized(s3));
  const auto bis = unit({u1[0] + u3[0], u1[1] + u3[1], u1[2] + u3[2]});

  const double lo = std::min(iae(s1), iae(s3));
  const double hi = std::max(iae(s1), iae(s3));
  // Setups 1 and 3 sit exactly half the angle off the bisector, so they only
  // compete when no point lies strictly between them in IAE.
  bool interior = false;
  for (std::size_t i : eligible) interior = interior || (iae(i) > lo && iae(i) < hi);
  std::size_t s2 = entries.size();
  double best_angle = 0.0;
  for (std::size_t i : eligible) {
    if (iae(i) < lo || iae(i) > hi) continue;
    if (interior && !(iae(i) > lo && iae(i) < hi)) continue;
    const auto u = unit(normalized(i));
    const double c = std::clamp(u[0] * bis[0] + u[1] * bis[1] + u[2] * bis[2], -1.0, 1.0);
    const double angle = std::acos(c);
    if (s2 == entries.size() || angle < best_angle || (angle == best_angle && before(i, s2))) {
      s2 = i;
      best_angle = angle;
    }
  }

  Selection out;
  out.index = {s1, s2, s3};
  out.setups = {entries[s1], entries[s2], entries[s3]};
  return out;
}

}  // namespace latbench::tuning
