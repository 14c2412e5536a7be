#include "zenowalk/io/parallel.hpp"

#include <exception>
#include <optional>

namespace zenowalk::io {

std::vector<SweepRow> run_parallel(const SweepSpec& spec, int workers) {
  if (workers < 1) throw InvalidParameter("workers must be >= 1");
  spec.validate();
  const std::vector<SweepPoint> points = sweep_points(spec);
  std::vector<std::optional<SweepRow>> slots(points.size());
  parallel_for_index(points.size(), workers, [&](std::size_t i) {
    try {
      slots[i] = evaluate_sweep_point(spec, points[i]);
    } catch (const std::exception& e) {
      slots[i] = flagged_row(spec, points[i], e.what());
    } catch (...) {
      slots[i] = flagged_row(spec, points[i], "unknown failure");
    }
  });
  std::vector<SweepRow> rows;
  rows.reserve(slots.size());
  for (auto& slot : slots) rows.push_back(std::move(*slot));
  return rows;
}

}  // namespace zenowalk::io
