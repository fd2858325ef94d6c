#ifndef KUMMER_SCANNER_HPP
#define KUMMER_SCANNER_HPP

#include <cstdint>
#include <functional>

#include "kummer/models.hpp"

namespace kummer {

struct ScanTelemetry {
  std::uint64_t points_scanned = 0;
  std::uint64_t points_on_variety = 0;
  double seconds = 0;
  double points_per_second = 0;
};

struct SingularReport {
  const BinaryField* F = nullptr;
  int ambient_dim = 0;
  bool complete_intersection = false;
  std::vector<ProjPoint> singular_points;  // canonical order
  ScanTelemetry telemetry;
};

// Brute-force scan of P^n(F). Hypersurface input (one polynomial): points
// where the polynomial and all n+1 partials vanish. Complete intersection
// (c polynomials): points on the variety where the c x (n+1) Jacobian has
// rank < c. `first_var` names the variable block (k1.. for P^3, b1.. for
// P^5). Deterministic point order; parallel over point ranges.
SingularReport singular_scan(const std::vector<F2Poly>& polys, int n, const BinaryField* F,
                             Var first_var);

// All points of the variety, in canonical order.
std::vector<ProjPoint> variety_points(const std::vector<F2Poly>& polys, int n,
                                      const BinaryField* F, Var first_var);

struct MembershipReport {
  std::uint64_t sources = 0;
  std::uint64_t mapped = 0;
  std::uint64_t on_target = 0;
  std::vector<ProjPoint> indeterminacy;  // map vanished identically there
  std::vector<ProjPoint> failures;       // image missed the target
};

// For each source point: either the map vanishes (indeterminacy) or the
// image must satisfy every target polynomial.
MembershipReport membership_scan(const std::vector<ProjPoint>& source,
                                 const std::vector<F2Poly>& map, Var map_first_var,
                                 const std::vector<F2Poly>& target, Var target_first_var);

unsigned scan_threads();  // KUMMER_THREADS capped, >= 1

}  // namespace kummer

#endif
