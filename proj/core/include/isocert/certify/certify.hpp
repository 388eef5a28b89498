#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isocert/certify/interval.hpp"

namespace isocert::certify {

enum class Status { Proved, Failed, Inconclusive };
std::string to_string(Status s);

/// Axis-aligned cell over two free parameters.
struct Box {
  Interval x;
  Interval y;
  friend bool operator==(const Box&, const Box&) = default;
};

struct Certificate {
  std::string claim;
  std::string region;
  Status status = Status::Inconclusive;
  /// Worst bound certified over the resolved leaves (claim-specific, see `note`).
  double margin_achieved = 0.0;
  std::uint64_t cells_processed = 0;
  int max_depth = 0;
  /// Unresolved or violating leaves (at most kMaxListedCells are kept).
  std::vector<Box> offending;
  std::uint64_t offending_total = 0;
  /// Named numeric outputs (bounding constants and similar).
  std::vector<std::pair<std::string, double>> values;
  std::string note;

  static constexpr std::size_t kMaxListedCells = 32;
};

/// Part of the sphere slice {sum lam = 0, sum lam^2 = S} over a box in the outer gaps
/// (g1, g3) = (lam2 - lam1, lam4 - lam3); g2 = lam3 - lam2 is solved from the slice equation.
/// Gap enclosures are clipped to the given floors and caps.
struct ChamberCell {
  Interval lam[4];
  Interval g1, g2, g3;
};

struct GapFloors {
  double g1 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
  double g1_cap = std::numeric_limits<double>::infinity();
  double g2_cap = std::numeric_limits<double>::infinity();
};

/// lam1..lam4 of the slice point with outer gaps (g1, g3), in floating point; nullopt off the slice.
std::optional<std::array<double, 4>> chamber_point(double S, double g1, double g3);

/// nullopt when the box certainly misses the region (box.x = g1, box.y = g3).
std::optional<ChamberCell> chamber_cell(double S, const Box& box, const GapFloors& floors);

/// Initial (g1, g3) box enclosing the whole ordered sphere slice.
Box chamber_root_box(double S);

/// Exact L_1..L_4 at distinct lam1 < lam2 < lam3 (gamma L_i / gamma); throws PoleError when gamma = 0.
std::array<exactalg::Rational, 4> L_at(const std::array<exactalg::Rational, 4>& lam);

/// gamma L_i <= -margin for i = 1..4 on every point of the slice with all gaps >= tau.
Certificate certify_Li_negative(double S, double tau, double margin = 1e-9, int max_depth = 20, unsigned threads = 1);

struct CrossCheck {
  std::uint64_t drawn = 0;
  std::uint64_t feasible = 0;
  std::uint64_t violations = 0;
};

/// Exact evaluation of the four gamma L_i at `samples` random feasible points with gaps >= tau.
CrossCheck li_cross_check(double S, double tau, std::uint64_t samples, std::uint64_t seed = 20240229);

/// (sum a^3)^2 <= (n-2)^2/(n(n-1)) (sum a^2)^3 on {sum a = 0, sum a^2 = 1}, n = 4.
/// Cells with normalized slack below tol must lie within `radius` of an equality point and are
/// closed there by a local quadratic-form bound.
Certificate certify_okumura(int n = 4, double tol = 1e-6, double radius = 1e-3, int max_depth = 48,
                            unsigned threads = 1);

struct BandOptions {
  int max_depth = 18;
  /// Leaves are refined at least this far so the reported constant is reasonably tight.
  int min_depth = 10;
  /// Restrict to the level set p3 = A3 (cells whose p3 enclosure misses A3 are dropped).
  std::optional<double> a3;
  /// Restrict to p3 >= floor; defaults to 0 on the f-band when no A3 is given.
  std::optional<double> a3_floor;
  unsigned threads = 1;
};

/// m0, m1, B1g, B2g, B2f, B3f, G1g..G4g, G1f..G4f.
const std::vector<std::string>& band_quantities();

/// Sign or boundedness claim for one coefficient of the band decomposition on
/// {0 < g < delta1, f >= eps0} (g-family) or {0 < f < delta1, g >= eps0} (f-family).
Certificate certify_band_bounds(const std::string& quantity, double S, double eps0, double delta1,
                                const BandOptions& options = {});

}  // namespace isocert::certify
