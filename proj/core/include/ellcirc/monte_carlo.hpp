#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ellcirc/ellipse.hpp"
#include "ellcirc/intersection.hpp"
#include "ellcirc/measures.hpp"

namespace ellcirc {

/// Deterministic uniform stream for one (seed, chunk) pair. The engine and
/// the seeding algorithm are fully specified by the C++ standard and the
/// double conversion is done by hand, so streams are bit-identical across
/// platforms and standard libraries.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t chunk);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

inline RngStream rng_stream(std::uint64_t seed, std::uint64_t chunk) {
  return RngStream(seed, chunk);
}

/// One outcome class of an estimate, compared against its closed form.
struct ClassEstimate {
  std::string name;
  std::uint64_t count = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  double reference = 0.0;
  double z_score = 0.0;
};

struct EstimateReport {
  std::uint64_t n = 0;             // samples drawn
  std::uint64_t n_degenerate = 0;  // tangent poses, excluded from every class
  std::vector<ClassEstimate> classes;
  /// Mean number of intersection points (throw experiment only).
  std::optional<ClassEstimate> mean_intersections;

  double max_abs_z() const;
  const ClassEstimate& at(const std::string& name) const;
};

struct MonteCarloOptions {
  /// 0 uses std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Samples per RNG chunk. Results depend on it, not on the thread count.
  std::uint64_t chunk_size = 1u << 16;
  ClassifyOptions classify{};
};

/// Samples circle centres uniformly in [-(a+r), a+r]^2 and estimates the
/// four position-set areas (classes "A_i01", "A_i10", "A_2", "A_4").
/// Requires n >= 10^4.
EstimateReport estimate_fixed_direction_areas(const Ellipse& e, double r, std::uint64_t n,
                                              std::uint64_t seed,
                                              const MonteCarloOptions& opts = {});

/// Random throws of the ellipse onto the circle lattice; classes "p_e",
/// "p_i", "p_2", "p_4" plus the mean intersection count. Throws
/// AssumptionError if a pose meets two lattice circles. Requires n >= 10^4.
EstimateReport simulate_throws(const Ellipse& e, double r, const Lattice& lat, std::uint64_t n,
                               std::uint64_t seed, const MonteCarloOptions& opts = {});

}  // namespace ellcirc
