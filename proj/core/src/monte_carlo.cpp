#include "ellcirc/monte_carlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "ellcirc/errors.hpp"

namespace ellcirc {
namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kMinSamples = 10'000;

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t chunk) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
}

// Per-chunk tallies; merged by summation in chunk order.
struct Tally {
  std::array<std::uint64_t, 4> counts{};
  std::uint64_t degenerate = 0;
  std::uint64_t samples = 0;

  Tally& operator+=(const Tally& o) {
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += o.counts[k];
    degenerate += o.degenerate;
    samples += o.samples;
    return *this;
  }
};

// Runs body(chunk_index, chunk_samples) over all chunks, possibly in
// parallel, and merges the tallies in index order.
template <typename Body>
Tally run_chunks(std::uint64_t n, const MonteCarloOptions& opts, Body body) {
  const std::uint64_t chunk = std::max<std::uint64_t>(1, opts.chunk_size);
  const std::uint64_t n_chunks = (n + chunk - 1) / chunk;
  std::vector<Tally> tallies(n_chunks);

  unsigned threads = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, n_chunks));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::uint64_t k = next++; k < n_chunks; k = next++) {
      try {
        const std::uint64_t m = std::min(chunk, n - k * chunk);
        tallies[k] = body(k, m);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n_chunks;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  Tally total;
  for (const Tally& t : tallies) total += t;
  return total;
}

void check_degenerate_cap(const Tally& t) {
  const double cap = 10.0 * std::max(1.0, static_cast<double>(t.samples) / 1e6);
  if (static_cast<double>(t.degenerate) > cap) {
    throw ConsistencyError("intersection oracle reported " + std::to_string(t.degenerate) +
                           " degenerate poses out of " + std::to_string(t.samples));
  }
}

// Binomial class estimate scaled by `scale`. The z-score uses the estimate's
// standard error, or the reference's when no sample fell in the class.
ClassEstimate binomial_class(std::string name, std::uint64_t count, std::uint64_t valid,
                             double scale, double reference) {
  ClassEstimate c;
  c.name = std::move(name);
  c.count = count;
  c.reference = reference;
  const double nv = static_cast<double>(valid);
  const double p = static_cast<double>(count) / nv;
  c.estimate = scale * p;
  c.std_error = scale * std::sqrt(p * (1.0 - p) / nv);
  double se = c.std_error;
  if (se == 0.0) {
    const double q = std::clamp(reference / scale, 0.0, 1.0);
    se = scale * std::sqrt(q * (1.0 - q) / nv);
  }
  c.z_score = se > 0.0 ? (c.estimate - reference) / se : 0.0;
  return c;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t chunk) {
  auto seq = make_seed_seq(seed, chunk);
  engine_.seed(seq);
}

double EstimateReport::max_abs_z() const {
  double z = 0.0;
  for (const ClassEstimate& c : classes) z = std::max(z, std::abs(c.z_score));
  if (mean_intersections) z = std::max(z, std::abs(mean_intersections->z_score));
  return z;
}

const ClassEstimate& EstimateReport::at(const std::string& name) const {
  for (const ClassEstimate& c : classes) {
    if (c.name == name) return c;
  }
  if (mean_intersections && mean_intersections->name == name) return *mean_intersections;
  throw DomainError("no estimate class named " + name);
}

EstimateReport estimate_fixed_direction_areas(const Ellipse& e, double r, std::uint64_t n,
                                              std::uint64_t seed, const MonteCarloOptions& opts) {
  require_radius(r);
  if (n < kMinSamples) {
    throw DomainError("area estimation needs at least 10^4 samples");
  }
  const double half = e.a() + r;
  const double box = 4.0 * half * half;

  // Class slots: 0 = A_i01, 1 = A_i10, 2 = A_2, 3 = A_4.
  const Tally total = run_chunks(n, opts, [&](std::uint64_t chunk, std::uint64_t m) {
    RngStream rng(seed, chunk);
    Tally t;
    t.samples = m;
    for (std::uint64_t i = 0; i < m; ++i) {
      const CenterOffset c{half * (2.0 * rng.uniform() - 1.0), half * (2.0 * rng.uniform() - 1.0)};
      switch (classify(e, r, c, opts.classify)) {
        case Relation::CircleInsideEllipse: ++t.counts[0]; break;
        case Relation::EllipseInsideCircle: ++t.counts[1]; break;
        case Relation::TwoPoints: ++t.counts[2]; break;
        case Relation::FourPoints: ++t.counts[3]; break;
        case Relation::Degenerate: ++t.degenerate; break;
        case Relation::DisjointOutside: break;
      }
    }
    return t;
  });
  check_degenerate_cap(total);

  const AreaSet ref = areas(e, r);
  const std::uint64_t valid = total.samples - total.degenerate;
  EstimateReport report;
  report.n = total.samples;
  report.n_degenerate = total.degenerate;
  report.classes.push_back(binomial_class("A_i01", total.counts[0], valid, box, ref.a_i01));
  report.classes.push_back(binomial_class("A_i10", total.counts[1], valid, box, ref.a_i10));
  report.classes.push_back(binomial_class("A_2", total.counts[2], valid, box, ref.a_2));
  report.classes.push_back(binomial_class("A_4", total.counts[3], valid, box, ref.a_4));
  return report;
}

EstimateReport simulate_throws(const Ellipse& e, double r, const Lattice& lat, std::uint64_t n,
                               std::uint64_t seed, const MonteCarloOptions& opts) {
  require_one_circle(e, r, lat);
  if (n < kMinSamples) {
    throw DomainError("throw simulation needs at least 10^4 samples");
  }
  const ProbabilitySet ref = probabilities(e, r, lat);
  const double ez = expected_intersections(e, r, lat);

  const double sin_s = std::sin(lat.sigma);
  const double cos_s = std::cos(lat.sigma);
  const double height = lat.t * sin_s;
  const double reach = e.a() + r;
  const double reach2 = reach * (1.0 + 1e-9) * reach * (1.0 + 1e-9);
  // Lattice-coordinate radius that is guaranteed to contain every circle
  // within distance a + r <= min(s, t)/2 of the thrown centre.
  const int span = std::max(1, static_cast<int>(std::ceil(0.5 / sin_s + 0.5)));

  // Class slots: 0 = p_e, 1 = p_i, 2 = p_2, 3 = p_4.
  const Tally total = run_chunks(n, opts, [&](std::uint64_t chunk, std::uint64_t m) {
    RngStream rng(seed, chunk);
    Tally t;
    t.samples = m;
    for (std::uint64_t k = 0; k < m; ++k) {
      const double u = rng.uniform();
      const double v = rng.uniform();
      const double psi = two_pi * rng.uniform();
      const double y1 = v * height;
      const double x1 = y1 * cos_s / sin_s + u * lat.s;
      const double cp = std::cos(psi);
      const double sp = std::sin(psi);

      // Lattice coordinates of the centre are (u, v) by construction.
      const int i0 = static_cast<int>(std::lround(u));
      const int j0 = static_cast<int>(std::lround(v));
      int hits = 0;
      Relation hit = Relation::DisjointOutside;
      for (int j = j0 - span; j <= j0 + span; ++j) {
        for (int i = i0 - span; i <= i0 + span; ++i) {
          const double dx = i * lat.s + j * lat.t * cos_s - x1;
          const double dy = j * height - y1;
          if (dx * dx + dy * dy > reach2) continue;
          // Circle centre in the frame attached to the ellipse.
          const CenterOffset c{dx * cp + dy * sp, -dx * sp + dy * cp};
          const Relation rel = classify(e, r, c, opts.classify);
          if (rel == Relation::DisjointOutside) continue;
          ++hits;
          hit = rel;
        }
      }
      if (hits > 1) {
        throw AssumptionError("a thrown ellipse met two lattice circles at once");
      }
      switch (hit) {
        case Relation::DisjointOutside: ++t.counts[0]; break;
        case Relation::EllipseInsideCircle:
        case Relation::CircleInsideEllipse: ++t.counts[1]; break;
        case Relation::TwoPoints: ++t.counts[2]; break;
        case Relation::FourPoints: ++t.counts[3]; break;
        case Relation::Degenerate: ++t.degenerate; break;
      }
    }
    return t;
  });
  check_degenerate_cap(total);

  const std::uint64_t valid = total.samples - total.degenerate;
  EstimateReport report;
  report.n = total.samples;
  report.n_degenerate = total.degenerate;
  report.classes.push_back(binomial_class("p_e", total.counts[0], valid, 1.0, ref.p_e));
  report.classes.push_back(binomial_class("p_i", total.counts[1], valid, 1.0, ref.p_i));
  report.classes.push_back(binomial_class("p_2", total.counts[2], valid, 1.0, ref.p_2));
  report.classes.push_back(binomial_class("p_4", total.counts[3], valid, 1.0, ref.p_4));

  const double nv = static_cast<double>(valid);
  const double n2 = static_cast<double>(total.counts[2]);
  const double n4 = static_cast<double>(total.counts[3]);
  ClassEstimate mean;
  mean.name = "E(Z)";
  mean.count = valid;
  mean.estimate = (2.0 * n2 + 4.0 * n4) / nv;
  const double second = (4.0 * n2 + 16.0 * n4) / nv;
  const double var = std::max(0.0, second - mean.estimate * mean.estimate);
  mean.std_error = std::sqrt(var / nv);
  mean.reference = ez;
  mean.z_score = mean.std_error > 0.0 ? (mean.estimate - ez) / mean.std_error : 0.0;
  report.mean_intersections = mean;
  return report;
}

}  // namespace ellcirc
