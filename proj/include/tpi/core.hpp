#pragma once

// Shared domain types for topological persistence imaging: diagrams,
// persistence-image specs, deterministic randomness, and error categories.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpi {

// Error categories map onto CLI exit codes (usage 1, data 2, numeric 3).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// One birth/lifetime pair of a persistence diagram, in filtration units.
struct PersistencePoint {
  double birth = 0.0;
  double lifetime = 0.0;

  friend bool operator==(const PersistencePoint& a, const PersistencePoint& b) {
    return a.birth == b.birth && a.lifetime == b.lifetime;
  }
  friend bool operator<(const PersistencePoint& a, const PersistencePoint& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.lifetime < b.lifetime;
  }
};

/// Multiset of persistence points for a single homology dimension (0 or 1).
struct PersistenceDiagram {
  int dimension = 0;
  std::vector<PersistencePoint> points;

  void validate() const {
    if (dimension != 0 && dimension != 1)
      throw DataError("persistence diagram dimension must be 0 or 1, got " +
                      std::to_string(dimension));
    for (const auto& p : points) {
      if (!std::isfinite(p.birth) || !std::isfinite(p.lifetime))
        throw DataError("persistence diagram contains non-finite point");
      if (p.lifetime < 0.0)
        throw DataError("persistence diagram contains negative lifetime");
    }
  }

  friend bool operator==(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    return a.dimension == b.dimension && a.points == b.points;
  }
};

/// Grid, axis ranges, kernel width and lifetime floor for rasterizing a
/// diagram into a persistence image.
struct PersistenceImageSpec {
  std::size_t rows = 50;
  std::size_t cols = 50;
  double birth_min = 0.0;
  double birth_max = 1.0;
  double life_min = 0.0;
  double life_max = 1.0;
  double sigma = 0.1;
  double lifetime_floor = 0.0;

  void validate() const {
    if (rows < 1 || cols < 1) throw DataError("image spec grid dims must be >= 1");
    if (!(birth_max > birth_min)) throw DataError("image spec birth range empty");
    if (!(life_max > life_min)) throw DataError("image spec lifetime range empty");
    if (!(sigma > 0.0)) throw DataError("image spec sigma must be > 0");
    if (lifetime_floor < 0.0) throw DataError("image spec lifetime floor must be >= 0");
  }
};

/// Multi-channel raster with entries in [0,1], layout (row, col, channel).
struct PersistenceImage {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t channels = 0;
  std::vector<float> grid;  // rows*cols*channels, row-major, channel innermost

  float at(std::size_t r, std::size_t c, std::size_t ch) const {
    return grid[(r * cols + c) * channels + ch];
  }
  float& at(std::size_t r, std::size_t c, std::size_t ch) {
    return grid[(r * cols + c) * channels + ch];
  }

  void validate() const {
    if (channels < 1) throw DataError("persistence image must have >= 1 channel");
    if (grid.size() != rows * cols * channels)
      throw DataError("persistence image buffer size mismatch");
    for (float v : grid)
      if (!(v >= 0.0f && v <= 1.0f))
        throw DataError("persistence image entry outside [0,1]");
  }
};

/// Deterministic random stream. The generator is SplitMix64 (Weyl sequence
/// plus a 64-bit finalizer), so identical seeds give identical streams on
/// every platform. Gaussians come from a cached Box-Muller transform rather
/// than std::normal_distribution, which is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n));
  }

  /// Standard normal via Box-Muller; one spare value is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double two_pi = 6.283185307179586476925286766559;
    spare_ = r * std::sin(two_pi * u2);
    has_spare_ = true;
    return r * std::cos(two_pi * u2);
  }

  double normal(double mu, double sigma) { return mu + sigma * normal(); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Independent child stream; used to give each sample of a parallel batch
  /// its own deterministic stream regardless of thread count.
  Rng child(std::uint64_t key) const {
    std::uint64_t z = seed_ ^ (0xD1B54A32D192ED03ULL * (key + 1));
    z = (z ^ (z >> 29)) * 0xFF51AFD7ED558CCDULL;
    z = (z ^ (z >> 32)) * 0xC4CEB9FE1A85EC53ULL;
    return Rng(z ^ (z >> 32));
  }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t state_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tpi
