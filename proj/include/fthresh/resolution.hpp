#pragma once

// Embedded resolution of plane curve germs at the origin by point blowups.

#include <cstdint>
#include <string>
#include <vector>

#include "fthresh/poly.hpp"

namespace fthresh {

/// A prime divisor on the resolution with its coefficients in K_π (k) and in
/// div(f∘π) (a). The strict transform is labelled "strict".
struct DivisorRecord {
  std::string label;
  std::uint64_t k = 0;
  std::uint64_t a = 0;

  friend bool operator==(const DivisorRecord&, const DivisorRecord&) = default;
};

struct BlowupStep {
  std::string label;   // exceptional divisor created, "E1", "E2", ...
  std::string center;  // path of infinitely near points leading to the center
  std::vector<std::string> through;  // divisors through the center before blowing up
  std::uint64_t k = 0;
  std::uint64_t a = 0;

  friend bool operator==(const BlowupStep&, const BlowupStep&) = default;
};

/// Final-pass certificate for one point of the total transform on the exceptional locus.
struct SncPoint {
  std::string where;
  std::vector<std::string> components;
  std::string reason;

  friend bool operator==(const SncPoint&, const SncPoint&) = default;
};

struct ResolutionData {
  std::vector<DivisorRecord> divisors;  // exceptionals in creation order, then the strict transform
  std::size_t blowup_count = 0;
  std::vector<BlowupStep> log;
  std::vector<SncPoint> snc_points;

  friend bool operator==(const ResolutionData&, const ResolutionData&) = default;
};

inline constexpr std::size_t kMaxBlowups = 512;

/// Resolve f ∈ Q[x, y] near the origin. Requires f square-free with f(0,0) = 0
/// and every center that must be blown up to be Q-rational (IrrationalCenter otherwise).
ResolutionData resolve_plane_curve(const QPoly& f, std::size_t max_blowups = kMaxBlowups);

/// f is square-free iff its restriction to some line keeps the full degree and
/// is square-free. A fixed family of lines is tried; a square-free f is
/// rejected only if every one of them is special for f.
bool is_square_free(const QPoly& f);

}  // namespace fthresh
