#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

namespace bolkit {

/// Structured pass/fail record. `tag` is the topical tag written to the
/// "paper_section" field of the JSON form.
struct VerificationReport {
  std::string context;
  std::string check;
  std::int64_t samples = 0;
  std::optional<std::uint64_t> seed;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string tag;
  std::string detail;
  std::optional<nlohmann::json> invariant;
};

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

/// One JSON object per line.
std::string to_jsonl(const std::vector<VerificationReport>& reports);

/// Single human-readable line.
std::string to_text(const VerificationReport& r);

inline bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

/// Deterministic stream of random numbers derived from (seed, stream id).
/// Independent checks use distinct stream ids so that adding a check never
/// shifts the samples seen by another.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  double uniform(double lo, double hi);
  int integer(int lo, int hi);
  std::uint64_t seed() const { return seed_; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

constexpr std::uint64_t kDefaultSeed = 20240611;

/// Stable stream id from a label.
std::uint64_t stream_id(const std::string& label);

}  // namespace bolkit
