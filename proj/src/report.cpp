#include "bolkit/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bolkit {

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["context"] = r.context;
  j["check"] = r.check;
  j["samples"] = r.samples;
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  j["max_residual"] = std::isfinite(r.max_residual) ? nlohmann::json(r.max_residual)
                                                    : nlohmann::json("inf");
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["paper_section"] = r.tag;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.invariant) j["invariant"] = *r.invariant;
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.context = j.at("context").get<std::string>();
  r.check = j.at("check").get<std::string>();
  r.samples = j.at("samples").get<std::int64_t>();
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  const auto& mr = j.at("max_residual");
  r.max_residual = mr.is_string() ? INFINITY : mr.get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.tag = j.at("paper_section").get<std::string>();
  if (j.contains("detail")) r.detail = j["detail"].get<std::string>();
  if (j.contains("invariant")) r.invariant = j["invariant"];
  return r;
}

std::string to_jsonl(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

std::string to_text(const VerificationReport& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", r.max_residual);
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.context << " :: " << r.check << "  residual=" << buf;
  if (r.samples > 0) os << " samples=" << r.samples;
  if (!r.detail.empty()) os << "  [" << r.detail << "]";
  return os.str();
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

int Rng::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

std::uint64_t stream_id(const std::string& label) {
  // FNV-1a, stable across platforms.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace bolkit
