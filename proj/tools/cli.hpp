#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "quiverpar/laurent.hpp"
#include "quiverpar/quiver.hpp"

namespace quiverpar::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kDefect = 1, kConfigError = 2, kBudget = 3 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"type": "A2", "vertices": [...], "arrows": [{"from": .., "to": ..}]}.
// Without "vertices" the type's default orientation is used.
Quiver parse_quiver(const json& j);

struct RunConfig {
  std::optional<Quiver> quiver;
  std::vector<DimVector> nus;
  std::vector<int> prime_powers;
  std::uint64_t budget = 200000000;
  std::size_t flag_cap = 1000000;
  bool expanded_only = false;
  int klr_degree_bound = 2;
  std::filesystem::path out = "results";
  unsigned jobs = 1;
};

RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(const json& j, const std::filesystem::path& base_dir);

json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

// Append-only directory of records, one JSON document per file, named by a
// 64-bit FNV-1a hash of (kind, quiver, nu, y, lambda, q).
class ResultStore {
 public:
  explicit ResultStore(std::filesystem::path dir);

  static json make_record(const std::string& kind, const Quiver& q, const DimVector& nu, const std::string& y,
                          const std::string& lambda, std::optional<int> qq, json payload,
                          const std::string& status);
  static std::string key(const json& rec);

  std::optional<json> get(const json& probe) const;
  void put(const json& rec);

  std::size_t hits() const { return hits_; }
  std::size_t writes() const { return writes_; }
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  mutable std::mutex mu_;
  mutable std::size_t hits_ = 0;
  std::size_t writes_ = 0;
};

int run_subcommand(const std::string& sub, const RunConfig& cfg, std::ostream& out);
int main_entry(int argc, char** argv);

}  // namespace quiverpar::cli
