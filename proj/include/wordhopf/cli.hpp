#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordhopf/dyson.hpp"

namespace wordhopf {

// Raised on invalid run configurations; `field` names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct RunConfig {
  CDSESystem system;
  std::map<Letter, Rational> sigma_extra;
  std::optional<GeneralRHS> general;

  SigmaSpec sigma() const;
};

// Word / element / polynomial serialization shared by every module:
// a letter is a sorted array of integers, a word an array of letters, an
// element an array of {"coeff", "word"} pairs in word order, a polynomial an
// array of "p/q" strings indexed by the power of L.
nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);
nlohmann::json element_to_json(const Element& x);
Element element_from_json(const nlohmann::json& j);

RunConfig parse_run_config(const nlohmann::json& j);

// One solved equation as serialized by `solve`. Closed-form fields are null
// for general right-hand sides (no power law applies); the printed-formula
// fields are null when that formula is undefined for the system.
struct SolutionEntry {
  int r = 1;
  std::vector<Element> words;
  GreenFunction green;
  LeadingLog ll;
  std::optional<std::vector<Rational>> closed_derived;
  std::optional<std::vector<Rational>> closed_paper;
  std::optional<bool> match_derived;
  std::optional<bool> match_paper;
};

struct Solution {
  std::vector<SolutionEntry> entries;
};

Solution solve_from_config(const RunConfig& config);

nlohmann::json solution_to_json(const Solution& solution);
Solution solution_from_json(const nlohmann::json& j);

// Canonical bytes: two-space indentation and a trailing newline. Parsing and
// re-serializing a solution reproduces the bytes exactly.
std::string to_canonical_bytes(const nlohmann::json& j);

// Command entry points used by the command-line tool; they return the
// process exit code (0 success, 1 computational failure, 2 bad config).
int cmd_solve(const std::string& config_path, const std::string& out_path,
              std::ostream& err);
int cmd_verify(int max_degree, int generators, std::uint64_t seed,
               std::ostream& out, std::ostream& err);
int cmd_leading_log(const std::string& config_path, const std::string& format,
                    std::ostream& out, std::ostream& err);
int cmd_compare(const std::string& config_path, const std::string& mode,
                std::ostream& out, std::ostream& err);

}  // namespace wordhopf
