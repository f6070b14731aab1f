#include "wordhopf/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "wordhopf/laws.hpp"

namespace wordhopf {

namespace {

using nlohmann::json;

Rational parse_rational_field(const json& j, const std::string& field) {
  if (!j.is_string()) {
    throw ConfigError(field, field + " must be a rational string \"p/q\"");
  }
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, field + ": " + e.what());
  }
}

}  // namespace

nlohmann::json word_to_json(const Word& w) {
  json letters = json::array();
  for (const Letter& l : w.letters()) {
    letters.push_back(l.content());
  }
  return letters;
}

Word word_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("word must be an array");
  std::vector<Letter> letters;
  for (const auto& letter : j) {
    if (!letter.is_array() || letter.empty()) {
      throw std::invalid_argument("letter must be a nonempty array");
    }
    std::vector<GeneratorIndex> content;
    for (const auto& entry : letter) {
      if (!entry.is_number_integer()) {
        throw std::invalid_argument("letter entries must be integers");
      }
      content.push_back(entry.get<GeneratorIndex>());
    }
    letters.push_back(Letter(std::move(content)));
  }
  return Word(std::move(letters));
}

nlohmann::json element_to_json(const Element& x) {
  json out = json::array();
  for (const auto& [w, c] : x.terms()) {
    out.push_back({{"coeff", to_string(c)}, {"word", word_to_json(w)}});
  }
  return out;
}

Element element_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("element must be an array");
  Element out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("word") ||
        !term.contains("coeff") || !term["coeff"].is_string()) {
      throw std::invalid_argument(
          "element terms need a word and a rational coeff string");
    }
    out.add_term(word_from_json(term["word"]),
                 parse_rational(term["coeff"].get<std::string>()));
  }
  return out;
}

SigmaSpec RunConfig::sigma() const {
  return SigmaSpec(system.couplings, sigma_extra);
}

RunConfig parse_run_config(const nlohmann::json& j) {
  RunConfig config;
  if (!j.is_object()) throw ConfigError("", "config must be a JSON object");

  if (!j.contains("R") || !j["R"].is_number_integer()) {
    throw ConfigError("R", "R must be an integer >= 1");
  }
  config.system.generator_count = j["R"].get<int>();
  if (config.system.generator_count < 1) {
    throw ConfigError("R", "R must be >= 1");
  }
  const int r_count = config.system.generator_count;

  if (!j.contains("eta") || !j["eta"].is_array() ||
      static_cast<int>(j["eta"].size()) != r_count) {
    throw ConfigError("eta", "eta must be an array of length R");
  }
  for (int i = 0; i < r_count; ++i) {
    const auto& entry = j["eta"][static_cast<std::size_t>(i)];
    if (!entry.is_number_integer()) {
      throw ConfigError("eta", "eta[" + std::to_string(i) +
                                   "] must be an integer");
    }
    const int value = entry.get<int>();
    if (value == 0) {
      throw ConfigError("eta",
                        "eta[" + std::to_string(i) + "] must be nonzero");
    }
    config.system.eta.push_back(value);
  }

  if (!j.contains("c") || !j["c"].is_array() ||
      static_cast<int>(j["c"].size()) != r_count) {
    throw ConfigError("c", "c must be an array of length R");
  }
  for (int i = 0; i < r_count; ++i) {
    const std::string field = "c[" + std::to_string(i) + "]";
    Rational value =
        parse_rational_field(j["c"][static_cast<std::size_t>(i)], field);
    if (value == 0) {
      throw ConfigError("c", field + " must be nonzero");
    }
    config.system.couplings.push_back(std::move(value));
  }

  if (!j.contains("order") || !j["order"].is_number_integer() ||
      j["order"].get<int>() < 1) {
    throw ConfigError("order", "order must be an integer >= 1");
  }
  config.system.order = j["order"].get<int>();

  if (j.contains("sigma_extra") && !j["sigma_extra"].is_null()) {
    if (!j["sigma_extra"].is_array()) {
      throw ConfigError("sigma_extra", "sigma_extra must be an array");
    }
    for (const auto& entry : j["sigma_extra"]) {
      if (!entry.is_object() || !entry.contains("letter") ||
          !entry.contains("value")) {
        throw ConfigError("sigma_extra",
                          "sigma_extra entries need letter and value");
      }
      Word letter_word;
      try {
        letter_word = word_from_json(json::array({entry["letter"]}));
      } catch (const std::invalid_argument& e) {
        throw ConfigError("sigma_extra", std::string("sigma_extra letter: ") +
                                             e.what());
      }
      const Letter& letter = letter_word.letters().front();
      for (GeneratorIndex g : letter.content()) {
        if (g > r_count) {
          throw ConfigError("sigma_extra",
                            "sigma_extra letter index exceeds R");
        }
      }
      if (!letter.inherited()) {
        throw ConfigError("sigma_extra",
                          "sigma_extra letters must be inherited "
                          "(cardinality >= 2)");
      }
      config.sigma_extra[letter] =
          parse_rational_field(entry["value"], "sigma_extra value");
    }
    // The derivation law rejects nonzero inherited values; surface that as a
    // config failure rather than a library exception.
    try {
      SigmaSpec probe(config.system.couplings, config.sigma_extra);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("sigma_extra", e.what());
    }
  }

  if (j.contains("general_rhs") && !j["general_rhs"].is_null()) {
    if (!j["general_rhs"].is_array() ||
        static_cast<int>(j["general_rhs"].size()) != r_count) {
      throw ConfigError("general_rhs",
                        "general_rhs must be an array of length R");
    }
    std::vector<GeneralRHS::Monomials> monomials(
        static_cast<std::size_t>(r_count));
    for (int r = 0; r < r_count; ++r) {
      const auto& eq = j["general_rhs"][static_cast<std::size_t>(r)];
      if (!eq.is_array()) {
        throw ConfigError("general_rhs",
                          "general_rhs[" + std::to_string(r) +
                              "] must be an array of monomials");
      }
      for (const auto& mono : eq) {
        if (!mono.is_object() || !mono.contains("coeff") ||
            !mono.contains("powers") || !mono["powers"].is_array() ||
            static_cast<int>(mono["powers"].size()) != r_count) {
          throw ConfigError("general_rhs",
                            "general_rhs monomials need coeff and powers of "
                            "length R");
        }
        std::vector<int> powers;
        for (const auto& p : mono["powers"]) {
          if (!p.is_number_integer() || p.get<int>() < 0) {
            throw ConfigError("general_rhs",
                              "general_rhs powers must be nonnegative "
                              "integers");
          }
          powers.push_back(p.get<int>());
        }
        monomials[static_cast<std::size_t>(r)][powers] =
            parse_rational_field(mono["coeff"], "general_rhs coeff");
      }
    }
    config.general = GeneralRHS(r_count, config.system.order,
                                std::move(monomials));
  }

  try {
    config.system.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("system", e.what());
  }
  return config;
}

Solution solve_from_config(const RunConfig& config) {
  const SigmaSpec sigma = config.sigma();
  const std::vector<AlphaSeries> series =
      config.general ? solve_general(*config.general)
                     : solve_cdse(config.system);
  Solution solution;
  for (int r = 1; r <= config.system.generator_count; ++r) {
    const AlphaSeries& x = series[static_cast<std::size_t>(r - 1)];
    SolutionEntry entry;
    entry.r = r;
    for (int n = 0; n <= x.order(); ++n) entry.words.push_back(x.coeff(n));
    entry.green = green_function(sigma, x);
    entry.ll = leading_log(entry.green);
    if (!config.general) {
      entry.closed_derived =
          closed_form_ll(config.system, r, ClosedFormMode::kDerived)
              .coefficients;
      entry.match_derived = entry.ll.coefficients == *entry.closed_derived;
      try {
        entry.closed_paper =
            closed_form_ll(config.system, r, ClosedFormMode::kPaper)
                .coefficients;
        entry.match_paper = entry.ll.coefficients == *entry.closed_paper;
      } catch (const std::domain_error&) {
        // The printed formula does not apply; leave both fields null.
      }
    }
    solution.entries.push_back(std::move(entry));
  }
  return solution;
}

namespace {

json rationals_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Rational> rationals_from_json(const json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

}  // namespace

nlohmann::json solution_to_json(const Solution& solution) {
  json out = json::array();
  for (const SolutionEntry& entry : solution.entries) {
    json words = json::array();
    for (const Element& w : entry.words) words.push_back(element_to_json(w));
    json green = json::array();
    for (const auto& row : entry.green.rows) {
      green.push_back(rationals_to_json(row));
    }
    json item = {
        {"r", entry.r},
        {"words", std::move(words)},
        {"green", std::move(green)},
        {"leading_log", rationals_to_json(entry.ll.coefficients)},
        {"closed_form_derived",
         entry.closed_derived ? rationals_to_json(*entry.closed_derived)
                              : json(nullptr)},
        {"closed_form_paper",
         entry.closed_paper ? rationals_to_json(*entry.closed_paper)
                            : json(nullptr)},
        {"match_derived",
         entry.match_derived ? json(*entry.match_derived) : json(nullptr)},
        {"match_paper",
         entry.match_paper ? json(*entry.match_paper) : json(nullptr)},
    };
    out.push_back(std::move(item));
  }
  return out;
}

Solution solution_from_json(const nlohmann::json& j) {
  Solution solution;
  for (const auto& item : j) {
    SolutionEntry entry;
    entry.r = item.at("r").get<int>();
    for (const auto& w : item.at("words")) {
      entry.words.push_back(element_from_json(w));
    }
    for (const auto& row : item.at("green")) {
      entry.green.rows.push_back(rationals_from_json(row));
    }
    entry.ll.coefficients = rationals_from_json(item.at("leading_log"));
    if (!item.at("closed_form_derived").is_null()) {
      entry.closed_derived = rationals_from_json(item["closed_form_derived"]);
    }
    if (!item.at("closed_form_paper").is_null()) {
      entry.closed_paper = rationals_from_json(item["closed_form_paper"]);
    }
    if (!item.at("match_derived").is_null()) {
      entry.match_derived = item["match_derived"].get<bool>();
    }
    if (!item.at("match_paper").is_null()) {
      entry.match_paper = item["match_paper"].get<bool>();
    }
    solution.entries.push_back(std::move(entry));
  }
  return solution;
}

std::string to_canonical_bytes(const nlohmann::json& j) {
  return j.dump(2) + "\n";
}

namespace {

// Reads and validates a config; returns nullopt after printing the error and
// setting *exit_code.
std::optional<RunConfig> load_config(const std::string& path,
                                     std::ostream& err, int* exit_code) {
  std::ifstream in(path);
  if (!in) {
    err << "config error: cannot read file " << path << "\n";
    *exit_code = 2;
    return std::nullopt;
  }
  json parsed;
  try {
    in >> parsed;
  } catch (const json::parse_error& e) {
    err << "config error: invalid JSON in " << path << ": " << e.what()
        << "\n";
    *exit_code = 2;
    return std::nullopt;
  }
  try {
    return parse_run_config(parsed);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    *exit_code = 2;
    return std::nullopt;
  } catch (const json::exception& e) {
    err << "config error: malformed value: " << e.what() << "\n";
    *exit_code = 2;
    return std::nullopt;
  }
}

}  // namespace

int cmd_solve(const std::string& config_path, const std::string& out_path,
              std::ostream& err) {
  int exit_code = 0;
  const auto config = load_config(config_path, err, &exit_code);
  if (!config) return exit_code;
  try {
    const Solution solution = solve_from_config(*config);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      err << "error: cannot write output file " << out_path << "\n";
      return 1;
    }
    out << to_canonical_bytes(solution_to_json(solution));
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_verify(int max_degree, int generators, std::uint64_t seed,
               std::ostream& out, std::ostream& err) {
  if (max_degree < 1) {
    err << "config error: max-degree must be >= 1\n";
    return 2;
  }
  if (generators < 1) {
    err << "config error: generators must be >= 1\n";
    return 2;
  }
  const laws::VerifyOptions opts{max_degree, generators, seed};
  bool all_passed = true;
  for (const laws::SuiteResult& suite : laws::run_all(opts)) {
    out << suite.name << ": " << (suite.passed ? "PASS" : "FAIL") << " ("
        << suite.checks << " checks)\n";
    for (const std::string& failure : suite.failures) {
      out << "  " << failure << "\n";
    }
    all_passed = all_passed && suite.passed;
  }
  out << "seed: " << seed << "\n";
  return all_passed ? 0 : 1;
}

int cmd_leading_log(const std::string& config_path, const std::string& format,
                    std::ostream& out, std::ostream& err) {
  int exit_code = 0;
  const auto config = load_config(config_path, err, &exit_code);
  if (!config) return exit_code;
  try {
    const Solution solution = solve_from_config(*config);
    if (format == "csv") {
      bool first = true;
      for (const SolutionEntry& entry : solution.entries) {
        if (!first) out << "\n";
        first = false;
        for (const auto& row : entry.green.rows) {
          for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out << ",";
            out << to_string(row[j]);
          }
          out << "\n";
        }
      }
      return 0;
    }
    json report = json::array();
    for (const SolutionEntry& entry : solution.entries) {
      json green = json::array();
      for (const auto& row : entry.green.rows) {
        green.push_back(rationals_to_json(row));
      }
      report.push_back({{"r", entry.r},
                        {"green", std::move(green)},
                        {"leading_log",
                         rationals_to_json(entry.ll.coefficients)}});
    }
    out << to_canonical_bytes(report);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_compare(const std::string& config_path, const std::string& mode,
                std::ostream& out, std::ostream& err) {
  int exit_code = 0;
  const auto config = load_config(config_path, err, &exit_code);
  if (!config) return exit_code;
  if (config->general) {
    err << "config error: compare requires a CDSE config without "
           "general_rhs\n";
    return 2;
  }
  const ClosedFormMode closed_mode = mode == "paper"
                                         ? ClosedFormMode::kPaper
                                         : ClosedFormMode::kDerived;
  try {
    const SigmaSpec sigma = config->sigma();
    const std::vector<AlphaSeries> series = solve_cdse(config->system);
    bool all_match = true;
    for (int r = 1; r <= config->system.generator_count; ++r) {
      LeadingLog solved =
          leading_log(green_function(sigma,
                                     series[static_cast<std::size_t>(r - 1)]));
      LeadingLog closed;
      try {
        closed = closed_form_ll(config->system, r, closed_mode);
      } catch (const std::domain_error& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
      }
      for (std::size_t k = 0; k < solved.coefficients.size(); ++k) {
        const bool match = solved.coefficients[k] == closed.coefficients[k];
        all_match = all_match && match;
        out << "r=" << r << " k=" << k << ": solved="
            << to_string(solved.coefficients[k])
            << " closed=" << to_string(closed.coefficients[k]) << " "
            << (match ? "MATCH" : "MISMATCH") << "\n";
      }
    }
    out << (all_match ? "all coefficients match" : "mismatch detected")
        << "\n";
    return all_match ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wordhopf
