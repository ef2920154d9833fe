#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grim/error.hpp"
#include "grim/plucker.hpp"

namespace grim {

/// Contents of a job file, before any parsing of polynomials.
struct JobSpec {
  std::vector<std::string> variables;
  std::string a, b, q;
  std::array<std::array<std::string, 5>, 4> sections;
  std::uint64_t seed = 0;
  std::string order = "grevlex";
};

/// Reads the JSON job format:
///   {"variables": [...], "presentation": {"A": .., "B": .., "Q": ..},
///    "sections": [[5 rationals] x 4], "seed": n, "order": "grevlex"|"lex"}
/// Rationals are integers or "p/q" strings.
JobSpec parse_job(const std::string& json_text);
JobSpec load_job(const std::string& path);

struct JobOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> order;
  std::uint64_t max_steps = GbOptions{}.max_steps;
};

/// A validated job: presentation without common zeros and an independent
/// quadruple. Generation is checked separately.
struct Job {
  JobSpec spec;
  RingPtr ring;
  Presentation presentation;
  SectionQuadruple quadruple;
  std::uint64_t seed = 0;
  GbOptions options;
};

Job build_job(const JobSpec& spec, const JobOverrides& overrides = {});

/// An Error tagged with the pipeline stage that raised it.
class StageError : public Error {
public:
  StageError(const Error& e, std::string stage) : Error(e.code(), e.what()), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

private:
  std::string stage_;
};

/// The full pipeline as a document with a schema_version field; `format`
/// is "json" or "text". Timings make the output nondeterministic.
std::string render_report(const Job& job, const std::string& format = "json", bool timings = false);

/// 0 success, 1 input or validation error, 2 resource limit, 3 internal.
int exit_code_for(ErrorCode code);

/// Entry point of the command line tool; testable without a process.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grim
