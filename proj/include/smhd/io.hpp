#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "smhd/cases.hpp"
#include "smhd/driver.hpp"

namespace smhd {

inline constexpr const char* kVersion = "smhd 1.0.0";

/// Ordered key = value settings. Later sources override earlier ones.
using Settings = std::vector<std::pair<std::string, std::string>>;

/// Parse "key = value" lines; '#' starts a comment.
Settings parse_config(std::istream& in, const std::string& source = "<config>");
Settings parse_config_file(const std::filesystem::path& p);

/// Run options that are not part of the numerical case.
struct RunOptions {
  std::string output_dir = "run";
  long output_every = 0;  // field dumps every k steps, 0 = final only
  long max_steps = -1;
  std::string cut = "x";  // x | y | z | angle in radians for y/x = tan
  long helicity_every = 0;
};

/// Apply one setting. Unknown keys and malformed values throw ConfigError.
void apply_setting(CaseSpec& c, RunOptions& o, const std::string& key, const std::string& value);

/// Case defaults, then each source in order. The "case" key must come
/// first if present; it selects the defaults.
CaseSpec resolve(const std::string& case_name, const std::vector<Settings>& sources, RunOptions& o);

/// Every resolved key with its value, in a stable order.
Settings describe(const CaseSpec& c, const RunOptions& o);

/// Output root: $SMHD_OUTPUT_ROOT if set, else the current directory.
std::filesystem::path output_root();

void write_settings(const std::filesystem::path& p, const Settings& s);
void write_vtk(const std::filesystem::path& p, const MhdState& s);
void write_cut(const std::filesystem::path& p, const MhdState& s, const std::string& cut);
void write_diagnostics_header(std::ostream& os);
void write_diagnostics_row(std::ostream& os, const StepRecord& r);

}  // namespace smhd
