#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsgps/semigroup.hpp"

namespace nsgps::cli {

  using Json = nlohmann::ordered_json;

  inline constexpr int kExitOk     = 0;
  inline constexpr int kExitDomain = 1;
  inline constexpr int kExitUsage  = 2;

  // Runs the tool on <args> (program name excluded). Results go to <out>,
  // diagnostics to <err>. Returns the process exit code.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

  // "[ 1, 2, 3 ]", "[  ]" when empty, nested lists likewise.
  std::string format_list(std::span<Int const> values);

  // Plain-text rendering used by every subcommand.
  std::string render_plain(Json const& payload);

  // The info record of S; parse(emit(S)) == S.
  Json      to_json(Semigroup const& s);
  Semigroup semigroup_from_json(Json const& j);

  // "5 7 9", "5,7,9" or "5, 7, 9"; throws InvalidArgument on junk.
  std::vector<Int> parse_generator_line(std::string const& line);

}  // namespace nsgps::cli
