#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p1gw/correlators.hpp"
#include "p1gw/oracles.hpp"
#include "p1gw/recursion.hpp"
#include "p1gw/resolvent.hpp"
#include "p1gw/serialization.hpp"
#include "p1gw/verify.hpp"

namespace p1gw {

enum class OutputFormat { json, csv, markdown, latex };

OutputFormat parse_format(const std::string& name);

/// Hurwitz numbers indexed by genus (rows) and degree (columns, from d = 1).
struct HurwitzGrid {
  int g_max = 0;
  int d_max = 0;
  std::vector<std::vector<std::optional<Rational>>> values;  // [g][d - 1]; empty where 2g + 2d - 2 < 1
};

std::string render_record(const CorrelatorRecord& r, OutputFormat f);
std::string render_table(const PolygonTable& t, OutputFormat f);
std::string render_hurwitz(const HurwitzGrid& h, OutputFormat f);
std::string render_asymptotics(const AsymptoticReport& a, OutputFormat f);
std::string render_resolvent(const ResolventBundle& b, OutputFormat f);

/// Always JSON: {"suite": ..., "checks": M, "failures": [...], ...}.
Json verify_to_json(const VerifyReport& r);

}  // namespace p1gw
