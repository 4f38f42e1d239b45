#include "p1gw/render.hpp"

#include <sstream>

#include "p1gw/errors.hpp"

namespace p1gw {

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "markdown") return OutputFormat::markdown;
  if (name == "latex") return OutputFormat::latex;
  throw InvalidArgument("unknown format '" + name + "'");
}

namespace {

std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  const std::string sign = r < 0 ? "-" : "";
  return sign + "\\frac{" + BigInt(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string cell(const Rational& r, OutputFormat f) {
  return f == OutputFormat::latex ? "$" + latex_rational(r) + "$" : to_string(r);
}

// One table in the requested (non-JSON) layout.
std::string grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                 OutputFormat f) {
  std::ostringstream out;
  auto join = [](const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
  };
  switch (f) {
    case OutputFormat::csv:
      out << join(header, ",") << '\n';
      for (const auto& r : rows) out << join(r, ",") << '\n';
      break;
    case OutputFormat::markdown:
      out << "| " << join(header, " | ") << " |\n|";
      for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
      out << '\n';
      for (const auto& r : rows) out << "| " << join(r, " | ") << " |\n";
      break;
    case OutputFormat::latex:
      out << "\\begin{tabular}{|" << std::string(header.size(), 'c') << "|}\n\\hline\n";
      out << join(header, " & ") << " \\\\\n\\hline\n";
      for (const auto& r : rows) out << join(r, " & ") << " \\\\\n";
      out << "\\hline\n\\end{tabular}\n";
      break;
    case OutputFormat::json:
      throw InvalidArgument("grid() does not render JSON");
  }
  return out.str();
}

std::string eps_display(const EpsLaurent& v, OutputFormat f) {
  if (f != OutputFormat::latex) return v.to_string();
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : v.terms()) {
    std::string term = latex_rational(c);
    if (!s.empty()) s += term.front() == '-' ? " " : " + ";
    if (e != 0) term += " \\epsilon^{" + std::to_string(e) + "}";
    s += term;
  }
  return s;
}

std::string insertions_label(const CorrelatorKey& k) {
  std::string s = "<";
  for (std::size_t i = 0; i < k.insertions.size(); ++i) s += (i ? " tau_" : "tau_") + std::to_string(k.insertions[i]);
  return s + ">";
}

}  // namespace

std::string render_record(const CorrelatorRecord& r, OutputFormat f) {
  if (f == OutputFormat::json) return record_to_json(r).dump(2) + "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : r.by_genus) rows.push_back({std::to_string(row.g), std::to_string(row.d), cell(row.value, f)});
  const std::vector<std::string> header = {"g", "d", "value"};
  if (f == OutputFormat::csv) return grid(header, rows, f);
  std::ostringstream out;
  if (f == OutputFormat::markdown) {
    out << insertions_label(r.key) << " = " << eps_display(r.value, f) << "\n\n";
    out << "depth " << r.depth_used << ", stability " << (r.stability_verified ? "verified" : "not checked") << "\n\n";
  } else {
    out << "% " << insertions_label(r.key) << "\n$" << eps_display(r.value, f) << "$\n\n";
  }
  if (!rows.empty()) out << grid(header, rows, f);
  return out.str();
}

std::string render_table(const PolygonTable& t, OutputFormat f) {
  if (f == OutputFormat::json) {
    Json j;
    j["b"] = t.b;
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json cells = Json::array();
      for (const auto& v : row.by_genus) cells.push_back(to_string(v));
      rows.push_back({{"n", row.n}, {"by_genus", std::move(cells)}, {"depth", row.depth_used},
                      {"stable", row.stability_verified}});
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
  }
  std::vector<std::string> header = {"n"};
  for (int g = 0; g <= t.g_max; ++g) header.push_back(f == OutputFormat::latex ? "$g=" + std::to_string(g) + "$" : "g=" + std::to_string(g));
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : t.rows) {
    std::vector<std::string> cells = {std::to_string(row.n)};
    for (const auto& v : row.by_genus) cells.push_back(cell(v, f));
    rows.push_back(std::move(cells));
  }
  return grid(header, rows, f);
}

std::string render_hurwitz(const HurwitzGrid& h, OutputFormat f) {
  if (f == OutputFormat::json) {
    Json rows = Json::array();
    for (int g = 0; g <= h.g_max; ++g) {
      for (int d = 1; d <= h.d_max; ++d) {
        const auto& v = h.values[static_cast<std::size_t>(g)][static_cast<std::size_t>(d - 1)];
        rows.push_back({{"g", g}, {"d", d}, {"value", v ? Json(to_string(*v)) : Json(nullptr)}});
      }
    }
    return Json{{"hurwitz", std::move(rows)}}.dump(2) + "\n";
  }
  std::vector<std::string> header = {"g"};
  for (int d = 1; d <= h.d_max; ++d) header.push_back("d=" + std::to_string(d));
  std::vector<std::vector<std::string>> rows;
  for (int g = 0; g <= h.g_max; ++g) {
    std::vector<std::string> cells = {std::to_string(g)};
    for (const auto& v : h.values[static_cast<std::size_t>(g)]) cells.push_back(v ? cell(*v, f) : "-");
    rows.push_back(std::move(cells));
  }
  return grid(header, rows, f);
}

std::string render_asymptotics(const AsymptoticReport& a, OutputFormat f) {
  if (f == OutputFormat::json) {
    Json j;
    j["k"] = a.k;
    j["d"] = a.d;
    j["limit"] = to_string(a.limit);
    j["limit_decimal"] = to_decimal(a.limit);
    Json rows = Json::array();
    for (const auto& r : a.rows) {
      rows.push_back({{"g", r.g},
                      {"ratio", to_string(r.ratio)},
                      {"decimal", to_decimal(r.ratio)},
                      {"difference", to_string(r.difference)},
                      {"abs_difference_decimal", to_decimal(abs(r.difference))}});
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
  }
  const std::vector<std::string> header = {"g", "ratio", "decimal", "|ratio - limit|"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : a.rows) {
    rows.push_back({std::to_string(r.g), cell(r.ratio, f), to_decimal(r.ratio), to_decimal(abs(r.difference))});
  }
  std::string limit_line = "limit " + to_string(a.limit) + " = " + to_decimal(a.limit) + "\n";
  if (f == OutputFormat::csv) return grid(header, rows, f) + "# " + limit_line;
  if (f == OutputFormat::latex) return grid(header, rows, f) + "% " + limit_line;
  return grid(header, rows, f) + "\n" + limit_line;
}

std::string render_resolvent(const ResolventBundle& b, OutputFormat f) {
  if (f == OutputFormat::json) {
    Json j;
    j["depth"] = b.depth;
    j["r11"] = series_to_json(b.r.a11);
    j["r12"] = series_to_json(b.r.a12);
    j["r21"] = series_to_json(b.r.a21);
    j["r22"] = series_to_json(b.r.a22);
    return j.dump(2) + "\n";
  }
  const std::vector<std::string> header = {"lambda", "R11", "R12", "R21", "R22"};
  std::vector<std::vector<std::string>> rows;
  for (int e = 0; e >= -b.depth; --e) {
    const Mat2<EpsLaurent> c = coeff_matrix(b.r, e);
    std::string label = f == OutputFormat::latex ? "$\\lambda^{" + std::to_string(e) + "}$" : "lambda^" + std::to_string(e);
    auto show = [&](const EpsLaurent& v) {
      const std::string s = eps_display(v, f);
      return f == OutputFormat::latex ? "$" + s + "$" : f == OutputFormat::csv ? "\"" + s + "\"" : s;
    };
    rows.push_back({label, show(c.a11), show(c.a12), show(c.a21), show(c.a22)});
  }
  return grid(header, rows, f);
}

Json verify_to_json(const VerifyReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  if (r.suite == "tables") j["known_conflicts"] = r.known_conflicts;
  j["ok"] = r.ok();
  return j;
}

}  // namespace p1gw
