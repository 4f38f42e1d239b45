#include "p1gw/serialization.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "p1gw/errors.hpp"
#include "p1gw/reference_data.hpp"

namespace p1gw {

namespace fs = std::filesystem;

Json eps_to_json(const EpsLaurent& v) {
  Json out = Json::object();
  for (const auto& [e, c] : v.terms()) out[std::to_string(e)] = to_string(c);
  return out;
}

EpsLaurent eps_from_json(const Json& j) {
  if (!j.is_object()) throw MalformedValue("eps series must be a JSON object");
  std::vector<EpsLaurent::Term> terms;
  for (const auto& [key, val] : j.items()) {
    if (!val.is_string()) throw MalformedValue("eps coefficient must be a string");
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(key, &used);
      if (used != key.size()) throw MalformedValue("bad eps exponent '" + key + "'");
    } catch (const std::logic_error&) {
      throw MalformedValue("bad eps exponent '" + key + "'");
    }
    terms.emplace_back(e, parse_rational(val.get<std::string>()));
  }
  return EpsLaurent::from_terms(std::move(terms));
}

Json series_to_json(const LambdaSeries& s) {
  Json out;
  out["depth"] = is_exact_depth(s.depth()) ? Json(nullptr) : Json(s.depth());
  Json terms = Json::array();
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    Json eps = Json::array();
    for (const auto& [m, c] : it->second.terms()) eps.push_back({{"exp", m}, {"val", to_string(c)}});
    terms.push_back({{"lam", it->first}, {"eps", std::move(eps)}});
  }
  out["terms"] = std::move(terms);
  return out;
}

LambdaSeries series_from_json(const Json& j) {
  try {
    const int depth = j.at("depth").is_null() ? kExactDepth : j.at("depth").get<int>();
    LambdaSeries s = LambdaSeries::zero(depth);
    for (const auto& t : j.at("terms")) {
      std::vector<EpsLaurent::Term> eps;
      for (const auto& c : t.at("eps")) eps.emplace_back(c.at("exp").get<int>(), parse_rational(c.at("val").get<std::string>()));
      s.add_to(t.at("lam").get<int>(), EpsLaurent::from_terms(std::move(eps)));
    }
    return s;
  } catch (const Json::exception& e) {
    throw MalformedValue(std::string("bad series JSON: ") + e.what());
  }
}

Json record_to_json(const CorrelatorRecord& r) {
  Json out;
  out["insertions"] = r.key.insertions;
  out["eps_series"] = eps_to_json(r.value);
  Json rows = Json::array();
  for (const auto& row : r.by_genus) rows.push_back({{"g", row.g}, {"d", row.d}, {"value", to_string(row.value)}});
  out["by_genus"] = std::move(rows);
  out["depth"] = r.depth_used;
  out["stable"] = r.stability_verified;
  return out;
}

CorrelatorRecord record_from_json(const Json& j) {
  try {
    CorrelatorRecord r;
    r.key = make_key(j.at("insertions").get<std::vector<int>>());
    r.value = eps_from_json(j.at("eps_series"));
    for (const auto& row : j.at("by_genus")) {
      r.by_genus.push_back(
          {row.at("g").get<int>(), row.at("d").get<int>(), parse_rational(row.at("value").get<std::string>())});
    }
    r.depth_used = j.at("depth").get<int>();
    r.stability_verified = j.at("stable").get<bool>();
    return r;
  } catch (const Json::exception& e) {
    throw MalformedValue(std::string("bad correlator JSON: ") + e.what());
  }
}

Json bundle_to_json(const ResolventBundle& b) {
  Json out;
  out["format"] = "p1gw-cache";
  out["version"] = 1;
  out["depth"] = b.depth;
  out["alpha"] = series_to_json(b.alpha);
  out["p"] = series_to_json(b.p);
  out["q"] = series_to_json(b.q);
  return out;
}

ResolventBundle bundle_from_json(const Json& j) {
  try {
    if (j.at("format") != "p1gw-cache") throw CacheCorrupt("not a resolvent cache file");
    if (j.at("version") != 1) throw CacheCorrupt("unsupported cache version");
    const int depth = j.at("depth").get<int>();
    ResolventBundle b = assemble_resolvent(series_from_json(j.at("alpha")), series_from_json(j.at("p")),
                                           series_from_json(j.at("q")));
    if (b.depth != depth) throw CacheCorrupt("cache depth does not match its series");
    return b;
  } catch (const Json::exception& e) {
    throw CacheCorrupt(std::string("bad cache JSON: ") + e.what());
  } catch (const MalformedValue& e) {
    throw CacheCorrupt(e.what());
  }
}

void validate_resolvent_head(const ResolventBundle& b) {
  const auto& head = reference::resolvent_head();
  if (b.depth < static_cast<int>(head.size()) - 1) throw CacheCorrupt("cached resolvent is too shallow");
  for (std::size_t k = 0; k < head.size(); ++k) {
    const int e = -static_cast<int>(k);
    const Mat2<EpsLaurent> got = coeff_matrix(b.r, e);
    if (!(got == head[k])) throw CacheCorrupt("cached resolvent differs at lambda^" + std::to_string(e));
  }
}

ResolventCache::ResolventCache(fs::path dir) : dir_(std::move(dir)), file_(dir_ / "resolvent.json") {}

std::optional<ResolventBundle> ResolventCache::load() const {
  if (!fs::exists(file_)) return std::nullopt;
  std::ifstream in(file_);
  if (!in) throw CacheCorrupt("cannot open " + file_.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw CacheCorrupt(std::string("cache is not valid JSON: ") + e.what());
  }
  ResolventBundle b = bundle_from_json(j);
  validate_resolvent_head(b);
  return b;
}

void ResolventCache::store(const ResolventBundle& bundle) const {
  try {
    if (auto existing = load(); existing && existing->depth >= bundle.depth) return;
  } catch (const CacheCorrupt&) {
    // overwritten below
  }
  fs::create_directories(dir_);
  std::random_device rd;
  const fs::path tmp = dir_ / ("resolvent.json.tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write " + tmp.string());
    out << bundle_to_json(bundle).dump() << '\n';
    if (!out) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, file_);
}

}  // namespace p1gw
