#include "lrs/config.hpp"

#include <fstream>
#include <set>

#include "lrs/error.hpp"
#include "lrs/rootsys.hpp"

namespace lrs {

using nlohmann::json;

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw Error(ErrorKind::Parse, "unknown output format '" + s + "'");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "text";
}

json to_json(const RunConfig& c) {
  return json{
      {"group", c.group},
      {"scaling_depth", c.scaling_depth},
      {"weight_bound", c.weight_bound},
      {"oracle_budget", {{"max_dim", c.budget.max_dim}, {"max_support", c.budget.max_support}}},
      {"format", to_string(c.format)},
      {"verify",
       {{"cup", c.verify.cup},
        {"samples", c.verify.samples},
        {"sample_bound", c.verify.sample_bound},
        {"seed", c.verify.seed}}},
  };
}

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, where + " must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw Error(ErrorKind::Parse, "unknown config key '" + where + "." + k + "'");
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

RunConfig config_from_json(const json& j, RunConfig c) {
  check_keys(j, {"group", "scaling_depth", "weight_bound", "oracle_budget", "format", "verify"}, "config");
  read(j, "group", c.group);
  GroupType::parse(c.group);
  read(j, "scaling_depth", c.scaling_depth);
  read(j, "weight_bound", c.weight_bound);
  if (c.scaling_depth < 1) throw Error(ErrorKind::Parse, "scaling_depth must be at least 1");
  if (c.weight_bound < 0) throw Error(ErrorKind::Parse, "weight_bound must be nonnegative");
  if (j.contains("oracle_budget")) {
    const auto& b = j.at("oracle_budget");
    check_keys(b, {"max_dim", "max_support"}, "oracle_budget");
    read(b, "max_dim", c.budget.max_dim);
    read(b, "max_support", c.budget.max_support);
  }
  if (j.contains("format")) {
    std::string f;
    read(j, "format", f);
    c.format = parse_format(f);
  }
  if (j.contains("verify")) {
    const auto& v = j.at("verify");
    check_keys(v, {"cup", "samples", "sample_bound", "seed"}, "verify");
    read(v, "cup", c.verify.cup);
    read(v, "samples", c.verify.samples);
    read(v, "sample_bound", c.verify.sample_bound);
    read(v, "seed", c.verify.seed);
  }
  return c;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, "config file '" + path + "': " + e.what());
  }
  return config_from_json(j, std::move(base));
}

}  // namespace lrs
