// lrs: command-line front end.  See README.md for the subcommands.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lrs/bkring.hpp"
#include "lrs/classify.hpp"
#include "lrs/config.hpp"
#include "lrs/error.hpp"
#include "lrs/format.hpp"
#include "lrs/verify.hpp"

using nlohmann::json;
using namespace lrs;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kDomain = 3, kBudget = 4, kSizeCap = 5 };

// bk-table walks W^3.
constexpr double kTableCap = 1e9;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return kParse;
    case ErrorKind::OracleOverflow: return kBudget;
    case ErrorKind::GroupTooLarge: return kSizeCap;
    case ErrorKind::Internal: return kVerifyFailed;
    default: return kDomain;
  }
}

struct Context {
  RunConfig config;
  RootSystemPtr rs;
  WeylGroupPtr group;
  std::shared_ptr<const TensorOracle> oracle;

  explicit Context(const RunConfig& c) : config(c) {
    rs = RootSystem::build(GroupType::parse(c.group));
    group = WeylGroup::build(rs);
    oracle = std::make_shared<TensorOracle>(rs, c.budget);
  }
};

json coords(const Weight& w) { return std::vector<std::int64_t>(w.coords().begin(), w.coords().end()); }

json tuple_words(const WeylGroup& g, const ElementTuple& t) {
  json out = json::array();
  for (auto k : t) out.push_back(g.element(k).to_string());
  return out;
}

json big(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

std::string provenance(const TripleClassification& c) {
  switch (c.stable_mult_one.status) {
    case StableStatus::ProvenTrue: return "proven (cohomological criterion)";
    case StableStatus::RefutedAtK: return "refuted (oracle probe)";
    case StableStatus::UnknownUpTo: return c.oracle_overflow ? "unknown (oracle budget exceeded)" : "unknown (oracle probe)";
  }
  return "";
}

// ------------------------------------------------------------------ classify

int cmd_classify(const Context& ctx, const std::string& weights_text, std::ostream& out) {
  const auto& g = *ctx.group;
  auto weights = parse_weights(weights_text, ctx.rs->rank());
  ClassifyOptions opts;
  opts.verify_cup = ctx.config.verify.cup;
  Classifier cls(ctx.group, ctx.oracle, opts);
  auto c = cls.classify(weights, ctx.config.scaling_depth);

  const std::pair<const char*, const std::vector<ElementTuple>*> lists[] = {
      {"prv", &c.prv_witnesses}, {"cohomological", &c.coh_witnesses}, {"regularly_extremal", &c.rex_witnesses}};

  switch (ctx.config.format) {
    case OutputFormat::Text: {
      out << "group: " << ctx.config.group << "\n";
      out << "weights: " << format_weights(c.weights) << "\n";
      if (c.extended) out << "extended: true (" << c.weights.size() << " factors)\n";
      out << "prv: " << csv_bool(c.prv) << "\n";
      out << "cohomological: " << csv_bool(c.cohomological) << "\n";
      out << "regularly_extremal: " << csv_bool(c.regularly_extremal) << "\n";
      out << "stable: " << to_string(c.stable_mult_one) << " [" << provenance(c) << "]\n";
      out << "oracle_mults:";
      if (c.oracle_overflow) out << " overflow";
      for (auto [k, d] : c.oracle_mults) out << " k=" << k << ":" << d;
      out << "\n";
      if (c.cup_verified) out << "cup_verified: " << csv_bool(*c.cup_verified) << "\n";
      for (auto [name, list] : lists) {
        out << name << " witnesses: " << list->size() << "\n";
        for (const auto& t : *list) out << "  " << format_tuple(g, t) << "\n";
      }
      break;
    }
    case OutputFormat::Json: {
      json j;
      j["group"] = ctx.config.group;
      j["weights"] = json::array();
      for (const auto& w : c.weights) j["weights"].push_back(coords(w));
      j["flags"] = {{"prv", c.prv},
                    {"cohomological", c.cohomological},
                    {"regularly_extremal", c.regularly_extremal},
                    {"stable_mult_one", to_string(c.stable_mult_one)}};
      j["witnesses"] = json::array();
      for (auto [name, list] : lists)
        for (const auto& t : *list) j["witnesses"].push_back({{"kind", name}, {"tuple", tuple_words(g, t)}});
      j["oracle_mults"] = json::array();
      for (auto [k, d] : c.oracle_mults) j["oracle_mults"].push_back({{"k", k}, {"dim", d}});
      j["provenance"] = {{"stable_mult_one", provenance(c)},
                         {"oracle_overflow", c.oracle_overflow},
                         {"extended", c.extended},
                         {"cup_verified", c.cup_verified ? json(*c.cup_verified) : json(nullptr)}};
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      out << "section,key,value\n";
      out << "input,group," << ctx.config.group << "\n";
      out << "input,weights," << format_weights(c.weights) << "\n";
      out << "flag,prv," << csv_bool(c.prv) << "\n";
      out << "flag,cohomological," << csv_bool(c.cohomological) << "\n";
      out << "flag,regularly_extremal," << csv_bool(c.regularly_extremal) << "\n";
      out << "flag,stable_mult_one,\"" << to_string(c.stable_mult_one) << "\"\n";
      out << "provenance,stable_mult_one,\"" << provenance(c) << "\"\n";
      for (auto [k, d] : c.oracle_mults) out << "oracle_mult," << k << "," << d << "\n";
      for (auto [name, list] : lists)
        for (const auto& t : *list) out << "witness," << name << "," << format_tuple(g, t, ';') << "\n";
      break;
    }
  }
  return c.oracle_overflow ? kBudget : kOk;
}

// ------------------------------------------------------------------ bk-table

int cmd_bk_table(const Context& ctx, std::ostream& out, std::ostream& err) {
  const auto& g = *ctx.group;
  if (std::pow(static_cast<double>(g.size()), 3) > kTableCap)
    throw Error(ErrorKind::GroupTooLarge, "bk-table: |W|^3 exceeds the table cap");
  const int target = 2 * g.max_length();
  std::ostringstream body;
  std::uint64_t rows = 0, nonzero = 0;
  json jrows = json::array();
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      for (std::size_t w = 0; w < g.size(); ++w) {
        if (g.element(u).length() + g.element(v).length() + g.element(w).length() != target) continue;
        int c = bk_coefficient(g, u, v, w);
        ++rows;
        nonzero += c != 0;
        const auto& eu = g.element(u).to_string();
        const auto& ev = g.element(v).to_string();
        const auto& ew = g.element(w).to_string();
        body << eu << "," << ev << "," << ew << "," << c << "\n";
        if (ctx.config.format == OutputFormat::Json) jrows.push_back({eu, ev, ew, c});
      }
  const std::string text = body.str();
  const std::string digest = fnv1a_hex(text);
  switch (ctx.config.format) {
    case OutputFormat::Text:
      out << text;
      out << "rows: " << rows << " nonzero: " << nonzero << " digest: " << digest << "\n";
      break;
    case OutputFormat::Csv:
      out << "u,v,w,coefficient\n" << text;
      err << "rows: " << rows << " nonzero: " << nonzero << " digest: " << digest << "\n";
      break;
    case OutputFormat::Json:
      out << json{{"group", ctx.config.group},
                  {"columns", {"u", "v", "w", "coefficient"}},
                  {"rows", jrows},
                  {"row_count", rows},
                  {"nonzero", nonzero},
                  {"digest", digest}}
                 .dump(2)
          << "\n";
      break;
  }
  return kOk;
}

// ------------------------------------------------------------------ enumerate

int cmd_enumerate(const Context& ctx, int s, const std::string& kind, std::ostream& out) {
  const auto& g = *ctx.group;
  if (s < 2 || s > kMaxFactors)
    throw Error(ErrorKind::InvalidWitness, "s must lie in [2, " + std::to_string(kMaxFactors) + "]");
  auto tuples = kind == "levi" ? enumerate_levi_movable_tuples(g, s) : enumerate_partition_tuples(g, s);
  switch (ctx.config.format) {
    case OutputFormat::Text:
      for (const auto& t : tuples) out << format_tuple(g, t) << "\n";
      out << "count: " << tuples.size() << (s > 3 ? " (extended)" : "") << "\n";
      break;
    case OutputFormat::Csv:
      for (int i = 0; i < s; ++i) out << (i ? "," : "") << "u" << i + 1;
      out << "\n";
      for (const auto& t : tuples) out << format_tuple(g, t) << "\n";
      break;
    case OutputFormat::Json: {
      json j{{"group", ctx.config.group}, {"s", s}, {"kind", kind}, {"extended", s > 3}, {"count", tuples.size()}};
      j["tuples"] = json::array();
      for (const auto& t : tuples) j["tuples"].push_back(tuple_words(g, t));
      out << j.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

// ------------------------------------------------------------------ decompose

int cmd_decompose(const Context& ctx, const std::string& weights_text, std::ostream& out) {
  auto ws = parse_weights(weights_text, ctx.rs->rank());
  if (ws.size() != 2) throw Error(ErrorKind::Parse, "decompose takes exactly two weights");
  const auto& o = *ctx.oracle;
  auto d = o.decompose(ws[0], ws[1]);
  mpz_class total = 0;
  for (const auto& [nu, m] : d.terms) total += o.weyl_dim(nu) * static_cast<long>(m);
  switch (ctx.config.format) {
    case OutputFormat::Text:
      for (const auto& [nu, m] : d.terms) out << format_weight(nu) << " x" << m << " dim " << o.weyl_dim(nu) << "\n";
      out << "components: " << d.terms.size() << " total dim: " << total << " = " << o.weyl_dim(ws[0]) << " x "
          << o.weyl_dim(ws[1]) << "\n";
      break;
    case OutputFormat::Csv:
      out << "weight,multiplicity,dim\n";
      for (const auto& [nu, m] : d.terms)
        out << "\"" << format_weight(nu) << "\"," << m << "," << o.weyl_dim(nu) << "\n";
      break;
    case OutputFormat::Json: {
      json j{{"group", ctx.config.group}, {"weights", {coords(ws[0]), coords(ws[1])}}};
      j["terms"] = json::array();
      for (const auto& [nu, m] : d.terms)
        j["terms"].push_back({{"weight", coords(nu)}, {"multiplicity", m}, {"dim", big(o.weyl_dim(nu))}});
      j["total_dim"] = big(total);
      out << j.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

// ------------------------------------------------------------------ face

int cmd_face(const Context& ctx, const std::string& witness_text, int bound, std::ostream& out) {
  const auto& g = *ctx.group;
  auto t = parse_tuple(witness_text, g);
  Classifier cls(ctx.group, ctx.oracle);
  auto f = cls.face_sample(t, bound);
  switch (ctx.config.format) {
    case OutputFormat::Text:
      for (const auto& ws : f.tuples) out << format_weights(ws) << "\n";
      out << "points: " << f.tuples.size() << " lattice_rank: " << f.lattice_rank << "\n";
      break;
    case OutputFormat::Csv:
      out << "weights\n";
      for (const auto& ws : f.tuples) out << "\"" << format_weights(ws) << "\"\n";
      break;
    case OutputFormat::Json: {
      json j{{"group", ctx.config.group}, {"witness", tuple_words(g, t)}, {"bound", bound},
             {"lattice_rank", f.lattice_rank}};
      j["tuples"] = json::array();
      for (const auto& ws : f.tuples) {
        json row = json::array();
        for (const auto& w : ws) row.push_back(coords(w));
        j["tuples"].push_back(row);
      }
      out << j.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const RunConfig& config, const std::vector<std::string>& suites, std::ostream& out) {
  auto ctx = VerifyContext::make(config);
  auto reports = run_suites(suites, ctx);
  bool ok = true;
  json j = json::array();
  if (config.format == OutputFormat::Csv) out << "suite,passed,checked,summary,counterexample\n";
  for (const auto& r : reports) {
    ok = ok && r.passed;
    switch (config.format) {
      case OutputFormat::Text:
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.summary << " (" << r.checked << " checks)\n";
        if (!r.passed) out << "  counterexample: " << r.counterexample.dump() << "\n";
        break;
      case OutputFormat::Csv:
        out << r.name << "," << csv_bool(r.passed) << "," << r.checked << ",\"" << r.summary << "\",\""
            << (r.passed ? "" : r.counterexample.dump()) << "\"\n";
        break;
      case OutputFormat::Json:
        j.push_back({{"suite", r.name},
                     {"passed", r.passed},
                     {"checked", r.checked},
                     {"summary", r.summary},
                     {"counterexample", r.counterexample}});
        break;
    }
  }
  if (config.format == OutputFormat::Json)
    out << json{{"group", config.group}, {"passed", ok}, {"suites", j}}.dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight tuples, Belkale-Kumar products and invariant dimensions for simple Lie groups"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path, group, format, out_path;
  int depth = 0, weight_bound = -1;
  std::uint64_t max_dim = 0, max_support = 0;
  bool verify_cup = false;
  app.add_option("--config", config_path, "JSON config file (default from $LRS_CONFIG)");
  app.add_option("-g,--group", group, "group type, e.g. A2, B3, G2");
  app.add_option("-K,--depth", depth, "scaling depth for the oracle probe")->check(CLI::PositiveNumber);
  app.add_option("--weight-bound", weight_bound, "coordinate bound for sweeps")->check(CLI::NonNegativeNumber);
  app.add_option("--max-dim", max_dim, "oracle budget: largest factor dimension");
  app.add_option("--max-support", max_support, "oracle budget: largest weight support");
  app.add_option("-f,--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("-o,--out", out_path, "write output to FILE");
  app.add_flag("--verify-cup", verify_cup, "re-check regularly extremal witnesses with the cup oracle");

  std::string weights;
  auto* classify = app.add_subcommand("classify", "classify a tuple of dominant weights");
  classify->add_option("-w,--weights", weights, "weights, e.g. \"1,0;0,1;1,1\"")->required();

  app.add_subcommand("bk-table", "Belkale-Kumar structure constants on admissible triples");

  int s = 3;
  std::string kind = "partition";
  auto* enumerate = app.add_subcommand("enumerate", "list s-tuples whose inversion sets partition the positive roots");
  enumerate->add_option("-s,--s", s, "number of factors");
  enumerate->add_option("--kind", kind, "partition or levi")->check(CLI::IsMember({"partition", "levi"}));

  auto* decompose = app.add_subcommand("decompose", "decompose a tensor product of two irreducibles");
  decompose->add_option("-w,--weights", weights, "two weights, e.g. \"1,1;1,1\"")->required();

  std::string witness;
  int bound = 1;
  auto* face = app.add_subcommand("face", "sample the face attached to a partition witness");
  face->add_option("--witness", witness, "elements, e.g. \"e;e;1.2.1\"")->required();
  face->add_option("--bound", bound, "coordinate bound for the free weights")->check(CLI::NonNegativeNumber);

  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suites, "suite name or all")->required();

  app.add_subcommand("config", "print the effective configuration as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  std::ostringstream out;
  int rc = kOk;
  try {
    RunConfig config;
    if (const char* env = std::getenv(kConfigEnv); env && *env && config_path.empty()) config = load_config(env);
    if (!config_path.empty()) config = load_config(config_path);
    if (!group.empty()) config.group = group;
    if (depth > 0) config.scaling_depth = depth;
    if (weight_bound >= 0) config.weight_bound = weight_bound;
    if (max_dim) config.budget.max_dim = max_dim;
    if (max_support) config.budget.max_support = max_support;
    if (!format.empty()) config.format = parse_format(format);
    if (verify_cup) config.verify.cup = true;
    GroupType::parse(config.group);

    if (app.got_subcommand("config")) {
      out << to_json(config).dump(2) << "\n";
    } else if (app.got_subcommand(verify)) {
      rc = cmd_verify(config, suites, out);
    } else {
      Context ctx(config);
      if (app.got_subcommand(classify)) rc = cmd_classify(ctx, weights, out);
      else if (app.got_subcommand("bk-table")) rc = cmd_bk_table(ctx, out, std::cerr);
      else if (app.got_subcommand(enumerate)) rc = cmd_enumerate(ctx, s, kind, out);
      else if (app.got_subcommand(decompose)) rc = cmd_decompose(ctx, weights, out);
      else if (app.got_subcommand(face)) rc = cmd_face(ctx, witness, bound, out);
    }
  } catch (const Error& e) {
    std::cout << out.str();
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }

  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kParse;
    }
    f << out.str();
  }
  return rc;
}
