#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "routh/barycentric.hpp"
#include "routh/blocks.hpp"
#include "routh/cycle_ratios.hpp"
#include "routh/identities.hpp"
#include "routh/rational.hpp"
#include "routh/volume.hpp"

namespace routh::cli {
namespace {

using Json = nlohmann::ordered_json;

// Input errors that map to exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(std::span<const Rational> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

// Writes rows as one JSON object per line, or as CSV with a header taken
// from the first row's keys. CSV cells holding arrays are ';'-joined.
class RowWriter {
 public:
  RowWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void write(const Json& row) {
    if (format_ == Format::json) {
      out_ << row.dump() << '\n';
      return;
    }
    if (!header_written_) {
      bool first = true;
      for (const auto& item : row.items()) {
        out_ << (first ? "" : ",") << item.key();
        first = false;
      }
      out_ << '\n';
      header_written_ = true;
    }
    bool first = true;
    for (const auto& item : row.items()) {
      out_ << (first ? "" : ",") << cell(item.value());
      first = false;
    }
    out_ << '\n';
  }

 private:
  static std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + cell(v[i]);
      return s;
    }
    return v.dump();
  }

  std::ostream& out_;
  Format format_;
  bool header_written_ = false;
};

int parse_int(const std::string& text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw InvalidInput("not an integer: '" + text + "'");
  return value;
}

void require_n_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw InvalidInput(std::string(what) + ": n = " + std::to_string(n) + " outside " + std::to_string(lo) +
                       ".." + std::to_string(hi));
  }
}

CycleRatios ratios_from(const RunConfig& config) {
  if (!config.ratios.empty()) {
    if (config.k) throw InvalidInput("give either --ratios or --k, not both");
    std::vector<Rational> values;
    for (const auto& s : config.ratios) values.push_back(Rational::parse(s));
    if (config.n && *config.n != static_cast<int>(values.size())) {
      throw InvalidInput("--n " + std::to_string(*config.n) + " but " + std::to_string(values.size()) +
                         " ratios given");
    }
    require_n_range(static_cast<int>(values.size()), 3, kMaxCycleLength, "ratios");
    return CycleRatios(std::move(values));
  }
  if (!config.k) throw InvalidInput("missing --ratios or --k");
  if (!config.n) throw InvalidInput("--k needs --n");
  require_n_range(*config.n, 3, kMaxCycleLength, "--n");
  return CycleRatios::uniform(*config.n, Rational::parse(*config.k));
}

Json volume_row(const VolumeReport& r) {
  Json row;
  row["method"] = to_string(r.method);
  row["value"] = r.value.str();
  row["n"] = r.n;
  row["x"] = to_json(r.x.values());
  row["product_regime"] = to_string(r.product_regime);
  return row;
}

int run_volume(const RunConfig& config, RowWriter& writer) {
  const CycleRatios x = ratios_from(config);
  VolumeReport report = central_volume(x);
  if (config.method == "inclusion_exclusion") {
    require_n_range(x.size(), 4, config.max_n, "inclusion_exclusion (see --max-n)");
    report.method = Method::inclusion_exclusion;
    switch (report.product_regime) {
      case ProductRegime::eq1: report.value = Rational(0); break;
      case ProductRegime::gt1: report.value = inclusion_exclusion_volume(x); break;
      case ProductRegime::lt1: report.value = inclusion_exclusion_volume(x.reversed_reciprocal()); break;
    }
  } else if (config.method != "closed_form") {
    throw InvalidInput("unknown --method '" + config.method + "'");
  }
  writer.write(volume_row(report));
  return kExitOk;
}

int run_first_kind(const RunConfig& config, RowWriter& writer) {
  const CycleRatios x = ratios_from(config);
  writer.write(volume_row(VolumeReport{first_kind_volume(x), Method::first_kind, x.size(), x, x.regime()}));
  return kExitOk;
}

int run_subset(const RunConfig& config, RowWriter& writer) {
  const CycleRatios x = ratios_from(config);
  IndexSet subset(x.size(), 0);
  try {
    subset = IndexSet::of(x.size(), config.indices);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  if (subset.empty() || subset.full()) throw InvalidInput("--indices must be a proper nonempty subset");

  const Rational value = subset_volume(x, subset);
  const Rational oracle = geometry::oracle_subset_volume(x, subset);
  Json blocks = Json::array();
  for (const Block& b : cyclic_blocks(subset)) blocks.push_back(b.indices(x.size()));

  Json row;
  row["n"] = x.size();
  row["x"] = to_json(x.values());
  row["subset"] = subset.indices();
  row["blocks"] = blocks;
  row["value"] = value.str();
  row["oracle"] = oracle.str();
  row["match"] = value == oracle;
  writer.write(row);
  return value == oracle ? kExitOk : kExitCheckFailed;
}

int run_oracle(const RunConfig& config, RowWriter& writer) {
  const CycleRatios x = ratios_from(config);
  const VolumeReport central = central_volume(x);
  const Rational oracle = x.regime() == ProductRegime::gt1 ? geometry::oracle_central_volume(x)
                                                           : geometry::oracle_bounded_volume(x);
  const Rational first = first_kind_volume(x);
  const Rational first_oracle = geometry::oracle_first_kind_volume(x);

  Json row;
  row["n"] = x.size();
  row["x"] = to_json(x.values());
  row["product_regime"] = to_string(central.product_regime);
  row["closed_form"] = central.value.str();
  row["oracle"] = oracle.str();
  row["match"] = central.value == oracle;
  row["first_kind"] = first.str();
  row["first_kind_oracle"] = first_oracle.str();
  row["first_kind_match"] = first == first_oracle;
  writer.write(row);
  return central.value == oracle && first == first_oracle ? kExitOk : kExitCheckFailed;
}

int run_identity(const RunConfig& config, RowWriter& writer) {
  if (config.samples < 0) throw InvalidInput("--samples must be non-negative");
  if (config.bound < 2) throw InvalidInput("--bound must be at least 2");

  std::vector<std::pair<IdentityId, int>> plan;
  auto fixed = [&](IdentityId id, int n) {
    if (config.n && *config.n != n) {
      throw InvalidInput(to_string(id) + " is defined for n = " + std::to_string(n) + " only");
    }
    plan.emplace_back(id, n);
  };
  auto e2 = [&] {
    if (config.n) {
      require_n_range(*config.n, 4, config.max_identity_n, "e2");
      plan.emplace_back(IdentityId::e2_general, *config.n);
    } else {
      for (int n = 4; n <= std::min(8, config.max_identity_n); ++n) plan.emplace_back(IdentityId::e2_general, n);
    }
  };

  if (config.identity_id == "all") {
    plan.emplace_back(IdentityId::ie_n4, 4);
    e2();
    plan.emplace_back(IdentityId::first_kind_n4, 4);
    plan.emplace_back(IdentityId::first_kind_n5, 5);
  } else {
    const auto id = parse_identity_id(config.identity_id);
    if (!id) throw InvalidInput("unknown --id '" + config.identity_id + "'");
    switch (*id) {
      case IdentityId::ie_n4: fixed(*id, 4); break;
      case IdentityId::e2_general: e2(); break;
      case IdentityId::first_kind_n4: fixed(*id, 4); break;
      case IdentityId::first_kind_n5: fixed(*id, 5); break;
    }
  }

  bool all_hold = true;
  for (const auto& [id, n] : plan) {
    for (int s = 0; s < config.samples; ++s) {
      const CycleRatios x = sample_ratios(n, config.seed + static_cast<std::uint64_t>(s), config.bound);
      IdentityCheckResult r = [&] {
        switch (id) {
          case IdentityId::ie_n4: return check_ie_n4(x);
          case IdentityId::e2_general: return check_e2(x, config.max_identity_n);
          case IdentityId::first_kind_n4: return check_first_kind_n4(x);
          case IdentityId::first_kind_n5: return check_first_kind_n5(x);
        }
        throw std::logic_error("unhandled identity");
      }();
      all_hold = all_hold && r.holds;
      Json row;
      row["identity_id"] = to_string(r.identity_id);
      row["n"] = r.n;
      row["x"] = to_json(r.x.values());
      row["lhs"] = r.lhs.str();
      row["rhs"] = r.rhs.str();
      row["holds"] = r.holds;
      writer.write(row);
    }
  }
  return all_hold ? kExitOk : kExitCheckFailed;
}

std::pair<int, int> parse_n_range(const std::string& text) {
  if (auto dots = text.find(".."); dots != std::string::npos) {
    return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  }
  const int n = parse_int(text);
  return {n, n};
}

int run_table(const RunConfig& config, RowWriter& writer) {
  if (!config.k) throw InvalidInput("table needs --k");
  const Rational k = Rational::parse(*config.k);
  if (k.sign() <= 0) throw InvalidInput("--k must be positive");

  std::pair<int, int> range{3, 8};
  if (config.n_range) {
    range = parse_n_range(*config.n_range);
  } else if (config.n) {
    range = {*config.n, *config.n};
  }
  if (range.first > range.second) throw InvalidInput("empty --n range");
  require_n_range(range.first, 3, kMaxCycleLength, "table");
  require_n_range(range.second, 3, kMaxCycleLength, "table");

  SimplexKind kind;
  if (config.kind == "central") {
    kind = SimplexKind::central;
  } else if (config.kind == "first_kind" || config.kind == "first-kind") {
    kind = SimplexKind::first_kind;
  } else {
    throw InvalidInput("unknown --kind '" + config.kind + "'");
  }

  bool all_match = true;
  for (int n = range.first; n <= range.second; ++n) {
    const CycleRatios x = CycleRatios::uniform(n, k);
    const Rational value = kind == SimplexKind::central ? central_volume(x).value : first_kind_volume(x);
    const Rational law = equal_ratio_volume(n, k, kind);
    all_match = all_match && value == law;
    Json row;
    row["kind"] = kind == SimplexKind::central ? "central" : "first_kind";
    row["n"] = n;
    row["k"] = k.str();
    row["value"] = value.str();
    row["law"] = law.str();
    row["match"] = value == law;
    writer.write(row);
  }
  return all_match ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  // Buffer the report so a failing command leaves stdout empty.
  std::ostringstream buffer;
  RowWriter writer(buffer, config.format);
  int code = kExitOk;
  try {
    switch (config.command) {
      case Command::volume: code = run_volume(config, writer); break;
      case Command::first_kind: code = run_first_kind(config, writer); break;
      case Command::subset: code = run_subset(config, writer); break;
      case Command::oracle: code = run_oracle(config, writer); break;
      case Command::identity: code = run_identity(config, writer); break;
      case Command::table: code = run_table(config, writer); break;
    }
  } catch (const geometry::InvariantViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {  // includes ParseError and InvalidInput
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {  // includes DivisionByZero
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  out << buffer.str();
  if (code == kExitCheckFailed) err << "error: cross-check failed\n";
  return code;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact volumes of Routh-type simplices cut from a reference simplex"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  int n_value = 0;
  std::string n_text;

  auto add_ratio_options = [&](CLI::App* sub) {
    sub->add_option("--n", n_value, "Number of vertices of the simplex (dimension + 1)");
    sub->add_option("--ratios", config.ratios, "Comma-separated exact ratios p/q, x_1 first")->delimiter(',');
    sub->add_option("--k", config.k, "Use the same ratio k on every edge");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* volume = app.add_subcommand("volume", "Central simplex volume");
  add_ratio_options(volume);
  volume->add_option("--method", config.method, "closed_form or inclusion_exclusion")
      ->check(CLI::IsMember({"closed_form", "inclusion_exclusion"}));
  volume->add_option("--max-n", config.max_n, "Largest n accepted by inclusion_exclusion");

  auto* first = app.add_subcommand("first-kind", "Volume of the simplex spanned by the edge points");
  add_ratio_options(first);

  auto* subset = app.add_subcommand("subset", "Volume of the intersection of corner cuts over a subset");
  add_ratio_options(subset);
  subset->add_option("--indices", config.indices, "Comma-separated 1-based indices")->delimiter(',')->required();

  auto* oracle = app.add_subcommand("oracle", "Compare the closed forms with coordinate geometry");
  add_ratio_options(oracle);

  auto* identity = app.add_subcommand("identity", "Check algebraic identities at seeded random points");
  identity->add_option("--id", config.identity_id, "ie_n4, e2, first_kind_n4, first_kind_n5 or all");
  identity->add_option("--n", n_value, "Cycle length for e2");
  identity->add_option("--samples", config.samples, "Random points per identity");
  identity->add_option("--seed", config.seed, "Seed of the first sample; sample s uses seed + s");
  identity->add_option("--bound", config.bound, "Ratios are p/q with 1 <= p, q <= bound");
  identity->add_option("--max-identity-n", config.max_identity_n, "Largest n accepted by e2");
  identity->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* table = app.add_subcommand("table", "Equal-ratio volumes over a range of n");
  table->add_option("--kind", config.kind, "central or first_kind");
  table->add_option("--n", n_text, "Cycle length or range lo..hi");
  table->add_option("--k", config.k, "Common ratio k")->required();
  table->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  if (volume->parsed()) config.command = Command::volume;
  if (first->parsed()) config.command = Command::first_kind;
  if (subset->parsed()) config.command = Command::subset;
  if (oracle->parsed()) config.command = Command::oracle;
  if (identity->parsed()) config.command = Command::identity;
  if (table->parsed()) config.command = Command::table;

  for (auto* sub : {volume, first, subset, oracle, identity}) {
    if (sub->parsed() && sub->count("--n") > 0) config.n = n_value;
  }
  if (table->parsed() && !n_text.empty()) config.n_range = n_text;
  config.format = format == "csv" ? Format::csv : Format::json;

  return run(config, out, err);
}

}  // namespace routh::cli
