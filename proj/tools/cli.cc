#include "cli.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "posetval/catalog.h"
#include "posetval/error.h"
#include "posetval/group.h"
#include "posetval/io.h"
#include "posetval/metric.h"
#include "posetval/poset.h"
#include "posetval/search.h"
#include "posetval/valuation.h"
#include "report.h"

namespace posetval::cli {

namespace {

struct GlobalOptions {
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  std::string format = "human";
  bool timing = false;
};

struct SourceOptions {
  std::string fixture;
  std::string poset_file;
  std::string group;
  std::string group_file;
  int order_cap = kDefaultOrderCap;
};

struct Source {
  PosetPtr poset;
  std::optional<SubgroupLattice> lattice;
  Json descriptor;
  std::vector<std::string> warnings;
};

struct ValuationOptions {
  bool cardinal_ideal = false;
  bool cardinal_filter = false;
  bool cardinality = false;
  bool log_cardinality = false;
  std::string cumulative;
  std::string cumulative_upper;
  std::string kappa;
  std::optional<double> kappa_offset;
  std::string values_file;
  std::vector<double> affine;
  bool log = false;
  bool negate = false;
};

[[noreturn]] void Usage(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

std::ifstream Open(const std::string& path) {
  std::ifstream in(path);
  if (!in) Usage("cannot open '" + path + "'");
  return in;
}

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, sep);) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

Json Names(const Poset& p, const ElementSet& s) {
  Json out = Json::array();
  for (Index i : s) out.push_back(p.name(i));
  return out;
}

Json PerElement(const Poset& p, std::span<const double> values) {
  Json out = Json::object();
  for (Index i = 0; i < p.size(); ++i) out[p.name(i)] = Number(values[i]);
  return out;
}

Json Matrix(const Poset& p, const DistanceMatrix& d) {
  Json rows = Json::array();
  for (Index i = 0; i < p.size(); ++i) {
    Json row = {{"", p.name(i)}};
    for (Index j = 0; j < p.size(); ++j) row[p.name(j)] = Number(d.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json WitnessJson(const Poset& p, const Witness& w) {
  Json j = {{"x", p.name(w.x)}, {"y", p.name(w.y)}};
  if (w.z) j["z"] = p.name(*w.z);
  j["axiom"] = std::string(ToString(w.axiom));
  j["lhs"] = Number(w.lhs);
  j["rhs"] = Number(w.rhs);
  return j;
}

Json WitnessJson(const Poset& p, const MetricWitness& w) {
  Json j = {{"axiom", std::string(ToString(w.axiom))},
            {"x", p.name(w.x)},
            {"y", p.name(w.y)}};
  if (w.z) j["z"] = p.name(*w.z);
  j["lhs"] = Number(w.lhs);
  j["rhs"] = Number(w.rhs);
  return j;
}

template <typename W>
Json Witnesses(const Poset& p, const std::vector<W>& ws) {
  Json out = Json::array();
  for (const W& w : ws) out.push_back(WitnessJson(p, w));
  return out;
}

void AddSourceOptions(CLI::App* cmd, SourceOptions& s, bool groups = true) {
  cmd->add_option("--fixture", s.fixture, "Named fixture (P1, M2, JC, N5, M3, chain(n), boolean(n))");
  cmd->add_option("--poset", s.poset_file, "Poset file with one 'a < b' per line");
  if (groups) {
    cmd->add_option("--group", s.group, "Subgroup lattice of a named group (Zn, Sk, Dm, AxB)");
    cmd->add_option("--group-file", s.group_file, "Subgroup lattice of a group table file");
    cmd->add_option("--order-cap", s.order_cap, "Largest group order to enumerate")
        ->capture_default_str();
  }
}

Source LoadSource(const SourceOptions& s) {
  const int given = !s.fixture.empty() + !s.poset_file.empty() + !s.group.empty() +
                    !s.group_file.empty();
  if (given != 1) {
    Usage("give exactly one of --fixture, --poset, --group, --group-file");
  }
  Source src;
  if (!s.fixture.empty()) {
    src.poset = NamedPosetPtr(s.fixture);
    src.descriptor = {{"fixture", s.fixture}};
  } else if (!s.poset_file.empty()) {
    std::ifstream in = Open(s.poset_file);
    PosetBuild build = ReadPosetText(in);
    for (const auto& [a, b] : build.redundant) {
      src.warnings.push_back("redundant cover " + a + " < " + b + " dropped");
    }
    src.poset = std::make_shared<const Poset>(std::move(build.poset));
    src.descriptor = {{"poset_file", s.poset_file}};
  } else {
    FiniteGroup g = [&] {
      if (!s.group.empty()) return FiniteGroup::Named(s.group);
      std::ifstream in = Open(s.group_file);
      return ReadGroupTable(in);
    }();
    src.lattice.emplace(EnumerateSubgroups(g, s.order_cap));
    src.poset = src.lattice->poset();
    src.descriptor = s.group.empty() ? Json{{"group_file", s.group_file}}
                                     : Json{{"group", s.group}};
  }
  if (src.poset->empty()) throw Error(ErrorCode::kEmptyPoset, "poset has no elements");
  return src;
}

WeightFunction LoadWeights(const PosetPtr& p, const std::string& source, double tol) {
  if (source == "uniform") return WeightFunction::Uniform(p);
  std::ifstream in = Open(source);
  return WeightFunction(p, ReadElementValues(in, *p), tol);
}

void AddValuationOptions(CLI::App* cmd, ValuationOptions& v) {
  auto* group = cmd->add_option_group("valuation");
  group->add_flag("--cardinal-ideal", v.cardinal_ideal, "v(x) = |ideal(x)|");
  group->add_flag("--cardinal-filter", v.cardinal_filter, "v(x) = |filter(x)|");
  group->add_option("--cumulative", v.cumulative,
                    "Ideal mass of a weight file, or 'uniform'");
  group->add_option("--cumulative-upper", v.cumulative_upper,
                    "Filter mass of a weight file, or 'uniform'");
  group->add_option("--kappa", v.kappa,
                    "a - #{k in K : x <= k}; K is comma-separated or 'meet-irreducibles'");
  group->add_option("--values", v.values_file, "Values from an 'element value' file");
  group->add_flag("--cardinality", v.cardinality, "Subgroup order (group sources)");
  group->add_flag("--log-cardinality", v.log_cardinality,
                  "Log of subgroup order (group sources)");
  group->require_option(1);
  cmd->add_option("--kappa-offset", v.kappa_offset, "Offset a for --kappa (default |K|)");
  cmd->add_option("--affine", v.affine, "Apply k*v + a")->expected(2);
  cmd->add_flag("--log", v.log, "Apply the natural log");
  cmd->add_flag("--negate", v.negate, "Negate the result");
}

std::pair<Valuation, Json> BuildValuation(const Source& src, const ValuationOptions& o,
                                          double tol) {
  const PosetPtr& p = src.poset;
  std::vector<std::string> warnings;
  std::optional<Valuation> v;
  std::string name;
  if (o.cardinal_ideal) {
    v = CardinalIdeal(p);
    name = "cardinal_ideal";
  } else if (o.cardinal_filter) {
    v = CardinalFilter(p);
    name = "cardinal_filter";
  } else if (!o.cumulative.empty()) {
    v = CumulativeLower(p, LoadWeights(p, o.cumulative, tol), &warnings);
    name = "cumulative(" + o.cumulative + ")";
  } else if (!o.cumulative_upper.empty()) {
    v = CumulativeUpper(p, LoadWeights(p, o.cumulative_upper, tol), &warnings);
    name = "cumulative_upper(" + o.cumulative_upper + ")";
  } else if (!o.kappa.empty()) {
    ElementSet subset;
    if (o.kappa == "meet-irreducibles") {
      subset = MeetIrreducibles(*p);
    } else {
      for (const std::string& e : Split(o.kappa, ',')) subset.push_back(p->IndexOf(e));
      std::sort(subset.begin(), subset.end());
      subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    }
    const double a = o.kappa_offset.value_or(static_cast<double>(subset.size()));
    v = KappaValuation(p, subset, a);
    name = "kappa(" + o.kappa + ", " + FormatNumber(a) + ")";
  } else if (!o.values_file.empty()) {
    std::ifstream in = Open(o.values_file);
    v = Valuation(p, ReadElementValues(in, *p), tol);
    name = "values(" + o.values_file + ")";
  } else if (o.cardinality || o.log_cardinality) {
    if (!src.lattice) Usage("--cardinality and --log-cardinality need a group source");
    v = o.cardinality ? src.lattice->cardinality() : src.lattice->log_cardinality();
    name = o.cardinality ? "cardinality" : "log_cardinality";
  }

  if (o.log && !o.affine.empty()) {
    v = LogAffineTransform(*v, o.affine[0], o.affine[1], o.negate);
    name = "log(" + FormatNumber(o.affine[0]) + " * " + name + " + " +
           FormatNumber(o.affine[1]) + ")";
    if (o.negate) name = "-" + name;
  } else {
    if (!o.affine.empty()) {
      v = AffineTransform(*v, o.affine[0], o.affine[1]);
      name = FormatNumber(o.affine[0]) + " * " + name + " + " + FormatNumber(o.affine[1]);
    }
    if (o.log) {
      v = LogTransform(*v);
      name = "log(" + name + ")";
    }
    if (o.negate) {
      v = AffineTransform(*v, -1, 0);
      name = "-(" + name + ")";
    }
  }

  Valuation out(p, std::vector<double>(v->values().begin(), v->values().end()), tol);
  Json j = {{"name", name},
            {"monotonicity", std::string(ToString(out.monotonicity()))},
            {"values", PerElement(*p, out.values())}};
  if (!warnings.empty()) j["warnings"] = warnings;
  return {std::move(out), std::move(j)};
}

Json ClassificationJson(const Poset& p) {
  const Classification c = Classify(p);
  auto name_or_null = [&](std::optional<Index> i) { return i ? Json(p.name(*i)) : Json(); };
  auto size_or_null = [](std::optional<std::size_t> n) { return n ? Json(*n) : Json(); };
  return {{"meet_semilattice", c.is_meet_semilattice},
          {"join_semilattice", c.is_join_semilattice},
          {"lattice", c.is_lattice},
          {"bounded", c.is_bounded},
          {"tree", c.is_tree},
          {"modular", c.is_modular},
          {"bottom", name_or_null(c.bottom)},
          {"top", name_or_null(c.top)},
          {"delta_wedge", size_or_null(c.delta_wedge)},
          {"delta_vee", size_or_null(c.delta_vee)}};
}

Json VerdictJson(const Poset& p, const ValuationVerdict& v) {
  return {{"is_lower", v.is_lower},
          {"is_upper", v.is_upper},
          {"lower_domain_ok", v.lower_domain_ok},
          {"upper_domain_ok", v.upper_domain_ok},
          {"witnesses", Witnesses(p, v.witnesses)}};
}

Json AlternateJson(const Poset& p, AlternateVerdict (*check)(const Valuation&),
                   const Valuation& v) {
  try {
    AlternateVerdict a = check(v);
    auto flag = [](std::optional<bool> b) { return b ? Json(*b) : Json("n/a"); };
    return {{"is_lower", flag(a.is_lower)},
            {"is_upper", flag(a.is_upper)},
            {"witnesses", Witnesses(p, a.witnesses)}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kPreconditionUnmet) throw;
    return {{"applicable", false}, {"reason", e.what()}};
  }
}

std::string RowFormula(MetricRow row) {
  switch (row) {
    case MetricRow::kIsotoneLower: return "v(x) + v(y) - 2 v-(x,y)";
    case MetricRow::kAntitoneLower: return "v(x) + v(y) - 2 v+(x,y)";
    case MetricRow::kIsotoneUpper: return "2 v+(x,y) - v(x) - v(y)";
    case MetricRow::kAntitoneUpper: return "2 v-(x,y) - v(x) - v(y)";
  }
  return "";
}

Json WeightsJson(const Poset& p, const WeightFunction& t) {
  return PerElement(p, t.weights());
}

Json JcJson(const Poset& p, const JCDistanceTable& t) {
  Json excluded = Json::array();
  for (Index i = 0; i < p.size(); ++i) {
    if (t.excluded[i]) excluded.push_back(p.name(i));
  }
  return {{"weights", WeightsJson(p, t.weights)},
          {"probability", PerElement(p, t.probability)},
          {"information", PerElement(p, t.information)},
          {"excluded", excluded},
          {"verdict", std::string(ToString(t.verdict))},
          {"witnesses", Witnesses(p, t.witnesses)},
          {"distances", Matrix(p, t.d)},
          {"warnings", t.warnings}};
}

Json CounterexampleJson(const Poset& p, const SearchOptions& opts, SearchTarget target,
                        const std::optional<Counterexample>& hit) {
  Json j = {{"target", std::string(ToString(target))},
            {"seed", opts.seed},
            {"budget", opts.budget},
            {"found", hit.has_value()}};
  if (hit) {
    j["iteration"] = hit->iteration;
    j["weights"] = WeightsJson(p, hit->weights);
    j["witness"] = std::visit([&](const auto& w) { return WitnessJson(p, w); },
                              hit->witness);
  }
  return j;
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int Run(const std::vector<std::string>& args);

 private:
  void Setup();
  Json Header(const std::string& command, const Source& src) const;
  void Emit(Json report) const;

  int Classify();
  int CheckValuation();
  int Metric();
  int Jc();
  int Group();
  int Search();
  int ExportDot();

  std::ostream& out_;
  std::ostream& err_;
  CLI::App app_{"Valuations and metrics on finite posets", "posetval"};
  GlobalOptions global_;
  SourceOptions source_;
  ValuationOptions valuation_;
  std::string expect_;
  std::optional<int> row_;
  bool verify_ = false;
  bool bounds_ = false;
  bool alternate_ = false;
  std::string export_table_;
  std::string weights_;
  bool search_ = false;
  std::string triple_;
  std::string target_ = "jc_triangle";
  std::vector<std::string> between_;
  bool table_ = false;
  std::string output_;
  std::chrono::steady_clock::time_point start_;
};

void Cli::Setup() {
  app_.require_subcommand(1);
  app_.fallthrough();
  app_.add_option("--tolerance", global_.tolerance, "Numeric tolerance")
      ->capture_default_str();
  app_.add_option("--seed", global_.seed, "Search seed")->capture_default_str();
  app_.add_option("--budget", global_.budget, "Search budget")->capture_default_str();
  app_.add_option("--format", global_.format, "Report format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app_.add_flag("--timing", global_.timing, "Include elapsed time in the report");

  auto* classify = app_.add_subcommand("classify", "Order-theoretic classification");
  AddSourceOptions(classify, source_);

  auto* check = app_.add_subcommand("check-valuation", "Check lower/upper valuation axioms");
  AddSourceOptions(check, source_);
  AddValuationOptions(check, valuation_);
  check->add_option("--expect", expect_, "Required outcome")
      ->check(CLI::IsMember({"lower", "upper", "both"}));
  check->add_flag("--alternate", alternate_, "Also run the third-element and semilattice checks");

  auto* metric = app_.add_subcommand("metric", "Distance induced by a valuation");
  AddSourceOptions(metric, source_);
  AddValuationOptions(metric, valuation_);
  metric->add_option("--row", row_, "Force a table row (1-4)")->check(CLI::Range(1, 4));
  metric->add_flag("--verify", verify_, "Report metric axioms; exit 1 unless metric");
  metric->add_flag("--bounds", bounds_, "Compare d with the v+ / v- bound");
  metric->add_option("--export-table", export_table_, "Write the distance table as CSV");

  auto* jc = app_.add_subcommand("jc", "Jiang-Conrath distance");
  AddSourceOptions(jc, source_, false);
  auto* jc_source = jc->add_option_group("weights");
  jc_source->add_option("--weights", weights_, "Weight file, or 'uniform'");
  jc_source->add_flag("--search", search_, "Search for a triangle violation");
  jc_source->require_option(1);
  jc->add_option("--triple", triple_, "Only accept violations on x,y,z (y in the middle)");
  jc->add_option("--export-table", export_table_, "Write the distance table as CSV");

  auto* group = app_.add_subcommand("group", "Subgroup lattice and subgroup metric");
  AddSourceOptions(group, source_);
  group->add_option("--between", between_,
                    "Two subgroups, by label or space-separated generators")
      ->expected(2);
  group->add_flag("--table", table_, "Include the full subgroup metric table");

  auto* search = app_.add_subcommand("search", "Counterexample search");
  AddSourceOptions(search, source_, false);
  search->add_option("--target", target_, "jc_triangle, log_lower_fails, log_upper_fails")
      ->capture_default_str();
  search->add_option("--triple", triple_, "For jc_triangle: x,y,z with y in the middle");

  auto* dot = app_.add_subcommand("export-dot", "Hasse diagram in DOT");
  AddSourceOptions(dot, source_);
  dot->add_option("--output", output_, "Write to a file instead of stdout");
}

int Cli::Run(const std::vector<std::string>& args) {
  start_ = std::chrono::steady_clock::now();
  Setup();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app_.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app_.exit(e, out_, err_);
    return code == 0 ? kExitOk : kExitInputError;
  }
  try {
    const std::string name = app_.get_subcommands().front()->get_name();
    if (name == "classify") return Classify();
    if (name == "check-valuation") return CheckValuation();
    if (name == "metric") return Metric();
    if (name == "jc") return Jc();
    if (name == "group") return Group();
    if (name == "search") return Search();
    return ExportDot();
  } catch (const Error& e) {
    err_ << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

Json Cli::Header(const std::string& command, const Source& src) const {
  Json input = src.descriptor;
  input["tolerance"] = global_.tolerance;
  input["seed"] = global_.seed;
  input["budget"] = global_.budget;
  return {{"command", command}, {"input", input}};
}

void Cli::Emit(Json report) const {
  if (global_.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    report["timing"] = {
        {"elapsed_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
  }
  if (global_.format == "json") {
    RenderJson(out_, report);
  } else {
    RenderHuman(out_, report);
  }
}

int Cli::Classify() {
  Source src = LoadSource(source_);
  const Poset& p = *src.poset;
  Json report = Header("classify", src);
  report["poset"] = {{"elements", p.size()}, {"covers", p.covers().size()}};
  report["classification"] = ClassificationJson(p);
  report["meet_irreducibles"] = Names(p, MeetIrreducibles(p));
  report["warnings"] = src.warnings;
  Emit(std::move(report));
  return kExitOk;
}

int Cli::CheckValuation() {
  Source src = LoadSource(source_);
  const Poset& p = *src.poset;
  auto [v, vjson] = BuildValuation(src, valuation_, global_.tolerance);
  Json report = Header("check-valuation", src);
  report["valuation"] = vjson;
  ValuationVerdict verdict = posetval::CheckValuation(v);
  report["verdict"] = VerdictJson(p, verdict);
  if (alternate_) {
    report["third_element_check"] = AlternateJson(p, CheckValuationMonjardet, v);
    report["semilattice_check"] = AlternateJson(p, CheckValuationLeclerc, v);
  }
  int status = kExitOk;
  if (!expect_.empty()) {
    const bool met = (expect_ != "upper" || verdict.is_upper) &&
                     (expect_ != "lower" || verdict.is_lower) &&
                     (expect_ != "both" || (verdict.is_lower && verdict.is_upper));
    report["expectation"] = {{"requested", expect_}, {"met", met}};
    status = met ? kExitOk : kExitExpectationFailed;
  }
  report["warnings"] = src.warnings;
  Emit(std::move(report));
  return status;
}

int Cli::Metric() {
  Source src = LoadSource(source_);
  const Poset& p = *src.poset;
  auto [v, vjson] = BuildValuation(src, valuation_, global_.tolerance);
  std::optional<MetricRow> row;
  if (row_) row = static_cast<MetricRow>(*row_);
  DistanceTable table = InduceMetric(v, row);

  Json report = Header("metric", src);
  report["valuation"] = vjson;
  report["row"] = static_cast<int>(table.row);
  report["formula"] = RowFormula(table.row);
  if (verify_) {
    report["verdict"] = std::string(ToString(table.verdict));
    report["witnesses"] = Witnesses(p, table.witnesses);
  }
  report["distances"] = Matrix(p, table.d);
  if (bounds_) {
    BoundGap gap = ComputeBoundGap(v);
    double least = std::numeric_limits<double>::infinity();
    for (double g : gap.gap.data()) least = std::min(least, g);
    report["bounds"] = {{"equality", gap.equality},
                        {"min_gap", Number(least)},
                        {"gap", Matrix(p, gap.gap)}};
  }
  if (!export_table_.empty()) {
    std::ofstream csv(export_table_);
    if (!csv) Usage("cannot write '" + export_table_ + "'");
    WriteDistanceCsv(csv, p, table.d);
  }
  report["warnings"] = src.warnings;
  Emit(std::move(report));
  return verify_ && table.verdict != MetricVerdict::kMetric ? kExitExpectationFailed
                                                           : kExitOk;
}

std::optional<std::array<Index, 3>> ParseTriple(const Poset& p, const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<std::string> parts = Split(text, ',');
  if (parts.size() != 3) Usage("--triple takes three comma-separated elements");
  return std::array<Index, 3>{p.IndexOf(parts[0]), p.IndexOf(parts[1]), p.IndexOf(parts[2])};
}

SearchOptions MakeSearchOptions(const GlobalOptions& g, const Poset& p,
                                const std::string& triple) {
  SearchOptions opts;
  opts.budget = g.budget;
  opts.seed = g.seed;
  opts.tolerance = g.tolerance;
  opts.triple = ParseTriple(p, triple);
  return opts;
}

int Cli::Jc() {
  Source src = LoadSource(source_);
  const Poset& p = *src.poset;
  Json report = Header("jc", src);
  int status = kExitOk;
  std::optional<WeightFunction> weights;
  if (search_) {
    SearchOptions opts = MakeSearchOptions(global_, p, triple_);
    auto hit = SearchCounterexample(src.poset, SearchTarget::kJcTriangle, opts);
    report["search"] = CounterexampleJson(p, opts, SearchTarget::kJcTriangle, hit);
    if (hit) {
      weights = hit->weights;
    } else {
      status = kExitExpectationFailed;
    }
  } else {
    weights = LoadWeights(src.poset, weights_, global_.tolerance);
  }
  if (weights) {
    JCDistanceTable table = JiangConrathDistance(src.poset, *weights, global_.tolerance);
    report["distance"] = JcJson(p, table);
    if (!export_table_.empty()) {
      std::ofstream csv(export_table_);
      if (!csv) Usage("cannot write '" + export_table_ + "'");
      WriteDistanceCsv(csv, p, table.d);
    }
  }
  report["warnings"] = src.warnings;
  Emit(std::move(report));
  return status;
}

Index ResolveSubgroup(const SubgroupLattice& l, const std::string& label) {
  const Poset& p = *l.poset();
  if (auto i = p.Find(label)) return *i;
  return l.Generated(Split(label, ' '));
}

int Cli::Group() {
  Source src = LoadSource(source_);
  if (!src.lattice) Usage("group needs --group or --group-file");
  const SubgroupLattice& l = *src.lattice;
  const Poset& p = *l.poset();
  const FiniteGroup& g = l.group();

  Json report = Header("group", src);
  report["group"] = {{"order", g.order()}, {"abelian", g.IsAbelian()}};
  Json subgroups = Json::array();
  for (Index i = 0; i < l.size(); ++i) {
    std::string elements;
    for (int e : l.subgroup(i)) elements += (elements.empty() ? "" : " ") + g.name(e);
    subgroups.push_back({{"label", p.name(i)},
                         {"order", l.subgroup(i).size()},
                         {"elements", elements}});
  }
  report["subgroup_count"] = l.size();
  report["subgroups"] = subgroups;
  report["classification"] = ClassificationJson(p);
  ProductFormulaReport pf = CheckProductFormula(l);
  Json pf_witnesses = Json::array();
  for (const auto& w : pf.witnesses) {
    pf_witnesses.push_back({{"x", p.name(w.x)},
                            {"y", p.name(w.y)},
                            {"identity", w.identity},
                            {"lhs", w.lhs},
                            {"rhs", w.rhs}});
  }
  report["product_formula"] = {{"holds", pf.holds},
                               {"pairs_checked", pf.pairs_checked},
                               {"witnesses", pf_witnesses}};
  if (!between_.empty()) {
    const Index x = ResolveSubgroup(l, between_[0]);
    const Index y = ResolveSubgroup(l, between_[1]);
    report["subgroup_metric"] = {
        {"x", p.name(x)}, {"y", p.name(y)}, {"distance", Number(SubgroupMetric(l, x, y))}};
  }
  if (table_) {
    DistanceMatrix d(l.size());
    for (Index x = 0; x < l.size(); ++x) {
      for (Index y = 0; y < l.size(); ++y) d.at(x, y) = SubgroupMetric(l, x, y);
    }
    report["metric_table"] = Matrix(p, d);
  }
  Emit(std::move(report));
  return kExitOk;
}

int Cli::Search() {
  Source src = LoadSource(source_);
  const Poset& p = *src.poset;
  const SearchTarget target = ParseSearchTarget(target_);
  SearchOptions opts = MakeSearchOptions(global_, p, triple_);
  auto hit = SearchCounterexample(src.poset, target, opts);
  Json report = Header("search", src);
  report["search"] = CounterexampleJson(p, opts, target, hit);
  report["warnings"] = src.warnings;
  Emit(std::move(report));
  return hit ? kExitOk : kExitExpectationFailed;
}

int Cli::ExportDot() {
  Source src = LoadSource(source_);
  for (const std::string& w : src.warnings) err_ << "warning: " << w << "\n";
  if (output_.empty()) {
    WriteDot(out_, *src.poset);
    return kExitOk;
  }
  std::ofstream file(output_);
  if (!file) Usage("cannot write '" + output_ + "'");
  WriteDot(file, *src.poset);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  return cli.Run(args);
}

}  // namespace posetval::cli
