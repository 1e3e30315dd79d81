#include "ldstat/cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ldstat/error.hpp"
#include "ldstat/inference/inference.hpp"
#include "ldstat/provenance/provenance.hpp"
#include "ldstat/rdf/turtle.hpp"
#include "ldstat/stats/stats.hpp"

namespace ldstat::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string data;
  std::vector<std::string> rules;
  std::vector<std::string> dlogic;
  std::vector<std::string> rif;
  std::vector<std::string> namespaces;
  std::string skolem_base;
  std::string output;
  std::string format = "table";
  std::string dataset;
  std::string prev_min;
  std::string insert;
  std::string remove;
  std::string full;
  std::string description;
};

/// Parse failure attributed to a file.
struct FileParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Session {
 public:
  Session(const Options& opts, const Environment& env, std::ostream& out, std::ostream& err)
      : opts_(opts), env_(env), out_(out), err_(err) {
    if (env.gn_base) vocabulary_.gn_base = *env.gn_base;
  }

  int closure() {
    const auto data = load_graph(opts_.data);
    const auto regime = load_regime();
    const auto closed = stats::dataset_closure(data, regime.rules, regime.schema);
    err_ << "closure: " << data.size() << " -> " << closed.size() << " triples\n";
    write(rdf::serialize_turtle(closed));
    return kOk;
  }

  int minimize() {
    const auto data = load_graph(opts_.data);
    const auto regime = load_regime();
    const auto minimal = inference::reduce(data, regime.rules, regime.schema);
    err_ << "minimize: " << data.size() << " -> " << minimal.size() << " triples\n";
    write(rdf::serialize_turtle(minimal));
    return kOk;
  }

  int diff_minimize() {
    const auto prev = load_graph(opts_.prev_min);
    const rdf::Diff diff{opts_.insert.empty() ? rdf::Graph{} : load_graph(opts_.insert),
                         opts_.remove.empty() ? rdf::Graph{} : load_graph(opts_.remove)};
    const auto full = load_graph(opts_.full);
    const auto regime = load_regime();
    const auto result = inference::incremental_reduce(prev, diff, regime.rules, regime.schema, full);
    err_ << "diff-minimize: retested " << result.retested << " triples"
         << (result.fallback_used ? ", closure check failed, fell back to a full reduce" : "") << "\n";
    write(std::string("# fallback: ") + (result.fallback_used ? "true" : "false") + "\n" +
          rdf::serialize_turtle(result.graph));
    return kOk;
  }

  int stats() {
    const auto data = load_graph(opts_.data);
    const auto regime = load_regime();
    const auto report = stats::compute_stats(data, regime.rules, regime.schema, namespaces());
    if (opts_.format == "turtle") {
      write(describe_report(report));
      return kOk;
    }
    std::vector<std::pair<std::string, std::string>> rows{
        {"published", std::to_string(report.published_cardinality)},
        {"closure", std::to_string(*report.closure_cardinality)},
        {"minimal", std::to_string(*report.minimal_cardinality)},
        {"redundancy", stats::to_decimal(*report.redundancy)},
    };
    if (report.out_link_density_plus) rows.emplace_back("out_link_density_plus", stats::to_decimal(*report.out_link_density_plus));
    if (report.out_link_density_minus) rows.emplace_back("out_link_density_minus", stats::to_decimal(*report.out_link_density_minus));
    std::ostringstream text;
    if (opts_.format == "tsv") {
      text << "statistic\tvalue\n";
      for (const auto& [k, v] : rows) text << k << '\t' << v << '\n';
    } else {
      text << std::left << std::setw(24) << "statistic" << "value\n";
      for (const auto& [k, v] : rows) text << std::left << std::setw(24) << k << v << '\n';
    }
    write(text.str());
    return kOk;
  }

  int describe() {
    const auto data = load_graph(opts_.data);
    const auto regime = load_regime();
    write(describe_report(stats::compute_stats(data, regime.rules, regime.schema, namespaces())));
    return kOk;
  }

  int verify() {
    const fs::path path = absolute(opts_.description);
    const std::string text = read_file(opts_.description);
    const auto resolver = provenance::file_resolver(path.parent_path());
    provenance::Description stated;
    stats::StatsReport recomputed;
    try {
      stated = provenance::read_description(text, vocabulary_);
      recomputed = provenance::recompute(text, resolver, vocabulary_);
    } catch (const ParseError& e) {
      throw FileParseError(opts_.description + ": " + e.what());
    }
    const auto mismatches = provenance::compare(stated, recomputed, vocabulary_);
    std::ostringstream text_out;
    for (const auto& item : stated.items) {
      const auto m = std::find_if(mismatches.begin(), mismatches.end(),
                                  [&](const provenance::Mismatch& x) { return x.dimension == item.dimension; });
      if (m == mismatches.end()) {
        text_out << "ok\t" << item.dimension << "\n";
      } else {
        text_out << "MISMATCH\t" << item.dimension << "\tstated " << m->stated << "\trecomputed " << m->recomputed
                 << "\n";
      }
    }
    write(text_out.str());
    if (!mismatches.empty()) {
      err_ << "verify: " << mismatches.size() << " statistic(s) do not match\n";
      return kMismatch;
    }
    return kOk;
  }

 private:
  fs::path absolute(const std::string& p) const {
    const fs::path path(p);
    return path.is_absolute() ? path : env_.cwd / path;
  }

  std::string read_file(const std::string& p) const {
    std::ifstream in(absolute(p), std::ios::binary);
    if (!in) throw ResolveError("cannot read " + p);
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
  }

  rdf::Graph load_graph(const std::string& p) const {
    rdf::Graph g;
    try {
      g = rdf::parse_turtle(read_file(p));
    } catch (const ParseError& e) {
      throw FileParseError(p + ": " + e.what());
    }
    return opts_.skolem_base.empty() ? g : rdf::skolemize(g, opts_.skolem_base);
  }

  std::vector<provenance::RuleSource> sources() const {
    std::vector<provenance::RuleSource> out;
    for (const auto& r : opts_.rules) out.push_back({provenance::RuleFormat::N3, provenance::file_iri(absolute(r))});
    for (const auto& d : opts_.dlogic) out.push_back({provenance::RuleFormat::DLogic, provenance::file_iri(absolute(d))});
    for (const auto& r : opts_.rif) out.push_back({provenance::RuleFormat::Rif, provenance::file_iri(absolute(r))});
    return out;
  }

  provenance::Regime load_regime() const {
    try {
      return provenance::load_regime(sources(), provenance::file_resolver(env_.cwd));
    } catch (const ParseError& e) {
      throw FileParseError(std::string("rules: ") + e.what());
    }
  }

  std::optional<stats::NamespaceDecl> namespaces() const {
    if (opts_.namespaces.empty()) return std::nullopt;
    return stats::NamespaceDecl(opts_.namespaces);
  }

  std::string describe_report(const stats::StatsReport& report) const {
    provenance::NormalisationSpec spec;
    spec.rule_sources = sources();
    spec.kind = spec.rule_sources.empty() ? provenance::NormalisationKind::None : provenance::NormalisationKind::MiniRdf;
    provenance::DescribeOptions options;
    options.vocabulary = vocabulary_;
    options.data_locator = provenance::file_iri(absolute(opts_.data));
    options.namespaces = opts_.namespaces;
    const std::string dataset = opts_.dataset.empty() ? options.data_locator : opts_.dataset;
    return provenance::emit_description(dataset, report, spec, options);
  }

  void write(const std::string& text) const {
    if (opts_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(absolute(opts_.output), std::ios::binary);
    if (!file) throw ResolveError("cannot write " + opts_.output);
    file << text;
  }

  const Options& opts_;
  const Environment& env_;
  std::ostream& out_;
  std::ostream& err_;
  provenance::Vocabulary vocabulary_;
};

void add_regime_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--rules", o.rules, "N3 rule file (repeatable)");
  cmd->add_option("--dlogic", o.dlogic, "RDFS/OWL schema graph compiled to rules (repeatable)");
  cmd->add_option("--rif", o.rif, "RIF rule file (recognised, not supported)");
  cmd->add_option("--skolem-base", o.skolem_base, "replace blank nodes with IRIs under this base");
  cmd->add_option("-o,--output", o.output, "write results to this file instead of standard output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  Options o;
  CLI::App app{"Provenance-qualified statistics for RDF graphs", args.empty() ? "ldstat" : args.front()};
  app.require_subcommand(1);

  auto* closure = app.add_subcommand("closure", "write the closure of the data under the rules");
  closure->add_option("--data", o.data, "dataset (Turtle)")->required();
  add_regime_flags(closure, o);

  auto* minimize = app.add_subcommand("minimize", "write the data with derivable triples removed");
  minimize->add_option("--data", o.data, "dataset (Turtle)")->required();
  add_regime_flags(minimize, o);

  auto* stats = app.add_subcommand("stats", "compute published/closure/minimal cardinality and redundancy");
  stats->add_option("--data", o.data, "dataset (Turtle)")->required();
  stats->add_option("--ns", o.namespaces, "IRI prefix owned by the dataset (repeatable); enables out-link density");
  stats->add_option("--format", o.format, "table, tsv or turtle")->check(CLI::IsMember({"table", "tsv", "turtle"}));
  stats->add_option("--dataset", o.dataset, "dataset IRI for --format turtle");
  add_regime_flags(stats, o);

  auto* diff = app.add_subcommand("diff-minimize", "update a minimal graph for a new version of the data");
  diff->add_option("--prev-min", o.prev_min, "minimal graph of the previous version")->required();
  diff->add_option("--insert", o.insert, "triples inserted");
  diff->add_option("--delete", o.remove, "triples deleted");
  diff->add_option("--full", o.full, "the new version in full")->required();
  add_regime_flags(diff, o);

  auto* describe = app.add_subcommand("describe", "emit a gn/VoID description of the statistics");
  describe->add_option("--data", o.data, "dataset (Turtle)")->required();
  describe->add_option("--ns", o.namespaces, "IRI prefix owned by the dataset (repeatable)");
  describe->add_option("--dataset", o.dataset, "dataset IRI (defaults to the data file's IRI)");
  add_regime_flags(describe, o);

  auto* verify = app.add_subcommand("verify", "recompute a description and compare its values exactly");
  verify->add_option("--description", o.description, "description (Turtle)")->required();
  verify->add_option("-o,--output", o.output, "write the comparison to this file");

  std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  Session session(o, env, out, err);
  try {
    if (*closure) return session.closure();
    if (*minimize) return session.minimize();
    if (*stats) return session.stats();
    if (*diff) return session.diff_minimize();
    if (*describe) return session.describe();
    if (*verify) return session.verify();
  } catch (const FileParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DescriptionError& e) {
    err << "malformed description: " << e.what() << "\n";
    return kParse;
  } catch (const UnsafeRuleError& e) {
    err << "unsafe rule: " << e.what() << "\n";
    return kUnsafeRule;
  } catch (const UnsupportedError& e) {
    err << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ldstat::cli
