// Copyright 2026 The CoSet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: gen, transform, verify, label-check, eval,
// stability, scalability and debug.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "coset/corpus/generator.hpp"
#include "coset/corpus/manifest.hpp"
#include "coset/debugger/decompose.hpp"
#include "coset/debugger/minimize.hpp"
#include "coset/harness/baselines.hpp"
#include "coset/harness/evaluation.hpp"
#include "coset/harness/external.hpp"
#include "coset/lang/parser.hpp"
#include "coset/lang/printer.hpp"
#include "coset/oracle/differential.hpp"
#include "json.hpp"

namespace {

using namespace coset;
using json = nlohmann::json;
namespace fs = std::filesystem;

/// Bad input files or arguments detected after parsing; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string out;
  std::string corpus;
  std::string classifier;
  std::string split = "test";
  std::uint64_t step_limit = 10'000'000;
  int unroll_factor = 2;
  std::size_t bin_width = 300;
  std::string size_source = "source";
  std::vector<double> ratios{0.76, 0.12, 0.12};
  int deadline_ms = 30'000;
  bool send_trace = false;

  // gen
  std::string task;
  std::size_t count = 48;
  bool no_certify = false;
  // transform / verify
  std::vector<std::string> kinds;
  std::string input;
  std::string csu = "all";
  std::string type_mode = "int-to-long";
  long long site = -1;
  // label-check
  std::string label;
  // debug
  std::string entry;
  std::string target;
  std::string mode = "flip";
  bool guard_probe = false;
  std::vector<std::string> specs{"P1=QUADRATIC", "P2", "P3"};
  std::string retrain;
};

json config_echo(const std::string& command, const Options& o) {
  return {{"command", command},
          {"seed", o.seed},
          {"jobs", o.jobs},
          {"step_limit", o.step_limit},
          {"unroll_factor", o.unroll_factor},
          {"bin_width", o.bin_width},
          {"split_ratios", o.ratios},
          {"classifier", o.classifier},
          {"corpus", o.corpus},
          {"split", o.split}};
}

void write_report(const Options& o, const std::string& name, const json& report,
                  const std::string& text) {
  std::cout << text;
  if (o.out.empty()) return;
  fs::create_directories(o.out);
  std::ofstream(fs::path(o.out) / (name + ".json")) << report.dump(2) << "\n";
  std::ofstream(fs::path(o.out) / (name + ".txt")) << text;
}

corpus::Manifest load_corpus(const Options& o) {
  if (o.corpus.empty()) throw UsageError("--corpus is required");
  try {
    return corpus::load(o.corpus);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

corpus::Split parse_split_or_throw(const std::string& s) {
  auto split = corpus::parse_split(s);
  if (!split) throw UsageError("unknown split " + s);
  return *split;
}

std::unique_ptr<harness::Classifier> make_classifier(const Options& o, const corpus::Manifest& m) {
  const std::string& spec = o.classifier;
  if (spec.rfind("builtin:", 0) == 0) {
    auto kind = harness::parse_baseline(spec.substr(8));
    if (!kind) throw UsageError("unknown builtin classifier " + spec);
    auto train = m.select(corpus::Split::Train);
    if (train.empty()) throw UsageError("the corpus has no training entries");
    return harness::train_baseline(*kind, train);
  }
  if (spec.rfind("cmd:", 0) == 0) {
    harness::ExternalOptions eo;
    eo.deadline = std::chrono::milliseconds(o.deadline_ms);
    eo.send_trace = o.send_trace;
    for (const auto& e : m.entries) eo.labels.insert(e.label);
    return std::make_unique<harness::ExternalClassifier>(spec.substr(4), eo);
  }
  throw UsageError("classifier must be builtin:<static-bag|dynamic-trace> or cmd:<command>");
}

std::vector<transforms::TransformKind> parse_kinds(const std::vector<std::string>& names,
                                                   bool allow_changing) {
  std::vector<transforms::TransformKind> out;
  for (const auto& n : names) {
    if (n == "all") {
      for (auto k : transforms::all_kinds())
        if (allow_changing || transforms::contract_of(k) != transforms::Contract::Changing)
          out.push_back(k);
      continue;
    }
    auto k = transforms::parse_kind(n);
    if (!k) throw UsageError("unknown transformation " + n);
    out.push_back(*k);
  }
  return out;
}

transforms::TransformConfig transform_config(const Options& o) {
  transforms::TransformConfig c;
  c.seed = o.seed;
  c.unroll_factor = o.unroll_factor;
  auto d = transforms::parse_csu_direction(o.csu);
  if (!d) throw UsageError("unknown CSU direction " + o.csu);
  c.csu = *d;
  auto t = transforms::parse_type_mode(o.type_mode);
  if (!t) throw UsageError("unknown type mode " + o.type_mode);
  c.type_mode = *t;
  if (o.site >= 0) c.site = static_cast<lang::NodeId>(o.site);
  return c;
}

oracle::Mode mode_for(transforms::TransformKind k) {
  switch (transforms::contract_of(k)) {
    case transforms::Contract::Preserving: return oracle::Mode::Exact;
    case transforms::Contract::Approximating: return oracle::Mode::Approximating;
    case transforms::Contract::Changing: return oracle::Mode::ExpectDivergence;
  }
  return oracle::Mode::Exact;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lang::Program parse_file(const std::string& path) {
  try {
    return lang::parse_checked(read_text(path));
  } catch (const lang::SourceError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_gen(const Options& o) {
  if (o.out.empty()) throw UsageError("--out is required");
  if (o.ratios.size() != 3) throw UsageError("--ratios needs three values");
  corpus::GenerateOptions go;
  go.certify = !o.no_certify;
  std::vector<corpus::CorpusEntry> entries;
  try {
    entries = corpus::generate_task(o.task, o.count, o.seed, go);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto m = corpus::split(std::move(entries), {o.ratios[0], o.ratios[1], o.ratios[2]}, o.seed);
  m.generator_seeds[o.task.empty() ? "all" : o.task] = o.seed;
  corpus::save(m, o.out);
  std::cout << "wrote " << m.entries.size() << " entries to " << o.out << " (train "
            << m.select(corpus::Split::Train).size() << ", valid "
            << m.select(corpus::Split::Valid).size() << ", test "
            << m.select(corpus::Split::Test).size() << ")\n";
  return 0;
}

int cmd_transform(const Options& o) {
  if (o.kinds.size() != 1) throw UsageError("--kind takes exactly one transformation");
  auto kinds = parse_kinds(o.kinds, true);
  if (kinds.size() != 1) throw UsageError("--kind takes exactly one transformation");
  const auto p = parse_file(o.input);
  const auto r = transforms::apply(kinds[0], p, transform_config(o));
  const std::string text = lang::print(r.program);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream(o.out) << text;
  }
  for (const auto& e : r.edits)
    std::cerr << o.input << ":" << e.site.line << ":" << e.site.column << ": " << e.description
              << "\n";
  if (!r.applicable) std::cerr << transforms::to_string(kinds[0]) << ": not applicable\n";
  return 0;
}

int cmd_verify(const Options& o) {
  const auto m = load_corpus(o);
  const auto kinds = parse_kinds(o.kinds.empty() ? std::vector<std::string>{"all"} : o.kinds, true);
  interp::RunOptions run;
  run.step_limit = o.step_limit;
  json report{{"config", config_echo("verify", o)}, {"kinds", json::array()}};
  std::string text;
  bool ok = true;
  for (auto kind : kinds) {
    auto cfg = transform_config(o);
    const auto mode = mode_for(kind);
    std::size_t applicable = 0, divergences = 0, flagged = 0;
    json failures = json::array();
    for (const auto& e : m.entries) {
      const auto p = e.program();
      auto r = transforms::apply(kind, p, cfg);
      if (!r.applicable) continue;
      ++applicable;
      auto v = oracle::differential_check(p, r.program, e.inputs, mode, run);
      divergences += v.divergences();
      flagged += v.flagged();
      if (!v.pass) failures.push_back({{"id", e.id}, {"detail", oracle::describe(v)}});
    }
    ok = ok && failures.empty();
    report["kinds"].push_back({{"kind", transforms::to_string(kind)},
                               {"mode", oracle::to_string(mode)},
                               {"applicable", applicable},
                               {"divergences", divergences},
                               {"flagged", flagged},
                               {"failures", failures}});
    text += std::string(transforms::to_string(kind)) + ": " + std::to_string(applicable) +
            " applicable, " + std::to_string(divergences) + " divergences";
    if (mode == oracle::Mode::Approximating) text += " (" + std::to_string(flagged) + " flagged)";
    text += failures.empty() ? ", contract holds\n"
                             : ", contract violated on " + std::to_string(failures.size()) +
                                   " programs\n";
  }
  write_report(o, "verify", report, text);
  return ok ? 0 : 1;
}

int cmd_label_check(const Options& o) {
  std::vector<corpus::CorpusEntry> entries;
  if (!o.input.empty()) {
    if (o.label.empty()) throw UsageError("--label is required with --in");
    const auto* def = corpus::find_label(o.label);
    if (!def) throw UsageError("unknown label " + o.label);
    corpus::CorpusEntry e;
    e.id = fs::path(o.input).stem().string();
    e.task = def->task;
    e.label = def->label;
    e.source = lang::print(parse_file(o.input));
    e.inputs = corpus::input_suite(*corpus::find_task(def->task), o.seed);
    entries.push_back(std::move(e));
  } else {
    entries = load_corpus(o).entries;
  }
  json report{{"config", config_echo("label-check", o)}, {"entries", json::array()}};
  std::string text;
  std::size_t bad = 0;
  for (const auto& e : entries) {
    const auto* def = corpus::find_label(e.label);
    const auto* task = corpus::find_task(e.task);
    if (!def || !task) throw UsageError(e.id + ": label " + e.label + " is not in the catalog");
    auto opts = corpus::property_options(*task);
    opts.run.step_limit = o.step_limit;
    auto v = corpus::check_label(*def, e.program(), corpus::certification_suite(*task, e.inputs),
                                 opts);
    json checks = json::array();
    for (const auto& c : v.checks)
      checks.push_back({{"check", corpus::to_string(c.check)},
                        {"ok", c.ok},
                        {"applicable", c.result.applicable},
                        {"holds", c.result.holds},
                        {"note", c.result.note}});
    report["entries"].push_back({{"id", e.id}, {"label", e.label}, {"ok", v.ok}, {"checks", checks}});
    if (!v.ok) {
      ++bad;
      text += e.id + " (" + e.label + "): label check failed\n";
      for (const auto& c : v.checks)
        if (!c.ok) text += "  " + corpus::to_string(c.check) + " " + c.result.note + "\n";
    }
  }
  text += std::to_string(entries.size() - bad) + " of " + std::to_string(entries.size()) +
          " entries satisfy their label\n";
  write_report(o, "label-check", report, text);
  return bad == 0 ? 0 : 1;
}

json report_json(const harness::EvalReport& r) {
  json labels = json::array();
  for (const auto& l : r.labels)
    labels.push_back({{"label", l.label},
                      {"support", l.support},
                      {"precision", l.precision},
                      {"recall", l.recall},
                      {"f1", l.f1}});
  return {{"total", r.total},    {"correct", r.correct},   {"errors", r.errors},
          {"accuracy", r.accuracy}, {"macro_f1", r.macro_f1}, {"labels", labels},
          {"confusion", r.confusion}};
}

int cmd_eval(const Options& o) {
  const auto m = load_corpus(o);
  auto c = make_classifier(o, m);
  const auto test = m.select(parse_split_or_throw(o.split));
  if (test.empty()) throw UsageError("the " + o.split + " split is empty");
  const auto r = harness::evaluate(*c, test, o.jobs);
  json report{{"config", config_echo("eval", o)}, {"report", report_json(r)}};
  write_report(o, "eval", report, harness::format_report(r));
  return 0;
}

int cmd_stability(const Options& o) {
  const auto m = load_corpus(o);
  auto c = make_classifier(o, m);
  const auto test = m.select(parse_split_or_throw(o.split));
  if (test.empty()) throw UsageError("the " + o.split + " split is empty");
  const auto kinds = parse_kinds(o.kinds.empty() ? std::vector<std::string>{"all"} : o.kinds, false);
  for (auto k : kinds)
    if (transforms::contract_of(k) == transforms::Contract::Changing)
      throw UsageError(std::string(transforms::to_string(k)) + " does not preserve labels");
  harness::StabilityOptions so;
  so.config = transform_config(o);
  so.jobs = o.jobs;
  const auto t = harness::stability(*c, test, kinds, so);
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"kind", r.kind},
                    {"applicable", r.applicable},
                    {"flipped", r.flipped},
                    {"rate", r.rate()},
                    {"percent", harness::percent(r.rate())}});
  json report{{"config", config_echo("stability", o)}, {"rows", rows}, {"aborted", t.aborted}};
  write_report(o, "stability", report, harness::format_stability(t, c->name()));
  return t.aborted.empty() ? 0 : 1;
}

int cmd_scalability(const Options& o) {
  const auto m = load_corpus(o);
  auto c = make_classifier(o, m);
  const auto test = m.select(parse_split_or_throw(o.split));
  if (test.empty()) throw UsageError("the " + o.split + " split is empty");
  if (o.size_source != "source" && o.size_source != "trace")
    throw UsageError("--size-source must be source or trace");
  const auto source =
      o.size_source == "trace" ? harness::SizeSource::Trace : harness::SizeSource::Source;
  const auto bins = harness::scalability(*c, test, o.bin_width, source, o.jobs);
  json rows = json::array();
  for (const auto& b : bins)
    rows.push_back({{"lo", b.lo},
                    {"hi", b.hi},
                    {"count", b.count},
                    {"accuracy", b.accuracy},
                    {"macro_f1", b.macro_f1}});
  json report{{"config", config_echo("scalability", o)},
              {"size_source", harness::to_string(source)},
              {"bins", rows}};
  write_report(o, "scalability", report, harness::format_bins(bins));
  return 0;
}

json edit_json(const debugger::AtomicEdit& e) {
  return {{"kind", debugger::to_string(e.kind)},
          {"contract", transforms::to_string(e.contract)},
          {"line", e.site.line},
          {"column", e.site.column},
          {"description", e.describe()}};
}

// Saves the relabelled corpus, runs the user's retrain command on it with
// COSET_CORPUS pointing there, then starts the classifier with the same
// environment.
std::unique_ptr<harness::Classifier> retrain_external(const Options& o,
                                                      const corpus::Manifest& m,
                                                      const std::string& tag) {
  fs::path base = o.out.empty() ? fs::temp_directory_path() / "coset-decompose" : fs::path(o.out);
  fs::path dir = base / "decompose" / tag;
  fs::remove_all(dir);
  corpus::save(m, dir);
  setenv("COSET_CORPUS", dir.c_str(), 1);
  const int status = std::system(o.retrain.c_str());
  if (status != 0)
    throw std::runtime_error("retrain command failed for " + tag + " with status " +
                             std::to_string(status));
  return make_classifier(o, m);
}

int cmd_debug(const Options& o) {
  const auto m = load_corpus(o);
  const auto* entry = m.find(o.entry);
  if (!entry) throw UsageError("unknown entry " + o.entry);
  if (o.mode == "decompose") {
    debugger::Trainer train;
    if (o.classifier.rfind("builtin:", 0) == 0) {
      auto kind = harness::parse_baseline(o.classifier.substr(8));
      if (!kind) throw UsageError("unknown builtin classifier " + o.classifier);
      train = [kind](const corpus::Manifest& relabeled, const std::string&) {
        return harness::train_baseline(*kind, relabeled.select(corpus::Split::Train));
      };
    } else {
      if (o.retrain.empty())
        throw UsageError("decomposition with an external classifier needs --retrain");
      train = [&o](const corpus::Manifest& relabeled, const std::string& tag) {
        return retrain_external(o, relabeled, tag);
      };
    }
    std::vector<oracle::PropertySpec> specs;
    for (const auto& s : o.specs) {
      auto spec = oracle::parse_property(s);
      if (!spec) throw UsageError("unknown property " + s);
      specs.push_back(*spec);
    }
    if (specs.empty()) throw UsageError("--specs is empty");
    const auto r = debugger::property_decomposition(train, m, o.entry, specs);
    json rows = json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"spec", oracle::to_string(row.spec)},
                      {"applicable", row.applicable},
                      {"expected", row.expected},
                      {"predicted", row.predicted},
                      {"correct", row.correct},
                      {"note", row.note}});
    json report{{"config", config_echo("debug", o)},
                {"entry", r.entry_id},
                {"label", r.full_label},
                {"prediction", r.full_prediction},
                {"rows", rows},
                {"failing", r.failing},
                {"inconsistent", r.inconsistent}};
    write_report(o, "debug", report, debugger::narrative(r));
    return 0;
  }
  if (o.mode != "flip") throw UsageError("--mode must be flip or decompose");
  if (o.target.empty()) throw UsageError("--target is required in flip mode");
  auto c = make_classifier(o, m);
  debugger::MinimizeOptions mo;
  mo.guard_probe = o.guard_probe;
  debugger::RootCauseReport r;
  try {
    r = debugger::minimize_flip(*c, *entry, o.target, mo);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json edits = json::array();
  for (std::size_t k = 0; k < r.edits.size(); ++k) {
    auto j = edit_json(r.edits[k]);
    j["oracle"] = {{"mode", oracle::to_string(r.verdicts[k].mode)}, {"pass", r.verdicts[k].pass}};
    edits.push_back(j);
  }
  json report{{"config", config_echo("debug", o)},
              {"entry", r.entry_id},
              {"prediction", r.original_prediction},
              {"target", r.target},
              {"flipped", r.flipped},
              {"edits", edits},
              {"tag", r.tag},
              {"universe", r.universe},
              {"classifications", r.classifications},
              {"edited_source", r.edited_source}};
  write_report(o, "debug", report, debugger::narrative(r));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coset: program classifier benchmark toolkit"};
  app.set_config("--config", "", "INI or TOML file with default option values");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  if (const char* env = std::getenv("COSET_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "COSET_SEED is not a number: " << env << "\n";
      return 2;
    }
  }
  app.add_option("--seed", o.seed, "Global seed (default: $COSET_SEED or 0)");
  app.add_option("--jobs", o.jobs, "Worker count")->check(CLI::PositiveNumber);
  app.add_option("--step-limit", o.step_limit, "Interpreter step limit per run");

  auto add_corpus = [&](CLI::App* s) { s->add_option("--corpus", o.corpus, "Corpus directory or manifest")->required(); };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", o.out, "Directory for reports"); };
  auto add_classifier = [&](CLI::App* s) {
    s->add_option("--classifier", o.classifier, "builtin:static-bag, builtin:dynamic-trace or cmd:<command>")
        ->required();
    s->add_option("--split", o.split, "Split to evaluate on")->capture_default_str();
    s->add_option("--deadline-ms", o.deadline_ms, "Per-request deadline for cmd: classifiers")
        ->capture_default_str();
    s->add_flag("--send-trace", o.send_trace, "Send the first input's trace with each request");
  };

  auto* gen = app.add_subcommand("gen", "Generate a labelled corpus");
  gen->add_option("--task", o.task, "Task (default: all tasks)");
  gen->add_option("--count", o.count, "Programs per label")->capture_default_str();
  gen->add_option("--out", o.out, "Corpus directory")->required();
  gen->add_option("--ratios", o.ratios, "Train, valid and test ratios")->expected(3)->delimiter(',');
  gen->add_flag("--no-certify", o.no_certify, "Skip the label check of generated programs");

  auto* transform = app.add_subcommand("transform", "Apply one transformation to a program file");
  transform->add_option("--kind", o.kinds, "Transformation")->required();
  transform->add_option("--in", o.input, "Program file")->required()->check(CLI::ExistingFile);
  transform->add_option("--out", o.out, "Output file (default: stdout)");
  transform->add_option("--unroll-factor", o.unroll_factor)->capture_default_str();
  transform->add_option("--csu-direction", o.csu)->capture_default_str();
  transform->add_option("--type-mode", o.type_mode)->capture_default_str();
  transform->add_option("--site", o.site, "Node id restricting site-based transformations");

  auto* verify = app.add_subcommand("verify", "Check transformation contracts over a corpus");
  verify->add_option("--kind", o.kinds, "Transformations (default: all)");
  add_corpus(verify);
  add_out(verify);
  verify->add_option("--unroll-factor", o.unroll_factor)->capture_default_str();
  verify->add_option("--csu-direction", o.csu)->capture_default_str();
  verify->add_option("--type-mode", o.type_mode)->capture_default_str();

  auto* label_check = app.add_subcommand("label-check", "Check programs against their labels");
  label_check->add_option("--corpus", o.corpus, "Corpus directory or manifest");
  label_check->add_option("--in", o.input, "Single program file")->check(CLI::ExistingFile);
  label_check->add_option("--label", o.label, "Label for --in");
  add_out(label_check);

  auto* eval = app.add_subcommand("eval", "Accuracy and F1 of a classifier");
  add_corpus(eval);
  add_classifier(eval);
  add_out(eval);

  auto* stability = app.add_subcommand("stability", "Prediction flips under transformations");
  add_corpus(stability);
  add_classifier(stability);
  add_out(stability);
  stability->add_option("--kind", o.kinds, "Transformations (default: all label-preserving)");
  stability->add_option("--unroll-factor", o.unroll_factor)->capture_default_str();
  stability->add_option("--csu-direction", o.csu)->capture_default_str();
  stability->add_option("--type-mode", o.type_mode)->capture_default_str();

  auto* scalability = app.add_subcommand("scalability", "Accuracy by program size");
  add_corpus(scalability);
  add_classifier(scalability);
  add_out(scalability);
  scalability->add_option("--bin-width", o.bin_width, "Bin width in bytes")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  scalability->add_option("--size-source", o.size_source, "source or trace")->capture_default_str();

  auto* debug = app.add_subcommand("debug", "Root-cause analysis of one misclassification");
  add_corpus(debug);
  add_classifier(debug);
  add_out(debug);
  debug->add_option("--entry", o.entry, "Entry id")->required();
  debug->add_option("--target", o.target, "Label to search for (flip mode)");
  debug->add_option("--mode", o.mode, "flip or decompose")->capture_default_str();
  debug->add_flag("--guard-probe", o.guard_probe, "Allow guard removal edits");
  debug->add_option("--specs", o.specs, "Properties for decompose mode")->delimiter(',');
  debug->add_option("--retrain", o.retrain,
                    "Shell command run before each decomposition step for cmd: classifiers; "
                    "$COSET_CORPUS names the relabelled corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*transform) return cmd_transform(o);
    if (*verify) return cmd_verify(o);
    if (*label_check) return cmd_label_check(o);
    if (*eval) return cmd_eval(o);
    if (*stability) return cmd_stability(o);
    if (*scalability) return cmd_scalability(o);
    if (*debug) return cmd_debug(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
