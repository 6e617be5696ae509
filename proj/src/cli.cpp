#include "negeval/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "negeval/baseline.hpp"
#include "negeval/datatools.hpp"
#include "negeval/depgraph.hpp"
#include "negeval/error.hpp"
#include "negeval/report.hpp"
#include "negeval/sem_conll.hpp"
#include "negeval/xml_corpora.hpp"

namespace negeval::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string gold;
  std::vector<std::string> preds;
  std::string input;
  std::string output;
  std::string out_dir;
  std::string format = "auto";
  std::string cue_match = "exact";
  std::string metrics;
  std::string out_format = "text";
  std::string ratios = "80/10/10";
  std::uint64_t seed = 0;
  std::string tokenizer;
  std::string encoding = "direct";
  std::string assignments;
  std::string patches;
  std::string lexicon = "neither,nor";
  int decimals = 1;
  bool keep_punct = false;
  bool cns_all = false;
  bool cue_outside_scope = false;
};

enum class Format { Conll, BioScope, Sfu };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Format detect_format(const std::string& path, const std::string& content, const std::string& forced) {
  if (forced == "conll") return Format::Conll;
  if (forced == "bioscope") return Format::BioScope;
  if (forced == "sfu") return Format::Sfu;
  if (forced != "auto") throw UsageError("unknown format '" + forced + "'");
  const auto ext = std::filesystem::path(path).extension().string();
  const bool xml = ext == ".xml" || (ext != ".conll" && ext != ".txt" && ext != ".tsv" &&
                                     content.find_first_not_of(" \t\r\n") != std::string::npos &&
                                     content[content.find_first_not_of(" \t\r\n")] == '<');
  if (!xml) return Format::Conll;
  const auto head = content.substr(0, 1 << 16);
  if (head.find("<W>") != std::string::npos || head.find("<W ") != std::string::npos)
    return Format::Sfu;
  return Format::BioScope;
}

Corpus load(const std::string& path, const Options& o) {
  const auto content = read_file(path);
  std::istringstream in(content);
  PunctuationPolicy punct;
  switch (detect_format(path, content, o.format)) {
    case Format::Conll:
      return parse_sem_conll(in, path, punct);
    case Format::BioScope: {
      BioScopeOptions bo;
      bo.remove_cue_from_scope = o.cue_outside_scope;
      bo.punct = punct;
      const auto tok = o.tokenizer.empty() ? TokenizerConfig::defaults()
                                           : TokenizerConfig::load(o.tokenizer);
      return parse_bioscope(in, path, tok, bo);
    }
    case Format::Sfu:
      return parse_sfu(in, path, std::filesystem::path(path).stem().string(), punct);
  }
  throw UsageError("unsupported format");
}

void report_diagnostics(const Corpus& c, std::ostream& err) {
  for (const auto& d : validate(c)) {
    if (d.severity == Severity::Error) throw ParseError(c.name, 0, d.to_string());
    err << d.to_string() << '\n';
  }
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw IoError("cannot write " + o.output);
  f << text;
  if (!f) throw IoError("write to " + o.output + " failed");
}

std::vector<std::string> comma_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::string> metric_list(const Options& o) {
  auto keys = comma_list(o.metrics);
  for (const auto& k : keys)
    if (!is_metric_key(k)) throw UsageError("unknown metric '" + k + "'");
  return keys;
}

ReportOptions report_options(const Options& o) {
  ReportOptions ro;
  ro.strip_punct = !o.keep_punct;
  ro.cue_match = cue_match_mode_from_string(o.cue_match);
  ro.cns_denominator = o.cns_all ? CnsDenominator::AllSentences : CnsDenominator::NegationSentences;
  return ro;
}

int cmd_evaluate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.preds.size() != 1) throw UsageError("evaluate takes exactly one --pred");
  const auto metrics = metric_list(o);
  const auto gold = load(o.gold, o);
  const auto pred = load(o.preds[0], o);
  report_diagnostics(gold, err);
  report_diagnostics(pred, err);
  const auto report = full_report(gold, pred, report_options(o));
  if (o.out_format == "json")
    emit(to_json(report).dump(2) + "\n", o, out);
  else if (o.out_format == "tsv")
    emit(to_tsv(report, metrics, o.decimals), o, out);
  else
    emit(to_text(report, metrics, o.decimals), o, out);
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.preds.size() != 2) throw UsageError("compare takes --pred twice (system A, system B)");
  const auto metrics = metric_list(o);
  const auto gold = load(o.gold, o);
  const auto a = load(o.preds[0], o);
  const auto b = load(o.preds[1], o);
  for (const auto* c : {&gold, &a, &b}) report_diagnostics(*c, err);
  const auto ro = report_options(o);
  const auto ra = full_report(gold, a, ro);
  const auto rb = full_report(gold, b, ro);
  if (o.out_format == "json")
    emit(comparison_to_json(ra, rb).dump(2) + "\n", o, out);
  else if (o.out_format == "tsv")
    emit(comparison_to_tsv(ra, rb, metrics, o.decimals), o, out);
  else
    emit(comparison_to_text(ra, rb, metrics, o.decimals), o, out);
  return kOk;
}

int cmd_baseline(const Options& o, std::ostream& out, std::ostream&) {
  emit(write_sem_conll(punct_baseline(load(o.input, o))), o, out);
  return kOk;
}

int cmd_convert(const Options& o, std::ostream& out, std::ostream& err) {
  const auto c = load(o.input, o);
  report_diagnostics(c, err);
  emit(write_sem_conll(c), o, out);
  return kOk;
}

int cmd_dep_encode(const Options& o, std::ostream& out, std::ostream& err) {
  const auto c = load(o.input, o);
  std::vector<Diagnostic> diags;
  std::ostringstream buf;
  write_dep_graphs(c, encoding_kind_from_string(o.encoding), buf, &diags);
  for (const auto& d : diags) err << d.to_string() << '\n';
  emit(buf.str(), o, out);
  return kOk;
}

int cmd_dep_decode(const Options& o, std::ostream& out, std::ostream&) {
  std::istringstream in(read_file(o.input));
  emit(write_sem_conll(read_dep_graphs(in, o.input, encoding_kind_from_string(o.encoding))), o,
       out);
  return kOk;
}

int cmd_split(const Options& o, std::ostream& out, std::ostream&) {
  const auto c = load(o.input, o);
  SplitSpec spec;
  spec.ratios = SplitSpec::parse_ratios(o.ratios);
  spec.seed = o.seed;
  if (!o.assignments.empty()) {
    std::istringstream in(read_file(o.assignments));
    spec.assignments = parse_assignments(in, o.assignments);
  }
  const auto split = split_corpus(c, spec);
  std::error_code ec;
  std::filesystem::create_directories(o.out_dir, ec);
  if (ec) throw IoError("cannot create " + o.out_dir + ": " + ec.message());
  auto write = [&](const std::string& name, const std::string& text) {
    const auto path = (std::filesystem::path(o.out_dir) / name).string();
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw IoError("cannot write " + path);
  };
  std::ostringstream summary, assignments;
  summary << "split\tdocuments\tsentences\tinstances\n";
  for (auto name : {SplitName::Train, SplitName::Dev, SplitName::Test}) {
    const auto& part = split.part(name);
    write(to_string(name) + ".conll", write_sem_conll(part));
    std::size_t docs = 0;
    for (const auto& [doc, s] : split.assignments) docs += s == name;
    summary << to_string(name) << '\t' << docs << '\t' << part.sentences.size() << '\t'
            << part.instance_count() << '\n';
  }
  write_assignments(split.assignments, assignments);
  write("assignments.tsv", assignments.str());
  out << summary.str();
  return kOk;
}

int cmd_stats(const Options& o, std::ostream& out, std::ostream&) {
  emit(stats_to_tsv(corpus_stats(load(o.input, o), !o.keep_punct), o.decimals), o, out);
  return kOk;
}

int cmd_patch(const Options& o, std::ostream& out, std::ostream&) {
  const auto c = load(o.input, o);
  std::istringstream in(read_file(o.patches));
  emit(write_sem_conll(apply_patches(c, parse_patches(in, o.patches))), o, out);
  return kOk;
}

int cmd_detect_coord(const Options& o, std::ostream& out, std::ostream&) {
  const auto c = load(o.input, o);
  const auto words = comma_list(o.lexicon);
  const auto drafts = detect_coordination_cues(c, std::set<std::string>(words.begin(), words.end()));
  std::ostringstream buf;
  buf << "# draft patches, review before applying (" << drafts.size() << " candidates)\n";
  if (!drafts.empty()) buf << '\n';
  write_patches(drafts, buf);
  emit(buf.str(), o, out);
  return kOk;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

int fail(std::ostream& err, const char* kind, const std::string& message, int code) {
  err << "error[" << kind << "]: " << one_line(message) << std::endl;
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Negation resolution evaluation toolkit", "negeval"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> formats = {"auto", "conll", "bioscope", "sfu"};
  auto input_flags = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Input format (auto by extension/content)")
        ->check(CLI::IsMember(formats));
    sub->add_option("--tokenizer", o.tokenizer, "Tokenizer rule file for raw-text corpora");
    sub->add_flag("--bioscope-cue-outside-scope", o.cue_outside_scope,
                  "Remove cue tokens from BioScope scopes");
  };
  auto output_flag = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write to this file instead of stdout");
  };
  auto report_flags = [&](CLI::App* sub) {
    sub->add_option("--gold", o.gold, "Gold corpus")->required();
    sub->add_option("--pred", o.preds, "Predicted corpus")->required();
    sub->add_option("--cue-match", o.cue_match, "Cue column of the summary table")
        ->check(CLI::IsMember({"exact", "partial"}));
    sub->add_option("--metrics", o.metrics, "Comma-separated metric keys");
    sub->add_option("--out", o.out_format, "Report format")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    sub->add_option("--decimals", o.decimals, "Decimals of percentages")
        ->check(CLI::Range(0, 6));
    sub->add_flag("--keep-punct", o.keep_punct, "Score punctuation tokens too");
    sub->add_flag("--cns-all-sentences", o.cns_all, "CNS over all sentences");
    input_flags(sub);
    output_flag(sub);
  };
  auto single_input = [&](CLI::App* sub) {
    sub->add_option("--input,--gold", o.input, "Input corpus")->required();
    input_flags(sub);
    output_flag(sub);
  };

  std::map<CLI::App*, int (*)(const Options&, std::ostream&, std::ostream&)> handlers;
  auto* evaluate = app.add_subcommand("evaluate", "Score predictions against gold");
  report_flags(evaluate);
  handlers[evaluate] = cmd_evaluate;
  auto* compare = app.add_subcommand("compare", "Score two systems side by side");
  report_flags(compare);
  handlers[compare] = cmd_compare;
  auto* baseline = app.add_subcommand("baseline", "Punctuation baseline predictions");
  single_input(baseline);
  handlers[baseline] = cmd_baseline;
  auto* convert = app.add_subcommand("convert", "Convert a corpus to CoNLL");
  single_input(convert);
  handlers[convert] = cmd_convert;
  auto* encode = app.add_subcommand("dep-encode", "Encode negation as dependency graphs");
  single_input(encode);
  encode->add_option("--encoding", o.encoding)->check(CLI::IsMember({"direct", "nested"}));
  handlers[encode] = cmd_dep_encode;
  auto* decode = app.add_subcommand("dep-decode", "Decode dependency graphs to CoNLL");
  decode->add_option("--input", o.input, "Graph file")->required();
  decode->add_option("--encoding", o.encoding)->check(CLI::IsMember({"direct", "nested"}));
  output_flag(decode);
  handlers[decode] = cmd_dep_decode;
  auto* split = app.add_subcommand("split", "Document-level train/dev/test split");
  split->add_option("--input,--gold", o.input, "Input corpus")->required();
  input_flags(split);
  split->add_option("--seed", o.seed);
  split->add_option("--ratios", o.ratios, "train/dev/test percentages");
  split->add_option("--assignments", o.assignments, "doc_id<TAB>split file");
  split->add_option("--out-dir", o.out_dir)->required();
  handlers[split] = cmd_split;
  auto* stats = app.add_subcommand("stats", "Corpus statistics as TSV");
  single_input(stats);
  stats->add_flag("--keep-punct", o.keep_punct, "Count punctuation in scope lengths");
  stats->add_option("--decimals", o.decimals)->check(CLI::Range(0, 6));
  handlers[stats] = cmd_stats;
  auto* patch = app.add_subcommand("patch", "Apply re-annotation patches");
  single_input(patch);
  patch->add_option("--patches", o.patches, "Patch file")->required();
  handlers[patch] = cmd_patch;
  auto* detect = app.add_subcommand("detect-coord", "Draft patches for coordination cues");
  single_input(detect);
  detect->add_option("--lexicon", o.lexicon, "Comma-separated coordination words");
  handlers[detect] = cmd_detect_coord;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    return fail(err, "usage", e.what(), kUsage);
  }

  try {
    for (const auto& [sub, handler] : handlers)
      if (sub->parsed()) return handler(o, out, err);
    return fail(err, "usage", "no subcommand", kUsage);
  } catch (const ParseError& e) {
    return fail(err, "parse", e.what(), kParse);
  } catch (const AlignmentError& e) {
    return fail(err, "alignment", e.what(), kAlignment);
  } catch (const UsageError& e) {
    return fail(err, "usage", e.what(), kUsage);
  } catch (const PatchError& e) {
    return fail(err, "patch", e.what(), kPatch);
  } catch (const GraphError& e) {
    return fail(err, "graph", e.what(), kGraph);
  } catch (const IoError& e) {
    return fail(err, "io", e.what(), kIo);
  } catch (const Error& e) {
    return fail(err, "failed", e.what(), kFailed);
  } catch (const std::exception& e) {
    return fail(err, "internal", e.what(), kInternal);
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, out, err);
}

}  // namespace negeval::cli
