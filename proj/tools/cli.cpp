#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "infratop/enumerate.hpp"
#include "infratop/genops.hpp"
#include "infratop/implications.hpp"
#include "infratop/io.hpp"
#include "infratop/theorems.hpp"

namespace infratop::cli {

namespace {

// Usage problems detected after CLI11 parsing (unknown ids, bad sets, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string set;
  std::string which;
  std::string class_name;
  std::vector<std::string> theorem_ids;
  std::string from;
  std::string not_to;
  std::string shard = "0/1";
  std::string report;
  unsigned n = 0;
  unsigned jobs = 1;
  bool complete = false;
  bool strict = false;
  bool jsonl = false;
  bool json = false;
  bool dot = false;
  bool duals = false;
  bool upto = false;
  bool up_to_iso = false;
  bool count_only = false;
  bool literal = false;
};

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

DeltaReading reading_of(const Options& o) { return o.literal ? DeltaReading::literal : DeltaReading::dual; }

unsigned job_count(const Options& o) {
  if (o.jobs != 0) return o.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string joined(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

ClassId class_arg(const std::string& name) {
  if (auto c = ClassId::parse(name)) return *c;
  throw UsageError("unknown class '" + name + "'; valid classes: " + joined(class_names(), ", "));
}

InfraSpace load_space(const std::string& path, bool complete, std::ostream& out) {
  auto file = read_space_file(path);
  if (complete) {
    const auto closed = meet_closure(file.ground, file.opens);
    for (auto s : closed) {
      if (!file.opens.contains(s)) out << "added " << file.ground.format(s) << "\n";
    }
    file.opens = closed;
  }
  auto result = validate(file.ground, file.opens);
  if (auto* e = std::get_if<ValidationError>(&result)) {
    throw UsageError("not an infra topology:\n" + e->describe(file.ground));
  }
  return std::get<InfraSpace>(std::move(result));
}

SubsetMask set_arg(const InfraSpace& s, const std::string& text) {
  try {
    return s.ground().parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<InfraSpace> universe(const Options& o, std::ostream& out) {
  if (!o.file.empty()) return {load_space(o.file, false, out)};
  if (o.n < 1 || o.n > kMaxEnumGroundSize) {
    throw UsageError("the enumerated universe needs 1 <= n <= " + std::to_string(kMaxEnumGroundSize));
  }
  if (o.upto) return enumerate_up_to(o.n, job_count(o));
  EnumConfig cfg;
  cfg.n = o.n;
  return enumerate_spaces(cfg, job_count(o));
}

std::string describe_space(const InfraSpace& s) { return format_family(s.ground(), s.opens()); }

std::string describe_tuple(const InfraSpace& s, const WitnessTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != 0) out += ", ";
    out += s.ground().format(t[i]);
  }
  return out + ")";
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto s = load_space(o.file, o.complete, out);
  out << "valid infra topology on " << s.ground().format(s.full()) << " with " << s.opens().size()
      << " open sets\n";
  if (o.complete) out << space_to_json(s.ground(), s.opens());
  return kOk;
}

int cmd_op(const Options& o, std::ostream& out) {
  const auto s = load_space(o.file, false, out);
  const auto a = set_arg(s, o.set);
  const auto& w = o.which;
  SubsetMask r;
  if (!o.class_name.empty()) {
    const auto c = class_arg(o.class_name);
    if (c.closed) throw UsageError("--class needs an open class; its family plays the role of the opens");
    const FamilyView view(s.ground(), family_of(s, c, reading_of(o)));
    if (w == "interior") {
      r = f_interior(view, a);
    } else if (w == "closure") {
      r = f_closure(view, a);
    } else if (w == "derived") {
      r = f_derived(view, a);
    } else if (w == "exterior") {
      r = f_exterior(view, a);
    } else if (w == "boundary") {
      r = f_boundary(view, a);
    } else {
      throw UsageError("--which " + w + " is not available with --class");
    }
  } else if (w == "interior") {
    r = interior(s, a);
  } else if (w == "closure") {
    r = closure(s, a);
  } else if (w == "exterior") {
    r = exterior(s, a);
  } else if (w == "boundary") {
    r = boundary(s, a);
  } else if (w == "derived") {
    r = derived_set(s, a);
  } else if (w == "delta-interior") {
    r = delta_interior(s, a);
  } else if (w == "delta-closure") {
    r = delta_closure(s, a, reading_of(o));
  } else {
    r = delta_frontier(s, a, reading_of(o));
  }
  out << s.ground().format(r) << "\n";
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto s = load_space(o.file, false, out);
  const auto a = set_arg(s, o.set);
  for (const auto& c : classify(s, a, reading_of(o))) out << c.name() << "\n";
  return kOk;
}

int cmd_families(const Options& o, std::ostream& out) {
  const auto s = load_space(o.file, false, out);
  const auto c = class_arg(o.class_name);
  out << format_family(s.ground(), family_of(s, c, reading_of(o))) << "\n";
  return kOk;
}

std::vector<const TheoremEntry*> selected_theorems(const Options& o) {
  std::vector<const TheoremEntry*> out;
  std::vector<std::string> unknown;
  for (const auto& id : o.theorem_ids) {
    if (const auto* e = find_theorem(id)) {
      out.push_back(e);
    } else {
      unknown.push_back(id);
    }
  }
  if (!unknown.empty()) {
    std::vector<std::string> ids;
    for (const auto& e : registry()) ids.push_back(e.id);
    throw UsageError("unknown theorem id(s) " + joined(unknown, ", ") + "; valid ids: " + joined(ids, " "));
  }
  return out;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.file.empty() == (o.n == 0)) throw UsageError("check needs exactly one of FILE or --enumerated N");
  const auto spaces = universe(o, out);
  CheckAllOptions opts;
  opts.jobs = job_count(o);
  opts.reading = reading_of(o);
  opts.keep_verdicts = o.jsonl;
  opts.theorems = selected_theorems(o);
  const auto report = check_all(spaces, opts);

  bool strict_failure = false;
  for (const auto& a : report.theorems) {
    if (a.expectation != Expectation::known_fail && !a.holds()) strict_failure = true;
  }
  if (o.jsonl) {
    for (const auto& v : report.verdicts) out << verdict_to_jsonl(v) << "\n";
  } else {
    std::size_t width = 8;
    for (const auto& a : report.theorems) width = std::max(width, a.theorem_id.size());
    std::size_t failing = 0;
    bool met = true;
    for (const auto& a : report.theorems) {
      out << std::left << std::setw(static_cast<int>(width) + 2) << a.theorem_id << std::setw(12)
          << to_string(a.expectation) << std::setw(6) << (a.holds() ? "pass" : "fail") << a.spaces_passed << "/"
          << report.space_count << " spaces";
      if (a.first_failure) {
        const auto& v = *a.first_failure;
        out << "  witness " << describe_tuple(v.space, v.witnesses.front());
        if (report.space_count > 1) out << " in " << describe_space(v.space);
      }
      if (!a.expectation_met()) out << "  [expectation not met]";
      out << "\n";
      if (!a.holds()) ++failing;
      met = met && a.expectation_met();
    }
    out << report.theorems.size() << " claims on " << report.space_count << " spaces: "
        << report.theorems.size() - failing << " hold, " << failing << " fail; expectations "
        << (met ? "met" : "NOT met") << "\n";
  }
  return o.strict && strict_failure ? kStrictFailure : kOk;
}

Shard parse_shard(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument(text);
    Shard s;
    s.index = static_cast<std::uint32_t>(std::stoul(text.substr(0, slash)));
    s.total = static_cast<std::uint32_t>(std::stoul(text.substr(slash + 1)));
    return s;
  } catch (const std::exception&) {
    throw UsageError("--shard expects INDEX/TOTAL, e.g. 0/4");
  }
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  EnumConfig cfg;
  cfg.n = o.n;
  cfg.up_to_iso = o.up_to_iso;
  cfg.count_only = o.count_only;
  cfg.shard = parse_shard(o.shard);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.count_only) {
    out << count_spaces(cfg, job_count(o)) << "\n";
    return kOk;
  }
  const auto g = GroundSet::letters(cfg.n);
  for (auto code : collect_codes(cfg, job_count(o))) {
    if (o.jsonl) {
      out << space_to_jsonl(space_of_code(code, cfg.n)) << "\n";
    } else {
      out << format_family(g, family_of_code(code)) << "\n";
    }
  }
  return kOk;
}

int cmd_hunt(const Options& o, std::ostream& out) {
  if (o.file.empty() == (o.n == 0)) throw UsageError("hunt needs exactly one of FILE or --n N");
  const auto from = class_arg(o.from);
  const auto not_to = class_arg(o.not_to);
  if (from == not_to) throw UsageError("--from and --not-to must differ");
  const auto spaces = universe(o, out);
  if (auto w = hunt(spaces, from, not_to, reading_of(o))) {
    out << "witness " << w->space.ground().format(w->subset) << " in " << describe_space(w->space) << "\n";
  } else {
    out << "none: every " << from.name() << " set is " << not_to.name() << " on all " << spaces.size()
        << " spaces\n";
  }
  return kOk;
}

int cmd_implications(const Options& o, std::ostream& out) {
  if (o.file.empty() == (o.n == 0)) throw UsageError("implications needs exactly one of FILE or --n N");
  const auto spaces = universe(o, out);
  const auto m = implication_matrix(spaces, o.duals ? all_classes() : open_classes(), reading_of(o), job_count(o));
  if (o.dot) {
    out << to_dot(m);
  } else if (o.json) {
    out << matrix_to_json(m);
  } else {
    for (std::size_t i = 0; i < m.classes.size(); ++i) {
      for (std::size_t j = 0; j < m.classes.size(); ++j) {
        if (i == j) continue;
        const auto& c = m.cells[i][j];
        out << m.classes[i].name() << " => " << m.classes[j].name() << ": ";
        if (c.holds) {
          out << "holds\n";
        } else {
          out << "fails (" << c.counterexamples << " counterexamples; " << c.witness->space.ground().format(c.witness->subset)
              << " in " << describe_space(c.witness->space) << ")\n";
        }
      }
    }
  }
  return kOk;
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_report(const Options& o, const std::vector<std::string>& args, int code, const std::string& output,
                  double millis) {
  nlohmann::ordered_json doc;
  doc["command"] = args;
  const std::string input = o.file.empty() ? joined(args, " ") : read_bytes(o.file);
  doc["input_digest"] = "fnv1a64:" + hex64(fnv1a(input));
  doc["exit_code"] = code;
  doc["output"] = output;
  doc["timing_ms"] = millis;
  std::ofstream f(o.report);
  if (!f) throw UsageError("cannot write report " + o.report);
  f << doc.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite infra-topological spaces: operators, generalized open classes, claim checking"};
  app.name("infratop");
  app.require_subcommand(1);
  Options o;
  app.add_option("--report", o.report, "Also write a JSON run report to this file");

  const std::vector<std::string> ops = {"interior",       "closure",       "exterior",      "boundary",
                                        "derived",        "delta-interior", "delta-closure", "delta-frontier"};

  auto* validate_cmd = app.add_subcommand("validate", "Check that a space file is an infra topology");
  validate_cmd->add_option("file", o.file, "Space file (JSON)")->required();
  validate_cmd->add_flag("--complete", o.complete, "Close the family under pairwise meets first");

  auto* op_cmd = app.add_subcommand("op", "Apply an operator to a subset");
  op_cmd->add_option("file", o.file, "Space file (JSON)")->required();
  op_cmd->add_option("--set", o.set, "Subset as comma-separated names")->required();
  op_cmd->add_option("--which", o.which, "Operator")->required()->check(CLI::IsMember(ops));
  op_cmd->add_option("--class", o.class_name, "Use this open class as the opens (generic kernel)");

  auto* classify_cmd = app.add_subcommand("classify", "List every class a subset belongs to");
  classify_cmd->add_option("file", o.file, "Space file (JSON)")->required();
  classify_cmd->add_option("--set", o.set, "Subset as comma-separated names")->required();

  auto* families_cmd = app.add_subcommand("families", "Print the family of a class");
  families_cmd->add_option("file", o.file, "Space file (JSON)")->required();
  families_cmd->add_option("--class", o.class_name, "Class name")->required();

  auto* check_cmd = app.add_subcommand("check", "Decide registry claims on a space or an enumerated universe");
  check_cmd->add_option("file", o.file, "Space file (JSON)");
  check_cmd->add_option("--enumerated", o.n, "All labeled spaces on N points");
  check_cmd->add_flag("--upto", o.upto, "With --enumerated: all spaces on 1..N points");
  check_cmd->add_option("--theorem", o.theorem_ids, "Registry id (repeatable); default: all");
  check_cmd->add_flag("--strict", o.strict, "Exit 2 if a CHECK or FORCED claim fails");
  check_cmd->add_flag("--jsonl", o.jsonl, "One verdict per (space, claim) as JSON lines");
  check_cmd->add_option("--jobs", o.jobs, "Worker threads (0: all cores)");

  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate infra topologies on n points");
  enum_cmd->add_option("--n", o.n, "Ground size, 1..5")->required();
  enum_cmd->add_flag("--up-to-iso", o.up_to_iso, "One representative per isomorphism class");
  enum_cmd->add_flag("--count-only", o.count_only, "Print only the count");
  enum_cmd->add_flag("--jsonl", o.jsonl, "JSON lines output");
  enum_cmd->add_option("--jobs", o.jobs, "Worker threads (0: all cores)");
  enum_cmd->add_option("--shard", o.shard, "INDEX/TOTAL partition of the search");

  auto* hunt_cmd = app.add_subcommand("hunt", "Find a minimal set in one class but not another");
  hunt_cmd->add_option("file", o.file, "Space file (JSON)");
  hunt_cmd->add_option("--n", o.n, "All labeled spaces on N points");
  hunt_cmd->add_flag("--upto", o.upto, "With --n: all spaces on 1..N points");
  hunt_cmd->add_option("--from", o.from, "Class the witness belongs to")->required();
  hunt_cmd->add_option("--not-to", o.not_to, "Class the witness avoids")->required();

  auto* impl_cmd = app.add_subcommand("implications", "Empirical implication matrix between classes");
  impl_cmd->add_option("file", o.file, "Space file (JSON)");
  impl_cmd->add_option("--n", o.n, "All labeled spaces on N points");
  impl_cmd->add_flag("--upto", o.upto, "With --n: all spaces on 1..N points");
  impl_cmd->add_flag("--dot", o.dot, "Graphviz output");
  impl_cmd->add_flag("--json", o.json, "JSON output");
  impl_cmd->add_flag("--duals", o.duals, "Include the closed classes");
  impl_cmd->add_option("--jobs", o.jobs, "Worker threads (0: all cores)");

  for (auto* sub : {op_cmd, classify_cmd, families_cmd, check_cmd, hunt_cmd, impl_cmd}) {
    sub->add_flag("--literal-delta-closure", o.literal, "Delta closure as the meet of regular-open supersets");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  std::ostringstream buffer;
  int code = kOk;
  try {
    if (validate_cmd->parsed()) {
      code = cmd_validate(o, buffer);
    } else if (op_cmd->parsed()) {
      code = cmd_op(o, buffer);
    } else if (classify_cmd->parsed()) {
      code = cmd_classify(o, buffer);
    } else if (families_cmd->parsed()) {
      code = cmd_families(o, buffer);
    } else if (check_cmd->parsed()) {
      code = cmd_check(o, buffer);
    } else if (enum_cmd->parsed()) {
      code = cmd_enumerate(o, buffer);
    } else if (hunt_cmd->parsed()) {
      code = cmd_hunt(o, buffer);
    } else {
      code = cmd_implications(o, buffer);
    }
  } catch (const ForcedInvariantViolated& e) {
    err << "internal error: " << e.what() << "\n";
    code = kForcedViolated;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    code = kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    code = kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    code = kUsage;
  }
  out << buffer.str();
  if (!o.report.empty()) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    try {
      write_report(o, args, code, buffer.str(), ms);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n";
      if (code == kOk) code = kUsage;
    }
  }
  return code;
}

}  // namespace infratop::cli
