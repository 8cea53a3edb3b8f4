#include "kcatalan/cli.hpp"

#include "kcatalan/checks.hpp"
#include "kcatalan/counting.hpp"
#include "kcatalan/lattice.hpp"
#include "kcatalan/oracle.hpp"
#include "kcatalan/periodicity.hpp"
#include "kcatalan/render.hpp"
#include "kcatalan/transfer.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace kcatalan::cli {
namespace {

// Failures that map to exit code 2.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int k = 0;
  std::optional<int> n;
  std::optional<int> s;
  std::optional<int> p;
  std::optional<int> rows;
  std::string weights = "ones";
  std::optional<std::int64_t> mod;
  std::string format = "table";
  std::string period_format = "json";
  std::optional<std::string> bfile;
  std::uint64_t max_paths = oracle::default_path_cap;
  std::size_t max_steps = 1u << 24;
  std::string kind = "height";
  std::string suite;
  bool padded = false;
};

const std::vector<std::string> formats{"table", "csv", "json", "bfile"};

void add_k(CLI::App* cmd, Options& o) { cmd->add_option("--k", o.k, "dimension k >= 2")->required(); }
void add_mod(CLI::App* cmd, Options& o) { cmd->add_option("--mod", o.mod, "reduce modulo m >= 1"); }
void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "table, csv, json or bfile")
      ->check(CLI::IsMember(formats));
  cmd->add_option("--bfile", o.bfile, "write n a(n) lines to PATH");
}
void add_weights(CLI::App* cmd, Options& o) {
  cmd->add_option("--weights", o.weights, "weight spec, e.g. ones, odd-squares, list:1,2,3");
}

std::string bfile_text(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(i + 1) + ' ' + values[i].get_str() + '\n';
  }
  return out;
}

void write_bfile(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Refusal("cannot open b-file for writing: " + path);
  file << text;
  file.flush();
  if (!file) throw Refusal("failed writing b-file: " + path);
}

// Emits a sequence a(1..) in the requested format, or writes it as a b-file.
void emit_sequence(const Options& o, Json header, const std::vector<Integer>& values,
                   std::ostream& out) {
  if (o.bfile) {
    write_bfile(*o.bfile, bfile_text(values));
    return;
  }
  if (o.format == "json") {
    header["values"] = strings_of(values);
    out << header.dump() << '\n';
  } else if (o.format == "csv") {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    if (!values.empty()) out << '\n';
  } else if (o.format == "bfile") {
    out << bfile_text(values);
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << values[i] << '\n';
  }
}

void emit_scalar(const Options& o, Json header, const Integer& value, std::ostream& out) {
  if (o.bfile) {
    write_bfile(*o.bfile, "1 " + value.get_str() + "\n");
    return;
  }
  if (o.format == "json") {
    header["values"] = Json::array({value.get_str()});
    out << header.dump() << '\n';
  } else if (o.format == "bfile") {
    out << "1 " << value << '\n';
  } else {
    out << value << '\n';
  }
}

void emit_triangle(const Options& o, const Triangle& t, std::ostream& out) {
  std::vector<Integer> flat;
  for (const auto& row : t.rows) flat.insert(flat.end(), row.begin(), row.end());
  if (o.bfile) {
    write_bfile(*o.bfile, bfile_text(flat));
    return;
  }
  if (o.format == "json") {
    out << to_json(t).dump() << '\n';
  } else if (o.format == "bfile") {
    out << bfile_text(flat);
  } else if (o.format == "csv") {
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
  } else {
    for (std::size_t n = 0; n < t.rows.size(); ++n) {
      out << n + 1 << " |";
      for (const auto& x : t.rows[n]) out << ' ' << x;
      out << '\n';
    }
  }
}

// Shared by catalan / weighted / bounded: --rows gives n = 1..rows, otherwise --n.
template <typename Compute, typename Sequence>
void scalar_or_sequence(const Options& o, Json header, Compute single, Sequence sequence,
                        std::ostream& out) {
  if (o.rows) {
    if (*o.rows < 0) throw std::invalid_argument("--rows must be >= 0");
    header["n"] = *o.rows;
    std::vector<Integer> all = sequence(*o.rows);
    all.erase(all.begin());  // drop n = 0
    emit_sequence(o, std::move(header), all, out);
    return;
  }
  if (!o.n) throw std::invalid_argument("either --n or --rows is required");
  header["n"] = *o.n;
  emit_scalar(o, std::move(header), single(*o.n), out);
}

Json base_header(const Options& o) {
  Json h;
  h["k"] = o.k;
  return h;
}

void cmd_catalan(const Options& o, std::ostream& out) {
  scalar_or_sequence(
      o, base_header(o), [&](int n) { return catalan_exact(o.k, n, o.mod); },
      [&](int rows) {
        std::vector<Integer> all;
        for (int n = 0; n <= rows; ++n) all.push_back(catalan_exact(o.k, n, o.mod));
        return all;
      },
      out);
}

void cmd_weighted(const Options& o, std::ostream& out) {
  const WeightVector wv = parse_weight_spec(o.weights);
  scalar_or_sequence(
      o, base_header(o), [&](int n) { return weighted_catalan(o.k, n, wv, o.mod); },
      [&](int rows) { return diagonal_counts(o.k, std::nullopt, rows, wv, o.mod); }, out);
}

void cmd_bounded(const Options& o, std::ostream& out) {
  if (!o.s) throw std::invalid_argument("bounded requires --s");
  if (*o.s < 0) throw std::invalid_argument("--s must be >= 0");
  const WeightVector wv = parse_weight_spec(o.weights);
  Json header = base_header(o);
  header["s"] = *o.s;
  scalar_or_sequence(
      o, std::move(header), [&](int n) { return bounded_weighted_catalan(o.k, *o.s, n, wv, o.mod); },
      [&](int rows) { return diagonal_counts(o.k, *o.s, rows, wv, o.mod); }, out);
}

void cmd_triangle(const Options& o, std::ostream& out) {
  const bool height = o.kind == "height";
  Json header = base_header(o);
  header["kind"] = o.kind;
  // A single entry when --n is combined with --s (height) or --p (narayana).
  if (o.n && (height ? o.s.has_value() : o.p.has_value())) {
    header["n"] = *o.n;
    if (height) {
      header["s"] = *o.s;
      emit_scalar(o, std::move(header), exact_height_count(o.k, *o.s, *o.n, o.mod), out);
    } else {
      header["p"] = *o.p;
      emit_scalar(o, std::move(header), narayana_count(o.k, *o.p, *o.n, o.mod), out);
    }
    return;
  }
  if (!o.rows) throw std::invalid_argument("triangle requires --rows (or --n with --s/--p)");
  const Triangle t =
      height ? height_triangle(o.k, *o.rows, o.mod) : narayana_triangle(o.k, *o.rows, o.mod, o.padded);
  emit_triangle(o, t, out);
}

void cmd_matrix(const Options& o, std::ostream& out) {
  if (!o.s) throw std::invalid_argument("matrix requires --s");
  const WeightVector wv = parse_weight_spec(o.weights);
  const TransferMatrix system = build_transfer_matrix(o.k, *o.s, wv, o.mod);
  if (o.format == "json") {
    out << to_json(system).dump() << '\n';
    return;
  }
  const char sep = o.format == "csv" ? ',' : ' ';
  out << "states:";
  for (const auto& z : system.states) {
    out << " (";
    for (std::size_t i = 0; i < z.size(); ++i) out << (i ? "," : "") << z[i];
    out << ')';
  }
  out << '\n';
  for (std::size_t i = 0; i < system.entries.size(); ++i) {
    for (std::size_t j = 0; j < system.entries.size(); ++j) {
      out << (j ? std::string(1, sep) : "") << system.entries(i, j);
    }
    out << '\n';
  }
}

void cmd_period(const Options& o, std::ostream& out) {
  if (!o.mod) throw std::invalid_argument("period requires --mod");
  if (*o.mod < 2) throw std::invalid_argument("--mod must be >= 2 for period detection");
  const WeightVector wv = parse_weight_spec(o.weights);
  Json result = base_header(o);
  std::optional<std::string> hypothesis;
  Matrix system;
  if (o.s) {
    result["s"] = *o.s;
    system = build_transfer_matrix(o.k, *o.s, wv, o.mod).entries;
    hypothesis = "bounded";
  } else {
    const auto form = periodic_form(o.k, wv, *o.mod);
    if (!form) throw Refusal("no periodicity hypothesis applies to these weights modulo " +
                             std::to_string(*o.mod));
    result["s"] = form->cap;
    system = form->system.entries;
    hypothesis = to_string(form->hypothesis);
  }
  const PeriodReport report = detect_cycle(system, *o.mod, o.max_steps);
  result["period_report"] = to_json(report, hypothesis);
  if (o.period_format == "json") {
    out << result.dump() << '\n';
  } else {
    for (const auto& [key, value] : result["period_report"].items()) {
      out << key << ' ' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

void cmd_enumerate(const Options& o, std::ostream& out) {
  if (!o.n) throw std::invalid_argument("enumerate requires --n");
  const Integer count = o.s ? bounded_weighted_catalan(o.k, *o.s, *o.n, WeightVector::ones())
                            : catalan_exact(o.k, *o.n);
  if (count > Integer(static_cast<unsigned long>(o.max_paths))) {
    throw Refusal("refusing to enumerate " + count.get_str() + " paths (--max-paths " +
                  std::to_string(o.max_paths) + ")");
  }
  PathEnumerator it(o.k, *o.n, o.s);
  if (o.format == "json") {
    Json paths = Json::array();
    while (it.next()) paths.push_back(it.steps());
    Json result = base_header(o);
    result["n"] = *o.n;
    if (o.s) result["s"] = *o.s;
    result["values"] = std::move(paths);
    out << result.dump() << '\n';
    return;
  }
  const char* sep = o.format == "csv" ? "," : " ";
  while (it.next()) {
    const auto& steps = it.steps();
    for (std::size_t i = 0; i < steps.size(); ++i) out << (i ? sep : "") << steps[i];
    out << '\n';
  }
}

int cmd_check(const Options& o, std::ostream& out) {
  checks::SuiteOptions options;
  options.max_paths = o.max_paths;
  const auto results = checks::run_suite(o.suite, options);
  std::size_t passed = 0;
  for (const auto& r : results) {
    checks::print(out, r);
    if (r.passed) ++passed;
  }
  out << "suite " << o.suite << ": " << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() ? ok : usage_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted, bounded and exact-height multidimensional Catalan numbers", "kcatalan"};
  app.require_subcommand(1);
  Options o;

  auto* catalan = app.add_subcommand("catalan", "closed-form C_{k,n}");
  add_k(catalan, o);
  catalan->add_option("--n", o.n);
  catalan->add_option("--rows", o.rows, "sequence n = 1..rows");
  add_mod(catalan, o);
  add_format(catalan, o);

  auto* weighted = app.add_subcommand("weighted", "weighted Catalan numbers");
  add_k(weighted, o);
  weighted->add_option("--n", o.n);
  weighted->add_option("--rows", o.rows, "sequence n = 1..rows");
  add_weights(weighted, o);
  add_mod(weighted, o);
  add_format(weighted, o);

  auto* bounded = app.add_subcommand("bounded", "height-bounded weighted Catalan numbers");
  add_k(bounded, o);
  bounded->add_option("--s", o.s, "height cap")->required();
  bounded->add_option("--n", o.n);
  bounded->add_option("--rows", o.rows, "sequence n = 1..rows");
  add_weights(bounded, o);
  add_mod(bounded, o);
  add_format(bounded, o);

  auto* triangle = app.add_subcommand("triangle", "exact-height or peak-count triangles");
  triangle->add_option("--kind", o.kind)->check(CLI::IsMember({"height", "narayana"}));
  add_k(triangle, o);
  triangle->add_option("--rows", o.rows, "rows n = 1..rows");
  triangle->add_option("--n", o.n, "single entry: row");
  triangle->add_option("--s", o.s, "single entry: exact height");
  triangle->add_option("--p", o.p, "single entry: peak count");
  triangle->add_flag("--padded", o.padded, "pad narayana rows to a common width");
  add_mod(triangle, o);
  add_format(triangle, o);

  auto* matrix = app.add_subcommand("matrix", "transfer matrix over normalized states");
  add_k(matrix, o);
  matrix->add_option("--s", o.s, "height cap")->required();
  add_weights(matrix, o);
  add_mod(matrix, o);
  matrix->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* period = app.add_subcommand("period", "period and preperiod modulo m");
  add_k(period, o);
  period->add_option("--s", o.s, "use the s-bounded system instead of a divisibility hypothesis");
  add_weights(period, o);
  add_mod(period, o);
  period->add_option("--max-steps", o.max_steps, "orbit step budget");
  period->add_option("--format", o.period_format)->check(CLI::IsMember(formats));

  auto* enumerate = app.add_subcommand("enumerate", "list balanced ballot paths");
  add_k(enumerate, o);
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--s", o.s, "height cap");
  enumerate->add_option("--max-paths", o.max_paths, "refuse above this many paths");
  enumerate->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* check = app.add_subcommand("check", "run an acceptance batch");
  check->add_option("--suite", o.suite)->required()->check(CLI::IsMember(checks::suite_names()));
  check->add_option("--max-paths", o.max_paths, "oracle path cap");

  std::vector<const char*> argv{"kcatalan"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "kcatalan: " << e.what() << "\n";
    return usage_error;
  }
  try {
    if (catalan->parsed()) cmd_catalan(o, out);
    if (weighted->parsed()) cmd_weighted(o, out);
    if (bounded->parsed()) cmd_bounded(o, out);
    if (triangle->parsed()) cmd_triangle(o, out);
    if (matrix->parsed()) cmd_matrix(o, out);
    if (period->parsed()) cmd_period(o, out);
    if (enumerate->parsed()) cmd_enumerate(o, out);
    if (check->parsed()) return cmd_check(o, out);
  } catch (const std::invalid_argument& e) {
    err << "kcatalan: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "kcatalan: " << e.what() << "\n";
    return refused;
  }
  return ok;
}

}  // namespace kcatalan::cli
