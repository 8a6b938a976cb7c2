#include "commands.hpp"

#include "schublines/certificate_json.hpp"
#include "schublines/errors.hpp"
#include "schublines/inequalities.hpp"
#include "schublines/kostka.hpp"
#include "schublines/spectral.hpp"
#include "schublines/sweep.hpp"
#include "schublines/tableau.hpp"
#include "schublines/verifier.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

namespace schublines::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

const std::map<std::string, Format> kFormats{
    {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

/// Thrown for input problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<long long> parse_conditions(const std::vector<std::string>& raw) {
  if (raw.empty()) throw UsageError("expected at least one condition");
  std::vector<long long> out;
  for (const auto& s : raw) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw UsageError("condition '" + s + "' is not an integer");
    }
    out.push_back(v);
  }
  return out;
}

std::string join(std::span<const Condition> xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string fmt_sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

std::optional<std::filesystem::path> cache_file() {
  const char* dir = std::getenv("SCHUBLINES_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) / "kostka.jsonl";
}

struct Io {
  std::ostream& out;
  std::ostream& err;
};

// --- kostka -----------------------------------------------------------------

int cmd_kostka(Io io, const std::vector<std::string>& raw, bool tableaux, Format format) {
  const ConditionSequence seq(parse_conditions(raw));
  KostkaCache cache;
  const auto file = cache_file();
  if (file) cache.load_jsonl(*file);
  const BigInt k = cache.get(seq.problem());
  if (file) {
    std::filesystem::create_directories(file->parent_path());
    cache.save_jsonl(*file);
  }
  std::vector<TwoRowTableau> list;
  if (tableaux) list = enumerate_tableaux(seq);

  switch (format) {
    case Format::Text:
      io.out << to_decimal(k) << '\n';
      for (const auto& t : list) io.out << t.to_string() << '\n';
      break;
    case Format::Json: {
      json doc{{"conditions", std::vector<Condition>(seq.conditions().begin(), seq.conditions().end())},
               {"kostka", to_decimal(k)}};
      if (tableaux) {
        json arr = json::array();
        for (const auto& t : list) arr.push_back({{"row1", t.row1}, {"row2", t.row2}});
        doc["tableaux"] = std::move(arr);
      }
      io.out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      if (tableaux) {
        io.out << "index,row1,row2\n";
        for (std::size_t i = 0; i < list.size(); ++i) {
          io.out << i << ',' << join(list[i].row1, ' ') << ',' << join(list[i].row2, ' ') << '\n';
        }
      } else {
        io.out << "conditions,kostka\n" << join(seq.conditions(), ' ') << ',' << to_decimal(k) << '\n';
      }
      break;
  }
  return kOk;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(Io io, const std::vector<std::string>& raw, const std::string& cert_path,
               bool share, Format format) {
  const SchubertProblem p(parse_conditions(raw));
  if (!is_valid(p)) {
    throw InvalidProblem(ProblemRule::NotValid,
                         "problem " + p.to_string() + " is not valid: largest condition " +
                             std::to_string(p.largest()) + " exceeds n-1 = " +
                             std::to_string(n_of(p) - 1));
  }
  auto cache = std::make_shared<KostkaCache>();
  const auto file = cache_file();
  if (file) cache->load_jsonl(*file);

  Verifier verifier(true, cache);
  Certificate cert;
  try {
    cert = verifier.verify(p);
  } catch (const LemmaFailure& e) {
    io.err << "verification failed: " << e.what() << '\n';
    return kFailure;
  }
  if (auto check = validate_certificate(*cert); !check) {
    io.err << "certificate failed re-validation: " << check.reason << '\n';
    return kFailure;
  }
  if (file) {
    std::filesystem::create_directories(file->parent_path());
    cache->save_jsonl(*file);
  }

  if (!cert_path.empty()) {
    std::ofstream f(cert_path, std::ios::trunc);
    if (!f) throw UsageError("cannot write certificate to " + cert_path);
    f << serialize_certificate(*cert, share) << '\n';
  }

  const auto nodes = verifier.memo_size();
  switch (format) {
    case Format::Text:
      io.out << "certified: Galois group of " << p << " is at least alternating\n"
             << "reduced: " << cert->reduced << '\n'
             << "kostka: " << to_decimal(cert->kostka_value) << '\n'
             << "root clause: " << clause_name(cert->clause) << '\n'
             << "distinct nodes: " << nodes << '\n';
      if (!cert_path.empty()) io.out << "certificate: " << cert_path << '\n';
      break;
    case Format::Json:
      if (cert_path.empty()) {
        io.out << serialize_certificate(*cert, share) << '\n';
      } else {
        io.out << json{{"problem", std::vector<Condition>(p.conditions().begin(), p.conditions().end())},
                       {"certified", true},
                       {"kostka", to_decimal(cert->kostka_value)},
                       {"clause", std::string(clause_name(cert->clause))},
                       {"distinct_nodes", nodes},
                       {"certificate", cert_path}}
                          .dump(2)
               << '\n';
      }
      break;
    case Format::Csv:
      io.out << "problem,kostka,clause,distinct_nodes\n"
             << join(p.conditions(), ' ') << ',' << to_decimal(cert->kostka_value) << ','
             << clause_name(cert->clause) << ',' << nodes << '\n';
      break;
  }
  return kOk;
}

// --- validate ---------------------------------------------------------------

int cmd_validate(Io io, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  const Certificate cert = parse_certificate(buf.str());
  if (auto check = validate_certificate(*cert); !check) {
    io.out << "invalid: " << check.reason << '\n';
    return kFailure;
  }
  io.out << "valid: " << cert->problem << " K=" << to_decimal(cert->kostka_value) << '\n';
  return kOk;
}

// --- sweep ------------------------------------------------------------------

int cmd_sweep(Io io, std::uint32_t max_n, unsigned jobs, Format format) {
  if (max_n < 2) throw UsageError("--max-n must be at least 2");
  const auto reports = sweep(max_n, std::max(1u, jobs));
  bool all = true;
  for (const auto& r : reports) all = all && r.all_certified;

  switch (format) {
    case Format::Text:
      io.out << std::setw(4) << "n" << std::setw(12) << "problems" << std::setw(12) << "certified"
             << std::setw(12) << "seconds" << '\n';
      for (const auto& r : reports) {
        io.out << std::setw(4) << r.n << std::setw(12) << r.problems_checked << std::setw(12)
               << r.problems_checked - r.failures.size() << std::setw(12)
               << fmt_fixed(r.elapsed_seconds, 3) << '\n';
        for (const auto& f : r.failures) io.out << "  FAILED " << f << '\n';
      }
      io.out << (all ? "all problems certified" : "some problems NOT certified") << '\n';
      break;
    case Format::Json: {
      json rows = json::array();
      for (const auto& r : reports) {
        json failures = json::array();
        for (const auto& f : r.failures) {
          failures.push_back(std::vector<Condition>(f.conditions().begin(), f.conditions().end()));
        }
        rows.push_back({{"n", r.n},
                        {"problems", r.problems_checked},
                        {"certified", r.problems_checked - r.failures.size()},
                        {"all_certified", r.all_certified},
                        {"failures", failures},
                        {"seconds", r.elapsed_seconds}});
      }
      io.out << json{{"max_n", max_n}, {"all_certified", all}, {"reports", rows}}.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      io.out << "n,problems,certified,seconds\n";
      for (const auto& r : reports) {
        io.out << r.n << ',' << r.problems_checked << ',' << r.problems_checked - r.failures.size()
               << ',' << fmt_fixed(r.elapsed_seconds, 6) << '\n';
      }
      break;
  }
  return all ? kOk : kFailure;
}

// --- table1 -----------------------------------------------------------------

int cmd_table1(Io io, std::uint32_t max_m, Format format) {
  std::vector<A2Row> rows;
  for (std::uint32_t m = 0; m <= max_m; ++m) rows.push_back(a2_row(m));
  switch (format) {
    case Format::Text:
      io.out << std::setw(4) << "m" << std::setw(14) << "K(2^m,4)" << std::setw(14) << "K(2^m,1,1)"
             << std::setw(14) << "difference" << '\n';
      for (const auto& r : rows) {
        io.out << std::setw(4) << r.m << std::setw(14) << to_decimal(r.merged) << std::setw(14)
               << to_decimal(r.decremented) << std::setw(14) << to_decimal(r.difference) << '\n';
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"m", r.m},
                       {"k_2m_4", to_decimal(r.merged)},
                       {"k_2m_1_1", to_decimal(r.decremented)},
                       {"difference", to_decimal(r.difference)}});
      }
      io.out << json{{"rows", arr}}.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      io.out << "m,k_2m_4,k_2m_1_1,difference\n";
      for (const auto& r : rows) {
        io.out << r.m << ',' << to_decimal(r.merged) << ',' << to_decimal(r.decremented) << ','
               << to_decimal(r.difference) << '\n';
      }
      break;
  }
  return kOk;
}

// --- integral / bounds-a2 -----------------------------------------------------

int cmd_integral(Io io, const std::vector<std::string>& raw, std::size_t nodes, Format format) {
  const SchubertProblem p(parse_conditions(raw));
  const auto r = kostka_integral(p, nodes);
  const bool rounds = *r.abs_residual < 0.5;
  switch (format) {
    case Format::Text:
      io.out << "estimate: " << fmt_fixed(r.value, 9) << '\n'
             << "exact: " << to_decimal(*r.exact) << '\n'
             << "residual: " << fmt_sci(*r.abs_residual) << '\n'
             << "nodes: " << r.nodes << '\n';
      break;
    case Format::Json:
      io.out << json{{"problem", std::vector<Condition>(p.conditions().begin(), p.conditions().end())},
                     {"estimate", r.value},
                     {"exact", to_decimal(*r.exact)},
                     {"residual", *r.abs_residual},
                     {"nodes", r.nodes}}
                    .dump(2)
             << '\n';
      break;
    case Format::Csv:
      io.out << "problem,estimate,exact,residual,nodes\n"
             << join(p.conditions(), ' ') << ',' << fmt17(r.value) << ',' << to_decimal(*r.exact)
             << ',' << fmt17(*r.abs_residual) << ',' << r.nodes << '\n';
      break;
  }
  return rounds ? kOk : kFailure;
}

int cmd_bounds_a2(Io io, std::uint32_t m, Format format) {
  if (m < 1) throw UsageError("--m must be at least 1");
  const auto b = a2_bound_integrals(m);
  switch (format) {
    case Format::Text:
      io.out << "m: " << m << '\n'
             << "lhs: " << fmt_fixed(b.lhs, 6) << '\n'
             << "rhs: " << fmt_fixed(b.rhs, 6) << '\n'
             << "rhs_integral: " << fmt_fixed(b.rhs_integral, 6) << '\n'
             << "holds: " << (b.holds ? "true" : "false") << '\n';
      break;
    case Format::Json:
      io.out << json{{"m", m}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"rhs_integral", b.rhs_integral},
                     {"holds", b.holds}}
                    .dump(2)
             << '\n';
      break;
    case Format::Csv:
      io.out << "m,lhs,rhs,rhs_integral,holds\n"
             << m << ',' << fmt17(b.lhs) << ',' << fmt17(b.rhs) << ',' << fmt17(b.rhs_integral) << ','
             << (b.holds ? "true" : "false") << '\n';
      break;
  }
  return b.holds ? kOk : kFailure;
}

// --- plotdata -----------------------------------------------------------------

int cmd_plotdata(Io io, const std::string& function, std::uint32_t m, std::size_t samples,
                 Format format) {
  if (samples < 2) throw UsageError("--samples must be at least 2");
  auto eval = [&](double t) -> double {
    if (function == "F") return F_eval(t);
    if (function == "lambda") return lambda_eval(2, t);
    return std::pow(lambda_eval(2, t), m) * F_eval(t);
  };
  const double step = std::numbers::pi / 2.0 / static_cast<double>(samples - 1);
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = i + 1 == samples ? std::numbers::pi / 2.0 : step * static_cast<double>(i);
    pts.emplace_back(t, eval(t));
  }
  switch (format) {
    case Format::Text:
      for (const auto& [t, v] : pts) io.out << fmt17(t) << ' ' << fmt17(v) << '\n';
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& [t, v] : pts) arr.push_back({{"theta", t}, {"value", v}});
      io.out << json{{"function", function}, {"m", m}, {"points", arr}}.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      io.out << "theta,value\n";
      for (const auto& [t, v] : pts) io.out << fmt17(t) << ',' << fmt17(v) << '\n';
      break;
  }
  return kOk;
}

void add_format(CLI::App* sub, Format& format) {
  sub->add_option("--format", format, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("text");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert problems of lines: Kostka numbers, Galois certificates, spectral checks",
               "schublines"};
  app.require_subcommand(1);
  Io io{out, err};

  std::vector<std::string> conditions;
  Format format = Format::Text;
  bool tableaux = false;
  std::string cert_path;
  bool share = false;
  std::uint32_t max_n = 0;
  unsigned jobs = 1;
  std::uint32_t max_m = 16;
  std::size_t nodes = 0;
  std::uint32_t m = 8;
  std::string function;
  std::size_t samples = 201;
  std::string path;

  auto* kostka_cmd = app.add_subcommand("kostka", "Exact Kostka number K(a) of a Schubert problem");
  kostka_cmd->add_option("conditions", conditions, "Condition codimensions a_1 ... a_m")->required();
  kostka_cmd->add_flag("--tableaux", tableaux, "Also list the tableaux");
  add_format(kostka_cmd, format);

  auto* verify_cmd =
      app.add_subcommand("verify", "Certify that the Galois group is at least alternating");
  verify_cmd->add_option("conditions", conditions, "Condition codimensions")->required();
  verify_cmd->add_option("--cert", cert_path, "Write the certificate JSON to this file");
  verify_cmd->add_flag("--share-subtrees", share,
                       "Write repeated subtrees once and refer to them by id");
  add_format(verify_cmd, format);

  auto* validate_cmd = app.add_subcommand("validate", "Re-check a certificate JSON file");
  validate_cmd->add_option("path", path, "Certificate file")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Certify every problem in P^n for n = 2..N");
  sweep_cmd->add_option("--max-n", max_n, "Largest ambient dimension N")->required();
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->default_val(1);
  add_format(sweep_cmd, format);

  auto* table_cmd = app.add_subcommand("table1", "K(2^m,4), K(2^m,1,1) and their difference");
  table_cmd->add_option("--max-m", max_m, "Last row")->default_val(16);
  add_format(table_cmd, format);

  auto* integral_cmd = app.add_subcommand("integral", "Quadrature estimate of the Kostka integral");
  integral_cmd->add_option("conditions", conditions, "Condition codimensions")->required();
  integral_cmd->add_option("--nodes", nodes, "Quadrature nodes (default 4*sum+64)");
  add_format(integral_cmd, format);

  auto* bounds_cmd =
      app.add_subcommand("bounds-a2", "Integral bounds proving K(2^m,4) > K(2^m,1,1)");
  bounds_cmd->add_option("--m", m, "Exponent m >= 1")->required();
  add_format(bounds_cmd, format);

  auto* plot_cmd = app.add_subcommand("plotdata", "Samples of F, lambda_2 or lambda_2^m F on [0, pi/2]");
  plot_cmd->add_option("--function", function, "F, lambda or product")
      ->required()
      ->check(CLI::IsMember({"F", "lambda", "product"}));
  plot_cmd->add_option("--m", m, "Exponent for product")->default_val(8);
  plot_cmd->add_option("--samples", samples, "Number of grid points")->default_val(201);
  add_format(plot_cmd, format);

  std::vector<const char*> argv{"schublines"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*kostka_cmd) return cmd_kostka(io, conditions, tableaux, format);
    if (*verify_cmd) return cmd_verify(io, conditions, cert_path, share, format);
    if (*validate_cmd) return cmd_validate(io, path);
    if (*sweep_cmd) return cmd_sweep(io, max_n, jobs, format);
    if (*table_cmd) return cmd_table1(io, max_m, format);
    if (*integral_cmd) return cmd_integral(io, conditions, nodes, format);
    if (*bounds_cmd) return cmd_bounds_a2(io, m, format);
    if (*plot_cmd) return cmd_plotdata(io, function, m, samples, format);
  } catch (const InvalidProblem& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CertificateFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace schublines::cli
