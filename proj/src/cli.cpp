#include "qint/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qint/coin.hpp"
#include "qint/integrate.hpp"
#include "qint/reference.hpp"

namespace qint::cli {

namespace {

struct HelpRequested {
  std::string text;
};

std::string command_name(Command c) {
  switch (c) {
    case Command::kIntegrate: return "integrate";
    case Command::kCoin: return "coin";
    case Command::kVerify: return "verify";
    case Command::kFtc: return "ftc";
  }
  return "?";
}

Command command_from_name(const std::string& name) {
  if (name == "integrate") return Command::kIntegrate;
  if (name == "coin") return Command::kCoin;
  if (name == "verify") return Command::kVerify;
  if (name == "ftc") return Command::kFtc;
  throw std::invalid_argument("job: unknown command \"" + name + "\"");
}

std::string format_name(Format f) {
  switch (f) {
    case Format::kText: return "text";
    case Format::kJson: return "json";
    case Format::kCsv: return "csv";
  }
  return "?";
}

Format format_from_name(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw std::invalid_argument("field \"format\": expected text, json, or csv");
}

std::vector<double> parse_csv_doubles(const std::string& body, const char* field) {
  std::vector<double> out;
  std::stringstream ss(body);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      out.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("field \"") + field + "\": bad number \"" + token +
                                  "\"");
    }
  }
  if (out.empty()) {
    throw std::invalid_argument(std::string("field \"") + field + "\": empty list");
  }
  return out;
}

}  // namespace

Json parse_measure_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') {
    Json j = Json::parse(arg, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("field \"measure\": malformed JSON");
    return j;
  }
  auto colon = arg.find(':');
  std::string head = arg.substr(0, colon);
  if (head == "lebesgue2" || head == "lebesgue") {
    if (colon != std::string::npos) {
      throw std::invalid_argument("field \"measure\": \"" + head + "\" takes no parameter");
    }
    return Json{{"kind", head}};
  }
  if (head == "destructive") {
    if (colon == std::string::npos) {
      throw std::invalid_argument("field \"measure\": expected destructive:<offset>");
    }
    return Json{{"kind", "destructive"}, {"offset", std::stod(arg.substr(colon + 1))}};
  }
  if (head == "coin") {
    if (colon == std::string::npos) {
      throw std::invalid_argument("field \"measure\": expected coin:<n>");
    }
    return Json{{"kind", "coin"}, {"n", std::stoi(arg.substr(colon + 1))}};
  }
  if (head == "squared") {
    if (colon == std::string::npos) {
      throw std::invalid_argument("field \"measure\": expected squared:<w,...>");
    }
    return Json{{"kind", "squared"},
                {"weights", parse_csv_doubles(arg.substr(colon + 1), "measure")}};
  }
  throw std::invalid_argument("field \"measure\": unknown measure \"" + arg + "\"");
}

Json parse_fn_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') {
    Json j = Json::parse(arg, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("field \"fn\": malformed JSON");
    return j;
  }
  auto colon = arg.find(':');
  std::string head = arg.substr(0, colon);
  if (head == "monomial") {
    if (colon == std::string::npos) {
      throw std::invalid_argument("field \"fn\": expected monomial:<n>");
    }
    return Json{{"kind", "monomial"}, {"n", std::stoi(arg.substr(colon + 1))}};
  }
  if (head == "poly") {
    if (colon == std::string::npos) {
      throw std::invalid_argument("field \"fn\": expected poly:<c0,c1,...>");
    }
    return Json{{"kind", "poly"}, {"coeffs", parse_csv_doubles(arg.substr(colon + 1), "fn")}};
  }
  if (head == "exp" || head == "tent" || head == "cos" || head == "sin" ||
      head == "cosh_sqrt2") {
    if (colon != std::string::npos) {
      throw std::invalid_argument("field \"fn\": \"" + head + "\" takes no parameter");
    }
    return Json{{"kind", head}};
  }
  throw std::invalid_argument("field \"fn\": unknown function \"" + arg + "\"");
}

Json job_to_json(const JobSpec& spec) {
  Json j;
  j["command"] = command_name(spec.command);
  j["measure"] = spec.measure;
  j["fn"] = spec.fn;
  j["from"] = spec.from;
  j["to"] = spec.to;
  j["center"] = spec.center;
  if (spec.tol) {
    j["tol"] = *spec.tol;
  } else {
    j["tol"] = nullptr;
  }
  j["digits"] = spec.digits;
  j["n_max"] = spec.coin_n_max;
  j["format"] = format_name(spec.format);
  j["out"] = spec.out_path;
  return j;
}

JobSpec job_from_json(const Json& j) {
  JobSpec spec;
  if (!j.is_object() || !j.contains("command")) {
    throw std::invalid_argument("job: field \"command\" is required");
  }
  spec.command = command_from_name(j["command"].get<std::string>());
  if (j.contains("measure")) spec.measure = j["measure"];
  if (j.contains("fn")) spec.fn = j["fn"];
  if (j.contains("from")) spec.from = j["from"].get<double>();
  if (j.contains("to")) spec.to = j["to"].get<double>();
  if (j.contains("center")) spec.center = j["center"].get<double>();
  if (j.contains("tol") && !j["tol"].is_null()) spec.tol = j["tol"].get<double>();
  if (j.contains("digits")) spec.digits = j["digits"].get<int>();
  if (j.contains("n_max")) spec.coin_n_max = j["n_max"].get<int>();
  if (j.contains("format")) spec.format = format_from_name(j["format"].get<std::string>());
  if (j.contains("out")) spec.out_path = j["out"].get<std::string>();
  return spec;
}

JobSpec parse_args(const std::vector<std::string>& args) {
  JobSpec spec;
  std::string measure_arg = "lebesgue2";
  std::string fn_arg = "monomial:1";
  std::string format_arg = "text";
  double tol_arg = -1.0;

  CLI::App app{"quantum measures and the quantum integral"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol_arg, "quadrature absolute tolerance");
    sub->add_option("--format", format_arg, "output format: text, json, or csv");
    sub->add_option("--out", spec.out_path, "write the document to this path");
    sub->add_option("--digits", spec.digits, "decimal digits (default: shortest round-trip)");
  };

  CLI::App* integrate = app.add_subcommand("integrate", "evaluate one quantum integral");
  integrate->add_option("--measure", measure_arg,
                        "lebesgue2 | destructive:<d> | lebesgue | coin:<n> | squared:<w,..> | JSON");
  integrate->add_option("--fn", fn_arg, "monomial:<n> | poly:<c0,..> | exp | tent | ... | JSON");
  integrate->add_option("--from", spec.from, "lower bound of the restriction window");
  integrate->add_option("--to", spec.to, "upper bound of the restriction window");
  integrate->add_option("--center", spec.center, "center of the integral split point");
  add_common(integrate);

  CLI::App* coin = app.add_subcommand("coin", "exact quantum-coin expectation table");
  coin->add_option("--n-max", spec.coin_n_max, "largest flip count");
  add_common(coin);

  CLI::App* verify = app.add_subcommand("verify", "engine versus the closed-form catalog");
  add_common(verify);

  CLI::App* ftc = app.add_subcommand("ftc", "fundamental-theorem property suite");
  add_common(ftc);

  std::vector<std::string> argv_store;
  argv_store.push_back("qint");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }

  if (integrate->parsed()) spec.command = Command::kIntegrate;
  if (coin->parsed()) spec.command = Command::kCoin;
  if (verify->parsed()) spec.command = Command::kVerify;
  if (ftc->parsed()) spec.command = Command::kFtc;

  spec.measure = parse_measure_arg(measure_arg);
  spec.fn = parse_fn_arg(fn_arg);
  spec.format = format_from_name(format_arg);

  if (tol_arg > 0.0) {
    spec.tol = tol_arg;
  } else if (const char* env = std::getenv("QINT_TOL")) {
    try {
      spec.tol = std::stod(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("QINT_TOL: bad number \"" + std::string(env) + "\"");
    }
  }
  return spec;
}

QuadratureConfig config_for(const JobSpec& spec) {
  QuadratureConfig cfg;
  if (spec.tol) {
    if (!(*spec.tol > 0.0)) throw std::invalid_argument("field \"tol\": must be positive");
    cfg.abs_tol = *spec.tol;
  }
  return cfg;
}

namespace {

RunResult run_integrate(const JobSpec& spec) {
  QMeasure mu = measure_from_json(spec.measure);
  QuadratureConfig cfg = config_for(spec);

  if (!(spec.from >= 0.0 && spec.from <= 1.0)) {
    throw std::invalid_argument("field \"from\": bounds must lie in [0,1]");
  }
  if (!(spec.to >= 0.0 && spec.to <= 1.0)) {
    throw std::invalid_argument("field \"to\": bounds must lie in [0,1]");
  }
  if (!(spec.from < spec.to)) {
    throw std::invalid_argument("field \"from\": lower bound must be below \"to\"");
  }

  bool full_window = spec.from == 0.0 && spec.to == 1.0;
  double value = 0.0;
  if (spec.fn.contains("kind") && spec.fn["kind"] == "simple") {
    if (!full_window) {
      throw std::invalid_argument(
          "field \"from\"/\"to\": restriction windows are not supported for simple functions");
    }
    SimpleFunction f = simple_function_from_json(spec.fn);
    value = integrate_simple(f, mu, spec.center);
  } else {
    PiecewiseMonotoneFn f = make_function(function_spec_from_json(spec.fn));
    value = full_window
                ? integrate(f, mu, spec.center, cfg)
                : integrate_restricted(f, IntervalSet(spec.from, spec.to), mu, spec.center, cfg);
  }

  RunResult result;
  switch (spec.format) {
    case Format::kText:
      result.document = format_double(value, spec.digits) + "\n";
      break;
    case Format::kCsv:
      result.document = "value\n" + format_double(value, spec.digits) + "\n";
      break;
    case Format::kJson: {
      Json doc;
      doc["version"] = kVersion;
      doc["job"] = job_to_json(spec);
      doc["value"] = value;
      result.document = doc.dump(2) + "\n";
      break;
    }
  }
  return result;
}

RunResult run_coin(const JobSpec& spec) {
  if (spec.coin_n_max < 1) throw std::invalid_argument("field \"n_max\": must be >= 1");
  int digits = spec.digits >= 0 ? spec.digits : 10;
  std::vector<RatioRow> rows = ratio_table(spec.coin_n_max, digits);

  RunResult result;
  switch (spec.format) {
    case Format::kCsv: {
      std::string doc = "n,a_n,ratio\n";
      for (const RatioRow& r : rows) {
        doc += std::to_string(r.n) + "," + r.a_n.to_fraction_string() + "," + r.ratio + "\n";
      }
      result.document = doc;
      break;
    }
    case Format::kText: {
      std::ostringstream os;
      os << "n\ta_n\t2*a_n/n\n";
      for (const RatioRow& r : rows) {
        os << r.n << "\t" << r.a_n.to_fraction_string() << "\t" << r.ratio << "\n";
      }
      result.document = os.str();
      break;
    }
    case Format::kJson: {
      Json doc;
      doc["version"] = kVersion;
      doc["job"] = job_to_json(spec);
      Json arr = Json::array();
      for (const RatioRow& r : rows) {
        arr.push_back(Json{{"n", r.n}, {"a_n", r.a_n.to_fraction_string()}, {"ratio", r.ratio}});
      }
      doc["rows"] = arr;
      result.document = doc.dump(2) + "\n";
      break;
    }
  }
  return result;
}

Json report_to_json(const reference::CheckReport& r) {
  Json j;
  j["id"] = r.id;
  j["params"] = Json{{"a", r.params.a}, {"b", r.params.b}, {"n", r.params.n}};
  j["engine"] = r.engine_value;
  j["closed_form"] = r.closed_value;
  j["abs_difference"] = r.abs_difference;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  return j;
}

RunResult run_verify(const JobSpec& spec) {
  QuadratureConfig cfg = config_for(spec);
  constexpr int kSamplesPerEntry = 5;
  reference::VerifySummary summary = reference::run_verification(cfg, kSamplesPerEntry);

  RunResult result;
  result.exit_code = summary.all_pass ? 0 : 1;
  switch (spec.format) {
    case Format::kJson: {
      Json doc;
      doc["version"] = kVersion;
      doc["job"] = job_to_json(spec);
      doc["catalog_entries"] = summary.catalog_entries;
      doc["entries_covered"] = summary.entries_covered;
      Json reports = Json::array();
      for (const auto& r : summary.reports) reports.push_back(report_to_json(r));
      doc["reports"] = reports;
      Json witnesses = Json::array();
      for (const auto& w : summary.witnesses) {
        witnesses.push_back(Json{{"id", w.id},
                                 {"observed", w.observed},
                                 {"required", w.required},
                                 {"holds", w.holds}});
      }
      doc["witnesses"] = witnesses;
      doc["all_pass"] = summary.all_pass;
      result.document = doc.dump(2) + "\n";
      break;
    }
    case Format::kCsv: {
      std::string doc = "id,a,b,n,engine,closed,abs_difference,tolerance,pass\n";
      for (const auto& r : summary.reports) {
        doc += r.id + "," + format_double(r.params.a) + "," + format_double(r.params.b) + "," +
               std::to_string(r.params.n) + "," + format_double(r.engine_value) + "," +
               format_double(r.closed_value) + "," + format_double(r.abs_difference) + "," +
               format_double(r.tolerance) + "," + (r.pass ? "true" : "false") + "\n";
      }
      for (const auto& w : summary.witnesses) {
        doc += w.id + ",,,," + format_double(w.observed) + "," + format_double(w.required) +
               ",,," + (w.holds ? "true" : "false") + "\n";
      }
      result.document = doc;
      break;
    }
    case Format::kText: {
      std::ostringstream os;
      for (const auto& r : summary.reports) {
        os << (r.pass ? "PASS " : "FAIL ") << r.id << "  a=" << format_double(r.params.a)
           << " b=" << format_double(r.params.b) << " n=" << r.params.n
           << "  engine=" << format_double(r.engine_value)
           << " closed=" << format_double(r.closed_value)
           << " |diff|=" << format_double(r.abs_difference) << "\n";
      }
      for (const auto& w : summary.witnesses) {
        os << (w.holds ? "PASS " : "FAIL ") << w.id << "  observed=" << format_double(w.observed)
           << " required=" << format_double(w.required) << "  (" << w.description << ")\n";
      }
      os << "catalog coverage: " << summary.entries_covered << "/" << summary.catalog_entries
         << " entries, " << summary.reports.size() << " checks\n";
      os << "result: " << (summary.all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
      result.document = os.str();
      break;
    }
  }
  return result;
}

struct FtcRow {
  std::string check;
  std::string fn;
  double b = 0.0;
  double got = 0.0;
  double want = 0.0;
  double tol = 0.0;
  bool ok = false;
};

RunResult run_ftc(const JobSpec& spec) {
  QuadratureConfig cfg = config_for(spec);
  std::vector<FtcRow> rows;

  auto push = [&rows](std::string check, std::string fn, double b, double got, double want,
                      double tol) {
    rows.push_back(
        {std::move(check), std::move(fn), b, got, want, tol, std::abs(got - want) <= tol});
  };

  struct Named {
    const char* name;
    PiecewiseMonotoneFn fn;
  };
  std::vector<Named> monotone;
  monotone.push_back({"x", monomial_fn(1)});
  monotone.push_back({"x^2", monomial_fn(2)});
  monotone.push_back({"x^3", monomial_fn(3)});
  monotone.push_back({"exp", exp_fn()});
  monotone.push_back({"sin", sin_fn()});
  monotone.push_back({"cos", cos_fn()});

  for (const Named& m : monotone) {
    for (double b : {0.3, 0.5, 0.8}) {
      double got = reference::ftc_second_derivative(m.fn, b, 1e-2, cfg);
      push("half_second_derivative", m.name, b, got, m.fn(b), 1e-3);
    }
  }

  {
    PiecewiseMonotoneFn tent = tent_fn();
    double got = reference::ftc_second_derivative(tent, 0.75, 1e-2, cfg);
    push("tent_counterexample_gap", "tent", 0.75, std::abs(got - tent(0.75)), 1.0, 1e-3);
  }

  for (const char* name : {"x", "exp", "cos"}) {
    PiecewiseMonotoneFn f = name == std::string("x")   ? monomial_fn(1)
                            : name == std::string("exp") ? exp_fn()
                                                         : cos_fn();
    double got = reference::derivative_at_zero(f, 1e-3, cfg);
    push("derivative_at_zero", name, 0.0, got, 0.0, 5e-3);
  }

  {
    QMeasure mu = QMeasure::lebesgue_squared();
    std::vector<Named> doubles;
    doubles.push_back({"cos", cos_fn()});
    doubles.push_back({"sin", sin_fn()});
    doubles.push_back({"cosh_sqrt2", cosh_sqrt2_fn()});
    for (const Named& m : doubles) {
      for (double b : {0.5, 1.0}) {
        double got = reference::ftc_double_integral(m.fn, b, cfg);
        double want = integrate_restricted(m.fn, IntervalSet(0.0, b), mu, 0.0, cfg);
        push("double_integral_form", m.name, b, got, want, 1e-6);
      }
    }
  }

  for (int n = 1; n <= 4; ++n) {
    auto r = reference::decomposition_check(monomial_fn(n), 0.3, 0.9, cfg);
    push("decomposition", "x^" + std::to_string(n), 0.9, r.engine_value, r.closed_value,
         r.tolerance);
  }
  {
    auto r = reference::decomposition_check(exp_fn(), 0.2, 0.7, cfg);
    push("decomposition", "exp", 0.7, r.engine_value, r.closed_value, r.tolerance);
  }

  {
    auto r = reference::additivity_check(monomial_fn(1), monomial_fn(2), 1.0, cfg);
    push("additivity", "x + x^2", 1.0, r.engine_value, r.closed_value, r.tolerance);
    auto r2 = reference::additivity_check(monomial_fn(1), exp_fn(), 0.8, cfg);
    push("additivity", "x + exp", 0.8, r2.engine_value, r2.closed_value, r2.tolerance);
  }

  bool all_ok = true;
  for (const FtcRow& r : rows) all_ok = all_ok && r.ok;

  RunResult result;
  result.exit_code = all_ok ? 0 : 1;
  switch (spec.format) {
    case Format::kJson: {
      Json doc;
      doc["version"] = kVersion;
      doc["job"] = job_to_json(spec);
      Json arr = Json::array();
      for (const FtcRow& r : rows) {
        arr.push_back(Json{{"check", r.check},
                           {"fn", r.fn},
                           {"b", r.b},
                           {"got", r.got},
                           {"want", r.want},
                           {"tolerance", r.tol},
                           {"ok", r.ok}});
      }
      doc["rows"] = arr;
      doc["all_ok"] = all_ok;
      result.document = doc.dump(2) + "\n";
      break;
    }
    case Format::kCsv: {
      std::string doc = "check,fn,b,got,want,tolerance,ok\n";
      for (const FtcRow& r : rows) {
        doc += r.check + "," + r.fn + "," + format_double(r.b) + "," + format_double(r.got) +
               "," + format_double(r.want) + "," + format_double(r.tol) + "," +
               (r.ok ? "true" : "false") + "\n";
      }
      result.document = doc;
      break;
    }
    case Format::kText: {
      std::ostringstream os;
      for (const FtcRow& r : rows) {
        os << (r.ok ? "PASS " : "FAIL ") << r.check << "  f=" << r.fn
           << " b=" << format_double(r.b) << "  got=" << format_double(r.got)
           << " want=" << format_double(r.want) << " tol=" << format_double(r.tol) << "\n";
      }
      os << "result: " << (all_ok ? "ALL PASS" : "FAILURES PRESENT") << "\n";
      result.document = os.str();
      break;
    }
  }
  return result;
}

}  // namespace

RunResult run_job(const JobSpec& spec) {
  switch (spec.command) {
    case Command::kIntegrate: return run_integrate(spec);
    case Command::kCoin: return run_coin(spec);
    case Command::kVerify: return run_verify(spec);
    case Command::kFtc: return run_ftc(spec);
  }
  throw std::invalid_argument("job: unknown command");
}

int main_entry(int argc, const char* const* argv) {
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    JobSpec spec = parse_args(args);
    RunResult result = run_job(spec);
    if (spec.out_path.empty()) {
      std::cout << result.document;
    } else {
      std::ofstream out(spec.out_path, std::ios::binary);
      if (!out) {
        std::cerr << "qint: cannot open output path \"" << spec.out_path << "\"\n";
        return 1;
      }
      out << result.document;
    }
    return result.exit_code;
  } catch (const HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qint: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qint: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qint::cli
