#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace boolgb::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Writes to --out atomically (temp file + rename), or to `out`.
void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out.empty() || config.out == "-") {
    out << text;
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(config.out);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot open " + tmp.string() + " for writing");
    file << text;
    if (!file.flush()) throw Error("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

bool looks_like_json(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

GeneratorSet to_mode(const GeneratorSet& f, Mode mode) {
  std::vector<Polynomial> polys;
  for (const auto& p : f.polynomials()) {
    polys.push_back(mode == Mode::BooleanRing ? to_boolean(p) : to_full_ring(p));
  }
  return GeneratorSet(std::move(polys), f.n(), mode, f.order());
}

// Reduced basis of a generator set with the configured engine. Full keeps
// the ideal as given (unless the input lives in the Boolean ring), Boolean
// answers in the Boolean ring, Both answers in the full ring with the field
// polynomials adjoined after checking the engines agree.
GroebnerBasis compute_basis(const GeneratorSet& f, const RunConfig& config,
                            ReductionStats* stats) {
  const auto& limits = config.caps.buchberger;
  switch (config.engine) {
    case Engine::Full:
      if (f.mode() == Mode::BooleanRing) return field_closed_basis(f, Engine::Full, limits, stats);
      return reduced_groebner_basis(f, limits, stats);
    case Engine::Boolean:
      return reduced_groebner_basis(to_mode(f, Mode::BooleanRing), limits, stats);
    case Engine::Both:
      return field_closed_basis(f, Engine::Both, limits, stats);
  }
  return reduced_groebner_basis(f, limits, stats);
}

std::string basis_text(const GroebnerBasis& basis) {
  std::ostringstream text;
  text << "# n=" << basis.n << " mode=" << to_string(basis.mode) << '\n';
  for (const auto& f : basis.elements) text << format_poly(f, basis.order) << '\n';
  return text.str();
}

void require_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (config.format == a) return;
  }
  throw CLI::ValidationError("--format", "unsupported format '" + config.format + "' for " +
                                             config.command);
}

struct LoadedBasis {
  GroebnerBasis basis;
  std::optional<GeneratorSet> generators;  // absent for JSON dumps
};

LoadedBasis load_basis(const RunConfig& config) {
  std::string text = read_input(config.input);
  std::istringstream in(text);
  if (looks_like_json(text)) return {read_basis_json(in), std::nullopt};
  GeneratorSet f = read_generator_file(in, config.order);
  GroebnerBasis basis = compute_basis(f, config, nullptr);
  return {std::move(basis), std::move(f)};
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

struct Check {
  std::string id;
  std::string description;
  std::string status;  // PASS, FAIL, EXPECTED, SKIPPED
  std::string detail;
};

}  // namespace

Caps parse_caps(const std::string& spec, Caps base) {
  std::string normalized = spec;
  for (char& c : normalized) {
    if (c == ',' || c == ';') c = ' ';
  }
  std::istringstream in(normalized);
  std::string item;
  while (in >> item) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("malformed cap '" + item + "'");
    std::string key = item.substr(0, eq);
    std::uint64_t value = 0;
    try {
      value = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error("malformed cap value in '" + item + "'");
    }
    if (value == 0) throw Error("caps must be positive: '" + item + "'");
    if (key == "max_pairs" || key == "pairs") {
      base.buchberger.max_pairs = value;
    } else if (key == "max_basis" || key == "basis") {
      base.buchberger.max_basis = value;
    } else if (key == "max_vars" || key == "points") {
      base.enumeration.max_vars = static_cast<std::uint32_t>(value);
    } else if (key == "max_n") {
      base.max_n = static_cast<std::uint32_t>(value);
    } else {
      throw Error("unknown cap '" + key + "'");
    }
  }
  return base;
}

std::string csv_row(const GrowthRecord& row) {
  std::ostringstream line;
  line << row.n << ',' << row.input_count << ',' << row.input_bitsize << ','
       << row.input_max_degree << ',';
  if (row.gb_count) {
    line << *row.gb_count;
  } else {
    line << "incomplete";
  }
  line << ',' << row.predicted_gb_count << ',';
  if (row.solution_count) line << *row.solution_count;
  line << ',' << row.predicted_solution_count << ',' << std::fixed << std::setprecision(3)
       << std::chrono::duration<double, std::milli>(row.wall_time).count();
  return line.str();
}

int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_format(config, {"text"});
  Mode mode = config.engine == Engine::Boolean ? Mode::BooleanRing : Mode::FullRing;
  GeneratorSet f = make_family(config.family, {config.n, mode, config.order, config.caps.max_n});
  std::ostringstream text;
  write_generator_file(text, f);
  emit(config, out, text.str());
  std::ostream& log = config.out.empty() ? err : out;
  log << "family=" << config.family << " n=" << config.n << " mode=" << to_string(mode)
      << " count=" << f.size() << " bitsize=" << input_bitsize(f)
      << " max_degree=" << max_degree(f) << '\n';
  return kOk;
}

int cmd_gb(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_format(config, {"json", "text"});
  std::string text = read_input(config.input);
  std::istringstream in(text);
  GeneratorSet f = read_generator_file(in, config.order);
  ReductionStats stats;
  GroebnerBasis basis;
  try {
    basis = compute_basis(f, config, &stats);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n' << e.stats().to_key_values();
    return kResourceLimit;
  }
  if (config.format == "text") {
    emit(config, out, basis_text(basis));
  } else {
    std::ostringstream dump;
    write_basis_json(dump, basis);
    emit(config, out, dump.str());
  }
  if (config.stats) err << stats.to_key_values() << "basis_size=" << basis.size() << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream&) {
  require_format(config, {"text", "json"});
  const std::uint32_t n = config.n;
  const InstanceParams params{n, Mode::FullRing, config.order, config.caps.max_n};
  std::vector<Check> checks{
      {"V1", "Sol(H_n) = Sol(G_n) by exhaustive enumeration", "SKIPPED", ""},
      {"V2", "G_n is a Groebner basis; reduced exactly when n > 1", "SKIPPED", ""},
      {"V3", "reduced basis of H_n has 6n+3^n elements and equals G_n", "SKIPPED", ""},
      {"V4", "standard monomials = |Sol(H_n)| = 4^n-3^n", "SKIPPED", ""},
  };

  std::optional<GeneratorSet> h, g;
  try {
    h = make_H(params);
    g = make_G(params);
  } catch (const ResourceLimit& e) {
    for (auto& c : checks) c.detail = e.what();
  }

  std::optional<std::uint64_t> solution_count;
  std::optional<GroebnerBasis> basis;
  if (h && g) {
    try {
      SolutionSet sol_h = enumerate_solutions(*h, config.caps.enumeration);
      SolutionSet sol_g = enumerate_solutions(*g, config.caps.enumeration);
      solution_count = sol_h.size();
      bool equal = sol_h == sol_g;
      checks[0].status = equal ? "PASS" : "FAIL";
      checks[0].detail = "|Sol(H)|=" + std::to_string(sol_h.size()) +
                         " |Sol(G)|=" + std::to_string(sol_g.size());
    } catch (const TooManyVariables& e) {
      checks[0].detail = e.what();
    }

    const bool is_gb = is_groebner_basis(g->polynomials(), config.order);
    const bool minimal = is_minimal_basis(g->polynomials(), config.order);
    const bool reduced = is_reduced_basis(g->polynomials(), config.order);
    const bool expected_reduced = n > 1;
    checks[1].detail = std::string("groebner=") + yes_no(is_gb) + " minimal=" + yes_no(minimal) +
                       " reduced=" + yes_no(reduced);
    if (!is_gb || reduced != expected_reduced) {
      checks[1].status = "FAIL";
    } else {
      checks[1].status = n > 1 ? "PASS" : "EXPECTED";
      if (n == 1) checks[1].detail += " (x1 divides x1*y1; reducedness needs n > 1)";
    }

    try {
      basis = field_closed_basis(*h, config.engine, config.caps.buchberger);
      const bool same = canonical_strings(basis->elements) == canonical_strings(g->polynomials());
      const std::uint64_t predicted = predicted_gb_size(n);
      checks[2].detail = "gb=" + std::to_string(basis->size()) +
                         " predicted=" + std::to_string(predicted) + " equals_G=" + yes_no(same);
      if (n == 1) {
        checks[2].status = "EXPECTED";
        checks[2].detail += " (the count holds for n > 1)";
      } else {
        checks[2].status = (basis->size() == predicted && same) ? "PASS" : "FAIL";
      }
    } catch (const ResourceLimit& e) {
      checks[2].detail = e.what();
    } catch (const Error& e) {
      checks[2].status = "FAIL";
      checks[2].detail = e.what();
    }

    if (basis && solution_count) {
      try {
        const std::uint64_t standard = count_standard_monomials(*basis, n);
        const std::uint64_t predicted = predicted_solution_count(n);
        checks[3].status =
            (standard == *solution_count && standard == predicted) ? "PASS" : "FAIL";
        checks[3].detail = "standard=" + std::to_string(standard) +
                           " solutions=" + std::to_string(*solution_count) +
                           " predicted=" + std::to_string(predicted);
      } catch (const ResourceLimit& e) {
        checks[3].detail = e.what();
      } catch (const NotZeroDimensional& e) {
        checks[3].status = "FAIL";
        checks[3].detail = e.what();
      }
    } else {
      checks[3].detail = "needs V1 and V3";
    }
  }

  bool failed = false, skipped = false;
  for (const auto& c : checks) {
    failed |= c.status == "FAIL";
    skipped |= c.status == "SKIPPED";
  }

  std::ostringstream report;
  if (config.format == "json") {
    ordered_json doc;
    doc["n"] = n;
    doc["order"] = to_string(config.order.scheme);
    doc["engine"] = to_string(config.engine);
    doc["checks"] = ordered_json::array();
    for (const auto& c : checks) {
      doc["checks"].push_back(
          {{"id", c.id}, {"description", c.description}, {"status", c.status}, {"detail", c.detail}});
    }
    report << doc.dump(2) << '\n';
  } else {
    report << "# verify n=" << n << " order=" << to_string(config.order.scheme)
           << " engine=" << to_string(config.engine) << '\n';
    for (const auto& c : checks) {
      report << c.id << ' ' << std::left << std::setw(9) << c.status << c.description;
      if (!c.detail.empty()) report << " [" << c.detail << ']';
      report << '\n';
    }
  }
  emit(config, out, report.str());
  if (failed) return kVerificationFailed;
  if (skipped) return kResourceLimit;
  return kOk;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_format(config, {"csv", "json"});
  const std::uint32_t first = config.n == 0 ? 2 : config.n;
  const std::uint32_t last = config.n_max.value_or(config.n == 0 ? 5 : first);
  if (last < first) throw CLI::ValidationError("--n-max", "n-range is empty");

  std::vector<GrowthRecord> rows;
  for (std::uint32_t n = first; n <= last; ++n) {
    rows.push_back(measure_growth(n, config.order, config.engine, config.caps.buchberger,
                                  config.caps.enumeration, config.caps.max_n));
    err << "n=" << n << " done\n";
  }

  bool incomplete = false, mismatch = false;
  for (const auto& r : rows) {
    incomplete |= !r.gb_count;
    mismatch |= r.gb_count && *r.gb_count != r.predicted_gb_count;
  }

  std::ostringstream text;
  if (config.format == "json") {
    ordered_json doc = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row;
      row["n"] = r.n;
      row["inputCount"] = r.input_count;
      row["inputBitsize"] = r.input_bitsize;
      row["inputMaxDegree"] = r.input_max_degree;
      row["gbCount"] = r.gb_count ? ordered_json(*r.gb_count) : ordered_json("incomplete");
      row["predictedGbCount"] = r.predicted_gb_count;
      row["solutionCount"] = r.solution_count ? ordered_json(*r.solution_count) : ordered_json();
      row["predictedSolutionCount"] = r.predicted_solution_count;
      row["wallTimeMs"] = std::chrono::duration<double, std::milli>(r.wall_time).count();
      doc.push_back(std::move(row));
    }
    text << doc.dump(2) << '\n';
  } else {
    text << kCsvHeader << '\n';
    for (const auto& r : rows) text << csv_row(r) << '\n';
  }
  emit(config, out, text.str());
  if (mismatch) return kVerificationFailed;
  if (incomplete) return kResourceLimit;
  return kOk;
}

int cmd_nf(const RunConfig& config, std::ostream& out, std::ostream&) {
  require_format(config, {"text"});
  LoadedBasis loaded = load_basis(config);
  const GroebnerBasis& basis = loaded.basis;
  Polynomial f = parse_poly(config.poly, basis.n, basis.mode);
  emit(config, out, format_poly(normal_form(f, basis.elements, basis.order), basis.order) + "\n");
  return kOk;
}

int cmd_member(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_format(config, {"text"});
  LoadedBasis loaded = load_basis(config);
  const GroebnerBasis& basis = loaded.basis;
  Polynomial f = parse_poly(config.poly, basis.n, basis.mode);
  const bool member = ideal_membership(f, basis);
  emit(config, out, std::string(yes_no(member)) + "\n");

  if (config.oracle) {
    // Prefer the original generators: they are independent of the basis.
    GeneratorSet reference = loaded.generators && loaded.generators->mode() == basis.mode
                                 ? *loaded.generators
                                 : GeneratorSet(basis.elements, basis.n, basis.mode, basis.order);
    if (!contains_field_polynomials(reference)) {
      reference = GeneratorSet(basis.elements, basis.n, basis.mode, basis.order);
    }
    const bool by_evaluation = membership_by_evaluation(f, reference, config.caps.enumeration);
    if (by_evaluation != member) {
      err << "oracle disagrees: evaluation says " << yes_no(by_evaluation) << '\n';
      return kVerificationFailed;
    }
    err << "oracle agrees\n";
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases over F2 and the H_n / G_n blowup family", "boolgb"};
  app.require_subcommand(1);
  RunConfig config;
  std::string order = "deglex";
  std::string engine = "full";
  std::string family = "H";
  std::optional<std::uint64_t> max_pairs, max_basis;

  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", order, "Monomial order")
        ->check(CLI::IsMember({"deglex", "degrevlex"}));
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--engine", engine, "Groebner engine")
        ->check(CLI::IsMember({"full", "boolean", "both"}));
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--max-pairs", max_pairs, "Cap on generated critical pairs")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-basis", max_basis, "Cap on basis insertions")
        ->check(CLI::PositiveNumber);
  };
  auto add_output = [&](CLI::App* sub, const std::string& default_format,
                        std::vector<std::string> formats) {
    config.format.clear();
    sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", config.out, "Output file (written atomically)");
    sub->callback([&config, default_format] {
      if (config.format.empty()) config.format = default_format;
    });
  };

  auto* gen = app.add_subcommand("gen", "Write a generator family to a file");
  gen->add_option("--n", config.n, "Instance size")->required()->check(CLI::PositiveNumber);
  gen->add_option("--family", family, "Family")->check(CLI::IsMember({"H", "G", "S", "L", "T", "P"}));
  add_order(gen);
  add_engine(gen);
  add_output(gen, "text", {"text"});

  auto* gb = app.add_subcommand("gb", "Compute the reduced Groebner basis of a generator file");
  gb->add_option("input", config.input, "Generator-set file ('-' for stdin)")->required();
  add_order(gb);
  add_engine(gb);
  add_caps(gb);
  gb->add_flag("--stats", config.stats, "Print key=value statistics to stderr");
  add_output(gb, "json", {"json", "text"});

  auto* verify = app.add_subcommand("verify", "Check the H_n / G_n identities for one n");
  verify->add_option("--n", config.n, "Instance size")->required()->check(CLI::PositiveNumber);
  add_order(verify);
  add_engine(verify);
  add_caps(verify);
  add_output(verify, "text", {"text", "json"});

  auto* bench = app.add_subcommand("bench", "Growth table for a range of n");
  bench->add_option("--n", config.n, "First n (default 2)")->check(CLI::PositiveNumber);
  bench->add_option("--n-max", config.n_max, "Last n (default 5, or --n)")
      ->check(CLI::PositiveNumber);
  add_order(bench);
  add_engine(bench);
  add_caps(bench);
  add_output(bench, "csv", {"csv", "json"});

  for (auto [name, help] : {std::pair{"nf", "Normal form of a polynomial"},
                            std::pair{"member", "Ideal membership of a polynomial"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("basis", config.input, "Basis dump (JSON) or generator-set file")->required();
    sub->add_option("poly", config.poly, "Polynomial text")->required();
    add_order(sub);
    add_engine(sub);
    add_caps(sub);
    if (std::string(name) == "member") {
      sub->add_flag("--oracle", config.oracle, "Cross-check by evaluating on all solutions");
    }
    add_output(sub, "text", {"text"});
  }

  try {
    const char* env = std::getenv("BOOLGB_CAPS");
    if (env != nullptr) config.caps = parse_caps(env);
  } catch (const Error& e) {
    err << "BOOLGB_CAPS: " << e.what() << '\n';
    return kUsage;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.order = MonomialOrder{order_from_string(order)};
  config.engine = engine_from_string(engine);
  config.family = family.front();
  if (max_pairs) config.caps.buchberger.max_pairs = *max_pairs;
  if (max_basis) config.caps.buchberger.max_basis = *max_basis;

  try {
    if (config.command == "gen") return cmd_gen(config, out, err);
    if (config.command == "gb") return cmd_gb(config, out, err);
    if (config.command == "verify") return cmd_verify(config, out, err);
    if (config.command == "bench") return cmd_bench(config, out, err);
    if (config.command == "nf") return cmd_nf(config, out, err);
    if (config.command == "member") return cmd_member(config, out, err);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const EngineMismatch& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const TooManyVariables& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace boolgb::cli
