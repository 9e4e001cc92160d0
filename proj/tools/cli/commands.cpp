#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "bcjq/banded.hpp"
#include "bcjq/error.hpp"
#include "bcjq/identities.hpp"
#include "bcjq/quaternions.hpp"
#include "bcjq/sequences.hpp"
#include "cli/strategies.hpp"

namespace bcjq::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Pretty };

struct Range {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

// "a..b" (inclusive) or a single index.
Range parse_range(const std::string& text) {
  const auto read = [&text](const std::string& part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad range '" + text + "': expected a..b with non-negative integers");
    }
    return std::stoull(part);
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.first = r.last = read(text);
  } else {
    r.first = read(text.substr(0, dots));
    r.last = read(text.substr(dots + 2));
  }
  if (r.first > r.last) throw ParseError("bad range '" + text + "': start exceeds end");
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (const char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void put_components(Json& j, const BcQuat& w) {
  j["w0"] = w.w0.to_string();
  j["w1"] = w.w1.to_string();
  j["w2"] = w.w2.to_string();
  j["w3"] = w.w3.to_string();
}

std::string components_csv(const BcQuat& w) {
  return w.w0.to_string() + "," + w.w1.to_string() + "," + w.w2.to_string() + "," + w.w3.to_string();
}

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"csv", Format::Csv}, {"pretty", Format::Pretty}};

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string sequence;
  std::string range = "0..9";
  Format format = Format::Json;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const Range r = parse_range(a.range);
  const bool scalar = a.sequence == "J" || a.sequence == "V" || a.sequence == "U";

  std::vector<std::string> scalars;
  std::vector<BcQuat> quats;
  if (a.sequence == "J") {
    const auto terms = j3_terms(r.last + 1);
    for (std::uint64_t n = r.first; n <= r.last; ++n) scalars.push_back(terms[n].get_str());
  } else if (a.sequence == "V" || a.sequence == "U") {
    for (std::uint64_t n = r.first; n <= r.last; ++n) scalars.push_back(std::to_string(a.sequence == "V" ? v3(n) : u3(n)));
  } else if (a.sequence == "BCJ") {
    const auto terms = reference_terms(r.last);
    quats.assign(terms.begin() + static_cast<std::ptrdiff_t>(r.first), terms.end());
  } else {
    for (std::uint64_t n = r.first; n <= r.last; ++n) quats.push_back(a.sequence == "BCV" ? bcv(n) : bcu(n));
  }

  if (a.format == Format::Csv) out << (scalar ? "n,value\n" : "n,w0,w1,w2,w3\n");
  for (std::uint64_t k = 0; k <= r.last - r.first; ++k) {
    const std::uint64_t n = r.first + k;
    switch (a.format) {
      case Format::Json: {
        Json j;
        j["n"] = n;
        if (scalar) {
          j["value"] = scalars[k];
        } else {
          put_components(j, quats[k]);
        }
        out << j.dump() << '\n';
        break;
      }
      case Format::Csv:
        out << n << ',' << (scalar ? scalars[k] : components_csv(quats[k])) << '\n';
        break;
      case Format::Pretty:
        out << a.sequence << '(' << n << ") = " << (scalar ? scalars[k] : to_string(quats[k])) << '\n';
        break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::vector<std::string> identities;
  std::optional<std::uint64_t> grid;
  std::optional<std::uint64_t> gap;
  Format format = Format::Json;
};

std::string_view to_string(Expectation e) {
  return e == Expectation::ExpectedTrue ? "expected-true" : "expected-refuted";
}

void emit_report(const IdentityReport& r, const IdentityEntry& entry, Format format, std::ostream& out) {
  std::string indices;
  if (r.counterexample) {
    for (std::size_t i = 0; i < r.counterexample->indices.size(); ++i) {
      indices += (i ? "," : "") + std::to_string(r.counterexample->indices[i]);
    }
  }
  switch (format) {
    case Format::Json: {
      Json j;
      j["name"] = r.name;
      j["verdict"] = to_string(r.verdict);
      j["bound"] = r.bound;
      j["expected"] = to_string(entry.expectation);
      if (r.counterexample) {
        j["counterexample"] = r.counterexample->indices;
        j["lhs"] = r.counterexample->lhs;
        j["rhs"] = r.counterexample->rhs;
      }
      Json notes = Json::object();
      for (const auto& [k, v] : r.notes) notes[k] = v;
      j["notes"] = notes;
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << csv_field(r.name) << ',' << to_string(r.verdict) << ',' << to_string(entry.expectation) << ','
          << csv_field(r.bound) << ',' << csv_field(indices) << ','
          << csv_field(r.counterexample ? r.counterexample->lhs : "") << ','
          << csv_field(r.counterexample ? r.counterexample->rhs : "") << '\n';
      break;
    case Format::Pretty:
      out << std::left << std::setw(20) << r.name << ' ' << std::setw(14) << to_string(r.verdict) << ' '
          << std::setw(17) << to_string(entry.expectation) << ' ' << r.bound << '\n';
      if (r.counterexample) {
        out << "    at (" << indices << ")\n    lhs = " << r.counterexample->lhs << "\n    rhs = " << r.counterexample->rhs
            << '\n';
      }
      for (const auto& [k, v] : r.notes) out << "    " << k << ": " << v << '\n';
      break;
  }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<const IdentityEntry*> selection;
  for (const std::string& name : a.identities) {
    if (name == "all") {
      for (const IdentityEntry& e : identity_catalog()) selection.push_back(&e);
      continue;
    }
    const IdentityEntry* e = find_identity(name);
    if (!e) {
      err << "verify: unknown identity '" << name << "'; known:";
      for (const IdentityEntry& k : identity_catalog()) err << ' ' << k.name;
      err << '\n';
      return kUsageError;
    }
    selection.push_back(e);
  }
  if (selection.empty()) {
    err << "verify: no identities selected\n";
    return kUsageError;
  }

  VerifyOptions options;
  if (a.grid) {
    options.docagne_rows = *a.grid;
    options.conj_grid = *a.grid;
    options.unary_grid = *a.grid;
  }
  if (a.gap) options.docagne_gap = *a.gap;

  const std::vector<IdentityReport> reports = run_identities(selection, options);
  if (a.format == Format::Csv) out << "name,verdict,expected,bound,counterexample,lhs,rhs\n";
  int code = kOk;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    emit_report(reports[i], *selection[i], a.format, out);
    const bool expected_true = selection[i]->expectation == Expectation::ExpectedTrue;
    if (expected_true && !reports[i].holds()) {
      err << "verify: " << reports[i].name << " was expected to hold but is refuted\n";
      code = kUnexpectedRefutation;
    } else if (!expected_true && reports[i].holds()) {
      err << "verify: note: " << reports[i].name << " was expected to be refuted but holds\n";
    }
  }
  return code;
}

// ---------------------------------------------------------------- gf

struct GfArgs {
  std::uint64_t order = 64;
  Format format = Format::Json;
};

int cmd_gf(const GfArgs& a, std::ostream& out, std::ostream& err) {
  if (a.order < 3) {
    err << "gf: --order must be at least 3\n";
    return kUsageError;
  }
  const std::vector<BcQuat> product = genfun_product(a.order);
  if (a.format == Format::Csv) out << "k,w0,w1,w2,w3\n";
  for (std::uint64_t k = 0; k < product.size(); ++k) {
    switch (a.format) {
      case Format::Json: {
        Json j;
        j["k"] = k;
        put_components(j, product[k]);
        out << j.dump() << '\n';
        break;
      }
      case Format::Csv:
        out << k << ',' << components_csv(product[k]) << '\n';
        break;
      case Format::Pretty:
        out << "t^" << k << ": " << to_string(product[k]) << '\n';
        break;
    }
  }
  const IdentityReport report = verify_genfun(a.order);
  if (!report.holds()) {
    err << "gf: coefficient t^" << report.counterexample->indices.front() << " differs from the expected numerator\n";
    return kUnexpectedRefutation;
  }
  return kOk;
}

// ---------------------------------------------------------------- det

struct DetArgs {
  std::uint64_t n = 0;
  std::vector<std::string> overrides;
  bool dump = false;
  Format format = Format::Json;
};

EntryOverride<BcQuat> parse_override(const std::string& text) {
  const auto c1 = text.find(',');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(',', c1 + 1);
  if (c2 == std::string::npos) throw ParseError("bad --override-entry '" + text + "': expected row,col,value");
  const auto index = [&text](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || std::stoull(s) == 0) {
      throw ParseError("bad --override-entry '" + text + "': row and col are 1-based integers");
    }
    return static_cast<std::size_t>(std::stoull(s));
  };
  return {index(text.substr(0, c1)), index(text.substr(c1 + 1, c2 - c1 - 1)), parse_bicomplex(text.substr(c2 + 1))};
}

int cmd_det(const DetArgs& a, std::ostream& out) {
  std::vector<EntryOverride<BcQuat>> overrides;
  for (const std::string& o : a.overrides) overrides.push_back(parse_override(o));

  const BandedMatrix<BcQuat> m = build_matrix(bcj_recurrence_spec(), a.n, overrides);
  const BcQuat det = det_exact(m);
  const BcQuat expected = bcj(a.n);
  const bool matches = det == expected;

  switch (a.format) {
    case Format::Json: {
      Json j;
      j["n"] = a.n;
      j["det"] = to_string(det);
      j["bcj"] = to_string(expected);
      j["matches"] = matches;
      j["overrides"] = a.overrides;
      if (a.dump) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
          Json row = Json::array();
          for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
          rows.push_back(row);
        }
        j["matrix"] = rows;
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "n,det,bcj,matches\n" << a.n << ',' << csv_field(to_string(det)) << ',' << csv_field(to_string(expected))
          << ',' << (matches ? "true" : "false") << '\n';
      break;
    case Format::Pretty:
      if (a.dump) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
          for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " | " : "") << to_string(m(r, c));
          out << '\n';
        }
      }
      out << "det    = " << to_string(det) << "\nBC(" << a.n << ") = " << to_string(expected)
          << "\nmatches: " << (matches ? "yes" : "no") << '\n';
      break;
  }
  // With overrides a mismatch is the probe's answer, not a failure.
  return matches || !overrides.empty() ? kOk : kUnexpectedRefutation;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::uint64_t n = 1000;
  std::string strategies = "recurrence,matpow,binet,det";
  Format format = Format::Pretty;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<Strategy> chosen;
  std::stringstream list(a.strategies);
  for (std::string name; std::getline(list, name, ',');) {
    const auto s = parse_strategy(name);
    if (!s) {
      err << "bench: unknown strategy '" << name << "' (recurrence, matpow, binet, det)\n";
      return kUsageError;
    }
    chosen.push_back(*s);
  }
  if (chosen.empty()) {
    err << "bench: no strategies selected\n";
    return kUsageError;
  }

  struct Row {
    Strategy strategy;
    std::uint64_t last;
    double seconds;
  };
  const std::vector<BcQuat> reference = reference_terms(a.n);
  std::vector<Row> rows;
  for (const Strategy s : chosen) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<BcQuat> values = evaluate(s, a.n);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (std::uint64_t n = 0; n < values.size(); ++n) {
      if (values[n] != reference[n]) {
        err << "bench: strategy " << to_string(s) << " disagrees at n=" << n << ": " << to_string(values[n])
            << " vs " << to_string(reference[n]) << '\n';
        return kUnexpectedRefutation;
      }
    }
    rows.push_back({s, effective_max(s, a.n), seconds});
  }

  if (a.format == Format::Csv) out << "strategy,n_max,seconds,agreement\n";
  for (const Row& r : rows) {
    switch (a.format) {
      case Format::Json: {
        Json j;
        j["strategy"] = to_string(r.strategy);
        j["n_max"] = r.last;
        j["seconds"] = r.seconds;
        j["agreement"] = true;
        out << j.dump() << '\n';
        break;
      }
      case Format::Csv:
        out << to_string(r.strategy) << ',' << r.last << ',' << r.seconds << ",true\n";
        break;
      case Format::Pretty:
        out << std::left << std::setw(11) << to_string(r.strategy) << " n<=" << std::setw(6) << r.last << ' '
            << std::fixed << std::setprecision(6) << r.seconds << " s  agree\n";
        break;
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for bicomplex third-order Jacobsthal quaternions", "bcjq"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print sequence terms");
  gen_cmd->add_option("sequence", gen.sequence, "J, V, U, BCJ, BCV or BCU")
      ->required()
      ->check(CLI::IsMember({"J", "V", "U", "BCJ", "BCV", "BCU"}));
  gen_cmd->add_option("range,--range", gen.range, "Index range a..b (inclusive)");
  gen_cmd->add_option("--format", gen.format, "json, csv or pretty")->transform(CLI::CheckedTransformer(kFormats));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities; 'all' selects the whole catalog");
  verify_cmd->add_option("identities,--identities", verify.identities, "Comma-separated identity names")
      ->delimiter(',');
  verify_cmd->add_option("--grid", verify.grid, "Exclusive index bound for grid checks");
  verify_cmd->add_option("--gap", verify.gap, "d'Ocagne: m runs over n < m <= n + gap");
  verify_cmd->add_option("--format", verify.format, "json, csv or pretty")->transform(CLI::CheckedTransformer(kFormats));

  GfArgs gf;
  auto* gf_cmd = app.add_subcommand("gf", "Generating-function numerator check");
  gf_cmd->add_option("--order", gf.order, "Number of series coefficients");
  gf_cmd->add_option("--format", gf.format, "json, csv or pretty")->transform(CLI::CheckedTransformer(kFormats));

  DetArgs det;
  auto* det_cmd = app.add_subcommand("det", "BC(n) as a banded determinant");
  det_cmd->add_option("n,--n", det.n, "Index");
  det_cmd->add_option("--override-entry", det.overrides, "row,col,value (1-based; value like 1/2 + 3*ij)")
      ->take_all()
      ->allow_extra_args(false);
  det_cmd->add_flag("--dump", det.dump, "Include the matrix");
  det_cmd->add_option("--format", det.format, "json, csv or pretty")->transform(CLI::CheckedTransformer(kFormats));

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time and cross-check the evaluation strategies");
  bench_cmd->add_option("n,--n", bench.n, "Largest index");
  bench_cmd->add_option("strategies,--strategies", bench.strategies, "Comma-separated: recurrence,matpow,binet,det");
  bench_cmd->add_option("--format", bench.format, "json, csv or pretty")->transform(CLI::CheckedTransformer(kFormats));

  std::vector<const char*> argv{"bcjq"};
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*gf_cmd) return cmd_gf(gf, out, err);
    if (*det_cmd) return cmd_det(det, out);
    return cmd_bench(bench, out, err);
  } catch (const std::invalid_argument& e) {
    err << "bcjq: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "bcjq: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace bcjq::cli
