#include "latpath/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "latpath/encoding.hpp"
#include "latpath/errata.hpp"
#include "latpath/errors.hpp"
#include "latpath/hankel.hpp"
#include "latpath/motzkin.hpp"
#include "latpath/schroder.hpp"

namespace latpath {

namespace {

enum class Format { plain, csv, json };

struct Options {
  std::string target;
  long n = -1;
  int k = -1;
  int w = 1;
  int j = 0;
  int shift = 0;
  int max = 12;
  std::string omega = "symbolic";
  std::string alpha = "1";
  std::string beta = "0";
  std::string family = "motzkin";
  Format format = Format::plain;
};

struct UsageError : Error {
  using Error::Error;
};

std::optional<BigInt> weight(const Options& o) {
  if (o.omega == "symbolic") return std::nullopt;
  try {
    return BigInt(o.omega);
  } catch (const std::invalid_argument&) {
    throw UsageError("--omega must be an integer or 'symbolic', got '" + o.omega + "'");
  }
}

OmegaPoly at_weight(const OmegaPoly& p, const std::optional<BigInt>& w) {
  return w ? OmegaPoly(p.eval(*w)) : p;
}

std::string csv_cell(const OmegaPoly& p) {
  const std::string s = p.to_string();
  return s.find(' ') == std::string::npos ? s : "\"" + s + "\"";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

long need_n(const Options& o, long fallback) {
  const long n = o.n < 0 ? fallback : o.n;
  if (n < 0) throw UsageError("--N must be >= 0");
  return n;
}

// seq --------------------------------------------------------------------

TSeries sequence(const Options& o, long order) {
  const std::string& f = o.target;
  if (f == "motzkin") return motzkin_column_gf(o.j, order);
  if (f == "grand-motzkin") return grand_column_gf(o.j, order);
  if (f == "w-path") return w_column_gf(o.j, o.w, order);
  if (f == "schroder-compressed") return compressed_column_gf(o.j, order);
  if (f == "delannoy") {
    if (o.j < 0) throw UsageError("delannoy needs --j >= 0");
    std::vector<OmegaPoly> v;
    for (long n = 0; n <= order; ++n) {
      v.push_back(delannoy_number(static_cast<int>(n), static_cast<int>(n) + o.j));
    }
    return TSeries(std::move(v), order);
  }
  if (f == "banded") {
    if (o.k < 1) throw UsageError("banded sequences need --k >= 1");
    RationalGF gf;
    if (o.family == "motzkin") {
      gf = banded_motzkin_gf(o.k).gf;
    } else if (o.family == "schroder") {
      gf = banded_w_gf_compressed(o.k);
    } else if (o.family == "w") {
      gf = banded_w_gf(o.k, o.w);
    } else {
      throw UsageError("--family must be motzkin, schroder or w");
    }
    return series_from_rational(gf, order);
  }
  throw UsageError("unknown sequence family '" + f + "'");
}

int cmd_seq(const Options& o, std::ostream& out) {
  const auto w = weight(o);
  TSeries s = sequence(o, need_n(o, 10));
  if (w) s = s.eval_omega(*w);
  switch (o.format) {
    case Format::json: print_json(out, encode(s)); break;
    case Format::csv:
      out << "n,value\n";
      for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
        out << i << ',' << csv_cell(s.coeffs()[i]) << '\n';
      }
      break;
    case Format::plain: {
      const char* sep = w ? " " : "; ";
      for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
        out << (i ? sep : "") << s.coeffs()[i].to_string();
      }
      out << '\n';
    }
  }
  return 0;
}

// matrix -----------------------------------------------------------------

int cmd_matrix(const Options& o, std::ostream& out) {
  const auto w = weight(o);
  const long n = need_n(o, 5);
  if (n < 1) throw UsageError("matrix dimension --n must be >= 1");
  const auto dim = static_cast<std::size_t>(n);
  TriMatrix m;
  if (o.target == "motzkin") {
    m = motzkin_matrix(dim);
  } else if (o.target == "motzkin-inverse") {
    m = inverse_motzkin_matrix(dim);
  } else if (o.target == "schroder") {
    m = schroder_matrix_compressed(dim);
  } else if (o.target == "schroder-inverse") {
    m = inverse_schroder_matrix(dim);
  } else if (o.target == "grand") {
    m = grand_matrix(dim);
  } else {
    throw UsageError("unknown matrix kind '" + o.target + "'");
  }
  if (w) m = m.eval_omega(*w);
  if (o.format == Format::json) {
    print_json(out, encode(m));
    return 0;
  }
  const std::string sep = o.format == Format::csv ? "," : (w ? " " : "; ");
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto row = m.row(i);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << sep;
      out << (o.format == Format::csv ? csv_cell(row[c]) : row[c].to_string());
    }
    out << '\n';
  }
  return 0;
}

// hankel -----------------------------------------------------------------

int cmd_hankel(const Options& o, std::ostream& out) {
  const auto w = weight(o);
  const long n = need_n(o, 5);
  if (n < 1) throw UsageError("Hankel dimension --n must be >= 1");
  HankelSpec spec;
  spec.shift = o.shift;
  spec.alpha = OmegaPoly::parse(o.alpha);
  spec.beta = OmegaPoly::parse(o.beta);
  spec.n = static_cast<std::size_t>(n);
  const OmegaPoly det = det_fraction_free(hankel_matrix(spec));
  const OmegaPoly closed = hankel_closed(spec);
  const bool agree = det == closed;
  const OmegaPoly d = at_weight(det, w);
  const OmegaPoly c = at_weight(closed, w);
  switch (o.format) {
    case Format::json: {
      Json j = Json::object();
      j["determinant"] = encode(d);
      j["closed_form"] = encode(c);
      j["agree"] = agree;
      print_json(out, j);
      break;
    }
    case Format::csv:
      out << "determinant,closed_form,agree\n"
          << csv_cell(d) << ',' << csv_cell(c) << ',' << (agree ? "true" : "false") << '\n';
      break;
    case Format::plain:
      out << "value " << d.to_string() << '\n'
          << "closed " << c.to_string() << '\n'
          << "agree=" << (agree ? "true" : "false") << '\n';
  }
  return agree ? 0 : 1;
}

// verify -----------------------------------------------------------------

struct Suite {
  std::vector<CheckReport> reports;
  std::vector<std::string> notes;
};

void run_theorem(Suite& suite, int k, long order) {
  const auto r = unit_weight::theorem_schroeder_check(k, order);
  suite.reports.push_back(r.report);
  std::ostringstream note;
  note << "k=" << k << " principal " << r.principal.to_string() << "\n";
  note << "k=" << k << " regular";
  for (const OmegaPoly& c : r.regular.coeffs()) note << ' ' << c.to_string();
  suite.notes.push_back(note.str());
}

Suite verify(const Options& o) {
  if (o.max < 1) throw UsageError("--max must be >= 1");
  Suite s;
  const std::string& which = o.target;
  const bool all = which == "all";
  bool known = all;
  auto want = [&](const char* name) {
    const bool hit = all || which == name;
    known = known || hit;
    return hit;
  };
  if (want("lemma")) s.reports.push_back(verify_lemma_range(o.max));
  if (want("orthogonality")) s.reports.push_back(verify_orthogonality(o.max));
  if (want("banded-recursion")) {
    const long horizon = need_n(o, 30);
    const int lo = o.k > 0 ? o.k : 1;
    const int hi = o.k > 0 ? o.k : 6;
    for (int k = lo; k <= hi; ++k) {
      s.reports.push_back(banded_motzkin_recursion_check(k, static_cast<int>(horizon)));
    }
  }
  if (want("first-return")) s.reports.push_back(first_return_check(static_cast<int>(need_n(o, 30))));
  if (want("delannoy")) {
    s.reports.push_back(delannoy_recursion_check(o.max));
    s.reports.push_back(delannoy_oracle_check(o.max));
  }
  if (want("bridge")) {
    CheckReport r{"Delannoy/inverse Schroeder bridge"};
    const int top = all ? o.max : static_cast<int>(need_n(o, 20));
    for (int n = 1; n <= top; ++n) r.merge(unit_weight::delannoy_s_bridge_check(n));
    s.reports.push_back(r);
  }
  if (want("gould")) {
    CheckReport r{"Gould/Carlitz"};
    const int top = o.k >= 0 && !all ? o.k : 20;
    for (int k = 0; k <= top; ++k) {
      for (int m = 0; 2 * m <= k; ++m) r.merge(gould_identity_check(k, m));
    }
    s.reports.push_back(r);
  }
  if (want("theorem-schroeder")) {
    const long order = need_n(o, 12);
    if (all) {
      for (int k = 2; k <= 6; ++k) run_theorem(s, k, order);
    } else {
      if (o.k >= 0 && o.k < 2) throw UsageError("theorem-schroeder needs --k >= 2");
      run_theorem(s, o.k < 0 ? 4 : o.k, order);
    }
  }
  if (!known) throw UsageError("unknown verification '" + which + "'");
  return s;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Suite s = verify(o);
  bool ok = true;
  if (o.format == Format::json) {
    Json arr = Json::array();
    for (const CheckReport& r : s.reports) {
      Json j = Json::object();
      j["name"] = r.name;
      j["cases"] = r.cases;
      j["passed"] = r.passed();
      if (r.first_failure) {
        j["where"] = r.first_failure->where;
        j["expected"] = r.first_failure->expected;
        j["actual"] = r.first_failure->actual;
      }
      ok = ok && r.passed();
      arr.push_back(std::move(j));
    }
    print_json(out, arr);
    return ok ? 0 : 1;
  }
  const bool csv = o.format == Format::csv;
  if (csv) out << "name,cases,passed\n";
  for (const CheckReport& r : s.reports) {
    ok = ok && r.passed();
    if (csv) {
      out << '"' << r.name << "\"," << r.cases << ',' << (r.passed() ? "true" : "false") << '\n';
      continue;
    }
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (r.first_failure) {
      out << " at " << r.first_failure->where << ": expected " << r.first_failure->expected
          << ", got " << r.first_failure->actual;
    }
    out << '\n';
  }
  if (!csv) {
    for (const std::string& note : s.notes) out << note << '\n';
  }
  return ok ? 0 : 1;
}

int typo_ledger(const Options& o, std::ostream& out) {
  const ErrataReport report = compute_errata();
  if (o.format == Format::json) {
    Json arr = Json::array();
    for (const ErrataEntry& e : report.entries) {
      Json j = Json::object();
      j["table"] = e.table;
      j["caption"] = e.caption;
      j["cell"] = {e.row, e.col};
      j["printed"] = e.printed;
      j["oracle"] = e.oracle;
      arr.push_back(std::move(j));
    }
    Json j = Json::object();
    j["tables"] = report.tables;
    j["cells"] = report.cells;
    j["errata"] = std::move(arr);
    print_json(out, j);
  } else {
    out << format_errata(report);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of weighted Motzkin, Schroeder and Delannoy paths"};
  app.name("latpath");
  app.require_subcommand(0, 1);
  Options o;
  bool ledger = false;
  app.add_flag("--typo-ledger", ledger, "List printed table values the path oracle contradicts");

  const std::map<std::string, Format> formats{
      {"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--omega", o.omega, "Integer weight or 'symbolic'");
    sub->add_option("--format", o.format, "plain, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""));
  };
  // Also accepted after the subcommand name so the flag can sit anywhere.
  app.add_option("--format", o.format, "plain, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""));

  auto* seq = app.add_subcommand("seq", "Print a coefficient sequence");
  seq->add_option("sequence", o.target,
                  "motzkin, grand-motzkin, w-path, schroder-compressed, delannoy or banded")
      ->required();
  seq->add_option("--n,--N", o.n, "Last index printed");
  seq->add_option("--k", o.k, "Band height");
  seq->add_option("--w", o.w, "Horizontal step length");
  seq->add_option("--j", o.j, "End height / column");
  seq->add_option("--family", o.family, "Banded family: motzkin, schroder or w");
  common(seq);

  auto* matrix = app.add_subcommand("matrix", "Print a triangular matrix");
  matrix->add_option("kind", o.target,
                     "motzkin, motzkin-inverse, schroder, schroder-inverse or grand")
      ->required();
  matrix->add_option("--n,--N", o.n, "Dimension");
  common(matrix);

  auto* hankel = app.add_subcommand("hankel", "Hankel determinant of Motzkin numbers");
  hankel->add_option("--n,--N", o.n, "Dimension");
  hankel->add_option("--alpha", o.alpha, "Coefficient of M_(i+j+shift)");
  hankel->add_option("--beta", o.beta, "Coefficient of M_(i+j+shift+1)");
  hankel->add_option("--shift", o.shift, "0, 1 or 2");
  common(hankel);

  auto* ver = app.add_subcommand("verify", "Check identities against the path oracle");
  ver->add_option("which", o.target,
                  "lemma, orthogonality, banded-recursion, first-return, delannoy, bridge, "
                  "gould, theorem-schroeder or all")
      ->required();
  ver->add_option("--max", o.max, "Index bound for lemma, orthogonality, delannoy");
  ver->add_option("--k", o.k, "Band height or Gould bound");
  ver->add_option("--n,--N", o.n, "Horizon or series order");
  common(ver);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ledger) return typo_ledger(o, out);
    if (seq->parsed()) return cmd_seq(o, out);
    if (matrix->parsed()) return cmd_matrix(o, out);
    if (hankel->parsed()) return cmd_hankel(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    err << app.help();
    return 2;
  } catch (const InexactDivision& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace latpath
