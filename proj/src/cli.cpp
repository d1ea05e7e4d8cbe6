#include "evencliff/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "evencliff/atlas.hpp"
#include "evencliff/bounds.hpp"
#include "evencliff/json_io.hpp"
#include "evencliff/normalizer.hpp"

namespace evencliff {

namespace {

long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + ": '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("bad " + what + ": '" + s + "'");
  return v;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw UsageError("unsupported --format '" + f + "' for this command");
}

// Left-aligned two-column key/value block.
void kv(std::ostream& os, const std::string& key, const std::string& value) {
  os << "  " << std::left << std::setw(22) << key << value << "\n";
}

std::string opt_str(const std::optional<Dim>& v) { return v ? std::to_string(*v) : "undefined"; }
std::string opt_str(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : "undefined"; }

// ---- report ----------------------------------------------------------------

int cmd_report(int r, const std::string& mult_text, const std::string& format, std::ostream& out) {
  require_format(format, {"json", "text"});
  if (r < 3) throw UsageError("report requires --rank >= 3, got " + std::to_string(r));
  const Multiplicities mult = parse_mult(mult_text);
  require_compatible(r, mult);
  const BoundsReport b = bounds_report(r, mult);
  const ExpectedDims e = expected_dims(r, mult);
  const auto models = models_for(r, mult);

  if (format == "json") {
    Json ms = Json::array();
    for (const auto& m : models) {
      Json j = model_to_json(m);
      j["cross_check"] = cross_check_to_json(cross_check(m));
      ms.push_back(j);
    }
    Json j = {{"bounds", bounds_to_json(b)},
              {"expected_dims", {{"centralizer", e.centralizer}, {"normalizer", e.normalizer}}},
              {"isotropy_dim", isotropy_dim(r, mult)},
              {"models", ms}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "rank " << r << ", multiplicities " << mult.to_string() << "\n";
  kv(out, "N", std::to_string(b.n));
  kv(out, "d_max", std::to_string(b.d_max));
  kv(out, "gap_threshold", std::to_string(b.gap_threshold));
  kv(out, "d_C", std::to_string(b.d_C));
  kv(out, "d_M", b.d_M ? std::to_string(*b.d_M) : "undefined (" + b.d_M_reason + ")");
  kv(out, "constraint_threshold", to_string(b.constraint_threshold));
  kv(out, "constraints_ok", b.constraints_ok ? "true" : "false");
  kv(out, "gap_inequality_ok", opt_str(b.gap_inequality_ok));
  kv(out, "centralizer_dim", std::to_string(e.centralizer));
  kv(out, "normalizer_dim", std::to_string(e.normalizer));
  kv(out, "isotropy_dim", std::to_string(isotropy_dim(r, mult)));
  out << "models\n";
  for (const auto& m : models) {
    out << "  " << std::left << std::setw(12) << to_string(m.family) << std::setw(7) << m.dim_M << std::setw(7)
        << m.dim_G << std::setw(6) << (cross_check(m).passed() ? "ok" : "FAIL") << m.name;
    if (m.flagged) out << "  [flagged: " << m.note << "]";
    out << "\n";
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
  int r = 0;
  std::string mult;
  std::string mode = "exact";
  double tolerance = 1e-9;
  std::optional<long> max_size;
  bool allow_large = false;
  std::string checks;
  std::string format = "json";
};

const std::vector<std::string> kAllChecks = {"structure", "schur", "centralizer", "normalizer", "split"};

struct DimRecord {
  std::string name;
  std::size_t computed;
  std::size_t expected;
  bool numerical;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  require_format(o.format, {"json", "text"});
  if (o.mode != "exact" && o.mode != "float") throw UsageError("--mode must be exact or float");
  if (!(o.tolerance > 0)) throw UsageError("--tolerance must be positive");
  const Multiplicities mult = parse_mult(o.mult);
  require_compatible(o.r, mult);
  const bool exact = o.mode == "exact";
  const bool split_applies = o.r == 4 && mult.m1() > 0 && mult.m2() > 0;

  std::vector<std::string> selected;
  if (o.checks.empty()) {
    for (const auto& c : kAllChecks)
      if (c != "split" || split_applies) selected.push_back(c);
  } else {
    std::stringstream ss(o.checks);
    for (std::string c; std::getline(ss, c, ',');) {
      if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end())
        throw UsageError("unknown check '" + c + "' (known: structure, schur, centralizer, normalizer, split)");
      if (c == "split" && !split_applies) throw UsageError("check 'split' needs rank 4 with both multiplicities positive");
      selected.push_back(c);
    }
  }
  auto wants = [&](const std::string& c) { return std::find(selected.begin(), selected.end(), c) != selected.end(); };

  const std::size_t n = ambient_dimension(o.r, mult);
  const long limit = o.max_size ? *o.max_size : (exact ? 64 : 256);
  if (static_cast<long>(n) > limit && !o.allow_large) {
    throw TooLarge("N = " + std::to_string(n) + " exceeds the " + o.mode + "-mode limit of " + std::to_string(limit) +
                   (exact ? "; use --mode float, or --allow-large to run exact elimination anyway"
                          : "; use --allow-large or raise --max-size"));
  }
  if (o.r > kDefaultMaxRank) throw TooLarge("rank " + std::to_string(o.r) + " exceeds the supported maximum " +
                                            std::to_string(kDefaultMaxRank));

  const EvenCliffordStructure s = build(o.r, mult);
  std::vector<CheckResult> checks;
  std::vector<DimRecord> dims;
  if (wants("structure"))
    for (auto c : verify(s).checks) {
      c.name = "structure." + c.name;
      checks.push_back(c);
    }
  if (wants("schur")) {
    const auto sets = build_even_generators(o.r);
    const int want = field_dimension(irrep_info(o.r).field);
    for (const auto& g : sets) {
      std::string name = "schur";
      if (g.half()) name += *g.half() == HalfLabel::Plus ? ".plus" : ".minus";
      try {
        const int got = schur_check(g);
        checks.push_back({name, got == want, "commutant dimension " + std::to_string(got) + ", field " +
                                                 to_string(irrep_info(o.r).field)});
      } catch (const std::logic_error& e) {
        checks.push_back({name, false, e.what()});
      }
    }
  }
  const SolveOptions so{exact ? SolveMode::Exact : SolveMode::Float, o.tolerance};
  const ExpectedDims e = expected_dims(o.r, mult);
  auto dim_check = [&](const std::string& name, DimensionResult got, std::size_t expected) {
    dims.push_back({name, got.dim, expected, got.numerical});
    checks.push_back({name, got.dim == expected,
                      std::string(got.numerical ? "numerical " : "") + "dimension " + std::to_string(got.dim) +
                          ", expected " + std::to_string(expected)});
  };
  if (wants("centralizer")) dim_check("centralizer", centralizer_dimension(s, so), e.centralizer);
  if (wants("normalizer")) dim_check("normalizer", normalizer_dimension(s, so), e.normalizer);
  if (wants("split")) {
    const QuaternionicSplit q = r4_quaternionic_split(s);
    checks.push_back({"split.blocks", q.plus_support != q.minus_support,
                      "J+ on block " + std::to_string(q.plus_support) + ", J- on block " +
                          std::to_string(q.minus_support)});
    bool squares = true;
    for (const auto* triple : {&q.plus, &q.minus}) {
      const std::size_t blk = triple == &q.plus ? q.plus_support : q.minus_support;
      const Matrix minus_id = -Matrix::identity(q.block_size[blk]);
      for (const auto& m : *triple) {
        const Matrix b = m.block(q.block_offset[blk], q.block_size[blk]);
        squares = squares && b * b == minus_id;
      }
    }
    checks.push_back({"split.squares", squares, "block restrictions square to -I"});
  }

  bool passed = true;
  for (const auto& c : checks) passed = passed && c.passed;

  if (o.format == "json") {
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    Json ds = Json::object();
    for (const auto& d : dims)
      ds[d.name] = {{"computed", d.computed}, {"expected", d.expected}, {"numerical", d.numerical}};
    Json j = {{"r", o.r}, {"mult", mult_to_json(mult)}, {"N", n}, {"mode", o.mode}, {"passed", passed},
              {"checks", cs}, {"dims", ds}};
    if (!exact) j["tolerance"] = o.tolerance;
    out << j.dump(2) << "\n";
  } else {
    out << "verify rank " << o.r << ", multiplicities " << mult.to_string() << ", N = " << n << ", mode " << o.mode
        << "\n";
    for (const auto& c : checks)
      out << "  " << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(38) << c.name << c.detail << "\n";
  }
  if (!passed) err << "verify: one or more checks failed\n";
  return passed ? kExitOk : kExitCheckFailed;
}

// ---- scan ------------------------------------------------------------------

struct Filter {
  std::string field;
  bool negate;
};

std::vector<Filter> parse_filters(const std::vector<std::string>& raw) {
  std::vector<Filter> out;
  for (const auto& group : raw) {
    std::stringstream ss(group);
    for (std::string f; std::getline(ss, f, ',');) {
      if (f.empty()) continue;
      Filter x{f, false};
      if (x.field.front() == '!') {
        x.negate = true;
        x.field.erase(0, 1);
      }
      if (x.field != "constraints_ok" && x.field != "gap_inequality_ok")
        throw UsageError("unknown filter '" + f + "' (use constraints_ok, gap_inequality_ok, optionally with '!')");
      out.push_back(x);
    }
  }
  return out;
}

bool keep(const BoundsReport& b, const std::vector<Filter>& filters) {
  for (const auto& f : filters) {
    if (f.field == "constraints_ok") {
      if (b.constraints_ok == f.negate) return false;
    } else {
      // undefined matches neither polarity
      if (!b.gap_inequality_ok || *b.gap_inequality_ok == f.negate) return false;
    }
  }
  return true;
}

int cmd_scan(const std::string& rank_text, const std::string& mult_text, const std::vector<std::string>& filter_text,
             const std::string& format, std::ostream& out) {
  require_format(format, {"csv", "json", "text"});
  const IntRange rr = parse_range(rank_text);
  const IntRange mr = parse_range(mult_text);
  if (rr.lo <= rr.hi && rr.lo < 3) throw UsageError("scan requires ranks >= 3");
  if (mr.lo <= mr.hi && mr.lo < 0) throw UsageError("scan requires multiplicities >= 0");
  const auto filters = parse_filters(filter_text);

  std::vector<BoundsReport> rows;
  for (long r = rr.lo; r <= rr.hi; ++r) {
    const int ri = static_cast<int>(r);
    std::vector<Multiplicities> ms;
    if (r % 4 == 0) {
      for (long a = mr.lo; a <= mr.hi; ++a)
        for (long b = mr.lo; b <= mr.hi; ++b)
          if (a + b > 0) ms.push_back(Multiplicities::pair(a, b));
    } else {
      for (long m = std::max(mr.lo, 1L); m <= mr.hi; ++m) ms.push_back(Multiplicities::single(m));
    }
    for (const auto& m : ms) {
      BoundsReport b = bounds_report(ri, m);
      if (keep(b, filters)) rows.push_back(std::move(b));
    }
  }
  // generated in (r, m1, m2) order already

  if (format == "json") {
    Json arr = Json::array();
    for (const auto& b : rows) arr.push_back(bounds_to_json(b));
    out << arr.dump(2) << "\n";
  } else if (format == "csv") {
    out << "r,m1,m2,N,d_max,d_C,d_M,gap_threshold,constraint_threshold,constraints_ok,gap_inequality_ok\n";
    for (const auto& b : rows) {
      out << b.r << "," << b.mult.m1() << "," << (b.mult.is_pair() ? std::to_string(b.mult.m2()) : "") << "," << b.n
          << "," << b.d_max << "," << b.d_C << "," << (b.d_M ? std::to_string(*b.d_M) : "") << ","
          << b.gap_threshold << "," << to_string(b.constraint_threshold) << ","
          << (b.constraints_ok ? "true" : "false") << ","
          << (b.gap_inequality_ok ? (*b.gap_inequality_ok ? "true" : "false") : "") << "\n";
    }
  } else {
    out << std::left << std::setw(4) << "r" << std::setw(9) << "mult" << std::setw(8) << "N" << std::setw(10)
        << "d_max" << std::setw(9) << "d_C" << std::setw(10) << "d_M" << std::setw(8) << "gap" << std::setw(11)
        << "threshold" << std::setw(13) << "constraints" << "inequality\n";
    for (const auto& b : rows)
      out << std::left << std::setw(4) << b.r << std::setw(9) << b.mult.to_string() << std::setw(8) << b.n
          << std::setw(10) << b.d_max << std::setw(9) << b.d_C << std::setw(10) << opt_str(b.d_M) << std::setw(8)
          << b.gap_threshold << std::setw(11) << to_string(b.constraint_threshold) << std::setw(13)
          << (b.constraints_ok ? "true" : "false") << opt_str(b.gap_inequality_ok) << "\n";
  }
  return kExitOk;
}

// ---- export-atlas ----------------------------------------------------------

int cmd_export_atlas(int max_k, const std::string& format, std::ostream& out, std::ostream& err) {
  require_format(format, {"json", "text"});
  if (max_k < 1) throw UsageError("--max-k must be at least 1");
  const auto models = catalog(max_k);
  bool ok = true;
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& m : models) {
      const CrossCheckReport c = cross_check(m);
      ok = ok && c.passed();
      Json j = model_to_json(m);
      j["cross_check"] = cross_check_to_json(c);
      arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& m : models) ok = ok && cross_check(m).passed();
    out << format_catalog_table(models);
  }
  if (!ok) err << "export-atlas: some catalog entries fail cross_check\n";
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

Multiplicities parse_mult(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return Multiplicities::single(parse_long(text, "multiplicity"));
  if (text.find(',', comma + 1) != std::string::npos)
    throw std::invalid_argument("bad multiplicity: '" + text + "' (expected m or m1,m2)");
  return Multiplicities::pair(parse_long(text.substr(0, comma), "multiplicity"),
                              parse_long(text.substr(comma + 1), "multiplicity"));
}

IntRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const long v = parse_long(text, "range");
    return {v, v};
  }
  return {parse_long(text.substr(0, colon), "range"), parse_long(text.substr(colon + 1), "range")};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Even Clifford structures: bounds, normalizers and the symmetric-space atlas", "evencliff"};
  app.require_subcommand(1);

  int r = 0;
  std::string mult, format = "json";
  auto* report = app.add_subcommand("report", "bounds, expected dimensions and matching models");
  report->add_option("--rank", r, "rank r (>= 3)")->required();
  report->add_option("--mult", mult, "m, or m1,m2 when r = 0 mod 4")->required();
  report->add_option("--format", format, "json or text");

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify", "build the structure and run checks");
  verify_cmd->add_option("--rank", vo.r, "rank r")->required();
  verify_cmd->add_option("--mult", vo.mult, "m, or m1,m2 when r = 0 mod 4")->required();
  verify_cmd->add_option("--mode", vo.mode, "exact or float");
  verify_cmd->add_option("--tolerance", vo.tolerance, "pivot threshold in float mode");
  verify_cmd->add_option("--max-size", vo.max_size, "largest N allowed (default 64 exact, 256 float)");
  verify_cmd->add_flag("--allow-large", vo.allow_large, "run even when N exceeds the limit");
  verify_cmd->add_option("--checks", vo.checks, "comma list of structure,schur,centralizer,normalizer,split");
  verify_cmd->add_option("--format", vo.format, "json or text");

  std::string scan_rank, scan_mult, scan_format = "csv";
  std::vector<std::string> filters;
  auto* scan = app.add_subcommand("scan", "bounds table over ranges of r and multiplicities");
  scan->add_option("--rank", scan_rank, "a:b or a")->required();
  scan->add_option("--mult", scan_mult, "a:b or a (both m1 and m2 when r = 0 mod 4)")->required();
  scan->add_option("--filter", filters, "constraints_ok, gap_inequality_ok, prefix ! to negate; conjunction");
  scan->add_option("--format", scan_format, "csv, json or text");

  int max_k = 2;
  std::string atlas_format = "json";
  auto* atlas = app.add_subcommand("export-atlas", "catalog of curved models with cross-checks");
  atlas->add_option("--max-k", max_k, "largest family parameter k");
  atlas->add_option("--format", atlas_format, "json or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (const auto subs = app.get_subcommands(); !subs.empty())
      err << subs.front()->help();
    else
      err << app.help();
    return kExitUsage;
  }

  try {
    if (report->parsed()) return cmd_report(r, mult, format, out);
    if (verify_cmd->parsed()) return cmd_verify(vo, out, err);
    if (scan->parsed()) return cmd_scan(scan_rank, scan_mult, filters, scan_format, out);
    if (atlas->parsed()) return cmd_export_atlas(max_k, atlas_format, out, err);
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace evencliff
