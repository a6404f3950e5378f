#include "maxcurve/curve_models.hpp"
#include "maxcurve/genus_catalog.hpp"
#include "maxcurve/group_action.hpp"
#include "maxcurve/point_count.hpp"
#include "maxcurve/table1.hpp"
#include "maxcurve/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mc = maxcurve;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kVerifyFailed = 3;
constexpr int kInternal = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json big(const mc::BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

std::string rational_str(const mc::Rational& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string echo(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) s += (i ? " " : "") + std::string(argv[i]);
  return s;
}

json record(const std::string& command, json inputs, json modulus, json results, double seconds) {
  json out;
  out["command"] = command;
  out["version"] = mc::kVersion;
  out["inputs"] = std::move(inputs);
  out["field_modulus"] = std::move(modulus);
  out["results"] = std::move(results);
  out["timing"] = {{"seconds", seconds}};
  return out;
}

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("MAXCURVE_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) throw UsageError("MAXCURVE_THREADS must be a positive integer");
    return static_cast<int>(v);
  }
  return mc::default_threads();
}

mc::CurveParams family_params(const std::string& family, int s) {
  const auto f = mc::parse_family(family);
  if (!f) throw UsageError("unknown family '" + family + "'");
  return mc::params_from_s(*f, s);
}

std::optional<std::vector<int>> parse_modulus(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("modulus must be comma-separated integer coefficients, constant term first");
    }
  }
  return out;
}

std::set<mc::BigInt> read_baseline(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read baseline file " + path);
  std::set<mc::BigInt> vals;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(b, e - b + 1);
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("baseline line " + std::to_string(lineno) + " is not a nonnegative integer");
    vals.insert(mc::BigInt(tok));
  }
  return vals;
}

int cmd_genus(const std::string& cmd, const std::string& family, int s) {
  const auto t0 = std::chrono::steady_clock::now();
  const mc::CurveParams c = family_params(family, s);
  json in = {{"family", family}, {"s", s}};
  json res = {{"family", mc::family_name(c.family)}, {"p", c.p}, {"q0", c.q0}, {"q", c.q}, {"m", c.m}, {"genus", big(mc::genus(c))}};
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << record(cmd, in, nullptr, res, secs).dump(2) << "\n";
  return kOk;
}

int cmd_count(const std::string& cmd, const std::string& family, int s, int ext, bool allow_long, bool verify,
              int threads_flag, const std::string& modulus) {
  const mc::CurveParams c = family_params(family, s);
  mc::CountOptions opt;
  opt.threads = resolve_threads(threads_flag);
  opt.allow_long = allow_long;
  opt.modulus = parse_modulus(modulus);
  if (const auto why = mc::count_scope_problem(c, ext, allow_long); !why.empty()) throw UsageError(why);
  const mc::CountReport rep = mc::count_points(c, ext, opt);
  json in = {{"family", family}, {"s", s}, {"ext", ext}, {"long", allow_long}, {"verify_maximal", verify}, {"threads", rep.threads}};
  json res;
  res["N"] = rep.count;
  res["ell"] = rep.ell;
  res["genus"] = big(mc::genus(c));
  res["hasse_weil_target"] = rep.target ? big(*rep.target) : json(nullptr);
  res["is_maximal"] = rep.is_maximal;
  if (!rep.note.empty()) res["note"] = rep.note;
  std::cout << record(cmd, in, rep.modulus, res, rep.seconds).dump(2) << "\n";
  return (verify && !rep.is_maximal) ? kVerifyFailed : kOk;
}

int cmd_spectrum(const std::string& cmd, const std::string& family, int s, const std::string& format,
                 const std::string& baseline, bool check_table1, int threads_flag) {
  const auto t0 = std::chrono::steady_clock::now();
  const mc::CurveParams c = family_params(family, s);
  if (!mc::is_cover(c.family)) throw UsageError("spectrum needs a cover family (suzuki-cover or ree-cover)");
  if ((c.suzuki() && s > 3) || (!c.suzuki() && s > 2)) throw UsageError("spectrum is supported for Suzuki s <= 3 and Ree s <= 2");
  std::optional<std::set<mc::BigInt>> base;
  if (!baseline.empty()) base = read_baseline(baseline);
  const int threads = resolve_threads(threads_flag);
  const mc::SpectrumResult sp = mc::spectrum(c, threads);

  std::vector<mc::BigInt> fresh;
  if (base)
    for (const auto& g : sp.genera)
      if (!base->count(g)) fresh.push_back(g);
  std::optional<mc::Table1Check> t1;
  if (check_table1) {
    const auto row = mc::table1_row(c.suzuki(), s);
    if (!row) throw UsageError("no Table 1 row for this family and s");
    t1 = mc::table1_check(*row, sp.genera);
  }
  std::size_t unexplained = 0;
  for (const auto& r : sp.mismatches) unexplained += r.notes.rfind("documented", 0) != 0;
  const int code = unexplained ? kInternal : (t1 && !t1->contained ? kVerifyFailed : kOk);

  if (format == "csv") {
    std::cout << "kind,params,order,delta,genus\n";
    for (const auto& r : sp.records)
      std::cout << mc::kind_name(r.spec.kind) << ',' << r.spec.param_string() << ',' << r.order << ',' << r.delta << ','
                << *r.genus_delta << "\n";
    if (base) {
      std::cout << "# not in baseline:";
      for (const auto& g : fresh) std::cout << ' ' << g;
      std::cout << "\n";
    }
    if (t1) {
      std::cout << "# table1 " << t1->field << " contained=" << (t1->contained ? "true" : "false") << " missing:";
      for (auto g : t1->missing) std::cout << ' ' << g;
      std::cout << "\n";
    }
    return code;
  }

  json in = {{"family", family}, {"s", s}, {"format", format}, {"baseline", baseline.empty() ? json(nullptr) : json(baseline)},
             {"check_table1", check_table1}, {"threads", threads}};
  json records = json::array();
  for (const auto& r : sp.records) {
    json jr;
    jr["kind"] = mc::kind_name(r.spec.kind);
    jr["params"] = r.spec.param_string();
    jr["order"] = big(r.order);
    jr["delta"] = big(r.delta);
    jr["genus"] = big(*r.genus_delta);
    jr["genus_closed"] = r.genus_closed ? json(rational_str(*r.genus_closed)) : json(nullptr);
    jr["existence_certified"] = r.existence_certified;
    jr["mismatch"] = r.mismatch;
    jr["notes"] = r.notes;
    records.push_back(std::move(jr));
  }
  json genera = json::array();
  for (const auto& g : sp.genera) genera.push_back(big(g));
  json res;
  res["specs_considered"] = sp.specs_considered;
  res["records"] = std::move(records);
  res["genera"] = std::move(genera);
  res["mismatches"] = {{"total", sp.mismatches.size()}, {"unexplained", unexplained}};
  if (base) {
    json d = json::array();
    for (const auto& g : fresh) d.push_back(big(g));
    res["not_in_baseline"] = std::move(d);
  }
  if (t1) res["table1"] = {{"field", t1->field}, {"contained", t1->contained}, {"missing", t1->missing}};
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << record(cmd, in, nullptr, res, secs).dump(2) << "\n";
  return code;
}

int cmd_verify_group(const std::string& cmd, int s, bool as_json, std::uint64_t seed, const std::string& modulus) {
  if (s != 1) throw UsageError("verify-group materializes the action only for s = 1 (q = 8)");
  const auto t0 = std::chrono::steady_clock::now();
  const mc::CurveParams c = mc::params_from_s(mc::Family::SuzukiCover, s);
  const mc::GroupVerification v = mc::verify_group(c, parse_modulus(modulus), seed);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (as_json) {
    json rows = json::array();
    for (const auto& r : v.rows)
      rows.push_back({{"name", r.name}, {"class", r.cls}, {"expected", r.expected}, {"observed", r.observed}, {"ok", r.ok}, {"detail", r.detail}});
    json zeros = json::array();
    const auto F = mc::make_field(2, 4 * c.d, parse_modulus(modulus));
    for (const auto& p : v.phi_beta_zero) zeros.push_back({F.index(p.x), F.index(p.y), F.index(p.t)});
    json res;
    res["places"] = v.places;
    res["orbits"] = v.orbits;
    res["orbits_ok"] = v.orbits_ok;
    res["stabilizer_order"] = v.stabilizer_order;
    res["stabilizer_ok"] = v.stabilizer_ok;
    res["phi_beta_zero"] = std::move(zeros);
    res["phi_ok"] = v.phi_ok;
    res["gamma_commutes"] = v.gamma_commutes;
    res["theta_literal_only_a1"] = v.theta_literal_only_a1;
    res["rows"] = std::move(rows);
    res["ok"] = v.ok();
    std::cout << record(cmd, {{"s", s}, {"seed", seed}}, v.modulus, res, secs).dump(2) << "\n";
  } else {
    auto flag = [](bool ok) { return ok ? "ok  " : "FAIL"; };
    std::cout << "field modulus " << v.modulus << ", places " << v.places << ", seed " << v.seed << "\n";
    std::cout << flag(v.orbits_ok) << " orbits (";
    for (std::size_t i = 0; i < v.orbits.size(); ++i) std::cout << (i ? ", " : "") << v.orbits[i];
    std::cout << ")\n";
    std::cout << flag(v.stabilizer_ok) << " stabilizer of the infinite place has order " << v.stabilizer_order << "\n";
    std::cout << flag(v.phi_ok) << " phi is an involution with one fixed place (beta vanishes at " << v.phi_beta_zero.size()
              << " affine place)\n";
    std::cout << flag(v.gamma_commutes) << " gamma commutes with all generators\n";
    std::cout << flag(v.theta_literal_only_a1) << " literal (Ax+b, ..., At) preserves the curve only for A = 1\n";
    for (const auto& r : v.rows) {
      std::cout << flag(r.ok) << ' ' << r.name << " [" << r.cls << "] expected " << r.expected << " observed " << r.observed;
      if (!r.detail.empty()) std::cout << "  " << r.detail;
      std::cout << "\n";
    }
    std::cout << (v.ok() ? "all rows confirmed" : "verification failed") << "\n";
  }
  return v.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal curves from Suzuki and Ree covers: genera, point counts, quotient spectra"};
  app.set_version_flag("--version", std::string(mc::kVersion));
  app.require_subcommand(1);

  std::string family;
  int s = 1, ext = 1, threads = 0;
  bool allow_long = false, verify = false, check_table1 = false, as_json = false;
  std::string format = "json", baseline, modulus;
  std::uint64_t seed = 20240611;

  auto* genus = app.add_subcommand("genus", "genus and parameters of a curve");
  genus->add_option("--family", family, "suzuki-base | suzuki-cover | ree-base | ree-cover")->required();
  genus->add_option("--s", s, "q0 = p^s")->required();

  auto* count = app.add_subcommand("count", "count rational places over F_{q^ext}");
  count->add_option("--family", family)->required();
  count->add_option("--s", s)->required();
  count->add_option("--ext", ext, "extension degree r")->required();
  count->add_flag("--long", allow_long, "allow long-running counts");
  count->add_flag("--verify-maximal", verify, "exit 3 unless the count meets the Hasse-Weil bound");
  count->add_option("--threads", threads, "worker threads (default: MAXCURVE_THREADS or hardware concurrency)");
  count->add_option("--modulus", modulus, "field modulus coefficients, constant term first, comma-separated");

  auto* spec = app.add_subcommand("spectrum", "genera of quotient curves of a cover");
  spec->add_option("--family", family)->required();
  spec->add_option("--s", s)->required();
  spec->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  spec->add_option("--baseline", baseline, "file of known genera; report computed values not in it");
  spec->add_flag("--check-table1", check_table1, "check containment of the published genera");
  spec->add_option("--threads", threads);

  auto* vg = app.add_subcommand("verify-group", "brute-force check of the group action at q = 8");
  vg->add_option("--s", s)->required();
  vg->add_flag("--json", as_json);
  vg->add_option("--seed", seed, "seed for the random element search");
  vg->add_option("--modulus", modulus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string cmd = echo(argc, argv);
  try {
    if (genus->parsed()) return cmd_genus(cmd, family, s);
    if (count->parsed()) return cmd_count(cmd, family, s, ext, allow_long, verify, threads, modulus);
    if (spec->parsed()) return cmd_spectrum(cmd, family, s, format, baseline, check_table1, threads);
    if (vg->parsed()) return cmd_verify_group(cmd, s, as_json, seed, modulus);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const mc::FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
