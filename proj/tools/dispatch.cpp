#include "dispatch.hpp"

#include "turnkit/turnkit.h"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <thread>

namespace turnkit::cli {

namespace {

/// Thrown for input problems detected before reaching the library.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + s + "' is not an integer");
  }
  if (used != s.size()) throw UsageError(what + ": '" + s + "' is not an integer");
  return v;
}

/// "1,-2,0" -> {1, -2, 0}; the empty string is the empty cochain.
std::vector<long> parse_cochain(const std::string& s, const std::string& what) {
  std::vector<long> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_long(item, what));
  if (s.back() == ',') throw UsageError(what + ": trailing comma");
  return out;
}

/// Each value may hold several cochains separated by ';'.
std::vector<std::vector<long>> parse_cochains(const std::vector<std::string>& values, const std::string& what) {
  std::vector<std::vector<long>> out;
  for (const auto& v : values) {
    std::stringstream in(v);
    std::string item;
    while (std::getline(in, item, ';')) out.push_back(parse_cochain(item, what));
  }
  return out;
}

struct CoordOptions {
  int k = 0;
  long a = 0, b = 0, k1 = 0, k2 = 0, euler = 0, xi = 0;
  CLI::Option *oa = nullptr, *ob = nullptr, *ok1 = nullptr, *ok2 = nullptr, *oeuler = nullptr, *oxi = nullptr;

  void add(CLI::App* app, bool k_required) {
    auto* ok = app->add_option("--k", k, "half the rank of the bundle (bundle over S^2k)");
    if (k_required) ok->required();
    oa = app->add_option("--a", a, "coefficient of tau");
    ob = app->add_option("--b", b, "coefficient of sigma");
    ok1 = app->add_option("--k1", k1, "first clutching exponent (k = 2)");
    ok2 = app->add_option("--k2", k2, "second clutching exponent (k = 2)");
    oeuler = app->add_option("--euler", euler, "Euler number");
    oxi = app->add_option("--xi", xi, "KO class coordinate");
  }

  tk_coords get() const {
    tk_coords c{};
    c.k = k;
    auto pick = [&](CLI::Option* o, unsigned bit, long v, long& slot) {
      if (o->count() > 0) {
        c.set |= bit;
        slot = v;
      }
    };
    pick(oa, TK_COORD_A, a, c.a);
    pick(ob, TK_COORD_B, b, c.b);
    pick(ok1, TK_COORD_K1, k1, c.k1);
    pick(ok2, TK_COORD_K2, k2, c.k2);
    pick(oeuler, TK_COORD_EULER, euler, c.euler);
    pick(oxi, TK_COORD_XI, xi, c.xi);
    return c;
  }
};

using Action = std::function<tk_status(tk_report**)>;

struct ComplexHandle {
  tk_complex* ptr = nullptr;
  ~ComplexHandle() { tk_complex_free(ptr); }
};

int status_exit(tk_status s) {
  switch (s) {
    case TK_OK: return kOk;
    case TK_INVALID_INPUT: return kInvalid;
    default: return kFailure;
  }
}

std::string status_prefix(tk_status s) {
  switch (s) {
    case TK_INVALID_INPUT: return "invalid input: ";
    case TK_NUMERIC_FAILURE: return "numerical failure: ";
    default: return "error: ";
  }
}

}  // namespace

Result dispatch(const std::vector<std::string>& args) {
  Result result;
  CLI::App app{"Turning obstructions and related invariants of oriented bundles.", "turnkit"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  std::string format = "text";
  std::string batch;
  unsigned threads = 0;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "record"}));
  auto* batch_opt = app.add_option("--batch", batch, "file with one command per line, run concurrently");
  app.add_option("--threads", threads, "worker threads for --batch (0 = hardware concurrency)");

  Action action;

  CoordOptions sphere_c;
  auto* sphere = app.add_subcommand("sphere", "turning type and obstructions of a bundle over S^2k");
  sphere_c.add(sphere, true);

  long range = 3;
  auto* s4 = app.add_subcommand("s4", "classification of the bundles E_{k1,k2} over S^4");
  s4->add_option("--range", range, "bound on |k1| and |k2|")->capture_default_str();

  int groupoid_k = 0;
  auto* groupoid = app.add_subcommand("groupoid", "central groupoid of SO_2k and pi_1(PSO_2k)");
  groupoid->add_option("--k", groupoid_k, "half the rank")->required();

  CoordOptions gauge_c;
  auto* gauge = app.add_subcommand("gauge", "components of the gauge group, Samelson and boundary values");
  gauge_c.add(gauge, true);

  int samelson_k = 0;
  auto* samelson = app.add_subcommand("samelson", "Samelson product <tau, eta> and the boundary value");
  samelson->add_option("--k", samelson_k, "half the rank")->required();

  int rel_k = 0, rel_random = 64;
  long rel_bound = 8;
  std::uint64_t rel_seed = 1;
  auto* relations = app.add_subcommand("relations", "check the relations among TO_+, TO_- and TO_eta");
  relations->add_option("--k", rel_k, "half the rank")->required();
  relations->add_option("--bound", rel_bound, "grid bound on |a| and |b|")->capture_default_str();
  relations->add_option("--random", rel_random, "number of seeded random pairs")->capture_default_str();
  relations->add_option("--seed", rel_seed, "random seed")->capture_default_str();

  auto* cw = app.add_subcommand("cw", "cohomology and turning criteria on finite complexes");
  cw->require_subcommand(1);
  std::string path;
  auto add_path = [&](CLI::App* sub) { sub->add_option("complex", path, "complex file")->required(); };

  std::string ring = "Z";
  int coh_degree = -1;
  bool with_generators = false;
  auto* cw_coh = cw->add_subcommand("cohomology", "cohomology groups");
  add_path(cw_coh);
  cw_coh->add_option("--ring", ring, "coefficients")->check(CLI::IsMember({"Z", "Z2", "Z4"}))->capture_default_str();
  cw_coh->add_option("--degree", coh_degree, "single degree (default: all)");
  cw_coh->add_flag("--generators", with_generators, "include generator cocycles");

  int sq2_degree = -1;
  auto* cw_sq2 = cw->add_subcommand("sq2", "Sq^2 on mod 2 cohomology");
  add_path(cw_sq2);
  cw_sq2->add_option("--degree", sq2_degree, "source degree (default: all)");

  int tc_k = 0;
  std::string tc_euler;
  std::vector<std::string> tc_ck;
  bool stably_trivial = false;
  auto* cw_tc = cw->add_subcommand("tc", "rho4(c_k) = +/- rho4(e) turning condition");
  add_path(cw_tc);
  cw_tc->add_option("--k", tc_k, "half the degree")->required();
  cw_tc->add_option("--euler", tc_euler, "Euler cocycle, comma separated")->required();
  auto* ck_opt = cw_tc->add_option("--ck-mod4", tc_ck, "Chern candidate mod 4; ';' separates several");
  auto* st_opt = cw_tc->add_flag("--stably-trivial", stably_trivial, "use the single candidate 0");
  ck_opt->excludes(st_opt);

  int mod_k = 0;
  std::string mod_euler;
  std::vector<std::string> mod_list;
  auto* cw_mod = cw->add_subcommand("modify-euler", "add 2j to the Euler cocycle on named 2k-cells");
  add_path(cw_mod);
  cw_mod->add_option("--k", mod_k, "half the degree")->required();
  cw_mod->add_option("--euler", mod_euler, "Euler cocycle, comma separated")->required();
  cw_mod->add_option("--mod", mod_list, "modification CELL:J, repeatable");

  int th_k = 0;
  std::string th_euler;
  std::vector<std::string> th_ck;
  auto* cw_th = cw->add_subcommand("thomas", "c_k = e over Z against integral Chern candidates");
  add_path(cw_th);
  cw_th->add_option("--k", th_k, "half the degree")->required();
  cw_th->add_option("--euler", th_euler, "Euler cocycle, comma separated")->required();
  cw_th->add_option("--ck", th_ck, "integral Chern candidate; ';' separates several");

  auto* quat = app.add_subcommand("quat", "quaternionic numerics for bundles over S^4");
  quat->require_subcommand(1);
  int q_k1 = 0, q_k2 = 0, q_resolution = 4, q_samples = 256, kirchhoff_resolution = 32;
  std::uint64_t q_seed = 1;
  auto* q_extract = quat->add_subcommand("extract", "bidegree of the clutching map g_(k1,k2)");
  q_extract->add_option("--k1", q_k1)->required();
  q_extract->add_option("--k2", q_k2)->required();
  q_extract->add_option("--resolution", q_resolution, "refinement levels of S^3")->capture_default_str();
  q_extract->add_option("--seed", q_seed, "regular value seed")->capture_default_str();
  auto* q_commute = quat->add_subcommand("commute", "commutation with left and right multiplication by i");
  q_commute->add_option("--k1", q_k1)->required();
  q_commute->add_option("--k2", q_k2)->required();
  q_commute->add_option("--samples", q_samples)->capture_default_str();
  q_commute->add_option("--seed", q_seed)->capture_default_str();
  auto* q_kirchhoff = quat->add_subcommand("kirchhoff", "trivialization homotopy for TS^3");
  q_kirchhoff->add_option("--resolution", kirchhoff_resolution, "grid resolution")->capture_default_str();

  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    result.out = out.str();
    return result;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    result.out = out.str();
    return result;
  } catch (const CLI::ParseError& e) {
    err << "invalid input: " << e.what() << "\n\n" << app.help();
    result.err = err.str();
    result.exit_code = kInvalid;
    return result;
  }

  const bool has_sub = !app.get_subcommands().empty();
  if (batch_opt->count() > 0) {
    if (has_sub) {
      result.err = "invalid input: --batch cannot be combined with a subcommand\n";
      result.exit_code = kInvalid;
      return result;
    }
    std::ifstream in(batch);
    if (!in) {
      result.err = "invalid input: cannot read batch file " + batch + "\n";
      result.exit_code = kInvalid;
      return result;
    }
    std::stringstream text;
    text << in.rdbuf();
    return run_batch(text.str(), {"--format", format}, threads);
  }
  if (!has_sub) {
    result.err = "invalid input: a subcommand is required\n\n" + app.help();
    result.exit_code = kInvalid;
    return result;
  }

  ComplexHandle complex;
  auto load = [&]() -> tk_status { return tk_complex_load(path.c_str(), &complex.ptr); };
  std::vector<long> flat;
  auto flatten = [&](const std::vector<std::vector<long>>& list, std::size_t length) {
    for (const auto& c : list) {
      if (c.size() != length)
        throw UsageError("candidate has " + std::to_string(c.size()) + " entries, the Euler cocycle has " +
                         std::to_string(length));
      flat.insert(flat.end(), c.begin(), c.end());
    }
  };

  try {
    if (sphere->parsed()) {
      action = [&](tk_report** r) { const tk_coords c = sphere_c.get(); return tk_sphere(&c, r); };
    } else if (s4->parsed()) {
      action = [&](tk_report** r) { return tk_s4_table(range, r); };
    } else if (groupoid->parsed()) {
      action = [&](tk_report** r) { return tk_groupoid(groupoid_k, r); };
    } else if (gauge->parsed()) {
      action = [&](tk_report** r) { const tk_coords c = gauge_c.get(); return tk_gauge(&c, r); };
    } else if (samelson->parsed()) {
      action = [&](tk_report** r) { return tk_samelson(samelson_k, r); };
    } else if (relations->parsed()) {
      action = [&](tk_report** r) { return tk_relations(rel_k, rel_bound, rel_random, rel_seed, r); };
    } else if (cw_coh->parsed()) {
      const tk_ring rg = ring == "Z" ? TK_RING_Z : ring == "Z2" ? TK_RING_Z2 : TK_RING_Z4;
      action = [&, rg](tk_report** r) {
        tk_status s = load();
        return s != TK_OK ? s : tk_cw_cohomology(complex.ptr, rg, coh_degree, with_generators, r);
      };
    } else if (cw_sq2->parsed()) {
      action = [&](tk_report** r) {
        tk_status s = load();
        return s != TK_OK ? s : tk_cw_sq2(complex.ptr, sq2_degree, r);
      };
    } else if (cw_tc->parsed()) {
      auto euler = std::make_shared<std::vector<long>>(parse_cochain(tc_euler, "--euler"));
      const auto cands = parse_cochains(tc_ck, "--ck-mod4");
      flatten(cands, euler->size());
      action = [&, euler, count = cands.size()](tk_report** r) {
        tk_status s = load();
        return s != TK_OK ? s
                          : tk_cw_tc(complex.ptr, tc_k, euler->data(), euler->size(), flat.data(), count,
                                     stably_trivial, r);
      };
    } else if (cw_mod->parsed()) {
      auto euler = std::make_shared<std::vector<long>>(parse_cochain(mod_euler, "--euler"));
      auto cells = std::make_shared<std::vector<std::size_t>>();
      auto js = std::make_shared<std::vector<long>>();
      for (const auto& m : mod_list) {
        const auto colon = m.find(':');
        if (colon == std::string::npos) throw UsageError("--mod expects CELL:J, got '" + m + "'");
        const long cell = parse_long(m.substr(0, colon), "--mod cell");
        if (cell < 0) throw UsageError("--mod cell index must be non-negative");
        cells->push_back(static_cast<std::size_t>(cell));
        js->push_back(parse_long(m.substr(colon + 1), "--mod j"));
      }
      action = [&, euler, cells, js](tk_report** r) {
        tk_status s = load();
        return s != TK_OK ? s
                          : tk_cw_modify_euler(complex.ptr, mod_k, euler->data(), euler->size(), cells->data(),
                                               js->data(), cells->size(), r);
      };
    } else if (cw_th->parsed()) {
      auto euler = std::make_shared<std::vector<long>>(parse_cochain(th_euler, "--euler"));
      const auto cands = parse_cochains(th_ck, "--ck");
      flatten(cands, euler->size());
      action = [&, euler, count = cands.size()](tk_report** r) {
        tk_status s = load();
        return s != TK_OK ? s : tk_cw_thomas(complex.ptr, th_k, euler->data(), euler->size(), flat.data(), count, r);
      };
    } else if (q_extract->parsed()) {
      action = [&](tk_report** r) { return tk_quat_extract(q_k1, q_k2, q_resolution, q_seed, r); };
    } else if (q_commute->parsed()) {
      action = [&](tk_report** r) { return tk_quat_commute(q_k1, q_k2, q_samples, q_seed, r); };
    } else if (q_kirchhoff->parsed()) {
      action = [&](tk_report** r) { return tk_quat_kirchhoff(kirchhoff_resolution, r); };
    }
  } catch (const UsageError& e) {
    result.err = std::string("invalid input: ") + e.what() + "\n";
    result.exit_code = kInvalid;
    return result;
  }

  tk_report* report = nullptr;
  const tk_status status = action(&report);
  if (status != TK_OK) {
    result.err = status_prefix(status) + tk_last_error() + "\n";
    result.exit_code = status_exit(status);
    return result;
  }
  const bool record = format == "record";
  result.out = tk_report_render(report, record ? TK_FORMAT_RECORD : TK_FORMAT_TEXT);
  if (record) result.out += "\n";
  result.exit_code = tk_report_outcome(report) == TK_OUTCOME_UNDECIDED ? kUndecided : kOk;
  tk_report_free(report);
  return result;
}

Result run_batch(const std::string& text, const std::vector<std::string>& inherited, unsigned threads) {
  std::vector<std::vector<std::string>> lines;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::stringstream words(line);
    std::vector<std::string> args = inherited;
    std::string w;
    bool any = false;
    while (words >> w) {
      if (!any && w[0] == '#') break;
      any = true;
      args.push_back(w);
    }
    if (any) lines.push_back(std::move(args));
  }

  std::vector<Result> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < lines.size();) {
      const auto& args = lines[i];
      if (std::find(args.begin(), args.end(), "--batch") != args.end()) {
        results[i] = {kInvalid, "", "invalid input: nested --batch\n"};
        continue;
      }
      results[i] = dispatch(args);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, lines.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Result total;
  bool invalid = false, failed = false, undecided = false;
  for (std::size_t i = 0; i < results.size(); ++i) {
    total.out += results[i].out;
    if (!results[i].err.empty()) total.err += "line " + std::to_string(i + 1) + ": " + results[i].err;
    invalid = invalid || results[i].exit_code == kInvalid;
    failed = failed || results[i].exit_code == kFailure;
    undecided = undecided || results[i].exit_code == kUndecided;
  }
  total.exit_code = invalid ? kInvalid : failed ? kFailure : undecided ? kUndecided : kOk;
  return total;
}

}  // namespace turnkit::cli
