// Command-line front end over the C interface of libcremona.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cremona/cremona_c.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20240917;

// A failed library call, carrying the C status.
struct Failure {
  cremona_status status;
  std::string message;
};

void check(cremona_status s) {
  if (s != CREMONA_OK) throw Failure{s, cremona_last_error()};
}

struct UsageError {
  std::string message;
};

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out(s ? s : "");
  cremona_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};
using Vector = Handle<cremona_vector, cremona_vector_free>;
using Isometry = Handle<cremona_isometry, cremona_isometry_free>;
using Config = Handle<cremona_config, cremona_config_free>;
using Curve = Handle<cremona_curve, cremona_curve_free>;

// Inline JSON, or a path to a JSON file.
std::string load_text(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{' || arg[first] == '"')) return arg;
  std::ifstream in(arg);
  if (!in) throw UsageError{"cannot read " + arg};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json(const std::string& arg) {
  try {
    return Json::parse(load_text(arg));
  } catch (const Json::parse_error& e) {
    throw UsageError{"malformed JSON in " + arg + ": " + e.what()};
  }
}

std::vector<int> word_arg(const std::string& arg) {
  const Json j = load_json(arg);
  if (!j.is_array()) throw UsageError{"a word is a JSON array of letters"};
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw UsageError{"letters are integers"};
    out.push_back(x.get<int>());
  }
  return out;
}

std::string compact(const Json& j) { return j.dump(); }

std::string field_json(std::uint64_t p, int e) { return Json{{"p", p}, {"e", e}}.dump(); }

// y^2 z = x^3 - x z^2, which has full rational 2-torsion when p is odd.
const char* kLegendre = R"({"021": 1, "300": -1, "102": 1})";
const char* kCusp = R"({"021": 1, "300": -1})";

struct Options {
  int n = 10;
  int m = 2;
  std::uint64_t p = 101;
  int e = 1;
  int max_degree = 3;
  std::string method = "bfs";
  std::uint64_t budget = 0;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  bool trace = false;
  bool csv = false;
  std::string word, vector, matrix, iota, points, curve, params, submodule;
  int root = 1;
  int count = 10;
};

class Output {
 public:
  Output(const Options& o, std::string command) : o_(o), command_(std::move(command)) {}
  void line(const std::string& s) { lines_.push_back(s); }
  Json& result() { return result_; }
  void emit() const {
    if (o_.json) {
      Json doc{{"version", cremona_version()}, {"seed", o_.seed}, {"command", command_}, {"result", result_}};
      std::cout << doc.dump(2) << "\n";
      return;
    }
    std::cout << "# cremona " << cremona_version() << " command=" << command_ << " seed=" << o_.seed << "\n";
    for (const auto& l : lines_) std::cout << l << "\n";
  }

 private:
  const Options& o_;
  std::string command_;
  std::vector<std::string> lines_;
  Json result_ = Json::object();
};

std::string yes(bool b) { return b ? "true" : "false"; }

void cmd_gram(const Options& o, Output& out) {
  char* s = nullptr;
  check(cremona_gram_matrix(o.n, &s));
  const Json g = Json::parse(take(s));
  out.result()["n"] = o.n;
  out.result()["gram"] = g;
  for (const auto& row : g) {
    std::string l;
    for (const auto& x : row) l += (l.empty() ? "" : " ") + std::to_string(x.get<long>());
    out.line(l);
  }
}

void cmd_enumerate_roots(const Options& o, Output& out) {
  char* s = nullptr;
  check(cremona_enumerate_roots(o.n, o.max_degree, 0, &s));
  const Json roots = Json::parse(take(s));
  check(cremona_enumerate_roots(o.n, o.max_degree, 1, &s));
  const std::string csv = take(s);
  out.result()["n"] = o.n;
  out.result()["max_degree"] = o.max_degree;
  out.result()["count"] = roots.size();
  out.result()["roots"] = roots;
  out.line("count=" + std::to_string(roots.size()));
  std::istringstream in(csv);
  for (std::string l; std::getline(in, l);) out.line(l);
}

void cmd_coble_conditions(const Options&, Output& out) {
  char* s = nullptr;
  check(cremona_coble_conditions(0, &s));
  const Json fam = Json::parse(take(s));
  check(cremona_coble_conditions(1, &s));
  const std::string csv = take(s);
  std::map<std::string, int> counts;
  for (const auto& f : fam) counts[f["label"].get<std::string>()]++;
  std::string summary = "families=" + std::to_string(fam.size());
  for (const auto& [k, v] : counts) summary += " " + k + "=" + std::to_string(v);
  out.line(summary);
  std::istringstream in(csv);
  for (std::string l; std::getline(in, l);) out.line(l);
  out.result()["families"] = fam;
  out.result()["counts"] = counts;
}

void cmd_residue_counts(const Options&, Output& out) {
  long iso = 0, one = 0;
  check(cremona_residue_counts(&iso, &one));
  out.line("isotropic=" + std::to_string(iso) + " norm_one=" + std::to_string(one));
  out.result()["isotropic"] = iso;
  out.result()["norm_one"] = one;
}

void cmd_classify(const Options& o, Output& out) {
  Isometry g;
  if (!o.word.empty()) {
    const auto w = word_arg(o.word);
    check(cremona_isometry_from_word(o.n, w.data(), w.size(), g.out()));
  } else if (!o.matrix.empty()) {
    check(cremona_isometry_from_json(load_text(o.matrix).c_str(), g.out()));
  } else if (!o.iota.empty()) {
    Vector w;
    check(cremona_vector_from_json(load_text(o.iota).c_str(), w.out()));
    check(cremona_isometry_iota(w.get(), g.out()));
  } else {
    throw UsageError{"classify needs --word, --matrix or --iota"};
  }
  char* s = nullptr;
  check(cremona_isometry_classify(g.get(), &s));
  const Json c = Json::parse(take(s));
  out.result() = c;
  std::string l = "kind=" + c["kind"].get<std::string>();
  std::ostringstream rho;
  rho.precision(12);
  rho << c["spectral_radius"].get<double>();
  l += " spectral_radius=" + rho.str();
  if (!c["order"].is_null()) l += " order=" + c["order"].get<std::string>();
  if (!c["witness"].is_null()) l += " witness=" + compact(c["witness"]);
  out.line(l);
}

void cmd_reduce(const Options& o, Output& out) {
  if (o.vector.empty()) throw UsageError{"reduce needs --vector"};
  Vector v;
  check(cremona_vector_from_json(load_text(o.vector).c_str(), v.out()));
  char* s = nullptr;
  check(cremona_vector_to_json(v.get(), &s));
  if (Json::parse(take(s)).size() != static_cast<std::size_t>(o.n) + 1)
    throw UsageError{"vector length does not match --n"};
  check(cremona_noether_reduce(v.get(), &s));
  const Json r = Json::parse(take(s));
  out.result() = r;
  if (o.trace)
    for (const auto& l : r["trace"]) out.line(l.get<std::string>());
  std::string l = "terminal=" + compact(r["terminal"]) + " word=" + compact(r["word"]);
  if (!r["simple_root"].is_null())
    l += " simple_root=" + std::string(r["sign"].get<int>() < 0 ? "-" : "+") + "alpha_" +
         std::to_string(r["simple_root"].get<int>());
  out.line(l);
}

void load_curve(const Options& o, Curve& c, const char* fallback) {
  if (!o.curve.empty()) {
    const Json j = load_json(o.curve);
    if (j.contains("coefficients")) check(cremona_curve_from_json(j.dump().c_str(), nullptr, c.out()));
    else check(cremona_curve_from_json(j.dump().c_str(), field_json(o.p, o.e).c_str(), c.out()));
  } else {
    check(cremona_curve_from_json(fallback, field_json(o.p, o.e).c_str(), c.out()));
  }
}

std::string points_of(const cremona_config* cfg) {
  char* s = nullptr;
  check(cremona_config_to_json(cfg, &s));
  return Json::parse(take(s))["points"].dump();
}

void cmd_halphen_check(const Options& o, Output& out) {
  Config cfg;
  Curve curve;
  const bool have_curve = !o.curve.empty() || o.points.empty();
  if (have_curve) load_curve(o, curve, kLegendre);
  if (!o.points.empty()) {
    check(cremona_config_from_json(load_text(o.points).c_str(), cfg.out()));
  } else {
    check(cremona_curve_halphen_points(curve.get(), o.m, o.seed, 1, cfg.out()));
    out.line("constructed Halphen set of index " + std::to_string(o.m) + " on y^2 z = x^3 - x z^2 over F_" +
             std::to_string(o.p));
  }
  char* s = nullptr;
  check(cremona_config_to_json(cfg.get(), &s));
  out.result()["config"] = Json::parse(take(s));
  std::string l;
  if (have_curve) {
    int ok = 0;
    check(cremona_curve_halphen_index(curve.get(), points_of(cfg.get()).c_str(), o.m, &ok));
    out.result()["index_ok"] = static_cast<bool>(ok);
    l += "index_ok=" + yes(ok) + " ";
  }
  check(cremona_config_halphen_check(cfg.get(), o.m, &s));
  const Json r = Json::parse(take(s));
  out.result()["report"] = r;
  l += "unnodal=" + yes(r["unnodal"].get<bool>());
  if (!r["witness"].is_null()) l += " witness=" + compact(r["witness"]) + " kind=" + r["witness_kind"].get<std::string>();
  out.line(l);
}

void cmd_coble_check(const Options& o, Output& out) {
  Config cfg;
  if (!o.points.empty()) {
    check(cremona_config_from_json(load_text(o.points).c_str(), cfg.out()));
  } else {
    Options big = o;
    if (o.p == 101) big.p = 32003;  // small planes rarely carry Coble sets
    Curve curve;
    load_curve(big, curve, kLegendre);
    check(cremona_curve_coble_points(curve.get(), o.seed, cfg.out()));
    out.line("constructed Coble set over F_" + std::to_string(big.p));
  }
  char* s = nullptr;
  check(cremona_config_to_json(cfg.get(), &s));
  out.result()["config"] = Json::parse(take(s));
  check(cremona_config_coble_check(cfg.get(), &s));
  const Json r = Json::parse(take(s));
  out.result()["report"] = r;
  std::string l = "coble=" + yes(r["unnodal"].get<bool>()) + " sextic_unique=" + yes(r["sextic_unique"].get<bool>());
  if (!r["witness"].is_null()) l += " witness=" + compact(r["witness"]) + " kind=" + r["witness_kind"].get<std::string>();
  out.line(l);
}

void cmd_harbourne_check(const Options& o, Output& out) {
  Options f = o;
  if (o.p == 101 && o.e == 1) {
    f.p = 5;
    f.e = 12;
  }
  Curve curve;
  load_curve(f, curve, kCusp);
  Json params;
  if (!o.params.empty()) {
    params = load_json(o.params);
  } else {
    std::mt19937_64 rng(o.seed);
    params = Json::array();
    for (int i = 0; i < o.count; ++i) {
      Json c = Json::array();
      for (int k = 0; k < f.e; ++k) c.push_back(std::to_string(rng() % f.p));
      params.push_back(f.e == 1 ? c[0] : c);
    }
  }
  char* s = nullptr;
  check(cremona_curve_points_from_params(curve.get(), params.dump().c_str(), &s));
  const std::string pts = take(s);
  check(cremona_curve_harbourne_check(curve.get(), pts.c_str(), &s));
  const Json r = Json::parse(take(s));
  check(cremona_curve_kernel_check(curve.get(), pts.c_str(), o.max_degree, o.budget, o.seed, &s));
  const Json k = Json::parse(take(s));
  out.result()["params"] = params;
  out.result()["harbourne"] = r;
  out.result()["kernel_check"] = k;
  std::string l = "harbourne=" + yes(r["harbourne"].get<bool>()) +
                  " kernel=" + (r["harbourne"].get<bool>() ? r["kernel"].get<std::string>() : "larger") +
                  " rank=" + std::to_string(r["rank"].get<int>()) + " verdict=" + k["verdict"].get<std::string>();
  if (!k["witness"].is_null()) l += " witness=" + compact(k["witness"]);
  out.line(l);
}

void cmd_cremona_act(const Options& o, Output& out) {
  if (o.points.empty() || o.word.empty()) throw UsageError{"cremona-act needs --points and --word"};
  Config cfg, moved;
  check(cremona_config_from_json(load_text(o.points).c_str(), cfg.out()));
  const auto w = word_arg(o.word);
  check(cremona_config_act(cfg.get(), w.data(), w.size(), moved.out()));
  char* s = nullptr;
  check(cremona_config_to_json(moved.get(), &s));
  const Json r = Json::parse(take(s));
  out.result()["config"] = r;
  out.line(r.dump());
}

void cmd_orbit_fixed(const Options& o, Output& out) {
  Curve curve;
  load_curve(o, curve, kLegendre);
  Config h;
  check(cremona_curve_halphen_points(curve.get(), o.m, o.seed, 1, h.out()));
  Vector alpha, w;
  check(cremona_simple_root(9, o.root, alpha.out()));
  check(cremona_vector_scale(alpha.get(), o.m, w.out()));
  Isometry g;
  check(cremona_isometry_iota(w.get(), g.out()));
  char* s = nullptr;
  check(cremona_isometry_to_word(g.get(), &s));
  const auto word = Json::parse(take(s)).get<std::vector<int>>();
  Config moved;
  check(cremona_config_act(h.get(), word.data(), word.size(), moved.out()));
  int eq = 0;
  check(cremona_config_equivalent(moved.get(), h.get(), &eq));
  check(cremona_config_to_json(h.get(), &s));
  out.result()["config"] = Json::parse(take(s));
  out.result()["word"] = word;
  out.result()["fixed"] = static_cast<bool>(eq);
  out.line("fixed=" + yes(eq) + " word_length=" + std::to_string(word.size()) + " translation=iota(" +
           std::to_string(o.m) + " alpha_" + std::to_string(o.root) + ")");
}

void cmd_find_root_mod(const Options& o, Output& out) {
  std::string gens;
  char* s = nullptr;
  if (!o.submodule.empty()) {
    gens = load_json(o.submodule).dump();
  } else {
    check(cremona_random_submodule(o.m, 8, o.seed, &s));
    gens = take(s);
  }
  check(cremona_find_root(o.m, gens.c_str(), o.method.c_str(), o.budget, o.seed, &s));
  const std::string cert = take(s);
  int valid = 0;
  check(cremona_check_certificate(gens.c_str(), cert.c_str(), &valid));
  const Json c = Json::parse(cert);
  out.result()["submodule"] = Json::parse(gens);
  out.result()["certificate"] = c;
  out.result()["valid"] = static_cast<bool>(valid);
  if (o.trace) out.line("depth=" + std::to_string(c["depth"].get<int>()));
  out.line("method=" + c["method"].get<std::string>() + " modulus=" + std::to_string(o.m) +
           " depth=" + std::to_string(c["depth"].get<int>()) + " valid=" + yes(valid) + " root=" + compact(c["root"]) +
           " word=" + compact(c["word"]) + " start=alpha_" + std::to_string(c["start"].get<int>()));
}

void cmd_report(const Options& o, Output& out) {
  Output sub(o, "");
  cmd_residue_counts(o, sub);
  out.result()["residue_counts"] = sub.result();
  long iso = sub.result()["isotropic"], one = sub.result()["norm_one"];
  out.line("library=" + std::string(cremona_version()));
  out.line("residue_counts: isotropic=" + std::to_string(iso) + " norm_one=" + std::to_string(one));
  Output cc(o, "");
  cmd_coble_conditions(o, cc);
  out.result()["coble_condition_counts"] = cc.result()["counts"];
  out.line("coble_conditions: " + cc.result()["counts"].dump());
  Options h = o;
  Output hh(o, "");
  cmd_halphen_check(h, hh);
  out.result()["halphen_F101"] = hh.result()["report"];
  out.line("halphen F_101 m=" + std::to_string(o.m) + ": unnodal=" + yes(hh.result()["report"]["unnodal"].get<bool>()));
  Options hb = o;
  Output hr(o, "");
  cmd_harbourne_check(hb, hr);
  out.result()["harbourne_F5^12"] = hr.result()["harbourne"];
  out.line("harbourne F_5^12: harbourne=" + yes(hr.result()["harbourne"]["harbourne"].get<bool>()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cremona special point sets: lattice, Weyl group, cubic and quadratic-module tools"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--seed", o.seed, "seed for randomized searches")->capture_default_str();
  app.add_flag("--trace", o.trace, "step logs");

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_flag("--json", o.json, "machine-readable output");
    s->add_option("--seed", o.seed, "seed for randomized searches");
    s->add_flag("--trace", o.trace, "step logs");
    return s;
  };
  auto* gram = sub("gram", "Gram matrix of the simple roots");
  gram->add_option("--n", o.n)->check(CLI::Range(3, 64));
  auto* enumr = sub("enumerate-roots", "roots of bounded degree");
  enumr->add_option("--n", o.n)->check(CLI::Range(3, 16));
  enumr->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 12));
  sub("coble-conditions", "the 496 Coble condition families");
  sub("residue-counts", "isotropic and norm-one residues mod 2");
  auto* classify = sub("classify", "elliptic / parabolic / hyperbolic type of an isometry");
  classify->add_option("--n", o.n)->check(CLI::Range(3, 64));
  classify->add_option("--word", o.word, "JSON word");
  classify->add_option("--matrix", o.matrix, "JSON matrix or file");
  classify->add_option("--iota", o.iota, "vector w in Z^{1,9} orthogonal to k_9: classify iota(w)");
  auto* reduce = sub("reduce", "Noether reduction of a root");
  reduce->add_option("--n", o.n)->check(CLI::Range(3, 64));
  reduce->add_option("--vector", o.vector, "JSON vector or file")->required();
  auto* halphen = sub("halphen-check", "Halphen set unnodality");
  halphen->add_option("--m", o.m)->check(CLI::Range(1, 1000));
  halphen->add_option("--p", o.p);
  halphen->add_option("--e", o.e);
  halphen->add_option("--points", o.points, "configuration JSON; constructed when absent");
  halphen->add_option("--curve", o.curve, "cubic JSON");
  auto* coble = sub("coble-check", "Coble set unnodality");
  coble->add_option("--points", o.points, "configuration JSON; constructed when absent");
  coble->add_option("--p", o.p);
  coble->add_option("--e", o.e);
  coble->add_option("--curve", o.curve, "cubic JSON");
  auto* harb = sub("harbourne-check", "Harbourne sets on the cuspidal cubic");
  harb->add_option("--p", o.p);
  harb->add_option("--e", o.e);
  harb->add_option("--params", o.params, "JSON array of parameters; random when absent");
  harb->add_option("--count", o.count, "number of random parameters")->check(CLI::Range(10, 64));
  harb->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 12));
  harb->add_option("--budget", o.budget);
  auto* act = sub("cremona-act", "Cremona action of a Weyl word on a configuration");
  act->add_option("--points", o.points, "configuration JSON")->required();
  act->add_option("--word", o.word, "JSON word")->required();
  auto* orbit = sub("orbit-fixed", "a Halphen set is fixed by index-m translations");
  orbit->add_option("--m", o.m)->check(CLI::Range(1, 12));
  orbit->add_option("--p", o.p);
  orbit->add_option("--root", o.root, "translate by m alpha_root")->check(CLI::Range(0, 7));
  orbit->add_option("--curve", o.curve, "cubic JSON");
  auto* find = sub("find-root-mod", "a root of E_10 reducing into a submodule mod m");
  find->add_option("--m", o.m)->check(CLI::Range(2, 84));
  find->add_option("--method", o.method)->check(CLI::IsMember({"theory", "bfs"}));
  find->add_option("--budget", o.budget);
  find->add_option("--submodule", o.submodule, "JSON generator list; random rank 8 when absent");
  sub("report", "reproducibility summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  Output out(o, name);
  try {
    if (name == "gram") cmd_gram(o, out);
    else if (name == "enumerate-roots") cmd_enumerate_roots(o, out);
    else if (name == "coble-conditions") cmd_coble_conditions(o, out);
    else if (name == "residue-counts") cmd_residue_counts(o, out);
    else if (name == "classify") cmd_classify(o, out);
    else if (name == "reduce") cmd_reduce(o, out);
    else if (name == "halphen-check") cmd_halphen_check(o, out);
    else if (name == "coble-check") cmd_coble_check(o, out);
    else if (name == "harbourne-check") cmd_harbourne_check(o, out);
    else if (name == "cremona-act") cmd_cremona_act(o, out);
    else if (name == "orbit-fixed") cmd_orbit_fixed(o, out);
    else if (name == "find-root-mod") cmd_find_root_mod(o, out);
    else if (name == "report") cmd_report(o, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    switch (f.status) {
      case CREMONA_E_DOMAIN: return 2;
      case CREMONA_E_INCONCLUSIVE: return 3;
      default: return 1;
    }
  }
  out.emit();
  return 0;
}
