#include "k3lm_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <utility>

#include "k3lm/k3lm.hpp"

namespace k3lm::cli {
namespace {

using json = nlohmann::ordered_json;

struct ConfigError : Error {
  using Error::Error;
};

json num(const BigInt& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

json vec(const DivClass& d) {
  json a = json::array();
  for (const auto& c : d.coords()) a.push_back(num(c));
  return a;
}

json vec_list(const std::vector<DivClass>& ds) {
  json a = json::array();
  for (const auto& d : ds) a.push_back(vec(d));
  return a;
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json opt_num(const std::optional<BigInt>& v) { return v ? num(*v) : json(nullptr); }
json opt_vec(const std::optional<DivClass>& v) { return v ? vec(*v) : json(nullptr); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Aligned plain-text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& r = rows_[k];
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      os << "  " << line << '\n';
      if (k == 0) {
        std::size_t total = 0;
        for (auto w : width) total += w + 2;
        os << "  " << std::string(total - 2, '-') << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

// ---------------------------------------------------------------- config

BigInt parse_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(std::to_string(v.get<std::uint64_t>()))
                                  : BigInt(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_number_float()) {
    throw ConfigError(where + ": floats are not accepted (integers beyond 64 bits must be quoted)");
  }
  if (v.is_string()) {
    static const std::regex integer(R"(^[+-]?[0-9]+$)");
    const auto& s = v.get_ref<const std::string&>();
    if (std::regex_match(s, integer)) return BigInt(s[0] == '+' ? s.substr(1) : s);
  }
  throw ConfigError(where + ": expected an integer");
}

struct Config {
  json echo;
  PicardLattice lattice;
};

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "gram" && key != "polarization" && key != "names") {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  if (!doc.contains("gram")) throw ConfigError("config is missing 'gram'");
  if (!doc.contains("polarization")) throw ConfigError("config is missing 'polarization'");

  const json& g = doc["gram"];
  if (!g.is_array() || g.empty()) throw ConfigError("gram must be a non-empty array of rows");
  IntMatrix gram;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].is_array()) throw ConfigError("gram row " + std::to_string(i) + " is not an array");
    std::vector<BigInt> row;
    for (std::size_t j = 0; j < g[i].size(); ++j) {
      row.push_back(parse_integer(g[i][j], "gram[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    gram.push_back(std::move(row));
  }

  const json& p = doc["polarization"];
  if (!p.is_array()) throw ConfigError("polarization must be an array");
  std::vector<BigInt> h;
  for (std::size_t i = 0; i < p.size(); ++i) {
    h.push_back(parse_integer(p[i], "polarization[" + std::to_string(i) + "]"));
  }

  std::vector<std::string> names;
  if (doc.contains("names")) {
    const json& n = doc["names"];
    if (!n.is_array()) throw ConfigError("names must be an array of strings");
    for (const auto& s : n) {
      if (!s.is_string()) throw ConfigError("names must be an array of strings");
      names.push_back(s.get<std::string>());
    }
  }

  try {
    return Config{doc, PicardLattice::create(std::move(gram), DivClass(std::move(h)), std::move(names))};
  } catch (const LatticeError& e) {
    throw ConfigError(e.what());
  }
}

DivClass parse_class(const PicardLattice& lat, const std::string& text) {
  DivClass d = parse_div_class(text);
  lat.check_rank(d);
  return d;
}

// -------------------------------------------------------------- commands

struct Output {
  bool as_json;
  std::ostream& out;
  json results = json::object();
};

json obstruction_json(const std::optional<VeryAmpleObstruction>& o) {
  if (!o) return nullptr;
  return json{{"kind", to_string(o->kind)}, {"curve", opt_vec(o->curve)}};
}

json bpf_json(const std::optional<BpfObstruction>& o) {
  if (!o) return nullptr;
  return json{{"k", num(o->k)}, {"elliptic", vec(o->elliptic)}, {"root", vec(o->root)}};
}

std::string obstruction_text(const std::optional<VeryAmpleObstruction>& o) {
  if (!o) return "";
  return to_string(o->kind) + (o->curve ? " " + o->curve->to_string() : "");
}

void cmd_info(const ConeOracle& oracle, Output& o) {
  const auto& lat = oracle.lattice();
  const DivClass& h = lat.polarization();
  const BigInt h2 = lat.square(h);
  std::optional<VeryAmpleObstruction> va;
  if (h2 >= 4) {
    va = oracle.very_ample_obstruction(h);
  } else {
    va = VeryAmpleObstruction{VeryAmpleObstruction::Kind::small_square, {}};
  }
  const auto roots = oracle.irreducible_roots_up_to(h2);
  const Signature sig = signature_of(lat.gram());

  json gram = json::array();
  for (const auto& row : lat.gram()) gram.push_back(vec(DivClass(row)));
  o.results = {
      {"rank", lat.rank()},
      {"gram", gram},
      {"names", lat.names()},
      {"signature", json::array({sig.positive, sig.negative})},
      {"polarization", vec(h)},
      {"h_squared", num(h2)},
      {"genus", num(lat.genus(h))},
      {"ample", oracle.is_ample(h)},
      {"very_ample", !va.has_value()},
      {"very_ample_obstruction", obstruction_json(va)},
      {"irreducible_root_degree_cap", num(h2)},
      {"irreducible_roots", vec_list(roots)},
  };
  if (o.as_json) return;

  auto& os = o.out;
  os << "Picard lattice of rank " << lat.rank() << ", signature (" << sig.positive << ","
     << sig.negative << ")\n";
  for (const auto& row : lat.gram()) os << "  " << DivClass(row).to_string() << '\n';
  if (!lat.names().empty()) {
    os << "basis:";
    for (const auto& n : lat.names()) os << ' ' << n;
    os << '\n';
  }
  os << "H = " << h << ", H^2 = " << h2 << ", genus " << lat.genus(h) << '\n';
  os << "ample: " << yes_no(oracle.is_ample(h)) << '\n';
  os << "very ample: " << yes_no(!va) << (va ? " (" + obstruction_text(va) + ")" : "") << '\n';
  os << "irreducible (-2)-curves of degree <= " << h2 << ": " << roots.size() << '\n';
  for (const auto& r : roots) os << "  " << r << "  degree " << lat.degree(r) << '\n';
}

void cmd_class(const ConeOracle& oracle, const DivClass& d, bool all, Output& o) {
  const auto& lat = oracle.lattice();
  const ConeFlags f = oracle.analyze(d);
  const CohomologyProfile p = oracle.cohomology(d);
  const BigInt sq = lat.square(d);

  json& r = o.results;
  r["class"] = vec(d);
  r["square"] = num(sq);
  r["degree"] = num(lat.degree(d));
  r["euler_char"] = num(lat.euler_char(d));
  r["genus"] = sq >= -2 ? num(lat.genus(d)) : json(nullptr);
  r["flags"] = {{"effective", f.effective},
                {"nef", f.nef},
                {"base_point_free", f.base_point_free},
                {"ample", f.ample},
                {"very_ample", f.very_ample}};
  r["cohomology"] = {{"h0", num(p.h0)}, {"h1", num(p.h1)}, {"h2", num(p.h2)}};
  if (all) {
    r["witnesses"] = {{"nef", opt_vec(f.nef_witness)},
                      {"base_point_free", bpf_json(f.bpf_witness)},
                      {"ample", opt_vec(f.ample_witness)},
                      {"very_ample", obstruction_json(f.very_ample_witness)}};
    json em = nullptr;
    if (p.elliptic_multiple) {
      em = {{"k", num(p.elliptic_multiple->k)}, {"fiber", vec(p.elliptic_multiple->fiber)}};
    }
    auto [k, prim] = primitive_part(d);
    r["decomposition"] = {{"fixed_part", vec(p.fixed_part)},
                          {"mobile_part", vec(p.mobile_part)},
                          {"elliptic_multiple", em},
                          {"reduction_steps", vec_list(p.reduction_steps)}};
    r["primitive"] = {{"k", num(k)}, {"class", vec(prim)}};
  }
  if (o.as_json) return;

  auto& os = o.out;
  os << "D = " << d << ", D^2 = " << sq << ", D.H = " << lat.degree(d)
     << ", chi = " << lat.euler_char(d) << '\n';
  Table t({"property", "value", "witness"});
  t.add({"effective", yes_no(f.effective), ""});
  if (!f.effective) {
    t.print(os);
    os << "cone predicates are only decided for effective classes\n";
    os << "h0 = " << p.h0 << ", h1 = " << p.h1 << ", h2 = " << p.h2 << '\n';
    return;
  }
  t.add({"nef", yes_no(f.nef), all && f.nef_witness ? f.nef_witness->to_string() : ""});
  std::string bpfw;
  if (all && f.bpf_witness) {
    bpfw = f.bpf_witness->k.get_str() + "*" + f.bpf_witness->elliptic.to_string() + " + " +
           f.bpf_witness->root.to_string();
  }
  t.add({"base point free", yes_no(f.base_point_free), bpfw});
  t.add({"ample", yes_no(f.ample), all && f.ample_witness ? f.ample_witness->to_string() : ""});
  t.add({"very ample", yes_no(f.very_ample), all ? obstruction_text(f.very_ample_witness) : ""});
  t.print(os);
  os << "h0 = " << p.h0 << ", h1 = " << p.h1 << ", h2 = " << p.h2 << '\n';
  if (all) {
    os << "fixed part " << p.fixed_part << ", mobile part " << p.mobile_part << '\n';
    if (p.elliptic_multiple) {
      os << "mobile part = " << p.elliptic_multiple->k << " * " << p.elliptic_multiple->fiber
         << " (elliptic)\n";
    }
    for (const auto& s : p.reduction_steps) os << "  subtracted " << s << '\n';
    auto [k, prim] = primitive_part(d);
    os << "primitive part: " << k << " * " << prim << '\n';
  }
}

json clifford_json(const CliffordReport& c) {
  return {{"polarization", vec(c.polarization)},
          {"genus", num(c.genus)},
          {"a_set", vec_list(c.a_set)},
          {"mu", opt_num(c.mu)},
          {"a0_set", vec_list(c.a0_set)},
          {"cliff", num(c.cliff)},
          {"gonality_range", json::array({num(c.gonality_range.first), num(c.gonality_range.second)})},
          {"bound_witness", opt_vec(c.bound_witness)}};
}

void print_clifford(std::ostream& os, const ConeOracle& oracle, const CliffordReport& c) {
  os << "L = " << c.polarization << ", genus " << c.genus << '\n';
  os << "A(L): " << c.a_set.size() << " class(es)\n";
  if (!c.a_set.empty()) {
    Table t({"D", "D.H", "D.(L-D)-2", "in A0"});
    const auto& lat = oracle.lattice();
    for (const auto& d : c.a_set) {
      const BigInt v = lat.intersect(d, c.polarization - d) - 2;
      const bool in0 = std::find(c.a0_set.begin(), c.a0_set.end(), d) != c.a0_set.end();
      t.add({d.to_string(), lat.degree(d).get_str(), v.get_str(), yes_no(in0)});
    }
    t.print(os);
  }
  os << "mu = " << (c.mu ? c.mu->get_str() : "undefined (A(L) empty)") << '\n';
  os << "Cliff = " << c.cliff << ", gonality in [" << c.gonality_range.first << ","
     << c.gonality_range.second << "]\n";
  if (c.bound_witness) os << "bound witness " << *c.bound_witness << '\n';
}

void cmd_clifford(const ConeOracle& oracle, Output& o) {
  const CliffordReport c = clifford_index(oracle, oracle.lattice().polarization());
  o.results = clifford_json(c);
  if (!o.as_json) print_clifford(o.out, oracle, c);
}

void cmd_acm(const ConeOracle& oracle, const DivClass& l, Output& o) {
  const AcmReport a = acm_report(oracle, l);
  json chain = json::array();
  for (const auto& [k, h1] : a.h1_chain) chain.push_back({{"k", num(k)}, {"h1", num(h1)}});
  o.results = {{"class", vec(l)},
               {"is_acm", a.is_acm},
               {"is_initialized", a.is_initialized},
               {"m_used", num(a.m_used)},
               {"h1_chain", chain},
               {"shortcut_used", a.shortcut_used}};
  if (o.as_json) return;

  auto& os = o.out;
  os << "L = " << l << ", m = " << a.m_used << '\n';
  Table t({"k", "h1(L - kH)"});
  for (const auto& [k, h1] : a.h1_chain) t.add({k.get_str(), h1.get_str()});
  t.print(os);
  os << "ACM: " << yes_no(a.is_acm) << ", initialized: " << yes_no(a.is_initialized) << '\n';
  if (a.shortcut_used) os << "L in A(H): two-term test h1(L) = h1(H - L) = 0 agrees\n";
}

json spec_json(const LMBundleSpec& s) {
  return {{"h", vec(s.h)},
          {"d", num(s.d)},
          {"g", num(s.g)},
          {"r", s.r},
          {"h0_e", num(s.h0_e)},
          {"rho", num(s.rho)},
          {"slope_numerator", num(s.slope_numerator)},
          {"quotient_filter_valid", s.quotient_filter_valid},
          {"non_simple", s.non_simple},
          {"h_very_ample", s.h_very_ample},
          {"e_acm", s.e_acm}};
}

void print_spec(std::ostream& os, const LMBundleSpec& s) {
  os << "LM bundle: c1 = " << s.h << ", c2 = " << s.d << ", g = " << s.g << ", h0(E) = " << s.h0_e
     << ", rho = " << s.rho << (s.non_simple ? " (non-simple)" : "") << '\n';
  os << "H very ample: " << yes_no(s.h_very_ample) << ", E ACM and initialized: " << yes_no(s.e_acm)
     << '\n';
}

void cmd_lm_scan(const ConeOracle& oracle, const BigInt& d, ScanOptions opts, Output& o) {
  const LMBundleSpec spec = lm_invariants(oracle, oracle.lattice().polarization(), d);
  const SemistabilityCertificate cert = semistable_certificate(oracle, spec, opts);
  const ScanReport& scan = cert.scan;

  json cands = json::array();
  for (const auto& c : scan.candidates) {
    cands.push_back({{"l1", vec(c.l1)},
                     {"l2", vec(c.l2)},
                     {"l1_dot_l2", num(c.l1_dot_l2)},
                     {"length_zprime", num(c.length_zprime)},
                     {"l1_nef", c.l1_nef},
                     {"l1_acm_initialized", c.l1_acm_initialized},
                     {"h1_l2_zero", c.h1_l2_zero},
                     {"gonality_window", opt(c.gonality_window)},
                     {"witness", opt_vec(c.witness)},
                     {"witness_note", c.witness_note}});
  }
  o.results = {{"spec", spec_json(spec)},
               {"options", {{"strict", opts.strict}, {"gonality", opts.gonality}}},
               {"filters", scan.filters},
               {"candidates", cands},
               {"clifford", scan.clifford ? clifford_json(*scan.clifford) : json(nullptr)},
               {"counterexamples", scan.counterexamples},
               {"notes", scan.notes},
               {"certificate",
                {{"verdict", to_string(cert.verdict)},
                 {"stable", opt(cert.stable)},
                 {"equal_slope_quotients", vec_list(cert.equal_slope_quotients)},
                 {"trace", cert.trace}}}};
  if (o.as_json) return;

  auto& os = o.out;
  print_spec(os, spec);
  os << "filters:\n";
  for (const auto& f : scan.filters) os << "  " << f << '\n';
  for (const auto& n : scan.notes) os << "note: " << n << '\n';
  if (scan.clifford) {
    os << "Cliff(H) = " << scan.clifford->cliff << ", mu(H) = "
       << (scan.clifford->mu ? scan.clifford->mu->get_str() : "undefined") << '\n';
  }
  os << "candidates: " << scan.candidates.size() << '\n';
  if (!scan.candidates.empty()) {
    Table t({"L1", "L2", "L1.L2", "length Z'", "L1 nef", "L1 ACM+init", "h1(L2)=0", "witness"});
    for (const auto& c : scan.candidates) {
      t.add({c.l1.to_string(), c.l2.to_string(), c.l1_dot_l2.get_str(), c.length_zprime.get_str(),
             yes_no(c.l1_nef), yes_no(c.l1_acm_initialized), yes_no(c.h1_l2_zero),
             c.witness ? c.witness->to_string() : c.witness_note});
    }
    t.print(os);
  }
  for (const auto& c : scan.counterexamples) os << "COUNTEREXAMPLE: " << c << '\n';
  os << "certificate: " << to_string(cert.verdict);
  if (cert.stable) os << (*cert.stable ? " (mu_H-stable)" : " (stability undetermined)");
  os << '\n';
  for (const auto& line : cert.trace) os << "  " << line << '\n';
}

void cmd_dm_scan(const ConeOracle& oracle, const BigInt& d, Output& o) {
  const LMBundleSpec spec = lm_invariants(oracle, oracle.lattice().polarization(), d);
  const DMScanReport rep = dm_extension_scan(oracle, spec);
  const auto& lat = oracle.lattice();

  json cands = json::array();
  for (const auto& c : rep.candidates) {
    cands.push_back({{"m", vec(c.m)},
                     {"n", vec(c.n)},
                     {"m_degree", num(lat.degree(c.m))},
                     {"n_degree", num(lat.degree(c.n))},
                     {"m_dot_n", num(c.m_dot_n)},
                     {"length", num(c.length)},
                     {"h0_m_minus_n", num(c.h0_m_minus_n)},
                     {"splits", c.splits}});
  }
  o.results = {{"spec", spec_json(spec)}, {"candidates", cands}, {"notes", rep.notes}};
  if (o.as_json) return;

  auto& os = o.out;
  print_spec(os, spec);
  for (const auto& n : rep.notes) os << "note: " << n << '\n';
  os << "extensions 0 -> M -> E -> N (x) I_Z' -> 0: " << rep.candidates.size() << '\n';
  if (!rep.candidates.empty()) {
    Table t({"M", "N", "M.H", "N.H", "M.N", "length Z'", "h0(M-N)", "splits"});
    for (const auto& c : rep.candidates) {
      t.add({c.m.to_string(), c.n.to_string(), lat.degree(c.m).get_str(), lat.degree(c.n).get_str(),
             c.m_dot_n.get_str(), c.length.get_str(), c.h0_m_minus_n.get_str(), yes_no(c.splits)});
    }
    t.print(os);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k3lm: divisor classes on K3 Picard lattices and Lazarsfeld-Mukai bundles", "k3lm"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  bool as_json = false;
  unsigned threads = 1;
  app.add_option("-c,--config", config_path, "Lattice config (JSON: gram, polarization, names)")
      ->required();
  app.add_flag("--json", as_json, "Emit one machine-readable JSON document");
  app.add_option("-j,--threads", threads, "Worker threads for enumeration")
      ->check(CLI::Range(1u, 256u));

  auto* info = app.add_subcommand("info", "Lattice summary and properties of H");

  std::string class_vec;
  bool class_all = false;
  auto* cls = app.add_subcommand("class", "Cone membership and cohomology of a class");
  cls->add_option("class", class_vec, "Comma separated coordinates, e.g. 1,-1")->required();
  cls->add_flag("--all", class_all, "Include witnesses and the fixed/mobile decomposition");

  auto* cliff = app.add_subcommand("clifford", "A(H), mu(H), Clifford index and gonality range");

  std::string acm_vec;
  auto* acm = app.add_subcommand("acm", "ACM and initialized test for a line bundle");
  acm->add_option("class", acm_vec, "Comma separated coordinates")->required();

  std::string c2_text;
  ScanOptions scan_opts;
  auto* lm = app.add_subcommand("lm-scan", "Destabilizer scan and semistability certificate");
  lm->add_option("--c2", c2_text, "c2 of the bundle (degree of the pencil)")->required();
  lm->add_flag("--strict", scan_opts.strict, "Require h1(L2) = 0");
  lm->add_flag("--gonality", scan_opts.gonality, "Treat the pencil as a gonality pencil");

  auto* dm = app.add_subcommand("dm-scan", "Donagi-Morrison extensions of a non-simple bundle");
  dm->add_option("--c2", c2_text, "c2 of the bundle")->required();

  // CLI11 wants argv order reversed when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadArguments;
  }

  std::optional<Config> cfg;
  try {
    cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "error: invalid lattice config: " << e.what() << '\n';
    return kBadConfig;
  }

  json command = {{"name", app.get_subcommands().front()->get_name()}};
  Output o{as_json, out};
  try {
    ConeOracle oracle(cfg->lattice, threads);
    const auto c2 = [&] {
      static const std::regex integer(R"(^[+-]?[0-9]+$)");
      if (!std::regex_match(c2_text, integer)) throw InputError("--c2 expects an integer, got '" + c2_text + "'");
      return BigInt(c2_text[0] == '+' ? c2_text.substr(1) : c2_text);
    };
    if (info->parsed()) {
      cmd_info(oracle, o);
    } else if (cls->parsed()) {
      const DivClass d = parse_class(oracle.lattice(), class_vec);
      command["class"] = vec(d);
      command["all"] = class_all;
      cmd_class(oracle, d, class_all, o);
    } else if (cliff->parsed()) {
      cmd_clifford(oracle, o);
    } else if (acm->parsed()) {
      const DivClass l = parse_class(oracle.lattice(), acm_vec);
      command["class"] = vec(l);
      cmd_acm(oracle, l, o);
    } else if (lm->parsed()) {
      const BigInt d = c2();
      command["c2"] = num(d);
      command["strict"] = scan_opts.strict;
      command["gonality"] = scan_opts.gonality;
      cmd_lm_scan(oracle, d, scan_opts, o);
    } else if (dm->parsed()) {
      const BigInt d = c2();
      command["c2"] = num(d);
      cmd_dm_scan(oracle, d, o);
    }
  } catch (const ConsistencyError& e) {
    err << "error: internal consistency failure: " << e.what() << '\n';
    return kConsistency;
  } catch (const InputError& e) {
    err << "error: invalid argument: " << e.what() << '\n';
    return kBadArguments;
  } catch (const DomainError& e) {
    err << "error: invalid argument: " << e.what() << '\n';
    return kBadArguments;
  }

  if (as_json) {
    json doc = {{"tool", {{"name", "k3lm"}, {"version", kVersion}}},
                {"config", cfg->echo},
                {"command", command},
                {"results", o.results}};
    out << doc.dump(2) << '\n';
  }
  if (o.results.contains("counterexamples") && !o.results["counterexamples"].empty()) {
    err << "error: internal consistency failure: h1(L1) = 0 violated in gonality mode\n";
    return kConsistency;
  }
  return kOk;
}

}  // namespace k3lm::cli
