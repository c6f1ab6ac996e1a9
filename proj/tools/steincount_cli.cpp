#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "stein/bundles.hpp"
#include "stein/counts.hpp"
#include "stein/oracle.hpp"
#include "stein/symfun.hpp"
#include "stein/verify.hpp"

namespace {

using nlohmann::json;
using namespace stein;

struct Options {
  std::string format = "json";
  std::string out;
};

std::ostream& output_stream(const Options& opt, std::ofstream& file) {
  if (opt.out.empty()) return std::cout;
  file.open(opt.out);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + opt.out);
  return file;
}

SimpleSubset parse_subset(const std::string& text, int rank) {
  if (text.empty()) return 0;
  if (text == "all" || text == "full") return full_subset(rank);
  SimpleSubset J = 0;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int i = std::stoi(tok);
    if (i < 1 || i > rank)
      throw CLI::ValidationError("subset", "index " + tok + " out of range 1.." +
                                               std::to_string(rank));
    J |= SimpleSubset{1} << (i - 1);
  }
  return J;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::string partition_key(const Partition& a, const Partition& b) {
  auto one = [](const Partition& p) {
    if (p.empty()) return std::string("-");
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p[i]);
    }
    return s;
  };
  return one(a) + "|" + one(b);
}

void emit_poly(const Options& opt, const QPoly& p) {
  std::ofstream file;
  std::ostream& os = output_stream(opt, file);
  if (opt.format == "text")
    os << p.str() << "\n";
  else
    os << json(p).dump() << "\n";
}

json series_json(const TSeries& s) {
  auto arr = json::array();
  for (int k = 0; k <= s.tmax(); ++k) arr.push_back(json(s.coeff(k)));
  return arr;
}

std::string series_text(const TSeries& s) {
  std::string out;
  for (int k = 0; k <= s.tmax(); ++k) {
    if (k) out += "  ";
    out += "t^" + std::to_string(k) + ": " + s.coeff(k).str();
  }
  return out;
}

int run_verify(const Options& opt, const std::string& suite, int n, int tmax) {
  std::ofstream file;
  std::ostream& os = output_stream(opt, file);
  if (suite == "mellit" && (n >= 0 || tmax >= 0)) {
    int nn = n < 0 ? 3 : n;
    int tt = tmax < 0 ? 4 : tmax;
    auto expanded = exp_side(nn, tt);
    bool ok = true;
    for (int k = 0; k <= nn; ++k) {
      BiSeries om = omega_series(k, tt);
      for (const auto& [key, s] : om.coeffs)
        if (s != expanded[k].coeffs.at(key)) ok = false;
    }
    os << (ok ? "PASS" : "FAIL") << " mellit n<=" << nn << " tmax=" << tt << "\n";
    return ok ? 0 : 2;
  }

  static const std::map<std::string, int> suites = {
      {"springer", 1},  {"steinberg", 2}, {"coproduct", 3},
      {"trip", 4},      {"mellit", 5},    {"hn", 6},
      {"symcop", 7},    {"invariants", 8}};
  std::vector<verify::CheckResult> results;
  if (suite == "all") {
    results = verify::run_all();
  } else if (auto it = suites.find(suite); it != suites.end()) {
    results.push_back(verify::run_criterion(it->second));
  } else {
    throw CLI::ValidationError("--suite", "unknown suite " + suite);
  }
  bool ok = true;
  for (const auto& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.name;
    if (!r.passed) {
      os << " : " << r.detail;
      ok = false;
    }
    os << "\n";
  }
  return ok ? 0 : 2;
}

int run_oracle(const Options& opt, int n, int q, const std::string& what,
               const std::string& types, const std::string& mu_text) {
  std::ofstream file;
  std::ostream& os = output_stream(opt, file);
  CountEngine engine(ReductiveDatum::parse("GL" + std::to_string(n)));
  auto type_list = [&]() {
    std::vector<SimpleSubset> out;
    std::stringstream ss(types);
    std::string tok;
    while (std::getline(ss, tok, ';')) out.push_back(parse_subset(tok, n - 1));
    while (out.size() < 2) out.push_back(out.empty() ? 0 : out.back());
    return out;
  };

  Int brute, formula;
  std::string label;
  if (what == "order") {
    brute = oracle::group_order(n, q);
    formula = engine.group_order().eval_at(q);
    label = "|GL" + std::to_string(n) + "|";
  } else if (what == "sp") {
    auto t = type_list();
    brute = oracle::sp_count(n, q, t[0]);
    formula = engine.sp_count(t[0]).eval_at(q);
    label = "sp " + subset_str(t[0]);
  } else if (what == "st") {
    auto t = type_list();
    brute = oracle::st_count(n, q, t[0], t[1]);
    formula = engine.st_count(t[0], t[1]).eval_at(q);
    label = "st " + subset_str(t[0]) + " " + subset_str(t[1]);
  } else if (what == "trip") {
    auto t = type_list();
    std::vector<int> w = parse_ints(mu_text);
    brute = oracle::trip_count(n, q, w, t[0], t[1]);
    BundleEngine be(engine, Cocharacter::from_gl_weights(w));
    formula = be.trip_count(t[0], t[1]).eval_at(q);
    label = "trip " + subset_str(t[0]) + " " + subset_str(t[1]);
  } else {
    throw CLI::ValidationError("--what", "unknown computation " + what);
  }
  bool ok = brute == formula;
  os << label << " q=" << q << " oracle=" << brute.get_str()
     << " formula=" << formula.get_str() << " " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact point counts of Springer/Steinberg varieties and triple spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", opt.out, "Write output to a file instead of stdout");

  std::string datum, J, J1, J2, mu, suite = "all", what = "st", types;
  int n = -1, q = 2, tmax = -1;
  bool check_exp = false;

  auto* sp = app.add_subcommand("sp", "Partial Springer variety count");
  sp->add_option("datum", datum, "Group, e.g. A2, B3, GL3, A1xA1+t3")->required();
  sp->add_option("--J", J, "Subset of simple roots: 1-based indices, \"\" or all");

  auto* st = app.add_subcommand("st", "Generalized Steinberg variety count");
  st->add_option("datum", datum)->required();
  st->add_option("--J1", J1, "First subset of simple roots");
  st->add_option("--J2", J2, "Second subset of simple roots");

  auto* trip = app.add_subcommand("trip", "Triple space count on the projective line");
  trip->add_option("datum", datum)->required();
  trip->add_option("--mu", mu,
                   "Cocharacter: GL weights (weakly increasing) for GL data, "
                   "pairings with the simple roots otherwise")
      ->required();
  trip->add_option("--J0", J1, "Parabolic type at 0");
  trip->add_option("--Jinf", J2, "Parabolic type at infinity");

  auto* omega = app.add_subcommand("omega", "Generating series of normalized triple counts");
  omega->add_option("--n", n, "Rank of the general linear group")->required();
  omega->add_option("--tmax", tmax, "Truncation order in t")->required();
  omega->add_flag("--check-exp", check_exp, "Also compare with the plethystic exponential");

  auto* verify_cmd = app.add_subcommand("verify", "Run cross-check suites");
  verify_cmd->add_option("--suite", suite,
                         "all, springer, steinberg, coproduct, trip, mellit, hn, "
                         "symcop, invariants");
  verify_cmd->add_option("--n", n, "Mellit suite: maximal degree");
  verify_cmd->add_option("--tmax", tmax, "Mellit suite: truncation order");

  auto* orc = app.add_subcommand("oracle", "Brute-force count vs closed formula");
  orc->add_option("--n", n, "Rank of the general linear group")->required();
  orc->add_option("--q", q, "Field size (2 or 3)");
  orc->add_option("--what", what, "order, sp, st or trip");
  orc->add_option("--types", types, "Subsets, separated by ';' (also: all/full)");
  orc->add_option("--mu", mu, "GL weights for trip");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sp->parsed()) {
      CountEngine engine(ReductiveDatum::parse(datum));
      emit_poly(opt, engine.sp_count(parse_subset(J, engine.root_system().rank())));
    } else if (st->parsed()) {
      CountEngine engine(ReductiveDatum::parse(datum));
      int rank = engine.root_system().rank();
      emit_poly(opt, engine.st_count(parse_subset(J1, rank), parse_subset(J2, rank)));
    } else if (trip->parsed()) {
      CountEngine engine(ReductiveDatum::parse(datum));
      int rank = engine.root_system().rank();
      std::vector<int> values = parse_ints(mu);
      Cocharacter mu_c = datum.rfind("GL", 0) == 0
                             ? Cocharacter::from_gl_weights(values)
                             : Cocharacter::from_pairings(values);
      BundleEngine be(engine, std::move(mu_c));
      emit_poly(opt, be.trip_count(parse_subset(J1, rank), parse_subset(J2, rank)));
    } else if (omega->parsed()) {
      std::ofstream file;
      std::ostream& os = output_stream(opt, file);
      BiSeries om = omega_series(n, tmax);
      bool ok = true;
      std::vector<BiSeries> expanded;
      if (check_exp) {
        expanded = exp_side(n, tmax);
        for (const auto& [key, s] : om.coeffs)
          if (s != expanded[n].coeffs.at(key)) ok = false;
      }
      if (opt.format == "text") {
        for (const auto& [key, s] : om.coeffs)
          os << partition_key(key.first, key.second) << "  " << series_text(s) << "\n";
        if (check_exp) os << (ok ? "PASS" : "FAIL") << " matches plethystic exponential\n";
      } else {
        json doc;
        doc["n"] = n;
        doc["tmax"] = tmax;
        json coeffs = json::object();
        for (const auto& [key, s] : om.coeffs)
          coeffs[partition_key(key.first, key.second)] = series_json(s);
        doc["omega"] = coeffs;
        if (check_exp) {
          json exp_coeffs = json::object();
          for (const auto& [key, s] : expanded[n].coeffs)
            exp_coeffs[partition_key(key.first, key.second)] = series_json(s);
          doc["exp"] = exp_coeffs;
          doc["match"] = ok;
        }
        os << doc.dump() << "\n";
      }
      if (check_exp && !ok) return 2;
    } else if (verify_cmd->parsed()) {
      return run_verify(opt, suite, n, tmax);
    } else if (orc->parsed()) {
      return run_oracle(opt, n, q, what, types, mu);
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
