#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "qcartan/verify.hpp"

using namespace qcartan;

namespace {

void write_out(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << payload;
}

int thread_budget() {
  const char* env = std::getenv("QCARTAN_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v > 0 ? v : 1;
}

int cmd_tables(const std::string& type, const std::string& what, int max_u,
               const std::string& format, const std::string& out) {
  CartanDatum dt = build_datum(type);
  TildeBTable t = inverse_via_eta(dt);
  bool extended = what == "tfb";
  if (!extended && what != "delta") throw CLI::ValidationError("--what must be delta or tfb");
  if (max_u < 0) max_u = extended ? 2 * dt.h : dt.h - 1;
  std::string payload;
  if (format == "json")
    payload = tables_json(t, max_u, extended);
  else if (format == "csv")
    payload = tables_csv(t, max_u, extended);
  else
    throw CLI::ValidationError("--format must be json or csv");
  write_out(payload, out);
  return 0;
}

int cmd_quiver(const std::string& type, const std::string& height, const std::string& emit,
               const std::string& window, const std::string& format, const std::string& out) {
  CartanDatum dt = build_datum(type);
  DynkinQuiver q(dt, parse_heights(dt, height));
  bool rep = emit == "rep";
  if (!rep && emit != "ar") throw CLI::ValidationError("--emit must be ar or rep");
  Window w = window.empty() ? Window{-2 * dt.h, 2 * dt.h} : parse_window(window);
  std::string payload;
  if (format == "dot")
    payload = quiver_dot(q, rep, w);
  else if (format == "json")
    payload = quiver_json(q, rep, w);
  else if (format == "text")
    payload = quiver_text(q, rep, w);
  else
    throw CLI::ValidationError("--format must be dot, json or text");
  write_out(payload, out);
  return 0;
}

bool torus_check_caln(const DynkinQuiver& q, const NForm& nf, Window w) {
  std::vector<RepVertex> verts;
  for (int i = 0; i < q.n(); ++i)
    for (long long p = w.lo; p <= w.hi; ++p)
      if (q.valid_vertex({i, p})) verts.push_back({i, p});
  for (const RepVertex& a : verts)
    for (const RepVertex& b : verts)
      if (nf.pairing(a, b) != n_via_roots(q, a, b)) return false;
  return true;
}

bool torus_check_nnkr(const DynkinQuiver& q, const NForm& nf, Window w) {
  for (int i = 0; i < q.n(); ++i)
    for (int j = 0; j < q.n(); ++j) {
      long long dij = q.datum().dist[i][j];
      for (long long p = w.lo; p <= w.hi; ++p) {
        if ((p - q.xi(i)) % 2 != 0) continue;
        for (long long p2 = p; p2 <= w.hi; p2 += 2)
          for (long long s = w.lo; s <= w.hi; ++s) {
            if ((s - q.xi(j)) % 2 != 0) continue;
            for (long long s2 = s; s2 <= w.hi; s2 += 2) {
              if (p - s > dij || s2 - p2 > dij) continue;
              if (!check_nnkr(q, nf, i, p, p2, j, s, s2)) return false;
            }
          }
      }
    }
  return true;
}

int cmd_torus(const std::string& type, const std::string& height, const std::string& check,
              const std::string& window, const std::string& element, const std::string& out) {
  CartanDatum dt = build_datum(type);
  DynkinQuiver q(dt, parse_heights(dt, height));
  NForm nf(inverse_via_eta(q));
  std::ostringstream os;
  os << "{\n  \"type\": \"" << dt.type.str() << "\",\n";
  if (!element.empty()) {
    TorusElement e = parse_element(q, nf, element);
    os << "  \"element\": \"" << e.str() << "\",\n  \"weights\": [";
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
      (void)c;
      if (!first) os << ", ";
      first = false;
      os << "\"" << root_str(wtQ(q, m)) << "\"";
    }
    os << "],\n";
  }
  bool all_pass = true;
  if (!check.empty()) {
    Window w = window.empty() ? Window{-2 * dt.h, 2 * dt.h} : parse_window(window);
    std::stringstream names(check);
    std::string name;
    os << "  \"checks\": {";
    bool first = true;
    while (std::getline(names, name, ',')) {
      bool pass;
      if (name == "calN")
        pass = torus_check_caln(q, nf, w);
      else if (name == "nnkr")
        pass = torus_check_nnkr(q, nf, w);
      else if (name == "ya")
        pass = check_ya(q, nf, w.lo, w.hi);
      else
        throw CLI::ValidationError("--check must name calN, nnkr or ya");
      all_pass = all_pass && pass;
      if (!first) os << ", ";
      first = false;
      os << "\"" << name << "\": " << (pass ? "true" : "false");
    }
    os << "},\n";
  }
  os << "  \"ok\": " << (all_pass ? "true" : "false") << "\n}\n";
  write_out(os.str(), out);
  return all_pass ? 0 : 1;
}

int cmd_pair(const std::string& type, const std::string& word, bool check, const std::string& out) {
  CartanDatum dt = build_datum(type);
  Word w = parse_word(dt, word);
  std::string payload = pair_json(dt, w);
  write_out(payload, out);
  if (check) return check_compatible(build_pair(dt, w)) ? 0 : 1;
  return 0;
}

int cmd_verify(const std::string& type, const std::string& suites, const std::string& word,
               uint64_t seed) {
  std::vector<std::string> selected;
  if (suites.empty() || suites == "all") {
    selected = suite_names();
  } else {
    std::stringstream ss(suites);
    std::string name;
    while (std::getline(ss, name, ',')) selected.push_back(name);
  }
  // drop suites that do not apply to this type
  CartanType t = parse_type(type);
  CartanDatum dt = build_datum(t);
  auto applicable = [&](const std::string& s) {
    if (s == "tables") {
      for (const GoldenTable& g : paper_tables())
        if (g.type == t) return true;
      return false;
    }
    if (s == "closed-formulas")
      return t.family == Family::A || t.family == Family::B || t.family == Family::C ||
             t.family == Family::D;
    if (s == "census") return dt.n <= 6;
    if (s == "b3-worked") return t.str() == "B3";
    return true;
  };

  std::vector<std::string> to_run;
  for (const std::string& s : selected)
    if ((suites.empty() || suites == "all") ? applicable(s) : true) to_run.push_back(s);

  int threads = thread_budget();
  std::vector<SuiteResult> results;
  if (threads > 1) {
    std::vector<std::future<std::vector<SuiteResult>>> futs;
    for (const std::string& s : to_run)
      futs.push_back(std::async(std::launch::async,
                                [s, type, seed, word] { return run_suite(s, type, seed, word); }));
    for (auto& f : futs)
      for (auto& r : f.get()) results.push_back(r);
  } else {
    for (const std::string& s : to_run)
      for (auto& r : run_suite(s, type, seed, word)) results.push_back(r);
  }

  bool all = true;
  for (const SuiteResult& r : results) {
    all = all && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.suite << " [" << r.type << "]"
              << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
  }
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tables, quivers, quantum-torus and compatible-pair checks for finite Cartan data"};
  app.require_subcommand(1);

  std::string type, height = "linear", word, window, format = "json", out, what = "delta";
  std::string emit = "ar", check, suites, element;
  int max_u = -1;
  uint64_t seed = 2024;
  bool pair_check = false;

  auto* tables = app.add_subcommand("tables", "inverse t-quantized Cartan matrix tables");
  tables->add_option("--type", type, "Cartan type, e.g. B3")->required();
  tables->add_option("--what", what, "delta | tfb");
  tables->add_option("--max-u", max_u, "largest u for tfb output");
  tables->add_option("--format", format, "json | csv");
  tables->add_option("--out", out, "output path (default stdout)");

  auto* quiver = app.add_subcommand("quiver", "AR-quiver / repetition-quiver export");
  quiver->add_option("--type", type)->required();
  quiver->add_option("--height", height, "comma list | linear | sink-source");
  quiver->add_option("--emit", emit, "ar | rep");
  quiver->add_option("--window", window, "lo,hi (rep only)");
  quiver->add_option("--format", format, "dot | json | text");
  quiver->add_option("--out", out);

  auto* torus = app.add_subcommand("torus", "quantum torus checks and element weights");
  torus->add_option("--type", type)->required();
  torus->add_option("--height", height);
  torus->add_option("--check", check, "calN | nnkr | ya (comma list)");
  torus->add_option("--window", window);
  torus->add_option("--element", element, "e.g. \"q^1*X[1,1] + q^-1*X[1,7]^-1\"");
  torus->add_option("--seed", seed);
  torus->add_option("--out", out);

  auto* pair = app.add_subcommand("pair", "compatible pair (Lambda, B) of an index sequence");
  pair->add_option("--type", type)->required();
  pair->add_option("--word", word, "comma-separated indices")->required();
  pair->add_flag("--check", pair_check, "exit nonzero unless Lambda B = -2 diag(d)");
  pair->add_option("--format", format, "json");
  pair->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--type", type)->required();
  verify->add_option("--suite", suites, "comma list; default: all applicable");
  verify->add_option("--word", word, "word for the compatible suite");
  verify->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (tables->parsed()) return cmd_tables(type, what, max_u, format, out);
    if (quiver->parsed()) return cmd_quiver(type, height, emit, window, format, out);
    if (torus->parsed()) return cmd_torus(type, height, check, window, element, out);
    if (pair->parsed()) return cmd_pair(type, word, pair_check, out);
    if (verify->parsed()) return cmd_verify(type, suites, word, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;  // usage error
  }
  return 0;
}
