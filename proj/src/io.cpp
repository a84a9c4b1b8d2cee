#include "qcartan/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcartan {

using nlohmann::json;

namespace {
std::vector<long long> split_ints(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long long v = std::stoll(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw std::invalid_argument("bad integer list: \"" + s + "\"");
    out.push_back(v);
  }
  return out;
}
}  // namespace

Vec parse_heights(const CartanDatum& dt, const std::string& spec) {
  if (spec.empty() || spec == "linear") {
    Vec xi(dt.n);
    for (int i = 0; i < dt.n; ++i) xi[i] = dt.n - dt.dist[0][i];
    return xi;
  }
  if (spec == "sink-source") {
    Vec xi(dt.n);
    for (int i = 0; i < dt.n; ++i) xi[i] = dt.dist[0][i] % 2;
    return xi;
  }
  Vec xi = split_ints(spec);
  if (static_cast<int>(xi.size()) != dt.n)
    throw std::invalid_argument("height list has " + std::to_string(xi.size()) +
                                " entries, expected " + std::to_string(dt.n));
  return xi;
}

Word parse_word(const CartanDatum& dt, const std::string& spec) {
  Word w;
  for (long long v : split_ints(spec)) {
    if (v < 1 || v > dt.n)
      throw std::invalid_argument("word letter " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(dt.n));
    w.push_back(static_cast<int>(v - 1));
  }
  return w;
}

Window parse_window(const std::string& spec) {
  auto v = split_ints(spec);
  if (v.size() != 2 || v[0] > v[1])
    throw std::invalid_argument("window must be \"lo,hi\" with lo <= hi");
  return {v[0], v[1]};
}

namespace {

struct ElementParser {
  const DynkinQuiver& q;
  const NForm& nf;
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long integer() {
    skip();
    bool neg = eat('-');
    if (!neg) eat('+');
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("element: expected integer at position " + std::to_string(pos));
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + (s[pos++] - '0');
    return neg ? -v : v;
  }

  // factor := 'q' '^' int[/2] | 'X' '[' i ',' p ']' ['^' int] | int
  TorusElement factor() {
    skip();
    if (pos >= s.size()) throw std::invalid_argument("element: unexpected end");
    if (s[pos] == 'q') {
      ++pos;
      if (!eat('^')) throw std::invalid_argument("element: q needs an exponent");
      long long num = integer();
      long long qpow2 = 2 * num;
      if (eat('/')) {
        long long den = integer();
        if (den != 2) throw std::invalid_argument("element: only half-integer q powers");
        qpow2 = num;
      }
      return TorusElement::q_power(nf, qpow2);
    }
    if (s[pos] == 'X') {
      ++pos;
      if (!eat('[')) throw std::invalid_argument("element: X needs [i,p]");
      long long i = integer();
      if (!eat(',')) throw std::invalid_argument("element: X needs [i,p]");
      long long p = integer();
      if (!eat(']')) throw std::invalid_argument("element: X needs [i,p]");
      long long e = 1;
      if (eat('^')) e = integer();
      RepVertex v{static_cast<int>(i - 1), p};
      if (!q.valid_vertex(v))
        throw std::invalid_argument("element: X[" + std::to_string(i) + "," + std::to_string(p) +
                                    "] violates the repetition-quiver parity");
      return TorusElement::generator(nf, v, e);
    }
    throw std::invalid_argument("element: unexpected character '" + std::string(1, s[pos]) + "'");
  }

  TorusElement scale(long long c) {
    TorusMonomial one;
    return TorusElement::from_monomial(nf, one, c);
  }

  TorusElement term() {
    skip();
    bool neg = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') neg = !neg;
      ++pos;
      skip();
    }
    TorusElement acc;
    bool first = true;
    while (true) {
      skip();
      if (pos >= s.size()) break;
      if (s[pos] == '+' || s[pos] == '-') break;
      if (s[pos] == '*') {
        ++pos;
        continue;
      }
      TorusElement f =
          std::isdigit(static_cast<unsigned char>(s[pos])) ? scale(integer()) : factor();
      acc = first ? f : acc * f;
      first = false;
    }
    if (first) throw std::invalid_argument("element: empty term");
    return neg ? scale(-1) * acc : acc;
  }

  TorusElement parse() {
    TorusElement acc = term();
    while (true) {
      skip();
      if (pos >= s.size()) break;
      acc = acc + term();
    }
    return acc;
  }
};

}  // namespace

TorusElement parse_element(const DynkinQuiver& q, const NForm& nf, const std::string& text) {
  ElementParser p{q, nf, text};
  return p.parse();
}

namespace {
std::string type_str(const CartanDatum& dt) { return dt.type.str(); }
}  // namespace

std::string tables_json(const TildeBTable& t, int max_u, bool extended) {
  json j;
  j["type"] = type_str(t.datum());
  j["h"] = t.h();
  j["what"] = extended ? "tfb" : "delta";
  json entries = json::object();
  for (int i = 0; i < t.n(); ++i)
    for (int jj = 0; jj < t.n(); ++jj) {
      std::string key = std::to_string(i + 1) + "," + std::to_string(jj + 1);
      json coeffs = json::array();
      if (extended) {
        for (int u = 0; u <= max_u; ++u) coeffs.push_back(t.tfb(i, jj, u));
      } else {
        for (int u = 0; u < t.h(); ++u) coeffs.push_back(t.delta_coeff(i, jj, u));
      }
      entries[key] = coeffs;
    }
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

std::string tables_csv(const TildeBTable& t, int max_u, bool extended) {
  std::string out = "i,j,u,coef\n";
  int top = extended ? max_u : t.h() - 1;
  for (int i = 0; i < t.n(); ++i)
    for (int jj = 0; jj < t.n(); ++jj)
      for (int u = 0; u <= top; ++u) {
        long long c = extended ? t.tfb(i, jj, u) : t.delta_coeff(i, jj, u);
        out += std::to_string(i + 1) + "," + std::to_string(jj + 1) + "," + std::to_string(u) +
               "," + std::to_string(c) + "\n";
      }
  return out;
}

TildeBTable tables_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  CartanDatum dt = build_datum(j.at("type").get<std::string>());
  int h = j.at("h").get<int>();
  if (h != dt.h) throw std::invalid_argument("tables_from_json: wrong Coxeter number");
  std::vector<std::vector<Vec>> delta(dt.n, std::vector<Vec>(dt.n, Vec(h, 0)));
  for (auto& [key, coeffs] : j.at("entries").items()) {
    auto comma = key.find(',');
    int i = std::stoi(key.substr(0, comma)) - 1;
    int jj = std::stoi(key.substr(comma + 1)) - 1;
    for (int u = 0; u < h; ++u) delta[i][jj][u] = coeffs.at(u).get<long long>();
  }
  return TildeBTable(dt, std::move(delta));
}

std::string root_str(const LatticeVec& root) {
  std::string s = "(";
  for (size_t k = 0; k < root.coords.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(root.coords[k]);
  }
  return s + ")";
}

namespace {

struct QuiverView {
  std::vector<RepVertex> vertices;
  std::vector<LatticeVec> labels;
  std::vector<std::tuple<int, int, int>> arrows;  // from, to, multiplicity
};

QuiverView view_of(const DynkinQuiver& q, bool repetition, Window w) {
  QuiverView v;
  if (repetition) {
    for (int i = 0; i < q.n(); ++i)
      for (long long p = w.lo; p <= w.hi; ++p)
        if (q.valid_vertex({i, p})) v.vertices.push_back({i, p});
  } else {
    v.vertices = q.gamma_q_vertices();
  }
  std::map<RepVertex, int> index;
  for (size_t k = 0; k < v.vertices.size(); ++k) {
    index[v.vertices[k]] = static_cast<int>(k);
    v.labels.push_back(q.phi(v.vertices[k]).root);
  }
  for (size_t k = 0; k < v.vertices.size(); ++k) {
    RepVertex a = v.vertices[k];
    for (int j : q.datum().neighbors(a.i)) {
      auto it = index.find({j, a.p + 1});
      if (it != index.end())
        v.arrows.push_back({static_cast<int>(k), it->second,
                            static_cast<int>(-q.datum().C[a.i][j])});
    }
  }
  return v;
}

}  // namespace

std::string quiver_dot(const DynkinQuiver& q, bool repetition, Window w) {
  QuiverView v = view_of(q, repetition, w);
  std::string out = "digraph quiver {\n  rankdir=LR;\n";
  for (size_t k = 0; k < v.vertices.size(); ++k) {
    out += "  v" + std::to_string(k) + " [label=\"(" + std::to_string(v.vertices[k].i + 1) + "," +
           std::to_string(v.vertices[k].p) + "): " + root_str(v.labels[k]) + "\"];\n";
  }
  for (auto [a, b, m] : v.arrows)
    for (int rep = 0; rep < m; ++rep)
      out += "  v" + std::to_string(a) + " -> v" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

std::string quiver_json(const DynkinQuiver& q, bool repetition, Window w) {
  QuiverView v = view_of(q, repetition, w);
  json j;
  j["type"] = q.datum().type.str();
  json xi = json::array();
  for (long long x : q.xi()) xi.push_back(x);
  j["height"] = xi;
  j["emit"] = repetition ? "rep" : "ar";
  json verts = json::array();
  for (size_t k = 0; k < v.vertices.size(); ++k) {
    json e;
    e["i"] = v.vertices[k].i + 1;
    e["p"] = v.vertices[k].p;
    e["root"] = v.labels[k].coords;
    verts.push_back(e);
  }
  j["vertices"] = verts;
  json arr = json::array();
  for (auto [a, b, m] : v.arrows) {
    json e;
    e["from"] = a;
    e["to"] = b;
    e["mult"] = m;
    arr.push_back(e);
  }
  j["arrows"] = arr;
  return j.dump(2) + "\n";
}

std::string quiver_text(const DynkinQuiver& q, bool repetition, Window w) {
  QuiverView v = view_of(q, repetition, w);
  std::string out;
  for (size_t k = 0; k < v.vertices.size(); ++k)
    out += "(" + std::to_string(v.vertices[k].i + 1) + "," + std::to_string(v.vertices[k].p) +
           "): " + root_str(v.labels[k]) + "\n";
  for (auto [a, b, m] : v.arrows)
    out += "(" + std::to_string(v.vertices[a].i + 1) + "," + std::to_string(v.vertices[a].p) +
           ") -> (" + std::to_string(v.vertices[b].i + 1) + "," + std::to_string(v.vertices[b].p) +
           ") x" + std::to_string(m) + "\n";
  return out;
}

std::string pair_json(const CartanDatum& dt, const Word& seq) {
  PairMatrices pm = build_pair(dt, seq);
  json j;
  j["type"] = dt.type.str();
  json w = json::array();
  for (int i : seq) w.push_back(i + 1);
  j["word"] = w;
  j["lambda"] = pm.lambda;
  j["b"] = pm.b;
  Vec diag = product_diagonal(pm);
  j["product_diag"] = diag;
  // both sign normalizations of Lambda B circulate, so the diagonal is
  // reported under each
  Vec intro = diag;
  for (auto& v : intro) v = -v;
  j["product_diag_intro_normalization"] = intro;
  j["compatible"] = check_compatible(pm);
  j["cond_din"] = cond_din(dt, seq);
  return j.dump(2) + "\n";
}

}  // namespace qcartan
