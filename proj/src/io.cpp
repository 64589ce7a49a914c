#include "frieze/io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace frieze {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
}

const json& need(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(0, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(0, std::string("missing key \"") + key + "\"");
  return *it;
}

int need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer())
    throw ParseError(0, std::string("key \"") + key + "\" must be an integer");
  return v.get<int>();
}

void need_format(const json& j, const std::string& tag) {
  const json& v = need(j, "format");
  if (!v.is_string() || v.get<std::string>() != tag)
    throw ParseError(0, "expected format \"" + tag + "\"");
}

// Decimal string: digits only, no leading zero (a lone "0" is tolerated
// here; the value check happens during validation).
Int parse_decimal(const json& v) {
  if (!v.is_string()) throw ParseError(0, "labels must be decimal strings");
  const std::string& s = v.get_ref<const std::string&>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos ||
      (s.size() > 1 && s[0] == '0'))
    throw ParseError(0, "bad decimal string \"" + s + "\"");
  return Int(s);
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string int_list(const std::vector<int>& xs) {
  std::string out = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

std::string decimal_list(const std::vector<Int>& xs) {
  std::string out = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += quoted(xs[i].get_str());
  }
  return out + "]";
}

}  // namespace

std::pair<int, std::vector<std::vector<Int>>> parse_frieze_table(const std::string& text) {
  json j = parse_json(text);
  need_format(j, "fwc-v1");
  int n = need_int(j, "n");
  const json& jrows = need(j, "rows");
  if (!jrows.is_array()) throw ParseError(0, "key \"rows\" must be an array");
  std::vector<std::vector<Int>> rows;
  rows.reserve(jrows.size());
  for (const json& jrow : jrows) {
    if (!jrow.is_array()) throw ParseError(0, "each row must be an array");
    std::vector<Int> row;
    row.reserve(jrow.size());
    for (const json& v : jrow) row.push_back(parse_decimal(v));
    rows.push_back(std::move(row));
  }
  return {n, std::move(rows)};
}

Frieze parse_frieze(const std::string& text) {
  auto [n, rows] = parse_frieze_table(text);
  try {
    return make_frieze(n, rows);
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
}

std::string serialize_frieze(const Frieze& f) {
  std::string out = "{\"format\": \"fwc-v1\", \"n\": " + std::to_string(f.size()) +
                    ", \"rows\": [";
  for (int i = 0; i < f.size() - 1; ++i) {
    if (i) out += ", ";
    std::vector<Int> row;
    for (int j = i + 1; j < f.size(); ++j) row.push_back(f.label(i, j));
    out += decimal_list(row);
  }
  return out + "]}";
}

Triangulation parse_triangulation(const std::string& text) {
  json j = parse_json(text);
  need_format(j, "tri-v1");
  int n = need_int(j, "n");
  const json& jd = need(j, "diagonals");
  if (!jd.is_array()) throw ParseError(0, "key \"diagonals\" must be an array");
  std::vector<std::pair<int, int>> diagonals;
  for (const json& e : jd) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError(0, "each diagonal must be a pair of integers");
    int a = e[0].get<int>(), b = e[1].get<int>();
    if (a >= b) throw ParseError(0, "diagonal endpoints must satisfy i < j");
    if (!diagonals.empty() && diagonals.back() >= std::make_pair(a, b))
      throw ParseError(0, "diagonals must be sorted");
    diagonals.emplace_back(a, b);
  }
  try {
    return make_triangulation(n, std::move(diagonals));
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
}

std::string serialize_triangulation(const Triangulation& t) {
  std::string out = "{\"format\": \"tri-v1\", \"n\": " + std::to_string(t.n) +
                    ", \"diagonals\": [";
  for (size_t i = 0; i < t.diagonals.size(); ++i) {
    if (i) out += ", ";
    out += "[" + std::to_string(t.diagonals[i].first) + ", " +
           std::to_string(t.diagonals[i].second) + "]";
  }
  return out + "]}";
}

EmbedPolicy parse_choices(const std::string& text) {
  json j = parse_json(text);
  need_format(j, "choices-v1");
  const json& jsteps = need(j, "steps");
  if (!jsteps.is_array()) throw ParseError(0, "key \"steps\" must be an array");
  EmbedPolicy policy;
  for (const json& js : jsteps) {
    const json& je = need(js, "edge");
    if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
        !je[1].is_number_integer())
      throw ParseError(0, "key \"edge\" must be a pair of integers");
    StepPick pick;
    pick.edge_a = je[0].get<int>();
    const json& jp = need(js, "primes");
    if (!jp.is_array()) throw ParseError(0, "key \"primes\" must be an array");
    for (const json& pc : jp)
      pick.primes.emplace_back(parse_decimal(need(pc, "p")), need_int(pc, "ip"),
                               parse_decimal(need(pc, "residue")));
    policy.scripted.push_back(std::move(pick));
  }
  return policy;
}

EmbeddingDocument embedding_document(const Frieze& input, const Embedding& emb) {
  EmbeddingDocument doc;
  doc.input = input;
  doc.cc = emb.cc;
  doc.tri = emb.tri;
  doc.vertex_map = emb.vertex_map;
  for (const ExtensionTrace& tr : emb.traces) {
    EmbeddingStep step;
    step.edge = tr.choice.edge;
    for (const PrimeLocal& pl : tr.choice.per_prime)
      step.primes.push_back({pl.p, pl.ell, pl.m, *pl.chosen_ip, *pl.chosen_residue});
    step.y0 = tr.y0_mod_c0;
    step.y = tr.y;
    doc.steps.push_back(std::move(step));
  }
  return doc;
}

std::string serialize_embedding(const EmbeddingDocument& doc) {
  std::string out = "{\"format\": \"embedding-v1\", \"input\": " +
                    serialize_frieze(doc.input) + ", \"cc\": " + serialize_frieze(doc.cc) +
                    ", \"triangulation\": " + serialize_triangulation(doc.tri) +
                    ", \"vertex_map\": " + int_list(doc.vertex_map) + ", \"steps\": [";
  for (size_t s = 0; s < doc.steps.size(); ++s) {
    const EmbeddingStep& step = doc.steps[s];
    if (s) out += ", ";
    out += "{\"edge\": [" + std::to_string(step.edge.first) + ", " +
           std::to_string(step.edge.second) + "], \"primes\": [";
    for (size_t k = 0; k < step.primes.size(); ++k) {
      const auto& pc = step.primes[k];
      if (k) out += ", ";
      out += "{\"p\": " + quoted(pc.p.get_str()) + ", \"ell\": " + std::to_string(pc.ell) +
             ", \"m\": " + std::to_string(pc.m) + ", \"ip\": " + std::to_string(pc.ip) +
             ", \"residue\": " + quoted(pc.residue.get_str()) + "}";
    }
    out += "], \"y0\": " + quoted(step.y0.get_str()) + ", \"y\": " + decimal_list(step.y) + "}";
  }
  return out + "]}";
}

EmbeddingDocument parse_embedding(const std::string& text) {
  json j = parse_json(text);
  need_format(j, "embedding-v1");
  EmbeddingDocument doc;
  doc.input = parse_frieze(need(j, "input").dump());
  doc.cc = parse_frieze(need(j, "cc").dump());
  doc.tri = parse_triangulation(need(j, "triangulation").dump());
  const json& jmap = need(j, "vertex_map");
  if (!jmap.is_array()) throw ParseError(0, "key \"vertex_map\" must be an array");
  for (const json& v : jmap) {
    if (!v.is_number_integer()) throw ParseError(0, "vertex_map entries must be integers");
    doc.vertex_map.push_back(v.get<int>());
  }
  const json& jsteps = need(j, "steps");
  if (!jsteps.is_array()) throw ParseError(0, "key \"steps\" must be an array");
  for (const json& js : jsteps) {
    EmbeddingStep step;
    const json& je = need(js, "edge");
    if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
        !je[1].is_number_integer())
      throw ParseError(0, "key \"edge\" must be a pair of integers");
    step.edge = {je[0].get<int>(), je[1].get<int>()};
    const json& jprimes = need(js, "primes");
    if (!jprimes.is_array()) throw ParseError(0, "key \"primes\" must be an array");
    for (const json& pc : jprimes) {
      EmbeddingStep::PrimeChoice choice;
      choice.p = parse_decimal(need(pc, "p"));
      choice.ell = need_int(pc, "ell");
      choice.m = need_int(pc, "m");
      choice.ip = need_int(pc, "ip");
      choice.residue = parse_decimal(need(pc, "residue"));
      step.primes.push_back(std::move(choice));
    }
    step.y0 = parse_decimal(need(js, "y0"));
    const json& jy = need(js, "y");
    if (!jy.is_array()) throw ParseError(0, "key \"y\" must be an array");
    for (const json& v : jy) step.y.push_back(parse_decimal(v));
    doc.steps.push_back(std::move(step));
  }
  if (!is_conway_coxeter(doc.cc))
    throw ValidationError("embedded frieze has a boundary edge with label != 1");
  try {
    if (!(restrict(doc.cc, doc.vertex_map) == doc.input))
      throw ValidationError("restriction along vertex_map does not reproduce the input");
    if (!(triangulation_of(doc.cc) == doc.tri))
      throw ValidationError("triangulation does not match the embedded frieze");
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
  return doc;
}

namespace {

std::string fmt2(double v) {
  if (std::abs(v) < 0.005) v = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

constexpr double kPi = 3.14159265358979323846;

bool heavy(const Frieze& f, int i, int j) {
  int gap = j - i;
  bool boundary = gap == 1 || gap == f.size() - 1;
  return !boundary && f.label(i, j) == 1;
}

std::string render_svg(const Frieze& f) {
  int n = f.size();
  const double cx = 320, cy = 320, radius = 280;
  auto px = [&](int k) { return cx + radius * std::cos(2 * kPi * k / n); };
  auto py = [&](int k) { return cy + radius * std::sin(2 * kPi * k / n); };
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
      "viewBox=\"0 0 640 640\">\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out += "<line x1=\"" + fmt2(px(i)) + "\" y1=\"" + fmt2(py(i)) + "\" x2=\"" +
             fmt2(px(j)) + "\" y2=\"" + fmt2(py(j)) + "\" stroke=\"black\" stroke-width=\"" +
             (heavy(f, i, j) ? "3" : "1") + "\"/>\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out += "<text x=\"" + fmt2((px(i) + px(j)) / 2) + "\" y=\"" +
             fmt2((py(i) + py(j)) / 2) +
             "\" font-size=\"16\" text-anchor=\"middle\" fill=\"blue\">" +
             f.label(i, j).get_str() + "</text>\n";
  for (int k = 0; k < n; ++k) {
    out += "<circle cx=\"" + fmt2(px(k)) + "\" cy=\"" + fmt2(py(k)) +
           "\" r=\"4\" fill=\"black\"/>\n";
    double lx = cx + (radius + 18) * std::cos(2 * kPi * k / n);
    double ly = cy + (radius + 18) * std::sin(2 * kPi * k / n);
    out += "<text x=\"" + fmt2(lx) + "\" y=\"" + fmt2(ly) +
           "\" font-size=\"14\" text-anchor=\"middle\">" + std::to_string(k) + "</text>\n";
  }
  return out + "</svg>\n";
}

std::string render_dot(const Frieze& f) {
  int n = f.size();
  std::string out = "graph frieze {\n  layout=\"neato\";\n  node [shape=circle];\n";
  for (int k = 0; k < n; ++k)
    out += "  v" + std::to_string(k) + " [pos=\"" + fmt2(3 * std::cos(2 * kPi * k / n)) +
           "," + fmt2(3 * std::sin(2 * kPi * k / n)) + "!\"];\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + " [label=\"" +
             f.label(i, j).get_str() + "\"" + (heavy(f, i, j) ? ", penwidth=3" : "") +
             "];\n";
  return out + "}\n";
}

}  // namespace

std::string render(const Frieze& f, const std::string& format) {
  if (format == "svg") return render_svg(f);
  if (format == "dot") return render_dot(f);
  throw UnsupportedFormat("format \"" + format + "\" is not svg or dot");
}

std::string render(const Triangulation& t, const std::string& format) {
  return render(frieze_of(t), format);
}

}  // namespace frieze
