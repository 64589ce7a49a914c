#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frieze/io.hpp"
#include "frieze/oracle.hpp"

namespace {

using namespace frieze;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + out_path);
  out << text << "\n";
}

int enumeration_cap() {
  if (const char* env = std::getenv("FRIEZE_ENUM_CAP")) {
    int cap = std::atoi(env);
    if (cap >= 3) return cap;
  }
  return 12;
}

std::string join_ints(const std::vector<int>& xs, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

int run_validate(const std::string& path) {
  auto [n, rows] = parse_frieze_table(read_file(path));
  ValidationReport report;
  try {
    report = verify_ptolemy(n, rows);
  } catch (const Error& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return 1;
  }
  if (report.ok) {
    std::cout << "valid\n";
    return 0;
  }
  for (const Violation& v : report.violations)
    std::cout << "exchange relation fails at (" << v.i << "," << v.j << "," << v.k
              << "," << v.l << "): " << v.lhs.get_str() << " != " << v.rhs.get_str()
              << "\n";
  return 1;
}

int run_check(const std::string& path) {
  Frieze f = parse_frieze(read_file(path));
  CriterionReport rep = is_embeddable(f);
  if (rep.embeddable()) {
    std::cout << "embeddable\n";
    return 0;
  }
  std::cout << "not embeddable\n";
  if (rep.gcd_witness) {
    const GcdWitness& w = *rep.gcd_witness;
    std::cout << "gcd witness: vertices (" << w.vertices[0] << ", " << w.vertices[1]
              << ", " << w.vertices[2] << "), gcds (" << w.gcds[0].get_str() << ", "
              << w.gcds[1].get_str() << ", " << w.gcds[2].get_str() << ")\n";
  }
  if (rep.valuation_witness) {
    const ValuationWitness& w = *rep.valuation_witness;
    std::cout << "valuation witness: p=" << w.p.get_str() << ", vertices ("
              << join_ints(w.vertices, ", ") << "), m=" << w.m << "\n";
  }
  return 1;
}

int run_embed(const std::string& path, bool all, int limit,
              const std::string& choices_path, const std::string& out_path) {
  Frieze f = parse_frieze(read_file(path));
  if (all) {
    std::vector<Embedding> embs = enumerate_embeddings(f, limit);
    std::string out = "[";
    for (size_t i = 0; i < embs.size(); ++i) {
      if (i) out += ", ";
      out += serialize_embedding(embedding_document(f, embs[i]));
    }
    write_output(out_path, out + "]");
    return 0;
  }
  EmbedPolicy policy;
  if (!choices_path.empty()) policy = parse_choices(read_file(choices_path));
  Embedding emb = embed(f, policy);
  write_output(out_path, serialize_embedding(embedding_document(f, emb)));
  return 0;
}

int run_restrict(const std::string& path, const std::vector<int>& vertices,
                 const std::string& out_path) {
  Frieze f = parse_frieze(read_file(path));
  write_output(out_path, serialize_frieze(restrict(f, vertices)));
  return 0;
}

int run_from_triangulation(const std::string& path, const std::string& out_path) {
  Triangulation t = parse_triangulation(read_file(path));
  write_output(out_path, serialize_frieze(frieze_of(t)));
  return 0;
}

int run_to_triangulation(const std::string& path, const std::string& out_path) {
  Frieze f = parse_frieze(read_file(path));
  write_output(out_path, serialize_triangulation(triangulation_of(f)));
  return 0;
}

int run_oracle(const std::string& path, int max_n) {
  Frieze f = parse_frieze(read_file(path));
  auto witness = occurs_in_cc(f, max_n, std::max(max_n, enumeration_cap()));
  if (!witness) {
    std::cout << "no occurrence up to n=" << max_n << "\n";
    return 1;
  }
  std::cout << "found in " << witness->n_cc << "-gon\n";
  std::cout << "triangulation: " << serialize_triangulation(witness->tri) << "\n";
  std::cout << "subset: [" << join_ints(witness->vertex_subset, ", ") << "]\n";
  std::cout << "transform: rotation " << witness->transform.offset
            << (witness->transform.reflected ? ", reflected" : "") << "\n";
  return 0;
}

int run_pattern(const std::string& path, int row_count) {
  Frieze f = parse_frieze(read_file(path));
  PatternWindow w = pattern_rows(f, 0, row_count);
  for (const auto& row : w.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << row[i].get_str();
    }
    std::cout << "\n";
  }
  return 0;
}

int run_render(const std::string& path, const std::string& format,
               const std::string& out_path) {
  std::string text = read_file(path);
  std::string rendered;
  try {
    rendered = render(parse_frieze(text), format);
  } catch (const ParseError&) {
    rendered = render(parse_triangulation(text), format);
  }
  if (out_path.empty())
    std::cout << rendered;
  else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot write " + out_path);
    out << rendered;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"friezes with coefficients: validation, embeddability, extension"};
  app.require_subcommand(1);

  std::string file, out_path, choices_path, format = "svg";
  std::vector<int> vertices;
  bool all = false;
  int limit = 16, max_n = 12, row_count = 1;

  CLI::App* c_validate = app.add_subcommand("validate", "check all exchange relations");
  c_validate->add_option("file", file)->required();

  CLI::App* c_check = app.add_subcommand("check", "run the embeddability criterion");
  c_check->add_option("file", file)->required();

  CLI::App* c_embed = app.add_subcommand("embed", "embed into a frieze with unit boundary");
  c_embed->add_option("file", file)->required();
  c_embed->add_flag("--all", all, "enumerate embeddings instead of building one");
  c_embed->add_option("--limit", limit, "max embeddings with --all")->check(CLI::PositiveNumber);
  c_embed->add_option("--choices", choices_path, "choices-v1 file scripting the steps");
  c_embed->add_option("-o,--output", out_path, "write result here instead of stdout");

  CLI::App* c_restrict = app.add_subcommand("restrict", "restrict to a vertex subset");
  c_restrict->add_option("file", file)->required();
  c_restrict->add_option("--vertices", vertices, "comma-separated vertex list")
      ->required()
      ->delimiter(',');
  c_restrict->add_option("-o,--output", out_path);

  CLI::App* c_from = app.add_subcommand("from-triangulation", "frieze of a triangulation");
  c_from->add_option("file", file)->required();
  c_from->add_option("-o,--output", out_path);

  CLI::App* c_to = app.add_subcommand("to-triangulation", "triangulation of a unit-boundary frieze");
  c_to->add_option("file", file)->required();
  c_to->add_option("-o,--output", out_path);

  CLI::App* c_oracle = app.add_subcommand("oracle", "exhaustive occurrence search");
  c_oracle->add_option("file", file)->required();
  c_oracle->add_option("--max-n", max_n, "largest polygon size to scan")->required();

  CLI::App* c_pattern = app.add_subcommand("pattern", "print rows of the infinite array");
  c_pattern->add_option("file", file)->required();
  c_pattern->add_option("--rows", row_count, "number of rows, starting at row 0")
      ->check(CLI::PositiveNumber);

  CLI::App* c_render = app.add_subcommand("render", "draw the polygon with its labels");
  c_render->add_option("file", file)->required();
  c_render->add_option("--format", format, "svg or dot");
  c_render->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*c_validate) return run_validate(file);
    if (*c_check) return run_check(file);
    if (*c_embed) return run_embed(file, all, limit, choices_path, out_path);
    if (*c_restrict) return run_restrict(file, vertices, out_path);
    if (*c_from) return run_from_triangulation(file, out_path);
    if (*c_to) return run_to_triangulation(file, out_path);
    if (*c_oracle) return run_oracle(file, max_n);
    if (*c_pattern) return run_pattern(file, row_count);
    if (*c_render) return run_render(file, format, out_path);
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const NotEmbeddable& e) {
    std::cerr << "not embeddable: " << e.what() << "\n";
    return 1;
  } catch (const NotConwayCoxeter& e) {
    std::cerr << "not a unit-boundary frieze: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
