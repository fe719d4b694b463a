#include "asch/cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "asch/embed/embedding.hpp"
#include "asch/families/families.hpp"
#include "asch/feas/feasibility.hpp"
#include "asch/studies/studies.hpp"

namespace asch {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return exit_code::parse;
    case ErrorKind::infeasible: return exit_code::infeasible;
    case ErrorKind::case_mismatch: return exit_code::case_mismatch;
    case ErrorKind::not_qpg: return exit_code::not_qpg;
    case ErrorKind::not_scheme: return exit_code::not_scheme;
    case ErrorKind::unsupported: return exit_code::unsupported;
    case ErrorKind::refused: return exit_code::refused;
    case ErrorKind::usage: return exit_code::usage;
    case ErrorKind::domain:
    case ErrorKind::incompatible_class:
    case ErrorKind::field_mismatch:
    case ErrorKind::invariant: return exit_code::invariant;
  }
  return exit_code::invariant;
}

std::vector<ArrayLine> read_array_lines(std::istream& in) {
  std::vector<ArrayLine> out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    out.push_back({no, line.substr(b, e - b + 1)});
  }
  return out;
}

namespace {

struct Options {
  std::string format = "text";
  int eigenspace = -1;
  std::string ratio_bound = "3";
  std::string cache;
  bool slow = false;
  int jobs = 0;
};

bool machine(const Options& o) { return o.format == "machine"; }

Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::parse, "not a rational number: '" + s + "'");
  }
}

std::string join(const std::vector<int>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

int cmd_params(const std::string& text, const Options& o, std::ostream& out) {
  auto array = ParameterArray::parse(text);
  auto t = recover_from_parameter_array(array);
  auto e = compute_eigendata(t);
  auto q = compute_krein(e);
  auto structures = find_imprimitivity_sets(t, &e, &q);
  const Rational bound = parse_rational(o.ratio_bound);
  const int d = t.d();
  if (machine(o)) {
    out << "array\t" << array.to_string() << "\n";
    out << "n\t" << t.n() << "\nd\t" << d << "\n";
    for (int h = 0; h <= d; ++h)
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) out << "p\t" << h << '\t' << i << '\t' << j << '\t' << t.p(h, i, j) << "\n";
    for (int j = 0; j <= d; ++j)
      for (int i = 0; i <= d; ++i) out << "P\t" << j << '\t' << i << '\t' << e.P[j][i].to_string() << "\n";
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) out << "Q\t" << i << '\t' << j << '\t' << e.Q[i][j].to_string() << "\n";
    for (int j = 0; j <= d; ++j) out << "m\t" << j << '\t' << e.m[j].to_string() << "\n";
    for (int h = 0; h <= d; ++h)
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) out << "q\t" << h << '\t' << i << '\t' << j << '\t' << q.q(h, i, j).to_string() << "\n";
    for (const auto& s : structures) {
      if (!s.nontrivial) continue;
      out << "imprimitivity\t" << s.label() << '\t' << s.n_bar << '\t'
          << (s.overline0 ? "{" + join(*s.overline0) + "}" : std::string("-")) << "\n";
      for (const auto& c : select_eigenspace(t, s, bound))
        out << "eigenspace\t" << s.label() << '\t' << c.j << '\t' << c.ratio.get_str() << "\n";
    }
    return exit_code::ok;
  }
  out << "array " << array.to_string() << "\n";
  out << "n = " << t.n() << ", d = " << d << "\n";
  if (e.field) out << "field: " << e.field->describe() << "\n";
  for (int h = 0; h <= d; ++h) {
    out << "p^" << h << ":\n";
    for (int i = 0; i <= d; ++i) {
      out << " ";
      for (int j = 0; j <= d; ++j) out << ' ' << t.p(h, i, j);
      out << "\n";
    }
  }
  auto dump = [&](const char* name, const Matrix<AlgebraicReal>& m) {
    out << name << ":\n";
    for (const auto& row : m) {
      out << " ";
      for (const auto& v : row) out << "  " << v.to_string();
      out << "\n";
    }
  };
  dump("P", e.P);
  dump("Q", e.Q);
  out << "m =";
  for (const auto& v : e.m) out << ' ' << v.to_string();
  out << "\n";
  std::vector<std::string> negative;
  for (int h = 0; h <= d; ++h)
    for (int i = 0; i <= d; ++i)
      for (int j = i; j <= d; ++j)
        if (q.q(h, i, j).sign() < 0)
          negative.push_back("q^" + std::to_string(h) + "_" + std::to_string(i) + std::to_string(j));
  out << "negative Krein parameters:";
  if (negative.empty()) out << " none";
  for (const auto& s : negative) out << ' ' << s;
  out << "\n";
  for (const auto& s : structures) {
    if (!s.nontrivial) continue;
    out << "imprimitivity set " << s.label() << ": classes of size " << s.n_bar;
    if (s.overline0) out << ", dual set {" << join(*s.overline0) << "}";
    out << "\n";
    for (const auto& c : select_eigenspace(t, s, bound))
      out << "  eigenspace " << c.j << " (m = " << e.m[c.j].to_string() << ", ratio " << c.ratio.get_str() << ")\n";
  }
  return exit_code::ok;
}

int cmd_feas(const std::string& path, const Options& o, std::ostream& out) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    require(bool(file), ErrorKind::usage, "cannot open " + path);
    in = &file;
  }
  auto lines = read_array_lines(*in);
  std::vector<ParameterArray> arrays;
  for (const auto& l : lines) {
    try {
      arrays.push_back(ParameterArray::parse(l.text));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::parse) throw;
      fail(ErrorKind::parse, "line " + std::to_string(l.line) + ": " + e.what());
    }
  }
  // The battery is run one array at a time; reports keep input order.
  (void)o.jobs;
  for (const auto& a : arrays) {
    auto rep = run_all(a);
    if (machine(o)) out << rep.machine_line() << "\n";
    else out << rep.text();
  }
  return exit_code::ok;
}

std::vector<int> parse_vertex_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorKind::parse, "bad vertex '" + tok + "' in --vertices");
    }
  }
  return out;
}

int cmd_embed(const std::string& path, const std::string& vertices, const Options& o, std::ostream& out) {
  auto r = load_relation_matrix(path);
  auto t = tensor_from_relation_matrix(r);
  auto e = compute_eigendata(t);
  const int j = o.eigenspace < 0 ? 1 : o.eigenspace;
  require(j >= 1 && j <= t.d(), ErrorKind::usage, "eigenspace index must lie in 1.." + std::to_string(t.d()));
  std::vector<int> subset;
  if (vertices.empty())
    for (int x = 0; x < r.n(); ++x) subset.push_back(x);
  else
    subset = parse_vertex_list(vertices);
  for (int x : subset) require(x >= 0 && x < r.n(), ErrorKind::usage, "vertex " + std::to_string(x) + " out of range");
  auto sub = induced_subscheme(r, subset);
  auto res = compute_embedding(gram_from_candidate(sub.matrix, e, j, &sub.relation_map));
  if (machine(o)) {
    if (!res) {
      out << "failure\t" << to_string(res.failure->kind) << '\t' << res.failure->x << '\t' << res.failure->y << '\t'
          << res.failure->s.to_string() << "\n";
      return exit_code::ok;
    }
    const auto& u = *res.matrix;
    out << "rank\t" << u.rank() << '\t' << u.dimension() << "\n";
    for (int x = 0; x < u.rows(); ++x) {
      out << "row\t" << subset[x];
      for (long h = 0; h < u.dimension(); ++h) out << '\t' << (h < u.rank() ? u.entry(x, h).to_string() : "0");
      out << "\n";
    }
    return exit_code::ok;
  }
  out << "eigenspace " << j << " (m = " << e.m[j].to_string() << "), " << subset.size() << " vertices\n";
  if (!res) {
    out << "no embedding: " << res.failure->describe() << "\n";
    return exit_code::ok;
  }
  out << "U (rank " << res.matrix->rank() << "):\n";
  res.matrix->dump(out);
  return exit_code::ok;
}

int cmd_case(const std::string& id, bool list, const Options& o, std::ostream& out, std::ostream& err) {
  if (list || id.empty()) {
    for (const auto& c : list_cases()) {
      if (machine(o)) out << c.id << '\t' << c.array << '\t' << to_string(c.verdict) << '\t' << (c.slow ? "slow" : "") << "\n";
      else out << c.id << "  " << c.array << "  " << c.summary << (c.slow ? " (slow)" : "") << "\n";
    }
    return exit_code::ok;
  }
  CaseOptions co;
  co.cache_path = o.cache;
  co.allow_slow_generation = o.slow;
  co.jobs = o.jobs;
  co.progress = [&](const std::string& s) { err << "[" << s << "]\n"; };
  auto t = run_case_unchecked(id, co);
  if (machine(o)) write_transcript_machine(out, t);
  else write_transcript_text(out, t);
  auto diff = compare_with_expected(t, case_info(id));
  for (const auto& d : diff) err << "mismatch: " << d << "\n";
  return diff.empty() ? exit_code::ok : exit_code::case_mismatch;
}

int cmd_construct(const std::vector<std::string>& spec, const std::string& output, const Options& o, std::ostream& out) {
  require(!spec.empty(), ErrorKind::usage, "construct needs a family name");
  std::vector<long> args;
  for (std::size_t i = 1; i < spec.size(); ++i) {
    std::string a = spec[i];
    if (!a.empty() && (a[0] == 'K' || a[0] == 'k')) a = a.substr(1);  // H 3 K2
    try {
      std::size_t used = 0;
      args.push_back(std::stol(a, &used));
      if (used != a.size()) throw std::invalid_argument(a);
    } catch (const std::exception&) {
      fail(ErrorKind::parse, "bad construction argument '" + spec[i] + "'");
    }
  }
  auto s = named_scheme(spec[0], args);
  if (!output.empty()) {
    save_relation_matrix(output, s.matrix);
    if (!machine(o)) out << s.name << ": " << s.matrix.n() << " vertices, written to " << output << "\n";
    return exit_code::ok;
  }
  write_relation_matrix(out, s.matrix);
  return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Association scheme parameters, feasibility and eigenspace embeddings", "asch"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--jobs", o.jobs, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  };

  std::string array, feas_path, embed_path, vertices, case_id, output;
  bool list = false;
  std::vector<std::string> construct_spec;

  auto* params = app.add_subcommand("params", "derive parameters from a parameter array");
  params->add_option("array", array, "e.g. \"[[3, 3, 1], [2, 0; 3]]\"")->required();
  params->add_option("--ratio-bound", o.ratio_bound, "largest m_j / m-bar for listed eigenspaces");
  common(params);

  auto* feas = app.add_subcommand("feas", "run the feasibility battery over a file of arrays");
  feas->add_option("file", feas_path, "one array per line, '-' for stdin")->required();
  common(feas);

  auto* embed = app.add_subcommand("embed", "embed a relation-matrix file into an eigenspace");
  embed->add_option("file", embed_path)->required();
  embed->add_option("--eigenspace", o.eigenspace, "eigenspace index j (default 1)");
  embed->add_option("--vertices", vertices, "comma-separated subset to embed");
  common(embed);

  auto* cs = app.add_subcommand("case", "run a case study");
  cs->add_option("id", case_id);
  cs->add_flag("--list", list, "list the cases");
  cs->add_option("--cache", o.cache, "census cache file");
  cs->add_flag("--allow-slow-generation", o.slow, "regenerate the census instead of reading it");
  common(cs);

  auto* construct = app.add_subcommand("construct", "build a scheme from a family");
  construct->add_option("spec", construct_spec, "family and arguments, e.g. J 5 2")->required();
  construct->add_option("-o,--output", output, "relation-matrix file");
  common(construct);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_code::usage;
  }

  try {
    if (*params) return cmd_params(array, o, out);
    if (*feas) return cmd_feas(feas_path, o, out);
    if (*embed) return cmd_embed(embed_path, vertices, o, out);
    if (*cs) return cmd_case(case_id, list, o, out, err);
    if (*construct) return cmd_construct(construct_spec, output, o, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return exit_code::usage;
}

}  // namespace asch
