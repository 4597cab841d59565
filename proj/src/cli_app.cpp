#include "quatgeo/cli_app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "quatgeo/fixtures.hpp"
#include "quatgeo/generator_file.hpp"
#include "quatgeo/heisenberg.hpp"
#include "quatgeo/report.hpp"
#include "quatgeo/spectra.hpp"

namespace quatgeo {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InvalidArgument("cannot write file: " + out_path);
  out << text;
}

const FileEntry& first_matrix(const GeneratorFile& f) {
  if (f.entries.empty())
    throw InvalidArgument("file contains no gen/mat entries");
  return f.entries.front();
}

std::string format_complex(std::complex<double> c) {
  return render_quaternion(Quat<double>{c.real(), c.imag(), 0.0, 0.0});
}

// Element literal: parameter groups separated by ';', quaternion literals
// separated by ','. Group layout per family:
//   real  a1,..,an ; b1,..,bn ; t
//   h1    z1,..,zn ; t
//   h2    xi1,..,xin ; om1,..,omn ; z
//   h3    q1,..,qn ; m
HeisenbergElement parse_heis_element(HFamily f, int n, const std::string& text) {
  std::vector<std::vector<Quat<Rat>>> groups(1);
  std::string piece;
  std::istringstream is(text);
  auto flush_piece = [&](std::string p) {
    if (p.find_first_not_of(" \t") == std::string::npos)
      throw InvalidArgument("empty component in element literal");
    groups.back().push_back(parse_quaternion(p));
  };
  std::string token;
  for (char c : text) {
    if (c == ',') {
      flush_piece(token);
      token.clear();
    } else if (c == ';') {
      flush_piece(token);
      token.clear();
      groups.emplace_back();
    } else {
      token += c;
    }
  }
  flush_piece(token);

  auto want = [&](std::size_t g, std::size_t len) {
    if (groups.size() <= g || groups[g].size() != len)
      throw InvalidArgument("element literal has the wrong shape for " +
                            std::string(family_name(f)) + "(" +
                            std::to_string(n) + ")");
  };
  auto as_rat = [](const Quat<Rat>& q) {
    if (!q.is_real()) throw InvalidArgument("expected a real component");
    return q.w;
  };
  auto as_cplx = [](const Quat<Rat>& q) {
    if (!q.is_complex())
      throw InvalidArgument("expected a complex (1, i) component");
    return Cplx<Rat>{q.w, q.x};
  };

  switch (f) {
    case HFamily::Real: {
      want(0, n);
      want(1, n);
      want(2, 1);
      if (groups.size() != 3) throw InvalidArgument("real takes 3 groups");
      std::vector<Rat> a, b;
      for (const auto& q : groups[0]) a.push_back(as_rat(q));
      for (const auto& q : groups[1]) b.push_back(as_rat(q));
      return HeisenbergElement::real_element(a, b, as_rat(groups[2][0]));
    }
    case HFamily::H1: {
      want(0, n);
      want(1, 1);
      if (groups.size() != 2) throw InvalidArgument("h1 takes 2 groups");
      std::vector<Cplx<Rat>> z;
      for (const auto& q : groups[0]) z.push_back(as_cplx(q));
      return HeisenbergElement::h1_element(z, as_rat(groups[1][0]));
    }
    case HFamily::H2: {
      want(0, n);
      want(1, n);
      want(2, 1);
      if (groups.size() != 3) throw InvalidArgument("h2 takes 3 groups");
      std::vector<Cplx<Rat>> xi, om;
      for (const auto& q : groups[0]) xi.push_back(as_cplx(q));
      for (const auto& q : groups[1]) om.push_back(as_cplx(q));
      return HeisenbergElement::h2_element(xi, om, as_cplx(groups[2][0]));
    }
    case HFamily::H3: {
      want(0, n);
      want(1, 1);
      if (groups.size() != 2) throw InvalidArgument("h3 takes 2 groups");
      return HeisenbergElement::h3_element(groups[0], groups[1][0]);
    }
  }
  throw InvalidArgument("unknown family");
}

HFamily parse_family(const std::string& name) {
  if (name == "real") return HFamily::Real;
  if (name == "h1") return HFamily::H1;
  if (name == "h2") return HFamily::H2;
  if (name == "h3") return HFamily::H3;
  throw InvalidArgument("family must be one of real, h1, h2, h3");
}

std::string heis_element_str(const HeisenbergElement& e) {
  std::ostringstream os;
  os << family_name(e.family()) << "(" << e.n() << ") top=[";
  for (int i = 0; i < e.n(); ++i)
    os << (i ? ", " : "") << render_quaternion(e.top()[i]);
  os << "] right=[";
  for (int i = 0; i < e.n(); ++i)
    os << (i ? ", " : "") << render_quaternion(e.right()[i]);
  os << "] center=" << render_quaternion(e.center());
  return os.str();
}

GeneratorFile file_from_group(const GeneratedGroup& g) {
  GeneratorFile f;
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    FileEntry e;
    e.name = i < g.labels.size() ? g.labels[i] : "g" + std::to_string(i + 1);
    e.affine = true;
    e.matrix = g.generators[i].as_matrix();
    f.entries.push_back(std::move(e));
  }
  return f;
}

struct CliOptions {
  std::string file;
  std::string out;
  std::string point = "(0, 1)";
  std::string backend;  // overrides the file directive when set
  std::string report_format = "text";
  std::string s3_class;
  std::string fixture;
  std::string family = "real";
  std::string elem1, elem2;
  std::string lattice;
  std::string r_spec = "1";
  int max_word_length = 6;
  std::size_t element_cap = 100000;
  int iterations = 200;
  int n = 1;
  long m = 2;
};

void apply_backend_override(const CliOptions& o, GeneratorFile& f) {
  if (o.backend.empty()) return;
  if (o.backend == "exact")
    f.backend = Backend::Exact;
  else if (o.backend == "float")
    f.backend = Backend::Float;
  else
    throw InvalidArgument("--backend must be exact or float");
}

int do_analyze(const CliOptions& o) {
  GeneratorFile f = parse_generator_file(read_file(o.file));
  apply_backend_override(o, f);
  if (f.backend != Backend::Exact)
    throw InvalidArgument(
        "group analysis needs the exact backend (decidable equality); set "
        "'backend exact'");
  GeneratedGroup g{f.generator_maps(), f.generator_labels()};
  EnumerateOptions opts;
  opts.max_word_length = o.max_word_length;
  opts.element_cap = o.element_cap;
  ExplorationReport rep = explore(g, opts);
  std::cout << (o.report_format == "kv" ? render_report_kv(rep)
                                        : render_report_text(rep));
  return rep.freeness.free_up_to_length ? 0 : 2;
}

int do_eig(const CliOptions& o) {
  GeneratorFile f = parse_generator_file(read_file(o.file));
  Spectrum spec = right_eigenvalues(to_double(first_matrix(f).matrix));
  for (std::size_t i = 0; i < spec.representatives.size(); ++i)
    std::cout << (i ? ", " : "") << format_complex(spec.representatives[i]);
  std::cout << "\n";
  return 0;
}

int do_det(const CliOptions& o) {
  GeneratorFile f = parse_generator_file(read_file(o.file));
  apply_backend_override(o, f);
  const FileEntry& e = first_matrix(f);
  double d = f.backend == Backend::Exact ? dieudonne_det(e.matrix)
                                         : dieudonne_det(to_double(e.matrix));
  std::ostringstream os;
  os.precision(12);
  os << d;
  std::cout << os.str() << "\n";
  return 0;
}

int do_orbit(const CliOptions& o) {
  GeneratorFile f = parse_generator_file(read_file(o.file));
  auto maps = f.generator_maps();
  if (maps.size() < 2)
    throw InvalidArgument("orbit needs two generators (A, B) in the file");
  AffineMap<double> a = to_double(maps[0]);
  AffineMap<double> b = to_double(maps[1]);
  QVec<double> p = to_double(parse_point(o.point, 2));

  OrbitProbe probe = orbit_accumulation_probe(a, b, p, o.iterations);
  std::cout << "# n  x  y  dist_to_base\n";
  for (std::size_t i = 0; i < probe.points.size(); ++i)
    std::cout << (i + 1) << "\t" << render_quaternion(probe.points[i][0])
              << "\t" << render_quaternion(probe.points[i][1]) << "\t"
              << probe.dist_to_base[i] << "\n";
  std::cout << "# min-distance record (n, dist):";
  for (const auto& [n, d] : probe.min_record) std::cout << " (" << n << ", " << d << ")";
  std::cout << "\n# distinct maps: " << probe.distinct_maps
            << "\n# min pairwise distance: " << probe.min_pairwise << "\n";
  return 0;
}

int do_s3_build(const CliOptions& o) {
  auto cls = parse_s3_class(o.s3_class);
  if (!cls)
    throw InvalidArgument("unknown class '" + o.s3_class +
                          "' (use 2I, 2O, 2T, 2D<2n>, 2C<n>, 1C<n odd>)");
  auto elems = s3_build(*cls);
  std::cout << "# " << cls->name() << ", order " << elems.size() << "\n";
  for (const auto& q : elems) std::cout << render_quaternion(q) << "\n";
  return 0;
}

int do_s3_recognize(const CliOptions& o) {
  auto exact = parse_quaternion_lines(read_file(o.file));
  std::vector<Quat<double>> s;
  for (const auto& q : exact) s.push_back(to_double(q));
  auto cls = s3_recognize(s);
  if (!cls) {
    std::cout << "unrecognized\n";
    return 2;
  }
  std::cout << cls->name() << " (order " << cls->expected_order() << ")\n";
  return 0;
}

constexpr const char* kLatticeNote =
    "note: membership checks algebraic closure and integrality only; "
    "uniformity and discreteness are not verified here";

int do_heis_member(const CliOptions& o) {
  LatticeSpec spec = [&] {
    if (o.lattice == "lambda_r") {
      std::vector<long> r;
      std::istringstream is(o.r_spec);
      std::string tok;
      while (std::getline(is, tok, ',')) r.push_back(std::stol(tok));
      return LatticeSpec::lambda_r(r);
    }
    if (o.lattice == "lambda13") return LatticeSpec::lambda13();
    if (o.lattice == "delta13") return LatticeSpec::delta13(o.m);
    throw InvalidArgument("lattice must be lambda_r, lambda13 or delta13");
  }();
  HFamily fam = spec.kind == LatticeSpec::Kind::LambdaR ? HFamily::Real
                                                        : HFamily::H3;
  int n = spec.kind == LatticeSpec::Kind::LambdaR
              ? static_cast<int>(spec.r.size())
              : 1;
  HeisenbergElement e = parse_heis_element(fam, n, o.elem1);
  std::cout << (lattice_contains(spec, e) ? "member" : "not a member") << "\n";
  std::cout << kLatticeNote << "\n";
  return 0;
}

int do_fixtures(const CliOptions& o) {
  GeneratedGroup g;
  if (o.fixture == "example")
    g = fixture_example();
  else if (o.fixture == "gamma0-n1")
    g = gamma0_n1();
  else if (o.fixture == "gamma0-n3")
    g = gamma0_n3();
  else
    throw InvalidArgument(
        "fixture must be one of: example, gamma0-n1, gamma0-n3");
  write_output(render_generator_file(file_from_group(g)), o.out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"quaternionic linear algebra and affine group toolkit"};
  app.require_subcommand(1);
  CliOptions o;

  auto* analyze = app.add_subcommand(
      "analyze", "enumerate a generated subgroup of Aff(2,H) and report "
                 "freeness, unipotency, phi image, kernel and translations");
  analyze->add_option("file", o.file, "generator file")->required();
  analyze->add_option("-L,--max-word-length", o.max_word_length);
  analyze->add_option("--element-cap", o.element_cap);
  analyze->add_option("--backend", o.backend)
      ->check(CLI::IsMember({"exact", "float"}));
  analyze->add_option("--report-format", o.report_format)
      ->check(CLI::IsMember({"text", "kv"}));

  auto* eig = app.add_subcommand(
      "eig", "right eigenvalue sphere representatives of the first matrix");
  eig->add_option("file", o.file)->required();

  auto* det = app.add_subcommand(
      "det", "Dieudonne determinant of the first matrix");
  det->add_option("file", o.file)->required();
  det->add_option("--backend", o.backend)
      ->check(CLI::IsMember({"exact", "float"}));

  auto* orbit = app.add_subcommand(
      "orbit", "orbit of a point under the commutator sequence of the first "
               "two generators (table for external plotting)");
  orbit->add_option("file", o.file)->required();
  orbit->add_option("--point", o.point, "start point, e.g. \"(0, 1)\"");
  orbit->add_option("-N,--iterations", o.iterations);

  auto* s3 = app.add_subcommand("s3", "finite subgroups of unit quaternions");
  s3->require_subcommand(1);
  auto* s3b = s3->add_subcommand("build", "build a classified subgroup");
  s3b->add_option("class", o.s3_class, "2I, 2O, 2T, 2D<2n>, 2C<n>, 1C<n>")
      ->required();
  auto* s3r = s3->add_subcommand(
      "recognize", "classify a finite set of unit quaternions (one per line)");
  s3r->add_option("file", o.file)->required();

  auto* heis = app.add_subcommand("heis", "Heisenberg families and lattices");
  heis->require_subcommand(1);
  auto* hmul = heis->add_subcommand("mul", "multiply two elements");
  hmul->add_option("family", o.family)->required();
  hmul->add_option("n", o.n)->required();
  hmul->add_option("lhs", o.elem1)->required();
  hmul->add_option("rhs", o.elem2)->required();
  auto* hmember = heis->add_subcommand("member", "lattice membership");
  hmember->add_option("lattice", o.lattice, "lambda_r, lambda13, delta13")
      ->required();
  hmember->add_option("element", o.elem1)->required();
  hmember->add_option("--r", o.r_spec, "lambda_r vector, e.g. 1,2");
  hmember->add_option("--m", o.m, "delta13 modulus");
  auto* hstep = heis->add_subcommand(
      "step", "nilpotency step of the standard generators");
  hstep->add_option("family", o.family)->required();
  hstep->add_option("n", o.n)->required();
  auto* hcenter = heis->add_subcommand(
      "center", "dimension of the central coordinate block");
  hcenter->add_option("family", o.family)->required();
  hcenter->add_option("n", o.n)->required();
  auto* hcover = heis->add_subcommand(
      "cover", "covering degree of H3(n)/delta13(m) over H3(n)/lambda13");
  hcover->add_option("m", o.m)->required();
  hcover->add_option("--n", o.n);

  auto* fixtures = app.add_subcommand(
      "fixtures", "emit a built-in generator file");
  fixtures->add_option("name", o.fixture, "example, gamma0-n1, gamma0-n3")
      ->required();
  fixtures->add_option("--out", o.out, "write to a file instead of stdout");

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) return do_analyze(o);
    if (eig->parsed()) return do_eig(o);
    if (det->parsed()) return do_det(o);
    if (orbit->parsed()) return do_orbit(o);
    if (s3b->parsed()) return do_s3_build(o);
    if (s3r->parsed()) return do_s3_recognize(o);
    if (hmul->parsed()) {
      HFamily fam = parse_family(o.family);
      HeisenbergElement a = parse_heis_element(fam, o.n, o.elem1);
      HeisenbergElement b = parse_heis_element(fam, o.n, o.elem2);
      std::cout << heis_element_str(h_mul(a, b)) << "\n";
      return 0;
    }
    if (hmember->parsed()) return do_heis_member(o);
    if (hstep->parsed()) {
      std::cout << nilpotency_step(
                       standard_generators(parse_family(o.family), o.n))
                << "\n";
      return 0;
    }
    if (hcenter->parsed()) {
      std::cout << center_dimension_probe(parse_family(o.family), o.n) << "\n";
      return 0;
    }
    if (hcover->parsed()) {
      std::cout << covering_degree(o.n, static_cast<int>(o.m)) << "\n";
      return 0;
    }
    if (fixtures->parsed()) return do_fixtures(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ExplosionCap& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ImageNotFinite& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ClosureError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const StepCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace quatgeo
