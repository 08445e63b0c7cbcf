#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "wesym/cache.hpp"
#include "wesym/classify.hpp"
#include "wesym/code.hpp"
#include "wesym/error.hpp"
#include "wesym/invring.hpp"
#include "wesym/symgroup.hpp"
#include "wesym/tables.hpp"
#include "wesym/wpoly.hpp"

namespace {

using namespace wesym;
using nlohmann::json;
namespace wj = wesym::json;

enum Exit { kOk = 0, kOther = 1, kMismatch = 2, kBudget = 3, kPrecision = 4 };

struct Config {
  long precision = kDefaultPrecision;
  std::uint64_t budget = std::uint64_t{1} << 32;
  unsigned threads = 0;
  std::string format = "text";
  std::string cache_dir;
  std::uint64_t seed = RootOptions{}.seed;

  bool json() const { return format == "json"; }

  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.budget = budget;
    o.threads = threads;
    return o;
  }

  SymmetryOptions symmetry() const {
    SymmetryOptions o;
    o.roots.precision = precision;
    o.roots.seed = seed;
    o.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    return o;
  }
};

// "key=value" tokens after the leading name.
std::map<std::string, std::string> params(const std::vector<std::string>& tokens, std::size_t from) {
  std::map<std::string, std::string> out;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::InvalidArgument, "expected key=value, got '" + tokens[i] + "'");
    }
    out[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
  }
  return out;
}

unsigned need(const std::map<std::string, std::string>& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw Error(Errc::InvalidArgument, "missing parameter " + key + "=");
  return static_cast<unsigned>(std::stoul(it->second));
}

// Catalog name, "rm q= r= m=", "prm q= r= m=", "repetition|zero|full q= n=",
// "file=<path>" or a bare path to a code file.
LinearCode code_from_spec(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw Error(Errc::InvalidArgument, "missing code specification");
  const std::string& head = tokens[0];
  if (head.rfind("file=", 0) == 0) return read_code_file(head.substr(5));
  const auto p = params(tokens, 1);
  if (head == "rm" || head == "prm") {
    const FieldPtr F = field_of_order(need(p, "q"));
    return head == "rm" ? reed_muller(F, need(p, "r"), need(p, "m"))
                        : projective_reed_muller(F, need(p, "r"), need(p, "m"));
  }
  if (head == "repetition" || head == "zero" || head == "full") {
    const FieldPtr F = field_of_order(p.count("q") ? need(p, "q") : 2);
    const std::size_t n = need(p, "n");
    if (head == "repetition") return repetition(F, n);
    return head == "zero" ? zero_code(F, n) : full_space(F, n);
  }
  const auto keys = named_code_keys();
  if (std::find(keys.begin(), keys.end(), head) != keys.end()) return named_code(head);
  if (std::filesystem::exists(head)) return read_code_file(head);
  throw Error(Errc::UnknownName, "unknown code '" + head + "'");
}

// A polynomial file, or the built-in "zero-code n=<n>" (x^n).
HomPoly poly_from_arg(const std::string& arg, const std::vector<std::string>& extra) {
  if (arg == "zero-code") {
    const auto p = params(extra, 0);
    return HomPoly::monomial(need(p, "n"), 0);
  }
  return read_poly_file(arg);
}

std::string coeff_line(const std::vector<mpz_class>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].get_str();
  return s;
}

void emit(const Config& cfg, const json& j, const std::string& text) {
  if (cfg.json()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

struct Input {
  HomPoly poly;
  std::optional<unsigned> q;
  std::optional<LinearCode> code;
};

Input load_input(const Config& cfg, EnumeratorCache& cache, const std::vector<std::string>& spec,
                 const std::string& poly, std::optional<unsigned> q) {
  Input in;
  if (!poly.empty()) {
    in.poly = poly_from_arg(poly, spec);
    in.q = q;
    return in;
  }
  in.code = code_from_spec(spec);
  in.poly = HomPoly(cache.get(*in.code, cfg.enumeration()));
  in.q = in.code->F().q();
  return in;
}

std::string group_text(const SymmetryGroup& g) {
  std::ostringstream out;
  if (g.kind == GroupKind::Infinite) {
    out << "infinite (" << to_string(*g.infinite_case) << "), degree " << g.degree << '\n';
    return out.str();
  }
  out << g.iso->label() << " (" << g.iso->type_name() << ' ' << g.iso->parameter
      << "), |S|/scalars = " << g.proj_order << ", |S| = " << g.full_order << ", degree "
      << g.degree << ", " << g.prec << " bits\n";
  for (const auto& e : g.elements) {
    const auto m = e.proj.to_cld();
    out << "  order " << e.order << "  [";
    for (std::size_t i = 0; i < 4; ++i) {
      out << (i ? (i == 2 ? "; " : ", ") : "") << '(' << m[i].real() << ',' << m[i].imag() << ')';
    }
    const auto l = e.lambda.to_cld();
    out << "]  lambda (" << l.real() << ',' << l.imag() << ")\n";
  }
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Weight enumerators of linear codes and their symmetry groups"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--precision", cfg.precision, "Working precision in bits")
      ->envname("WESYM_PRECISION")
      ->check(CLI::Range(64, 4096));
  app.add_option("--budget", cfg.budget, "Maximum codewords to enumerate")
      ->envname("WESYM_BUDGET")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  app.add_option("--threads", cfg.threads, "Worker threads (0: all cores)")->envname("WESYM_THREADS");
  app.add_option("--format", cfg.format, "Output format")
      ->envname("WESYM_FORMAT")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached enumerators")
      ->envname("WESYM_CACHE_DIR");
  app.add_option("--seed", cfg.seed, "Root-finder initialization seed")->envname("WESYM_SEED");

  std::vector<std::string> spec;
  std::string poly;
  std::optional<unsigned> q;
  std::optional<std::size_t> k;

  auto* enum_cmd = app.add_subcommand("enum", "Weight enumerator of a code");
  enum_cmd->add_option("spec", spec, "Code specification")->required();

  auto* sym_cmd = app.add_subcommand("sym", "Symmetry group of a weight enumerator");
  sym_cmd->add_option("spec", spec, "Code specification or poly parameters");
  sym_cmd->add_option("--poly", poly, "Polynomial file, or zero-code");
  sym_cmd->add_option("--q", q, "Field order for the infinite-case test");

  unsigned field = 2;
  unsigned max_m = 0;
  auto* tables_cmd = app.add_subcommand("tables", "Reproduce a symmetry table and diff it");
  tables_cmd->add_option("--field", field, "Field order (2, 3 or 4)")->check(CLI::IsMember({2, 3, 4}));
  tables_cmd->add_option("--max-m", max_m, "Largest m (0: whole table)");

  auto* mw_cmd = app.add_subcommand("macwilliams", "Dual enumerator via MacWilliams");
  mw_cmd->add_option("--poly", poly, "Enumerator file")->required();
  mw_cmd->add_option("--q", q, "Field order")->required();
  mw_cmd->add_option("--k", k, "Code dimension")->required();

  auto* dual_cmd = app.add_subcommand("dual", "Generator matrix of the dual code");
  dual_cmd->add_option("spec", spec, "Code specification")->required();

  bool gleason = false;
  std::optional<unsigned> dihedral;
  std::string f1_file, f2_file;
  auto* dec_cmd = app.add_subcommand("decompose", "Express an enumerator in two generators");
  dec_cmd->add_option("--poly", poly, "Polynomial file")->required();
  auto* g_opt = dec_cmd->add_flag("--gleason", gleason, "Hamming 8 and Golay 24 generators");
  auto* d_opt = dec_cmd->add_option("--dihedral", dihedral, "Generators of index i");
  auto* f1_opt = dec_cmd->add_option("--f1", f1_file, "First generator file");
  dec_cmd->add_option("--f2", f2_file, "Second generator file")->needs(f1_opt);
  g_opt->excludes(d_opt)->excludes(f1_opt);
  d_opt->excludes(f1_opt);

  auto* cls_cmd = app.add_subcommand("classify", "Finite or infinite symmetry group, with structure");
  cls_cmd->add_option("spec", spec, "Code specification");
  cls_cmd->add_option("--poly", poly, "Polynomial file");
  cls_cmd->add_option("--q", q, "Field order");

  auto* div_cmd = app.add_subcommand("divisibility", "gcd of the occurring nonzero weights");
  div_cmd->add_option("spec", spec, "Code specification");
  div_cmd->add_option("--poly", poly, "Polynomial file");

  CLI11_PARSE(app, argc, argv);

  std::optional<std::filesystem::path> dir;
  if (!cfg.cache_dir.empty()) dir = cfg.cache_dir;
  EnumeratorCache cache(dir);

  if (enum_cmd->parsed()) {
    const LinearCode code = code_from_spec(spec);
    const WeightEnumerator w = cache.get(code, cfg.enumeration());
    std::ostringstream text;
    text << "n=" << code.n() << " k=" << code.k() << " q=" << code.F().q() << '\n'
         << coeff_line(w.coeffs) << '\n';
    emit(cfg, wj::to_json(w), text.str());
    return kOk;
  }

  if (sym_cmd->parsed()) {
    const Input in = load_input(cfg, cache, spec, poly, q);
    const SymmetryGroup g = symmetry_group(in.poly, in.q, cfg.symmetry());
    std::optional<CrossRatioCertificate> cert;
    if (g.kind == GroupKind::Finite && g.proj_order == 1 && g.distinct_roots >= 5 &&
        g.distinct_roots <= 40) {
      RootOptions ro = cfg.symmetry().roots;
      cert = trivial_certificate(find_roots(in.poly, ro));
    }
    std::string text = group_text(g);
    if (cert) {
      text += "  trivial-group certificate: roots";
      for (auto i : cert->roots) text += " " + std::to_string(i);
      text += '\n';
    }
    emit(cfg, wj::to_json(g, cert), text);
    return kOk;
  }

  if (tables_cmd->parsed()) {
    TableOptions opts;
    opts.max_m = max_m;
    opts.enumeration = cfg.enumeration();
    opts.symmetry = cfg.symmetry();
    opts.cache = &cache;
    if (!cfg.json()) {
      opts.progress = [](const CellResult& c) {
        std::cerr << "(" << c.r << "," << c.m << ") " << to_string(c.route) << ' '
                  << (c.computed.empty() ? "-" : c.computed) << " expected "
                  << (c.expected.empty() ? "-" : c.expected) << " [" << c.seconds << " s]"
                  << (c.error.empty() ? "" : " " + c.error) << '\n';
      };
    }
    const TableRun run = run_table(field, opts);
    std::string text = render_table(run);
    for (const auto& c : run.cells) {
      if (c.route != Route::Skipped && !c.match) {
        text += "mismatch at (" + std::to_string(c.r) + "," + std::to_string(c.m) + "): computed " +
                c.computed + ", expected " + (c.expected.empty() ? "-" : c.expected) + '\n';
      }
    }
    emit(cfg, wj::to_json(run), text);
    return run.mismatches() ? kMismatch : kOk;
  }

  if (mw_cmd->parsed()) {
    const WeightEnumerator w = macwilliams(to_enumerator(read_poly_file(poly)), *q, *k);
    std::ostringstream text;
    write_poly(text, HomPoly(w));
    emit(cfg, wj::to_json(w), text.str());
    return kOk;
  }

  if (dual_cmd->parsed()) {
    const LinearCode d = dual(code_from_spec(spec));
    std::ostringstream text;
    write_code(text, d);
    json j{{"q", d.F().q()}, {"n", d.n()}, {"k", d.k()}, {"rows", d.gen()}};
    emit(cfg, j, text.str());
    return kOk;
  }

  if (dec_cmd->parsed()) {
    const HomPoly p = read_poly_file(poly);
    std::pair<HomPoly, HomPoly> gens;
    if (gleason) {
      gens = gleason_generators();
    } else if (dihedral) {
      gens = dihedral_generators(*dihedral);
    } else if (!f1_file.empty() && !f2_file.empty()) {
      gens = {read_poly_file(f1_file), read_poly_file(f2_file)};
    } else {
      throw Error(Errc::InvalidArgument, "choose --gleason, --dihedral or --f1/--f2");
    }
    const auto d = decompose(p, gens.first, gens.second);
    if (!d) {
      emit(cfg, json{{"member", false}}, "not a member of the ring\n");
      return kOther;
    }
    std::ostringstream text;
    for (const auto& t : d->terms) {
      text << t.coeff.get_str() << " * f1^" << t.a << " * f2^" << t.b << '\n';
    }
    text << (d->unique ? "unique\n" : "not unique\n");
    json j = wj::to_json(*d);
    j["member"] = true;
    emit(cfg, j, text.str());
    return kOk;
  }

  if (cls_cmd->parsed()) {
    const Input in = load_input(cfg, cache, spec, poly, q);
    const Finiteness f = classify_finiteness(in.poly, in.q);
    if (f.kind == GroupKind::Finite) {
      json j{{"kind", "finite"}, {"distinct_roots", f.distinct_count}, {"structure", ""},
             {"notes", json::array()}};
      emit(cfg, j, "finite (" + std::to_string(f.distinct_count) + " distinct roots)\n");
      return kOk;
    }
    const InfiniteCaseReport r = analyze_infinite(in.poly, in.q);
    json j = wj::to_json(r);
    if (in.code) {
      const auto s = structural_case(*in.code);
      j["structural_case"] = s ? to_string(*s) : "unresolved";
    }
    std::string text = "infinite (" + to_string(r.kind) + ")\n";
    if (!r.structure.empty()) text += "structure: " + r.structure + '\n';
    for (const auto& n : r.notes) text += "note: " + n + '\n';
    emit(cfg, j, text);
    return kOk;
  }

  if (div_cmd->parsed()) {
    const Input in = load_input(cfg, cache, spec, poly, std::nullopt);
    const std::size_t d = divisibility(to_enumerator(in.poly));
    emit(cfg, json{{"divisibility", d}}, std::to_string(d) + '\n');
    return kOk;
  }
  return kOther;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const wesym::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == wesym::Errc::TooLarge) {
      std::cerr << "hint: raise --budget or enumerate the dual code and apply macwilliams\n";
      return kBudget;
    }
    if (e.code() == wesym::Errc::PrecisionExhausted) return kPrecision;
    return kOther;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
}
