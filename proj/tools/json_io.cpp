#include "json_io.hpp"

#include "wesym/error.hpp"

namespace wesym::json {

namespace {

json big(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

mpz_class big_from(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  return mpz_class(j.get<std::string>());
}

InfiniteCase case_from(const std::string& s) {
  for (auto c : {InfiniteCase::ZeroCode, InfiniteCase::FullSpace, InfiniteCase::SumOfPairs,
                 InfiniteCase::OtherTwoRoot}) {
    if (to_string(c) == s) return c;
  }
  throw Error(Errc::ParseError, "unknown infinite case '" + s + "'");
}

IsoKind iso_from(const std::string& s) {
  for (auto k : {IsoKind::Cyclic, IsoKind::Dihedral, IsoKind::A4, IsoKind::S4, IsoKind::A5}) {
    if (IsoType{k, 1}.type_name() == s) return k;
  }
  throw Error(Errc::ParseError, "unknown group type '" + s + "'");
}

}  // namespace

json to_json(const WeightEnumerator& w) {
  json j;
  j["n"] = w.degree();
  json c = json::array();
  for (const auto& a : w.coeffs) c.push_back(big(a));
  j["coeffs"] = std::move(c);
  if (w.q) j["q"] = *w.q;
  if (w.k) j["k"] = *w.k;
  return j;
}

WeightEnumerator enumerator_from_json(const json& j) {
  WeightEnumerator w;
  for (const auto& c : j.at("coeffs")) w.coeffs.push_back(big_from(c));
  if (j.contains("q")) w.q = j["q"].get<unsigned>();
  if (j.contains("k")) w.k = j["k"].get<std::size_t>();
  return w;
}

json to_json(const HomPoly& p) {
  json j;
  j["degree"] = p.degree();
  json c = json::array();
  for (const auto& a : p.coeffs()) c.push_back(a.get_str());
  j["coeffs"] = std::move(c);
  return j;
}

HomPoly poly_from_json(const json& j) {
  std::vector<mpq_class> c;
  for (const auto& s : j.at("coeffs")) {
    mpq_class v(s.get<std::string>());
    v.canonicalize();
    c.push_back(v);
  }
  return HomPoly(std::move(c));
}

json to_json(const SymmetryGroup& g, const std::optional<CrossRatioCertificate>& cert) {
  json j;
  j["degree"] = g.degree;
  j["distinct_roots"] = g.distinct_roots;
  if (g.kind == GroupKind::Infinite) {
    j["kind"] = "infinite";
    j["case"] = to_string(*g.infinite_case);
    return j;
  }
  j["kind"] = "finite";
  j["proj_order"] = g.proj_order;
  j["full_order"] = g.full_order;
  j["precision"] = g.prec;
  j["iso"] = {{"type", g.iso->type_name()}, {"parameter", g.iso->parameter}, {"label", g.iso->label()}};
  json els = json::array();
  for (const auto& e : g.elements) {
    json m = json::array();
    for (const auto& z : e.proj.entries()) m.push_back(z.to_string());
    els.push_back({{"matrix", std::move(m)}, {"lambda", e.lambda.to_string()}, {"order", e.order}});
  }
  j["elements"] = std::move(els);
  if (cert) {
    j["certificates"] = json::array(
        {{{"roots", cert->roots}, {"first", cert->first}, {"second", cert->second}}});
  }
  return j;
}

SymmetryGroup group_from_json(const json& j) {
  SymmetryGroup g;
  g.degree = j.at("degree").get<std::size_t>();
  g.distinct_roots = j.value("distinct_roots", std::size_t{0});
  if (j.at("kind") == "infinite") {
    g.kind = GroupKind::Infinite;
    g.infinite_case = case_from(j.at("case").get<std::string>());
    return g;
  }
  g.kind = GroupKind::Finite;
  g.proj_order = j.at("proj_order").get<std::size_t>();
  g.full_order = j.at("full_order").get<std::size_t>();
  g.prec = j.at("precision").get<mpfr_prec_t>();
  g.iso = IsoType{iso_from(j.at("iso").at("type").get<std::string>()),
                  j.at("iso").at("parameter").get<std::size_t>()};
  for (const auto& e : j.at("elements")) {
    std::array<BigComplex, 4> m;
    for (std::size_t i = 0; i < 4; ++i) m[i] = BigComplex::parse(e.at("matrix").at(i).get<std::string>());
    SymmetryElement el;
    el.proj = ProjectiveMatrix(std::move(m));
    el.lambda = BigComplex::parse(e.at("lambda").get<std::string>());
    el.order = e.at("order").get<std::size_t>();
    g.elements.push_back(std::move(el));
  }
  return g;
}

json to_json(const InvariantDecomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms) terms.push_back({{"a", t.a}, {"b", t.b}, {"coeff", t.coeff.get_str()}});
  return {{"f1", to_json(d.f1)}, {"f2", to_json(d.f2)}, {"terms", std::move(terms)}, {"unique", d.unique}};
}

InvariantDecomposition decomposition_from_json(const json& j) {
  InvariantDecomposition d;
  d.f1 = poly_from_json(j.at("f1"));
  d.f2 = poly_from_json(j.at("f2"));
  d.unique = j.at("unique").get<bool>();
  for (const auto& t : j.at("terms")) {
    mpq_class c(t.at("coeff").get<std::string>());
    c.canonicalize();
    d.terms.push_back({t.at("a").get<unsigned>(), t.at("b").get<unsigned>(), c});
  }
  return d;
}

json to_json(const InfiniteCaseReport& r) {
  json j{{"kind", "infinite"},
         {"case", to_string(r.kind)},
         {"n", r.n},
         {"structure", r.structure},
         {"classification_open", r.classification_open},
         {"notes", r.notes}};
  if (r.q) j["q"] = *r.q;
  return j;
}

InfiniteCaseReport report_from_json(const json& j) {
  InfiniteCaseReport r;
  r.kind = case_from(j.at("case").get<std::string>());
  r.n = j.at("n").get<std::size_t>();
  r.structure = j.at("structure").get<std::string>();
  r.classification_open = j.at("classification_open").get<bool>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("q")) r.q = j["q"].get<unsigned>();
  return r;
}

json to_json(const TableRun& run) {
  json cells = json::array();
  for (const auto& c : run.cells) {
    json jc{{"r", c.r},
            {"m", c.m},
            {"route", to_string(c.route)},
            {"expected", c.expected},
            {"computed", c.computed},
            {"match", c.match},
            {"seconds", c.seconds}};
    if (c.route != Route::Skipped && c.computed != "inf" && c.error.empty()) {
      jc["proj_order"] = c.proj_order;
      jc["full_order"] = c.full_order;
    }
    if (!c.error.empty()) jc["error"] = c.error;
    cells.push_back(std::move(jc));
  }
  return {{"q", run.q},
          {"rows", run.rows},
          {"cols", run.cols},
          {"mismatches", run.mismatches()},
          {"skipped", run.skipped()},
          {"cells", std::move(cells)}};
}

}  // namespace wesym::json
