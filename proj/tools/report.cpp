#include "report.hpp"

#include <sstream>

#include "tvb/fano.hpp"
#include "tvb/nobody.hpp"

namespace tvbkit {

using namespace tvb;

json to_json(const Integer& z) { return z.get_str(); }
json to_json(const Rational& q) { return q.get_str(); }

json to_json(const ZVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json to_json(const QVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json to_json(const ZMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const PEClass& c) { return json{{"alpha", to_json(c.alpha)}, {"beta", c.beta.get_str()}}; }

json to_json(const QCone& c) {
  auto rows = [](const std::vector<ZVector>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
  };
  return json{{"generators", rows(c.generators())},
              {"lineality", rows(c.lineality())},
              {"halfspaces", rows(c.halfspaces())},
              {"equations", rows(c.equations())}};
}

namespace {

const char* yes(bool b) { return b ? "true" : "false"; }

json indices(IndexSet s) {
  json a = json::array();
  for (int i : s.elements()) a.push_back(i);
  return a;
}

std::string set_str(IndexSet s) {
  std::string out = "{";
  auto el = s.elements();
  for (std::size_t i = 0; i < el.size(); ++i) out += (i ? "," : "") + std::to_string(el[i]);
  return out + "}";
}

std::string vec_str(const ZVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

std::string class_str(const PEClass& c) { return c.str(); }

// Classes of X are written in the basis chosen by class_group; flat coordinates append beta.
PEClass checked_class(const ToricVectorBundle& e, const PEClass& c) {
  if (c.alpha.size() != e.class_lattice().rank())
    throw InvalidInput("class needs " + std::to_string(e.class_lattice().rank()) + " entries before ';', got " +
                       std::to_string(c.alpha.size()));
  return c;
}

PEClass default_class(const ToricVectorBundle& e) { return PEClass{ZVector(e.class_lattice().rank(), 0), 1}; }

void gate(const ToricVectorBundle& e, const Options& opt, Report& r) {
  Certificate c = require_certificate(e, opt.force);
  r.certificate = to_string(c);
  if (c == Certificate::none) r.warnings.push_back("no Sym-degree-1 certificate; generator list taken as given (--force)");
}

json site_json(const std::vector<Site>& sites, std::size_t k) {
  const Site& s = sites[k];
  return json{{"index", k}, {"cone", s.cone}, {"label", s.label}, {"flat", indices(s.flat)}};
}

std::string site_str(const Site& s) { return "cone " + std::to_string(s.cone) + " label " + s.label; }

json class_list(const std::vector<PEClass>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

std::vector<PEClass> as_classes(const std::vector<ZVector>& flats) {
  std::vector<PEClass> out;
  for (const auto& v : flats) out.push_back(PEClass::from_flat(v));
  return out;
}

void cone_text(std::ostringstream& os, const QCone& c) {
  os << "  generators:";
  for (const auto& g : c.generators()) os << ' ' << vec_str(g);
  if (!c.lineality().empty()) {
    os << "\n  lineality:";
    for (const auto& g : c.lineality()) os << ' ' << vec_str(g);
  }
  os << "\n  inequalities:";
  for (const auto& h : c.halfspaces()) os << ' ' << vec_str(h);
  if (!c.equations().empty()) {
    os << "\n  equations:";
    for (const auto& h : c.equations()) os << ' ' << vec_str(h);
  }
  os << '\n';
}

}  // namespace

Report run_validate(const BundleDocument& doc) {
  ToricVectorBundle e = doc.bundle();
  Report r;
  r.certificate = to_string(symdeg1_certificate(e));
  const ClassLattice& cl = e.class_lattice();
  json classes = json::array();
  for (std::size_t i = 0; i < e.n(); ++i) classes.push_back(to_json(cl.class_of_ray(i)));
  json apartments = json::array();
  for (const auto& b : e.report().apartment_basis) apartments.push_back(b ? indices(*b) : json(nullptr));
  json x = json::array(), y = json::array();
  for (std::size_t i = 0; i < e.n(); ++i) x.push_back(to_json(deg_x(e, i)));
  for (std::size_t j = 0; j < e.m(); ++j) y.push_back(to_json(deg_y(e, j)));
  r.result = json{{"valid", true},
                  {"dim", e.fan().dim},
                  {"rays", e.n()},
                  {"columns", e.m()},
                  {"rank", e.rank()},
                  {"class_basis", json{{"basis_rays", cl.basis_rays}, {"eliminated_rays", cl.eliminated_rays}}},
                  {"ray_classes", classes},
                  {"apartments", apartments},
                  {"degrees", json{{"x", x}, {"y", y}, {"extra", class_list(e.fixtures().extra_degrees)}}}};

  std::ostringstream os;
  os << "valid: true\n";
  os << "dim " << e.fan().dim << ", " << e.n() << " rays, " << e.m() << " columns, rank " << e.rank() << '\n';
  os << "class basis: rays";
  for (int i : cl.basis_rays) os << ' ' << i;
  os << " (classes are coordinates in e_i for these rays; rays";
  for (int i : cl.eliminated_rays) os << ' ' << i;
  os << " are solved away)\n";
  for (std::size_t i = 0; i < e.n(); ++i) os << "  [D_" << i << "] = " << vec_str(cl.class_of_ray(i)) << '\n';
  for (std::size_t j = 0; j < e.m(); ++j) os << "  deg Y_" << j << " = " << class_str(deg_y(e, j)) << '\n';
  for (std::size_t k = 0; k < e.fixtures().extra_degrees.size(); ++k)
    os << "  deg Z_" << k << " = " << class_str(e.fixtures().extra_degrees[k]) << " (fixture)\n";
  os << "certificate: " << r.certificate << '\n';
  r.text = os.str();
  return r;
}

Report run_classify(const BundleDocument& doc) {
  ToricVectorBundle e = doc.bundle();
  Report r;
  r.certificate = to_string(symdeg1_certificate(e));
  CIReport ci = ci_check(e);
  bool uniform = is_uniform(e);
  std::optional<bool> uniform_ci;
  if (e.matroid().is_uniform()) uniform_ci = uniform_ci_check(e);
  CoverReport cover = coloop_cover_check(e);
  json cones = json::array();
  for (const auto& c : cover.coloop_cone) cones.push_back(c ? json(*c) : json(nullptr));
  json cij{{"ok", ci.ok}};
  if (!ci.ok) {
    cij["failing_family"] = ci.failing_family;
    cij["failing_subset"] = ci.failing_subset;
    if (ci.failing_index >= 0) cij["failing_index"] = ci.failing_index;
  }
  r.result = json{{"sparse", is_sparse(e)},
                  {"uniform", uniform},
                  {"uniform_ci", uniform_ci ? json(*uniform_ci) : json(nullptr)},
                  {"ci", cij},
                  {"monomial", is_monomial(e)},
                  {"coloop_cover",
                   json{{"covered", cover.covered},
                        {"coloop_cone", cones},
                        {"zero_in_every_circuit_row", cover.zero_in_every_circuit_row}}}};

  std::ostringstream os;
  os << "sparse: " << yes(is_sparse(e)) << '\n';
  os << "uniform: " << yes(uniform) << '\n';
  os << "uniform CI: " << (uniform_ci ? yes(*uniform_ci) : "n/a (matroid not uniform)") << '\n';
  os << "CI: " << yes(ci.ok);
  if (!ci.ok) {
    os << " (family " << ci.failing_family << ", subset {";
    for (std::size_t i = 0; i < ci.failing_subset.size(); ++i) os << (i ? "," : "") << ci.failing_subset[i];
    os << "})";
  }
  os << "\nmonomial: " << yes(is_monomial(e)) << '\n';
  os << "coloop cover: " << yes(cover.covered) << '\n';
  for (std::size_t j = 0; j < cover.coloop_cone.size(); ++j)
    os << "  column " << j << ": "
       << (cover.coloop_cone[j] ? "coloop on cone " + std::to_string(*cover.coloop_cone[j]) : std::string("none")) << '\n';
  os << "certificate: " << r.certificate << '\n';
  r.text = os.str();
  return r;
}

Report run_eff(const BundleDocument& doc, const Options& opt) {
  ToricVectorBundle e = doc.bundle();
  Report r;
  gate(e, opt, r);
  EffData d = eff_data(e);
  r.result = json{{"generators", class_list(as_classes(d.monoid.generators))}, {"cone", to_json(d.cone)}};
  std::ostringstream os;
  os << "effective monoid generators:";
  for (const auto& c : as_classes(d.monoid.generators)) os << ' ' << class_str(c);
  os << "\npseudo-effective cone:\n";
  cone_text(os, d.cone);
  if (opt.cls) {
    PEClass c = checked_class(e, *opt.cls);
    bool in_cone = d.cone.contains(c.flat());
    bool in_monoid = d.monoid.member(c.flat()).has_value();
    r.result["class"] = json{{"class", to_json(c)}, {"in_cone", in_cone}, {"in_monoid", in_monoid}};
    os << class_str(c) << ": in cone " << yes(in_cone) << ", in monoid " << yes(in_monoid) << '\n';
  }
  r.text = os.str();
  return r;
}

Report run_nef(const BundleDocument& doc, const Options& opt) {
  ToricVectorBundle e = doc.bundle();
  Report r;
  gate(e, opt, r);
  auto sites = nef_bpf_sites(e, opt.force);
  QCone cone = nef_cone(sites);
  r.result = json{{"sites", sites.size()}, {"cone", to_json(cone)}};
  std::ostringstream os;
  os << sites.size() << " sites\nnef cone:\n";
  cone_text(os, cone);
  if (opt.cls) {
    PEClass c = checked_class(e, *opt.cls);
    bool nef = cone.contains(c.flat());
    bool ample = is_ample(e, c, opt.force);
    r.result["class"] = json{{"class", to_json(c)}, {"nef", nef}, {"ample", ample}};
    os << class_str(c) << ": nef " << yes(nef) << ", ample " << yes(ample) << '\n';
  }
  r.text = os.str();
  return r;
}

Report run_bpf(const BundleDocument& doc, const Options& opt) {
  ToricVectorBundle e = doc.bundle();
  Report r;
  gate(e, opt, r);
  PEClass c = checked_class(e, *opt.cls);
  auto sites = nef_bpf_sites(e, opt.force);
  BpfResult b = bpf_member(sites, c);
  json failing = json::array();
  for (std::size_t k : b.failing_sites) failing.push_back(site_json(sites, k));
  r.result = json{{"class", to_json(c)}, {"bpf", b.member}, {"failing_sites", failing}};
  std::ostringstream os;
  os << class_str(c) << " basepoint free: " << yes(b.member) << '\n';
  for (std::size_t k : b.failing_sites) os << "  fails at site " << k << " (" << site_str(sites[k]) << ")\n";
  r.text = os.str();
  return r;
}

Report run_hilbert_nef(const BundleDocument& doc, const Options& opt) {
  ToricVectorBundle e = doc.bundle();
  Report r;
  gate(e, opt, r);
  auto basis = as_classes(hilbert_basis(nef_cone(e, opt.force)));
  std::sort(basis.begin(), basis.end());
  r.result = json{{"hilbert_basis", class_list(basis)}};
  std::ostringstream os;
  os << basis.size() << " Hilbert basis elements of the nef cone:\n";
  for (const auto& c : basis) os << "  " << class_str(c) << '\n';
  r.text = os.str();
  return r;
}

Report run_fujita_scan(const BundleDocument& doc, const Options& opt) {
  ToricVectorBundle e = doc.bundle();
  Report r;
  gate(e, opt, r);
  auto sites = nef_bpf_sites(e, opt.force);
  FujitaScan scan = fujita_gap_scan(e, opt.force);
  json gaps = json::array();
  for (const auto& g : scan.gaps) gaps.push_back(json{{"class", to_json(g.cls)}, {"site", site_json(sites, g.site)}});
  r.result = json{{"hilbert_basis", class_list(scan.hilbert_basis)}, {"gaps", gaps}};
  std::ostringstream os;
  os << scan.hilbert_basis.size() << " nef Hilbert basis elements, " << scan.gaps.size() << " not basepoint free:\n";
  for (const auto& g : scan.gaps) os << "  " << class_str(g.cls) << " at site " << g.site << " (" << site_str(sites[g.site]) << ")\n";
  r.text = os.str();
  return r;
}

Report run_nobody(const BundleDocument& doc, const Options& opt) {
  ToricVectorBundle e = doc.bundle();
  Report r;
  r.certificate = to_string(symdeg1_certificate(e));
  FlagOfFlats flag;
  if (opt.flag) {
    flag = flag_from_order(e.matroid(), *opt.flag);
  } else if (e.fixtures().extra_M_rows.empty()) {
    throw InvalidInput("nobody needs --flag unless the fixtures supply M rows");
  }
  NOMatrix m = build_M(e, flag);
  PrimeCertificate pc = m.fixture_rows ? PrimeCertificate::none : precondition_certificate(e, flag);
  if (pc == PrimeCertificate::none) {
    if (!opt.force) throw CertificateMissing("no prime-cone certificate for this flag; use --force to compute a candidate body");
    r.warnings.push_back("prime-cone hypothesis unverified; the body is a candidate");
  }
  PEClass c = checked_class(e, opt.cls ? *opt.cls : default_class(e));
  NOBody body = nobody_of_class(e, m, c);
  auto distinct = body.image.distinct_marked();
  std::size_t dim = section_space(e, c).dimension();
  json chain = json::array();
  for (const auto& f : m.flag.chain) chain.push_back(indices(f));
  json pts = json::array();
  for (const auto& p : distinct) pts.push_back(to_json(p));
  json verts = json::array();
  for (const auto& v : body.image.vertices) verts.push_back(to_json(v));
  r.result = json{{"flag", chain},
                  {"M", to_json(m.M)},
                  {"fixture_rows", m.fixture_rows},
                  {"prime_certificate", to_string(body.certificate)},
                  {"label", body.label()},
                  {"class", to_json(c)},
                  {"lattice_points", body.image.marked.size()},
                  {"distinct_points", pts},
                  {"vertices", verts},
                  {"section_dimension", dim}};
  std::ostringstream os;
  os << "flag:";
  for (const auto& f : m.flag.chain) os << ' ' << set_str(f);
  os << "\nM =\n";
  for (std::size_t i = 0; i < m.M.rows(); ++i) os << "  " << vec_str(m.M.row(i)) << '\n';
  os << "body of " << class_str(c) << ": " << body.label() << '\n';
  os << "  " << body.image.marked.size() << " lattice points in P, " << distinct.size() << " distinct images\n";
  os << "  section space dimension " << dim << '\n';
  r.text = os.str();
  return r;
}

Report run_anticanonical(const BundleDocument& doc, const Options& opt) {
  ToricVectorBundle e = doc.bundle();
  Report r;
  gate(e, opt, r);
  PEClass k = ci_anticanonical(e);
  bool nef = nef_member(e, k, opt.force);
  bool ample = is_ample(e, k, opt.force);
  r.result = json{{"class", to_json(k)}, {"nef", nef}, {"ample", ample}, {"fano", ample}};
  r.text = "-K = " + class_str(k) + ", nef: " + yes(nef) + ", ample: " + yes(ample) + (ample ? " (Fano)" : "") + "\n";
  return r;
}

Report run_kaneyama(const BundleDocument& doc) {
  if (!doc.generators || !doc.diagram) throw InvalidInput("kaneyama needs [ideal] and [diagram] sections");
  KaneyamaBundle k = kaneyama_validate(doc.fan, LinearIdealMatrix(*doc.generators, doc.diagram->cols()), *doc.diagram);
  KaneyamaReport rep = kaneyama_classify(k);
  Report r;
  r.certificate = to_string(symdeg1_certificate(k.bundle));
  json blocks = nullptr;
  if (rep.blocks) {
    blocks = json::array();
    for (const auto& b : *rep.blocks) blocks.push_back(indices(b));
  }
  r.result = json{{"diagonal", to_json(k.a)},
                  {"columns", k.bundle.m()},
                  {"nef", rep.nef},
                  {"ample", rep.ample},
                  {"reason", rep.reason},
                  {"failing_cone", rep.failing_cone ? json(*rep.failing_cone) : json(nullptr)},
                  {"blocks", blocks},
                  {"anticanonical", to_json(rep.anticanonical)},
                  {"closed_form", to_json(rep.closed_form)},
                  {"engine", json{{"nef", rep.engine_nef}, {"ample", rep.engine_ample}}}};
  std::ostringstream os;
  os << "diagonal " << vec_str(k.a) << ", -K = " << class_str(rep.anticanonical) << '\n';
  os << "nef: " << yes(rep.nef) << ", ample: " << yes(rep.ample) << '\n';
  os << rep.reason << '\n';
  os << "nef engine agrees (nef " << yes(rep.engine_nef) << ", ample " << yes(rep.engine_ample) << ")\n";
  r.text = os.str();
  return r;
}

Report run_tangent(const BundleDocument& doc) {
  KaneyamaBundle k = tangent_kaneyama(doc.fan);
  const ToricVectorBundle& t = k.bundle;
  Report r;
  r.certificate = to_string(symdeg1_certificate(t));
  std::string text = format_document(t);
  r.result = json{{"document", text},
                  {"rank", t.rank()},
                  {"columns", t.m()},
                  {"sparse", is_sparse(t)},
                  {"ci", ci_check(t).ok},
                  {"monomial", is_monomial(t)}};
  r.text = "# tangent bundle\n" + text;
  return r;
}

Report run_extend(const BundleDocument& doc, const Options& opt) {
  ToricVectorBundle e = doc.bundle();
  ToricVectorBundle ext = read_document(opt.with).bundle();
  ExtensionReport x = extension_checks(e, ext);
  Report r;
  r.certificate = to_string(symdeg1_certificate(ext));
  bool ci = ci_check(ext).ok;
  bool mono = is_monomial(ext);
  r.result = json{{"extends", x.extends},
                  {"problem", x.problem},
                  {"dominance", x.dominance},
                  {"circuit_minimum", x.circuit_minimum},
                  {"zero_bound", x.zero_bound},
                  {"ci_guaranteed", x.ci_guaranteed},
                  {"monomial_guaranteed", x.monomial_guaranteed},
                  {"uniform_monomial_guaranteed", x.uniform_monomial_guaranteed},
                  {"extension_ci", ci},
                  {"extension_monomial", mono}};
  std::ostringstream os;
  os << "extends: " << yes(x.extends);
  if (!x.extends) os << " (" << x.problem << ")";
  os << "\nCI guaranteed: " << yes(x.ci_guaranteed) << ", monomial guaranteed: " << yes(x.monomial_guaranteed)
     << ", uniform monomial guaranteed: " << yes(x.uniform_monomial_guaranteed) << '\n';
  os << "extension is CI: " << yes(ci) << ", monomial: " << yes(mono) << '\n';
  r.text = os.str();
  return r;
}

json stringify_numbers(json j) {
  if (j.is_number_integer()) return j.dump();
  if (j.is_structured())
    for (auto& v : j) v = stringify_numbers(std::move(v));
  return j;
}

}  // namespace tvbkit
