// troplex: twisted Alexander data, tropical jump loci and BNS bounds for
// finitely presented groups.  See README.md for the command reference.

#include "troplex/troplex.hpp"

#include <CLI11.hpp>

#include "svg.hpp"

#include <fstream>
#include <iostream>

using namespace troplex;

namespace {

enum Exit { kOk = 0, kInput = 2, kDegenerate = 3, kViolation = 4 };

struct Degenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EpimorphismToFreeAbelian pick_phi(const JobSpec& job, const std::string& which) {
  EpimorphismToFreeAbelian phi;
  if (which == "ab") {
    phi = EpimorphismToFreeAbelian::from_abelianization(job.presentation);
  } else if (which == "file") {
    if (!job.phi) throw InputError("--phi file: the input has no phi");
    phi = *job.phi;
  } else if (which.empty()) {
    phi = job.phi_or_abelianization();
  } else {
    throw InputError("--phi expects 'ab' or 'file'");
  }
  if (phi.target_rank == 0) throw Degenerate("first Betti number is zero: no characters to twist by");
  return phi;
}

Representation pick_rep(const JobSpec& job, const std::string& name, std::optional<CoefficientRing> ring) {
  Representation s = name.empty() ? Representation::trivial(CoefficientRing::integers(), job.presentation.ngens())
                                  : job.rep(name).build(job.presentation);
  if (ring && !(s.ring() == *ring)) {
    if (s.ring().is_prime_field() && !(ring->is_prime_field() && ring->p == s.ring().p))
      throw InputError("cannot move a representation over " + s.ring().name() + " to " + ring->name());
    try {
      s = change_ring(s, *ring);
    } catch (const AlgebraError& e) {
      throw InputError(std::string("representation does not reduce to ") + ring->name() + ": " + e.what());
    }
  }
  return s;
}

std::optional<CoefficientRing> parse_ring(const std::string& tag) {
  if (tag.empty()) return std::nullopt;
  try {
    return CoefficientRing::parse(tag);
  } catch (const AlgebraError& e) {
    throw InputError(e.what());
  }
}

CoefficientSetting parse_setting(const std::string& tag) {
  try {
    return CoefficientSetting::parse(tag);
  } catch (const AlgebraError& e) {
    throw InputError(e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

// ---------------------------------------------------------------------------

int cmd_alexander(const std::string& file, const std::string& rep, const std::string& phi_name,
                  const std::string& ring_tag) {
  JobSpec job = load_job(file);
  auto phi = pick_phi(job, phi_name);
  Representation s = pick_rep(job, rep, parse_ring(ring_tag));
  AlexVerdict v = twisted_alexander(job.presentation, s, phi);
  std::ostringstream os;
  os << "ring: " << v.ring.name() << "\n";
  os << "Delta: " << v.str() << "\n";
  if (v.kind == AlexVerdict::Kind::Poly) {
    LaurentPoly rad = squarefree_part(*v.delta);
    if (!(rad == *v.delta)) os << "radical: " << rad.str() << "\n";
  }
  if (v.free_rank) os << "free rank: " << *v.free_rank << "\n";
  std::cout << os.str();
  return kOk;
}

TropicalComplex tropicalize(const LaurentPoly& g, const CoefficientSetting& s) {
  if (s.kind == CoefficientSetting::Kind::Z) return trop_Z_principal(g);
  TropicalComplex t = trop_hypersurface(g, s.valuation());
  t.setting = s.str();
  return t;
}

int cmd_trop(const std::string& file, const std::string& rep, const std::string& phi_name, const std::string& val,
             int degree, const std::string& svg_path) {
  JobSpec job = load_job(file);
  auto phi = pick_phi(job, phi_name);
  CoefficientSetting setting = parse_setting(val);
  Representation s = pick_rep(job, rep, setting.ring());
  if (setting.kind == CoefficientSetting::Kind::PAdic) {
    auto adm = novikov_admissible(s, setting.valuation(), default_quotient_bound());
    if (!adm.admissible) std::cerr << "warning: " << adm.reason << "\n";
  }
  if (phi.target_rank > 2) throw Degenerate("cells are produced for at most two variables");
  auto mats = alexander_matrices(job.presentation, s, phi);
  auto g = jump_ideal_gcd(mats, s.rank(), degree);
  TropicalComplex t;
  t.nvars = phi.target_rank;
  t.setting = setting.str();
  if (!g) {
    t.everything = true;
  } else if (!is_unit(*g)) {
    t = tropicalize(*g, setting);
  }
  std::cout << "kind\tbase_x\tbase_y\tdir1_x\tdir1_y\tdir2_x\tdir2_y\tlabel\n" << cells_tsv(t);
  if (!svg_path.empty()) write_file(svg_path, svg::render(t, job.id + " " + setting.str()));
  return kOk;
}

Json sphere_json(const SphereArcSet& s) {
  auto dir = [](const Direction& d) { return Json::array({d.x.get_str(), d.y.get_str()}); };
  Json j;
  j["text"] = s.str();
  if (s.dim() == 2) {
    Json arcs = Json::array(), pts = Json::array(), holes = Json::array();
    for (const auto& a : s.arcs())
      arcs.push_back(Json{{"from", dir(a.from)}, {"to", dir(a.to)}, {"from_closed", a.from_closed},
                          {"to_closed", a.to_closed}});
    for (const auto& d : s.isolated_points()) pts.push_back(dir(d));
    for (const auto& d : s.punctures()) holes.push_back(dir(d));
    j["arcs"] = arcs;
    j["points"] = pts;
    j["punctures"] = holes;
  }
  j["empty"] = s.is_empty();
  j["full"] = s.is_full();
  return j;
}

Json complex_json(const TropicalComplex& t) {
  auto vec = [](const Covector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
  };
  Json cells = Json::array();
  for (const auto& c : t.cells) {
    Json dirs = Json::array();
    for (const auto& d : c.dirs) dirs.push_back(vec(d));
    cells.push_back(Json{{"kind", kind_name(c.kind)}, {"base", vec(c.base)}, {"dirs", dirs},
                         {"weight", c.weight.get_str()}, {"label", c.label}});
  }
  return Json{{"setting", t.setting}, {"everything", t.everything}, {"cells", cells}};
}

Json report_json(const BoundReport& r) {
  Json j;
  j["presentation"] = r.presentation_id;
  j["nvars"] = r.nvars;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json ej;
    ej["rep"] = e.name;
    ej["valuation"] = e.setting.str();
    ej["admissibility"] = Json{{"admissible", true}, {"condition", std::string(1, e.admissibility.condition)},
                               {"reason", e.admissibility.reason}};
    Json degs = Json::array();
    for (const auto& d : e.degrees) {
      Json dj;
      dj["degree"] = d.degree;
      dj["gcd"] = d.gcd ? Json(d.gcd->str()) : Json(nullptr);
      if (d.trop) dj["complex"] = complex_json(*d.trop);
      dj["sphere"] = sphere_json(d.sphere);
      dj["notes"] = d.notes;
      degs.push_back(dj);
    }
    ej["degrees"] = degs;
    ej["sphere"] = sphere_json(e.sphere);
    ej["exact"] = e.exact;
    ej["essential"] = e.essential;
    entries.push_back(ej);
  }
  j["entries"] = entries;
  Json excluded = Json::array();
  for (const auto& e : r.excluded)
    excluded.push_back(Json{{"rep", e.name}, {"valuation", e.setting.str()}, {"reason", e.admissibility.reason}});
  j["excluded"] = excluded;
  j["combined"] = sphere_json(r.combined);
  j["closure"] = "no-op: finite union of closed arc sets";
  j["complement"] = sphere_json(r.complement);
  j["vacuous"] = r.vacuous;
  j["exact"] = r.exact;
  return j;
}

int cmd_bns_bound(const std::string& file, const std::vector<std::string>& reps, const std::string& phi_name,
                  const std::string& fixture_name, bool no_fixture, const std::string& json_path) {
  JobSpec job = load_job(file);
  auto phi = pick_phi(job, phi_name);
  std::vector<std::pair<std::string, std::string>> wanted;
  for (const auto& r : reps) {
    auto colon = r.find(':');
    if (colon == std::string::npos) {
      wanted.emplace_back(r, "Z");
    } else {
      wanted.emplace_back(r.substr(0, colon), r.substr(colon + 1));
    }
  }
  if (wanted.empty()) wanted = job.options.bound_entries;
  if (wanted.empty())
    for (const auto& r : job.representations) wanted.emplace_back(r.name, "Z");
  std::vector<BoundInput> inputs;
  for (const auto& [name, val] : wanted) {
    const RepSpec& spec = job.rep(name);
    inputs.push_back({name, spec.build(job.presentation), parse_setting(val)});
  }
  BoundReport r = assemble_bound(job.id, job.presentation, phi, inputs);
  Json j = report_json(r);
  std::string text = summary(r);
  std::optional<std::string> fx = fixture_name.empty() ? job.options.fixture : std::optional(fixture_name);
  if (no_fixture) fx.reset();
  bool violated = false;
  if (fx) {
    SigmaFixture f;
    try {
      f = fixture_by_name(*fx);
    } catch (const AlgebraError& e) {
      throw InputError(e.what());
    }
    if (f.minus_sigma.dim() != r.complement.dim())
      throw InputError("fixture '" + f.name + "' is for another character sphere");
    Comparison c = compare_fixture(r, f);
    j["comparison"] = Json{{"fixture", f.name}, {"citation", f.citation}, {"result", c.str()},
                           {"difference", sphere_json(c.difference)}};
    text += "fixture: " + f.name + "\n";
    text += "comparison: " + c.str();
    if (c.kind != Comparison::Kind::Equal) text += " " + c.difference.str();
    text += "\n";
    violated = c.kind == Comparison::Kind::Violation;
  }
  if (json_path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
    std::cout << text;
  }
  if (violated) throw Violation("fixture lies outside the computed bound");
  return r.vacuous ? kDegenerate : kOk;
}

int cmd_kaehler(const std::string& file, const std::string& fields_csv, const std::string& rep,
                const std::string& phi_name) {
  JobSpec job = load_job(file);
  auto phi = pick_phi(job, phi_name);
  std::vector<std::string> fields;
  if (!fields_csv.empty()) {
    std::stringstream ss(fields_csv);
    std::string f;
    while (std::getline(ss, f, ','))
      if (!f.empty()) fields.push_back(f);
  } else {
    fields = job.options.fields.empty() ? std::vector<std::string>{"q"} : job.options.fields;
  }
  std::vector<AlexVerdict> verdicts;
  for (const auto& f : fields) {
    auto ring = parse_ring(f);
    if (!ring->is_field()) throw InputError("kaehler-test needs fields, got " + f);
    verdicts.push_back(twisted_alexander(job.presentation, pick_rep(job, rep, ring), phi));
  }
  KahlerVerdict k = kahler_obstruction(verdicts);
  for (const auto& v : verdicts) std::cout << v.ring.name() << ": Delta = " << v.str() << "\n";
  if (k.not_kahler) {
    const auto& w = verdicts[*k.witness];
    std::cout << "NOT KAHLER (witness: " << w.ring.name() << ", Delta = " << w.str()
              << ", radical = " << squarefree_part(*w.delta).str() << ")\n";
  } else {
    std::cout << "consistent (Delta = " << verdicts[0].str() << ")\n";
  }
  return kOk;
}

int emit(const std::string& id, const Presentation& p) {
  JobSpec s;
  s.id = id;
  s.presentation = p;
  s.representations.push_back(RepSpec{"trivial", RepSpec::Kind::Trivial, CoefficientRing::integers(), 1, {}, {}});
  std::cout << to_json(s).dump(2) << "\n";
  return kOk;
}

std::vector<long> parse_mu(const std::string& csv) {
  std::vector<long> mu;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw InputError("--mu expects comma separated integers");
    mu.push_back(v);
  }
  return mu;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"troplex: tropical jump loci and BNS bounds"};
  app.require_subcommand(1);

  std::string file, rep, phi_name, ring_tag, valuation = "Z", svg_path, fixture, fields, json_path, graph, mu;
  std::vector<std::string> reps;
  bool no_fixture = false;
  int degree = 1;
  long genus = 1;
  std::string left, right;

  auto* alex = app.add_subcommand("alexander", "twisted Alexander polynomial");
  alex->add_option("input", file, "job JSON")->required();
  alex->add_option("--rep", rep, "representation name (default: trivial rank one over Z)");
  alex->add_option("--phi", phi_name, "'ab' or 'file'");
  alex->add_option("--ring", ring_tag, "Z, q or fp:<p>");

  auto* trop = app.add_subcommand("trop", "tropicalized jump locus as TSV cells");
  trop->add_option("input", file, "job JSON")->required();
  trop->add_option("--rep", rep, "representation name");
  trop->add_option("--phi", phi_name, "'ab' or 'file'");
  trop->add_option("--valuation", valuation, "trivial, p-adic:<p>, fp:<p> or Z");
  trop->add_option("--degree", degree, "jump ideal degree (0 or 1)")->check(CLI::Range(0, 1));
  trop->add_option("--svg", svg_path, "also write a picture");

  auto* bns = app.add_subcommand("bns-bound", "upper bound for the BNS invariant");
  bns->add_option("input", file, "job JSON")->required();
  bns->add_option("--rep", reps, "NAME or NAME:VALUATION, repeatable");
  bns->add_option("--phi", phi_name, "'ab' or 'file'");
  bns->add_option("--fixture", fixture, "compare with a known Sigma^1");
  bns->add_flag("--no-fixture", no_fixture, "skip the fixture named in the input");
  bns->add_option("--json", json_path, "write the report as JSON ('-' for stdout)");

  auto* kae = app.add_subcommand("kaehler-test", "Alexander polynomial obstruction over fields");
  kae->add_option("input", file, "job JSON")->required();
  kae->add_option("--fields", fields, "comma separated: q, fp:<p>");
  kae->add_option("--rep", rep, "representation name");
  kae->add_option("--phi", phi_name, "'ab' or 'file'");

  auto* orb = app.add_subcommand("orbifold", "orbifold group presentation");
  orb->add_option("--g", genus, "genus")->required();
  orb->add_option("--mu", mu, "cone point orders, comma separated");

  auto* wr = app.add_subcommand("wraag", "weighted right-angled Artin group presentation");
  wr->add_option("--graph", graph, "graph JSON")->required();

  auto* prod = app.add_subcommand("product", "direct product of two presentations");
  prod->add_option("left", left, "job JSON")->required();
  prod->add_option("right", right, "job JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (alex->parsed()) return cmd_alexander(file, rep, phi_name, ring_tag);
    if (trop->parsed()) return cmd_trop(file, rep, phi_name, valuation, degree, svg_path);
    if (bns->parsed()) return cmd_bns_bound(file, reps, phi_name, fixture, no_fixture, json_path);
    if (kae->parsed()) return cmd_kaehler(file, fields, rep, phi_name);
    if (orb->parsed()) {
      if (genus < 1) throw InputError("--g must be at least 1");
      auto m = parse_mu(mu);
      std::string id = "orbifold_g" + std::to_string(genus);
      for (long k : m) id += "_" + std::to_string(k);
      try {
        return emit(id, build_orbifold_presentation(static_cast<std::size_t>(genus), m));
      } catch (const AlgebraError& e) {
        throw InputError(e.what());
      }
    }
    if (wr->parsed()) {
      std::ifstream in(graph);
      if (!in) throw InputError("cannot read '" + graph + "'");
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw InputError(std::string("graph is not valid JSON: ") + e.what());
      }
      return emit("wraag", parse_wraag_graph(j));
    }
    if (prod->parsed()) {
      JobSpec a = load_job(left), b = load_job(right);
      return emit(a.id + "_x_" + b.id, build_product_presentation(a.presentation, b.presentation));
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Degenerate& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kDegenerate;
  } catch (const Violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kViolation;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kViolation;
  }
  return kOk;
}
