#ifndef TROPLEX_IO_HPP
#define TROPLEX_IO_HPP

// JSON job documents: presentation, representations, phi, valuations.

#include "troplex/fpgroup.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace troplex {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RepSpec {
  enum class Kind { Matrices, Permutations, Trivial };
  std::string name;
  Kind kind = Kind::Trivial;
  CoefficientRing ring = CoefficientRing::integers();
  std::size_t rank = 1;                   // matrices and trivial
  std::vector<RatMatrix> matrices;        // one per generator
  std::vector<Permutation> permutations;  // 0-based images, one per generator

  bool operator==(const RepSpec&) const = default;

  /// Builds and verifies sigma against the relators.
  Representation build(const Presentation& p) const {
    try {
      Representation s = [&]() -> Representation {
        switch (kind) {
          case Kind::Trivial: return Representation::trivial(ring, p.ngens(), rank);
          case Kind::Matrices: return {ring, rank, matrices};
          case Kind::Permutations: {
            auto r = regular_representation(p, permutations);
            return ring.is_integers() ? r : change_ring(r, ring);
          }
        }
        throw AlgebraError("unreachable");
      }();
      if (s.ngens() != p.ngens()) throw AlgebraError("need one image per generator");
      if (!verify_representation(p, s)) throw AlgebraError("relators are not sent to the identity");
      return s;
    } catch (const AlgebraError& e) {
      throw InputError("representation '" + name + "': " + e.what());
    }
  }
};

struct JobOptions {
  std::optional<std::string> fixture;
  std::vector<std::string> fields;
  std::vector<std::pair<std::string, std::string>> bound_entries;  // (rep, valuation)
  bool operator==(const JobOptions&) const = default;
};

struct JobSpec {
  std::string id;
  Presentation presentation;
  std::vector<RepSpec> representations;
  std::optional<EpimorphismToFreeAbelian> phi;  // nullopt: abelianization
  std::vector<std::string> valuations;
  JobOptions options;

  bool operator==(const JobSpec& o) const {
    auto same_phi = [](const std::optional<EpimorphismToFreeAbelian>& a,
                       const std::optional<EpimorphismToFreeAbelian>& b) {
      if (a.has_value() != b.has_value()) return false;
      return !a || (a->target_rank == b->target_rank && a->images == b->images);
    };
    return id == o.id && presentation == o.presentation && representations == o.representations &&
           same_phi(phi, o.phi) && valuations == o.valuations && options == o.options;
  }

  const RepSpec& rep(const std::string& name) const {
    for (const auto& r : representations)
      if (r.name == name) return r;
    throw InputError("no representation named '" + name + "'");
  }

  EpimorphismToFreeAbelian phi_or_abelianization() const {
    return phi ? *phi : EpimorphismToFreeAbelian::from_abelianization(presentation);
  }
};

namespace detail {

inline void only_keys(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) throw InputError(where + ": unknown field '" + k + "'");
}

inline const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline std::string need_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

inline long need_long(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<long>();
}

inline Rational entry(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError(where + ": matrix entries are integers or rational strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const AlgebraError& e) {
    throw InputError(where + ": " + e.what());
  }
}

/// Per-generator values given as {name: value} or as an array in generator order.
inline std::vector<const Json*> per_generator(const Json& j, const Presentation& p, const std::string& where) {
  std::vector<const Json*> out(p.ngens(), nullptr);
  if (j.is_array()) {
    if (j.size() != p.ngens()) throw InputError(where + ": need one entry per generator");
    for (std::size_t i = 0; i < j.size(); ++i) out[i] = &j[i];
    return out;
  }
  if (!j.is_object()) throw InputError(where + ": expected an object keyed by generator");
  for (const auto& [k, v] : j.items()) {
    int idx = 0;
    try {
      idx = p.index_of(k);
    } catch (const AlgebraError& e) {
      throw InputError(where + ": " + e.what());
    }
    out[static_cast<std::size_t>(idx) - 1] = &v;
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!out[i]) throw InputError(where + ": missing generator '" + p.names()[i] + "'");
  return out;
}

inline RepSpec parse_rep(const std::string& name, const Json& j, const Presentation& p) {
  const std::string where = "representations." + name;
  only_keys(j, where, {"ring", "rank", "matrices", "permutations", "trivial"});
  RepSpec r;
  r.name = name;
  try {
    if (j.contains("ring")) r.ring = CoefficientRing::parse(need_string(j["ring"], where + ".ring"));
  } catch (const AlgebraError& e) {
    throw InputError(where + ": " + e.what());
  }
  int kinds = j.contains("matrices") + j.contains("permutations") + j.contains("trivial");
  if (kinds != 1) throw InputError(where + ": give exactly one of matrices, permutations, trivial");
  if (j.contains("rank")) {
    long k = need_long(j["rank"], where + ".rank");
    if (k < 1) throw InputError(where + ".rank: must be positive");
    r.rank = static_cast<std::size_t>(k);
  }
  if (j.contains("trivial")) {
    if (!j["trivial"].is_boolean() || !j["trivial"].get<bool>()) throw InputError(where + ".trivial: must be true");
    r.kind = RepSpec::Kind::Trivial;
    return r;
  }
  if (j.contains("matrices")) {
    r.kind = RepSpec::Kind::Matrices;
    auto per = per_generator(j["matrices"], p, where + ".matrices");
    std::optional<std::size_t> n;
    for (const Json* m : per) {
      if (!m->is_array() || m->empty()) throw InputError(where + ".matrices: each matrix is a list of rows");
      if (!n) n = m->size();
      if (m->size() != *n) throw InputError(where + ".matrices: matrices differ in size");
      RatMatrix a{*n, {}};
      for (const auto& row : *m) {
        if (!row.is_array() || row.size() != *n) throw InputError(where + ".matrices: matrices must be square");
        for (const auto& x : row) a.a.push_back(entry(x, where + ".matrices"));
      }
      r.matrices.push_back(std::move(a));
    }
    if (j.contains("rank") && r.rank != n.value_or(0)) throw InputError(where + ": rank disagrees with matrices");
    r.rank = n.value_or(1);
    return r;
  }
  r.kind = RepSpec::Kind::Permutations;
  if (j.contains("rank")) throw InputError(where + ": rank is implied by the permutations");
  for (const Json* q : per_generator(j["permutations"], p, where + ".permutations")) {
    if (!q->is_array()) throw InputError(where + ".permutations: one-line notation expected");
    Permutation perm;
    for (const auto& x : *q) {
      long k = need_long(x, where + ".permutations");
      if (k < 1 || static_cast<std::size_t>(k) > q->size()) throw InputError(where + ".permutations: entry out of range");
      perm.push_back(static_cast<std::size_t>(k - 1));
    }
    r.permutations.push_back(std::move(perm));
  }
  return r;
}

}  // namespace detail

inline JobSpec parse_job(const Json& j) {
  using namespace detail;
  only_keys(j, "job", {"id", "presentation", "representations", "phi", "valuations", "options"});
  JobSpec s;
  s.id = j.contains("id") ? need_string(j["id"], "id") : "job";
  const Json& pj = need(j, "presentation", "job");
  only_keys(pj, "presentation", {"generators", "relators"});
  const Json& gens = need(pj, "generators", "presentation");
  if (!gens.is_array()) throw InputError("presentation.generators: expected a list of names");
  std::vector<std::string> names;
  for (const auto& g : gens) names.push_back(need_string(g, "presentation.generators"));
  try {
    Presentation bare(names, {});
    std::vector<Word> rels;
    if (pj.contains("relators")) {
      if (!pj["relators"].is_array()) throw InputError("presentation.relators: expected a list of words");
      for (const auto& w : pj["relators"]) rels.push_back(bare.parse_word(need_string(w, "presentation.relators")));
    }
    s.presentation = Presentation(names, std::move(rels));
  } catch (const AlgebraError& e) {
    throw InputError(std::string("presentation: ") + e.what());
  }
  if (j.contains("representations")) {
    if (!j["representations"].is_object()) throw InputError("representations: expected an object keyed by name");
    for (const auto& [name, rj] : j["representations"].items())
      s.representations.push_back(parse_rep(name, rj, s.presentation));
  }
  if (j.contains("phi")) {
    const Json& fj = j["phi"];
    if (!(fj.is_string() && fj.get<std::string>() == "ab")) {
      EpimorphismToFreeAbelian phi;
      auto per = per_generator(fj, s.presentation, "phi");
      phi.target_rank = per.empty() || !per[0]->is_array() ? 0 : per[0]->size();
      for (const Json* v : per) {
        if (!v->is_array()) throw InputError("phi: each image is an integer vector");
        std::vector<long> img;
        for (const auto& x : *v) img.push_back(need_long(x, "phi"));
        phi.images.push_back(std::move(img));
      }
      try {
        phi.check(s.presentation);
      } catch (const AlgebraError& e) {
        throw InputError(std::string("phi: ") + e.what());
      }
      s.phi = phi;
    }
  }
  if (j.contains("valuations")) {
    if (!j["valuations"].is_array()) throw InputError("valuations: expected a list");
    for (const auto& v : j["valuations"]) s.valuations.push_back(need_string(v, "valuations"));
  }
  if (j.contains("options")) {
    const Json& oj = j["options"];
    only_keys(oj, "options", {"fixture", "fields", "bound"});
    if (oj.contains("fixture")) s.options.fixture = need_string(oj["fixture"], "options.fixture");
    if (oj.contains("fields")) {
      if (!oj["fields"].is_array()) throw InputError("options.fields: expected a list");
      for (const auto& f : oj["fields"]) s.options.fields.push_back(need_string(f, "options.fields"));
    }
    if (oj.contains("bound")) {
      if (!oj["bound"].is_array()) throw InputError("options.bound: expected a list");
      for (const auto& b : oj["bound"]) {
        only_keys(b, "options.bound", {"rep", "valuation"});
        s.options.bound_entries.emplace_back(need_string(need(b, "rep", "options.bound"), "options.bound.rep"),
                                             need_string(need(b, "valuation", "options.bound"), "options.bound.valuation"));
      }
    }
  }
  for (const auto& r : s.representations) r.build(s.presentation);
  for (const auto& [rep, val] : s.options.bound_entries) s.rep(rep);
  return s;
}

inline JobSpec parse_job_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("not valid JSON: ") + e.what());
  }
  return parse_job(j);
}

inline JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_job_text(text);
}

inline Json presentation_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& w : p.relators()) rels.push_back(p.word_string(w));
  return Json{{"generators", p.names()}, {"relators", rels}};
}

inline Json to_json(const JobSpec& s) {
  Json j;
  j["id"] = s.id;
  j["presentation"] = presentation_json(s.presentation);
  const auto& names = s.presentation.names();
  if (!s.representations.empty()) {
    Json reps = Json::object();
    for (const auto& r : s.representations) {
      Json rj;
      rj["ring"] = r.ring.tag();
      switch (r.kind) {
        case RepSpec::Kind::Trivial:
          if (r.rank != 1) rj["rank"] = r.rank;
          rj["trivial"] = true;
          break;
        case RepSpec::Kind::Matrices: {
          Json ms = Json::object();
          for (std::size_t g = 0; g < r.matrices.size(); ++g) {
            Json rows = Json::array();
            const auto& m = r.matrices[g];
            for (std::size_t i = 0; i < m.n; ++i) {
              Json row = Json::array();
              for (std::size_t k = 0; k < m.n; ++k) row.push_back(to_string(m(i, k)));
              rows.push_back(row);
            }
            ms[names[g]] = rows;
          }
          rj["matrices"] = ms;
          break;
        }
        case RepSpec::Kind::Permutations: {
          Json ps = Json::object();
          for (std::size_t g = 0; g < r.permutations.size(); ++g) {
            Json one = Json::array();
            for (auto k : r.permutations[g]) one.push_back(k + 1);
            ps[names[g]] = one;
          }
          rj["permutations"] = ps;
          break;
        }
      }
      reps[r.name] = rj;
    }
    j["representations"] = reps;
  }
  if (s.phi) {
    Json f = Json::object();
    for (std::size_t g = 0; g < names.size(); ++g) f[names[g]] = s.phi->images[g];
    j["phi"] = f;
  }
  if (!s.valuations.empty()) j["valuations"] = s.valuations;
  Json o = Json::object();
  if (s.options.fixture) o["fixture"] = *s.options.fixture;
  if (!s.options.fields.empty()) o["fields"] = s.options.fields;
  if (!s.options.bound_entries.empty()) {
    Json b = Json::array();
    for (const auto& [rep, val] : s.options.bound_entries) b.push_back(Json{{"rep", rep}, {"valuation", val}});
    o["bound"] = b;
  }
  if (!o.empty()) j["options"] = o;
  return j;
}

/// Graph file for weighted RAAGs: {"vertices": n, "edges": [[u, v, w], ...]}.
inline Presentation parse_wraag_graph(const Json& j) {
  using namespace detail;
  only_keys(j, "graph", {"vertices", "edges"});
  long n = need_long(need(j, "vertices", "graph"), "graph.vertices");
  if (n < 1) throw InputError("graph.vertices: must be positive");
  std::vector<WeightedEdge> edges;
  const Json& ej = need(j, "edges", "graph");
  if (!ej.is_array()) throw InputError("graph.edges: expected a list");
  for (const auto& e : ej) {
    if (!e.is_array() || (e.size() != 2 && e.size() != 3)) throw InputError("graph.edges: each edge is [u, v] or [u, v, weight]");
    long u = need_long(e[0], "graph.edges"), v = need_long(e[1], "graph.edges");
    long w = e.size() == 3 ? need_long(e[2], "graph.edges") : 1;
    if (u < 1 || v < 1) throw InputError("graph.edges: vertices are numbered from 1");
    edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), w});
  }
  try {
    return build_weighted_raag(static_cast<std::size_t>(n), edges);
  } catch (const AlgebraError& e) {
    throw InputError(std::string("graph: ") + e.what());
  }
}

}  // namespace troplex

#endif  // TROPLEX_IO_HPP
