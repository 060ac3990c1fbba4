#include "whk/deffile.hpp"

#include "whk/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace whk {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

Rational parse_scalar(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
    return make_rational(BigInt(j[0].get<long long>()), BigInt(j[1].get<long long>()));
  bad("scalar must be an integer, a \"num/den\" string, or a [num, den] pair");
}

std::size_t label_index(const std::vector<std::string>& labels, const std::string& l,
                        const std::string& context) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return i;
  bad("unknown label '" + l + "' in " + context);
}

/// Vector as a dense array of scalars or a {label: scalar} object.
Vec parse_vector(const json& j, const std::vector<std::string>& labels,
                 const std::string& context) {
  Vec v(labels.size());
  if (j.is_array()) {
    if (j.size() != labels.size()) bad("vector length mismatch in " + context);
    for (std::size_t i = 0; i < labels.size(); ++i) v[i] = parse_scalar(j[i]);
    return v;
  }
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      v[label_index(labels, it.key(), context)] = parse_scalar(it.value());
    return v;
  }
  bad("vector must be an array or a {label: scalar} object in " + context);
}

Matrix parse_dense_matrix(const json& j, const std::string& context) {
  if (!j.is_array()) bad("matrix must be an array of rows in " + context);
  std::vector<Vec> rows;
  for (const auto& row : j) {
    if (!row.is_array()) bad("matrix row must be an array in " + context);
    Vec r;
    for (const auto& e : row) r.push_back(parse_scalar(e));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return Matrix(0, 0);
  return Matrix::from_rows(rows);
}

/// Quintuples [i, j, k, num, den] or [i, j, k, scalar].
void parse_triples(const json& j, std::size_t dim,
                   const std::function<void(std::size_t, std::size_t, std::size_t, Rational)>& put,
                   const std::string& context) {
  if (!j.is_array()) bad("structure constants must be an array in " + context);
  for (const auto& t : j) {
    if (!t.is_array() || (t.size() != 4 && t.size() != 5))
      bad("structure constant entries are [i,j,k,num,den] or [i,j,k,scalar] in " + context);
    std::size_t i = t[0].get<std::size_t>(), jj = t[1].get<std::size_t>(),
                k = t[2].get<std::size_t>();
    if (i >= dim || jj >= dim || k >= dim) bad("structure constant index out of range in " + context);
    Rational c = t.size() == 5 ? make_rational(BigInt(t[3].get<long long>()),
                                               BigInt(t[4].get<long long>()))
                               : parse_scalar(t[3]);
    put(i, jj, k, c);
  }
}

struct Parser {
  DefinitionFile out;

  const FiniteGroupoid& groupoid_ref(const std::string& name) {
    auto it = out.groupoids.find(name);
    if (it == out.groupoids.end()) bad("reference to undefined groupoid block '" + name + "'");
    return it->second;
  }
  const FiniteDimAlgebra& algebra_ref(const std::string& name) {
    auto it = out.algebras.find(name);
    if (it == out.algebras.end()) bad("reference to undefined algebra block '" + name + "'");
    return it->second;
  }
  const WeakHopfPresentation& weakhopf_ref(const std::string& name) {
    auto it = out.weakhopfs.find(name);
    if (it == out.weakhopfs.end()) bad("reference to undefined weakhopf block '" + name + "'");
    return it->second;
  }
  const XDecompAlgebra& xdecomp_ref(const std::string& name) {
    auto it = out.xdecomps.find(name);
    if (it == out.xdecomps.end()) bad("reference to undefined xdecomp block '" + name + "'");
    return it->second;
  }
  const FiniteDimLieAlgebra& lie_ref(const std::string& name) {
    auto it = out.lies.find(name);
    if (it == out.lies.end()) bad("reference to undefined lie block '" + name + "'");
    return it->second;
  }
  const XLieAlgebroid& algebroid_ref(const std::string& name) {
    auto it = out.algebroids.find(name);
    if (it == out.algebroids.end()) bad("reference to undefined algebroid block '" + name + "'");
    return it->second;
  }

  void check_fresh(const std::string& name) {
    for (const auto& [t, n] : out.block_order)
      if (n == name) bad("duplicate block name '" + name + "'");
  }

  FiniteDimAlgebra parse_algebra_body(const json& b, const std::string& name) {
    if (b.contains("poly")) {
      const json& p = b.at("poly");
      std::vector<std::string> vars = p.at("vars").get<std::vector<std::string>>();
      std::size_t deg = p.at("max_degree").get<std::size_t>();
      std::string prefix = p.value("label_prefix", std::string());
      TruncatedPolyAlgebra tp = truncated_symmetric_algebra(vars, deg, prefix);
      out.polys.emplace(name, tp);
      return tp.algebra;
    }
    FiniteDimAlgebra a;
    a.labels = b.at("labels").get<std::vector<std::string>>();
    std::size_t n = a.labels.size();
    a.mult.assign(n, std::vector<SparseVec>(n));
    parse_triples(b.at("mult"), n,
                  [&](std::size_t i, std::size_t j, std::size_t k, Rational c) {
                    a.mult[i][j].push_back({k, c});
                  },
                  "algebra '" + name + "'");
    a.unit = parse_vector(b.at("unit"), a.labels, "algebra '" + name + "' unit");
    a.require_shape();
    return a;
  }

  void parse_groupoid(const json& b, const std::string& name) {
    FiniteGroupoid g;
    g.objects = b.at("objects").get<std::vector<std::string>>();
    for (const auto& m : b.at("morphisms")) {
      g.morphisms.push_back(m.at("name").get<std::string>());
      g.src.push_back(label_index(g.objects, m.at("src").get<std::string>(),
                                  "groupoid '" + name + "'"));
      g.tgt.push_back(label_index(g.objects, m.at("tgt").get<std::string>(),
                                  "groupoid '" + name + "'"));
    }
    auto midx = [&](const std::string& l) {
      return label_index(g.morphisms, l, "groupoid '" + name + "'");
    };
    g.identity_at.assign(g.objects.size(), 0);
    if (!b.contains("identities")) bad("groupoid '" + name + "' needs an identities table");
    for (auto it = b.at("identities").begin(); it != b.at("identities").end(); ++it)
      g.identity_at[label_index(g.objects, it.key(), name)] = midx(it.value().get<std::string>());
    g.inv.assign(g.morphisms.size(), 0);
    for (auto it = b.at("inverse").begin(); it != b.at("inverse").end(); ++it)
      g.inv[midx(it.key())] = midx(it.value().get<std::string>());
    if (b.contains("compose")) {
      for (const auto& c : b.at("compose")) {
        if (!c.is_array() || c.size() != 3) bad("compose entries are [g, h, gh]");
        g.comp[{midx(c[0].get<std::string>()), midx(c[1].get<std::string>())}] =
            midx(c[2].get<std::string>());
      }
    }
    // Identity compositions may be left implicit.
    for (std::size_t m = 0; m < g.morphism_count(); ++m) {
      g.comp.try_emplace({g.identity_at[g.tgt[m]], m}, m);
      g.comp.try_emplace({m, g.identity_at[g.src[m]]}, m);
    }
    g.require_shape();
    out.groupoids.emplace(name, std::move(g));
  }

  void parse_weakhopf(const json& b, const std::string& name) {
    if (b.contains("groupoid")) {
      std::string gref = b.at("groupoid").get<std::string>();
      const FiniteGroupoid& g = groupoid_ref(gref);
      out.weakhopfs.emplace(name, groupoid_algebra(g));
      out.weakhopf_groupoid_refs.emplace(name, gref);
      IdempotentFamily fam;
      std::vector<std::size_t> order = groupoid_algebra_basis(g);
      for (std::size_t x = 0; x < g.object_count(); ++x) {
        fam.site_labels.push_back(g.objects[x]);
        Vec v(order.size());
        for (std::size_t p = 0; p < order.size(); ++p)
          if (order[p] == g.identity_at[x]) v[p] = 1;
        fam.idempotents.push_back(std::move(v));
      }
      out.weakhopf_idems.emplace(name, std::move(fam));
      return;
    }
    if (b.contains("cyclic_group")) {
      std::size_t n = b.at("cyclic_group").get<std::size_t>();
      std::string prefix = b.value("label_prefix", std::string());
      FiniteGroupoid g;
      g.objects = {prefix + "pt"};
      for (std::size_t i = 0; i < n; ++i) {
        g.morphisms.push_back(prefix + (i == 0 ? "e" : "s" + std::to_string(i)));
        g.src.push_back(0);
        g.tgt.push_back(0);
        g.inv.push_back((n - i) % n);
      }
      g.identity_at = {0};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.comp[{i, j}] = (i + j) % n;
      out.weakhopfs.emplace(name, groupoid_algebra(g));
      return;
    }
    if (b.contains("direct_sum")) {
      std::vector<WeakHopfPresentation> parts;
      for (const auto& r : b.at("direct_sum")) parts.push_back(weakhopf_ref(r.get<std::string>()));
      out.weakhopfs.emplace(name, direct_sum(parts));
      return;
    }
    FiniteDimAlgebra a;
    if (b.contains("algebra") && b.at("algebra").is_string()) {
      a = algebra_ref(b.at("algebra").get<std::string>());
    } else if (b.contains("algebra")) {
      a = parse_algebra_body(b.at("algebra"), name + ".algebra");
    } else {
      a = parse_algebra_body(b, name);  // inline labels/mult/unit
    }
    FiniteDimCoalgebra c;
    c.labels = a.labels;
    std::size_t n = a.dim();
    c.comult.assign(n, {});
    parse_triples(b.at("comult"), n,
                  [&](std::size_t i, std::size_t j, std::size_t k, Rational cc) {
                    c.comult[i].push_back({j, k, cc});
                  },
                  "weakhopf '" + name + "' comult");
    c.counit = parse_vector(b.at("counit"), c.labels, "weakhopf '" + name + "' counit");
    std::optional<Matrix> s;
    if (b.contains("antipode") && !b.at("antipode").is_null())
      s = parse_dense_matrix(b.at("antipode"), "weakhopf '" + name + "' antipode");
    out.weakhopfs.emplace(name, WeakHopfPresentation::make(std::move(a), std::move(c), std::move(s)));
    if (b.contains("idempotents")) {
      IdempotentFamily fam;
      for (auto it = b.at("idempotents").begin(); it != b.at("idempotents").end(); ++it) {
        fam.site_labels.push_back(it.key());
        fam.idempotents.push_back(
            parse_vector(it.value(), out.weakhopfs.at(name).labels(), "idempotents of " + name));
      }
      out.weakhopf_idems.emplace(name, std::move(fam));
    }
  }

  void parse_xdecomp(const json& b, const std::string& name) {
    std::vector<std::string> sites;
    std::vector<FiniteDimAlgebra> comps;
    std::vector<std::string> refs;
    for (const auto& entry : b.at("components")) {
      if (!entry.is_array() || entry.size() != 2) bad("xdecomp components are [site, algebra]");
      sites.push_back(entry[0].get<std::string>());
      if (entry[1].is_null()) {
        comps.push_back(FiniteDimAlgebra{});
        refs.push_back("");
      } else if (entry[1].is_string()) {
        refs.push_back(entry[1].get<std::string>());
        comps.push_back(algebra_ref(refs.back()));
      } else {
        std::string sub = name + "." + sites.back();
        comps.push_back(parse_algebra_body(entry[1], sub));
        out.algebras.emplace(sub, comps.back());
        refs.push_back(sub);
      }
    }
    out.xdecomps.emplace(name, XDecompAlgebra::assemble(sites, comps));
    out.xdecomp_refs.emplace(name, std::move(refs));
  }

  void parse_lie(const json& b, const std::string& name) {
    if (b.contains("general_linear")) {
      std::size_t n = b.at("general_linear").get<std::size_t>();
      out.lies.emplace(name, general_linear_lie(n, b.value("label_prefix", std::string("E"))));
      return;
    }
    FiniteDimLieAlgebra l;
    l.labels = b.at("labels").get<std::vector<std::string>>();
    std::size_t n = l.labels.size();
    l.bracket.assign(n, std::vector<SparseVec>(n));
    parse_triples(b.at("bracket"), n,
                  [&](std::size_t i, std::size_t j, std::size_t k, Rational c) {
                    l.bracket[i][j].push_back({k, c});
                  },
                  "lie '" + name + "'");
    l.require_shape();
    out.lies.emplace(name, std::move(l));
  }

  void parse_algebroid(const json& b, const std::string& name) {
    XLieAlgebroid x;
    std::vector<std::string> refs;
    for (const auto& entry : b.at("components")) {
      if (!entry.is_array() || entry.size() != 2) bad("algebroid components are [site, lie]");
      x.site_labels.push_back(entry[0].get<std::string>());
      refs.push_back(entry[1].get<std::string>());
      x.components.push_back(lie_ref(refs.back()));
    }
    out.algebroids.emplace(name, std::move(x));
    out.algebroid_refs.emplace(name, std::move(refs));
  }

  /// Matrix spec: dense rows, or a lift through the (poly) carrier
  /// component at the given site.
  Matrix parse_map_spec(const json& j, const std::string& poly_ref, const std::string& context) {
    if (j.is_array()) return parse_dense_matrix(j, context);
    if (!j.is_object()) bad("map spec must be a matrix or a lift object in " + context);
    auto poly = out.polys.find(poly_ref);
    if (poly == out.polys.end())
      bad("lift in " + context + " requires a polynomial carrier component");
    const TruncatedPolyAlgebra& p = poly->second;
    if (j.contains("linear"))
      return p.lift_substitution(parse_dense_matrix(j.at("linear"), context));
    if (j.contains("linear_derivation"))
      return p.lift_linear_derivation(parse_dense_matrix(j.at("linear_derivation"), context));
    if (j.contains("poly_derivation")) {
      std::vector<Vec> images(p.vars.size(), Vec(p.algebra.dim()));
      const json& imgs = j.at("poly_derivation");
      for (auto it = imgs.begin(); it != imgs.end(); ++it) {
        std::size_t v = label_index(p.vars, it.key(), context);
        images[v] = parse_vector(it.value(), p.algebra.labels, context);
      }
      return p.lift_derivation(images);
    }
    bad("unknown map spec in " + context);
  }

  void parse_action(const json& b, const std::string& name) {
    DefinitionFile::ActionBlock blk;
    blk.kind = b.at("kind").get<std::string>();
    if (blk.kind == "groupoid") {
      GroupoidAction act;
      blk.structure_ref = b.at("groupoid").get<std::string>();
      act.groupoid = groupoid_ref(blk.structure_ref);
      std::vector<std::string> poly_refs(act.groupoid.object_count());
      if (b.contains("carrier")) {
        blk.carrier_ref = b.at("carrier").get<std::string>();
        act.algebra_carrier = xdecomp_ref(blk.carrier_ref);
        const auto& refs = out.xdecomp_refs.at(blk.carrier_ref);
        for (std::size_t x = 0; x < act.groupoid.object_count(); ++x) {
          act.dims.push_back(act.algebra_carrier->component_dim(x));
          poly_refs[x] = refs[x];
        }
      } else {
        const json& dims = b.at("carrier_dims");
        for (std::size_t x = 0; x < act.groupoid.object_count(); ++x) {
          const std::string& site = act.groupoid.objects[x];
          if (!dims.contains(site)) bad("carrier_dims missing site '" + site + "'");
          act.dims.push_back(dims.at(site).get<std::size_t>());
        }
      }
      const json& maps = b.at("maps");
      for (std::size_t m = 0; m < act.groupoid.morphism_count(); ++m) {
        const std::string& l = act.groupoid.morphisms[m];
        if (maps.contains(l)) {
          act.maps[m] = parse_map_spec(maps.at(l), poly_refs[act.groupoid.src[m]],
                                       "action '" + name + "' map " + l);
        } else if (act.groupoid.identity_at[act.groupoid.src[m]] == m &&
                   act.groupoid.src[m] == act.groupoid.tgt[m]) {
          act.maps[m] = Matrix::identity(act.dims[act.groupoid.src[m]]);
        } else {
          bad("action '" + name + "' is missing the map for morphism '" + l + "'");
        }
      }
      act.require_shape();
      blk.groupoid_action = std::move(act);
    } else if (blk.kind == "lie") {
      LieAction act;
      blk.structure_ref = b.at("algebroid").get<std::string>();
      act.algebroid = algebroid_ref(blk.structure_ref);
      blk.carrier_ref = b.at("carrier").get<std::string>();
      act.carrier = xdecomp_ref(blk.carrier_ref);
      const auto& refs = out.xdecomp_refs.at(blk.carrier_ref);
      act.tau.resize(act.algebroid.component_count());
      const json& maps = b.at("maps");
      for (std::size_t x = 0; x < act.algebroid.component_count(); ++x) {
        const std::string& site = act.algebroid.site_labels[x];
        const FiniteDimLieAlgebra& l = act.algebroid.components[x];
        for (std::size_t p = 0; p < l.dim(); ++p) {
          Matrix m(act.carrier.component_dim(x), act.carrier.component_dim(x));
          if (maps.contains(site) && maps.at(site).contains(l.labels[p]))
            m = parse_map_spec(maps.at(site).at(l.labels[p]), refs[x],
                               "action '" + name + "' site " + site + " generator " + l.labels[p]);
          act.tau[x].push_back(std::move(m));
        }
      }
      act.require_shape();
      blk.lie_action = std::move(act);
    } else if (blk.kind == "hmodule") {
      HModuleAction act;
      blk.structure_ref = b.at("weakhopf").get<std::string>();
      act.hopf = weakhopf_ref(blk.structure_ref);
      if (b.contains("carrier")) {
        blk.carrier_ref = b.at("carrier").get<std::string>();
        if (out.algebras.count(blk.carrier_ref)) {
          act.carrier_dim = out.algebras.at(blk.carrier_ref).dim();
        } else if (out.xdecomps.count(blk.carrier_ref)) {
          act.carrier_dim = out.xdecomps.at(blk.carrier_ref).total.dim();
        } else {
          bad("reference to undefined carrier block '" + blk.carrier_ref + "'");
        }
      } else {
        act.carrier_dim = b.at("carrier_dim").get<std::size_t>();
      }
      const json& maps = b.at("maps");
      for (std::size_t i = 0; i < act.hopf.dim(); ++i) {
        const std::string& l = act.hopf.labels()[i];
        if (maps.contains(l)) {
          act.rho.push_back(parse_dense_matrix(maps.at(l), "action '" + name + "' map " + l));
        } else {
          act.rho.push_back(Matrix(act.carrier_dim, act.carrier_dim));
        }
      }
      act.require_shape();
      blk.h_action = std::move(act);
    } else {
      bad("unknown action kind '" + blk.kind + "'");
    }
    out.actions.emplace(name, std::move(blk));
  }

  void parse_ideal(const json& b, const std::string& name) {
    DefinitionFile::IdealBlock blk;
    blk.hopf_ref = b.at("weakhopf").get<std::string>();
    const auto& h = weakhopf_ref(blk.hopf_ref);
    for (const auto& g : b.at("generators"))
      blk.generators.push_back(parse_vector(g, h.labels(), "ideal '" + name + "'"));
    out.ideals.emplace(name, std::move(blk));
  }

  void parse_localunits(const json& b, const std::string& name) {
    DefinitionFile::LocalUnitsBlock blk;
    blk.algebra_ref = b.at("algebra").get<std::string>();
    const auto& a = algebra_ref(blk.algebra_ref);
    for (auto it = b.at("idempotents").begin(); it != b.at("idempotents").end(); ++it) {
      blk.family.site_labels.push_back(it.key());
      blk.family.idempotents.push_back(
          parse_vector(it.value(), a.labels, "localunits '" + name + "'"));
    }
    for (const auto& w : b.at("witnesses")) {
      LocalUnitWitness lw;
      lw.element = parse_vector(w.at("element"), a.labels, "localunits '" + name + "' witness");
      lw.src = label_index(blk.family.site_labels, w.at("src").get<std::string>(), name);
      lw.tgt = label_index(blk.family.site_labels, w.at("tgt").get<std::string>(), name);
      blk.witnesses.push_back(std::move(lw));
    }
    out.localunits.emplace(name, std::move(blk));
  }

  void parse_smash(const json& b, const std::string& name) {
    SmashInput in;
    std::string gref = b.at("groupoid").get<std::string>();
    in.groupoid = groupoid_ref(gref);
    in.site_labels = in.groupoid.objects;
    const json& comps = b.at("components");
    std::vector<std::string> crefs;
    for (const auto& site : in.site_labels) {
      if (!comps.contains(site)) bad("smash '" + name + "' is missing component for '" + site + "'");
      crefs.push_back(comps.at(site).get<std::string>());
      in.components.push_back(weakhopf_ref(crefs.back()));
    }
    out.smash_groupoid_refs.emplace(name, gref);
    out.smash_component_refs.emplace(name, crefs);
    const json& maps = b.at("maps");
    for (std::size_t m = 0; m < in.groupoid.morphism_count(); ++m) {
      const std::string& l = in.groupoid.morphisms[m];
      if (maps.contains(l)) {
        in.maps[m] = parse_dense_matrix(maps.at(l), "smash '" + name + "' map " + l);
      } else if (in.groupoid.identity_at[in.groupoid.src[m]] == m &&
                 in.groupoid.src[m] == in.groupoid.tgt[m]) {
        in.maps[m] = Matrix::identity(in.components[in.groupoid.src[m]].dim());
      } else {
        bad("smash '" + name + "' is missing the map for morphism '" + l + "'");
      }
    }
    in.require_shape();
    out.smashes.emplace(name, std::move(in));
  }

  void parse_map(const json& b, const std::string& name) {
    DefinitionFile::MapBlock blk;
    blk.kind = b.at("kind").get<std::string>();
    if (blk.kind == "groupoid_hom") {
      GroupoidHom hom;
      blk.source_ref = b.at("source").get<std::string>();
      blk.target_ref = b.at("target").get<std::string>();
      hom.source = groupoid_ref(blk.source_ref);
      hom.target = groupoid_ref(blk.target_ref);
      hom.object_map.assign(hom.source.object_count(), 0);
      for (auto it = b.at("objects").begin(); it != b.at("objects").end(); ++it)
        hom.object_map[label_index(hom.source.objects, it.key(), name)] =
            label_index(hom.target.objects, it.value().get<std::string>(), name);
      hom.morphism_map.assign(hom.source.morphism_count(), 0);
      for (auto it = b.at("morphisms").begin(); it != b.at("morphisms").end(); ++it)
        hom.morphism_map[label_index(hom.source.morphisms, it.key(), name)] =
            label_index(hom.target.morphisms, it.value().get<std::string>(), name);
      hom.x_preserving = b.value("x_preserving", false);
      blk.hom = std::move(hom);
    } else if (blk.kind == "weakhopf_map") {
      blk.source_ref = b.at("source").get<std::string>();
      blk.target_ref = b.at("target").get<std::string>();
      weakhopf_ref(blk.source_ref);
      weakhopf_ref(blk.target_ref);
      if (b.contains("linearize")) {
        auto it = out.maps.find(b.at("linearize").get<std::string>());
        if (it == out.maps.end() || !it->second.hom)
          bad("linearize refers to an undefined groupoid_hom block");
        blk.matrix = linearize_hom(*it->second.hom);
      } else {
        blk.matrix = parse_dense_matrix(b.at("matrix"), "map '" + name + "'");
      }
    } else {
      bad("unknown map kind '" + blk.kind + "'");
    }
    out.maps.emplace(name, std::move(blk));
  }
};

}  // namespace

DefinitionFile parse_definition_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("blocks") || !doc.at("blocks").is_array())
    throw ParseError(origin + ": top level must be {\"blocks\": [...]}");
  if (doc.at("blocks").empty()) throw ParseError(origin + ": no blocks");

  Parser p;
  try {
    for (const auto& b : doc.at("blocks")) {
      if (!b.is_object() || !b.contains("type") || !b.contains("name"))
        bad("each block needs a type and a name");
      std::string type = b.at("type").get<std::string>();
      std::string name = b.at("name").get<std::string>();
      p.check_fresh(name);
      if (type == "groupoid") {
        p.parse_groupoid(b, name);
      } else if (type == "algebra") {
        p.out.algebras.emplace(name, p.parse_algebra_body(b, name));
      } else if (type == "weakhopf") {
        p.parse_weakhopf(b, name);
      } else if (type == "xdecomp") {
        p.parse_xdecomp(b, name);
      } else if (type == "lie") {
        p.parse_lie(b, name);
      } else if (type == "algebroid") {
        p.parse_algebroid(b, name);
      } else if (type == "action") {
        p.parse_action(b, name);
      } else if (type == "ideal") {
        p.parse_ideal(b, name);
      } else if (type == "localunits") {
        p.parse_localunits(b, name);
      } else if (type == "smash") {
        p.parse_smash(b, name);
      } else if (type == "map") {
        p.parse_map(b, name);
      } else {
        bad("unknown block type '" + type + "'");
      }
      p.out.block_order.emplace_back(type, name);
    }
  } catch (const json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
  return std::move(p.out);
}

DefinitionFile parse_definition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_definition_text(ss.str(), path);
}

std::string DefinitionFile::resolve_name(const std::string& type,
                                         const std::string& requested) const {
  std::vector<std::string> names;
  for (const auto& [t, n] : block_order)
    if (t == type) names.push_back(n);
  if (!requested.empty()) {
    for (const auto& n : names)
      if (n == requested) return n;
    throw ParseError("no " + type + " block named '" + requested + "'");
  }
  if (names.empty()) throw ParseError("the file has no " + type + " block");
  if (names.size() > 1)
    throw ParseError("several " + type + " blocks; pick one with --name");
  return names.front();
}

namespace {

using nlohmann::json;

json scalar_json(const Rational& r) {
  if (denominator(r) == 1 && numerator(r) >= -1000000 && numerator(r) <= 1000000)
    return json(static_cast<long long>(numerator(r).convert_to<long long>()));
  return json(rational_to_string(r));
}

json vector_json(const Vec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(scalar_json(c));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

json algebra_json(const FiniteDimAlgebra& a) {
  json b;
  b["labels"] = a.labels;
  json mult = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.mult[i][j])
        mult.push_back(json::array({i, j, k, scalar_json(c)}));
  b["mult"] = mult;
  b["unit"] = vector_json(a.unit);
  return b;
}

json weakhopf_json(const WeakHopfPresentation& h) {
  json b = algebra_json(h.algebra);
  json comult = json::array();
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (const auto& [j, k, c] : h.coalgebra.comult[i])
      comult.push_back(json::array({i, j, k, scalar_json(c)}));
  b["comult"] = comult;
  b["counit"] = vector_json(h.coalgebra.counit);
  b["antipode"] = h.antipode ? matrix_json(*h.antipode) : json();
  return b;
}

}  // namespace

nlohmann::json serialize_definition(const DefinitionFile& f) {
  json blocks = json::array();
  for (const auto& [type, name] : f.block_order) {
    json b;
    b["type"] = type;
    b["name"] = name;
    if (type == "groupoid") {
      const auto& g = f.groupoids.at(name);
      b["objects"] = g.objects;
      json ms = json::array();
      for (std::size_t m = 0; m < g.morphism_count(); ++m)
        ms.push_back({{"name", g.morphisms[m]},
                      {"src", g.objects[g.src[m]]},
                      {"tgt", g.objects[g.tgt[m]]}});
      b["morphisms"] = ms;
      json ids = json::object();
      for (std::size_t x = 0; x < g.object_count(); ++x)
        ids[g.objects[x]] = g.morphisms[g.identity_at[x]];
      b["identities"] = ids;
      json inv = json::object();
      for (std::size_t m = 0; m < g.morphism_count(); ++m)
        inv[g.morphisms[m]] = g.morphisms[g.inv[m]];
      b["inverse"] = inv;
      json comp = json::array();
      for (const auto& [gh, k] : g.comp)
        comp.push_back(json::array(
            {g.morphisms[gh.first], g.morphisms[gh.second], g.morphisms[k]}));
      b["compose"] = comp;
    } else if (type == "algebra") {
      b.update(algebra_json(f.algebras.at(name)));
    } else if (type == "weakhopf") {
      b.update(weakhopf_json(f.weakhopfs.at(name)));
      auto fam = f.weakhopf_idems.find(name);
      if (fam != f.weakhopf_idems.end()) {
        json idem = json::object();
        for (std::size_t x = 0; x < fam->second.site_labels.size(); ++x)
          idem[fam->second.site_labels[x]] = vector_json(fam->second.idempotents[x]);
        b["idempotents"] = idem;
      }
    } else if (type == "xdecomp") {
      const auto& x = f.xdecomps.at(name);
      json comps = json::array();
      for (std::size_t i = 0; i < x.component_count(); ++i) {
        if (x.component_dim(i) == 0) {
          comps.push_back(json::array({x.site_labels[i], json()}));
        } else {
          comps.push_back(json::array({x.site_labels[i], algebra_json(x.components[i])}));
        }
      }
      b["components"] = comps;
    } else if (type == "lie") {
      const auto& l = f.lies.at(name);
      b["labels"] = l.labels;
      json br = json::array();
      for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j)
          for (const auto& [k, c] : l.bracket[i][j])
            br.push_back(json::array({i, j, k, scalar_json(c)}));
      b["bracket"] = br;
    } else if (type == "algebroid") {
      const auto& refs = f.algebroid_refs.at(name);
      const auto& x = f.algebroids.at(name);
      json comps = json::array();
      for (std::size_t i = 0; i < refs.size(); ++i)
        comps.push_back(json::array({x.site_labels[i], refs[i]}));
      b["components"] = comps;
    } else if (type == "action") {
      const auto& blk = f.actions.at(name);
      b["kind"] = blk.kind;
      if (blk.kind == "groupoid") {
        const auto& act = *blk.groupoid_action;
        b["groupoid"] = blk.structure_ref;
        if (!blk.carrier_ref.empty()) {
          b["carrier"] = blk.carrier_ref;
        } else {
          json dims = json::object();
          for (std::size_t x = 0; x < act.groupoid.object_count(); ++x)
            dims[act.groupoid.objects[x]] = act.dims[x];
          b["carrier_dims"] = dims;
        }
        json maps = json::object();
        for (const auto& [m, mat] : act.maps) maps[act.groupoid.morphisms[m]] = matrix_json(mat);
        b["maps"] = maps;
      } else if (blk.kind == "lie") {
        const auto& act = *blk.lie_action;
        b["algebroid"] = blk.structure_ref;
        b["carrier"] = blk.carrier_ref;
        json maps = json::object();
        for (std::size_t x = 0; x < act.algebroid.component_count(); ++x) {
          json site = json::object();
          for (std::size_t p = 0; p < act.tau[x].size(); ++p)
            site[act.algebroid.components[x].labels[p]] = matrix_json(act.tau[x][p]);
          maps[act.algebroid.site_labels[x]] = site;
        }
        b["maps"] = maps;
      } else {
        const auto& act = *blk.h_action;
        b["weakhopf"] = blk.structure_ref;
        if (!blk.carrier_ref.empty()) {
          b["carrier"] = blk.carrier_ref;
        } else {
          b["carrier_dim"] = act.carrier_dim;
        }
        json maps = json::object();
        for (std::size_t i = 0; i < act.rho.size(); ++i)
          maps[act.hopf.labels()[i]] = matrix_json(act.rho[i]);
        b["maps"] = maps;
      }
    } else if (type == "ideal") {
      const auto& blk = f.ideals.at(name);
      b["weakhopf"] = blk.hopf_ref;
      json gens = json::array();
      for (const auto& g : blk.generators) gens.push_back(vector_json(g));
      b["generators"] = gens;
    } else if (type == "localunits") {
      const auto& blk = f.localunits.at(name);
      b["algebra"] = blk.algebra_ref;
      json idem = json::object();
      for (std::size_t x = 0; x < blk.family.site_labels.size(); ++x)
        idem[blk.family.site_labels[x]] = vector_json(blk.family.idempotents[x]);
      b["idempotents"] = idem;
      json ws = json::array();
      for (const auto& w : blk.witnesses)
        ws.push_back({{"element", vector_json(w.element)},
                      {"src", blk.family.site_labels[w.src]},
                      {"tgt", blk.family.site_labels[w.tgt]}});
      b["witnesses"] = ws;
    } else if (type == "smash") {
      const auto& in = f.smashes.at(name);
      b["groupoid"] = f.smash_groupoid_refs.at(name);
      const auto& crefs = f.smash_component_refs.at(name);
      json comps = json::object();
      for (std::size_t x = 0; x < in.site_labels.size(); ++x) comps[in.site_labels[x]] = crefs[x];
      b["components"] = comps;
      json maps = json::object();
      for (const auto& [m, mat] : in.maps) maps[in.groupoid.morphisms[m]] = matrix_json(mat);
      b["maps"] = maps;
    } else if (type == "map") {
      const auto& blk = f.maps.at(name);
      b["kind"] = blk.kind;
      b["source"] = blk.source_ref;
      b["target"] = blk.target_ref;
      if (blk.kind == "groupoid_hom") {
        const auto& hom = *blk.hom;
        json objs = json::object();
        for (std::size_t x = 0; x < hom.source.object_count(); ++x)
          objs[hom.source.objects[x]] = hom.target.objects[hom.object_map[x]];
        b["objects"] = objs;
        json mors = json::object();
        for (std::size_t m = 0; m < hom.source.morphism_count(); ++m)
          mors[hom.source.morphisms[m]] = hom.target.morphisms[hom.morphism_map[m]];
        b["morphisms"] = mors;
        b["x_preserving"] = hom.x_preserving;
      } else {
        b["matrix"] = matrix_json(*blk.matrix);
      }
    }
    blocks.push_back(b);
  }
  json doc;
  doc["schema"] = 1;
  doc["blocks"] = blocks;
  return doc;
}

}  // namespace whk
