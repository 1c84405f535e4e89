#include "pcpw/scenario.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pcpw/decomposition.hpp"
#include "pcpw/enumeration.hpp"
#include "pcpw/fixtures.hpp"
#include "pcpw/transposition.hpp"

namespace pcpw {

using ordered_json = nlohmann::ordered_json;

const DeclaredIdeal& Scenario::find_ideal(const std::string& nm) const {
  for (const auto& [name, ideal] : ideals)
    if (name == nm) return ideal;
  throw scenario_error("unknown ideal \"" + nm + "\"");
}

namespace {

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

int require_int(const ordered_json& j, const char* key, int lo, int hi,
                const std::string& what) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw scenario_error(what + ": missing integer field \"" + key + "\"");
  int v = j[key].get<int>();
  if (v < lo || v >= hi)
    throw scenario_error(what + ": field \"" + key + "\" = " +
                         std::to_string(v) + " out of range [" +
                         std::to_string(lo) + "," + std::to_string(hi) + ")");
  return v;
}

std::string coeff_string(const ordered_json& j, const std::string& what) {
  if (!j.contains("c")) throw scenario_error(what + ": missing coefficient");
  if (j["c"].is_string()) return j["c"].get<std::string>();
  if (j["c"].is_number_integer())
    return std::to_string(j["c"].get<long long>());
  throw scenario_error(what + ": coefficient must be a string or integer");
}

}  // namespace

Scenario parse_scenario_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    throw scenario_error("JSON syntax error at line " + std::to_string(line) +
                         ", column " + std::to_string(col) + ": " + e.what());
  }
  Scenario s;
  if (!j.contains("version") || j["version"] != "pcpw-1")
    throw scenario_error("missing or unsupported version (expected \"pcpw-1\")");
  s.name = j.value("name", "unnamed");

  // field
  if (!j.contains("field") || !j["field"].contains("kind"))
    throw scenario_error("missing field specification");
  std::string kind = j["field"]["kind"].get<std::string>();
  if (kind == "Q") {
    s.field = Field::rationals();
  } else if (kind == "Fp") {
    if (!j["field"].contains("p"))
      throw scenario_error("prime field needs a modulus \"p\"");
    long long p = j["field"]["p"].get<long long>();
    if (p < 2 || p >= (1ll << 31))
      throw scenario_error("field modulus out of range");
    try {
      s.field = Field::prime(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument& e) {
      throw scenario_error(e.what());
    }
  } else {
    throw scenario_error("field kind must be \"Q\" or \"Fp\"");
  }

  // group
  if (!j.contains("group")) throw scenario_error("missing group");
  const auto& gj = j["group"];
  FiniteGroup g;
  g.order = static_cast<std::size_t>(
      require_int(gj, "order", 1, 1 << 16, "group"));
  if (gj.contains("names")) {
    for (const auto& n : gj["names"]) g.names.push_back(n.get<std::string>());
  } else {
    for (std::size_t i = 0; i < g.order; ++i)
      g.names.push_back("g" + std::to_string(i));
  }
  if (!gj.contains("table")) throw scenario_error("group: missing table");
  for (const auto& row : gj["table"]) {
    std::vector<int> r;
    for (const auto& e : row) r.push_back(e.get<int>());
    g.mult.push_back(std::move(r));
  }
  if (auto err = g.validate())
    throw scenario_error("group axiom failure: " + *err);

  // space
  if (!j.contains("space")) throw scenario_error("missing space");
  int m = require_int(j["space"], "size", 1, 1 << 16, "space");
  s.action.group = g;
  s.action.space = static_cast<std::size_t>(m);
  if (j["space"].contains("names")) {
    for (const auto& n : j["space"]["names"])
      s.action.point_names.push_back(n.get<std::string>());
    if (s.action.point_names.size() != s.action.space)
      throw scenario_error("space: name count does not match size");
  } else {
    for (int i = 0; i < m; ++i)
      s.action.point_names.push_back(std::to_string(i));
  }

  // action: entry for g gives the domain of theta_g (that is X_{g^-1})
  // and the image of each listed point, in order
  s.action.theta.assign(g.order, std::vector<int>(s.action.space, -1));
  for (int x = 0; x < m; ++x) s.action.theta[0][x] = x;
  if (j.contains("action")) {
    for (const auto& ej : j["action"]) {
      int gg = require_int(ej, "g", 0, static_cast<int>(g.order), "action");
      if (!ej.contains("domain") || !ej.contains("maps_to"))
        throw scenario_error("action entry needs \"domain\" and \"maps_to\"");
      auto dom = ej["domain"];
      auto img = ej["maps_to"];
      if (dom.size() != img.size())
        throw scenario_error("action: domain and maps_to differ in length");
      if (gg == 0) {
        for (std::size_t i = 0; i < dom.size(); ++i)
          if (dom[i].get<int>() != img[i].get<int>())
            throw scenario_error("action: identity entry must be the identity");
        continue;
      }
      for (std::size_t i = 0; i < dom.size(); ++i) {
        int x = dom[i].get<int>(), y = img[i].get<int>();
        if (x < 0 || x >= m || y < 0 || y >= m)
          throw scenario_error("action: point index out of range for g=" +
                               g.names[gg]);
        if (s.action.theta[gg][x] >= 0)
          throw scenario_error("action: duplicate domain point for g=" +
                               g.names[gg]);
        s.action.theta[gg][x] = y;
      }
    }
  }
  auto rep = validate_action(s.action);
  if (!rep.ok)
    throw scenario_error("partial-action axiom failure: " + rep.to_string());

  // ideals
  if (j.contains("ideals")) {
    for (const auto& [name, val] : j["ideals"].items()) {
      DeclaredIdeal di;
      std::vector<ordered_json> gens;
      if (val.is_array() && !val.empty() && val[0].is_array()) {
        for (const auto& gjson : val) gens.push_back(gjson);
      } else if (val.is_array()) {
        if (!val.empty()) gens.push_back(val);
      } else {
        throw scenario_error("ideal \"" + name + "\" must be an array");
      }
      bool first_term = true;
      for (const auto& gen : gens) {
        std::vector<IdealTerm> terms;
        for (const auto& tj : gen) {
          IdealTerm t;
          bool is_group = tj.contains("h");
          if (first_term) {
            di.group_algebra = is_group;
            first_term = false;
          } else if (is_group != di.group_algebra) {
            throw scenario_error("ideal \"" + name +
                                 "\": cannot mix {x,g,c} and {h,c} terms");
          }
          if (is_group) {
            t.g = require_int(tj, "h", 0, static_cast<int>(g.order),
                              "ideal \"" + name + "\"");
          } else {
            t.x = require_int(tj, "x", 0, m, "ideal \"" + name + "\"");
            t.g = require_int(tj, "g", 0, static_cast<int>(g.order),
                              "ideal \"" + name + "\"");
          }
          t.c = coeff_string(tj, "ideal \"" + name + "\"");
          try {
            Scalar::parse(s.field, t.c);
          } catch (const std::invalid_argument& e) {
            throw scenario_error("ideal \"" + name + "\": " + e.what());
          }
          terms.push_back(std::move(t));
        }
        di.generators.push_back(std::move(terms));
      }
      s.ideals.emplace_back(name, std::move(di));
    }
  }

  // tasks
  if (j.contains("tasks")) {
    int counter = 0;
    for (const auto& tj : j["tasks"]) {
      ScenarioTask t;
      if (!tj.contains("cmd")) throw scenario_error("task: missing cmd");
      t.cmd = tj["cmd"].get<std::string>();
      t.name = tj.value("name", t.cmd + "#" + std::to_string(counter));
      if (tj.contains("point")) t.point = tj["point"].get<int>();
      if (tj.contains("point2")) t.point2 = tj["point2"].get<int>();
      t.ideal = tj.value("ideal", "");
      t.ideal2 = tj.value("ideal2", "");
      s.tasks.push_back(std::move(t));
      ++counter;
    }
  }
  return s;
}

Scenario parse_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw scenario_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

std::string serialize_scenario(const Scenario& s) {
  ordered_json j;
  j["version"] = "pcpw-1";
  j["name"] = s.name;
  if (s.field.is_prime_field())
    j["field"] = {{"kind", "Fp"}, {"p", s.field.modulus()}};
  else
    j["field"] = {{"kind", "Q"}};
  j["group"]["order"] = s.action.group.order;
  j["group"]["names"] = s.action.group.names;
  j["group"]["table"] = s.action.group.mult;
  j["space"]["size"] = s.action.space;
  j["space"]["names"] = s.action.point_names;
  j["action"] = ordered_json::array();
  for (std::size_t g = 1; g < s.action.group.order; ++g) {
    ordered_json entry;
    entry["g"] = g;
    std::vector<int> dom, img;
    for (std::size_t x = 0; x < s.action.space; ++x)
      if (s.action.theta[g][x] >= 0) {
        dom.push_back(static_cast<int>(x));
        img.push_back(s.action.theta[g][x]);
      }
    entry["domain"] = dom;
    entry["maps_to"] = img;
    j["action"].push_back(entry);
  }
  j["ideals"] = ordered_json::object();
  for (const auto& [name, di] : s.ideals) {
    ordered_json gens = ordered_json::array();
    for (const auto& gen : di.generators) {
      ordered_json terms = ordered_json::array();
      for (const auto& t : gen) {
        ordered_json tj;
        if (di.group_algebra) {
          tj["h"] = t.g;
        } else {
          tj["x"] = t.x;
          tj["g"] = t.g;
        }
        tj["c"] = t.c;
        terms.push_back(tj);
      }
      gens.push_back(terms);
    }
    j["ideals"][name] = gens;
  }
  if (!s.tasks.empty()) {
    j["tasks"] = ordered_json::array();
    for (const auto& t : s.tasks) {
      ordered_json tj;
      tj["name"] = t.name;
      tj["cmd"] = t.cmd;
      if (t.point >= 0) tj["point"] = t.point;
      if (t.point2 >= 0) tj["point2"] = t.point2;
      if (!t.ideal.empty()) tj["ideal"] = t.ideal;
      if (!t.ideal2.empty()) tj["ideal2"] = t.ideal2;
      j["tasks"].push_back(tj);
    }
  }
  return j.dump(2) + "\n";
}

Ideal resolve_kh_ideal(const Scenario& s, const CrossedProduct& cp,
                       const InductionContext& ctx, const std::string& name) {
  const DeclaredIdeal& di = s.find_ideal(name);
  // an empty generator list is the zero ideal in either role
  if (!di.group_algebra && !di.generators.empty())
    throw scenario_error("ideal \"" + name +
                         "\" has crossed-product terms; a group-algebra "
                         "ideal is required here");
  std::vector<Vec> gens;
  for (const auto& gen : di.generators) {
    Vec v = zero_vec(cp.field, ctx.kh().dim);
    for (const auto& t : gen) {
      int pos = ctx.od.h_pos(t.g);
      if (pos < 0)
        throw scenario_error(
            "ideal \"" + name + "\": group element " +
            cp.pa.group.names[t.g] + " is not in the isotropy group of point " +
            cp.pa.point_names[ctx.x0]);
      v[static_cast<std::size_t>(pos)] += Scalar::parse(cp.field, t.c);
    }
    gens.push_back(std::move(v));
  }
  return ideal_generate(ctx.kh(), gens);
}

Ideal resolve_cp_ideal(const Scenario& s, const CrossedProduct& cp,
                       const std::string& name) {
  const DeclaredIdeal& di = s.find_ideal(name);
  if (di.group_algebra && !di.generators.empty())
    throw scenario_error("ideal \"" + name +
                         "\" has group-algebra terms; a crossed-product "
                         "ideal is required here");
  std::vector<Vec> gens;
  for (const auto& gen : di.generators) {
    Vec v = zero_vec(cp.field, cp.alg.dim);
    for (const auto& t : gen) {
      int idx = cp.index_of(t.g, t.x);
      if (idx < 0)
        throw scenario_error("ideal \"" + name + "\": point " +
                             cp.pa.point_names[t.x] + " is not in X_" +
                             cp.pa.group.names[t.g]);
      v[static_cast<std::size_t>(idx)] += Scalar::parse(cp.field, t.c);
    }
    gens.push_back(std::move(v));
  }
  return ideal_generate(cp.alg, gens);
}

std::string subspace_text(const Subspace& s) {
  std::ostringstream os;
  os << "dim=" << s.dim() << " basis=[";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    os << (i ? ";" : "") << "(";
    for (std::size_t j = 0; j < s.ambient(); ++j)
      os << (j ? "," : "") << s.basis().at(i, j).to_string();
    os << ")";
  }
  os << "]";
  return os.str();
}

bool Report::all_ok() const {
  for (const auto& t : tasks)
    if (!t.verdict) return false;
  return true;
}

namespace {

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

struct CheckContext {
  const Scenario& s;
  const CrossedProduct& cp;
  const RunOptions& opt;
  Sampler& sampler;
};

void fail(TaskResult& t, const std::string& why) {
  t.verdict = false;
  if (!t.witness.empty()) t.witness += "; ";
  t.witness += why;
}

/// Canonical KH-ideal list at a context: zero, augmentation (nontrivial H
/// only), whole, then resolvable declared group-algebra ideals.
std::vector<std::pair<std::string, Ideal>> canonical_kh_ideals(
    const CheckContext& cc, const InductionContext& ctx) {
  std::vector<std::pair<std::string, Ideal>> out;
  out.emplace_back("zero", Ideal::zero(ctx.kh()));
  if (ctx.kh().dim > 1)
    out.emplace_back("augmentation", augmentation_ideal(ctx.maps.kh));
  out.emplace_back("KH", Ideal::whole(ctx.kh()));
  for (const auto& [name, di] : cc.s.ideals) {
    if (!di.group_algebra) continue;
    bool resolvable = true;
    for (const auto& gen : di.generators)
      for (const auto& t : gen)
        if (ctx.od.h_pos(t.g) < 0) resolvable = false;
    if (resolvable)
      out.emplace_back(name, resolve_kh_ideal(cc.s, cc.cp, ctx, name));
  }
  return out;
}

TaskResult check_action_axioms(const CheckContext& cc) {
  TaskResult t{.name = "action-axioms"};
  auto rep = validate_action(cc.cp.pa);
  if (!rep.ok) fail(t, rep.to_string());
  return t;
}

TaskResult check_crossed_product(const CheckContext& cc) {
  TaskResult t{.name = "crossed-product-structure"};
  if (auto w = cc.cp.alg.associativity_witness())
    fail(t, "associativity fails at basis triple (" +
                std::to_string(std::get<0>(*w)) + "," +
                std::to_string(std::get<1>(*w)) + "," +
                std::to_string(std::get<2>(*w)) + ")");
  if (!cc.cp.alg.unit_ok()) fail(t, "unit is not a two-sided identity");
  std::size_t expect = 0;
  for (std::size_t g = 0; g < cc.cp.pa.group.order; ++g)
    expect += cc.cp.pa.domain(static_cast<int>(g)).size();
  if (expect != cc.cp.alg.dim) fail(t, "dimension != sum of |X_g|");
  t.objects.emplace_back("dim", std::to_string(cc.cp.alg.dim));
  return t;
}

TaskResult check_orbit_invariants(const CheckContext& cc) {
  TaskResult t{.name = "orbit-invariants"};
  const auto& pa = cc.cp.pa;
  const auto& g = pa.group;
  for (int x = 0; x < static_cast<int>(pa.space); ++x) {
    OrbitData od = orbit_data(pa, x);
    // left-class characterization
    for (int k : od.S)
      for (int l : od.S) {
        bool same_image = pa.apply(k, x) == pa.apply(l, x);
        bool same_class = od.in_H(g.op(g.inverse(k), l));
        if (same_image != same_class)
          fail(t, "class characterization fails at x=" + std::to_string(x));
      }
    // conjugation of isotropy groups along the orbit
    for (int k : od.S) {
      OrbitData ody = orbit_data(pa, pa.apply(k, x));
      std::set<int> conj;
      for (int h : od.H) conj.insert(g.op(g.op(k, h), g.inverse(k)));
      if (std::set<int>(ody.H.begin(), ody.H.end()) != conj)
        fail(t, "H_{theta_k(x)} != k H_x k^-1 at x=" + std::to_string(x));
    }
    // R covers the orbit bijectively
    std::set<int> r_images;
    for (int r : od.R) r_images.insert(pa.apply(r, x));
    if (r_images.size() != od.R.size() ||
        std::set<int>(od.orbit.begin(), od.orbit.end()) != r_images)
      fail(t, "coset representatives do not enumerate the orbit");
  }
  // orbits partition the space
  std::vector<int> seen(pa.space, 0);
  for (int rep : orbit_representatives(pa))
    for (int y : orbit_data(pa, rep).orbit) seen[y] += 1;
  for (std::size_t x = 0; x < pa.space; ++x)
    if (seen[x] != 1) fail(t, "orbit partition fails");
  return t;
}

TaskResult check_freeness(const CheckContext& cc) {
  TaskResult t{.name = "freeness-regularity"};
  auto rep = freeness_report(cc.cp.pa);
  bool all_empty = true;
  for (const auto& fs : rep.fixed_sets) all_empty = all_empty && fs.empty();
  if (rep.action_topologically_free != all_empty)
    fail(t, "action-level freeness disagrees with fixed sets");
  for (const auto& pf : rep.points) {
    OrbitData od = orbit_data(cc.cp.pa, pf.x);
    if (pf.topologically_free != (od.H.size() == 1))
      fail(t, "pointwise freeness != trivial isotropy at x=" +
                  std::to_string(pf.x));
    if (!pf.strongly_regular || !pf.regular)
      fail(t, "finite-model regularity fails at x=" + std::to_string(pf.x));
  }
  t.objects.emplace_back(
      "topologically_free",
      rep.action_topologically_free ? "true" : "false");
  return t;
}

TaskResult check_expectation_maps(const CheckContext& cc) {
  TaskResult t{.name = "expectation-maps"};
  const Algebra& a = cc.cp.alg;
  for (int x0 = 0; x0 < static_cast<int>(cc.cp.pa.space); ++x0) {
    InductionContext ctx = make_induction_context(cc.cp, x0);
    const auto& im = ctx.maps;
    const Algebra& ah = im.cp_h.alg;
    // E is a projection onto the subalgebra
    Matrix ee = im.e_map.mul(im.embed);
    if (!(ee == Matrix::identity(cc.cp.field, ah.dim)))
      fail(t, "E restricted to the subalgebra is not the identity");
    // bimodule property over L_c(X) x| H
    for (std::size_t i = 0; i < ah.dim && t.verdict; ++i) {
      Vec sub = im.embed.apply(ah.basis_vec(i));
      for (std::size_t b = 0; b < a.dim; ++b) {
        Vec lhs = im.e_map.apply(a.mul(sub, a.basis_vec(b)));
        Vec rhs = ah.mul(ah.basis_vec(i),
                         im.e_map.apply(a.basis_vec(b)));
        if (lhs != rhs) fail(t, "E(ab) != a E(b) at x0=" + std::to_string(x0));
        Vec lhs2 = im.e_map.apply(a.mul(a.basis_vec(b), sub));
        Vec rhs2 = ah.mul(im.e_map.apply(a.basis_vec(b)),
                          ah.basis_vec(i));
        if (lhs2 != rhs2)
          fail(t, "E(ba) != E(b) a at x0=" + std::to_string(x0));
      }
    }
    // nu is multiplicative on the subalgebra
    for (std::size_t i = 0; i < ah.dim && t.verdict; ++i)
      for (std::size_t j = 0; j < ah.dim; ++j) {
        Vec lhs = im.nu_map.apply(ah.mul(ah.basis_vec(i), ah.basis_vec(j)));
        Vec rhs = ctx.kh().mul(im.nu_map.apply(ah.basis_vec(i)),
                               im.nu_map.apply(ah.basis_vec(j)));
        if (lhs != rhs) {
          fail(t, "nu fails multiplicativity at x0=" + std::to_string(x0));
          break;
        }
      }
    // F(ab) = F(a) F(b) when a or b lies in the subalgebra
    for (std::size_t i = 0; i < ah.dim && t.verdict; ++i) {
      Vec sub = im.embed.apply(ah.basis_vec(i));
      for (std::size_t b = 0; b < a.dim; ++b) {
        Vec p1 = ctx.f_of(a.mul(sub, a.basis_vec(b)));
        Vec p2 = ctx.kh().mul(ctx.f_of(sub), ctx.f_of(a.basis_vec(b)));
        Vec p3 = ctx.f_of(a.mul(a.basis_vec(b), sub));
        Vec p4 = ctx.kh().mul(ctx.f_of(a.basis_vec(b)), ctx.f_of(sub));
        if (p1 != p2 || p3 != p4) {
          fail(t, "F multiplicativity against the subalgebra fails");
          break;
        }
      }
    }
    // F(a phi) = phi(x0) F(a) = F(phi a) for functions phi
    Vec phi = cc.sampler.vector(cc.cp.field, cc.cp.pa.space);
    Vec phi_emb = cc.cp.embed_function(phi);
    for (std::size_t b = 0; b < a.dim && t.verdict; ++b) {
      Vec lhs = ctx.f_of(a.mul(a.basis_vec(b), phi_emb));
      Vec mid = vec_scale(phi[static_cast<std::size_t>(x0)],
                          ctx.f_of(a.basis_vec(b)));
      Vec rhs = ctx.f_of(a.mul(phi_emb, a.basis_vec(b)));
      if (lhs != mid || rhs != mid)
        fail(t, "F(a phi) = phi(x0) F(a) = F(phi a) fails");
    }
    // F is onto KH via the canonical lift c -> sum c_h e_{x0,h}
    for (std::size_t hj = 0; hj < ctx.kh().dim && t.verdict; ++hj) {
      int h = ctx.maps.kh.sub.elems[hj];
      Vec lift = zero_vec(cc.cp.field, a.dim);
      lift[static_cast<std::size_t>(cc.cp.index_of(h, x0))] =
          Scalar::one(cc.cp.field);
      if (ctx.f_of(lift) != ctx.kh().basis_vec(hj))
        fail(t, "F fails to hit delta_h through the canonical lift");
    }
  }
  return t;
}

TaskResult check_induction_form(const CheckContext& cc) {
  TaskResult t{.name = "induction-form"};
  for (int x0 = 0; x0 < static_cast<int>(cc.cp.pa.space); ++x0) {
    InductionContext ctx = make_induction_context(cc.cp, x0);
    const std::size_t s = ctx.s_size();
    // right-linearity of the form: <m, n a> = <m, n> a
    for (int trial = 0; trial < 4 && t.verdict; ++trial) {
      Vec m = cc.sampler.vector(cc.cp.field, s);
      Vec n = cc.sampler.vector(cc.cp.field, s);
      Vec a = cc.sampler.vector(cc.cp.field, ctx.kh().dim);
      Vec lhs = ctx.pair_form(m, ctx.m_right_action(n, a));
      Vec rhs = ctx.kh().mul(ctx.pair_form(m, n), a);
      if (lhs != rhs) fail(t, "form right-linearity fails");
    }
    // reconstruction from coset representatives
    for (int trial = 0; trial < 4 && t.verdict; ++trial) {
      Vec m = cc.sampler.vector(cc.cp.field, s);
      Vec rebuilt = zero_vec(cc.cp.field, s);
      for (int r : ctx.od.R) {
        Vec dr = zero_vec(cc.cp.field, s);
        dr[static_cast<std::size_t>(ctx.s_pos(r))] = Scalar::one(cc.cp.field);
        Vec coeff = ctx.pair_form(dr, m);
        rebuilt = vec_add(rebuilt, ctx.m_right_action(dr, coeff));
      }
      if (rebuilt != m) fail(t, "basis reconstruction fails");
    }
    // closed bracket formula == form composed with the left action
    for (std::size_t kp = 0; kp < s && t.verdict; ++kp)
      for (std::size_t lp = 0; lp < s; ++lp) {
        Vec dk = unit_vec(cc.cp.field, s, kp);
        Vec dl = unit_vec(cc.cp.field, s, lp);
        for (std::size_t b = 0; b < cc.cp.alg.dim; ++b) {
          Vec via_action = ctx.pair_form(
              dk, ctx.m_left_action(cc.cp.alg.basis_vec(b), dl));
          Vec via_formula =
              ctx.bracket(ctx.od.S[kp], cc.cp.alg.basis_vec(b), ctx.od.S[lp]);
          if (via_action != via_formula) {
            fail(t, "bracket formula disagrees with the form at x0=" +
                        std::to_string(x0));
            break;
          }
        }
      }
  }
  return t;
}

TaskResult check_induced_ideals(const CheckContext& cc) {
  TaskResult t{.name = "induced-ideals"};
  const Algebra& a = cc.cp.alg;
  for (int x0 = 0; x0 < static_cast<int>(cc.cp.pa.space); ++x0) {
    InductionContext ctx = make_induction_context(cc.cp, x0);
    auto ideals = canonical_kh_ideals(cc, ctx);
    std::vector<Ideal> induced;
    for (const auto& [name, ideal] : ideals) {
      Ideal ind = induce_ideal(ctx, ideal);
      induced.push_back(ind);
      if (!ideal_is_two_sided(a, ind.space))
        fail(t, "Ind(" + name + ") is not two-sided at x0=" +
                    std::to_string(x0));
      Ideal via_f = induce_ideal_via_f(ctx, ideal);
      if (!(via_f.space == ind.space))
        fail(t, "alternative description disagrees for " + name);
      Ideal reduced = f_of_ideal(ctx, ind);
      if (!ideal.space.contains(reduced.space))
        fail(t, "F(Ind(I)) is not inside I for " + name);
      if (!(reduced.space == ideal.space))
        fail(t, "finite-model admissibility fails for " + name);
      if (!ideal_contains(induce_ideal(ctx, reduced), ind))
        fail(t, "Ind(I') lost part of Ind(I) for " + name);
      // J <= Ind(F(J)) with J = Ind(I)
      if (!ideal_contains(induce_ideal(ctx, f_of_ideal(ctx, ind)), ind))
        fail(t, "J <= Ind(F(J)) fails for J = Ind(" + name + ")");
      auto crep = characterization_checks(ctx, ideal);
      if (!crep.all_agree)
        fail(t, "admissibility characterizations disagree for " + name + ": " +
                    crep.witness);
      // coefficient-algebra intersection
      std::vector<Vec> lc_rows;
      for (std::size_t y = 0; y < cc.cp.pa.space; ++y)
        lc_rows.push_back(unit_vec(
            cc.cp.field, a.dim,
            static_cast<std::size_t>(cc.cp.pair_index[0][y])));
      Subspace lc = Subspace::span(cc.cp.field, a.dim, lc_rows);
      Subspace inter = intersect(ind.space, lc);
      if (ideal.space.dim() == ctx.kh().dim) {
        if (!(inter == lc)) fail(t, "Ind(KH) misses part of L_c(X)");
      } else {
        std::vector<Vec> vanish;
        for (std::size_t y = 0; y < cc.cp.pa.space; ++y) {
          bool in_orbit = std::binary_search(ctx.od.orbit.begin(),
                                             ctx.od.orbit.end(),
                                             static_cast<int>(y));
          if (!in_orbit)
            vanish.push_back(unit_vec(
                cc.cp.field, a.dim,
                static_cast<std::size_t>(cc.cp.pair_index[0][y])));
        }
        if (!(inter == Subspace::span(cc.cp.field, a.dim, vanish)))
          fail(t, "coefficient intersection of Ind(" + name +
                      ") is not the vanishing ideal of the orbit");
      }
    }
    // monotonicity, intersections, injectivity across the canonical list
    for (std::size_t i = 0; i < ideals.size(); ++i)
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        if (ideals[j].second.space.contains(ideals[i].second.space) &&
            !induced[j].space.contains(induced[i].space))
          fail(t, "induction is not monotone");
        Ideal meet = ideal_combine(ctx.kh(), IdealOp::intersect,
                                   ideals[i].second, ideals[j].second);
        Ideal lhs = induce_ideal(ctx, meet);
        Ideal rhs = ideal_combine(a, IdealOp::intersect, induced[i],
                                  induced[j]);
        if (!(lhs.space == rhs.space))
          fail(t, "Ind does not commute with intersections");
        if (i < j && ideals[i].second.space == ideals[j].second.space)
          continue;
        if (i < j && !(ideals[i].second.space == ideals[j].second.space) &&
            induced[i].space == induced[j].space)
          fail(t, "induction is not injective on admissible ideals");
      }
  }
  return t;
}

TaskResult check_induced_modules(const CheckContext& cc) {
  TaskResult t{.name = "induced-modules"};
  const Algebra& a = cc.cp.alg;
  for (int x0 = 0; x0 < static_cast<int>(cc.cp.pa.space); ++x0) {
    InductionContext ctx = make_induction_context(cc.cp, x0);
    auto ideals = canonical_kh_ideals(cc, ctx);
    for (const auto& [name, ideal] : ideals) {
      // V = KH/I with left multiplication; its annihilator is I
      QuotientAlgebra q = quotient_algebra(ctx.kh(), ideal);
      AlgModule v;
      v.field = cc.cp.field;
      v.dim = q.alg.dim;
      for (std::size_t i = 0; i < ctx.kh().dim; ++i) {
        Matrix act = Matrix::zero(cc.cp.field, v.dim, v.dim);
        for (std::size_t c = 0; c < v.dim; ++c) {
          Vec col = q.projection.apply(ctx.kh().mul(
              ctx.kh().basis_vec(i),
              q.section.apply(unit_vec(cc.cp.field, v.dim, c))));
          for (std::size_t r = 0; r < v.dim; ++r) act.at(r, c) = col[r];
        }
        v.action.push_back(std::move(act));
      }
      Ideal ann = module_annihilator(ctx.kh(), v);
      if (!(ann.space == ideal.space))
        fail(t, "annihilator of KH/I is not I for " + name);
      AlgModule ind = induce_module(ctx, v);
      if (!ind.is_module_over(a))
        fail(t, "induced module is not an A-module for " + name);
      Ideal ann_ind = module_annihilator(a, ind);
      Ideal ind_ann = induce_ideal(ctx, ann);
      if (!(ann_ind.space == ind_ann.space))
        fail(t, "annihilator transport fails for " + name);
    }
    // irreducibility preservation over prime fields
    if (cc.cp.field.is_prime_field()) {
      try {
        auto irr = irreducible_modules_by_exhaustion(ctx.kh(), cc.opt.cap);
        for (const auto& v : irr) {
          if (!module_is_irreducible(ctx.kh(), v, cc.opt.cap))
            fail(t, "exhaustion produced a reducible module");
          AlgModule ind = induce_module(ctx, v);
          if (!module_is_irreducible(a, ind, cc.opt.cap))
            fail(t, "induced module of an irreducible is reducible");
          Ideal ann = module_annihilator(ctx.kh(), v);
          if (!(module_annihilator(a, ind).space ==
                induce_ideal(ctx, ann).space))
            fail(t, "annihilator transport fails on an irreducible");
        }
        t.objects.emplace_back("irreducibles@x" + std::to_string(x0),
                               std::to_string(irr.size()));
      } catch (const cap_exceeded_error&) {
        t.objects.emplace_back("irreducibles@x" + std::to_string(x0),
                               "skipped (cap)");
      }
    }
  }
  return t;
}

TaskResult check_effros_hahn(const CheckContext& cc) {
  TaskResult t{.name = "effros-hahn"};
  const Algebra& a = cc.cp.alg;
  std::vector<std::pair<std::string, Ideal>> list;
  list.emplace_back("zero", Ideal::zero(a));
  list.emplace_back("whole", Ideal::whole(a));
  for (const auto& [name, di] : cc.s.ideals)
    if (!di.group_algebra)
      list.emplace_back(name, resolve_cp_ideal(cc.s, cc.cp, name));
  for (int i = 0; i < cc.opt.samples; ++i)
    list.emplace_back("sampled#" + std::to_string(i), cc.sampler.ideal(a));
  for (const auto& [name, j] : list) {
    auto rep = effros_hahn_decompose(cc.cp, j);
    if (!rep.verdict)
      fail(t, "decomposition fails for " + name + ": " + rep.witness);
    // kernel of the regular representation of A/J is J
    AlgModule reg = regular_rep_mod_j(cc.cp, j);
    if (!(module_annihilator(a, reg).space == j.space))
      fail(t, "Ker(regular rep of A/J) != J for " + name);
  }
  // discretization internals at J = 0 and at the last sampled ideal
  std::vector<std::pair<std::string, Ideal>> probe = {
      {"zero", Ideal::zero(a)}, {"probe", list.back().second}};
  for (const auto& [name, j] : probe) {
    Discretization d = discretize(cc.cp, j);
    const std::size_t dv = d.reg.dim;
    // Q = stacked q_x intertwines pi with Pi x U and is injective
    Matrix qstack = Matrix::zero(cc.cp.field, d.total, dv);
    for (std::size_t x = 0; x < cc.cp.pa.space; ++x)
      for (std::size_t r = 0; r < d.vdim[x]; ++r)
        for (std::size_t c = 0; c < dv; ++c)
          qstack.at(d.offset[x] + r, c) = d.qx[x].at(r, c);
    Matrix qcopy = qstack;
    if (rref_inplace(qcopy).size() != dv)
      fail(t, "stacked projection is not injective for " + name);
    for (std::size_t b = 0; b < a.dim; ++b)
      if (!(qstack.mul(d.reg.action[b]) == d.pi_u[b].mul(qstack))) {
        fail(t, "Q fails covariance for " + name);
        break;
      }
    // partial-representation identities for u
    if (!(d.u[0] == Matrix::identity(cc.cp.field, dv)))
      fail(t, "u_e != 1 for " + name);
    const auto& pa = cc.cp.pa;
    for (std::size_t g = 0; g < pa.group.order && t.verdict; ++g) {
      Vec phi = cc.sampler.vector(cc.cp.field, pa.space);
      // abar_g(phi) = alpha_g(phi 1_{g^-1})
      Vec abar = zero_vec(cc.cp.field, pa.space);
      for (std::size_t x = 0; x < pa.space; ++x)
        if (pa.defined(static_cast<int>(g), static_cast<int>(x)))
          abar[static_cast<std::size_t>(
              pa.apply(static_cast<int>(g), static_cast<int>(x)))] = phi[x];
      Matrix piphi = d.reg.act(cc.cp.embed_function(phi));
      Matrix piabar = d.reg.act(cc.cp.embed_function(abar));
      if (!(d.u[g].mul(piphi) == piabar.mul(d.u[g])))
        fail(t, "u_g pi(f) != pi(abar_g f) u_g for " + name);
      // pi(f Delta_g) = pi(f) u_g for f supported in X_g
      for (std::size_t x = 0; x < pa.space; ++x) {
        int idx = cc.cp.pair_index[g][x];
        if (idx < 0) continue;
        Vec ind = zero_vec(cc.cp.field, pa.space);
        ind[x] = Scalar::one(cc.cp.field);
        Matrix lhs = d.reg.action[static_cast<std::size_t>(idx)];
        Matrix rhs = d.reg.act(cc.cp.embed_function(ind)).mul(d.u[g]);
        if (!(lhs == rhs)) {
          fail(t, "pi(f Delta_g) != pi(f) u_g for " + name);
          break;
        }
      }
      // u_g u_{g^-1} pi(f) = pi(f 1_{X_g})
      Vec cut = phi;
      for (std::size_t x = 0; x < pa.space; ++x)
        if (!pa.in_domain(static_cast<int>(g), static_cast<int>(x)))
          cut[x] = Scalar::zero(cc.cp.field);
      Matrix picut = d.reg.act(cc.cp.embed_function(cut));
      std::size_t gi = static_cast<std::size_t>(pa.group.inverse(
          static_cast<int>(g)));
      if (!(d.u[g].mul(d.u[gi]).mul(piphi) == picut) ||
          !(piphi.mul(d.u[g]).mul(d.u[gi]) == picut))
        fail(t, "u_g u_{g^-1} pi(f) != pi(f 1_g) for " + name);
      // the closed-form u_g agrees with the decomposition-based
      // definition: u_g pi(phi) = pi(abar_g(phi) Delta_g)
      Vec abar_dg = zero_vec(cc.cp.field, cc.cp.alg.dim);
      for (std::size_t x = 0; x < pa.space; ++x) {
        int idx = cc.cp.pair_index[g][x];
        if (idx >= 0) abar_dg[static_cast<std::size_t>(idx)] = abar[x];
      }
      if (!(d.u[g].mul(piphi) == d.reg.act(abar_dg)))
        fail(t, "closed-form u_g deviates from the decomposition rule");
    }
    // kernel chain: Ker(pi) = Ker(Pi x U restricted to the direct sum)
    Matrix flat = Matrix::zero(cc.cp.field, d.total * d.total, a.dim);
    for (std::size_t b = 0; b < a.dim; ++b)
      for (std::size_t r = 0; r < d.total; ++r)
        for (std::size_t c = 0; c < d.total; ++c)
          flat.at(r * d.total + c, b) = d.pi_u[b].at(r, c);
    if (!(kernel(flat) == j.space))
      fail(t, "Ker(Pi x U) != J for " + name);
    // tau equivalence per orbit representative
    for (int rep : orbit_representatives(cc.cp.pa)) {
      auto tau = rho_equivalence_check(cc.cp, j, rep);
      if (!tau.ok)
        fail(t, "rho equivalence fails at rep " + std::to_string(rep) + ": " +
                    tau.witness);
    }
  }
  return t;
}

TaskResult check_section7(const CheckContext& cc) {
  TaskResult t{.name = "section7-preservation"};
  const Algebra& a = cc.cp.alg;
  int x0 = orbit_representatives(cc.cp.pa).front();
  InductionContext ctx = make_induction_context(cc.cp, x0);
  for (int i = 0; i < cc.opt.samples; ++i) {
    Ideal j = cc.sampler.ideal(a);
    Ideal k = cc.sampler.ideal(a);
    Ideal fj = f_of_ideal(ctx, j), fk = f_of_ideal(ctx, k);
    Ideal meet_f = ideal_combine(ctx.kh(), IdealOp::intersect, fj, fk);
    Ideal f_meet =
        f_of_ideal(ctx, ideal_combine(a, IdealOp::intersect, j, k));
    if (!f_meet.space.contains(meet_f.space))
      fail(t, "F(J) cap F(K) is not inside F(J cap K)");
    Ideal prod_f = ideal_combine(ctx.kh(), IdealOp::product, fj, fk);
    Ideal f_prod = f_of_ideal(ctx, ideal_combine(a, IdealOp::product, j, k));
    if (!f_prod.space.contains(prod_f.space))
      fail(t, "F(J) F(K) is not inside F(JK)");
  }
  if (cc.cp.field.is_prime_field()) {
    try {
      auto kh_ideals = enumerate_ideals(ctx.kh(), cc.opt.cap);
      for (const auto& i : kh_ideals) {
        Ideal ind = induce_ideal(ctx, i);
        bool p_in = ideal_is_prime(ctx.kh(), i, cc.opt.cap);
        bool m_in = ideal_is_meet_irreducible(ctx.kh(), i, cc.opt.cap);
        if (p_in && !ideal_is_prime(a, ind, cc.opt.cap))
          fail(t, "primeness not preserved by induction");
        if (m_in && !ideal_is_meet_irreducible(a, ind, cc.opt.cap))
          fail(t, "meet-irreducibility not preserved by induction");
      }
      t.objects.emplace_back("kh_ideals", std::to_string(kh_ideals.size()));
    } catch (const cap_exceeded_error&) {
      t.objects.emplace_back("deciders", "skipped (cap)");
    }
  }
  return t;
}

TaskResult check_transposition(const CheckContext& cc) {
  TaskResult t{.name = "transposition"};
  const auto& pa = cc.cp.pa;
  for (int x0 = 0; x0 < static_cast<int>(pa.space) && t.verdict; ++x0)
    for (int x1 = 0; x1 < static_cast<int>(pa.space) && t.verdict; ++x1) {
      TranspositionPair pair = make_transposition_pair(cc.cp, x0, x1);
      auto ideals0 = canonical_kh_ideals(cc, pair.ctx0);
      auto ideals1 = canonical_kh_ideals(cc, pair.ctx1);
      for (std::size_t idx0 = 0; idx0 < ideals0.size(); ++idx0) {
        const auto& [name, i0] = ideals0[idx0];
        Ideal t1 = transpose(pair, i0);
        Ideal via_psi = transpose_via_psi(pair, i0);
        Ideal via_sr = strongly_regular_transpose(pair, i0);
        if (!(t1.space == via_psi.space) || !(t1.space == via_sr.space)) {
          fail(t, "the three transposition routes disagree at (" +
                      std::to_string(x0) + "," + std::to_string(x1) +
                      ") on " + name);
          continue;
        }
        if (!admissible(pair.ctx1, t1))
          fail(t, "transposed ideal is not admissible");
        if (x0 == x1) {
          Ideal reduced = reduce_to_admissible(pair.ctx0, i0);
          if (!(t1.space == reduced.space))
            fail(t, "self-transposition differs from the admissible "
                    "reduction");
        }
        bool disjoint = !std::binary_search(pair.ctx0.od.orbit.begin(),
                                            pair.ctx0.od.orbit.end(), x1);
        if (disjoint && t1.space.dim() != pair.ctx1.kh().dim)
          fail(t, "disjoint orbits must transpose to the whole algebra");
        // one representative comparison per ideal here; the acceptance
        // suite runs the full cross product
        const auto& [name1, i1] =
            ideals1[std::min(idx0, ideals1.size() - 1)];
        auto rep = induced_comparison(pair, i0, i1);
        if (!rep.equivalences_hold || !rep.inclusion_equivalence ||
            !rep.orbit_consequence)
          fail(t, "comparison fails at (" + std::to_string(x0) + "," +
                      std::to_string(x1) + ") on (" + name + "," + name1 +
                      "): " + rep.witness);
      }
    }
  return t;
}

TaskResult check_normal_ideals(const CheckContext& cc) {
  TaskResult t{.name = "normal-ideals"};
  const auto& pa = cc.cp.pa;
  GroupAlgebra kg = build_group_algebra(pa.group, cc.cp.field);
  for (int x0 = 0; x0 < static_cast<int>(pa.space); ++x0) {
    InductionContext ctx = make_induction_context(cc.cp, x0);
    const GroupAlgebra& kh = ctx.maps.kh;
    // the adjoint partial action is a legitimate set-theoretic one
    auto rep = validate_action(adjoint_partial_action(pa.group, kh.sub));
    if (!rep.ok)
      fail(t, "adjoint partial action fails axioms: " + rep.to_string());
    // the augmentation ideal is normal relative to G
    Ideal aug = augmentation_ideal(kh);
    if (!is_normal_relative(kh, pa.group, aug))
      fail(t, "augmentation ideal is not normal at x0=" + std::to_string(x0));
    // J cap KH is normal for sampled ideals J of KG
    for (int i = 0; i < 3; ++i) {
      Ideal j = cc.sampler.ideal(kg.alg);
      std::vector<Vec> kh_rows;
      for (std::size_t idx = 0; idx < kh.sub.order(); ++idx)
        kh_rows.push_back(unit_vec(
            cc.cp.field, kg.alg.dim,
            static_cast<std::size_t>(kh.sub.elems[idx])));
      Subspace kh_inside = Subspace::span(cc.cp.field, kg.alg.dim, kh_rows);
      Subspace inter = intersect(j.space, kh_inside);
      std::vector<Vec> small;
      for (std::size_t r = 0; r < inter.dim(); ++r) {
        Vec big = inter.basis().row(r);
        Vec v = zero_vec(cc.cp.field, kh.alg.dim);
        for (std::size_t idx = 0; idx < kh.sub.order(); ++idx)
          v[idx] = big[static_cast<std::size_t>(kh.sub.elems[idx])];
        small.push_back(std::move(v));
      }
      Ideal restricted{Subspace::span(cc.cp.field, kh.alg.dim, small), false};
      if (!is_normal_relative(kh, pa.group, restricted))
        fail(t, "J cap KH fails normality at x0=" + std::to_string(x0));
      if (!admissible(ctx, restricted))
        fail(t, "a normal ideal failed admissibility at x0=" +
                    std::to_string(x0));
    }
    // exhaustive search for a non-normal ideal (prime fields)
    if (cc.cp.field.is_prime_field()) {
      try {
        auto all = enumerate_ideals(kh.alg, cc.opt.cap);
        int non_normal = 0;
        for (const auto& i : all)
          if (!is_normal_relative(kh, pa.group, i)) ++non_normal;
        t.objects.emplace_back("non_normal@x" + std::to_string(x0),
                               std::to_string(non_normal));
      } catch (const cap_exceeded_error&) {
        t.objects.emplace_back("non_normal@x" + std::to_string(x0),
                               "skipped (cap)");
      }
    }
  }
  return t;
}

TaskResult check_simplicity(const CheckContext& cc) {
  TaskResult t{.name = "simplicity-freeness"};
  auto simple = algebra_is_simple(cc.cp.alg, cc.opt.cap);
  auto rep = freeness_report(cc.cp.pa);
  if (simple.has_value()) {
    t.objects.emplace_back("simple", *simple ? "true" : "false");
    if (*simple && !rep.action_topologically_free)
      fail(t, "simple crossed product with a non-free action");
  } else {
    t.objects.emplace_back("simple", "undecided");
  }
  return t;
}

TaskResult run_single(const Scenario& s, const CrossedProduct& cp,
                      const std::string& cmd, const RunOptions& opt);

TaskResult run_declared_task(const Scenario& s, const CrossedProduct& cp,
                             const ScenarioTask& task,
                             const RunOptions& opt) {
  RunOptions sub = opt;
  if (task.point >= 0) sub.point = task.point;
  if (task.point2 >= 0) sub.point2 = task.point2;
  if (!task.ideal.empty()) sub.ideal = task.ideal;
  if (!task.ideal2.empty()) sub.ideal2 = task.ideal2;
  TaskResult r = run_single(s, cp, task.cmd, sub);
  r.name = task.name;
  return r;
}

TaskResult run_single(const Scenario& s, const CrossedProduct& cp,
                      const std::string& cmd, const RunOptions& opt) {
  TaskResult t{.name = cmd};
  if (cmd == "validate") {
    auto rep = validate_action(cp.pa);
    if (!rep.ok) fail(t, rep.to_string());
    return t;
  }
  if (cmd == "info") {
    t.objects.emplace_back("field", cp.field.name());
    t.objects.emplace_back("group_order", std::to_string(cp.pa.group.order));
    t.objects.emplace_back("space_size", std::to_string(cp.pa.space));
    t.objects.emplace_back("dim", std::to_string(cp.alg.dim));
    std::ostringstream basis;
    for (std::size_t i = 0; i < cp.alg.dim; ++i)
      basis << (i ? "," : "") << cp.alg.labels[i];
    t.objects.emplace_back("basis", basis.str());
    if (cp.alg.associativity_witness()) fail(t, "associativity fails");
    if (!cp.alg.unit_ok()) fail(t, "unit fails");
    return t;
  }
  if (cmd == "orbits") {
    for (int x = 0; x < static_cast<int>(cp.pa.space); ++x) {
      OrbitData od = orbit_data(cp.pa, x);
      PointFreeness pf = point_freeness(cp.pa, x);
      std::ostringstream os;
      auto names = [&](const std::vector<int>& xs, bool pts) {
        std::ostringstream o;
        for (std::size_t i = 0; i < xs.size(); ++i)
          o << (i ? "," : "")
            << (pts ? cp.pa.point_names[xs[i]] : cp.pa.group.names[xs[i]]);
        return o.str();
      };
      os << "orbit={" << names(od.orbit, true) << "} H={" << names(od.H, false)
         << "} S={" << names(od.S, false) << "} R={" << names(od.R, false)
         << "} top_free=" << (pf.topologically_free ? "yes" : "no")
         << " strongly_regular=" << (pf.strongly_regular ? "yes" : "no");
      t.objects.emplace_back("point " + cp.pa.point_names[x], os.str());
    }
    auto rep = freeness_report(cp.pa);
    t.objects.emplace_back("action_topologically_free",
                           rep.action_topologically_free ? "true" : "false");
    return t;
  }
  if (cmd == "induce" || cmd == "admissible") {
    if (opt.ideal.empty()) throw scenario_error("--ideal NAME is required");
    InductionContext ctx = make_induction_context(cp, opt.point);
    Ideal i = resolve_kh_ideal(s, cp, ctx, opt.ideal);
    if (cmd == "induce") {
      Ideal ind = induce_ideal(ctx, i);
      t.objects.emplace_back("ideal", subspace_text(i.space));
      t.objects.emplace_back("induced", subspace_text(ind.space));
    } else {
      Ideal reduced = reduce_to_admissible(ctx, i);
      bool adm = reduced.space == i.space;
      t.objects.emplace_back("I_prime", subspace_text(reduced.space));
      t.objects.emplace_back("admissible", adm ? "true" : "false");
      t.verdict = adm;
      if (!adm) t.witness = "I' is a proper sub-ideal of I";
    }
    return t;
  }
  if (cmd == "decompose") {
    if (opt.ideal.empty()) throw scenario_error("--ideal NAME is required");
    Ideal j = resolve_cp_ideal(s, cp, opt.ideal);
    auto rep = effros_hahn_decompose(cp, j);
    for (const auto& e : rep.entries) {
      t.objects.emplace_back("I_prime@" + cp.pa.point_names[e.rep],
                             subspace_text(e.i_prime.space));
      t.objects.emplace_back("Ind@" + cp.pa.point_names[e.rep],
                             subspace_text(e.induced.space));
    }
    t.objects.emplace_back("intersection", subspace_text(rep.intersection.space));
    t.verdict = rep.verdict;
    t.witness = rep.witness;
    return t;
  }
  if (cmd == "transpose") {
    if (opt.ideal.empty()) throw scenario_error("--ideal NAME is required");
    int x1 = opt.point2 >= 0 ? opt.point2 : opt.point;
    TranspositionPair pair = make_transposition_pair(cp, opt.point, x1);
    Ideal i0 = resolve_kh_ideal(s, cp, pair.ctx0, opt.ideal);
    Ideal t1 = transpose(pair, i0);
    Ideal via_psi = transpose_via_psi(pair, i0);
    Ideal via_sr = strongly_regular_transpose(pair, i0);
    t.objects.emplace_back("T1", subspace_text(t1.space));
    t.objects.emplace_back("via_psi", subspace_text(via_psi.space));
    t.objects.emplace_back("strongly_regular", subspace_text(via_sr.space));
    bool agree = t1.space == via_psi.space && t1.space == via_sr.space;
    t.verdict = agree;
    if (!agree) t.witness = "transposition routes disagree";
    return t;
  }
  if (cmd == "compare") {
    if (opt.ideal.empty() || opt.ideal2.empty())
      throw scenario_error("--ideal and --ideal2 are required");
    int x1 = opt.point2 >= 0 ? opt.point2 : opt.point;
    TranspositionPair pair = make_transposition_pair(cp, opt.point, x1);
    Ideal i0 = resolve_kh_ideal(s, cp, pair.ctx0, opt.ideal);
    Ideal i1 = resolve_kh_ideal(s, cp, pair.ctx1, opt.ideal2);
    auto rep = induced_comparison(pair, i0, i1);
    t.objects.emplace_back("Ind0", subspace_text(rep.ind0.space));
    t.objects.emplace_back("Ind1", subspace_text(rep.ind1.space));
    t.objects.emplace_back("T1(I0)", subspace_text(rep.t1_of_i0.space));
    t.objects.emplace_back("T0(I1)", subspace_text(rep.t0_of_i1.space));
    t.objects.emplace_back("induced_equal",
                           rep.induced_equal ? "true" : "false");
    t.verdict = rep.equivalences_hold && rep.inclusion_equivalence &&
                rep.orbit_consequence;
    t.witness = rep.witness;
    return t;
  }
  throw scenario_error("unknown command \"" + cmd + "\"");
}

}  // namespace

Report run_command(const Scenario& s, const std::string& cmd,
                   const RunOptions& opt) {
  Report rep;
  rep.scenario = s.name;
  rep.seed = opt.seed;
  CrossedProduct cp = build_crossed_product(s.action, s.field);
  if (cmd != "check-all") {
    Timer timer;
    TaskResult t = run_single(s, cp, cmd, opt);
    t.ms = timer.ms();
    rep.tasks.push_back(std::move(t));
    return rep;
  }
  Sampler sampler(opt.seed);
  CheckContext cc{s, cp, opt, sampler};
  using Check = TaskResult (*)(const CheckContext&);
  const Check checks[] = {
      check_action_axioms, check_crossed_product, check_orbit_invariants,
      check_freeness,      check_expectation_maps, check_induction_form,
      check_induced_ideals, check_induced_modules, check_effros_hahn,
      check_section7,      check_transposition,   check_normal_ideals,
      check_simplicity};
  for (auto check : checks) {
    Timer timer;
    TaskResult t = check(cc);
    t.ms = timer.ms();
    rep.tasks.push_back(std::move(t));
  }
  for (const auto& task : s.tasks) {
    Timer timer;
    TaskResult t = run_declared_task(s, cp, task, opt);
    t.ms = timer.ms();
    rep.tasks.push_back(std::move(t));
  }
  return rep;
}

std::string report_to_json(const Report& r, bool timings) {
  ordered_json j;
  j["scenario"] = r.scenario;
  j["seed"] = r.seed;
  j["tasks"] = ordered_json::array();
  for (const auto& t : r.tasks) {
    ordered_json tj;
    tj["name"] = t.name;
    tj["verdict"] = t.verdict;
    tj["witness"] = t.witness.empty() ? ordered_json(nullptr)
                                      : ordered_json(t.witness);
    tj["objects"] = ordered_json::object();
    for (const auto& [k, v] : t.objects) tj["objects"][k] = v;
    if (timings) tj["ms"] = t.ms;
    j["tasks"].push_back(tj);
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "scenario " << r.scenario << " (seed " << r.seed << ")\n";
  for (const auto& t : r.tasks) {
    os << "  [" << (t.verdict ? "pass" : "FAIL") << "] " << t.name;
    if (!t.witness.empty()) os << " -- " << t.witness;
    os << "\n";
    for (const auto& [k, v] : t.objects)
      os << "      " << k << ": " << v << "\n";
  }
  os << (r.all_ok() ? "all checks passed" : "FAILURES PRESENT") << "\n";
  return os.str();
}

}  // namespace pcpw
