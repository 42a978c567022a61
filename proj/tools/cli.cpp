#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "toml.hpp"

#include "isokit/adlv.hpp"
#include "isokit/dagger.hpp"
#include "isokit/kottwitz_set.hpp"
#include "isokit/newton_polygon.hpp"

namespace isokit::cli {

// ------------------------------------------------------------------ JSON

Json to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const Rat& x) { return Json(format(x)); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

IntVector int_vector_from_json(const Json& j) {
  IntVector out;
  for (const auto& x : j) out.push_back(x.is_string() ? Int(x.get<std::string>()) : Int(x.get<long>()));
  return out;
}

RatVector rat_vector_from_json(const Json& j) {
  RatVector out;
  for (const auto& x : j) {
    Rat q(x.get<std::string>());
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

namespace {

Json levi_json(const LeviSubset& j) {
  Json out = Json::array();
  for (auto i : j.members()) out.push_back(i);
  return out;
}

Json polygon_json(const NewtonPolygon& p) {
  Json bps = Json::array();
  for (const auto& [x, y] : p.breakpoints()) bps.push_back(Json::array({to_json(x), to_json(y)}));
  Json slopes = Json::array();
  for (const auto& s : p.slopes()) slopes.push_back(to_json(s));
  return Json{{"slopes", slopes}, {"breakpoints", bps}};
}

// ------------------------------------------------------------------ TOML

const std::set<std::string> kTopKeys = {"mu", "generic", "group", "frobenius", "triple"};
const std::set<std::string> kGroupKeys = {"preset", "n", "name", "rank", "roots", "coroots", "base"};
const std::set<std::string> kFrobeniusKeys = {"kind", "matrix", "permutation", "res_degree"};
const std::set<std::string> kTripleKeys = {"centralizer", "mu_h", "global", "inf", "p", "l", "tamper"};
const std::set<std::string> kTamperKeys = {"delta_shift", "beta_l_offset"};

void reject_unknown_keys(const toml::table& t, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : t)
    if (!allowed.contains(std::string(key.str())))
      throw SpecError("unknown key '" + std::string(key.str()) + "' in " + where);
}

long read_integer(const toml::node& node, const std::string& what) {
  const auto v = node.value<int64_t>();
  if (!v || !node.is_integer()) throw SpecError(what + " must be an integer");
  return static_cast<long>(*v);
}

std::size_t read_size(const toml::node& node, const std::string& what) {
  const long v = read_integer(node, what);
  if (v < 0) throw SpecError(what + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

const toml::array& read_array(const toml::node& node, const std::string& what) {
  const auto* arr = node.as_array();
  if (!arr) throw SpecError(what + " must be an array");
  return *arr;
}

IntVector read_vector(const toml::node& node, const std::string& what) {
  IntVector out;
  for (const auto& el : read_array(node, what)) out.push_back(Int(read_integer(el, what + " entries")));
  return out;
}

std::vector<IntVector> read_vectors(const toml::node& node, const std::string& what) {
  std::vector<IntVector> out;
  for (const auto& el : read_array(node, what)) out.push_back(read_vector(el, what + " rows"));
  return out;
}

IntMatrix read_matrix(const toml::node& node, const std::string& what) {
  const auto rows = read_vectors(node, what);
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw SpecError(what + " has rows of different lengths");
  return IntMatrix::from_rows(rows, cols);
}

std::vector<IntMatrix> read_matrices(const toml::node& node, const std::string& what) {
  std::vector<IntMatrix> out;
  for (const auto& el : read_array(node, what)) out.push_back(read_matrix(el, what + " entries"));
  return out;
}

const toml::table* optional_table(const toml::table& t, const std::string& key) {
  const auto* node = t.get(key);
  if (!node) return nullptr;
  const auto* tbl = node->as_table();
  if (!tbl) throw SpecError("[" + key + "] must be a table");
  return tbl;
}

BasedRootDatum read_group(const toml::table& group, std::string& preset, std::size_t& parameter) {
  reject_unknown_keys(group, kGroupKeys, "[group]");
  if (const auto* node = group.get("preset")) {
    const auto name = node->value<std::string>();
    if (!name) throw SpecError("group.preset must be a string");
    const auto* n = group.get("n");
    if (!n) throw SpecError("group.n is required with a preset");
    preset = *name;
    parameter = read_size(*n, "group.n");
    return presets::preset(preset, parameter);
  }
  const auto* rank = group.get("rank");
  const auto* roots = group.get("roots");
  const auto* coroots = group.get("coroots");
  const auto* base = group.get("base");
  if (!rank || !roots || !coroots || !base)
    throw SpecError("[group] needs either preset and n, or rank, roots, coroots and base");
  std::vector<std::size_t> base_idx;
  for (const auto& el : read_array(*base, "group.base")) base_idx.push_back(read_size(el, "group.base entries"));
  std::string name = "custom";
  if (const auto* n = group.get("name")) name = n->value<std::string>().value_or("custom");
  return BasedRootDatum(name, read_size(*rank, "group.rank"), read_vectors(*roots, "group.roots"),
                        read_vectors(*coroots, "group.coroots"), std::move(base_idx));
}

FrobeniusDatum read_frobenius(const toml::table* frob, const BasedRootDatum& rd, const std::string& preset,
                              std::size_t parameter, std::string& kind) {
  kind = "split";
  if (frob) {
    reject_unknown_keys(*frob, kFrobeniusKeys, "[frobenius]");
    if (const auto* k = frob->get("kind")) kind = k->value<std::string>().value_or("");
  }
  if (kind == "split") return FrobeniusDatum::split(rd.rank());
  if (kind == "flip") {
    if (preset == "GL") return presets::gl_flip(parameter);
    if (preset == "SL" || preset == "PGL") return presets::a_type_flip(parameter);
    throw SpecError("frobenius kind 'flip' needs a GL, SL or PGL preset");
  }
  if (kind == "matrix") {
    const auto* m = frob->get("matrix");
    if (!m) throw SpecError("frobenius kind 'matrix' needs frobenius.matrix");
    return FrobeniusDatum(read_matrix(*m, "frobenius.matrix"));
  }
  if (kind == "permutation") {
    const auto* p = frob->get("permutation");
    if (!p) throw SpecError("frobenius kind 'permutation' needs frobenius.permutation");
    std::vector<std::size_t> perm;
    for (const auto& el : read_array(*p, "frobenius.permutation")) perm.push_back(read_size(el, "permutation entries"));
    return FrobeniusDatum::permutation(perm);
  }
  throw SpecError("unknown frobenius kind '" + kind + "' (expected split, flip, matrix or permutation)");
}

TripleSpec read_triple(const toml::table& t) {
  reject_unknown_keys(t, kTripleKeys, "[triple]");
  TripleSpec out;
  if (const auto* c = t.get("centralizer")) {
    const auto v = c->value<std::string>();
    if (!v) throw SpecError("triple.centralizer must be a string");
    out.centralizer = *v;
  }
  if (const auto* n = t.get("mu_h")) out.mu_h = read_vector(*n, "triple.mu_h");
  if (const auto* n = t.get("global")) out.global_generators = read_matrices(*n, "triple.global");
  if (const auto* n = t.get("inf")) out.inf = read_matrices(*n, "triple.inf");
  if (const auto* n = t.get("p")) out.p = read_matrices(*n, "triple.p");
  if (const auto* n = t.get("l")) out.l = read_matrices(*n, "triple.l");
  if (const auto* tamper = optional_table(t, "tamper")) {
    reject_unknown_keys(*tamper, kTamperKeys, "[triple.tamper]");
    if (const auto* n = tamper->get("delta_shift")) out.tampering.delta_shift = read_vector(*n, "delta_shift");
    if (const auto* n = tamper->get("beta_l_offset")) out.tampering.beta_l_offset = read_vector(*n, "beta_l_offset");
  }
  return out;
}

}  // namespace

GroupSpec parse_spec(const std::string& toml_text) {
  toml::table top;
  try {
    top = toml::parse(toml_text);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << "TOML syntax error: " << e.description() << " at line " << e.source().begin.line;
    throw SpecError(os.str());
  }
  reject_unknown_keys(top, kTopKeys, "the input file");
  try {
    const auto* group = optional_table(top, "group");
    if (!group) throw SpecError("missing [group] table");
    std::string preset;
    std::size_t parameter = 0;
    BasedRootDatum rd = read_group(*group, preset, parameter);

    const auto* frob = optional_table(top, "frobenius");
    std::string kind;
    FrobeniusDatum fd = read_frobenius(frob, rd, preset, parameter, kind);
    if (fd.rank() != rd.rank()) throw SpecError("Frobenius matrix size differs from the lattice rank");
    if (!fd.is_pinned_for(rd)) throw SpecError("Frobenius does not preserve the base of " + rd.name());

    std::size_t res_degree = 1;
    if (frob)
      if (const auto* k = frob->get("res_degree")) res_degree = read_size(*k, "frobenius.res_degree");
    if (res_degree == 0) throw SpecError("frobenius.res_degree must be at least 1");
    if (res_degree > 1) {
      auto [res_rd, res_fd] = presets::restriction_of_scalars(rd, fd, res_degree);
      rd = std::move(res_rd);
      fd = std::move(res_fd);
    }

    const auto* mu_node = top.get("mu");
    if (!mu_node) throw SpecError("missing top-level mu");
    IntVector mu = read_vector(*mu_node, "mu");
    if (mu.size() != rd.rank())
      throw SpecError("mu has " + std::to_string(mu.size()) + " entries but the lattice has rank " +
                      std::to_string(rd.rank()));
    bool generic = false;
    if (const auto* g = top.get("generic")) {
      const auto v = g->value<bool>();
      if (!v || !g->is_boolean()) throw SpecError("generic must be a boolean");
      generic = *v;
    }
    std::optional<TripleSpec> triple;
    if (const auto* t = optional_table(top, "triple")) triple = read_triple(*t);

    return GroupSpec{std::move(rd), std::move(fd), std::move(mu), generic, preset, parameter, res_degree, kind,
                     std::move(triple)};
  } catch (const Error& e) {
    throw SpecError(e.what());
  }
}

GroupSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

IntVector effective_mu(const GroupSpec& spec, Orientation orientation) {
  return orientation == Orientation::naive ? -spec.mu : spec.mu;
}

// ------------------------------------------------------------------ commands

namespace {

Json report_header(const std::string& command, const GroupSpec& spec, const IntVector& mu) {
  Json group{{"name", spec.datum.name()}, {"rank", spec.datum.rank()}};
  if (!spec.preset.empty()) {
    group["preset"] = spec.preset;
    group["n"] = spec.preset_parameter;
  }
  group["res_degree"] = spec.res_degree;
  Json frobenius{{"kind", spec.frobenius_kind}, {"order", spec.frobenius.order()},
                 {"matrix", to_json(spec.frobenius.sigma())}};
  return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"group", group},
              {"frobenius", frobenius},           {"mu", to_json(mu)}};
}

StrataPoset strata_of(const GroupSpec& spec, const IntVector& mu) {
  return enumerate(spec.datum, spec.frobenius, mu, {spec.generic, Execution::parallel});
}

std::vector<std::size_t> selected_classes(const StrataPoset& poset, const Options& options) {
  if (!options.class_id) {
    std::vector<std::size_t> all(poset.classes.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  if (*options.class_id >= poset.classes.size())
    throw SpecError("class id " + std::to_string(*options.class_id) + " out of range (the poset has " +
                    std::to_string(poset.classes.size()) + " classes)");
  return {*options.class_id};
}

Json class_json(const KottwitzClass& c, std::size_t id, const StrataPoset& poset) {
  return Json{{"id", id},
              {"levi", levi_json(c.levi)},
              {"kappa", to_json(c.kappa)},
              {"kappa_g", to_json(c.kappa_g)},
              {"representative", to_json(c.representative)},
              {"newton", to_json(c.newton)},
              {"mu_ordinary", poset.maximum() == id},
              {"basic", poset.minimum() == id}};
}

}  // namespace

CommandResult cmd_strata(const GroupSpec& spec, const Options& options) {
  const IntVector mu = effective_mu(spec, options.orientation);
  const StrataPoset poset = strata_of(spec, mu);
  Json report = report_header("strata", spec, mu);
  report["generic"] = spec.generic;
  report["mu_dominant"] = to_json(dominant_representative(spec.datum, mu).first);
  report["mu_natural"] = to_json(mu_natural(spec.datum, spec.frobenius, mu));
  report["mu_bar"] = to_json(galois_average(spec.frobenius, spec.datum, mu));
  Json classes = Json::array();
  for (std::size_t i = 0; i < poset.classes.size(); ++i) classes.push_back(class_json(poset.classes[i], i, poset));
  report["classes"] = classes;
  Json edges = Json::array();
  for (auto [lo, hi] : poset.hasse) edges.push_back(Json::array({lo, hi}));
  report["hasse"] = edges;
  report["mu_ordinary"] = poset.maximum() ? Json(*poset.maximum()) : Json(nullptr);
  report["basic"] = poset.minimum() ? Json(*poset.minimum()) : Json(nullptr);
  return {kOk, std::move(report), "", {}};
}

namespace {

/// Brute-force polygon set for a split GL_n or GSp_2g group, or an error message.
std::vector<NewtonPolygon> polygon_oracle(const GroupSpec& spec, const IntVector& mu) {
  const bool split = spec.res_degree == 1 && spec.frobenius.sigma().is_identity();
  if (!split || (spec.preset != "GL" && spec.preset != "GSp"))
    throw Error(ErrorCode::BadInput, "the polygon oracle covers split GL and GSp presets only");
  const IntVector dom = dominant_representative(spec.datum, mu).first;
  const IntVector weights = spec.datum.standard_weights()->apply(dom);
  for (const auto& w : weights)
    if (w != 0 && w != 1) throw Error(ErrorCode::BadInput, "the polygon oracle needs mu with weights in {0, 1}");
  if (spec.preset == "GSp") {
    const std::size_t g = spec.preset_parameter / 2;
    if (dom != presets::siegel_cocharacter(g))
      throw Error(ErrorCode::BadInput, "the GSp polygon oracle needs the Siegel cocharacter");
    return enumerate_gsp(g);
  }
  const NewtonPolygon bound = polygon_of(spec.datum, to_rational(dom));
  return on_or_above(enumerate_gl(bound.width(), bound.height().get_ui()), bound);
}

}  // namespace

Json polygon_diff(std::vector<NewtonPolygon> strata, std::vector<NewtonPolygon> oracle) {
  std::sort(strata.begin(), strata.end());
  std::sort(oracle.begin(), oracle.end());
  Json only_strata = Json::array();
  Json only_oracle = Json::array();
  for (const auto& p : strata)
    if (!std::binary_search(oracle.begin(), oracle.end(), p)) only_strata.push_back(polygon_json(p));
  for (const auto& p : oracle)
    if (!std::binary_search(strata.begin(), strata.end(), p)) only_oracle.push_back(polygon_json(p));
  const bool agree = only_strata.empty() && only_oracle.empty();
  return Json{{"count", oracle.size()},
              {"agree", agree},
              {"only_in_strata", std::move(only_strata)},
              {"only_in_oracle", std::move(only_oracle)}};
}

CommandResult cmd_polygons(const GroupSpec& spec, const Options& options) {
  if (!spec.datum.standard_weights())
    throw Error(ErrorCode::BadInput, "polygons need a datum with a standard representation (GL or GSp)");
  const IntVector mu = effective_mu(spec, options.orientation);
  const StrataPoset poset = strata_of(spec, mu);
  Json report = report_header("polygons", spec, mu);
  CommandResult result;

  std::vector<NewtonPolygon> polygons;
  Json strata = Json::array();
  const bool write_files = options.format != "json" && !options.out_dir.empty();
  if (write_files) std::filesystem::create_directories(options.out_dir);
  for (std::size_t i = 0; i < poset.classes.size(); ++i) {
    NewtonPolygon p = polygon_of(spec.datum, poset.classes[i].newton);
    Json entry = polygon_json(p);
    entry["id"] = i;
    if (options.format != "json") {
      const std::string document = render(p, options.format);
      if (write_files) {
        const auto path = options.out_dir / ("stratum_" + std::to_string(i) + "." + options.format);
        std::ofstream(path) << document;
        result.files.push_back(path);
        entry["file"] = path.filename().string();
      }
    }
    strata.push_back(std::move(entry));
    polygons.push_back(std::move(p));
  }
  report["format"] = options.format;
  report["strata"] = strata;

  if (options.oracle) {
    Json diff = polygon_diff(polygons, polygon_oracle(spec, mu));
    const bool agree = diff["agree"].get<bool>();
    report["oracle"] = std::move(diff);
    if (!agree) {
      result.message = "polygon oracle disagrees with the strata";
      if (options.strict) result.exit_code = kOracleMismatch;
    }
  }
  result.report = std::move(report);
  return result;
}

CommandResult cmd_dagger(const GroupSpec& spec, const Options& options) {
  const IntVector mu = effective_mu(spec, options.orientation);
  const StrataPoset poset = strata_of(spec, mu);
  Json report = report_header("dagger", spec, mu);
  Json witnesses = Json::array();
  for (auto id : selected_classes(poset, options)) {
    const auto& cls = poset.classes[id];
    const DaggerWitness w = find_witness(spec.datum, spec.frobenius, mu, cls);
    const FinAbGroup pi1_m = pi1_coinvariants(spec.datum, spec.frobenius, cls.levi);
    Json transcript{
        {"kappa_match", pi1_m.element(w.mu_prime) == cls.kappa},
        {"elliptic", is_elliptic_on(spec.datum, cls.levi, w.torus.action)},
        {"newton_relation", w.newton_check == cls.newton},
    };
    Json word = Json::array();
    for (auto i : w.torus.twist.word) word.push_back(i);
    witnesses.push_back(Json{{"class", id},
                             {"levi", levi_json(w.levi)},
                             {"twist_word", word},
                             {"action", to_json(w.torus.action)},
                             {"split_degree", w.torus.split_degree},
                             {"mu_prime", to_json(w.mu_prime)},
                             {"kappa", to_json(w.kappa)},
                             {"norm", to_json(norm(w.torus.action, w.mu_prime, w.torus.split_degree))},
                             {"newton_check", to_json(w.newton_check)},
                             {"newton", to_json(cls.newton)},
                             {"transcript", transcript}});
  }
  report["witnesses"] = witnesses;
  return {kOk, std::move(report), "", {}};
}

CommandResult cmd_triple(const GroupSpec& spec, const Options& options) {
  const IntVector mu = effective_mu(spec, options.orientation);
  const StrataPoset poset = strata_of(spec, mu);
  const TripleSpec triple = spec.triple.value_or(TripleSpec{});
  Json report = report_header("triple", spec, mu);
  Json certificates = Json::array();
  std::vector<std::string> rejected;
  for (auto id : selected_classes(poset, options)) {
    const DaggerWitness w = find_witness(spec.datum, spec.frobenius, mu, poset.classes[id]);
    GlobalTorusDatum gtd = default_global_datum(spec.datum, spec.frobenius, w);
    if (triple.inf) gtd.infinity.generators = *triple.inf;
    if (triple.p) gtd.p.generators = *triple.p;
    if (triple.l) gtd.l.generators = *triple.l;
    if (triple.global_generators) {
      gtd.global_generators = *triple.global_generators;
    } else {
      gtd.global_generators.clear();
      for (const auto* local : {&gtd.infinity, &gtd.p, &gtd.l})
        for (const auto& g : local->generators) gtd.global_generators.push_back(g);
    }
    const IntVector mu_h = triple.mu_h.value_or(default_mu_h(spec.datum, spec.frobenius, w));
    const TripleCertificate cert =
        assemble_certificate(spec.datum, spec.frobenius, gtd, w, mu, mu_h, triple.centralizer, triple.tampering);

    Json checks = Json::array();
    std::vector<std::string> failed;
    for (const auto& c : cert.checks) {
      checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      if (!c.passed) failed.push_back(c.name);
    }
    Json factors = Json::array();
    for (const auto& f : cert.invariant.invariant_factors) factors.push_back(to_json(f));
    certificates.push_back(Json{
        {"class", id},
        {"accepted", cert.accepted},
        {"delta", Json{{"valuation", to_json(cert.delta.valuation)}, {"degree", cert.delta.degree}}},
        {"gamma0_valuation", to_json(cert.gamma0_valuation)},
        {"gamma_l_class", to_json(cert.gamma_l_class)},
        {"mu_h", to_json(mu_h)},
        {"invariant", Json{{"dual_invariant_factors", factors},
                           {"character", to_json(cert.invariant.character)},
                           {"well_defined", cert.invariant.well_defined},
                           {"image", to_json(cert.invariant.image)},
                           {"vanishes", cert.invariant.vanishes}}},
        {"checks", checks}});
    if (!cert.accepted) {
      std::string names;
      for (const auto& f : failed) names += (names.empty() ? "" : ", ") + f;
      rejected.push_back("class " + std::to_string(id) + " rejected: " + names);
    }
  }
  report["certificates"] = certificates;
  CommandResult result{kOk, std::move(report), "", {}};
  if (!rejected.empty()) {
    result.exit_code = kTripleRejected;
    for (const auto& r : rejected) result.message += r + "\n";
  }
  return result;
}

CommandResult cmd_ordinary(const GroupSpec& spec, const Options& options) {
  const IntVector mu = effective_mu(spec, options.orientation);
  const IntVector dom = dominant_representative(spec.datum, mu).first;
  Json orbit = Json::array();
  IntVector x = dom;
  for (std::size_t i = 0; i < spec.frobenius.order(); ++i) {
    orbit.push_back(to_json(x));
    x = spec.frobenius.apply(x);
  }
  Json report = report_header("ordinary", spec, mu);
  report["mu_dominant"] = to_json(dom);
  report["sigma_orbit"] = orbit;
  report["ordinary_nonempty"] = is_ordinary_nonempty(spec.datum, spec.frobenius, mu);
  return {kOk, std::move(report), "", {}};
}

CommandResult run_command(const std::string& name, const GroupSpec& spec, const Options& options) {
  try {
    if (name == "strata") return cmd_strata(spec, options);
    if (name == "polygons") return cmd_polygons(spec, options);
    if (name == "dagger") return cmd_dagger(spec, options);
    if (name == "triple") return cmd_triple(spec, options);
    if (name == "ordinary") return cmd_ordinary(spec, options);
    return {kParseError, Json(), "unknown command '" + name + "'", {}};
  } catch (const SpecError& e) {
    return {kParseError, Json(), e.what(), {}};
  } catch (const Error& e) {
    return {kComputationError, Json(), e.what(), {}};
  }
}

std::vector<std::string> validate_strata_report(const GroupSpec& spec, const Json& report, Orientation orientation) {
  std::vector<std::string> problems;
  const auto& rd = spec.datum;
  const auto& fd = spec.frobenius;
  const IntVector mu = effective_mu(spec, orientation);
  if (report.value("schema_version", -1) != kSchemaVersion) problems.push_back("schema_version mismatch");
  if (int_vector_from_json(report.at("mu")) != mu) problems.push_back("mu differs from the input file");
  const RatVector mu_bar = galois_average(fd, rd, mu);
  const IntVector natural = mu_natural(rd, fd, mu);
  const auto& classes = report.at("classes");
  std::vector<RatVector> newton;
  for (const auto& c : classes) {
    const std::string tag = "class " + std::to_string(c.at("id").get<std::size_t>());
    std::vector<std::size_t> members;
    for (const auto& i : c.at("levi")) members.push_back(i.get<std::size_t>());
    const LeviSubset j(members);
    const RatVector nu = rat_vector_from_json(c.at("newton"));
    const IntVector rep = int_vector_from_json(c.at("representative"));
    newton.push_back(nu);
    if (!rd.is_dominant(nu)) {
      problems.push_back(tag + ": Newton point not dominant");
      continue;
    }
    if (centralizer_levi(rd, nu) != j) problems.push_back(tag + ": centralizer differs from the Levi");
    if (!dominance_leq(rd, nu, mu_bar)) problems.push_back(tag + ": Newton point not below mu-bar");
    if (int_vector_from_json(c.at("kappa_g")) != natural) problems.push_back(tag + ": kappa_g differs from mu^natural");
    if (pi1_coinvariants(rd, fd, j).element(rep) != int_vector_from_json(c.at("kappa")))
      problems.push_back(tag + ": kappa is not the class of the representative");
    if (newton_of_basic(rd, fd, j, rep) != nu) problems.push_back(tag + ": Newton point does not match kappa");
  }
  for (const auto& e : report.at("hasse")) {
    const auto lo = e.at(0).get<std::size_t>();
    const auto hi = e.at(1).get<std::size_t>();
    if (lo >= newton.size() || hi >= newton.size() || lo == hi || !dominance_leq(rd, newton[lo], newton[hi]))
      problems.push_back("Hasse edge " + std::to_string(lo) + " -> " + std::to_string(hi) + " is not upward");
  }
  return problems;
}

}  // namespace isokit::cli
