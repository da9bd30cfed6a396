#include "cusp/cli.hpp"

#include <sstream>

#include "cusp/boundary.hpp"
#include "cusp/errors.hpp"
#include "cusp/expansions.hpp"
#include "cusp/independence.hpp"
#include "cusp/zeta.hpp"

namespace cusp {

namespace {

constexpr int kZetaTerms = 10;

std::string istr(const Int& x) { return x.str(); }

Json header(const JobConfig& cfg, const std::string& ring) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = cfg.command;
  if (!ring.empty()) j["ring"] = ring;
  return j;
}

Json expansion(const ZetaFunction& z) {
  auto ex = z.expand(0);
  const std::int64_t from = ex.empty() ? 0 : std::min<std::int64_t>(0, ex.begin()->first);
  Json vals = Json::array();
  for (std::int64_t n = from; n < from + kZetaTerms; ++n) vals.push_back(rat_str(z.coeff(n)));
  return Json{{"from", from}, {"coefficients", vals}};
}

Json zeta_json(const ZetaFunction& z) {
  Json j{{"function", z.str()}};
  j.update(expansion(z));
  return j;
}

Ideal level_or_default(const Ring& R, const JobConfig& cfg) {
  return cfg.level.empty() ? R.nontrivial_representatives()[0] : R.parse_ideal(cfg.level);
}

void require_rank(int r) {
  if (r < 2) throw ParameterError("rank r must be at least 2");
}

Json report_json(const Ring& R, const OrderReport& o) {
  Json values = Json::object();
  for (auto& [k, v] : o.values) values[k] = rat_str(v);
  return Json{{"target", o.target},     {"cusp", R.pic_str(o.cls)}, {"order", rat_str(o.order)},
              {"unit", unit_str(o.unit)}, {"integral", o.integral},   {"values", values}};
}

// ---- zeta ----

CommandResult cmd_zeta(const JobConfig& cfg) {
  RingPtr R = Ring::parse(cfg.ring);
  require_rank(cfg.r);
  const std::uint64_t q = R->q();
  Json j = header(cfg, R->spec());
  j["r"] = cfg.r;
  j["invariants"] = {{"q", q}, {"genus", R->genus()}, {"d_inf", R->d_inf()}, {"class_number", R->class_number()}};
  CurveZeta cz = curve_zeta(*R);
  j["curve"] = {{"P", cz.P.str()}, {"trace", cz.trace}, {"h", cz.h_curve}, {"Z_K", cz.Z.str()}};
  ZetaFunction ZA = ring_zeta(*R);
  j["Z_A"] = zeta_json(ZA);
  Json classes = Json::array();
  for (int c = 0; c < R->class_number(); ++c) {
    ZetaFunction z = class_zeta(*R, c);
    Json e{{"class", R->pic_str(c)}};
    e.update(zeta_json(z));
    e["value_at_1-r"] = rat_str(special_value(z, q, cfg.r));
    classes.push_back(e);
  }
  j["classes"] = classes;
  Rat zA = special_value(ZA, q, cfg.r);
  j["special_values"] = {{"zeta_A(1-r)", rat_str(zA)},
                         {"(1-q^r)*zeta_A(1-r)", rat_str((1 - rpow(Rat(static_cast<long long>(q)), cfg.r)) * zA)}};
  Json ls = Json::array();
  for (auto& chi : characters(*R)) {
    LFunction L = l_function(*R, chi);
    ls.push_back({{"m", chi.m}, {"exponents", chi.exps}, {"L", L.str()}, {"value_at_1-r", L.value(q, cfg.r).str()}});
  }
  j["l_functions"] = ls;
  if (!cfg.x.empty() || !cfg.ideal.empty()) {
    Elem x = R->parse_elem(cfg.x.empty() ? "0" : cfg.x);
    Ideal a = cfg.ideal.empty() ? Ideal{} : R->parse_ideal(cfg.ideal);
    ZetaFunction z = coset_zeta(*R, x, a);
    Json c{{"x", R->elem_str(x)}, {"a", R->ideal_str(a)}};
    c.update(zeta_json(z));
    c["polar"] = Json::object();
    for (auto& [e, v] : z.polar) c["polar"][std::to_string(e)] = rat_str(v);
    try {
      c["value_at_1-r"] = rat_str(special_value(z, q, cfg.r));
    } catch (const DomainError&) {
      c["value_at_1-r"] = nullptr;
    }
    j["coset"] = c;
  }
  return {j, 0};
}

// ---- orders ----

CommandResult cmd_orders(const JobConfig& cfg) {
  RingPtr R = Ring::parse(cfg.ring);
  require_rank(cfg.r);
  const std::string mode = cfg.mode.empty() ? "discriminant" : cfg.mode;
  Json j = header(cfg, R->spec());
  j["mode"] = mode;
  j["r"] = cfg.r;
  if (mode == "discriminant") {
    Ideal n = level_or_default(*R, cfg);
    Ideal b = cfg.ideal.empty() ? Ideal{} : R->parse_ideal(cfg.ideal);
    j["level"] = R->ideal_str(n);
    j["twist"] = R->ideal_str(b);
    Json cusps = Json::array();
    for (int c = 0; c < R->class_number(); ++c) {
      OrderReport o = b.empty() ? ord_discriminant(*R, n, c, cfg.r) : ord_discriminant_twisted(*R, n, b, c, cfg.r);
      cusps.push_back(report_json(*R, o));
    }
    j["cusps"] = cusps;
    return {j, 0};
  }
  if (mode == "division" || mode == "higher") {
    if (cfg.u1.empty()) throw ParameterError("--u1 is required in " + mode + " mode");
    Ideal n = level_or_default(*R, cfg);
    Ideal a = cfg.ideal.empty() ? Ideal{} : R->parse_ideal(cfg.ideal);
    Elem u1 = R->parse_elem(cfg.u1);
    j["level"] = R->ideal_str(n);
    j["a"] = R->ideal_str(a);
    j["u1"] = R->elem_str(u1);
    if (mode == "higher") {
      const int k = cfg.weight > 0 ? cfg.weight : static_cast<int>(R->q());
      j["weight"] = k;
      j["gamma"] = goss_gamma(R->q(), k);
      j["report"] = report_json(*R, ord_higher_eisenstein(*R, a, n, u1, k, cfg.r));
    } else {
      j["report"] = report_json(*R, ord_division_form(*R, a, n, u1, cfg.r));
    }
    return {j, 0};
  }
  if (mode == "canonical") {
    Json cusps = Json::array();
    for (int c = 0; c < R->class_number(); ++c) {
      CanonicalDelta cd = ord_canonical_delta(*R, c, cfg.r);
      Json e = report_json(*R, cd.order);
      e["d"] = cd.d;
      e["d2"] = cd.d2;
      e["weight"] = istr(cd.weight);
      e["type"] = cd.type_h;
      e["bezout"] = {{"i", istr(cd.bezout.i)}, {"i2", istr(cd.bezout.i2)}, {"j", istr(cd.bezout.j)},
                     {"x", istr(cd.bezout.x)}, {"x2", istr(cd.bezout.x2)}, {"valid", cd.bezout.valid}};
      cusps.push_back(e);
    }
    j["cusps"] = cusps;
    return {j, 0};
  }
  if (mode == "aggregation") {
    Ideal n = level_or_default(*R, cfg);
    AggregationCheck a = aggregation_check(*R, n, cfg.r);
    j["level"] = R->ideal_str(n);
    j["sum_over_u"] = istr(a.sum_over_u);
    j["ramification"] = istr(a.ramification);
    j["ord_delta"] = istr(a.ord_delta);
    j["holds"] = a.holds();
    return {j, a.holds() ? 0 : 3};
  }
  throw ParameterError("unknown orders mode: " + mode);
}

// ---- matrix ----

CommandResult cmd_matrix(const JobConfig& cfg) {
  RingPtr R = Ring::parse(cfg.ring);
  const std::string mode = cfg.mode.empty() ? "divisor" : cfg.mode;
  Json j = header(cfg, R->spec());
  j["mode"] = mode;
  if (mode == "divisor") {
    require_rank(cfg.r);
    j["r"] = cfg.r;
    Ideal b = cfg.ideal.empty() ? Ideal{} : R->parse_ideal(cfg.ideal);
    DivisorMatrix D = cuspidal_matrix(*R, cfg.r, {}, b);
    Json reps = Json::array(), rows = Json::array(), classes = Json::array();
    for (auto& n : D.reps) reps.push_back(R->ideal_str(n));
    for (std::size_t c = 0; c < D.M.size(); ++c) {
      classes.push_back(R->pic_str(static_cast<int>(c)));
      Json row = Json::array();
      for (auto& v : D.M[c]) row.push_back(istr(v));
      rows.push_back(row);
    }
    j["twist"] = R->ideal_str(b);
    j["columns"] = reps;
    j["rows"] = classes;
    j["M"] = rows;
    j["det"] = istr(D.det);
    j["abs_det"] = istr(abs(D.det));
    FrobeniusCheck fc = frobenius_det_crosscheck(*R, cfg.r, {}, b);
    Json lv = Json::array();
    for (auto& v : fc.l_values) lv.push_back(v.str());
    j["frobenius"] = {{"det_N", rat_str(fc.det_N)}, {"l_values", lv}, {"l_product", rat_str(fc.l_product)},
                      {"sign", fc.sign},           {"match", fc.match}};
    return {j, fc.match ? 0 : 3};
  }
  if (mode == "mmatrix") {
    const int k = cfg.weight > 0 ? cfg.weight : static_cast<int>(R->q() - 1);
    const std::int64_t P = cfg.prec > 0 ? cfg.prec : 8;
    MMatrix m = m_matrix(R, k, P);
    IndependenceReport rep = independence_certificate(m);
    const FiniteField* Finf = Completion(R).residue_field();
    Json reps = Json::array(), val = Json::array(), res = Json::array();
    for (auto& a : m.reps) reps.push_back(R->ideal_str(a));
    for (std::size_t i = 0; i < rep.valuation.size(); ++i) {
      Json vr = Json::array(), rr = Json::array();
      for (std::size_t c = 0; c < rep.valuation.size(); ++c) {
        vr.push_back(rep.valuation[i][c]);
        rr.push_back(Finf->str(rep.residue[i][c]));
      }
      val.push_back(vr);
      res.push_back(rr);
    }
    j["k"] = k;
    j["precision"] = P;
    j["D"] = m.D;
    j["representatives"] = reps;
    j["orientation"] = "E[i][j] = M(a_j, a_i)";
    j["valuations"] = val;
    j["residues"] = res;
    j["integral"] = rep.integral;
    j["strictly_upper"] = rep.upper;
    j["unit_diagonal"] = rep.unit_diagonal;
    j["det_residue"] = Finf->str(rep.det_residue);
    j["violations"] = rep.violations;
    j["certificate"] = rep.ok() ? "PASS" : "FAIL";
    return {j, rep.ok() ? 0 : 4};
  }
  throw ParameterError("unknown matrix mode: " + mode);
}

// ---- expand ----

Json dump_json(const TSeries& s) {
  Json a = Json::array();
  for (auto& [e, c] : s.terms()) a.push_back(Json::array({e, c.str()}));
  return a;
}

CommandResult cmd_expand(const JobConfig& cfg) {
  RingPtr R = Ring::parse(cfg.ring);
  if (R->family() != Family::Polynomial) throw ParameterError("expand needs a polynomial ring");
  if (cfg.r != 2) throw ParameterError("expand is available for r = 2 only");
  const std::uint64_t q = R->q();
  const std::int64_t N = cfg.prec > 0 ? cfg.prec : static_cast<std::int64_t>(q * q * q);
  TExpansion p = delta_product_series(q, N), e = delta_via_eisenstein_series(q, N);
  const std::int64_t diff = first_difference(p.series, e.series);
  Json j = header(cfg, R->spec());
  j["r"] = 2;
  j["precision"] = N;
  j["variable"] = p.variable;
  j["pibar_exponent"] = p.pibar_exponent;
  j["valuation"] = p.series.val();
  j["leading"] = p.series.lead().str();
  j["leading_is_minus_one"] = p.series.lead() == -FqRat::constant(R->field(), 1);
  j["routes"] = {{"product", dump_json(p.series)}, {"eisenstein", dump_json(e.series)}};
  j["verdict"] = diff < 0 ? "EQUAL" : "UNEQUAL";
  j["first_difference"] = diff < 0 ? Json(nullptr) : Json(diff);
  return {j, diff < 0 ? 0 : 3};
}

// ---- selftest ----

CommandResult cmd_selftest(const JobConfig& cfg) {
  std::vector<RingPtr> rings;
  if (cfg.ring_given) rings.push_back(Ring::parse(cfg.ring));
  SelftestReport rep = run_selftest(cfg.seed, cfg.suites, rings);
  Json j = header(cfg, "");
  j["seed"] = cfg.seed;
  Json rs = Json::array();
  for (auto& R : rings.empty() ? default_rings() : rings) rs.push_back(R->spec());
  j["rings"] = rs;
  Json suites = Json::array();
  for (auto& s : rep.suites)
    suites.push_back({{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}, {"failures", s.failures}});
  j["suites"] = suites;
  j["passed"] = rep.passed();
  j["failed"] = rep.failed();
  j["status"] = rep.ok() ? "PASS" : "FAIL";
  return {j, rep.ok() ? 0 : 3};
}

// ---- rendering ----

std::string coeff_line(const Json& z) {
  std::string s;
  for (auto& c : z["coefficients"]) s += (s.empty() ? "" : ", ") + c.get<std::string>();
  return "    coefficients from S^" + std::to_string(z["from"].get<std::int64_t>()) + ": " + s + "\n";
}

std::string table_zeta(const Json& j) {
  std::ostringstream o;
  o << "ring: " << j["ring"].get<std::string>() << "\n";
  auto& inv = j["invariants"];
  o << "q = " << inv["q"] << ", genus = " << inv["genus"] << ", d_inf = " << inv["d_inf"] << ", h = " << inv["class_number"]
    << "\n";
  o << "P(S) = " << j["curve"]["P"].get<std::string>() << "\n";
  o << "Z_K(S) = " << j["curve"]["Z_K"].get<std::string>() << "\n";
  o << "Z_A(S) = " << j["Z_A"]["function"].get<std::string>() << "\n" << coeff_line(j["Z_A"]);
  for (auto& c : j["classes"]) {
    o << "Z_(" << c["class"].get<std::string>() << ")(S) = " << c["function"].get<std::string>() << "\n" << coeff_line(c);
    o << "    at s = 1-r: " << c["value_at_1-r"].get<std::string>() << "\n";
  }
  o << "r = " << j["r"] << "\n";
  o << "zeta_A(1-r) = " << j["special_values"]["zeta_A(1-r)"].get<std::string>() << "\n";
  o << "(1-q^r)*zeta_A(1-r) = " << j["special_values"]["(1-q^r)*zeta_A(1-r)"].get<std::string>() << "\n";
  for (auto& l : j["l_functions"])
    o << "L(chi = " << l["exponents"].dump() << " mod " << l["m"] << ", S) = " << l["L"].get<std::string>()
      << "; at s = 1-r: " << l["value_at_1-r"].get<std::string>() << "\n";
  if (j.contains("coset")) {
    auto& c = j["coset"];
    o << "Z_{" << c["x"].get<std::string>() << ", " << c["a"].get<std::string>()
      << "}(S) = " << c["function"].get<std::string>() << "\n"
      << coeff_line(c);
    o << "    at s = 1-r: " << (c["value_at_1-r"].is_null() ? "pole" : c["value_at_1-r"].get<std::string>()) << "\n";
  }
  return o.str();
}

std::string report_line(const Json& r) {
  std::ostringstream o;
  o << "cusp (" << r["cusp"].get<std::string>() << "): " << r["target"].get<std::string>() << " order "
    << r["order"].get<std::string>() << " [" << r["unit"].get<std::string>() << "]";
  std::string vals;
  for (auto& [k, v] : r["values"].items()) vals += (vals.empty() ? "" : ", ") + k + " = " + v.get<std::string>();
  if (!vals.empty()) o << "  (" << vals << ")";
  return o.str() + "\n";
}

std::string table_orders(const Json& j) {
  std::ostringstream o;
  o << "ring: " << j["ring"].get<std::string>() << "\nr = " << j["r"] << ", mode = " << j["mode"].get<std::string>()
    << "\n";
  const std::string mode = j["mode"];
  if (j.contains("level")) o << "level n = " << j["level"].get<std::string>() << "\n";
  if (mode == "discriminant") {
    o << "twist b = " << j["twist"].get<std::string>() << "\n";
    for (auto& c : j["cusps"]) o << report_line(c);
  } else if (mode == "division" || mode == "higher") {
    o << "a = " << j["a"].get<std::string>() << ", u1 = " << j["u1"].get<std::string>() << "\n";
    if (mode == "higher") o << "weight k = " << j["weight"] << ", gamma(k) = " << j["gamma"] << "\n";
    o << report_line(j["report"]);
    o << "k = " << j["report"]["order"].get<std::string>() << "\n";
  } else if (mode == "canonical") {
    for (auto& c : j["cusps"]) {
      o << report_line(c);
      o << "    d = " << c["d"] << ", d' = " << c["d2"] << ", weight = " << c["weight"].get<std::string>()
        << ", type = " << c["type"] << ", Bezout x = " << c["bezout"]["x"].get<std::string>()
        << ", x' = " << c["bezout"]["x2"].get<std::string>() << "\n";
    }
  } else if (mode == "aggregation") {
    o << "sum over u of ord E_1,u = " << j["sum_over_u"].get<std::string>() << "\n";
    o << "ramification x ord Delta_n = " << j["ramification"].get<std::string>() << " x "
      << j["ord_delta"].get<std::string>() << "\n";
    o << "aggregation: " << (j["holds"].get<bool>() ? "PASS" : "FAIL") << "\n";
  }
  return o.str();
}

std::string table_matrix(const Json& j) {
  std::ostringstream o;
  o << "ring: " << j["ring"].get<std::string>() << "\n";
  if (j["mode"] == "divisor") {
    o << "r = " << j["r"] << ", twist b = " << j["twist"].get<std::string>() << "\n";
    o << "columns:";
    for (auto& c : j["columns"]) o << " " << c.get<std::string>();
    o << "\n";
    for (std::size_t i = 0; i < j["M"].size(); ++i) {
      o << "(" << j["rows"][i].get<std::string>() << ")";
      for (auto& v : j["M"][i]) o << "\t" << v.get<std::string>();
      o << "\n";
    }
    o << "det = " << j["det"].get<std::string>() << ", |det| = " << j["abs_det"].get<std::string>() << "\n";
    auto& f = j["frobenius"];
    o << "det N = " << f["det_N"].get<std::string>() << "\n";
    for (auto& v : f["l_values"]) o << "L(chi, 1-r) = " << v.get<std::string>() << "\n";
    o << "prod L = " << f["l_product"].get<std::string>() << ", sign = " << f["sign"] << "\n";
    o << "Frobenius cross-check: " << (f["match"].get<bool>() ? "PASS" : "FAIL") << "\n";
  } else {
    o << "k = " << j["k"] << ", precision = " << j["precision"] << ", D = " << j["D"] << "\n";
    o << "representatives:";
    for (auto& c : j["representatives"]) o << " " << c.get<std::string>();
    o << "\norientation: " << j["orientation"].get<std::string>() << "\nvaluations (capped at precision):\n";
    for (auto& row : j["valuations"]) {
      for (auto& v : row) o << "\t" << v;
      o << "\n";
    }
    o << "residues mod pi_inf:\n";
    for (auto& row : j["residues"]) {
      for (auto& v : row) o << "\t" << v.get<std::string>();
      o << "\n";
    }
    for (auto& v : j["violations"]) o << "violation: " << v.get<std::string>() << "\n";
    o << "entries in O_inf: " << (j["integral"].get<bool>() ? "PASS" : "FAIL") << "\n";
    o << "diagonal = 1 mod π_∞: " << (j["unit_diagonal"].get<bool>() ? "PASS" : "FAIL") << "\n";
    o << "strictly upper triangular mod π_∞: " << (j["strictly_upper"].get<bool>() ? "PASS" : "FAIL") << "\n";
    o << "invertible: " << j["certificate"].get<std::string>() << "\n";
  }
  return o.str();
}

std::string table_expand(const Json& j) {
  std::ostringstream o;
  o << "ring: " << j["ring"].get<std::string>() << "\nprecision N = " << j["precision"]
    << "\nDelta(A w + A) = pibar^" << j["pibar_exponent"] << " * sum c_e t^e\n";
  for (auto route : {"product", "eisenstein"}) {
    o << "route " << route << ":\n";
    for (auto& t : j["routes"][route]) o << t[0] << "\t" << t[1].get<std::string>() << "\n";
  }
  o << "leading term: " << (j["leading_is_minus_one"].get<bool>() ? "-" : j["leading"].get<std::string>() + "*") << "t^"
    << j["valuation"] << "\n";
  o << "verdict: " << j["verdict"].get<std::string>();
  if (!j["first_difference"].is_null()) o << " (first difference at t^" << j["first_difference"] << ")";
  return o.str() + "\n";
}

std::string table_selftest(const Json& j) {
  std::ostringstream o;
  o << "seed " << j["seed"] << "\n";
  for (auto& s : j["suites"]) {
    o << s["name"].get<std::string>() << ": " << (s["failed"].get<std::int64_t>() == 0 ? "PASS" : "FAIL") << " ("
      << s["passed"] << " passed, " << s["failed"] << " failed)\n";
    for (auto& f : s["failures"]) o << "    " << f.get<std::string>() << "\n";
  }
  o << "total: " << j["passed"] << " passed, " << j["failed"] << " failed: " << j["status"].get<std::string>() << "\n";
  return o.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object() || j.is_array()) {
    if (j.empty()) out += csv_field(path) + ",\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      std::string key = j.is_object() ? it.key() : std::to_string(i);
      flatten(*it, path.empty() ? key : path + "." + key, out);
    }
    return;
  }
  out += csv_field(path) + "," + csv_field(j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
}

}  // namespace

CommandResult run_command(const JobConfig& cfg) {
  if (cfg.format != "table" && cfg.format != "json" && cfg.format != "csv")
    throw ParameterError("unknown format: " + cfg.format);
  if (cfg.command == "zeta") return cmd_zeta(cfg);
  if (cfg.command == "orders") return cmd_orders(cfg);
  if (cfg.command == "matrix") return cmd_matrix(cfg);
  if (cfg.command == "expand") return cmd_expand(cfg);
  if (cfg.command == "selftest") return cmd_selftest(cfg);
  throw ParameterError("unknown command: " + cfg.command);
}

std::string render(const Json& data, const std::string& format) {
  if (format == "json") return data.dump(2) + "\n";
  if (format == "csv") {
    std::string out = "key,value\n";
    flatten(data, "", out);
    return out;
  }
  const std::string cmd = data.at("command");
  if (cmd == "zeta") return table_zeta(data);
  if (cmd == "orders") return table_orders(data);
  if (cmd == "matrix") return table_matrix(data);
  if (cmd == "expand") return table_expand(data);
  if (cmd == "selftest") return table_selftest(data);
  throw ParameterError("unknown command: " + cmd);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParameterError*>(&e) || dynamic_cast<const DomainError*>(&e)) return 2;
  if (dynamic_cast<const ConsistencyError*>(&e)) return 3;
  if (dynamic_cast<const PrecisionError*>(&e)) return 4;
  return 1;
}

}  // namespace cusp
