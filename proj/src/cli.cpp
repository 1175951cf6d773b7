#include "normalfield/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "normalfield/errors.hpp"
#include "normalfield/factor.hpp"
#include "normalfield/groupring.hpp"
#include "normalfield/normalcount.hpp"
#include "normalfield/normaltest.hpp"
#include "normalfield/numtheory.hpp"
#include "normalfield/text_format.hpp"
#include "normalfield/tower.hpp"

namespace nf::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint32_t n = 0;
  std::string base_poly;
  std::string top_poly;
  std::string elem;
  std::string alpha;
  std::string beta;
  std::string u;
  std::string coeffs;
  std::uint64_t d = 0;
  std::uint64_t q = 0;
  std::uint64_t limit = kDefaultEnumerationLimit;
  bool json = false;
};

// What a subcommand produced: a JSON document and the equivalent text lines.
struct Report {
  Json doc;
  std::vector<std::string> lines;
};

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw UsageError("--p must be prime, got " + std::to_string(p));
}

SmallFieldPtr build_base_field(const Options& o) {
  require_prime(o.p);
  if (o.k == 0) throw UsageError("--k must be positive");
  if (o.base_poly.empty()) {
    return SmallField::extension(o.p, find_irreducible(SmallField::prime(o.p), o.k).coeffs());
  }
  auto digits = parse_uint_list(o.base_poly);
  if (digits.size() != std::size_t{o.k} + 1) {
    throw UsageError("--base-poly must have degree k = " + std::to_string(o.k));
  }
  return SmallField::extension(o.p, digits);
}

TowerPtr build_tower(const Options& o) {
  require_prime(o.p);
  if (o.k == 0) throw UsageError("--k must be positive");
  if (o.n == 0) throw UsageError("--n must be positive");
  std::vector<std::uint32_t> base_digits;
  if (o.base_poly.empty()) {
    base_digits = find_irreducible(SmallField::prime(o.p), o.k).coeffs();
  } else {
    base_digits = parse_uint_list(o.base_poly);
    if (base_digits.size() != std::size_t{o.k} + 1) {
      throw UsageError("--base-poly must have degree k = " + std::to_string(o.k));
    }
  }
  auto base = SmallField::extension(o.p, base_digits);
  std::vector<std::uint32_t> top_codes;
  if (o.top_poly.empty()) {
    top_codes = find_irreducible(base, o.n).coeffs();
  } else {
    top_codes = parse_uint_list(o.top_poly);
    if (top_codes.size() != std::size_t{o.n} + 1) {
      throw UsageError("--top-poly must have degree n = " + std::to_string(o.n));
    }
  }
  return FieldTower::create(o.p, base_digits, top_codes);
}

Json tower_header(const FieldTower& t) {
  return Json{{"p", t.characteristic()},
              {"k", t.k()},
              {"n", t.n()},
              {"q", t.q()},
              {"base_poly", format_poly(t.base_poly())},
              {"top_poly", format_poly(t.top_poly())}};
}

std::string tower_line(const FieldTower& t) {
  return "tower: p=" + std::to_string(t.characteristic()) + " k=" + std::to_string(t.k()) +
         " n=" + std::to_string(t.n()) + " q=" + std::to_string(t.q()) + " base-poly=" + format_poly(t.base_poly()) +
         " top-poly=" + format_poly(t.top_poly());
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

Json structure_json(const OrbitStructure& s) {
  Json out = Json::array();
  for (const auto& e : s.entries) {
    out.push_back(Json{{"e", e.e.str()}, {"order", e.order.str()}, {"count", e.count.str()}});
  }
  return out;
}

std::vector<std::string> structure_lines(const OrbitStructure& s) {
  std::vector<std::string> out;
  for (const auto& e : s.entries) {
    out.push_back("  e=" + e.e.str() + " order=" + e.order.str() + " orbits=" + e.count.str());
  }
  return out;
}

Report cmd_count(const Options& o) {
  require_prime(o.p);
  if (o.k == 0 || o.n == 0) throw UsageError("--k and --n must be positive");
  const BigInt q = ipow(o.p, o.k);
  const PPartSplit split = split_p_part(o.n, o.p);
  const OrbitStructure s = orbit_structure(q, split.d);
  const BigCount count = count_normal(o.p, o.k, o.n);
  Report r;
  r.doc = Json{{"command", "count"}, {"p", o.p},          {"k", o.k},
               {"n", o.n},           {"q", q.str()},      {"d", split.d.str()},
               {"m", split.m},       {"orbits", structure_json(s)}, {"N", count.str()}};
  r.lines.push_back("q = " + q.str() + ", n = " + std::to_string(o.n) + " = " + split.d.str() + " * " +
                    std::to_string(o.p) + "^" + std::to_string(split.m));
  r.lines.push_back("orbit structure:");
  for (auto& l : structure_lines(s)) r.lines.push_back(l);
  r.lines.push_back("N = " + count.str());
  return r;
}

Report cmd_brute_count(const Options& o) {
  auto tower = build_tower(o);
  const BigCount count = brute_count_normal(*tower, o.limit);
  Report r;
  r.doc = Json{{"command", "brute-count"}};
  r.doc.update(tower_header(*tower));
  r.doc["N"] = count.str();
  r.lines = {tower_line(*tower), "N = " + count.str() + " (exhaustive over " + tower->order().str() + " elements)"};
  return r;
}

Report cmd_enumerate(const Options& o) {
  auto tower = build_tower(o);
  const auto normals = enumerate_normal(*tower, o.limit);
  Report r;
  r.doc = Json{{"command", "enumerate"}};
  r.doc.update(tower_header(*tower));
  r.doc["count"] = std::to_string(normals.size());
  Json list = Json::array();
  r.lines = {tower_line(*tower), "count = " + std::to_string(normals.size())};
  for (const auto& a : normals) {
    list.push_back(tower->format(a));
    r.lines.push_back(tower->format(a));
  }
  r.doc["elements"] = std::move(list);
  return r;
}

FieldElement require_elem(const FieldTower& tower, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_element(tower, text);
}

Report cmd_test(const Options& o) {
  auto tower = build_tower(o);
  const auto a = require_elem(*tower, o.elem, "--elem");
  const bool rank_test = is_normal(*tower, a);
  const bool gcd_test = is_normal_gcd(*tower, a);
  const FqPoly g = order_poly(*tower, a);
  const FieldElement tr = tower->trace(a);
  Report r;
  r.doc = Json{{"command", "test"}};
  r.doc.update(tower_header(*tower));
  r.doc["element"] = tower->format(a);
  r.doc["normal"] = rank_test;
  r.doc["normal_gcd"] = gcd_test;
  r.doc["order_poly"] = format_poly(g);
  r.doc["trace"] = tower->format(tr);
  r.lines = {tower_line(*tower),
             "element: " + tower->format(a),
             "normal: " + bool_str(rank_test),
             "normal (gcd criterion): " + bool_str(gcd_test),
             "order polynomial: " + to_string(g) + " [" + format_poly(g) + "]",
             "trace: " + tower->format(tr)};
  return r;
}

Report cmd_order_poly(const Options& o) {
  auto tower = build_tower(o);
  const auto a = require_elem(*tower, o.elem, "--elem");
  const FqPoly g = order_poly(*tower, a);
  const bool normal = g.degree() == static_cast<int>(tower->n());
  Report r;
  r.doc = Json{{"command", "order-poly"}};
  r.doc.update(tower_header(*tower));
  r.doc["element"] = tower->format(a);
  r.doc["order_poly"] = format_poly(g);
  r.doc["degree"] = g.degree();
  r.doc["normal"] = normal;
  r.lines = {tower_line(*tower), "element: " + tower->format(a),
             "order polynomial: " + to_string(g) + " [" + format_poly(g) + "]", "normal: " + bool_str(normal)};
  return r;
}

Report cmd_trace(const Options& o) {
  auto tower = build_tower(o);
  const auto a = require_elem(*tower, o.elem, "--elem");
  const FieldElement tr = tower->trace(a);
  Report r;
  r.doc = Json{{"command", "trace"}};
  r.doc.update(tower_header(*tower));
  r.doc["element"] = tower->format(a);
  r.doc["trace"] = tower->format(tr);
  r.lines = {tower_line(*tower), "element: " + tower->format(a), "trace: " + tower->format(tr)};
  return r;
}

Report cmd_orbits(const Options& o) {
  if (o.q < 2) throw UsageError("--q must be at least 2");
  if (o.d == 0) throw UsageError("--d must be positive");
  const auto orbits = frobenius_orbits(o.d, o.q);
  const auto s = orbit_structure(o.q, o.d);
  Report r;
  Json list = Json::array();
  r.lines.push_back("orbits of a -> " + std::to_string(o.q) + "a on Z/" + std::to_string(o.d) + ":");
  for (const auto& orbit : orbits) {
    list.push_back(orbit);
    std::string line = "  {";
    for (std::size_t i = 0; i < orbit.size(); ++i) line += (i ? "," : "") + std::to_string(orbit[i]);
    r.lines.push_back(line + "}");
  }
  r.lines.push_back("orbit structure:");
  for (auto& l : structure_lines(s)) r.lines.push_back(l);
  r.doc = Json{{"command", "orbits"}, {"q", o.q}, {"d", o.d}, {"orbits", std::move(list)}, {"structure", structure_json(s)}};
  return r;
}

Report cmd_units(const Options& o) {
  auto tower = build_tower(o);
  GroupRing ring(tower);
  const auto units = enumerate_units(ring, o.limit);
  Report r;
  r.doc = Json{{"command", "units"}};
  r.doc.update(tower_header(*tower));
  r.doc["count"] = std::to_string(units.size());
  Json list = Json::array();
  r.lines = {tower_line(*tower), "count = " + std::to_string(units.size())};
  for (const auto& u : units) {
    list.push_back(ring.format(u));
    r.lines.push_back(ring.format(u));
  }
  r.doc["units"] = std::move(list);
  return r;
}

Report cmd_act(const Options& o) {
  auto tower = build_tower(o);
  GroupRing ring(tower);
  if (o.u.empty()) throw UsageError("--u is required");
  const auto u = parse_group_ring_element(ring, o.u);
  const std::string& elem_text = o.elem.empty() ? o.alpha : o.elem;
  const auto a = require_elem(*tower, elem_text, "--elem");
  const auto b = ring.act(u, a);
  const bool unit = ring.is_unit(u);
  const bool normal = is_normal(*tower, b);
  Report r;
  r.doc = Json{{"command", "act"}};
  r.doc.update(tower_header(*tower));
  r.doc["u"] = ring.format(u);
  r.doc["element"] = tower->format(a);
  r.doc["result"] = tower->format(b);
  r.doc["unit"] = unit;
  r.doc["result_normal"] = normal;
  r.lines = {tower_line(*tower), "u: " + ring.format(u) + " (unit: " + bool_str(unit) + ")",
             "element: " + tower->format(a), "result: " + tower->format(b), "result normal: " + bool_str(normal)};
  return r;
}

Report cmd_transport(const Options& o) {
  auto tower = build_tower(o);
  GroupRing ring(tower);
  const auto a = require_elem(*tower, o.alpha, "--alpha");
  const auto b = require_elem(*tower, o.beta, "--beta");
  const auto u = ring.transporter(a, b);
  Report r;
  r.doc = Json{{"command", "transport"}};
  r.doc.update(tower_header(*tower));
  r.doc["alpha"] = tower->format(a);
  r.doc["beta"] = tower->format(b);
  r.doc["u"] = ring.format(u);
  r.lines = {tower_line(*tower), "alpha: " + tower->format(a), "beta: " + tower->format(b),
             "u: " + ring.format(u) + "  (" + to_string(ring.to_poly(u)) + ")"};
  return r;
}

Json field_header(const SmallField& f, const Options& o) {
  (void)o;
  return Json{{"p", f.characteristic()},
              {"k", f.degree()},
              {"q", f.order()},
              {"base_poly", format_poly(FqPoly(SmallField::prime(f.characteristic()), f.modulus()))}};
}

FqPoly require_poly(const SmallFieldPtr& field, const Options& o) {
  if (!o.coeffs.empty()) return parse_poly(field, o.coeffs);
  if (o.n > 0) return FqPoly::cyclic_modulus(field, o.n);
  throw UsageError("--coeffs (or --n for x^n - 1) is required");
}

std::string base_field_line(const SmallField& f) {
  return "field: p=" + std::to_string(f.characteristic()) + " k=" + std::to_string(f.degree()) +
         " q=" + std::to_string(f.order()) +
         " base-poly=" + format_poly(FqPoly(SmallField::prime(f.characteristic()), f.modulus()));
}

Report cmd_factor(const Options& o) {
  auto field = build_base_field(o);
  const FqPoly f = require_poly(field, o);
  if (f.degree() < 1) throw DomainError("cannot factor the constant polynomial " + to_string(f));
  const Factorization fac = factor_poly(f);
  Report r;
  r.doc = Json{{"command", "factor"}};
  r.doc.update(field_header(*field, o));
  r.doc["poly"] = format_poly(f);
  r.doc["unit"] = field->format(fac.unit);
  Json list = Json::array();
  r.lines = {base_field_line(*field), "poly: " + to_string(f) + " [" + format_poly(f) + "]",
             "unit: " + field->format(fac.unit)};
  for (const auto& [g, mult] : fac.factors) {
    list.push_back(Json{{"factor", format_poly(g)}, {"degree", g.degree()}, {"multiplicity", mult}});
    r.lines.push_back("  (" + to_string(g) + ")^" + std::to_string(mult) + "  [" + format_poly(g) + "]");
  }
  r.doc["factors"] = std::move(list);
  return r;
}

Report cmd_unit_count(const Options& o) {
  auto field = build_base_field(o);
  const FqPoly f = require_poly(field, o);
  const BigCount units = count_units_mod(f);
  Report r;
  r.doc = Json{{"command", "unit-count"}};
  r.doc.update(field_header(*field, o));
  r.doc["poly"] = format_poly(f);
  r.doc["units"] = units.str();
  r.lines = {base_field_line(*field), "poly: " + to_string(f) + " [" + format_poly(f) + "]", "units = " + units.str()};
  if (o.coeffs.empty()) {
    const BigCount cyclic = count_units_cyclic(o.p, o.k, o.n);
    r.doc["units_cyclic"] = cyclic.str();
    r.lines.push_back("units (orbit product) = " + cyclic.str());
  }
  return r;
}

void add_tower_flags(CLI::App* sub, Options& o) {
  sub->add_option("--p", o.p, "characteristic (prime)")->required();
  sub->add_option("--k", o.k, "degree of F_q over F_p")->capture_default_str();
  sub->add_option("--n", o.n, "degree of the extension over F_q")->required();
  sub->add_option("--base-poly", o.base_poly, "defining polynomial of F_q over F_p, e.g. 1,1,1");
  sub->add_option("--top-poly", o.top_poly, "defining polynomial of F_{q^n} over F_q (F_q codes)");
}

void add_field_flags(CLI::App* sub, Options& o) {
  sub->add_option("--p", o.p, "characteristic (prime)")->required();
  sub->add_option("--k", o.k, "degree of F_q over F_p")->capture_default_str();
  sub->add_option("--base-poly", o.base_poly, "defining polynomial of F_q over F_p");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Normal elements of finite field extensions F_{q^n}/F_q", "normalfield"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "emit a single JSON document");

  std::vector<std::pair<CLI::App*, std::function<Report(const Options&)>>> commands;
  auto add = [&](const char* name, const char* help, std::function<Report(const Options&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json, "emit a single JSON document");
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };

  add_tower_flags(add("count", "closed-form count of normal elements", cmd_count), o);
  for (auto [name, help, fn] :
       std::initializer_list<std::tuple<const char*, const char*, Report (*)(const Options&)>>{
           {"brute-count", "count normal elements exhaustively", cmd_brute_count},
           {"enumerate", "list all normal elements", cmd_enumerate},
           {"units", "list all units of F_q[x]/(x^n - 1)", cmd_units}}) {
    auto* sub = add(name, help, fn);
    add_tower_flags(sub, o);
    sub->add_option("--limit", o.limit, "largest q^n swept exhaustively")->capture_default_str();
  }
  for (auto [name, help, fn] : std::initializer_list<std::tuple<const char*, const char*, Report (*)(const Options&)>>{
           {"test", "decide normality of --elem by all criteria", cmd_test},
           {"order-poly", "order polynomial of --elem", cmd_order_poly},
           {"trace", "trace of --elem down to F_q", cmd_trace}}) {
    auto* sub = add(name, help, fn);
    add_tower_flags(sub, o);
    sub->add_option("--elem", o.elem, "element, e.g. 0;1")->required();
  }
  {
    auto* sub = add("act", "apply the group ring element --u to --elem", cmd_act);
    add_tower_flags(sub, o);
    sub->add_option("--u", o.u, "group ring element, same layout as a field element")->required();
    sub->add_option("--elem", o.elem, "element acted on");
    sub->add_option("--alpha", o.alpha, "alias of --elem");
  }
  {
    auto* sub = add("transport", "unit carrying normal --alpha to normal --beta", cmd_transport);
    add_tower_flags(sub, o);
    sub->add_option("--alpha", o.alpha, "source normal element")->required();
    sub->add_option("--beta", o.beta, "target normal element")->required();
  }
  {
    auto* sub = add("orbits", "Frobenius orbits of a -> q*a on Z/dZ", cmd_orbits);
    sub->add_option("--q", o.q, "multiplier")->required();
    sub->add_option("--d", o.d, "modulus")->required();
  }
  for (auto [name, help, fn] : std::initializer_list<std::tuple<const char*, const char*, Report (*)(const Options&)>>{
           {"factor", "factor a polynomial over F_q", cmd_factor},
           {"unit-count", "count units of F_q[x]/(f)", cmd_unit_count}}) {
    auto* sub = add(name, help, fn);
    add_field_flags(sub, o);
    sub->add_option("--coeffs", o.coeffs, "polynomial over F_q, constant term first");
    sub->add_option("--n", o.n, "use x^n - 1 when --coeffs is absent");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  auto picked = std::find_if(commands.begin(), commands.end(), [](const auto& c) { return c.first->parsed(); });
  try {
    Report r = picked->second(o);
    if (o.json) {
      out << r.doc.dump(2) << "\n";
    } else {
      for (const auto& line : r.lines) out << line << "\n";
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  }
}

}  // namespace nf::cli
