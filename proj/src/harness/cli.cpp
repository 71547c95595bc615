#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lhp/bijections.hpp"
#include "lhp/budget.hpp"
#include "lhp/enumeration.hpp"
#include "lhp/eulerian.hpp"
#include "lhp/geometry.hpp"
#include "lhp/harness.hpp"
#include "lhp/json_io.hpp"
#include "lhp/statistics.hpp"

namespace lhp::harness {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    if (b == std::string::npos) continue;
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item.substr(b), &used));
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + item + "'");
    }
    if (item.find_first_not_of(' ', b + used) != std::string::npos) throw UsageError("not an integer: '" + item + "'");
  }
  return out;
}

/// "k=1,l=4" -> {k: "1", l: "4"}
std::map<std::string, std::string> parse_assignments(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

std::int64_t required_int(const std::map<std::string, std::string>& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) throw UsageError("missing parameter " + key);
  const auto v = parse_ints(it->second);
  if (v.size() != 1) throw UsageError("parameter " + key + " must be one integer");
  return v[0];
}

/// Ascending univariate rendering: "1 + 57*x + 302*x^2".
std::string poly_text(const SparsePoly& p, int v) {
  const auto coeffs = p.dense(v);
  const std::string name = var_name(v);
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Int& c = coeffs[k];
    if (c == 0) continue;
    const Int a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string power = k == 0 ? "" : k == 1 ? name : name + "^" + std::to_string(k);
    if (k == 0)
      out += a.get_str();
    else if (a == 1)
      out += power;
    else
      out += a.get_str() + "*" + power;
  }
  return out.empty() ? "0" : out;
}

json parts_json(const Parts& p) { return json(std::vector<std::int64_t>(p.begin(), p.end())); }

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

struct Globals {
  std::string format = "text";
  std::string caps;
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  bool json() const { return format == "json"; }
};

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json())
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text << '\n';
}

int cmd_enumerate(const Globals& g, const std::string& spec, std::optional<std::int64_t> max_weight,
                  std::optional<std::int64_t> max_last, bool with_stats) {
  if (!max_weight && !max_last) throw UsageError("enumerate needs --max-weight or --max-last");
  const SSeq s = parse_sequence_spec(spec);
  json rows = json::array();
  std::string text;
  for_each_member(s, {max_weight, max_last, enumeration_budget().load()}, [&](const Parts& lam) {
    const auto st = stats(lam, s);
    rows.push_back({{"parts", parts_json(lam)}, {"weight", st.weight}, {"ceil", parts_json(st.ceil)}, {"eps_plus", parts_json(st.eps_plus)}});
    text += join(lam);
    if (with_stats)
      text += "  weight=" + std::to_string(st.weight) + " ceil=" + join(st.ceil) + " eps+=" + join(st.eps_plus);
    text += '\n';
  });
  if (g.json())
    std::cout << rows.dump(2) << '\n';
  else
    std::cout << text;
  return 0;
}

int cmd_stats(const Globals& g, const std::string& object, const std::string& value, const std::string& spec,
              const std::string& flavor) {
  const auto raw = parse_ints(value);
  json j;
  if (object == "perm") {
    const Perm pi(raw.begin(), raw.end());
    const auto st = perm_stats(pi);
    j = {{"Des", st.Des}, {"des", st.des}, {"maj", st.maj}, {"comaj", st.comaj}, {"inv", st.inv}, {"exc", st.exc},
         {"cyc", st.cyc}, {"bin", st.bin}, {"sq", st.sq}, {"binv", st.binv}, {"sqin", st.sqin}, {"lhp", st.lhp},
         {"siz", st.siz}, {"invseq", perm_to_invseq(pi)}};
  } else if (object == "signed") {
    const SignedPerm sigma(raw.begin(), raw.end());
    j = {{"des_B", des_signed(sigma, SignedFlavor::B)}};
    if (sigma.size() >= 2) j["des_D"] = des_signed(sigma, SignedFlavor::D);
    if (!flavor.empty()) j = {{"des", des_signed(sigma, flavor == "D" ? SignedFlavor::D : SignedFlavor::B)}, {"flavor", flavor}};
  } else if (object == "invseq") {
    if (spec.empty()) throw UsageError("stats --object invseq needs --s");
    const SSeq s = parse_sequence_spec(spec);
    const auto st = invseq_stats(raw, s);
    j = {{"Asc", st.Asc}, {"asc", st.asc}, {"amaj", st.amaj}, {"lhp", st.lhp}, {"weight", st.weight}};
  } else if (object == "word") {
    const MultisetWord w(raw.begin(), raw.end());
    j = {{"des", des_multiset(w)}};
  } else {
    throw UsageError("unknown object " + object);
  }
  std::string text;
  for (const auto& [k, v] : j.items()) text += k + "=" + v.dump() + "\n";
  if (!text.empty()) text.pop_back();
  emit(g, j, text);
  return 0;
}

int cmd_bijection(const Globals& g, const std::string& name, const std::string& params, const std::string& input,
                  bool inverse) {
  const auto p = params.empty() ? std::map<std::string, std::string>{} : parse_assignments(params);
  const auto in = parse_ints(input);
  const Parts parts(in.begin(), in.end());
  json j;
  std::string text;
  if (name == "bme") {
    const KL kl{required_int(p, "k"), required_int(p, "l")};
    if (inverse) {
      // input lists multiplicities by position 1..n
      const Parts mu = bme_inv_positions(in, kl);
      j = parts_json(mu);
      text = join(mu);
    } else {
      const auto pos = bme_positions(parts, kl);
      text = bme_to_string(parts, kl);
      j = {{"image", text}, {"all_positions", bme_to_string(parts, kl, true)}, {"positions", pos},
           {"values", bme_part_values(parts.size(), kl)}};
    }
  } else if (name == "gamma") {
    const KL kl{required_int(p, "k"), required_int(p, "l")};
    if (inverse) {
      const auto [lam, s] = gamma_inv(parts, kl);
      j = {{"lambda", parts_json(lam)}, {"s", s}};
      text = "(" + join(lam) + ") s=" + std::to_string(s);
    } else {
      const Parts mu = gamma(parts, required_int(p, "s"), kl);
      j = parts_json(mu);
      text = join(mu);
    }
  } else if (name == "theta") {
    PartMultiplicity m;
    for (auto v : in) ++m[v];
    const Parts image = theta(m, required_int(p, "l"));
    j = parts_json(image);
    text = join(image);
  } else if (name == "barred") {
    auto it = p.find("s");
    if (it == p.end()) throw UsageError("barred needs --params s=<spec>");
    const SSeq s = parse_sequence_spec(it->second);
    if (inverse) throw UsageError("barred inverse takes JSON input; use the library");
    const auto b = lhp_to_barred(parts, s);
    j = {{"e", b.e}, {"bars", b.bars}};
    text = "e=" + join(b.e) + " bars=" + join(b.bars);
  } else {
    throw UsageError("unknown bijection " + name);
  }
  emit(g, j, text);
  return 0;
}

int cmd_eulerian(const Globals& g, const std::string& spec, const std::string& kind, std::int64_t k, std::int64_t n,
                 bool roots) {
  SparsePoly p;
  if (kind == "onek") {
    if (n <= 0) {
      if (spec.empty()) throw UsageError("eulerian --kind onek needs --n or --s");
      n = static_cast<std::int64_t>(parse_sequence_spec(spec).size());
    }
    p = one_k_eulerian(static_cast<int>(n), k);
  } else {
    if (spec.empty()) throw UsageError("eulerian needs --s");
    const SSeq s = parse_sequence_spec(spec);
    if (kind == "E")
      p = s_eulerian(s);
    else if (kind == "Q")
      p = inflated_eulerian(s);
    else if (kind == "Qdiv")
      p = inflated_divided(s);
    else
      throw UsageError("unknown kind " + kind);
  }
  json j = {{"kind", kind}, {"poly", poly_text(p, var::x)}, {"coefficients", json::array()}};
  for (const auto& c : p.dense(var::x)) j["coefficients"].push_back(c.get_str());
  std::string text = poly_text(p, var::x);
  if (roots) {
    const bool rr = is_real_rooted(p);
    j["real_rooted"] = rr;
    text += std::string("\nreal-rooted: ") + (rr ? "yes" : "no");
  }
  emit(g, j, text);
  return 0;
}

json points_json(const std::vector<IntVec>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(p);
  return a;
}

int cmd_geometry(const Globals& g, const std::string& spec, const std::string& op) {
  const SSeq s = parse_sequence_spec(spec);
  json j;
  std::string text;
  if (op == "pi" || op == "piprime") {
    j = points_json((op == "pi" ? pi_points(s) : pi_prime_points(s)).points);
    text = j.dump();
  } else if (op == "gf") {
    const auto gf = lattice_gf(s);
    json dens = json::array();
    for (const auto& m : gf.denominators) dens.push_back(monomial_to_json(m));
    j = {{"numerator", poly_to_json(gf.numerator)}, {"denominators", dens}};
    text = "numerator: " + gf.numerator.to_string() + "\ndenominators:";
    for (const auto& m : gf.denominators) text += " (1 - " + m.to_string() + ")";
  } else if (op == "ehrhartP") {
    const auto ep = ehrhart_poly_P(s);
    text = ep.to_string("t");
    j = {{"poly", text}};
  } else if (op == "ehrhartR") {
    const auto qp = ehrhart_quasi_R(s);
    j = {{"period", qp.period}, {"constituents", json::array()}};
    text = "period " + std::to_string(qp.period);
    for (std::size_t r = 0; r < qp.constituents.size(); ++r) {
      j["constituents"].push_back(qp.constituents[r].to_string("t"));
      text += "\nt = " + std::to_string(r) + " mod " + std::to_string(qp.period) + ": " + qp.constituents[r].to_string("t");
    }
  } else if (op == "gorenstein") {
    const auto r = gorenstein_check(s);
    if (r.c) {
      j = {{"gorenstein", true}, {"c", *r.c}};
      text = "Gorenstein, c = (" + join(*r.c) + ")";
    } else {
      j = {{"gorenstein", false}, {"failing_index", *r.failing_index}};
      text = "not Gorenstein, condition fails at j = " + std::to_string(*r.failing_index);
    }
  } else if (op == "selfrecip") {
    const bool b = self_reciprocity_check(s);
    j = {{"self_reciprocal", b}};
    text = b ? "self-reciprocal" : "not self-reciprocal";
  } else {
    throw UsageError("unknown op " + op);
  }
  emit(g, j, text);
  return 0;
}

Caps parse_global_caps(const Globals& g) { return g.caps.empty() ? Caps{} : parse_caps(g.caps); }

int cmd_verify(const Globals& g, const std::string& id, const Params& params) {
  if (!find_entry(id)) throw UsageError("unknown theorem id '" + id + "'");
  const auto rep = verify({id, params, parse_global_caps(g)});
  if (g.json())
    std::cout << report_to_json(rep).dump(2) << '\n';
  else
    std::cout << report_to_text(rep) << '\n';
  return rep.status == Status::FAIL ? 1 : 0;
}

int cmd_suite(const Globals& g, const std::string& filter, unsigned jobs, const std::string& out, bool timings) {
  SuiteOptions opt;
  opt.filter = filter;
  opt.parallelism = jobs;
  opt.seed = g.seed;
  if (suite_cases(opt).empty()) throw UsageError("no registry entry matches '" + filter + "'");
  const auto res = run_suite(opt);
  const std::string doc = reports_to_json(res.reports, timings);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << doc << '\n';
  }
  if (g.json()) {
    if (out.empty()) std::cout << doc << '\n';
  } else {
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : res.reports) {
      std::cout << report_to_text(r) << '\n';
      (r.status == Status::PASS ? pass : r.status == Status::FAIL ? fail : skip)++;
    }
    std::cout << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  }
  return res.exit_code;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Lecture hall partitions: enumeration, statistics, bijections and theorem checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--caps", g.caps, "Truncation caps, e.g. q=30,u=20,x=10");
  app.add_option("--budget", g.budget, "Maximum objects per enumeration");
  app.add_option("--seed", g.seed, "Seed for randomized cases");

  std::string s_spec, op, kind = "E", object, value, flavor, name, bparams, input, id, filter = "*", out;
  std::optional<std::int64_t> max_weight, max_last;
  bool with_stats = false, roots = false, inverse = false, timings = false;
  std::int64_t k = 1, n = 0;
  unsigned jobs = 1;

  auto* en = app.add_subcommand("enumerate", "List members of L_n^(s)");
  en->add_option("--s", s_spec, "Sequence spec")->required();
  en->add_option("--max-weight", max_weight);
  en->add_option("--max-last", max_last);
  en->add_flag("--stats", with_stats);

  auto* st = app.add_subcommand("stats", "Statistics of a permutation, signed permutation, inversion sequence or word");
  st->add_option("--object", object)->required()->check(CLI::IsMember({"perm", "signed", "invseq", "word"}));
  st->add_option("--value", value)->required();
  st->add_option("--s", s_spec);
  st->add_option("--flavor", flavor)->check(CLI::IsMember({"B", "D"}));

  auto* bi = app.add_subcommand("bijection", "Apply gamma, BME, theta or the barred encoding");
  bi->add_option("--name", name)->required()->check(CLI::IsMember({"bme", "gamma", "theta", "barred"}));
  bi->add_option("--params", bparams, "e.g. k=1,l=4 or s=1,2,3");
  bi->add_option("--input", input)->required();
  bi->add_flag("--inverse", inverse);

  auto* eu = app.add_subcommand("eulerian", "s-Eulerian and related polynomials");
  eu->add_option("--s", s_spec);
  eu->add_option("--kind", kind)->check(CLI::IsMember({"E", "Q", "Qdiv", "onek"}));
  eu->add_option("--k", k);
  eu->add_option("--n", n);
  eu->add_flag("--check-real-roots", roots);

  auto* ge = app.add_subcommand("geometry", "Cones, parallelepipeds and Ehrhart data");
  ge->add_option("--s", s_spec)->required();
  ge->add_option("--op", op)->required()->check(
      CLI::IsMember({"pi", "piprime", "gf", "ehrhartP", "ehrhartR", "gorenstein", "selfrecip"}));

  auto* ve = app.add_subcommand("verify", "Check one theorem case");
  ve->add_option("--id", id)->required();
  std::map<std::string, std::int64_t> int_params;
  for (const char* key : {"n", "k", "l", "m", "t", "i", "N"})
    ve->add_option_function<std::int64_t>(std::string("--") + key, [&int_params, key](std::int64_t v) { int_params[key] = v; });
  std::string v_s, form;
  std::vector<std::string> extra;
  ve->add_option("--s", v_s);
  ve->add_option("--form", form);
  ve->add_option("--param", extra, "Extra key=value parameter");

  auto* su = app.add_subcommand("suite", "Run registry cases");
  su->add_option("--filter", filter, "Glob on theorem ids");
  su->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  su->add_option("--out", out, "Write the JSON report here");
  su->add_flag("--timings", timings, "Include elapsed_ms in reports");

  for (auto* sub : {en, st, bi, eu, ge, ve, su}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("LHP_BUDGET")) {
    try {
      enumeration_budget() = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "LHP_BUDGET is not a number\n";
      return 2;
    }
  }
  if (g.budget) enumeration_budget() = g.budget;

  try {
    if (*en) return cmd_enumerate(g, s_spec, max_weight, max_last, with_stats);
    if (*st) return cmd_stats(g, object, value, s_spec, flavor);
    if (*bi) return cmd_bijection(g, name, bparams, input, inverse);
    if (*eu) return cmd_eulerian(g, s_spec, kind, k, n, roots);
    if (*ge) return cmd_geometry(g, s_spec, op);
    if (*ve) {
      Params p = Params::object();
      for (const auto& [key, v] : int_params) p[key] = v;
      if (!v_s.empty()) p["s"] = v_s;
      if (!form.empty()) p["form"] = form;
      for (const auto& kv : extra) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects key=value");
        const auto val = kv.substr(eq + 1);
        p[kv.substr(0, eq)] = json::accept(val) ? json::parse(val) : json(val);
      }
      return cmd_verify(g, id, p);
    }
    if (*su) return cmd_suite(g, filter, jobs, out, timings);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace lhp::harness
