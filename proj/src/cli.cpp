#include "numrat/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <sstream>

#include "numrat/adjunction.hpp"
#include "numrat/birational.hpp"
#include "numrat/catalogue.hpp"
#include "numrat/config_io.hpp"
#include "numrat/cycles.hpp"
#include "numrat/discrepancy.hpp"
#include "numrat/errors.hpp"
#include "numrat/rationality.hpp"

namespace numrat::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string file;
  std::string support;
  std::string divisor;
  std::string method = "auto";
  int bound = kDefaultBound;
  std::string at;
  std::string new_id;
  std::string vertex;
  std::string catalogue_kind;
  std::string name;
  int n = 0;
  int q = 0;
  std::string ade_type;
  std::vector<int> weights;
};

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string render(const std::vector<VertexId>& ids, const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? " " : "") + ids[i] + "=" + values[i].str();
  return s;
}

ojson rational_map(const std::vector<VertexId>& ids, const std::vector<Rational>& values) {
  ojson out = ojson::object();
  for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = values[i].str();
  return out;
}

std::string show(const Divisor& d) { return d.is_zero() ? "0" : d.str(); }

void require_on_graph(const ResolutionGraph& g, const Divisor& d) {
  for (const auto& [id, c] : d.coeffs()) {
    if (!g.contains(id)) throw InputError("divisor mentions unknown vertex '" + id + "'");
  }
}

void emit_config(std::ostream& out, const OrderConfig& c) { out << to_json(c).dump(2) << "\n"; }

ojson map_json(const BirationalMap& m) {
  ojson j;
  j["kind"] = m.kind == BirationalMap::Kind::blowup ? "blowup" : "blowdown";
  j["exceptional"] = m.exceptional;
  j["exceptional_index"] = m.exceptional_index;
  j["centre_index"] = m.centre_index;
  ojson inc = ojson::array();
  for (const auto& i : m.incidence) {
    inc.push_back({{"component", i.component.id},
                   {"kind", i.component.kind == ComponentRef::Kind::vertex ? "vertex" : "curve"},
                   {"mult", i.mult}});
  }
  j["incidence"] = inc;
  return j;
}

void cmd_validate(const Options& o, std::ostream& out) {
  const OrderConfig c = load_config(o.file);
  const auto report = validate(c);
  if (o.json) {
    ojson j;
    j["ok"] = report.ok();
    j["violations"] = ojson::array();
    for (const auto& v : report.violations) {
      j["violations"].push_back({{"code", v.code}, {"location", v.location}, {"message", v.message}});
    }
    out << j.dump() << "\n";
  } else if (report.ok()) {
    out << "ok\n";
  } else {
    for (const auto& v : report.violations) out << v.code << " at " << v.location << ": " << v.message << "\n";
  }
  if (!report.ok()) throw InputError("config has " + std::to_string(report.violations.size()) + " violation(s)");
}

void cmd_cycle(const Options& o, std::ostream& out) {
  const OrderConfig c = load_config(o.file);
  Divisor z;
  if (o.support.empty()) {
    z = numerical_cycle(c.graph);
  } else {
    const auto ids = split_ids(o.support);
    z = numerical_cycle(c.graph, {ids.begin(), ids.end()});
  }
  const Rational self = pair(c.graph.form(), z, z);
  if (o.json) {
    out << ojson{{"cycle", to_json(z)}, {"self_intersection", self.str()}}.dump() << "\n";
  } else {
    out << "Z_num: " << show(z) << "\nZ_num^2: " << self << "\n";
  }
}

void cmd_special(const Options& o, std::ostream& out) {
  const OrderConfig c = load_config(o.file);
  const auto list = special_divisors(c.graph);
  if (o.json) {
    ojson arr = ojson::array();
    for (const auto& d : list) arr.push_back(to_json(d));
    out << ojson{{"special", arr}}.dump() << "\n";
  } else {
    for (const auto& d : list) out << show(d) << "\n";
  }
}

void cmd_disc(const Options& o, std::ostream& out) {
  const OrderConfig c = load_config(o.file);
  const Classification cl = classify(c);
  if (o.json) {
    ojson j;
    j["alpha"] = cl.alpha.empty() ? ojson(nullptr) : rational_map(cl.ids, cl.alpha);
    j["a"] = rational_map(cl.ids, cl.a);
    out << j.dump() << "\n";
  } else {
    out << "alpha: " << (cl.alpha.empty() ? std::string("n/a (positive genus)") : render(cl.ids, cl.alpha)) << "\n";
    out << "a: " << render(cl.ids, cl.a) << "\n";
  }
}

void cmd_classify(const Options& o, std::ostream& out) {
  const OrderConfig c = load_config(o.file);
  const Classification cl = classify(c);
  if (o.json) {
    ojson j;
    j["a"] = rational_map(cl.ids, cl.a);
    j["alpha"] = cl.alpha.empty() ? ojson(nullptr) : rational_map(cl.ids, cl.alpha);
    j["ae"] = rational_map(cl.ids, cl.ae);
    j["min_ae"] = cl.min_ae ? ojson(cl.min_ae->str()) : ojson(nullptr);
    j["crepant"] = cl.crepant;
    j["log_terminal"] = cl.log_terminal;
    j["non_minimal"] = cl.non_minimal;
    out << j.dump() << "\n";
  } else {
    out << "a: " << render(cl.ids, cl.a) << "\n";
    if (!cl.alpha.empty()) out << "alpha: " << render(cl.ids, cl.alpha) << "\n";
    out << "a*e: " << render(cl.ids, cl.ae) << "\n";
    out << "min a*e: " << (cl.min_ae ? cl.min_ae->str() : std::string("none")) << "\n";
    out << "crepant: " << (cl.crepant ? "yes" : "no") << "\n";
    out << "log terminal: " << (cl.log_terminal ? "yes" : "no") << "\n";
    std::string nm;
    for (const auto& id : cl.non_minimal) nm += (nm.empty() ? "" : ",") + id;
    out << "non-minimal curves: " << (nm.empty() ? "none" : nm) << "\n";
  }
}

void cmd_chi(const Options& o, std::ostream& out) {
  const OrderConfig c = load_config(o.file);
  const Divisor d = parse_divisor(o.divisor);
  require_on_graph(c.graph, d);
  const Rational chi = chi_restriction(c, d);
  if (o.json) {
    out << ojson{{"divisor", to_json(d)}, {"chi", chi.str()}}.dump() << "\n";
  } else {
    out << chi << "\n";
  }
}

void cmd_rational(const Options& o, std::ostream& out) {
  const OrderConfig c = load_config(o.file);
  RationalityOptions opts;
  opts.method = parse_method(o.method);
  opts.bound = o.bound;
  const Verdict v = is_numerically_rational(c, opts);
  if (o.json) {
    ojson j;
    j["rational"] = v.rational;
    j["method"] = to_string(v.method);
    if (v.bound_used) j["bound"] = *v.bound_used;
    if (v.witness) {
      j["witness"] = to_json(*v.witness);
      j["witness_value"] = v.witness_value->str();
      j["chi"] = v.chi->str();
    }
    out << j.dump() << "\n";
  } else {
    out << "rational: " << (v.rational ? "true" : "false") << "\n";
    out << "method: " << to_string(v.method);
    if (v.bound_used) out << " (bound " << *v.bound_used << ")";
    out << "\n";
    if (v.witness) {
      out << "witness: " << show(*v.witness) << "\n";
      out << "g(witness): " << *v.witness_value << "\n";
      out << "chi: " << *v.chi << "\n";
    }
  }
}

void emit_map_result(const Options& o, std::ostream& out, const OrderConfig& c, const BirationalMap& m) {
  if (o.json) {
    ojson j;
    j["config"] = to_json(c);
    j["map"] = map_json(m);
    out << j.dump() << "\n";
  } else {
    emit_config(out, c);
  }
}

void cmd_blowup(const Options& o, std::ostream& out) {
  const OrderConfig c = load_config(o.file);
  std::optional<VertexId> id;
  if (!o.new_id.empty()) id = o.new_id;
  const auto [upper, map] = blowup(c, BlowupCenter{split_ids(o.at)}, id);
  emit_map_result(o, out, upper, map);
}

void cmd_blowdown(const Options& o, std::ostream& out) {
  const OrderConfig c = load_config(o.file);
  const auto [lower, map] = blowdown(c, o.vertex);
  emit_map_result(o, out, lower, map);
}

void cmd_minimalize(const Options& o, std::ostream& out) {
  const OrderConfig c = load_config(o.file);
  const auto [minimal, tower] = minimalize(c);
  if (o.json) {
    ojson j;
    j["config"] = to_json(minimal);
    j["contracted"] = tower.created();
    out << j.dump() << "\n";
  } else {
    emit_config(out, minimal);
  }
}

void cmd_catalogue(const Options& o, std::ostream& out) {
  OrderConfig c;
  if (o.catalogue_kind == "cyclic") {
    c = unramified_order(cyclic(o.n, o.q));
  } else if (o.catalogue_kind == "ade") {
    if (o.ade_type.size() != 1) throw InputError("ade: type must be one of A, D, E");
    c = unramified_order(ade(o.ade_type[0], o.n));
  } else if (o.catalogue_kind == "case1") {
    c = case1(o.weights).config;
  } else if (o.catalogue_kind == "fixture") {
    c = fixture(o.name).config;
  } else if (o.catalogue_kind == "list") {
    for (const auto& n : fixture_names()) out << n << "\n";
    return;
  } else {
    throw InputError("unknown catalogue kind '" + o.catalogue_kind + "'");
  }
  out << to_json(c).dump(o.json ? -1 : 2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Numerical rationality of orders on surface resolutions", "numrat"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable JSON output");

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Config file (JSON)")->required();
    return sub;
  };
  file_cmd("validate", "Check a configuration");
  file_cmd("cycle", "Numerical cycle")->add_option("--support", o.support, "Comma-separated vertex ids");
  file_cmd("special", "Special divisors");
  file_cmd("disc", "Surface and order discrepancies");
  file_cmd("classify", "Discrepancy classification");
  file_cmd("chi", "Euler characteristic of A restricted to a divisor")
      ->add_option("--divisor", o.divisor, "Divisor literal id:coeff,...")
      ->required();
  auto* rational = file_cmd("rational", "Numerical rationality verdict");
  rational->add_option("--method", o.method, "auto, special or brute");
  rational->add_option("--bound", o.bound, "Brute-force coefficient bound")->check(CLI::PositiveNumber);
  auto* up = file_cmd("blowup", "Blow up a point");
  up->add_option("--at", o.at, "Components through the centre: id[,id]");
  up->add_option("--id", o.new_id, "Id of the new exceptional curve");
  file_cmd("blowdown", "Contract a (-1)-curve")->add_option("--vertex", o.vertex, "Vertex id")->required();
  file_cmd("minimalize", "Contract K-negative (-1)-curves");
  auto* cat = app.add_subcommand("catalogue", "Print a catalogue configuration");
  cat->add_option("kind", o.catalogue_kind, "cyclic, ade, case1, fixture or list")->required();
  cat->add_option("name", o.name, "Fixture name");
  cat->add_option("--n", o.n, "n");
  cat->add_option("--q", o.q, "q");
  cat->add_option("--type", o.ade_type, "A, D or E");
  cat->add_option("--weights", o.weights, "case1 weights")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "validate") cmd_validate(o, out);
    else if (cmd == "cycle") cmd_cycle(o, out);
    else if (cmd == "special") cmd_special(o, out);
    else if (cmd == "disc") cmd_disc(o, out);
    else if (cmd == "classify") cmd_classify(o, out);
    else if (cmd == "chi") cmd_chi(o, out);
    else if (cmd == "rational") cmd_rational(o, out);
    else if (cmd == "blowup") cmd_blowup(o, out);
    else if (cmd == "blowdown") cmd_blowdown(o, out);
    else if (cmd == "minimalize") cmd_minimalize(o, out);
    else if (cmd == "catalogue") cmd_catalogue(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace numrat::cli
