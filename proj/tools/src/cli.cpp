#include "dbruhat/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dbruhat/io.hpp"
#include "dbruhat/verify.hpp"

namespace dbruhat::cli {

namespace {

struct OptionSpec {
  std::string name;
  bool required;
  std::string help;
};

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<OptionSpec> options;
  bool takes_suite = false;
  bool takes_force = false;
};

const std::vector<CommandSpec>& specs() {
  static const std::vector<CommandSpec> s{
      {"rootsys", "root system data", {{"type", true, "Cartan label, e.g. A2"}}},
      {"orders", "all reflection orders", {{"type", true, "Cartan label"}}, false, true},
      {"dbg-paths",
       "increasing labelled paths with a given weight",
       {{"type", true, "Cartan label"},
        {"from", true, "start vertex"},
        {"to", true, "end vertex"},
        {"weight", true, "target weight"},
        {"order", false, "reflection order (word or roots)"},
        {"n", false, "number of leading roots allowed"}}},
      {"wts",
       "weight multiset wts(from => to ~> via)",
       {{"type", true, "Cartan label"},
        {"from", true, "start vertex"},
        {"to", true, "end vertex"},
        {"via", false, "bounding element, defaults to --to"},
        {"weights", true, "window: '2rho' or coweights separated by ';'"}}},
      {"qbg",
       "quantum Bruhat graph edges, or one distance",
       {{"type", true, "Cartan label"},
        {"from", false, "start vertex"},
        {"to", false, "end vertex"},
        {"window", false, "window for the double Bruhat comparison"}}},
      {"types",
       "admissible types of x through u",
       {{"type", true, "Cartan label"},
        {"x", true, "affine element '<word>;<coweight>'"},
        {"u", true, "Weyl element"},
        {"order", false, "reflection order"},
        {"n", false, "number of leading roots allowed"}}},
      {"intersect",
       "semi-infinite orbit intersection census",
       {{"type", true, "Cartan label"},
        {"u", true, "Weyl element"},
        {"v", true, "Weyl element"},
        {"x", true, "affine element"},
        {"y", true, "affine element"}}},
      {"adlv",
       "affine Deligne-Lusztig variety analysis",
       {{"type", true, "Cartan label"}, {"x", true, "affine element"}, {"nu", true, "dominant Newton point"}}},
      {"verify",
       "run an invariant battery",
       {{"type", true, "Cartan label"}, {"window", false, "weight window"}, {"threads", false, "worker threads"}},
       true,
       true},
  };
  return s;
}

const CommandSpec& spec_of(const std::string& name) {
  for (const auto& s : specs())
    if (s.name == name) return s;
  throw ParseError("unknown subcommand '" + name + "'");
}

int parse_count(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("--" + what + " expects an integer, got '" + text + "'");
}

const std::string& opt(const Command& c, const std::string& name) { return c.options.at(name); }
bool has(const Command& c, const std::string& name) { return c.options.contains(name); }

Json cmd_rootsys(const Command& c) {
  const RootSystem R = RootSystem::build(opt(c, "type"));
  Json j = to_json(R);
  if (R.rank() <= kVerifyRankCap || c.force) j["weyl_order"] = WeylGroup(R).order();
  return j;
}

Json cmd_orders(const Command& c) {
  const RootSystem R = RootSystem::build(opt(c, "type"));
  const auto count = count_reduced_words(longest_element(R));
  if (count > 100000 && !c.force) throw DomainError(std::to_string(count) + " reflection orders; pass --force to list them");
  Json list = Json::array();
  for_each_order(R, [&](const ReflectionOrder& o) { list.push_back(to_json(o)); });
  return {{"type", R.label()}, {"count", count}, {"orders", list}};
}

std::pair<ReflectionOrder, int> order_and_bound(const RootSystem& R, const Command& c) {
  ReflectionOrder order = has(c, "order") ? parse_order(R, opt(c, "order")) : canonical_order(R);
  const int n = has(c, "n") ? parse_count(opt(c, "n"), "n") : order.size();
  if (n < 0 || n > order.size()) throw DomainError("--n must lie in 0.." + std::to_string(order.size()));
  return {std::move(order), n};
}

Json cmd_paths(const Command& c) {
  const RootSystem R = RootSystem::build(opt(c, "type"));
  const WeylGroup W(R);
  const auto [order, n] = order_and_bound(R, c);
  Json list = Json::array();
  for (const auto& p : enumerate_increasing_paths(W, order, n, parse_weyl(R, opt(c, "from")), parse_weyl(R, opt(c, "to")),
                                                  parse_coweight(R, opt(c, "weight"))))
    list.push_back(to_json(p));
  return list;
}

Json cmd_wts(const Command& c) {
  const RootSystem R = RootSystem::build(opt(c, "type"));
  const WeylGroup W(R);
  const WeylElement to = parse_weyl(R, opt(c, "to"));
  const WeylElement via = has(c, "via") ? parse_weyl(R, opt(c, "via")) : to;
  return to_json(wts_multiset(W, parse_weyl(R, opt(c, "from")), to, via, parse_window(R, opt(c, "weights"))));
}

Json cmd_qbg(const Command& c) {
  const RootSystem R = RootSystem::build(opt(c, "type"));
  const WeylGroup W(R);
  const QuantumBruhatGraph Q(W);
  if (has(c, "from") != has(c, "to")) throw ParseError("--from and --to go together");
  if (!has(c, "from")) return to_json(Q);
  const WeylElement u = parse_weyl(R, opt(c, "from"));
  const WeylElement v = parse_weyl(R, opt(c, "to"));
  const auto [d, wt] = Q.distance_weight(u, v);
  Json j{{"distance", d}, {"wt", std::vector<int>(wt.begin(), wt.end())}};
  if (has(c, "window")) j["compare"] = to_json(qbg_dbg_compare(Q, u, v, parse_window(R, opt(c, "window"))));
  return j;
}

Json cmd_types(const Command& c) {
  const RootSystem R = RootSystem::build(opt(c, "type"));
  const WeylGroup W(R);
  const auto [order, n] = order_and_bound(R, c);
  Json list = Json::array();
  for (const auto& t : enumerate_admissible_types(W, parse_affine(R, opt(c, "x")), parse_weyl(R, opt(c, "u")), order, n))
    list.push_back(to_json(t));
  return {{"order", to_json(order)}, {"n", n}, {"types", list}};
}

Json cmd_intersect(const Command& c) {
  const RootSystem R = RootSystem::build(opt(c, "type"));
  const WeylGroup W(R);
  return to_json(semi_infinite_intersection(W, parse_weyl(R, opt(c, "u")), parse_weyl(R, opt(c, "v")),
                                            parse_affine(R, opt(c, "x")), parse_affine(R, opt(c, "y"))));
}

Json cmd_adlv(const Command& c) {
  const RootSystem R = RootSystem::build(opt(c, "type"));
  const WeylGroup W(R);
  return to_json(adlv_analyze(W, parse_affine(R, opt(c, "x")), SigmaClass::make(R, parse_coweight(R, opt(c, "nu")))));
}

std::pair<Json, bool> cmd_verify(const Command& c) {
  const RootSystem R = RootSystem::build(opt(c, "type"));
  const std::string& suite = c.positionals.at(0);
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw ParseError("unknown suite '" + suite + "'");
  VerifyOptions o;
  if (has(c, "window")) o.window = opt(c, "window");
  const unsigned cap = default_threads();
  o.threads = has(c, "threads") ? static_cast<unsigned>(std::max(1, parse_count(opt(c, "threads"), "threads"))) : cap;
  if (std::getenv("DBRUHAT_THREADS")) o.threads = std::min(o.threads, cap);
  o.force = c.force;
  bool all_ok = true;
  Json suites = Json::array();
  for (const auto& s : run_verify(suite, R, o)) {
    all_ok = all_ok && s.ok();
    suites.push_back(to_json(s));
  }
  return {Json{{"type", R.label()}, {"ok", all_ok}, {"suites", suites}}, all_ok};
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void table(std::ostream& out, const Json& rows, const std::string& indent) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::size_t> width;
  for (const auto& k : cols) {
    std::size_t w = k.size();
    for (const auto& r : rows) w = std::max(w, r.contains(k) ? cell(r[k]).size() : 0);
    width.push_back(w);
  }
  auto line = [&](auto&& get) {
    out << indent;
    for (std::size_t i = 0; i < cols.size(); ++i) out << std::left << std::setw(static_cast<int>(width[i]) + 2) << get(i);
    out << "\n";
  };
  line([&](std::size_t i) { return cols[i]; });
  for (const auto& r : rows) line([&](std::size_t i) { return r.contains(cols[i]) ? cell(r[cols[i]]) : std::string(); });
}

bool tabular(const Json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& r) { return r.is_object(); });
}

void pretty(std::ostream& out, const Json& j, const std::string& indent = "") {
  if (tabular(j)) {
    table(out, j, indent);
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (tabular(v) || (v.is_object() && !v.empty())) {
        out << indent << k << ":\n";
        pretty(out, v, indent + "  ");
      } else {
        out << indent << k << ": " << cell(v) << "\n";
      }
    }
  } else {
    out << indent << cell(j) << "\n";
  }
}

void write(std::ostream& out, const Json& j, bool as_table) {
  if (as_table) pretty(out, j);
  else out << emit(j);
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : specs()) n.push_back(s.name);
    return n;
  }();
  return names;
}

Command parse(std::span<const std::string> args) {
  CLI::App app{"Double Bruhat graph and affine Deligne-Lusztig toolkit", "dbruhat"};
  app.require_subcommand(1);
  bool pretty_flag = false;
  app.add_flag("--pretty", pretty_flag, "human-readable tables instead of JSON");

  struct Slot {
    const CommandSpec* spec;
    CLI::App* sub;
    std::vector<std::string> values;
    std::string suite;
    bool force = false;
  };
  std::vector<Slot> slots;
  slots.reserve(specs().size());
  for (const auto& s : specs()) {
    slots.push_back({&s, app.add_subcommand(s.name, s.help), std::vector<std::string>(s.options.size()), {}, false});
    auto& slot = slots.back();
    slot.sub->fallthrough();  // --pretty may follow the subcommand
    for (std::size_t i = 0; i < s.options.size(); ++i) {
      auto* o = slot.sub->add_option("--" + s.options[i].name, slot.values[i], s.options[i].help);
      if (s.options[i].required) o->required();
    }
    if (s.takes_suite) slot.sub->add_option("suite", slot.suite, "suite name or 'all'")->required();
    if (s.takes_force) slot.sub->add_flag("--force", slot.force, "lift size caps");
  }

  std::vector<const char*> argv{"dbruhat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
    throw HelpRequested{sub ? sub->help() : app.help()};
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }

  Command cmd;
  cmd.pretty = pretty_flag;
  for (auto& slot : slots) {
    if (!slot.sub->parsed()) continue;
    cmd.subcommand = slot.spec->name;
    for (std::size_t i = 0; i < slot.values.size(); ++i)
      if (slot.sub->count("--" + slot.spec->options[i].name) > 0) cmd.options[slot.spec->options[i].name] = slot.values[i];
    if (slot.spec->takes_suite) cmd.positionals.push_back(slot.suite);
    cmd.force = slot.force;
  }
  return cmd;
}

std::vector<std::string> serialize(const Command& cmd) {
  const CommandSpec& s = spec_of(cmd.subcommand);
  std::vector<std::string> out;
  if (cmd.pretty) out.push_back("--pretty");
  out.push_back(cmd.subcommand);
  for (const auto& p : cmd.positionals) out.push_back(p);
  for (const auto& o : s.options)
    if (auto it = cmd.options.find(o.name); it != cmd.options.end()) {
      out.push_back("--" + o.name);
      out.push_back(it->second);
    }
  if (cmd.force) out.push_back("--force");
  return out;
}

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    Json result;
    int status = ok;
    const auto& s = cmd.subcommand;
    if (s == "rootsys") result = cmd_rootsys(cmd);
    else if (s == "orders") result = cmd_orders(cmd);
    else if (s == "dbg-paths") result = cmd_paths(cmd);
    else if (s == "wts") result = cmd_wts(cmd);
    else if (s == "qbg") result = cmd_qbg(cmd);
    else if (s == "types") result = cmd_types(cmd);
    else if (s == "intersect") result = cmd_intersect(cmd);
    else if (s == "adlv") result = cmd_adlv(cmd);
    else if (s == "verify") {
      bool passed = false;
      std::tie(result, passed) = cmd_verify(cmd);
      if (!passed) status = domain_error;
    } else {
      throw ParseError("unknown subcommand '" + s + "'");
    }
    write(out, result, cmd.pretty);
    return status;
  } catch (const ParseError& e) {
    out << emit(error_json("parse", e.what()));
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const DomainError& e) {
    out << emit(error_json("domain", e.what()));
    err << "error: " << e.what() << "\n";
    return domain_error;
  } catch (const ConsistencyError& e) {
    out << emit(error_json("consistency", e.what()));
    err << "internal check failed: " << e.what() << "\n";
    return domain_error;
  }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return ok;
  } catch (const ParseError& e) {
    out << emit(error_json("parse", e.what()));
    err << e.what() << "\n";
    return parse_error;
  }
  return execute(cmd, out, err);
}

}  // namespace dbruhat::cli
