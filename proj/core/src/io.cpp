#include "dbruhat/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace dbruhat {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

std::vector<int> parse_ints(const RootSystem& R, std::string_view text, std::string_view what) {
  auto parts = split(trim(text), ',');
  std::vector<int> out;
  for (auto p : parts) out.push_back(parse_int(p, what));
  if (static_cast<int>(out.size()) != R.rank())
    throw ParseError(std::string(what) + " needs " + std::to_string(R.rank()) + " comma-separated integers");
  return out;
}

template <class V>
std::string join(const V& v) {
  std::string s;
  for (int i = 0; i < v.rank(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> parse_word(const RootSystem& R, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty Weyl word; use 'e' for the identity");
  if (text == "e" || text == "1") return {};
  std::vector<int> word;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string_view t = tok;
    if (t.front() == 's') t.remove_prefix(1);
    const int i = parse_int(t, "Weyl word");
    if (i < 1 || i > R.rank()) throw DomainError("simple reflection s" + std::to_string(i) + " out of range for " + R.label());
    word.push_back(i - 1);
  }
  return word;
}

Json coweight_json(const Coweight& mu) { return Json(std::vector<int>(mu.begin(), mu.end())); }
Json root_json(const RootSystem& R, RootIndex a) {
  const auto& v = R.root(a);
  return Json(std::vector<int>(v.begin(), v.end()));
}

Json bound_json(const std::optional<Bound>& b) {
  if (!b) return nullptr;
  return Json{{"kind", b->exact ? "exact" : "upper"}, {"value", b->value}};
}

}  // namespace

WeylElement parse_weyl(const RootSystem& R, std::string_view text) {
  const auto word = parse_word(R, text);
  return WeylElement::from_word(R, word);
}

std::string format_weyl(const WeylElement& w) {
  if (w.is_identity()) return "e";
  std::string s;
  for (int i : w.reduced_word()) s += (s.empty() ? "s" : " s") + std::to_string(i + 1);
  return s;
}

Coweight parse_coweight(const RootSystem& R, std::string_view text) {
  const auto v = parse_ints(R, text, "coweight");
  return Coweight::from(v);
}

std::string format_coweight(const Coweight& mu) { return join(mu); }

RootIndex parse_root(const RootSystem& R, std::string_view text) {
  const auto v = parse_ints(R, text, "root");
  const auto idx = R.find(RootVector::from(v));
  if (!idx) throw DomainError("'" + std::string(trim(text)) + "' is not a root of " + R.label());
  return *idx;
}

std::string format_root(const RootSystem& R, RootIndex a) { return join(R.root(a)); }

AffineElement parse_affine(const RootSystem& R, std::string_view text) {
  const auto parts = split(text, ';');
  if (parts.size() != 2) throw ParseError("affine element must look like '<word>;<coweight>'");
  return AffineElement(parse_weyl(R, parts[0]), parse_coweight(R, parts[1]));
}

std::string format_affine(const AffineElement& x) { return format_weyl(x.w()) + ";" + format_coweight(x.mu()); }

ReflectionOrder parse_order(const RootSystem& R, std::string_view text) {
  text = trim(text);
  if (text.find(',') == std::string_view::npos || text.find('s') != std::string_view::npos) {
    const auto word = parse_word(R, text);
    return ReflectionOrder::from_reduced_word(R, word);
  }
  std::vector<RootIndex> seq;
  for (auto part : split(text, ';')) {
    const RootIndex a = parse_root(R, part);
    if (!R.is_positive(a)) throw DomainError("reflection orders list positive roots only");
    seq.push_back(a);
  }
  return ReflectionOrder::from_roots(R, seq);
}

std::string format_order(const ReflectionOrder& order) {
  std::string s;
  for (int i : order.word()) s += (s.empty() ? "s" : " s") + std::to_string(i + 1);
  return s;
}

std::string format_order_roots(const ReflectionOrder& order) {
  std::string s;
  for (RootIndex a : order.roots()) s += (s.empty() ? "" : ";") + format_root(order.system(), a);
  return s;
}

WeightWindow parse_window(const RootSystem& R, std::string_view text) {
  text = trim(text);
  if (text == "2rho") return WeightWindow::box(R.two_rho_check());
  std::vector<Coweight> ws;
  for (auto part : split(text, ';')) ws.push_back(parse_coweight(R, part));
  return WeightWindow(std::move(ws));
}

std::vector<int> parse_index_set(const RootSystem& R, std::string_view text) {
  text = trim(text);
  std::vector<int> J;
  if (text.empty()) return J;
  for (auto part : split(text, ',')) {
    const int i = parse_int(part, "index set");
    if (i < 1 || i > R.rank()) throw DomainError("simple index " + std::to_string(i) + " out of range");
    J.push_back(i - 1);
  }
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  return J;
}

Json to_json(const RootSystem& R) {
  Json roots = Json::array();
  for (RootIndex a = 0; a < R.num_positive(); ++a)
    roots.push_back({{"root", root_json(R, a)}, {"coroot", coweight_json(R.coroot(a))}, {"long", R.is_long(a)}});
  Json cartan = Json::array();
  for (int i = 0; i < R.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < R.rank(); ++j) row.push_back(R.cartan(i, j));
    cartan.push_back(row);
  }
  return {{"type", R.label()},
          {"rank", R.rank()},
          {"cartan", cartan},
          {"positive_roots", roots},
          {"two_rho", std::vector<int>(R.two_rho().begin(), R.two_rho().end())},
          {"two_rho_check", coweight_json(R.two_rho_check())},
          {"highest_root", root_json(R, R.highest_root())}};
}

Json to_json(const WeightMultiset& m) {
  Json out = Json::array();
  for (const auto& [k, mult] : m.entries())
    out.push_back({{"weight", coweight_json(k.weight)},
                   {"length", k.length},
                   {"short", k.short_count},
                   {"long", k.long_count},
                   {"mult", mult}});
  return out;
}

Json to_json(const LabelledPath& p) {
  const RootSystem& R = p.start().system();
  Json edges = Json::array();
  for (const auto& e : p.edges()) edges.push_back({{"root", root_json(R, e.root)}, {"label", e.label}});
  return {{"start", format_weyl(p.start())}, {"edges", edges}};
}

Json to_json(const ReflectionOrder& order) {
  Json roots = Json::array();
  for (RootIndex a : order.roots()) roots.push_back(root_json(order.system(), a));
  return {{"word", format_order(order)}, {"roots", roots}};
}

Json to_json(const AdmissibleType& tau) {
  Json entries = Json::array();
  for (const auto& e : tau.entries()) entries.push_back({{"index", e.index}, {"value", e.value}});
  return {{"x", format_affine(tau.x())}, {"u", format_weyl(tau.u())}, {"entries", entries}, {"dim", type_dimension(tau)}};
}

Json to_json(const IntersectionCensus& c) {
  Json pieces = Json::array();
  for (const auto& p : c.pieces) pieces.push_back({{"path", to_json(p.path)}, {"dim", p.dim}});
  return {{"pieces", pieces}, {"dim", c.dim ? Json(*c.dim) : Json("empty")}, {"top_count", c.top_count}};
}

Json to_json(const ADLVReport& r) {
  Json E = Json::array();
  for (const auto& entry : r.E)
    E.push_back({{"u", format_weyl(entry.u)}, {"v", format_weyl(entry.v)}, {"lengths", entry.lengths}});
  Json sp = nullptr;
  if (r.superparabolic) {
    std::vector<int> J;
    for (int j : r.superparabolic->J) J.push_back(j + 1);
    sp = {{"J", J}, {"C_times_2", r.superparabolic->c_times_2}, {"witness", format_weyl(r.superparabolic->witness)}};
  }
  return {{"verdict", to_string(r.verdict)},
          {"e", r.e ? Json(*r.e) : Json()},
          {"d", r.d ? Json(*r.d) : Json()},
          {"dimension", bound_json(r.dimension)},
          {"components", bound_json(r.components)},
          {"superparabolic", sp},
          {"E", E}};
}

Json to_json(const QuantumBruhatGraph& Q) {
  const WeylGroup& W = Q.group();
  Json out = Json::array();
  for (const auto& e : Q.edges())
    out.push_back({{"from", format_weyl(W.element(e.from))},
                   {"to", format_weyl(W.element(e.to))},
                   {"root", root_json(W.system(), e.root)},
                   {"kind", e.up ? "up" : "down"},
                   {"weight", coweight_json(e.weight)}});
  return out;
}

Json to_json(const QbgCompareReport& r) {
  return {{"distance", r.distance}, {"wt", coweight_json(r.wt)}, {"checks", r.checks}, {"violations", r.violations}};
}

Json to_json(const HyperspecialReport& r) {
  return {{"expected_dimension", r.expected_dimension},
          {"kostant", r.kostant},
          {"analysis", to_json(r.analysis)},
          {"mismatches", r.mismatches}};
}

std::string emit(const Json& j) { return j.dump() + "\n"; }

}  // namespace dbruhat
