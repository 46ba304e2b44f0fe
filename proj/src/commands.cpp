#include "bdsk/commands.hpp"

#include <chrono>
#include <sstream>
#include <thread>

#include "bdsk/condition_k.hpp"
#include "bdsk/dynamics.hpp"
#include "bdsk/errors.hpp"
#include "bdsk/generators.hpp"
#include "bdsk/graph.hpp"
#include "bdsk/io.hpp"
#include "bdsk/prim_space.hpp"
#include "bdsk/tails.hpp"

namespace bdsk {

namespace {

using Json = nlohmann::ordered_json;

const char* yes_no(bool b) { return b ? "YES" : "NO"; }

BdsSpec load_spec(const CommandOptions& o) {
  if (!o.input) throw SchemaError("input", "command '" + o.command + "' needs an input file");
  return parse_bds(read_file(*o.input));
}

Json command_echo(const CommandOptions& o) {
  Json echo;
  echo["name"] = o.command;
  if (o.input) echo["input"] = *o.input;
  return echo;
}

Json start_report(const CommandOptions& o, const std::string& digest) {
  Json r;
  r["command"] = command_echo(o);
  r["input_digest"] = digest;
  return r;
}

Json cycle_json(const BdsSpec& spec, const CycleWitness& w) {
  Json j;
  j["word"] = format_word(spec, w.word);
  j["base"] = format_set(spec, w.base);
  j["status"] = "cycle without exit";
  return j;
}

Json tail_json(const BdsSpec& spec, const MaximalTail& t) {
  Json j;
  j["support"] = format_set(spec, t.support);
  j["ideal"] = format_set(spec, spec.unit() - t.support);
  j["cyclic"] = t.cyclic_witness.has_value();
  if (t.cyclic_witness) {
    j["word"] = format_word(spec, t.cyclic_witness->word);
    j["atom"] = spec.atom_id(t.cyclic_witness->atom);
  }
  return j;
}

void write_dot(const CommandOptions& o, const std::string& dot) {
  if (o.dot) write_file(*o.dot, dot);
}

VerdictReport check_l(const CommandOptions& o) {
  const auto spec = load_spec(o);
  auto r = start_report(o, input_digest(spec));
  const auto result = check_condition_L(spec);
  r["verdict"] = {{"headline", std::string("Condition (L): ") + yes_no(result.holds)}, {"holds", result.holds}};
  r["witnesses"] = Json::array();
  if (result.witness) r["witnesses"].push_back(cycle_json(spec, *result.witness));
  r["annotations"] = Json::array();
  return {r, result.holds ? kExitOk : kExitPropertyFails};
}

VerdictReport check_k(const CommandOptions& o) {
  const auto spec = load_spec(o);
  auto r = start_report(o, input_digest(spec));
  const auto verdict = decide_k_direct(spec);
  r["verdict"] = {{"headline", std::string("Condition (K): ") + yes_no(verdict.satisfied)},
                  {"satisfied", verdict.satisfied}};
  r["witnesses"] = Json::array();
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    r["witnesses"].push_back({{"word", format_word(spec, w.word)},
                              {"atom", spec.atom_id(w.atom)},
                              {"base", format_set(spec, w.base)},
                              {"tail", format_set(spec, w.tail_support)},
                              {"corner_n", w.corner_n}});
    Json obstructions = Json::array();
    for (const auto& ob : corner_obstructions(spec)) {
      Json pieces = Json::array();
      for (const auto& p : ob.pieces) pieces.push_back(format_set(spec, p));
      obstructions.push_back({{"tail", format_set(spec, ob.tail_support)},
                              {"word", format_word(spec, ob.word)},
                              {"atom", spec.atom_id(ob.atom)},
                              {"n", ob.n},
                              {"corner", format_set(spec, ob.corner)},
                              {"pieces", pieces}});
    }
    r["verdict"]["obstructions"] = obstructions;
  }
  r["annotations"] = k_annotations(verdict);
  return {r, verdict.satisfied ? kExitOk : kExitPropertyFails};
}

VerdictReport strong_k(const CommandOptions& o) {
  const auto spec = load_spec(o);
  auto r = start_report(o, input_digest(spec));
  const bool holds = decide_strong_k(spec);
  r["verdict"] = {{"headline", std::string("Strong Condition (K): ") + yes_no(holds)}, {"holds", holds}};
  r["witnesses"] = Json::array();
  r["annotations"] = Json::array();
  return {r, holds ? kExitOk : kExitPropertyFails};
}

VerdictReport tails(const CommandOptions& o) {
  const auto spec = load_spec(o);
  auto r = start_report(o, input_digest(spec));
  const auto space = build_tail_space(spec);
  Json list = Json::array();
  std::size_t cyclic = 0;
  r["witnesses"] = Json::array();
  for (const auto& t : space.tails()) {
    list.push_back(tail_json(spec, t));
    if (!t.cyclic_witness) continue;
    ++cyclic;
    r["witnesses"].push_back({{"word", format_word(spec, t.cyclic_witness->word)},
                              {"atom", spec.atom_id(t.cyclic_witness->atom)},
                              {"base", format_set(spec, t.cyclic_witness->base)},
                              {"tail", format_set(spec, t.support)}});
  }
  r["verdict"] = {{"headline", "maximal tails: " + std::to_string(space.size()) + " (cyclic: " +
                                   std::to_string(cyclic) + ")"},
                  {"tails", list}};
  r["annotations"] = Json::array();
  write_dot(o, tail_space_dot(spec, space));
  return {r, kExitOk};
}

VerdictReport ideals(const CommandOptions& o) {
  const auto spec = load_spec(o);
  auto r = start_report(o, input_digest(spec));
  const auto all = enumerate_hs_ideals(spec);
  Json list = Json::array();
  for (const auto& h : all) {
    Json j{{"ideal", format_set(spec, h.atom_set)}, {"proper", h.proper}};
    if (h.proper) j["quotient_condition_L"] = check_condition_L(quotient_bds(spec, h.atom_set)).holds;
    list.push_back(j);
  }
  r["verdict"] = {{"headline", "hereditary saturated ideals: " + std::to_string(all.size())}, {"ideals", list}};
  r["witnesses"] = Json::array();
  r["annotations"] = Json::array();
  return {r, kExitOk};
}

VerdictReport lattice(const CommandOptions& o) {
  const auto spec = load_spec(o);
  auto r = start_report(o, input_digest(spec));
  const auto lat = ideal_lattice(spec);
  Json elements = Json::array();
  for (std::size_t i = 0; i < lat.elements.size(); ++i)
    elements.push_back({{"ideal", format_set(spec, lat.elements[i].atom_set)}, {"prime", static_cast<bool>(lat.prime[i])}});
  Json covers = Json::array();
  for (auto [lo, hi] : lat.covers)
    covers.push_back(format_set(spec, lat.elements[lo].atom_set) + " < " + format_set(spec, lat.elements[hi].atom_set));
  r["verdict"] = {{"headline", lat.label + " (" + std::to_string(lat.elements.size()) + " elements)"},
                  {"complete", lat.complete},
                  {"elements", elements},
                  {"covers", covers}};
  r["witnesses"] = Json::array();
  r["annotations"] = Json::array();
  write_dot(o, lattice_dot(spec, lat));
  return {r, kExitOk};
}

VerdictReport prim(const CommandOptions& o) {
  const auto spec = load_spec(o);
  auto r = start_report(o, input_digest(spec));
  const auto report = prim_report(spec);
  const auto space = build_tail_space(spec);
  Json entries = Json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"tail", format_set(spec, e.support)}, {"ideal", format_set(spec, e.ideal)}});
  Json order = Json::array();
  const auto spec_order = space.specialization();
  for (std::size_t t = 0; t < space.size(); ++t)
    for (std::size_t s = 0; s < space.size(); ++s)
      if (t != s && spec_order[t][s])
        order.push_back(format_set(spec, space.tail(t).support) + " in cl " + format_set(spec, space.tail(s).support));
  r["verdict"] = {{"headline", "Prim space: " + std::to_string(report.entries.size()) + " points"},
                  {"condition_k", report.condition_k},
                  {"points", entries},
                  {"specialization", order},
                  {"bijection_ok", report.bijection_ok},
                  {"order_ok", report.order_ok}};
  if (report.warning) r["verdict"]["warning"] = *report.warning;
  r["witnesses"] = Json::array();
  r["annotations"] = Json::array();
  if (report.condition_k) r["annotations"].push_back("maximal tails are homeomorphic to Prim C*(B,L,theta) (implied, not computed)");
  write_dot(o, tail_space_dot(spec, space));
  return {r, report.bijection_ok && report.order_ok ? kExitOk : kExitDisagreement};
}

VerdictReport from_graph(const CommandOptions& o) {
  if (!o.input) throw SchemaError("input", "from-graph needs a graph file");
  const auto graph = parse_graph(read_file(*o.input));
  BdsSpec spec = [&] {
    if (o.construction == "vertex") return vertex_construction(graph);
    if (o.construction == "boundary") return boundary_construction(graph);
    throw SchemaError("--construction", "expected 'vertex' or 'boundary'");
  }();
  auto r = start_report(o, input_digest(graph));
  r["command"]["construction"] = o.construction;
  if (o.output) {
    write_file(*o.output, serialize_bds(spec));
    r["command"]["output"] = *o.output;
  }
  const bool graph_k = graph_condition_k(graph);
  const bool bds_k = decide_k_direct(spec).satisfied;
  r["verdict"] = {{"headline", o.construction + " construction: " + std::to_string(spec.atom_count()) + " atoms, " +
                                   std::to_string(spec.label_count()) + " labels"},
                  {"atoms", spec.atom_ids()},
                  {"output_digest", input_digest(spec)},
                  {"graph_condition_k", graph_k},
                  {"condition_k", bds_k},
                  {"agree", graph_k == bds_k}};
  r["witnesses"] = Json::array();
  r["annotations"] = Json::array();
  return {r, graph_k == bds_k ? kExitOk : kExitDisagreement};
}

struct Comparison {
  bool direct;
  bool via_quotients;
  bool tails;
  bool agree() const { return direct == via_quotients && direct == tails; }
};

Comparison compare(const BdsSpec& spec) {
  const auto t = enumerate_maximal_tails(spec);
  const bool no_cyclic = std::none_of(t.begin(), t.end(), [](const auto& x) { return x.cyclic_witness.has_value(); });
  return {decide_k_direct(spec).satisfied, decide_k_via_quotients(spec).satisfied, no_cyclic};
}

Json disagreement_json(const BdsSpec& spec, const Comparison& c) {
  return {{"spec", Json::parse(serialize_bds(spec)).dump()},
          {"direct", c.direct},
          {"via_quotients", c.via_quotients},
          {"tails", c.tails}};
}

VerdictReport oracle_compare(const CommandOptions& o) {
  if (o.input) {
    const auto spec = load_spec(o);
    auto r = start_report(o, input_digest(spec));
    const auto c = compare(spec);
    r["verdict"] = {{"headline", c.agree() ? "all deciders agree (1 spec)" : "deciders disagree"},
                    {"specs", 1},
                    {"condition_k", c.direct}};
    r["witnesses"] = Json::array();
    if (!c.agree()) r["witnesses"].push_back(disagreement_json(spec, c));
    r["annotations"] = Json::array();
    return {r, c.agree() ? kExitOk : kExitDisagreement};
  }

  const auto jobs = std::max<std::size_t>(1, o.jobs);
  std::vector<std::optional<Json>> bad(o.count);
  std::vector<char> holds(o.count, 0);
  auto shard = [&](std::size_t first) {
    for (std::size_t i = first; i < o.count; i += jobs) {
      auto rng = item_rng(o.seed, i);
      const auto spec = random_spec(rng, 6, 3);
      const auto c = compare(spec);
      holds[i] = c.direct;
      if (!c.agree()) bad[i] = disagreement_json(spec, c);
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t j = 1; j < jobs; ++j) threads.emplace_back(shard, j);
  shard(0);
  for (auto& t : threads) t.join();

  std::ostringstream tag;
  tag << "seed=" << o.seed << ",count=" << o.count;
  auto r = start_report(o, input_digest(tag.str()));
  r["command"]["seed"] = o.seed;
  r["command"]["count"] = o.count;
  Json witnesses = Json::array();
  for (const auto& b : bad)
    if (b) witnesses.push_back(*b);
  const auto satisfied = static_cast<std::size_t>(std::count(holds.begin(), holds.end(), 1));
  r["verdict"] = {{"headline", witnesses.empty() ? "all deciders agree (" + std::to_string(o.count) + " specs)"
                                                 : "deciders disagree on " + std::to_string(witnesses.size()) +
                                                       " specs"},
                  {"specs", o.count},
                  {"condition_k_holds", satisfied},
                  {"condition_k_fails", o.count - satisfied}};
  r["witnesses"] = witnesses;
  r["annotations"] = Json::array();
  return {r, witnesses.empty() ? kExitOk : kExitDisagreement};
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string inline_object(const Json& obj) {
  std::string out;
  for (const auto& [k, v] : obj.items()) {
    if (!out.empty()) out += ' ';
    if (v.is_array()) {
      std::string items;
      for (const auto& x : v) items += (items.empty() ? "" : ",") + scalar(x);
      out += k + "=[" + items + "]";
    } else {
      out += k + "=" + scalar(v);
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-l", "check-k", "strong-k", "tails", "ideals",
                                              "prim",    "lattice", "from-graph", "oracle-compare"};
  return names;
}

VerdictReport run_command(const CommandOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerdictReport report;
  const auto& c = options.command;
  if (c == "check-l") report = check_l(options);
  else if (c == "check-k") report = check_k(options);
  else if (c == "strong-k") report = strong_k(options);
  else if (c == "tails") report = tails(options);
  else if (c == "ideals") report = ideals(options);
  else if (c == "prim") report = prim(options);
  else if (c == "lattice") report = lattice(options);
  else if (c == "from-graph") report = from_graph(options);
  else if (c == "oracle-compare") report = oracle_compare(options);
  else throw SchemaError("command", "unknown command '" + c + "'");
  if (options.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report.json["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  return report;
}

std::string VerdictReport::text() const {
  std::ostringstream os;
  const auto& cmd = json.at("command");
  os << "command: " << inline_object(cmd) << "\n";
  os << "input digest: " << json.at("input_digest").get<std::string>() << "\n";
  const auto& verdict = json.at("verdict");
  os << verdict.at("headline").get<std::string>() << "\n";
  for (const auto& [k, v] : verdict.items()) {
    if (k == "headline") continue;
    if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i)
        os << "  " << k << "[" << i << "]: " << (v[i].is_object() ? inline_object(v[i]) : scalar(v[i])) << "\n";
      if (v.empty()) os << "  " << k << ": none\n";
    } else {
      os << "  " << k << ": " << scalar(v) << "\n";
    }
  }
  for (const auto& w : json.at("witnesses")) os << "witness: " << inline_object(w) << "\n";
  for (const auto& a : json.at("annotations")) os << "annotation: " << a.get<std::string>() << "\n";
  if (json.contains("timing_ms")) os << "timing: " << json.at("timing_ms").dump() << " ms\n";
  return os.str();
}

std::pair<int, std::string> describe_current_exception() {
  try {
    throw;
  } catch (const SizeLimitError& e) {
    return {kExitSizeLimit, std::string("size limit: ") + e.what()};
  } catch (const SchemaError& e) {
    return {kExitInputError, std::string("input error: ") + e.what()};
  } catch (const ValidationError& e) {
    return {kExitInputError, std::string("input error: ") + e.what()};
  } catch (const InfiniteBoundaryError& e) {
    return {kExitInputError, std::string("input error: ") + e.what()};
  } catch (const UniverseMismatch& e) {
    return {kExitInputError, std::string("input error: ") + e.what()};
  } catch (const std::exception& e) {
    return {kExitDisagreement, std::string("internal error: ") + e.what()};
  } catch (...) {
    return {kExitDisagreement, "internal error: unknown exception"};
  }
}

}  // namespace bdsk
