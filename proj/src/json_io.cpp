#include "symu/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace symu {

using nlohmann::json;

json group_to_json(const Group& g) {
  json j;
  j["label"] = g.label;
  j["order"] = g.order;
  j["table"] = g.table;
  json gens = json::array();
  for (const auto& [name, idx] : g.generators) gens.push_back({{"name", name}, {"index", idx}});
  j["generators"] = gens;
  return j;
}

Group group_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("group JSON must be an object");
  std::string label = j.value("label", "");
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  int order = j.at("order").get<int>();
  if (order != static_cast<int>(table.size()))
    throw std::invalid_argument("group JSON: order does not match table size");
  std::vector<std::pair<std::string, int>> gens;
  for (const auto& e : j.at("generators"))
    gens.emplace_back(e.at("name").get<std::string>(), e.at("index").get<int>());
  return finalize_group(label, std::move(table), std::move(gens));  // audit re-run here
}

Group load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("bad JSON in " + path + ": " + e.what());
  }
  return group_from_json(j);
}

void save_group_file(const Group& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write group file: " + path);
  out << group_to_json(g).dump(2) << "\n";
}

namespace {

json sentry_to_json(const Group& g, const SEntry& e) {
  json j;
  j["kind"] = e.involution ? "involution" : "pair";
  j["element"] = e.describe(g);
  if (e.involution)
    j["g"] = e.g;
  else
    j["g"] = json::array({e.g, e.g_inv});
  return j;
}

}  // namespace

json goodness_to_json(const Group& g, const GoodnessReport& rep) {
  json j;
  j["label"] = g.label;
  j["order"] = g.order;
  j["good"] = rep.good;
  j["ring"] = rep.ring;
  if (rep.witness) {
    j["witness"] = {{"a", sentry_to_json(g, rep.witness->first)},
                    {"b", sentry_to_json(g, rep.witness->second)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json classification_to_json(const ClassificationReport& rep) {
  json j;
  j["label"] = rep.label;
  j["order"] = rep.order;
  j["ring"] = rep.ring;
  j["good"] = rep.goodness.good;
  j["mode"] = rep.mode;

  json conds;
  const ConditionResults& c = rep.rhs.conditions;
  conds["i"] = {{"holds", c.i}};
  if (c.i_witness)
    conds["i"]["witness"] = {{"A", c.i_witness->subgroup_a}, {"b", c.i_witness->b}};
  conds["ii"] = {{"holds", c.ii}};
  conds["iii"] = {{"holds", c.iii}};
  conds["iv"] = {{"holds", c.iv}};
  if (!c.iso_target.empty()) conds["iso_target"] = c.iso_target;
  j["conditions"] = conds;

  j["theorem_rhs"] = {{"holds", rep.rhs.good},
                      {"abelian", rep.rhs.abelian},
                      {"two_group", rep.rhs.two_group}};
  if (rep.rhs.decomposition) {
    j["decomposition"] = {{"E", rep.rhs.decomposition->e_elements},
                          {"H", rep.rhs.decomposition->h_elements},
                          {"condition", rep.rhs.decomposition->condition}};
  } else {
    j["decomposition"] = nullptr;
  }

  if (rep.lemma1) {
    j["lemma1"] = {{"pass", rep.lemma1->pass}};
    if (rep.lemma1->offender)
      j["lemma1"]["offender"] = json::array({rep.lemma1->offender->first, rep.lemma1->offender->second});
  } else {
    j["lemma1"] = nullptr;
  }
  if (rep.lemma2) {
    const char* status = rep.lemma2->status == Lemma2Result::Status::verified     ? "verified"
                         : rep.lemma2->status == Lemma2Result::Status::failed     ? "failed"
                                                                                  : "inapplicable";
    j["lemma2"] = {{"status", status}};
    if (!rep.lemma2->reason.empty()) j["lemma2"]["reason"] = rep.lemma2->reason;
    if (rep.lemma2->status == Lemma2Result::Status::verified)
      j["lemma2"]["witness"] = {{"A", rep.lemma2->abelian_a}, {"b", rep.lemma2->b}};
  } else {
    j["lemma2"] = nullptr;
  }
  return j;
}

json census_to_json(const UnitCensus& census) {
  json j;
  j["label"] = census.label;
  j["order"] = census.order;
  j["ring"] = "GF(2)";
  j["s_size"] = census.s_size;
  j["symmetric_elements"] = census.symmetric_elements;
  j["symmetric_units"] = census.symmetric_units;
  j["closure"] = {{"closed", census.closure.closed},
                  {"mode", census.closure.exact ? "exact" : "sampled"},
                  {"units", census.closure.units},
                  {"pairs_checked", census.closure.pairs_checked}};
  if (census.closure.witness) {
    j["closure"]["witness"] = {{"u", census.closure.witness->first.to_string()},
                               {"v", census.closure.witness->second.to_string()}};
  }
  return j;
}

}  // namespace symu
