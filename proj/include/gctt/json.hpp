#pragma once

#include <string>

#include <json.hpp>

#include "gctt/forcing.hpp"
#include "gctt/opsem.hpp"
#include "gctt/program.hpp"
#include "gctt/rules.hpp"
#include "gctt/script.hpp"
#include "gctt/semantics.hpp"

namespace gctt::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "gctt/1";

inline Json envelope(const char* kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

inline Json program(const Program& m) {
  Json j;
  j["tag"] = tag_name(m->tag);
  if (m->tag == PTag::Var) j["index"] = m->index;
  if (m->tag == PTag::Univ) j["level"] = m->index;
  if (m->tag == PTag::CApp || m->tag == PTag::Later || binds_clock(m->tag)) j["clock"] = to_string(m->clock);
  if (!m->kids.empty()) {
    j["args"] = Json::array();
    for (const auto& k : m->kids) j["args"].push_back(program(k));
  }
  return j;
}

inline Json world(const World& w) {
  Json j = Json::object();
  for (const auto& [k, t] : w) j[to_string(k)] = t;
  return j;
}

inline Json eval_outcome(const EvalOutcome& e) {
  Json j = envelope("eval");
  j["outcome"] = to_string(e.kind);
  j["steps"] = e.steps;
  j["term"] = print(e.term);
  if (!e.reason.empty()) j["reason"] = e.reason;
  j["program"] = program(e.term);
  return j;
}

inline const char* status_name(CheckNode::Status s) {
  switch (s) {
    case CheckNode::Status::Ok: return "ok";
    case CheckNode::Status::Failed: return "failed";
    case CheckNode::Status::Skipped: return "skipped";
  }
  return "?";
}

inline Json check_node(const CheckNode& n) {
  Json j;
  j["rule"] = n.label;
  j["judgment"] = print(n.conclusion);
  j["status"] = status_name(n.status);
  if (!n.error.empty()) j["error"] = n.error;
  j["premises"] = Json::array();
  for (const auto& c : n.children) j["premises"].push_back(check_node(c));
  return j;
}

inline Json lemma_report(const LemmaReport& l) {
  Json j;
  j["name"] = l.name;
  j["judgment"] = l.judgment;
  j["ok"] = l.result.ok;
  if (!l.result.ok) {
    j["path"] = l.result.path;
    j["explanation"] = l.result.explanation;
  }
  j["tree"] = check_node(l.result.tree);
  return j;
}

inline Json script_report(const std::string& file, const ScriptReport& r) {
  Json j = envelope("check");
  j["file"] = file;
  j["ok"] = r.ok();
  j["lemmas"] = Json::array();
  for (const auto& l : r.lemmas) j["lemmas"].push_back(lemma_report(l));
  return j;
}

inline Json theorem_result(const TheoremResult& r) {
  Json j;
  j["theorem"] = r.name;
  j["formula"] = r.formula;
  j["passed"] = r.passed;
  j["exhaustive"] = r.exhaustive;
  j["worlds"] = r.worlds;
  j["assignments"] = r.assignments;
  if (r.counterexample) {
    Json c;
    c["world"] = world(r.counterexample->world);
    c["families"] = Json::object();
    for (const auto& [a, d] : r.counterexample->families) c["families"][a] = d;
    j["counterexample"] = c;
  }
  return j;
}

}  // namespace gctt::json
