#include "zaremba/serialize.hpp"

namespace zaremba {
namespace {

Json quotients_to_json(const std::vector<Natural>& quotients) {
  Json arr = Json::array();
  for (const Natural& a : quotients) arr.push_back(a.str());
  return arr;
}

}  // namespace

Json envelope(const std::string& command, Json payload) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["payload"] = std::move(payload);
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json to_json(const Rational& x) {
  Json j;
  j["num"] = x.num.str();
  j["den"] = x.den.str();
  return j;
}

Json to_json(const ContinuedFraction& w) { return quotients_to_json(w.quotients); }

Json to_json(const Certificate& c) {
  Json j;
  j["q"] = c.q.str();
  j["a"] = c.a.str();
  j["cf"] = to_json(c.word);
  j["K"] = c.achieved_k.str();
  j["bound"] = c.claimed_bound.str();
  j["method"] = method_name(c.method);
  Json trace = Json::array();
  for (const TraceStep& st : c.trace) {
    Json step;
    step["op"] = trace_op_name(st.op);
    step["description"] = st.description;
    step["multiplier"] = st.multiplier.str();
    step["denominator"] = st.denominator.str();
    trace.push_back(std::move(step));
  }
  j["trace"] = std::move(trace);
  return j;
}

Json to_json(const VerificationResult& v) {
  Json j;
  j["ok"] = v.ok;
  j["reasons"] = v.reasons;
  return j;
}

Json to_json(const OracleReport& r) {
  Json j;
  j["q"] = r.q.str();
  j["min_k_canonical"] = r.min_k_canonical.str();
  j["min_k_best_rep"] = r.min_k_best_rep.str();
  Json canon = Json::array(), best = Json::array();
  for (const Natural& a : r.minimizers_canonical) canon.push_back(a.str());
  for (const Natural& a : r.minimizers_best_rep) best.push_back(a.str());
  j["minimizers_canonical"] = std::move(canon);
  j["minimizers_best_rep"] = std::move(best);
  return j;
}

Json to_json(const DecompositionChain& chain) {
  Json j;
  j["q"] = chain.q0.str();
  j["n_index"] = chain.n_index;
  Json levels = Json::array();
  for (const auto& level : chain.levels) {
    Json l;
    l["p"] = level.p_level.str();
    l["q"] = level.q_level.str();
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  return j;
}

Json to_json(const FoldResult& f) {
  Json j;
  j["b"] = f.multiplier_b.str();
  j["value"] = to_json(f.value);
  j["cf"] = to_json(f.word);
  return j;
}

Json to_json(const std::vector<ScanRow>& rows) {
  Json arr = Json::array();
  for (const ScanRow& row : rows) {
    Json r;
    r["q"] = row.q.str();
    if (row.error) {
      r["error"] = *row.error;
    } else {
      r["rad"] = row.rad.str();
      r["min_k_canonical"] = row.min_k_canonical.str();
      r["constructed_k"] = row.constructed_k.str();
      r["claimed_bound"] = row.claimed_bound.str();
    }
    arr.push_back(std::move(r));
  }
  return arr;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::string out = "q,rad,min_k_canonical,constructed_k,claimed_bound\n";
  for (const ScanRow& row : rows) {
    out += row.q.str();
    if (row.error) {
      out += ",,,,";
    } else {
      out += "," + row.rad.str();
      out += "," + row.min_k_canonical.str();
      out += "," + row.constructed_k.str();
      out += "," + row.claimed_bound.str();
    }
    out += "\n";
  }
  return out;
}

}  // namespace zaremba
