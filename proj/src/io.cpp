#include "redform/io.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace redform {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> parse_labels(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_array())
    throw ParseError("missing array field '" + field + "'");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& v : j[field]) {
    if (!v.is_string())
      throw ParseError("field '" + field + "' must hold strings");
    std::string s = v.get<std::string>();
    if (!seen.insert(s).second)
      throw ParseError("duplicate label '" + s + "' in '" + field + "'");
    out.push_back(s);
  }
  return out;
}

std::vector<Rational> parse_rationals(const json& j, const std::string& field,
                                      size_t expect) {
  if (!j.contains(field) || !j[field].is_array())
    throw ParseError("missing array field '" + field + "'");
  std::vector<Rational> out;
  for (const auto& v : j[field]) {
    if (!v.is_string())
      throw ParseError("rationals in '" + field + "' must be strings");
    try {
      out.push_back(parse_rational(v.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("in '") + field + "': " + e.what());
    }
  }
  if (out.size() != expect)
    throw ParseError("field '" + field + "' has wrong length");
  return out;
}

Rational parse_one(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": rationals must be strings");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

InstanceFile parse_instance_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid json: ") + e.what());
  }
  InstanceFile f;
  Instance& inst = f.inst;
  inst.t1 = parse_labels(j, "t1");
  inst.t2 = parse_labels(j, "t2");
  inst.lambda1 = parse_rationals(j, "lambda1", inst.t1.size());
  inst.lambda2 = parse_rationals(j, "lambda2", inst.t2.size());
  inst.alternatives = parse_labels(j, "alternatives");
  if (!j.contains("k0") || !j["k0"].is_string())
    throw ParseError("missing string field 'k0'");
  inst.k0 = inst.alt_index(j["k0"].get<std::string>());
  if (inst.k0 < 0)
    throw ParseError("k0 label not among alternatives");
  validate_instance(inst);

  if (j.contains("interim")) {
    const json& ji = j["interim"];
    if (!ji.is_object() || !ji.contains("q1") || !ji.contains("q2"))
      throw ParseError("'interim' needs objects 'q1' and 'q2'");
    bool with_k0 = ji["q1"].contains(inst.alternatives[inst.k0]);
    if (with_k0 != ji["q2"].contains(inst.alternatives[inst.k0]))
      throw ParseError("k0 row must appear in both 'q1' and 'q2' or neither");
    InterimRule q(inst.nk(), inst.n1(), inst.n2(), with_k0);
    for (int k = 0; k < inst.nk(); ++k) {
      const std::string& label = inst.alternatives[k];
      if (k == inst.k0 && !with_k0) continue;
      for (auto [side, n] :
           {std::pair{std::string("q1"), inst.n1()}, {"q2", inst.n2()}}) {
        if (!ji[side].contains(label))
          throw ParseError("interim." + side + " missing alternative '" +
                           label + "'");
        const json& arr = ji[side][label];
        if (!arr.is_array() || static_cast<int>(arr.size()) != n)
          throw ParseError("interim." + side + "." + label +
                           " has wrong length");
        for (int t = 0; t < n; ++t) {
          Rational v = parse_one(arr[t], "interim." + side + "." + label);
          if (side == "q1")
            q.at1(k, t) = v;
          else
            q.at2(k, t) = v;
        }
      }
    }
    for (auto& [key, val] : ji["q1"].items())
      if (inst.alt_index(key) < 0)
        throw ParseError("interim.q1 has unknown alternative '" + key + "'");
    for (auto& [key, val] : ji["q2"].items())
      if (inst.alt_index(key) < 0)
        throw ParseError("interim.q2 has unknown alternative '" + key + "'");
    f.interim = std::move(q);
  }

  if (j.contains("expost")) {
    const json& je = j["expost"];
    if (!je.is_object()) throw ParseError("'expost' must be an object");
    ExPostRule q(inst.nk(), inst.n1(), inst.n2());
    for (int k = 0; k < inst.nk(); ++k) {
      const std::string& label = inst.alternatives[k];
      if (!je.contains(label))
        throw ParseError("expost missing alternative '" + label + "'");
      const json& mat = je[label];
      if (!mat.is_array() || static_cast<int>(mat.size()) != inst.n1())
        throw ParseError("expost." + label + " must have one row per t1 type");
      for (int i1 = 0; i1 < inst.n1(); ++i1) {
        const json& row = mat[i1];
        if (!row.is_array() || static_cast<int>(row.size()) != inst.n2())
          throw ParseError("expost." + label + " row has wrong length");
        for (int i2 = 0; i2 < inst.n2(); ++i2)
          q.at(k, i1, i2) = parse_one(row[i2], "expost." + label);
      }
    }
    f.expost = std::move(q);
  }
  return f;
}

std::string write_instance_file(const InstanceFile& f) {
  const Instance& inst = f.inst;
  json j;
  j["t1"] = inst.t1;
  j["t2"] = inst.t2;
  auto strs = [](const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(rational_str(r));
    return out;
  };
  j["lambda1"] = strs(inst.lambda1);
  j["lambda2"] = strs(inst.lambda2);
  j["alternatives"] = inst.alternatives;
  j["k0"] = inst.alternatives[inst.k0];
  if (f.interim) {
    const InterimRule& q = *f.interim;
    json q1 = json::object(), q2 = json::object();
    for (int k = 0; k < inst.nk(); ++k) {
      if (k == inst.k0 && !q.complete) continue;
      std::vector<std::string> r1, r2;
      for (int t = 0; t < inst.n1(); ++t) r1.push_back(rational_str(q.at1(k, t)));
      for (int t = 0; t < inst.n2(); ++t) r2.push_back(rational_str(q.at2(k, t)));
      q1[inst.alternatives[k]] = r1;
      q2[inst.alternatives[k]] = r2;
    }
    j["interim"] = {{"q1", q1}, {"q2", q2}};
  }
  if (f.expost) {
    const ExPostRule& q = *f.expost;
    json je = json::object();
    for (int k = 0; k < inst.nk(); ++k) {
      json mat = json::array();
      for (int i1 = 0; i1 < inst.n1(); ++i1) {
        json row = json::array();
        for (int i2 = 0; i2 < inst.n2(); ++i2)
          row.push_back(rational_str(q.at(k, i1, i2)));
        mat.push_back(row);
      }
      je[inst.alternatives[k]] = mat;
    }
    j["expost"] = je;
  }
  return j.dump(2) + "\n";
}

std::uint64_t content_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

std::string format_types(const std::vector<std::string>& labels,
                         std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < labels.size(); ++i)
    if (mask >> i & 1u) {
      if (!first) out += ",";
      out += labels[i];
      first = false;
    }
  return out + "}";
}

}  // namespace

std::string format_set1(const Instance& inst, std::uint32_t mask) {
  return format_types(inst.t1, mask);
}

std::string format_set2(const Instance& inst, std::uint32_t mask) {
  return format_types(inst.t2, mask);
}

std::string format_alt_set(const Instance& inst, std::uint32_t gmask) {
  const auto ks = inst.kstar();
  std::string out = "{";
  bool first = true;
  for (size_t j = 0; j < ks.size(); ++j)
    if (gmask >> j & 1u) {
      if (!first) out += ",";
      out += inst.alternatives[ks[j]];
      first = false;
    }
  return out + "}";
}

std::string format_violation(const Instance& inst, const Violation& v) {
  std::ostringstream os;
  switch (v.kind) {
    case Violation::Kind::Conic:
      os << "CONIC k=" << inst.alternatives[v.alt]
         << " exante1=" << rational_str(v.lhs)
         << " exante2=" << rational_str(v.rhs);
      break;
    case Violation::Kind::Negative:
      os << "NEGATIVE player=" << v.player << " k=" << inst.alternatives[v.alt]
         << " t="
         << (v.player == 1 ? inst.t1[v.type] : inst.t2[v.type])
         << " value=" << rational_str(v.lhs);
      break;
    case Violation::Kind::Cut:
      os << "CUT G=" << format_alt_set(inst, v.triple.g)
         << " E1=" << format_set1(inst, v.triple.e1)
         << " E2=" << format_set2(inst, v.triple.e2)
         << " lhs=" << rational_str(v.lhs) << " rhs=" << rational_str(v.rhs);
      break;
  }
  return os.str();
}

}  // namespace redform
