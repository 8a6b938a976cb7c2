#include "schublines/certificate_json.hpp"

#include "schublines/errors.hpp"

#include <unordered_map>
#include <vector>

namespace schublines {

namespace {

using nlohmann::json;

json conditions_json(std::span<const Condition> xs) {
  return json(std::vector<Condition>(xs.begin(), xs.end()));
}

class Writer {
 public:
  explicit Writer(bool share) : share_(share) {}

  json write(const CertificateNode& node) {
    if (share_) {
      if (auto it = ids_.find(&node); it != ids_.end()) return json{{"ref", it->second}};
    }
    json j;
    if (share_) {
      const auto id = static_cast<std::uint64_t>(ids_.size());
      ids_.emplace(&node, id);
      j["id"] = id;
    }
    j["problem"] = conditions_json(node.problem.conditions());
    j["reduced"] = conditions_json(node.reduced.conditions());
    j["kostka"] = to_decimal(node.kostka_value);
    j["clause"] = std::string(clause_name(node.clause));
    if (node.clause == Clause::BaseSmallK) {
      j["justification"] = std::string(kBaseSmallKJustification);
    }
    if (node.rearrangement) j["rearrangement"] = conditions_json(node.rearrangement->conditions());
    if (node.merged) j["merged"] = write(*node.merged);
    if (node.decremented) j["decremented"] = write(*node.decremented);
    return j;
  }

 private:
  bool share_;
  std::unordered_map<const CertificateNode*, std::uint64_t> ids_;
};

std::vector<long long> read_conditions(const json& j, const char* key) {
  const auto& field = j.at(key);
  if (!field.is_array()) throw CertificateFormatError(std::string(key) + " must be an array");
  std::vector<long long> out;
  for (const auto& v : field) {
    if (!v.is_number_integer()) {
      throw CertificateFormatError(std::string(key) + " must contain integers");
    }
    out.push_back(v.get<long long>());
  }
  return out;
}

class Reader {
 public:
  Certificate read(const json& j) {
    if (!j.is_object()) throw CertificateFormatError("certificate node must be an object");
    if (j.contains("ref")) {
      const auto id = j.at("ref").get<std::uint64_t>();
      auto it = by_id_.find(id);
      if (it == by_id_.end()) {
        throw CertificateFormatError("reference to unknown node id " + std::to_string(id));
      }
      return it->second;
    }
    auto node = std::make_shared<CertificateNode>();
    const auto problem = read_conditions(j, "problem");
    const auto reduced = read_conditions(j, "reduced");
    node->problem = SchubertProblem(problem);
    node->reduced = SchubertProblem(reduced);
    const auto& k = j.at("kostka");
    if (!k.is_string()) throw CertificateFormatError("kostka must be a decimal string");
    node->kostka_value = parse_decimal(k.get<std::string>());
    node->clause = clause_from_name(j.at("clause").get<std::string>());
    if (j.contains("rearrangement")) {
      node->rearrangement = ConditionSequence(read_conditions(j, "rearrangement"));
    }
    if (j.contains("merged")) node->merged = read(j.at("merged"));
    if (j.contains("decremented")) node->decremented = read(j.at("decremented"));
    if (j.contains("id")) by_id_[j.at("id").get<std::uint64_t>()] = node;
    return node;
  }

 private:
  std::unordered_map<std::uint64_t, Certificate> by_id_;
};

}  // namespace

json certificate_to_json(const CertificateNode& root, bool share_subtrees) {
  Writer w(share_subtrees);
  return json{{"schema", kCertificateSchema}, {"root", w.write(root)}};
}

std::string serialize_certificate(const CertificateNode& root, bool share_subtrees, int indent) {
  return certificate_to_json(root, share_subtrees).dump(indent);
}

Certificate certificate_from_json(const json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("schema")) {
      throw CertificateFormatError("missing schema field");
    }
    if (doc.at("schema") != kCertificateSchema) {
      throw CertificateFormatError("unsupported certificate schema " + doc.at("schema").dump());
    }
    return Reader{}.read(doc.at("root"));
  } catch (const CertificateFormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw CertificateFormatError(std::string("malformed certificate: ") + e.what());
  }
}

Certificate parse_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CertificateFormatError(std::string("certificate is not JSON: ") + e.what());
  }
  return certificate_from_json(doc);
}

}  // namespace schublines
