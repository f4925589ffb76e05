#include "cliff/serialize.hpp"

#include <array>
#include <stdexcept>
#include <string_view>

namespace cliff {

namespace {

constexpr std::array<std::string_view, 5> kGradeKeys{"scalar", "vector", "bivector", "trivector",
                                                     "pseudoscalar"};

std::string index_key(Blade b) {
  std::string key;
  for (auto i : b.indices()) {
    if (!key.empty()) {
      key += ',';
    }
    key += std::to_string(i.value());
  }
  return key;
}

Rational coefficient_from(const nlohmann::json &value) {
  if (!value.is_string()) {
    throw std::invalid_argument("coefficients are encoded as \"p/q\" strings");
  }
  return parse_rational(value.get<std::string>());
}

Blade blade_from_key(int grade, std::string_view key) {
  std::vector<TetradIndex> idx;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    const auto comma = key.find(',', pos);
    const auto part = key.substr(pos, comma == std::string_view::npos ? key.size() - pos : comma - pos);
    if (part.size() != 1 || part[0] < '0' || part[0] > '3') {
      throw std::invalid_argument("bad index list \"" + std::string(key) + "\"");
    }
    idx.emplace_back(part[0] - '0');
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  if (static_cast<int>(idx.size()) != grade) {
    throw std::invalid_argument("index list \"" + std::string(key) + "\" has the wrong length");
  }
  return Blade::from_ascending(idx);
}

} // namespace

nlohmann::ordered_json to_json(const Multivector &mv) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  std::array<nlohmann::ordered_json, 5> parts;
  for (const auto &[blade, coeff] : mv.terms()) {
    const int g = blade.grade();
    if (g == 0 || g == 4) {
      parts[g] = to_string(coeff);
    } else {
      parts[g][index_key(blade)] = to_string(coeff);
    }
  }
  for (std::size_t g = 0; g < parts.size(); ++g) {
    if (!parts[g].is_null()) {
      doc[std::string(kGradeKeys[g])] = std::move(parts[g]);
    }
  }
  return doc;
}

Multivector multivector_from_json(const nlohmann::json &doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("multivector JSON must be an object");
  }
  Multivector out;
  for (const auto &[key, value] : doc.items()) {
    int grade = -1;
    for (std::size_t g = 0; g < kGradeKeys.size(); ++g) {
      if (key == kGradeKeys[g]) {
        grade = static_cast<int>(g);
      }
    }
    if (grade < 0) {
      throw std::invalid_argument("unknown multivector key \"" + key + "\"");
    }
    if (grade == 0) {
      out.add_term(Blade::scalar(), coefficient_from(value));
    } else if (grade == 4) {
      out.add_term(Blade::pseudoscalar(), coefficient_from(value));
    } else {
      if (!value.is_object()) {
        throw std::invalid_argument("\"" + key + "\" must map index lists to coefficients");
      }
      for (const auto &[idx, coeff] : value.items()) {
        out.add_term(blade_from_key(grade, idx), coefficient_from(coeff));
      }
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const IdentityReport &report) {
  nlohmann::ordered_json doc;
  doc["identity"] = std::string(to_string(report.identity));
  doc["representation"] = std::string(to_string(report.representation));
  doc["cases_checked"] = report.cases_checked;
  doc["passed"] = report.passed();
  auto &list = doc["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto &c : report.counterexamples) {
    nlohmann::ordered_json entry;
    entry["indices"] = c.indices;
    entry["label"] = c.label;
    entry["engine"] = to_json(c.engine);
    entry["oracle"] = to_json(c.oracle);
    list.push_back(std::move(entry));
  }
  return doc;
}

nlohmann::ordered_json to_json(const std::vector<IdentityReport> &reports) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto &r : reports) {
    doc.push_back(to_json(r));
  }
  return doc;
}

} // namespace cliff
