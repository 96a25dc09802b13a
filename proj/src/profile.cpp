#include "citerank/profile.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>

#include "citerank/error.hpp"

namespace citerank {

std::string_view indicator_name(Indicator ind) {
  switch (ind) {
    case Indicator::PUB: return "PUB";
    case Indicator::CNCI: return "CNCI";
    case Indicator::IC: return "IC";
    case Indicator::TOP: return "TOP";
    case Indicator::AWD: return "AWD";
  }
  return "?";
}

std::optional<Indicator> parse_indicator(std::string_view name) {
  for (Indicator ind : kIndicators) {
    if (indicator_name(ind) == name) return ind;
  }
  return std::nullopt;
}

void SubjectProfile::validate() const {
  if (publication_threshold < 1) {
    throw Error(ErrorCode::InvalidArgument, "profile " + name + ": publication threshold must be >= 1");
  }
  if (years.first > years.last) {
    throw Error(ErrorCode::InvalidArgument, "profile " + name + ": year range is inverted");
  }
  if (std::any_of(weights.begin(), weights.end(), [](long w) { return w < 0; })) {
    throw Error(ErrorCode::InvalidArgument, "profile " + name + ": negative indicator weight");
  }
  if (std::none_of(weights.begin(), weights.end(), [](long w) { return w > 0; })) {
    throw Error(ErrorCode::InvalidArgument, "profile " + name + ": no positive indicator weight");
  }
}

const std::vector<SubjectProfile>& builtin_profiles() {
  // Indicator weights in PUB, CNCI, IC, TOP, AWD order. Publication
  // thresholds are not part of the shipped defaults; override per run.
  static const std::vector<SubjectProfile> profiles = {
      {"DEN", "Dentistry, Oral Surgery & Medicine", 1, {2010, 2014}, {100, 100, 20, 100, 100}},
      {"FIN", "Business, Finance", 1, {2010, 2014}, {150, 50, 10, 100, 0}},
      {"LIB", "Information Science & Library Science", 1, {2010, 2014}, {150, 50, 10, 100, 0}},
      {"TEL", "Telecommunications", 1, {2010, 2014}, {100, 100, 20, 100, 0}},
      {"VET", "Veterinary Sciences", 1, {2010, 2014}, {100, 100, 20, 200, 0}},
  };
  return profiles;
}

std::vector<SubjectProfile> load_profiles(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open profile config '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }

  std::vector<SubjectProfile> out;
  try {
    for (const auto& item : doc.at("profiles")) {
      SubjectProfile p;
      p.name = item.at("name").get<std::string>();
      p.category = item.value("category", p.name);
      p.publication_threshold = item.value("publication_threshold", 1L);
      if (item.contains("year_range")) {
        const auto& yr = item.at("year_range");
        if (!yr.is_array() || yr.size() != 2) {
          throw Error(ErrorCode::Parse, path + ": profile " + p.name + ": year_range must be [first, last]");
        }
        p.years = {yr[0].get<int>(), yr[1].get<int>()};
      }
      for (const auto& [key, value] : item.at("indicator_weights").items()) {
        auto ind = parse_indicator(key);
        if (!ind) throw Error(ErrorCode::Parse, path + ": unknown indicator '" + key + "'");
        p.weights[static_cast<std::size_t>(*ind)] = value.get<long>();
      }
      p.validate();
      out.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
  return out;
}

const SubjectProfile& find_profile(const std::vector<SubjectProfile>& profiles, std::string_view name) {
  auto it = std::find_if(profiles.begin(), profiles.end(),
                         [&](const SubjectProfile& p) { return p.name == name; });
  if (it == profiles.end()) throw Error(ErrorCode::NotFound, "unknown subject '" + std::string(name) + "'");
  return *it;
}

}  // namespace citerank
