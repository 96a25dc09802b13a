#include "citerank/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <unordered_map>
#include <unordered_set>

#include "citerank/error.hpp"

namespace citerank {

namespace {

using nlohmann::json;

std::vector<std::string> affiliation_list(const json& value, const char* field) {
  if (!value.is_array()) throw Error(ErrorCode::Parse, std::string("'") + field + "' must be an array");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw Error(ErrorCode::Parse, std::string("'") + field + "' entries must be strings");
    }
    std::string id = normalize_affiliation(item.get<std::string>());
    if (id.empty()) throw Error(ErrorCode::Parse, std::string("empty affiliation in '") + field + "'");
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(std::move(id));
  }
  return out;
}

PublicationRecord record_from_json(const json& obj) {
  if (!obj.is_object()) throw Error(ErrorCode::Parse, "line is not a JSON object");
  PublicationRecord rec;

  auto pub_id = obj.find("pub_id");
  if (pub_id == obj.end() || !pub_id->is_string() || pub_id->get<std::string>().empty()) {
    throw Error(ErrorCode::Parse, "missing or invalid 'pub_id'");
  }
  rec.pub_id = pub_id->get<std::string>();

  auto year = obj.find("year");
  if (year == obj.end() || !year->is_number_integer()) {
    throw Error(ErrorCode::Parse, "missing or invalid 'year'");
  }
  rec.year = year->get<int>();

  auto category = obj.find("category");
  if (category == obj.end() || !category->is_string()) {
    throw Error(ErrorCode::Parse, "missing or invalid 'category'");
  }
  rec.category = category->get<std::string>();

  auto affiliations = obj.find("affiliations");
  if (affiliations == obj.end()) throw Error(ErrorCode::Parse, "missing 'affiliations'");
  rec.affiliations = affiliation_list(*affiliations, "affiliations");
  if (rec.affiliations.empty()) throw Error(ErrorCode::Parse, "'affiliations' is empty");

  if (auto refs = obj.find("references"); refs != obj.end()) {
    if (!refs->is_array()) throw Error(ErrorCode::Parse, "'references' must be an array");
    for (const auto& ref : *refs) {
      if (!ref.is_object()) throw Error(ErrorCode::Parse, "reference is not an object");
      Reference r;
      if (auto id = ref.find("pub_id"); id != ref.end() && !id->is_null()) {
        if (!id->is_string()) throw Error(ErrorCode::Parse, "reference 'pub_id' must be a string or null");
        r.pub_id = id->get<std::string>();
      }
      auto ref_affils = ref.find("affiliations");
      if (ref_affils == ref.end()) throw Error(ErrorCode::Parse, "reference missing 'affiliations'");
      r.affiliations = affiliation_list(*ref_affils, "references.affiliations");
      rec.references.push_back(std::move(r));
    }
  }
  return rec;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

std::string normalize_affiliation(std::string_view raw) {
  auto first = raw.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  auto last = raw.find_last_not_of(" \t\r\n\f\v");
  std::string out(raw.substr(first, last - first + 1));
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

ParseResult parse_records(std::istream& in, bool strict) {
  ParseResult result;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string line;
  std::size_t line_no = 0;

  auto report = [&](ErrorCode code, std::string message) {
    if (strict) throw Error(code, "line " + std::to_string(line_no) + ": " + message);
    result.issues.push_back({line_no, std::move(message)});
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    PublicationRecord rec;
    try {
      rec = record_from_json(json::parse(line));
    } catch (const json::exception& e) {
      report(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
      continue;
    } catch (const Error& e) {
      report(e.code(), e.what());
      continue;
    }
    auto [it, inserted] = first_line.emplace(rec.pub_id, line_no);
    if (!inserted) {
      report(ErrorCode::DuplicateId, "duplicate pub_id '" + rec.pub_id + "' on lines " +
                                         std::to_string(it->second) + " and " + std::to_string(line_no));
      continue;
    }
    result.records.push_back(std::move(rec));
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read error after line " + std::to_string(line_no));
  return result;
}

ParseResult parse_records_file(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open records file '" + path + "'");
  return parse_records(in, strict);
}

std::vector<PublicationRecord> filter_records(const std::vector<PublicationRecord>& records,
                                              const SubjectProfile& profile) {
  std::vector<PublicationRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out), [&](const PublicationRecord& r) {
    return r.category == profile.category && profile.years.contains(r.year);
  });
  return out;
}

std::map<std::string, std::size_t> publication_counts(const std::vector<PublicationRecord>& records) {
  std::map<std::string, std::size_t> counts;
  for (const auto& r : records) {
    for (const auto& a : r.affiliations) ++counts[a];
  }
  return counts;
}

std::set<std::string> apply_threshold(const std::vector<PublicationRecord>& records,
                                      const SubjectProfile& profile) {
  std::set<std::string> retained;
  for (const auto& [institution, count] : publication_counts(records)) {
    if (static_cast<long>(count) >= profile.publication_threshold) retained.insert(institution);
  }
  return retained;
}

std::size_t retained_publication_count(const std::vector<PublicationRecord>& records,
                                       const std::set<std::string>& retained) {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [&](const PublicationRecord& r) {
    return std::any_of(r.affiliations.begin(), r.affiliations.end(),
                       [&](const std::string& a) { return retained.contains(a); });
  }));
}

CitationNetwork build_network(const std::vector<PublicationRecord>& records,
                              const std::set<std::string>& retained, const SubjectProfile& profile,
                              bool keep_self_loops) {
  if (retained.empty()) throw Error(ErrorCode::InvalidArgument, "no institution passes the publication threshold");

  std::vector<std::string> ids(retained.begin(), retained.end());
  std::unordered_map<std::string, NodeIndex> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], static_cast<NodeIndex>(i));

  std::unordered_set<std::string> dataset;
  for (const auto& r : records) dataset.insert(r.pub_id);

  auto retained_indices = [&](const std::vector<std::string>& affiliations) {
    std::vector<NodeIndex> out;
    for (const auto& a : affiliations) {
      if (auto it = index.find(a); it != index.end()) out.push_back(it->second);
    }
    return out;
  };

  std::vector<Edge> edges;
  for (const auto& rec : records) {
    const auto citing = retained_indices(rec.affiliations);
    if (citing.empty()) continue;
    for (const auto& ref : rec.references) {
      if (!ref.pub_id || !dataset.contains(*ref.pub_id)) continue;
      for (NodeIndex cited : retained_indices(ref.affiliations)) {
        for (NodeIndex source : citing) {
          if (source == cited && !keep_self_loops) continue;
          edges.push_back({source, cited, 1});
        }
      }
    }
  }
  return CitationNetwork::build(std::move(ids), std::move(edges), profile.name, keep_self_loops);
}

}  // namespace citerank
