#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "citerank/network.hpp"
#include "citerank/profile.hpp"

namespace citerank {

struct Reference {
  std::optional<std::string> pub_id;  // null when the cited item is not indexed
  std::vector<std::string> affiliations;
};

/// One article. Affiliation strings are stored normalized (trimmed and
/// ASCII case-folded) and deduplicated, in first-seen order.
struct PublicationRecord {
  std::string pub_id;
  int year = 0;
  std::string category;
  std::vector<std::string> affiliations;
  std::vector<Reference> references;
};

struct ParseIssue {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct ParseResult {
  std::vector<PublicationRecord> records;
  std::vector<ParseIssue> issues;
};

// Institution identity: trim surrounding whitespace, fold ASCII case.
std::string normalize_affiliation(std::string_view raw);

/// Reads JSON Lines records. Blank lines are ignored. Malformed lines and
/// repeated pub_ids are recorded as issues and skipped; with `strict` the
/// first issue is thrown instead (Parse or DuplicateId). A duplicate issue
/// names both line numbers.
ParseResult parse_records(std::istream& in, bool strict = false);
ParseResult parse_records_file(const std::string& path, bool strict = false);

// Records matching the profile's category and year window.
std::vector<PublicationRecord> filter_records(const std::vector<PublicationRecord>& records,
                                              const SubjectProfile& profile);

// Publications per institution; a record counts once for each affiliation.
std::map<std::string, std::size_t> publication_counts(const std::vector<PublicationRecord>& records);

// Institutions with at least `publication_threshold` publications.
std::set<std::string> apply_threshold(const std::vector<PublicationRecord>& records,
                                      const SubjectProfile& profile);

// Records with at least one retained affiliation.
std::size_t retained_publication_count(const std::vector<PublicationRecord>& records,
                                       const std::set<std::string>& retained);

/// Aggregates cross-citations among the retained institutions. For every
/// reference whose pub_id belongs to `records`, each pair (citing
/// affiliation, cited affiliation) with both sides retained adds one to
/// that edge (full counting). Every retained institution becomes a node,
/// in sorted order. Throws InvalidArgument when `retained` is empty.
CitationNetwork build_network(const std::vector<PublicationRecord>& records,
                              const std::set<std::string>& retained, const SubjectProfile& profile,
                              bool keep_self_loops = false);

}  // namespace citerank
