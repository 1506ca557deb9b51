#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace oraclesim::lex {

// Declared in canonical (alphabetical) order; every serialized listing of
// categories follows this order.
enum class QueryCategory {
  Ambiguous,
  Computational,
  Discernible,
  NonEvent,
  Recondite,
  Sanctioned,
};

inline constexpr std::size_t kCategoryCount = 6;

inline constexpr std::array<QueryCategory, kCategoryCount> kAllCategories = {
    QueryCategory::Ambiguous,   QueryCategory::Computational,
    QueryCategory::Discernible, QueryCategory::NonEvent,
    QueryCategory::Recondite,   QueryCategory::Sanctioned,
};

std::string_view to_string(QueryCategory category);
std::optional<QueryCategory> category_from_string(std::string_view name);

inline std::size_t category_index(QueryCategory category) {
  return static_cast<std::size_t>(category);
}

// Who could answer the query, in principle.
enum class AnswerableBy {
  ManyObservers,
  AuthoritySubset,
  SingleExclusiveSource,
  NoOne,
};

std::string_view to_string(AnswerableBy answerable);
std::optional<AnswerableBy> answerable_from_string(std::string_view name);

struct QueryFeatures {
  AnswerableBy answerable_by = AnswerableBy::ManyObservers;
  bool is_pure_computation = false;
  bool honest_interpretation_conflict = false;

  // A computable query always has an answerer; NoOne + computation is
  // contradictory. Throws Error(InvalidRequest).
  void validate() const;
};

// Decision order: pure computation, then unanswerable, then honest
// interpretation conflict, then the answerer scope.
QueryCategory classify(const QueryFeatures& features);

}  // namespace oraclesim::lex
