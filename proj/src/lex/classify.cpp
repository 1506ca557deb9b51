#include "oraclesim/lex/classify.hpp"

#include "oraclesim/error.hpp"

namespace oraclesim::lex {

std::string_view to_string(QueryCategory category) {
  switch (category) {
    case QueryCategory::Ambiguous: return "Ambiguous";
    case QueryCategory::Computational: return "Computational";
    case QueryCategory::Discernible: return "Discernible";
    case QueryCategory::NonEvent: return "NonEvent";
    case QueryCategory::Recondite: return "Recondite";
    case QueryCategory::Sanctioned: return "Sanctioned";
  }
  return "?";
}

std::optional<QueryCategory> category_from_string(std::string_view name) {
  for (QueryCategory category : kAllCategories) {
    if (to_string(category) == name) return category;
  }
  return std::nullopt;
}

std::string_view to_string(AnswerableBy answerable) {
  switch (answerable) {
    case AnswerableBy::ManyObservers: return "ManyObservers";
    case AnswerableBy::AuthoritySubset: return "AuthoritySubset";
    case AnswerableBy::SingleExclusiveSource: return "SingleExclusiveSource";
    case AnswerableBy::NoOne: return "NoOne";
  }
  return "?";
}

std::optional<AnswerableBy> answerable_from_string(std::string_view name) {
  for (AnswerableBy a : {AnswerableBy::ManyObservers, AnswerableBy::AuthoritySubset,
                         AnswerableBy::SingleExclusiveSource, AnswerableBy::NoOne}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

void QueryFeatures::validate() const {
  if (answerable_by == AnswerableBy::NoOne && is_pure_computation) {
    throw Error(ErrorCode::InvalidRequest,
                "a pure computation cannot be answerable by no one");
  }
}

QueryCategory classify(const QueryFeatures& features) {
  features.validate();
  if (features.is_pure_computation) return QueryCategory::Computational;
  if (features.answerable_by == AnswerableBy::NoOne) return QueryCategory::NonEvent;
  if (features.honest_interpretation_conflict) return QueryCategory::Ambiguous;
  switch (features.answerable_by) {
    case AnswerableBy::SingleExclusiveSource: return QueryCategory::Recondite;
    case AnswerableBy::AuthoritySubset: return QueryCategory::Sanctioned;
    case AnswerableBy::ManyObservers: return QueryCategory::Discernible;
    case AnswerableBy::NoOne: break;  // handled above
  }
  return QueryCategory::Discernible;
}

}  // namespace oraclesim::lex
