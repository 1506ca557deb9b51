#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "oraclesim/lex/classify.hpp"
#include "oraclesim/trust/calendar.hpp"
#include "oraclesim/trust/routing.hpp"

namespace oraclesim::trust {

// Priority tier: Promanteia requests are served before Standard ones on the
// same day.
enum class Tier { Promanteia, Standard };

inline std::string_view to_string(Tier tier) {
  return tier == Tier::Promanteia ? "Promanteia" : "Standard";
}

// Binary requests take the quick same-day mechanism; complex ones wait for
// the monthly consultation day.
enum class QueryForm { Binary, Complex };

inline std::string_view to_string(QueryForm form) {
  return form == QueryForm::Binary ? "Binary" : "Complex";
}

struct ConsultationRequest {
  std::string petitioner_id;
  std::string query_id;
  std::string query;
  lex::QueryCategory category = lex::QueryCategory::Discernible;
  QueryForm form = QueryForm::Binary;
  Tier tier = Tier::Standard;
  double fee_paid = 0.0;
  Day submitted_at = 0;
};

struct ServiceSlot {
  Day day = 0;
  Tier tier = Tier::Standard;
  std::size_t position = 0;  // insertion index within the day's tier queue
};

// Assigns service days per the calendar and drains them in priority order.
// Within a day: every Promanteia request precedes every Standard request;
// within a tier, requests are FIFO by submission time, ties broken by
// lexicographic petitioner id.
class Scheduler {
 public:
  Scheduler(Calendar calendar, double base_fee)
      : calendar_(calendar), base_fee_(base_fee) {}

  // Throws Error(FeeUnpaid) if fee_paid is below the fee the route demands,
  // and Error(InvalidRequest) for Reject-routed categories, which must not
  // be scheduled at all.
  ServiceSlot schedule(const ConsultationRequest& request, Day now);

  // Removes and returns the given day's requests in service order.
  std::vector<ConsultationRequest> take_due(Day day);

  std::size_t queued() const { return queued_; }
  const Calendar& calendar() const { return calendar_; }

 private:
  struct DayQueue {
    std::vector<ConsultationRequest> promanteia;
    std::vector<ConsultationRequest> standard;
  };

  Calendar calendar_;
  double base_fee_;
  std::map<Day, DayQueue> days_;
  std::size_t queued_ = 0;
};

}  // namespace oraclesim::trust
