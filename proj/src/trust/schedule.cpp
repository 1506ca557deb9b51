#include "oraclesim/trust/schedule.hpp"

#include <algorithm>

#include "oraclesim/error.hpp"

namespace oraclesim::trust {

namespace {

bool service_order(const ConsultationRequest& a, const ConsultationRequest& b) {
  if (a.submitted_at != b.submitted_at) return a.submitted_at < b.submitted_at;
  return a.petitioner_id < b.petitioner_id;
}

}  // namespace

ServiceSlot Scheduler::schedule(const ConsultationRequest& request, Day now) {
  RoutingDecision decision = route(request.category);
  if (decision == RoutingDecision::Reject) {
    throw Error(ErrorCode::InvalidRequest,
                "rejected categories cannot be scheduled");
  }
  double fee_due = required_fee(decision, base_fee_);
  if (request.fee_paid < fee_due) {
    throw Error(ErrorCode::FeeUnpaid,
                "fee " + std::to_string(request.fee_paid) + " below required " +
                    std::to_string(fee_due));
  }

  Day day = request.form == QueryForm::Binary
                ? calendar_.next_simple_service_day(now)
                : calendar_.next_consultation_day(now);

  DayQueue& queue = days_[day];
  auto& lane = request.tier == Tier::Promanteia ? queue.promanteia : queue.standard;
  auto pos = std::upper_bound(lane.begin(), lane.end(), request, service_order);
  std::size_t index = static_cast<std::size_t>(pos - lane.begin());
  lane.insert(pos, request);
  ++queued_;
  return ServiceSlot{day, request.tier, index};
}

std::vector<ConsultationRequest> Scheduler::take_due(Day day) {
  auto it = days_.find(day);
  if (it == days_.end()) return {};
  std::vector<ConsultationRequest> ordered = std::move(it->second.promanteia);
  ordered.insert(ordered.end(),
                 std::make_move_iterator(it->second.standard.begin()),
                 std::make_move_iterator(it->second.standard.end()));
  days_.erase(it);
  queued_ -= ordered.size();
  return ordered;
}

}  // namespace oraclesim::trust
