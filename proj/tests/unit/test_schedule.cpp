#include <doctest.h>

#include "oraclesim/error.hpp"
#include "oraclesim/trust/calendar.hpp"
#include "oraclesim/trust/schedule.hpp"

using namespace oraclesim;
using namespace oraclesim::trust;

namespace {

ConsultationRequest request(std::string petitioner, std::string qid,
                            QueryForm form, Tier tier, Day submitted,
                            double fee = 10.0,
                            lex::QueryCategory category =
                                lex::QueryCategory::Discernible) {
  ConsultationRequest r;
  r.petitioner_id = std::move(petitioner);
  r.query_id = std::move(qid);
  r.category = category;
  r.form = form;
  r.tier = tier;
  r.fee_paid = fee;
  r.submitted_at = submitted;
  return r;
}

}  // namespace

TEST_CASE("calendar arithmetic") {
  Calendar calendar;  // 30-day months, consultation day 7, off season 10-12
  calendar.validate();

  CHECK(calendar.month_of(0) == 1);
  CHECK(calendar.day_of_month(0) == 1);
  CHECK(calendar.month_of(29) == 1);
  CHECK(calendar.month_of(30) == 2);
  CHECK(calendar.month_of(270) == 10);
  CHECK(calendar.is_off_season(270));
  CHECK(calendar.is_off_season(359));
  CHECK_FALSE(calendar.is_off_season(360));  // next year wraps back to month 1

  CHECK(calendar.is_consultation_day(6));     // day 7 of month 1
  CHECK_FALSE(calendar.is_consultation_day(7));
  CHECK_FALSE(calendar.is_consultation_day(276));  // month 10 is off season

  CHECK(calendar.next_simple_service_day(5) == 5);
  CHECK(calendar.next_simple_service_day(270) == 360);

  CHECK(calendar.next_consultation_day(0) == 6);
  CHECK(calendar.next_consultation_day(6) == 6);
  // the day after a consultation day waits for next month's
  CHECK(calendar.next_consultation_day(7) == 36);
  // off season skips to the next year
  CHECK(calendar.next_consultation_day(250) == 366);

  Calendar bad = calendar;
  bad.consultation_day = 31;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = calendar;
  bad.off_season = {10, 11};
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("binary requests get same-day service on active days") {
  Scheduler scheduler(Calendar{}, 10.0);
  ServiceSlot slot = scheduler.schedule(
      request("p", "q1", QueryForm::Binary, Tier::Standard, 5), 5);
  CHECK(slot.day == 5);
  auto served = scheduler.take_due(5);
  REQUIRE(served.size() == 1);
  CHECK(served[0].query_id == "q1");
}

TEST_CASE("complex requests wait for the consultation day") {
  Scheduler scheduler(Calendar{}, 10.0);
  // submitted the day after the consultation day of month 1 (day 6)
  ServiceSlot slot = scheduler.schedule(
      request("p", "q1", QueryForm::Complex, Tier::Standard, 7), 7);
  CHECK(slot.day == 36);  // month 2's consultation day
}

TEST_CASE("promanteia precedes standard; fifo within a tier") {
  Scheduler scheduler(Calendar{}, 10.0);
  // standard submitted before promanteia, same service day
  scheduler.schedule(request("zed", "q-std-1", QueryForm::Complex, Tier::Standard, 0), 0);
  scheduler.schedule(request("amy", "q-prom-1", QueryForm::Complex, Tier::Promanteia, 1), 1);
  scheduler.schedule(request("bob", "q-std-2", QueryForm::Complex, Tier::Standard, 2), 2);
  scheduler.schedule(request("cal", "q-prom-2", QueryForm::Complex, Tier::Promanteia, 3), 3);

  auto served = scheduler.take_due(6);
  REQUIRE(served.size() == 4);
  CHECK(served[0].query_id == "q-prom-1");
  CHECK(served[1].query_id == "q-prom-2");
  CHECK(served[2].query_id == "q-std-1");
  CHECK(served[3].query_id == "q-std-2");
}

TEST_CASE("same-time ties break by petitioner id") {
  Scheduler scheduler(Calendar{}, 10.0);
  scheduler.schedule(request("zoe", "q-z", QueryForm::Binary, Tier::Standard, 4), 4);
  scheduler.schedule(request("abe", "q-a", QueryForm::Binary, Tier::Standard, 4), 4);
  auto served = scheduler.take_due(4);
  REQUIRE(served.size() == 2);
  CHECK(served[0].query_id == "q-a");
  CHECK(served[1].query_id == "q-z");
}

TEST_CASE("scheduling monotonicity within a tier") {
  Scheduler scheduler(Calendar{}, 10.0);
  Day previous_slot = -1;
  for (Day submit = 0; submit < 120; ++submit) {
    ServiceSlot slot = scheduler.schedule(
        request("p", "q" + std::to_string(submit), QueryForm::Complex,
                Tier::Standard, submit),
        submit);
    CHECK(slot.day >= previous_slot);
    CHECK(slot.day >= submit);
    previous_slot = slot.day;
  }
}

TEST_CASE("fees gate scheduling") {
  Scheduler scheduler(Calendar{}, 10.0);
  CHECK_THROWS_AS(scheduler.schedule(
                      request("p", "q1", QueryForm::Binary, Tier::Standard, 0, 9.0),
                      0),
                  Error);
  // flagged categories pay double
  CHECK_THROWS_AS(
      scheduler.schedule(request("p", "q2", QueryForm::Binary, Tier::Standard, 0,
                                 10.0, lex::QueryCategory::Recondite),
                         0),
      Error);
  ServiceSlot ok = scheduler.schedule(
      request("p", "q3", QueryForm::Binary, Tier::Standard, 0, 20.0,
              lex::QueryCategory::Recondite),
      0);
  CHECK(ok.day == 0);
  // rejected categories never reach the scheduler
  CHECK_THROWS_AS(
      scheduler.schedule(request("p", "q4", QueryForm::Binary, Tier::Standard, 0,
                                 10.0, lex::QueryCategory::NonEvent),
                         0),
      Error);
}
