#include "oraclesim/trust/calendar.hpp"

#include <string>

#include "oraclesim/error.hpp"

namespace oraclesim::trust {

void Calendar::validate() const {
  if (month_length < 1) {
    throw Error(ErrorCode::InvalidConfig, "calendar.month_length: must be >= 1");
  }
  if (consultation_day < 1 || consultation_day > month_length) {
    throw Error(ErrorCode::InvalidConfig,
                "calendar.consultation_day: must be in [1, month_length]");
  }
  if (off_season.size() != 3) {
    throw Error(ErrorCode::InvalidConfig,
                "calendar.off_season: expected exactly 3 month indices, got " +
                    std::to_string(off_season.size()));
  }
  for (int month : off_season) {
    if (month < 1 || month > kMonthsPerYear) {
      throw Error(ErrorCode::InvalidConfig,
                  "calendar.off_season: month index " + std::to_string(month) +
                      " out of range [1, 12]");
    }
  }
}

Day Calendar::next_simple_service_day(Day from) const {
  Day day = from;
  while (is_off_season(day)) {
    // jump to the first day of the next month
    day += month_length - (day % month_length);
  }
  return day;
}

Day Calendar::next_consultation_day(Day from) const {
  Day month_start = from - (from % month_length);
  for (;;) {
    Day candidate = month_start + consultation_day - 1;
    if (candidate >= from && !is_off_season(candidate)) return candidate;
    month_start += month_length;
  }
}

}  // namespace oraclesim::trust
