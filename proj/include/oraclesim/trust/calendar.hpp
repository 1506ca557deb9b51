#pragma once

#include <cstdint>
#include <set>

namespace oraclesim::trust {

using Day = std::int64_t;

// The service calendar. Days are 0-based simulation days; months and
// days-of-month are 1-based. Simple (binary) consultations run on any
// in-season day; complex consultations run only on the monthly consultation
// day, and never during the off season.
struct Calendar {
  static constexpr int kMonthsPerYear = 12;

  int month_length = 30;
  int consultation_day = 7;            // 1-based day of month
  std::set<int> off_season = {10, 11, 12};  // exactly three month indices

  // Throws Error(InvalidConfig) on out-of-range fields.
  void validate() const;

  int month_of(Day day) const {
    return static_cast<int>((day / month_length) % kMonthsPerYear) + 1;
  }
  int day_of_month(Day day) const {
    return static_cast<int>(day % month_length) + 1;
  }
  bool is_month_start(Day day) const { return day_of_month(day) == 1; }
  bool is_off_season(Day day) const {
    return off_season.count(month_of(day)) > 0;
  }
  bool is_consultation_day(Day day) const {
    return !is_off_season(day) && day_of_month(day) == consultation_day;
  }

  // Smallest in-season day >= from.
  Day next_simple_service_day(Day from) const;

  // Smallest in-season consultation day >= from.
  Day next_consultation_day(Day from) const;
};

}  // namespace oraclesim::trust
