#include "riskcast/date.hpp"

#include <cstdio>

#include "riskcast/errors.hpp"

namespace riskcast {

Date Date::from_ymd(int year, unsigned month, unsigned day) {
  std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                  std::chrono::day{day}};
  if (!ymd.ok()) throw DataError("invalid calendar date: " + std::to_string(year) + "-" +
                                 std::to_string(month) + "-" + std::to_string(day));
  return Date{std::chrono::sys_days{ymd}};
}

std::optional<Date> Date::parse(std::string_view iso) {
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return std::nullopt;
  int y = 0;
  unsigned m = 0, d = 0;
  char buf[11];
  iso.copy(buf, 10);
  buf[10] = '\0';
  if (std::sscanf(buf, "%4d-%2u-%2u", &y, &m, &d) != 3) return std::nullopt;
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                  std::chrono::day{d}};
  if (!ymd.ok()) return std::nullopt;
  return Date{std::chrono::sys_days{ymd}};
}

Date Date::parse_or_throw(std::string_view iso) {
  auto d = parse(iso);
  if (!d) throw DataError("unparsable date: '" + std::string(iso) + "' (expected YYYY-MM-DD)");
  return *d;
}

std::string Date::iso() const {
  std::chrono::year_month_day ymd{d_};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

int Date::year() const { return static_cast<int>(std::chrono::year_month_day{d_}.year()); }
unsigned Date::month() const {
  return static_cast<unsigned>(std::chrono::year_month_day{d_}.month());
}
unsigned Date::day() const { return static_cast<unsigned>(std::chrono::year_month_day{d_}.day()); }

int Date::day_of_week() const {
  return static_cast<int>(std::chrono::weekday{d_}.iso_encoding());
}

}  // namespace riskcast
