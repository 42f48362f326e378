#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace riskcast {

// Calendar date, ISO-8601 text form, Monday-start weeks.
class Date {
public:
  Date() = default;

  static Date from_ymd(int year, unsigned month, unsigned day);

  // Parses "YYYY-MM-DD"; returns nullopt for anything malformed or not a
  // real Gregorian date.
  static std::optional<Date> parse(std::string_view iso);

  // Like parse() but throws DataError naming the offending text.
  static Date parse_or_throw(std::string_view iso);

  std::string iso() const;

  int year() const;
  unsigned month() const;     // 1..12
  unsigned day() const;       // 1..31
  int day_of_week() const;    // ISO encoding: 1 = Monday .. 7 = Sunday
  unsigned quarter() const { return (month() + 2) / 3; }
  unsigned semester() const { return (month() + 5) / 6; }

  Date& operator+=(int days) {
    d_ += std::chrono::days{days};
    return *this;
  }
  friend Date operator+(Date d, int days) { return d += days; }
  friend Date operator-(Date d, int days) { return d += -days; }
  // Whole days from rhs to lhs.
  friend int operator-(const Date& lhs, const Date& rhs) {
    return static_cast<int>((lhs.d_ - rhs.d_).count());
  }

  auto operator<=>(const Date&) const = default;

private:
  explicit Date(std::chrono::sys_days d) : d_(d) {}
  std::chrono::sys_days d_{};
};

}  // namespace riskcast
