#pragma once
// Calendar times at year/month/day granularity, as points or intervals.
// This is the currency every temporal operator trades in.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace progtqa {

class TimeParseError : public std::runtime_error {
public:
    explicit TimeParseError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Granularity { Year, Month, Day };

// A fully resolved day used for comparisons. Ordered lexicographically.
struct DayOrdinal {
    int year = 0;
    int month = 0;
    int day = 0;
    auto operator<=>(const DayOrdinal&) const = default;
};

// A calendar date with optional month/day parts.
struct CalendarDate {
    int year = 0;
    std::optional<int> month;
    std::optional<int> day;

    bool operator==(const CalendarDate&) const = default;

    Granularity granularity() const {
        if (day) return Granularity::Day;
        if (month) return Granularity::Month;
        return Granularity::Year;
    }

    // "YYYY", "YYYY-MM" or "YYYY-MM-DD", zero-padded.
    std::string to_string() const;

    // Earliest / latest day covered by this date at its granularity.
    DayOrdinal span_begin() const;
    DayOrdinal span_end() const;

    // Throws TimeParseError on malformed text or out-of-range parts.
    static CalendarDate parse(const std::string& text);
};

int days_in_month(int year, int month);

// A time point or a time interval. An interval may be open-ended (no end),
// meaning the fact is still ongoing; comparisons then substitute a horizon.
struct TimeValue {
    enum class Kind { Point, Interval };

    Kind kind = Kind::Point;
    CalendarDate start;
    std::optional<CalendarDate> end;  // intervals only; absent means open

    bool operator==(const TimeValue&) const = default;

    static TimeValue point(CalendarDate d) { return TimeValue{Kind::Point, d, std::nullopt}; }
    static TimeValue interval(CalendarDate s, std::optional<CalendarDate> e);

    bool is_point() const { return kind == Kind::Point; }
    bool is_open() const { return kind == Kind::Interval && !end; }

    Granularity granularity() const;

    // Point: "YYYY[-MM[-DD]]". Interval: "start/end", "start/" when open.
    std::string to_string() const;

    // Accepts the point form and the "a/b" interval form.
    static TimeValue parse(const std::string& text);

    // Full day span covered by this value; open ends extend to `horizon`.
    DayOrdinal span_begin() const { return start.span_begin(); }
    DayOrdinal span_end(const DayOrdinal& horizon) const;
};

// Default horizon for open-ended intervals.
inline constexpr DayOrdinal kDefaultHorizon{9999, 12, 31};

// Entirely-before / entirely-after under span semantics.
bool strictly_before(const TimeValue& a, const TimeValue& b, const DayOrdinal& horizon);
bool strictly_after(const TimeValue& a, const TimeValue& b, const DayOrdinal& horizon);
// Spans share at least one day.
bool spans_overlap(const TimeValue& a, const TimeValue& b, const DayOrdinal& horizon);
// Span of `outer` covers the whole span of `inner`.
bool span_contains(const TimeValue& outer, const TimeValue& inner, const DayOrdinal& horizon);

// Total order used to sort TimeLists: (span begin, span end, rendering).
bool time_less(const TimeValue& a, const TimeValue& b, const DayOrdinal& horizon);

// Truncate to a coarser granularity; finer-than-available is a no-op.
// Intervals truncate both endpoints and collapse to a point when equal.
TimeValue truncate_time(const TimeValue& t, Granularity g);

}  // namespace progtqa
