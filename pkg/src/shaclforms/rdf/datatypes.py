"""Lexical-form checks for the supported XSD datatypes."""

from __future__ import annotations

import re

from .namespaces import (
    XSD_ANYURI,
    XSD_BOOLEAN,
    XSD_DATE,
    XSD_DATETIME,
    XSD_DECIMAL,
    XSD_INTEGER,
    XSD_STRING,
)

KNOWN_DATATYPES = frozenset(
    {XSD_STRING, XSD_INTEGER, XSD_DECIMAL, XSD_BOOLEAN, XSD_DATE, XSD_DATETIME, XSD_ANYURI}
)

_INTEGER = re.compile(r"[+-]?[0-9]+")
_DECIMAL = re.compile(r"[+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)")
_DATE = re.compile(r"(-?)([0-9]{4,})-([0-9]{2})-([0-9]{2})(Z|[+-][0-9]{2}:[0-9]{2})?")
_DATETIME = re.compile(
    r"(-?)([0-9]{4,})-([0-9]{2})-([0-9]{2})"
    r"T([0-9]{2}):([0-9]{2}):([0-9]{2})(\.[0-9]+)?"
    r"(Z|[+-][0-9]{2}:[0-9]{2})?"
)

_DAYS_IN_MONTH = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)


def _is_leap(year: int) -> bool:
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


def _valid_date_parts(year: int, month: int, day: int) -> bool:
    if not 1 <= month <= 12:
        return False
    days = _DAYS_IN_MONTH[month - 1]
    if month == 2 and _is_leap(year):
        days = 29
    return 1 <= day <= days


def _valid_timezone(tz: str | None) -> bool:
    if tz is None or tz == "Z":
        return True
    hours, minutes = int(tz[1:3]), int(tz[4:6])
    return (hours < 14 and minutes <= 59) or (hours == 14 and minutes == 0)


def validate_lexical(value: str, datatype: str) -> bool:
    """Return True iff ``value`` is a legal lexical form for ``datatype``.

    Unknown datatypes always pass; callers can consult KNOWN_DATATYPES to
    surface a warning for them.
    """
    if datatype == XSD_STRING:
        return True
    if datatype == XSD_INTEGER:
        return _INTEGER.fullmatch(value) is not None
    if datatype == XSD_DECIMAL:
        return _DECIMAL.fullmatch(value) is not None
    if datatype == XSD_BOOLEAN:
        return value in ("true", "false", "1", "0")
    if datatype == XSD_DATE:
        m = _DATE.fullmatch(value)
        if m is None:
            return False
        year, month, day = int(m.group(2)), int(m.group(3)), int(m.group(4))
        return _valid_date_parts(year, month, day) and _valid_timezone(m.group(5))
    if datatype == XSD_DATETIME:
        m = _DATETIME.fullmatch(value)
        if m is None:
            return False
        year, month, day = int(m.group(2)), int(m.group(3)), int(m.group(4))
        hour, minute, second = int(m.group(5)), int(m.group(6)), int(m.group(7))
        if not _valid_date_parts(year, month, day):
            return False
        if hour == 24:
            if minute != 0 or second != 0 or m.group(8):
                return False
        elif hour > 23 or minute > 59 or second > 59:
            return False
        return _valid_timezone(m.group(9))
    if datatype == XSD_ANYURI:
        # Stricter than XSD, which admits nearly any string: whitespace and
        # control characters never belong in a produced URI value.
        return not any(ch.isspace() or ord(ch) < 0x20 for ch in value)
    return True
