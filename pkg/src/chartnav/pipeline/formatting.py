"""Screen-reader friendly number formatting for answer text.

Integer tokens of 1000 or more gain thousands separators so NVDA and
friends read "468,297" instead of spelling digits. Four-digit tokens in
the 1500-2100 range read as years and are left alone, as are digits inside
identifiers, decimals, dotted addresses, and already-grouped numbers.
"""

from __future__ import annotations

import re

YEAR_RANGE = (1500, 2100)

# A standalone integer token: not preceded by a word character, dot or
# comma; not followed by a word character or by a dot/comma leading into
# more digits (decimals, addresses, grouped numbers).
_INTEGER_TOKEN = re.compile(r"(?<![\w.,])(\d+)(?![\w]|[.,]\d)")


def format_numbers(text: str) -> str:
    def replace(match: re.Match) -> str:
        token = match.group(1)
        if len(token) == 4 and YEAR_RANGE[0] <= int(token) <= YEAR_RANGE[1]:
            return token
        if int(token) < 1000:
            return token
        return f"{int(token):,}"

    return _INTEGER_TOKEN.sub(replace, text)
