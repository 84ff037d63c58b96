#!/usr/bin/env python3
# www.jrodal.com

import re
from typing import Iterator

_TERM_PATTERN = re.compile(r"([+-]?)\s*(\d+)(?:,(\d+))?")


def ints(s: str, *, include_sign=False) -> Iterator[int]:
    pattern = r"[-+]?\d+" if include_sign else r"\d+"
    return (int(m.group()) for m in re.finditer(pattern, s))


def parse_int_list(s: str) -> tuple[int, ...]:
    """Parses "5,3,2", "5.3.2" or "5 3 2"; the empty string is the empty tuple."""
    if re.search(r"[^\d\s,.()\[\]]", s):
        raise ValueError(f"Not a list of nonnegative integers: {s!r}")
    return tuple(ints(s))


def parse_lambda_terms(expr: str) -> list[tuple[int, int, int]]:
    """Parses expressions such as "1,2 + 3,4 - 5" into (sign, p, q) terms.

    "p,q" stands for lambda_p - lambda_q and a bare "p" for lambda_p - lambda_{p+1}
    at the last row, i.e. lambda_p itself when lambda_{p+1} = 0.
    """
    terms = []
    for sign, p, q in _TERM_PATTERN.findall(expr.replace(" ", "")):
        first = int(p)
        terms.append((-1 if sign == "-" else 1, first, int(q) if q else first + 1))
    if not terms:
        raise ValueError(f"Empty lambda expression: {expr!r}")
    return terms
