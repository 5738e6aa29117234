"""Helpers shared by the line-oriented text formats (site, radio map, scan)."""
import math
from collections.abc import Iterator

from errors import ParseError


def split_lines(text: str) -> list[str]:
    """Split on LF, dropping a trailing CR so CRLF input reads the same."""
    lines = text.split('\n')
    if lines and lines[-1] == '':
        lines.pop()
    return [line[:-1] if line.endswith('\r') else line for line in lines]


def content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    """Yield (1-based line number, tokens) for lines that are not blank or comment-only."""
    for line_no, line in enumerate(split_lines(text), start=1):
        body = line.split('#', 1)[0].strip()
        if body:
            yield line_no, body.split()


def parse_float(token: str, line_no: int, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(line_no, f"{what} is not a number: {token!r}") from None
    if not math.isfinite(value):
        raise ParseError(line_no, f"{what} must be finite: {token!r}")
    return value


def format_float(value: float) -> str:
    """Shortest text that reads back as the same float."""
    return repr(float(value))
