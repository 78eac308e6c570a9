"""Plain-text family files.

Format::

    # comment
    n 4
    q 2            # optional, defaults to 2
    1000
    0100

Character i of a word line is coordinate i (for q = 2, membership of
element i).  Blank lines and lines starting with ``#`` are skipped.
"""

from __future__ import annotations

from pathlib import Path

from .errors import FamilyFormatError
from .family import QaryFamily, SetFamily


def _header_value(line, key, lineno):
    parts = line.split()
    if len(parts) != 2 or parts[0] != key:
        raise FamilyFormatError(f"expected '{key} <integer>', got {line!r}", lineno)
    try:
        value = int(parts[1])
    except ValueError:
        raise FamilyFormatError(f"{key} must be an integer, got {parts[1]!r}", lineno) from None
    return value


def parse_family(text: str) -> SetFamily | QaryFamily:
    """Parse a family document; q = 2 yields a SetFamily."""
    n = q = None
    words: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            n = _header_value(line, "n", lineno)
            if n < 1:
                raise FamilyFormatError(f"n must be positive, got {n}", lineno)
            continue
        if q is None and not words and line.split()[0] == "q":
            q = _header_value(line, "q", lineno)
            if q < 2:
                raise FamilyFormatError(f"q must be at least 2, got {q}", lineno)
            continue
        alphabet = 2 if q is None else q
        if len(line) != n:
            raise FamilyFormatError(f"word {line!r} does not have length {n}", lineno)
        try:
            word = tuple(int(c, 36) for c in line)
        except ValueError:
            raise FamilyFormatError(f"word {line!r} contains a non-digit", lineno) from None
        if any(c >= alphabet for c in word):
            raise FamilyFormatError(f"word {line!r} uses a letter outside 0..{alphabet - 1}", lineno)
        if word in seen:
            raise FamilyFormatError(f"duplicate word {line!r} (first on line {seen[word]})", lineno)
        seen[word] = lineno
        words.append(word)
    if n is None:
        raise FamilyFormatError("missing 'n <integer>' header")
    if q is None or q == 2:
        if n > 64:
            raise FamilyFormatError(f"binary families support n <= 64, got {n}")
        return SetFamily(n, tuple(sum(b << k for k, b in enumerate(w)) for w in words))
    return QaryFamily(n, q, tuple(words))


def format_word(word: int, n: int) -> str:
    return "".join("1" if (word >> k) & 1 else "0" for k in range(n))


def format_qary_word(word) -> str:
    return "".join("0123456789abcdefghijklmnopqrstuvwxyz"[c] for c in word)


def format_family(fam: SetFamily | QaryFamily) -> str:
    lines = [f"n {fam.n}"]
    if isinstance(fam, QaryFamily):
        lines.append(f"q {fam.q}")
        lines.extend(format_qary_word(w) for w in fam.members)
    else:
        lines.extend(format_word(w, fam.n) for w in fam.members)
    return "\n".join(lines) + "\n"


def read_family(path) -> SetFamily | QaryFamily:
    return parse_family(Path(path).read_text(encoding="utf-8"))


def write_family(fam: SetFamily | QaryFamily, path) -> None:
    Path(path).write_text(format_family(fam), encoding="utf-8")
