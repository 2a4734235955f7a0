"""Reader and writer for the plain-text group file format.

``perm <degree>`` followed by one generator per line as 1-based images, or
``cayley <n>`` followed by ``n`` rows of 0-based indices.  ``#`` starts a
comment line.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from .errors import GroupFileError, TooLarge
from .group import DEFAULT_CAP, Group, NotAPermutation, group_from_cayley, group_from_permutations


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise GroupFileError(f"line {lineno}: expected integers, got {line!r}") from None


def parse_group(text: str, *, cap: int = DEFAULT_CAP, name=None) -> Group:
    lines = _lines(text)
    if not lines:
        raise GroupFileError("empty group file")
    head = lines[0].split()
    if len(head) != 2 or head[0] not in ("perm", "cayley"):
        raise GroupFileError(f"bad header {lines[0]!r}; expected 'perm <degree>' or 'cayley <n>'")
    try:
        size = int(head[1])
    except ValueError:
        raise GroupFileError(f"bad size in header {lines[0]!r}") from None
    if size < 1:
        raise GroupFileError("size must be positive")
    body = [_ints(ln, k) for k, ln in enumerate(lines[1:], start=2)]

    if head[0] == "perm":
        try:
            return group_from_permutations(body, degree=size, cap=cap, name=name)
        except NotAPermutation as exc:
            raise GroupFileError(str(exc)) from None
    if len(body) != size:
        raise GroupFileError(f"cayley header says {size} rows, found {len(body)}")
    if size > cap:
        raise TooLarge(f"group exceeds cap of {cap} elements")
    return group_from_cayley(body, name=name)


def load_group(path, *, cap: int = DEFAULT_CAP) -> Group:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GroupFileError(f"cannot read {path}: {exc}") from None
    return parse_group(text, cap=cap, name=path.stem)


def content_hash(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def format_perm_group(gens: list[list[int]], degree: int, comment: str | None = None) -> str:
    out = []
    if comment:
        out.append(f"# {comment}")
    out.append(f"perm {degree}")
    out.extend(" ".join(str(x) for x in g) for g in gens)
    return "\n".join(out) + "\n"


def format_cayley(G: Group) -> str:
    rows = [" ".join(str(x) for x in row) for row in G.table]
    return "\n".join([f"cayley {G.n}", *rows]) + "\n"
