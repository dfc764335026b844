"""Text and binary file formats.

SDS files are line oriented, ``#`` starts a comment::

    sds v=109 lambda=98
    H 1 45 63
    orbits 0 2 5 7 ...      (index form, resolved through the orbit indexing)
    block 3 4 11 13 ...     (explicit form)
    ...                     (four block lines in total)
    skew 1

An optional ``indexing units-first`` line after ``H`` selects the orbit
ordering rule (default ``ascending``).

Matrices are stored either as text (``hadamard order=<m>`` then m rows of
``+``/``-``) or as ``HADB1`` + little-endian u32 order + the row-major entries
bit-packed MSB first, one bit per entry, set for -1.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

import numpy as np

from .families import Block, SdsQuadruple, expand
from .ring import ORDER_RULES, OrbitIndexing, Subgroup, paper_indexing


class FormatError(ValueError):
    pass


@dataclass
class SdsFile:
    v: int
    lam: int
    entries: list[tuple[str, tuple[int, ...]]]
    H: tuple[int, ...] | None = None
    order: str = "ascending"
    skew: bool = False
    _indexing: OrbitIndexing | None = field(default=None, repr=False, compare=False)

    def indexing(self) -> OrbitIndexing:
        if self.H is None:
            raise FormatError("index form needs an 'H' line")
        if self._indexing is None:
            self._indexing = paper_indexing(self.v, Subgroup(self.v, self.H), order=self.order)
        return self._indexing

    def blocks(self) -> tuple[Block, ...]:
        out = []
        for kind, values in self.entries:
            if kind == "orbits":
                out.append(expand(self.indexing(), values))
            else:
                out.append(Block(self.v, values))
        return tuple(out)

    def quadruple(self) -> SdsQuadruple:
        return SdsQuadruple(self.v, self.blocks(), self.lam)

    def explicit(self) -> SdsFile:
        """Same family with every block written out element by element."""
        return SdsFile(
            self.v, self.lam, [("block", b.elements) for b in self.blocks()],
            H=self.H, order=self.order, skew=self.skew,
        )

    def to_text(self) -> str:
        lines = [f"sds v={self.v} lambda={self.lam}"]
        if self.H is not None:
            lines.append("H " + " ".join(map(str, self.H)))
            if self.order != "ascending":
                lines.append(f"indexing {self.order}")
        for kind, values in self.entries:
            lines.append(" ".join([kind, *map(str, values)]))
        if self.skew:
            lines.append("skew 1")
        return "\n".join(lines) + "\n"


def _ints(tokens: list[str], lineno: int) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def read_sds(text: str) -> SdsFile:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise FormatError("empty SDS file")

    lineno, head = lines[0]
    if head[0] != "sds":
        raise FormatError(f"line {lineno}: expected 'sds v=<n> lambda=<l>'")
    params = {}
    for tok in head[1:]:
        key, _, val = tok.partition("=")
        params[key] = val
    try:
        v, lam = int(params["v"]), int(params["lambda"])
    except (KeyError, ValueError):
        raise FormatError(f"line {lineno}: header needs integer v= and lambda=") from None
    if v < 1:
        raise FormatError(f"line {lineno}: v must be positive")

    sds = SdsFile(v, lam, [])
    for lineno, toks in lines[1:]:
        key, rest = toks[0], toks[1:]
        if key == "H":
            sds.H = tuple(sorted(set(x % v for x in _ints(rest, lineno))))
        elif key == "indexing":
            if len(rest) != 1 or rest[0] not in ORDER_RULES:
                raise FormatError(f"line {lineno}: indexing must be one of {ORDER_RULES}")
            sds.order = rest[0]
        elif key in ("block", "orbits"):
            vals = _ints(rest, lineno)
            if key == "block" and any(not 0 <= x < v for x in vals):
                raise FormatError(f"line {lineno}: block element outside [0, {v})")
            sds.entries.append((key, tuple(sorted(set(vals)))))
        elif key == "skew":
            if rest != ["1"]:
                raise FormatError(f"line {lineno}: only 'skew 1' is supported")
            sds.skew = True
        else:
            raise FormatError(f"line {lineno}: unknown keyword {key!r}")
    if len(sds.entries) != 4:
        raise FormatError(f"expected 4 block lines, found {len(sds.entries)}")
    if any(k == "orbits" for k, _ in sds.entries) and sds.H is None:
        raise FormatError("'orbits' lines need an 'H' line")
    return sds


def write_sds(sds: SdsFile) -> str:
    return sds.to_text()


def sds_from_quadruple(q: SdsQuadruple, skew: bool = False) -> SdsFile:
    return SdsFile(q.v, q.lam, [("block", b.elements) for b in q.blocks], skew=skew)


def write_matrix_text(A: np.ndarray) -> str:
    A = np.asarray(A)
    m = A.shape[0]
    chars = np.where(A > 0, "+", "-")
    return f"hadamard order={m}\n" + "".join("".join(row) + "\n" for row in chars)


def read_matrix_text(text: str) -> np.ndarray:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("hadamard order="):
        raise FormatError("expected 'hadamard order=<m>' header")
    try:
        m = int(lines[0].split("=", 1)[1])
    except ValueError:
        raise FormatError("bad order in header") from None
    rows = lines[1 : m + 1]
    if len(rows) != m or any(len(r) != m for r in rows) or any(x.strip() for x in lines[m + 1 :]):
        raise FormatError(f"expected {m} rows of {m} characters")
    joined = "".join(rows)
    if set(joined) - {"+", "-"}:
        raise FormatError("matrix rows may only contain '+' and '-'")
    flat = np.frombuffer(joined.encode("ascii"), dtype=np.uint8)
    return np.where(flat == ord("+"), 1, -1).astype(np.int8).reshape(m, m)


MAGIC = b"HADB1"


def write_matrix_bin(A: np.ndarray) -> bytes:
    A = np.asarray(A)
    m = A.shape[0]
    return MAGIC + struct.pack("<I", m) + np.packbits((A < 0).ravel()).tobytes()


def read_matrix_bin(data: bytes) -> np.ndarray:
    if not data.startswith(MAGIC) or len(data) < len(MAGIC) + 4:
        raise FormatError("not a HADB1 file")
    (m,) = struct.unpack_from("<I", data, len(MAGIC))
    body = np.frombuffer(data, dtype=np.uint8, offset=len(MAGIC) + 4)
    if len(body) != (m * m + 7) // 8:
        raise FormatError(f"expected {(m * m + 7) // 8} payload bytes, got {len(body)}")
    bits = np.unpackbits(body, count=m * m)
    return np.where(bits == 1, -1, 1).astype(np.int8).reshape(m, m)


def read_matrix(data: bytes) -> np.ndarray:
    """Read either matrix format, told apart by the leading magic."""
    if data.startswith(MAGIC):
        return read_matrix_bin(data)
    try:
        return read_matrix_text(data.decode("ascii"))
    except UnicodeDecodeError:
        raise FormatError("matrix file is neither HADB1 nor ASCII text") from None
