"""Line-based file formats for measures and partitions.

Measure file::

    # comments run to the end of the line
    algebra cumulative z
    atoms p q            # optional; worlds are then truth assignments
    pq    0:3/5
    p!q   0:2/5
    !pq   1:1
    !p!q  2:1/2
    normalize            # optional, must come last; rescales the table to total e

Without an ``atoms`` line the world identifiers are opaque labels kept in
file order.  With one, every assignment must be listed exactly once.

Partition file (ranking algebras only)::

    algebra ranking z
    worlds 1 2 3 4       # or: atoms p q
    block r0 1 2
    block r1 3 4
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import Iterator

from .errors import FileFormatError, InvalidPartition, SpaceMismatch, ValueSyntaxError
from .measure import PartitionMeasure, QuasiMeasure, WorldSpace, normalize
from .proplang import enumerate_worlds
from .valuation import Algebra, Value, format_value, parse_value


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if words:
            yield no, words


def _algebra(no: int, words: list[str]) -> Algebra:
    if words[0] != "algebra" or len(words) < 2:
        raise FileFormatError("the first line must be 'algebra <kind> [z|q]'", no)
    try:
        return Algebra.from_name(" ".join(words[1:]))
    except ValueError as exc:
        raise FileFormatError(str(exc), no) from None


def _atoms_space(no: int, atoms: list[str]) -> WorldSpace:
    try:
        return enumerate_worlds(atoms)
    except ValueError as exc:
        raise FileFormatError(str(exc), no) from None


def _value(alg: Algebra, text: str, no: int) -> Value:
    try:
        return parse_value(alg, text)
    except ValueSyntaxError as exc:
        raise FileFormatError(str(exc), no) from None


def parse_measure(text: str) -> QuasiMeasure:
    lines = list(_lines(text))
    if not lines:
        raise FileFormatError("empty measure file")
    no, words = lines[0]
    alg = _algebra(no, words)
    body = lines[1:]

    space: WorldSpace | None = None
    if body and body[0][1][0] == "atoms":
        no, words = body[0]
        space = _atoms_space(no, words[1:])
        body = body[1:]

    do_normalize = False
    if body and body[-1][1] == ["normalize"]:
        do_normalize = True
        body = body[:-1]

    entries: dict[str, Value] = {}
    for no, words in body:
        if words[0] in ("algebra", "atoms", "normalize"):
            raise FileFormatError(f"unexpected {words[0]!r} directive", no)
        if len(words) != 2:
            raise FileFormatError("expected '<world-id> <value>'", no)
        world, val = words
        if world in entries:
            raise FileFormatError(f"world {world!r} listed twice", no)
        if space is not None and world not in space.worlds:
            raise FileFormatError(f"{world!r} is not a truth assignment of the atoms", no)
        entries[world] = _value(alg, val, no)

    if space is None:
        if not entries:
            raise FileFormatError("no worlds listed")
        space = WorldSpace(tuple(entries))
    else:
        missing = [w for w in space.worlds if w not in entries]
        if missing:
            raise FileFormatError(f"missing worlds: {' '.join(missing)}")
    values = [entries[w] for w in space.worlds]
    m = QuasiMeasure(alg, space, values)
    return normalize(alg, m) if do_normalize else m


def format_measure(m: QuasiMeasure) -> str:
    lines = [f"algebra {m.algebra}"]
    if m.space.atoms is not None:
        lines.append("atoms " + " ".join(m.space.atoms) if m.space.atoms else "atoms")
    width = max(len(w) for w in m.space.worlds)
    for w, v in zip(m.space.worlds, m.values):
        lines.append(f"{w.ljust(width)} {format_value(v)}")
    return "\n".join(lines) + "\n"


def parse_partition(text: str) -> PartitionMeasure:
    lines = list(_lines(text))
    if not lines:
        raise FileFormatError("empty partition file")
    no, words = lines[0]
    alg = _algebra(no, words)
    if len(lines) < 2 or lines[1][1][0] not in ("worlds", "atoms"):
        raise FileFormatError("second line must be 'worlds <id>...' or 'atoms <name>...'")
    no, words = lines[1]
    if words[0] == "atoms":
        space = _atoms_space(no, words[1:])
    else:
        try:
            space = WorldSpace(tuple(words[1:]))
        except ValueError as exc:
            raise FileFormatError(str(exc), no) from None
    blocks = []
    for no, words in lines[2:]:
        if words[0] != "block" or len(words) < 3:
            raise FileFormatError("expected 'block <value> <world>...'", no)
        value = _value(alg, words[1], no)
        try:
            blocks.append((space.event(words[2:]), value))
        except SpaceMismatch as exc:
            raise FileFormatError(str(exc), no) from None
    try:
        return PartitionMeasure(alg, space, tuple(b for b, _ in blocks), tuple(v for _, v in blocks))  # type: ignore[arg-type]
    except InvalidPartition as exc:
        raise FileFormatError(str(exc)) from None


def format_partition(pm: PartitionMeasure) -> str:
    lines = [f"algebra {pm.algebra}"]
    if pm.space.atoms is not None:
        lines.append("atoms " + " ".join(pm.space.atoms))
    else:
        lines.append("worlds " + " ".join(pm.space.worlds))
    for b, v in zip(pm.blocks, pm.values):
        lines.append(f"block {format_value(v)} " + " ".join(b.worlds()))
    return "\n".join(lines) + "\n"


def load_measure(path: str | os.PathLike[str]) -> QuasiMeasure:
    return parse_measure(Path(path).read_text(encoding="utf-8"))


def load_partition(path: str | os.PathLike[str]) -> PartitionMeasure:
    return parse_partition(Path(path).read_text(encoding="utf-8"))


def write_text_atomic(path: str | os.PathLike[str], text: str) -> None:
    """Write via a temporary file in the same directory, then rename over ``path``."""
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def save_measure(m: QuasiMeasure, path: str | os.PathLike[str]) -> None:
    write_text_atomic(path, format_measure(m))
