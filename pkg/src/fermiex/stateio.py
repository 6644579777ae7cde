"""Line-oriented text files for states and spatial matrices.

State files:

    # comment
    header n=2 d=2 spin=2
    amp <k1> ... <kn> <re> <im>
    mode <x> n=<int> l=<int> ml=<int>
    spinlabel <sigma> ms=<p/q>

Matrix files:

    header d=2
    elem <x> <y> <re> <im>

Unlisted amplitudes are zero; duplicate index tuples are an error.  Floats
are serialized with 17 significant digits for lossless round trips.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .basis import BasisSpec, ModeLabel
from .errors import DuplicateError, ParseError, ZeroStateError
from .states import NFermionTensor


def fmt_float(x: float) -> str:
    """17-significant-digit decimal form; parses back to the identical double."""
    return format(float(x), ".17g")


@dataclass(eq=False)
class MatrixFile:
    """Parsed spatial-matrix file: the dense matrix plus optional labels."""

    d: int
    matrix: np.ndarray
    mode_labels: tuple[ModeLabel, ...] | None
    spin_labels: tuple[Fraction, ...] | None


def _strip(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def _kv(token: str, key: str, line_no: int) -> str:
    head, sep, value = token.partition("=")
    if head != key or not sep or not value:
        raise ParseError(f"expected {key}=<value>, got {token!r}", line_no)
    return value


def _int(text: str, line_no: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", line_no) from None


def _float(text: str, line_no: int) -> float:
    try:
        return float(text)
    except ValueError:
        raise ParseError(f"expected a number, got {text!r}", line_no) from None


def _collect_labels(records: dict[int, object], count: int, what: str):
    if not records:
        return None
    missing = [i for i in range(count) if i not in records]
    if missing or len(records) != count:
        raise ParseError(f"{what} labels must cover indices 0..{count - 1} exactly")
    return tuple(records[i] for i in range(count))


def parse_state(path: str) -> NFermionTensor:
    """Read a state file into a dense tensor.

    Raises ParseError (malformed line), IndexError (index out of range),
    DuplicateError (repeated index tuple) or ZeroStateError (no amplitudes).
    """
    header: tuple[int, int, int] | None = None
    amps: dict[tuple[int, ...], complex] = {}
    modes: dict[int, ModeLabel] = {}
    spins: dict[int, Fraction] = {}

    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = _strip(raw)
            if not line:
                continue
            tokens = line.split()
            kind = tokens[0]
            if kind == "header":
                if header is not None:
                    raise ParseError("duplicate header", line_no)
                if len(tokens) != 4:
                    raise ParseError("header needs n=<int> d=<int> spin=<int>", line_no)
                n = _int(_kv(tokens[1], "n", line_no), line_no)
                d = _int(_kv(tokens[2], "d", line_no), line_no)
                S = _int(_kv(tokens[3], "spin", line_no), line_no)
                if n < 1 or d < 1 or S < 1:
                    raise ParseError("header values must be positive", line_no)
                header = (n, d, S)
            elif kind == "amp":
                if header is None:
                    raise ParseError("amp record before header", line_no)
                n, d, S = header
                if len(tokens) != 1 + n + 2:
                    raise ParseError(f"amp record needs {n} indices and re, im", line_no)
                idx = tuple(_int(t, line_no) for t in tokens[1 : 1 + n])
                D = d * S
                for k in idx:
                    if not 0 <= k < D:
                        raise IndexError(f"line {line_no}: index {k} out of range [0, {D})")
                if idx in amps:
                    raise DuplicateError(f"duplicate amplitude at {idx}", line_no)
                re = _float(tokens[1 + n], line_no)
                im = _float(tokens[2 + n], line_no)
                amps[idx] = complex(re, im)
            elif kind == "mode":
                if header is None:
                    raise ParseError("mode record before header", line_no)
                if len(tokens) != 5:
                    raise ParseError("mode record needs <x> n=<int> l=<int> ml=<int>", line_no)
                x = _int(tokens[1], line_no)
                if not 0 <= x < header[1]:
                    raise IndexError(f"line {line_no}: mode index {x} out of range [0, {header[1]})")
                if x in modes:
                    raise DuplicateError(f"duplicate mode label for {x}", line_no)
                modes[x] = (
                    _int(_kv(tokens[2], "n", line_no), line_no),
                    _int(_kv(tokens[3], "l", line_no), line_no),
                    _int(_kv(tokens[4], "ml", line_no), line_no),
                )
            elif kind == "spinlabel":
                if header is None:
                    raise ParseError("spinlabel record before header", line_no)
                if len(tokens) != 3:
                    raise ParseError("spinlabel record needs <sigma> ms=<p/q>", line_no)
                sigma = _int(tokens[1], line_no)
                if not 0 <= sigma < header[2]:
                    raise IndexError(
                        f"line {line_no}: spin index {sigma} out of range [0, {header[2]})"
                    )
                if sigma in spins:
                    raise DuplicateError(f"duplicate spin label for {sigma}", line_no)
                try:
                    spins[sigma] = Fraction(_kv(tokens[2], "ms", line_no))
                except (ValueError, ZeroDivisionError):
                    raise ParseError(f"bad rational {tokens[2]!r}", line_no) from None
            else:
                raise ParseError(f"unknown record {kind!r}", line_no)

    if header is None:
        raise ParseError("missing header")
    if not amps:
        raise ZeroStateError("state file lists no amplitudes")
    n, d, S = header
    spec = BasisSpec(
        d=d,
        S=S,
        mode_labels=_collect_labels(modes, d, "mode"),
        spin_labels=_collect_labels(spins, S, "spin"),
    )
    dense = np.zeros((spec.D,) * n, dtype=np.complex128)
    for idx, value in amps.items():
        dense[idx] = value
    return NFermionTensor(n, spec, dense)


def write_state(t: NFermionTensor, path: str) -> None:
    """Write a state file: header, labels, then nonzero amplitudes in C order."""
    flat = t.amplitudes.ravel()
    nonzero = np.flatnonzero(flat)
    if nonzero.size == 0:
        raise ZeroStateError("refusing to write a zero state")
    spec = t.spec
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"header n={t.n} d={spec.d} spin={spec.S}\n")
        if spec.mode_labels is not None:
            for x, (qn, ql, qml) in enumerate(spec.mode_labels):
                fh.write(f"mode {x} n={qn} l={ql} ml={qml}\n")
        if spec.spin_labels is not None:
            for sigma, ms in enumerate(spec.spin_labels):
                fh.write(f"spinlabel {sigma} ms={ms}\n")
        shape = t.amplitudes.shape
        for flat_idx in nonzero:
            idx = np.unravel_index(flat_idx, shape)
            value = flat[flat_idx]
            indices = " ".join(str(int(k)) for k in idx)
            fh.write(f"amp {indices} {fmt_float(value.real)} {fmt_float(value.imag)}\n")


def parse_matrix(path: str) -> MatrixFile:
    """Read a spatial-matrix file; same record rules as state files."""
    d: int | None = None
    elems: dict[tuple[int, int], complex] = {}
    modes: dict[int, ModeLabel] = {}
    spins: dict[int, Fraction] = {}

    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = _strip(raw)
            if not line:
                continue
            tokens = line.split()
            kind = tokens[0]
            if kind == "header":
                if d is not None:
                    raise ParseError("duplicate header", line_no)
                if len(tokens) != 2:
                    raise ParseError("header needs d=<int>", line_no)
                d = _int(_kv(tokens[1], "d", line_no), line_no)
                if d < 1:
                    raise ParseError("d must be positive", line_no)
            elif kind == "elem":
                if d is None:
                    raise ParseError("elem record before header", line_no)
                if len(tokens) != 5:
                    raise ParseError("elem record needs <x> <y> <re> <im>", line_no)
                x = _int(tokens[1], line_no)
                y = _int(tokens[2], line_no)
                for k in (x, y):
                    if not 0 <= k < d:
                        raise IndexError(f"line {line_no}: index {k} out of range [0, {d})")
                if (x, y) in elems:
                    raise DuplicateError(f"duplicate element at ({x},{y})", line_no)
                elems[(x, y)] = complex(_float(tokens[3], line_no), _float(tokens[4], line_no))
            elif kind == "mode":
                if d is None:
                    raise ParseError("mode record before header", line_no)
                if len(tokens) != 5:
                    raise ParseError("mode record needs <x> n=<int> l=<int> ml=<int>", line_no)
                x = _int(tokens[1], line_no)
                if not 0 <= x < d:
                    raise IndexError(f"line {line_no}: mode index {x} out of range [0, {d})")
                if x in modes:
                    raise DuplicateError(f"duplicate mode label for {x}", line_no)
                modes[x] = (
                    _int(_kv(tokens[2], "n", line_no), line_no),
                    _int(_kv(tokens[3], "l", line_no), line_no),
                    _int(_kv(tokens[4], "ml", line_no), line_no),
                )
            elif kind == "spinlabel":
                if d is None:
                    raise ParseError("spinlabel record before header", line_no)
                if len(tokens) != 3:
                    raise ParseError("spinlabel record needs <sigma> ms=<p/q>", line_no)
                sigma = _int(tokens[1], line_no)
                if sigma < 0:
                    raise IndexError(f"line {line_no}: spin index {sigma} must be nonnegative")
                if sigma in spins:
                    raise DuplicateError(f"duplicate spin label for {sigma}", line_no)
                try:
                    spins[sigma] = Fraction(_kv(tokens[2], "ms", line_no))
                except (ValueError, ZeroDivisionError):
                    raise ParseError(f"bad rational {tokens[2]!r}", line_no) from None
            else:
                raise ParseError(f"unknown record {kind!r}", line_no)

    if d is None:
        raise ParseError("missing header")
    if not elems:
        raise ZeroStateError("matrix file lists no elements")
    matrix = np.zeros((d, d), dtype=np.complex128)
    for (x, y), value in elems.items():
        matrix[x, y] = value
    spin_labels = None
    if spins:
        count = max(spins) + 1
        spin_labels = _collect_labels(spins, count, "spin")
    return MatrixFile(
        d=d,
        matrix=matrix,
        mode_labels=_collect_labels(modes, d, "mode"),
        spin_labels=spin_labels,
    )
