"""Embedded Belsley dataset, strict CSV ingestion, and a portable RNG.

The CSV dialect is deliberately narrow: UTF-8, comma separated, header of
unique names, period decimal mark, every cell a finite decimal numeral.
Canonical serialization uses the shortest round-trip decimal for each
float64, so load -> serialize -> load is bit-exact.

Random normal columns come from SplitMix64 uniforms pushed through
Box-Muller with a fixed consumption order, making every draw reproducible
from the seed alone on any platform (no dependence on a vendor RNG).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import IO

import numpy as np

from .errors import DuplicateHeader, NonFiniteValue, ParseError, RaggedRow
from .ols import DataMatrix

# Belsley's near-constant columns X2, X3 with his dependent y; X4 is the
# extra independent draw (normal, mean 4, variance 16) shipped as printed
# because its original seed is unrecoverable. X1 is the explicit constant.
_BELSLEY_NAMES = ("y", "X1", "X2", "X3", "X4")
_BELSLEY_ROWS = (
    (2.69385, 1.0, 0.996926, 1.00006, 8.883976),
    (2.69402, 1.0, 0.997091, 0.998779, 6.432483),
    (2.70052, 1.0, 0.9973, 1.00068, -1.612356),
    (2.68559, 1.0, 0.997813, 1.00242, 1.781762),
    (2.7072, 1.0, 0.997898, 1.00065, 2.16682),
    (2.6955, 1.0, 0.99814, 1.0005, 4.045509),
    (2.70417, 1.0, 0.998556, 0.999596, 4.858077),
    (2.69699, 1.0, 0.998737, 1.00262, 4.9045),
    (2.69327, 1.0, 0.999414, 1.00321, 8.631162),
    (2.68999, 1.0, 0.999678, 1.0013, -0.4976853),
    (2.70003, 1.0, 0.999926, 0.997579, 6.828907),
    (2.702, 1.0, 0.999995, 0.998597, 8.999921),
    (2.70938, 1.0, 1.00063, 0.995316, 7.080689),
    (2.70094, 1.0, 1.00095, 0.995966, 1.193665),
    (2.70536, 1.0, 1.00118, 0.997125, 1.483312),
    (2.70754, 1.0, 1.00177, 0.998951, -1.053813),
    (2.69519, 1.0, 1.00231, 1.00102, -0.5860236),
    (2.7017, 1.0, 1.00306, 1.00186, -1.371546),
    (2.70451, 1.0, 1.00394, 1.00353, -2.445995),
    (2.69532, 1.0, 1.00469, 1.00021, 5.731981),
)


def belsley() -> DataMatrix:
    """The 20x5 Belsley dataset (y, X1, X2, X3, X4); X1 is all ones."""
    return DataMatrix(_BELSLEY_NAMES, np.array(_BELSLEY_ROWS))


def belsley_csv_path() -> Path:
    """Path of the golden CSV shipped with the package."""
    return Path(__file__).parent / "data" / "belsley.csv"


def load_csv(source: str | Path | IO) -> DataMatrix:
    """Parse a strict numeric CSV into a DataMatrix.

    ``source`` may be a path or an open text/binary stream. The first row
    is the header; all further cells must parse as finite floats.

    Raises
    ------
    DuplicateHeader, RaggedRow, NonFiniteValue, ParseError
        With the 1-based row (and column) of the offense where it applies.
    """
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8")
    return _parse_csv(io.StringIO(text, newline=""))


def _parse_csv(handle: IO[str]) -> DataMatrix:
    reader = csv.reader(handle)
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty input: no header row") from None
    if not header or any(name == "" for name in header):
        raise ParseError("header has an empty column name", row=1)
    if len(set(header)) != len(header):
        raise DuplicateHeader("duplicate column name in header", row=1)

    width = len(header)
    values: list[list[float]] = []
    for rownum, cells in enumerate(reader, start=2):
        if len(cells) != width:
            raise RaggedRow(f"expected {width} cells, got {len(cells)}", row=rownum)
        parsed = []
        for colnum, cell in enumerate(cells, start=1):
            try:
                value = float(cell)
            except ValueError:
                raise ParseError(f"not a number: {cell!r}", row=rownum, col=colnum) from None
            if not math.isfinite(value):
                raise NonFiniteValue(f"non-finite value: {cell!r}", row=rownum, col=colnum)
            parsed.append(value)
        values.append(parsed)
    if not values:
        raise ParseError("no data rows after the header")
    return DataMatrix(tuple(header), np.array(values))


def to_csv(data: DataMatrix) -> str:
    """Canonical serialization: header plus shortest round-trip decimals."""
    lines = [",".join(data.names)]
    for row in data.values:
        lines.append(",".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def save_csv(data: DataMatrix, path: str | Path) -> None:
    Path(path).write_text(to_csv(data), encoding="utf-8", newline="\n")


# ---------------------------------------------------------------------------
# Seeded normal generator

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for one i.i.d. normal column."""

    n: int
    mean: float
    variance: float
    seed: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        if not self.variance > 0:
            raise ValueError("variance must be positive")
        object.__setattr__(self, "seed", int(self.seed) & _MASK64)


class SplitMix64:
    """SplitMix64 (Steele, Lea & Flood): 64-bit mix with golden-gamma steps.

    Chosen because the whole algorithm fits in a dozen lines and is
    trivially portable, so a seed means the same stream everywhere.
    """

    def __init__(self, seed: int):
        self._state = int(seed) & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform on (0, 1] from the top 53 bits (log-safe)."""
        return ((self.next_u64() >> 11) + 1) * 2.0**-53


def derive_seed(master_seed: int, index: int) -> int:
    """Deterministic child seed: the ``index``-th output of the master stream.

    Computed directly as mix(master + (index+1)*gamma), so deriving child
    ``i`` never depends on having derived children ``0..i-1``.
    """
    return SplitMix64((int(master_seed) + int(index) * _GOLDEN) & _MASK64).next_u64()


def generate_normal_column(spec: GeneratorSpec) -> np.ndarray:
    """Draw n i.i.d. values from Normal(mean, variance), reproducibly.

    Box-Muller with fixed consumption order: uniforms are drawn in pairs
    (u1, u2), each pair yields the cosine variate then the sine variate,
    and an odd n discards the final sine variate.
    """
    rng = SplitMix64(spec.seed)
    sd = math.sqrt(spec.variance)
    out = np.empty(spec.n)
    for i in range(0, spec.n, 2):
        u1 = rng.uniform()
        u2 = rng.uniform()
        radius = math.sqrt(-2.0 * math.log(u1))
        theta = 2.0 * math.pi * u2
        out[i] = spec.mean + sd * radius * math.cos(theta)
        if i + 1 < spec.n:
            out[i + 1] = spec.mean + sd * radius * math.sin(theta)
    return out
