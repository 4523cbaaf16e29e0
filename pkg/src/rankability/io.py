"""CSV observation-matrix files.

Format::

    # comment lines start with '#'
    Inter,Milan,Roma          <- optional header of labels
    0,2,1
    0,0,2
    1,0,0

The first line is a header when none of its cells parses as an integer, so
labels must not be plain numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Tuple

import numpy as np

from .core.types import ResultMatrix
from .exceptions import InvalidArgumentError


@dataclass(frozen=True)
class MatrixFile:
    matrix: ResultMatrix
    labels: Optional[Tuple[str, ...]] = None
    path: Optional[str] = None

    def __post_init__(self):
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.matrix.m:
                raise InvalidArgumentError(f"{len(labels)} labels for {self.matrix.m} objects")
            if len(set(labels)) != len(labels):
                raise InvalidArgumentError("labels must be unique")
            object.__setattr__(self, "labels", labels)

    def display_labels(self) -> Tuple[str, ...]:
        """Labels, defaulting to 1-based object numbers."""
        return self.labels or tuple(str(i + 1) for i in range(self.matrix.m))


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True


def parse_matrix(text: str, source: str = "<string>") -> MatrixFile:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, [tok.strip() for tok in line.split(",")]))
    if not rows:
        raise InvalidArgumentError(f"{source}: no matrix rows found")
    labels = None
    if not any(_is_int(tok) for tok in rows[0][1]):
        labels = rows[0][1]
        rows = rows[1:]
        if not rows:
            raise InvalidArgumentError(f"{source}: header but no matrix rows")
    m = len(rows)
    values = []
    for r, (lineno, toks) in enumerate(rows):
        if len(toks) != m:
            raise InvalidArgumentError(
                f"{source}: line {lineno} (row {r + 1}) has {len(toks)} columns; "
                f"the matrix must be square ({m}x{m})"
            )
        row = []
        for c, tok in enumerate(toks):
            if not _is_int(tok):
                raise InvalidArgumentError(f"{source}: row {r + 1}, column {c + 1}: {tok!r} is not an integer")
            v = int(tok)
            if v < 0:
                raise InvalidArgumentError(f"{source}: row {r + 1}, column {c + 1}: negative count {v}")
            if r == c and v != 0:
                raise InvalidArgumentError(f"{source}: row {r + 1}, column {c + 1}: diagonal entry must be 0")
            row.append(v)
        values.append(row)
    if labels is not None and len(labels) != m:
        raise InvalidArgumentError(f"{source}: header has {len(labels)} labels for a square {m}x{m} matrix")
    return MatrixFile(ResultMatrix(np.array(values, dtype=np.int64)), labels and tuple(labels), source)


def read_matrix_file(path) -> MatrixFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InvalidArgumentError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_matrix(text, str(path))


def format_matrix(w, labels: Optional[Sequence[str]] = None, comments: Sequence[str] = ()) -> str:
    w = ResultMatrix.coerce(w)
    lines = [f"# {c}" for c in comments]
    if labels is not None:
        labels = [str(x) for x in labels]
        if any(_is_int(x) for x in labels):
            raise InvalidArgumentError("labels must not be integers; the header would be read as data")
        if any("," in x for x in labels):
            raise InvalidArgumentError("labels must not contain commas")
        lines.append(",".join(labels))
    lines.extend(",".join(str(int(v)) for v in row) for row in w.w)
    return "\n".join(lines) + "\n"


def write_matrix_file(path, w, labels=None, comments: Sequence[str] = ()) -> Path:
    path = Path(path)
    path.write_text(format_matrix(w, labels, comments))
    return path
