"""Project datasets: loading, validation, the built-in NASA projects and ordered splits."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "DatasetError",
    "ProjectRecord",
    "Dataset",
    "SplitDataset",
    "load_csv",
    "write_csv",
    "nasa_dataset",
    "split_fixed",
]

COLUMNS = ("id", "kloc", "me", "effort")


class DatasetError(ValueError):
    pass


@dataclass(frozen=True)
class ProjectRecord:
    """One software project.

    ``kloc`` is thousands of delivered lines of code, ``me`` the methodology
    score and ``effort`` the measured effort in person-months.
    """

    id: int
    kloc: float
    me: float
    effort: float

    def __post_init__(self):
        if self.id <= 0:
            raise DatasetError(f"project id must be positive, got {self.id}")
        for name in ("kloc", "me", "effort"):
            if not math.isfinite(getattr(self, name)):
                raise DatasetError(f"project {self.id}: {name} is not finite")
        if self.kloc <= 0:
            raise DatasetError(f"project {self.id}: kloc must be > 0, got {self.kloc}")
        if self.effort <= 0:
            raise DatasetError(f"project {self.id}: effort must be > 0, got {self.effort}")


@dataclass(frozen=True)
class Dataset:
    records: tuple[ProjectRecord, ...]
    name: str = "dataset"

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        if not self.records:
            raise DatasetError(f"dataset {self.name!r} is empty")
        seen = set()
        for r in self.records:
            if r.id in seen:
                raise DatasetError(f"dataset {self.name!r}: duplicate project id {r.id}")
            seen.add(r.id)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def ids(self) -> list[int]:
        return [r.id for r in self.records]

    @property
    def kloc(self) -> np.ndarray:
        return np.array([r.kloc for r in self.records], dtype=float)

    @property
    def me(self) -> np.ndarray:
        return np.array([r.me for r in self.records], dtype=float)

    @property
    def effort(self) -> np.ndarray:
        return np.array([r.effort for r in self.records], dtype=float)


@dataclass(frozen=True)
class SplitDataset:
    train: Dataset
    test: Dataset

    def __post_init__(self):
        overlap = set(self.train.ids) & set(self.test.ids)
        if overlap:
            raise DatasetError(f"train and test share project ids {sorted(overlap)}")


def _parse_number(text, column, row):
    try:
        value = float(text)
    except (TypeError, ValueError):
        raise DatasetError(f"row {row}: column {column!r} is not numeric: {text!r}") from None
    if not math.isfinite(value):
        raise DatasetError(f"row {row}: column {column!r} is not finite: {text!r}")
    return value


def load_csv(path, name=None) -> Dataset:
    """Read a dataset from a CSV file with header ``id,kloc,me,effort``.

    Column names are matched case-insensitively and in any order. Row numbers
    in error messages count the header as row 1.
    """
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DatasetError(f"{path}: file is empty") from None
        header = [h.strip().lower() for h in header]
        index = {}
        for pos, col in enumerate(header):
            if col in index:
                raise DatasetError(f"{path}: duplicate column {col!r}")
            index[col] = pos
        missing = [c for c in COLUMNS if c not in index]
        if missing:
            raise DatasetError(f"{path}: missing column(s) {', '.join(missing)}")

        records = []
        for rownum, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise DatasetError(
                    f"row {rownum}: expected {len(header)} fields, got {len(row)}")
            values = {c: _parse_number(row[index[c]].strip(), c, rownum) for c in COLUMNS}
            pid = values["id"]
            if pid != int(pid):
                raise DatasetError(f"row {rownum}: id must be an integer, got {row[index['id']]!r}")
            try:
                records.append(ProjectRecord(int(pid), values["kloc"], values["me"], values["effort"]))
            except DatasetError as exc:
                raise DatasetError(f"row {rownum}: {exc}") from None

    if not records:
        raise DatasetError(f"{path}: no data rows")
    try:
        return Dataset(tuple(records), name or path.stem)
    except DatasetError as exc:
        raise DatasetError(f"{path}: {exc}") from None


def write_csv(d: Dataset, path) -> None:
    # repr() keeps full float precision, so load_csv(write_csv(d)) == d
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(COLUMNS)
        for r in d.records:
            writer.writerow([r.id, repr(r.kloc), repr(r.me), repr(r.effort)])


# (KLOC, ME, measured effort) for projects 1..18
_NASA_ROWS = (
    (90.2, 30, 115.8),
    (46.2, 20, 96.0),
    (46.5, 19, 79.0),
    (54.5, 20, 90.8),
    (31.1, 35, 39.6),
    (67.5, 29, 98.4),
    (12.8, 26, 18.9),
    (10.5, 34, 10.3),
    (21.5, 31, 28.5),
    (3.1, 26, 7.0),
    (4.2, 19, 9.0),
    (7.8, 31, 7.3),
    (2.1, 28, 5.0),
    (5.0, 29, 8.4),
    (78.6, 35, 98.7),
    (9.7, 27, 15.6),
    (12.5, 27, 23.9),
    (100.8, 34, 138.3),
)

_NASA = Dataset(
    tuple(ProjectRecord(i, float(k), float(m), float(e))
          for i, (k, m, e) in enumerate(_NASA_ROWS, start=1)),
    "nasa18",
)


def nasa_dataset() -> Dataset:
    """The 18 NASA projects (Bailey and Basili), ids 1..18."""
    return _NASA


def split_fixed(d: Dataset, train_count: int) -> SplitDataset:
    """First ``train_count`` records train, the rest test. No shuffling."""
    if not 0 < train_count < len(d):
        raise DatasetError(
            f"train_count must be in 1..{len(d) - 1} for {len(d)} records, got {train_count}")
    return SplitDataset(
        Dataset(d.records[:train_count], f"{d.name}-train"),
        Dataset(d.records[train_count:], f"{d.name}-test"),
    )
