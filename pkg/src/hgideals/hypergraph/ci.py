"""Conditional independence statements with hidden variables, as hypergraphs.

The joint distribution of a row variable X and observed column variables is
flattened to a matrix with one row per state of X and one column per joint
state of the column variables (the first listed variable changes fastest).
``X _||_ A | B, H`` with hidden H of total cardinality s says that on every
slice with B fixed, the X-by-A submatrix has rank at most s, i.e. all of its
(s+1)-minors vanish.  Without hidden variables s = 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product
from math import prod
from typing import Sequence

from .core import Hypergraph


class UnsupportedStatement(ValueError):
    pass


@dataclass(frozen=True)
class CIStatement:
    left: str
    right: tuple[str, ...]
    given: tuple[str, ...] = ()

    @classmethod
    def from_json(cls, data: dict) -> "CIStatement":
        right = data["right"]
        right = (right,) if isinstance(right, str) else tuple(right)
        return cls(data["left"], right, tuple(data.get("given", ())))

    def to_json(self) -> dict:
        return {"left": self.left, "right": list(self.right), "given": list(self.given)}


@dataclass(frozen=True)
class CIModel:
    row: str
    columns: tuple[str, ...]
    cardinalities: dict = field(hash=False)
    hidden: tuple[str, ...] = ()
    statements: tuple[CIStatement, ...] = ()

    @property
    def d(self) -> int:
        return self.cardinalities[self.row]

    @property
    def n(self) -> int:
        return prod(self.cardinalities[v] for v in self.columns)

    @classmethod
    def from_json(cls, data: dict) -> "CIModel":
        try:
            model = cls(
                row=data["row"],
                columns=tuple(data["columns"]),
                cardinalities={k: int(v) for k, v in data["cardinalities"].items()},
                hidden=tuple(data.get("hidden", ())),
                statements=tuple(CIStatement.from_json(s) for s in data["statements"]),
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed CI model: {exc}") from exc
        model.validate()
        return model

    @classmethod
    def loads(cls, text: str) -> "CIModel":
        return cls.from_json(json.loads(text))

    def to_json(self) -> dict:
        return {
            "row": self.row,
            "columns": list(self.columns),
            "cardinalities": dict(self.cardinalities),
            "hidden": list(self.hidden),
            "statements": [s.to_json() for s in self.statements],
        }

    def validate(self):
        names = [self.row, *self.columns, *self.hidden]
        if len(set(names)) != len(names):
            raise ValueError("row, column and hidden variables must be distinct")
        for v in names:
            if self.cardinalities.get(v, 0) < 1:
                raise ValueError(f"variable {v!r} needs a positive cardinality")


def model_C(d: int, k: int, l: int, hidden: int = 2) -> CIModel:
    """X _||_ Y1 | Y2 together with X _||_ Y2 | {Y1, H}."""
    return CIModel(
        row="X",
        columns=("Y1", "Y2"),
        cardinalities={"X": d, "Y1": k, "Y2": l, "H": hidden},
        hidden=("H",),
        statements=(CIStatement("X", ("Y1",), ("Y2",)), CIStatement("X", ("Y2",), ("Y1", "H"))),
    )


def _column_index(model: CIModel, states: dict) -> int:
    idx, stride = 0, 1
    for v in model.columns:
        idx += (states[v] - 1) * stride
        stride *= model.cardinalities[v]
    return idx + 1


def statement_edges(model: CIModel, st: CIStatement) -> list[tuple[int, ...]]:
    if st.left != model.row:
        raise UnsupportedStatement(f"left side must be the row variable {model.row!r}")
    observed_given = [v for v in st.given if v not in model.hidden]
    hidden_given = [v for v in st.given if v in model.hidden]
    unknown = [v for v in (*st.right, *st.given) if v not in model.columns and v not in model.hidden]
    if unknown:
        raise UnsupportedStatement(f"unknown variables {unknown}")
    if set(st.right) & set(observed_given):
        raise UnsupportedStatement("a variable appears on both sides")
    if set(st.right) | set(observed_given) != set(model.columns):
        raise UnsupportedStatement("statement must mention every column variable "
                                   "(marginal statements are not supported)")
    s = prod(model.cardinalities[h] for h in hidden_given) if hidden_given else 1
    card = model.cardinalities
    edges = []
    for fixed in product(*(range(1, card[v] + 1) for v in observed_given)):
        base = dict(zip(observed_given, fixed))
        slice_cols = []
        for free in product(*(range(1, card[v] + 1) for v in st.right)):
            slice_cols.append(_column_index(model, {**base, **dict(zip(st.right, free))}))
        edges += combinations(sorted(slice_cols), s + 1)
    return edges


def ci_statement_to_hypergraph(model: CIModel) -> Hypergraph:
    """Union over statements of the (s+1)-subsets of each slice's columns."""
    edges = []
    for st in model.statements:
        edges += statement_edges(model, st)
    return Hypergraph.from_edges(model.n, edges)
