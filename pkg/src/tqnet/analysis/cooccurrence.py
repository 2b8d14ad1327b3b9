"""Temporal co-occurrence networks from dated two-mode event data."""

from dataclasses import dataclass

from ..errors import InvalidInputError
from ..semiring import COMBINATORIAL
from ..tmatrix import TemporalMatrix, mat_prod
from ..tq import TimeHorizon


@dataclass
class EventTable:
    """Dated events, each with the set of participants that took part.

    ``events`` holds ``(event_id, participants, date)`` tuples and every date
    must lie in ``[first, last]``.
    """

    events: list
    first: int
    last: int

    def __post_init__(self):
        self.events = [(e, frozenset(ps), int(d)) for e, ps, d in self.events]
        if self.first > self.last:
            raise InvalidInputError(f"first date {self.first} after last date {self.last}")
        for e, _, d in self.events:
            if not self.first <= d <= self.last:
                raise InvalidInputError(f"event {e!r} dated {d} outside [{self.first}, {self.last}]")

    @property
    def participants(self):
        return sorted({p for _, ps, _ in self.events for p in ps}, key=_sort_key)


def _sort_key(p):
    return (isinstance(p, str), p)


def affiliation_matrix(table, mode="instantaneous", participants=None):
    """Events x participants matrix with a unit quantity for every participation."""
    if mode not in ("instantaneous", "cumulative"):
        raise ValueError(f"mode must be 'instantaneous' or 'cumulative', not {mode!r}")
    participants = table.participants if participants is None else list(participants)
    col = {p: j for j, p in enumerate(participants)}
    rows = []
    for _, ps, d in table.events:
        f = d + 1 if mode == "instantaneous" else table.last + 1
        row = [[] for _ in participants]
        for p in ps:
            row[col[p]] = [(d, f, 1)]
        rows.append(row)
    horizon = TimeHorizon(table.first, table.last + 1)
    return TemporalMatrix(rows, COMBINATORIAL, horizon)


def co_occurrence(table, mode="instantaneous"):
    """Participant x participant counts of shared events (``A^T . A``)."""
    participants = table.participants
    A = affiliation_matrix(table, mode, participants)
    if not A.entries:
        return TemporalMatrix.empty(len(participants), COMBINATORIAL, horizon=A.horizon, labels=tuple(str(p) for p in participants))
    C = mat_prod(A.transpose(), A)
    C.labels = tuple(str(p) for p in participants)
    C.horizon = A.horizon
    return C
