"""Bulk drivers: Wall-Sun-Sun-analogue scanning and the period atlas.

All emission is deterministic: inputs are processed in ascending order and
the writers use fixed field order, a fixed separator style, and "\n" line
endings, so parsing an emitted file and re-emitting it reproduces the bytes.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from sympy import primerange

from .core import RecurrenceParams
from .errors import BudgetExceededError
from .modular import DEFAULT_STATE_BUDGET, _mat_pow, cycle_structure, period, rank


@dataclass(frozen=True)
class WssFinding:
    """A prime whose period mod p^2 equals its period mod p (for one (A, B))."""

    A: int
    B: int
    p: int
    k_p: int
    k_p2: int


def wss_scan(params: RecurrenceParams, p_max: int,
             state_budget: int = DEFAULT_STATE_BUDGET) -> list[WssFinding]:
    """Scan primes p <= p_max (skipping p | B) for k(p^2) = k(p).

    k(p) always divides k(p^2), so equality holds exactly when the companion
    matrix to the power k(p) is the identity mod p^2; that one matrix power
    replaces a scan of up to p*k(p) further steps. Findings are emitted in
    ascending order of p, and only the equal cases are reported.
    """
    if p_max < 2:
        raise ValueError(f"p_max must be >= 2, got {p_max}")
    findings = []
    for p in primerange(2, p_max + 1):
        if params.B % p == 0:
            continue
        k = period(params, p, state_budget=state_budget)
        identity = (1, 0, 0, 1)
        base = (params.A % (p * p), params.B % (p * p), 1, 0)
        if _mat_pow(base, k, p * p) == identity:
            findings.append(WssFinding(A=params.A, B=params.B, p=p, k_p=k, k_p2=k))
    return findings


@dataclass(frozen=True)
class AtlasRow:
    """One (A, B, m) record of cycle structure and rank; error rows carry a message."""

    A: int
    B: int
    m: int
    pure: bool | None = None
    tail_len: int | None = None
    cycle_len: int | None = None
    alpha: int | None = None
    error: str | None = None


def atlas_rows(A_values: Iterable[int], B_values: Iterable[int],
               m_values: Iterable[int],
               state_budget: int = DEFAULT_STATE_BUDGET) -> Iterator[AtlasRow]:
    """Yield one AtlasRow per triple, in (A, B, m) lexicographic order.

    B = 0 is skipped automatically; every m must be >= 2. A budget blowup
    produces an error row for that triple instead of aborting the batch.
    """
    m_sorted = sorted(set(m_values))
    for m in m_sorted:
        if m < 2:
            raise ValueError(f"every modulus must be >= 2, got {m}")
    for A in sorted(set(A_values)):
        for B in sorted(set(B_values)):
            if B == 0:
                continue
            params = RecurrenceParams(A, B)
            for m in m_sorted:
                try:
                    cs = cycle_structure(params, m, state_budget=state_budget)
                    rr = rank(params, m, state_budget=state_budget)
                except BudgetExceededError as exc:
                    yield AtlasRow(A=A, B=B, m=m, error=str(exc))
                    continue
                yield AtlasRow(A=A, B=B, m=m, pure=cs.pure, tail_len=cs.tail_len,
                               cycle_len=cs.cycle_len, alpha=rr.alpha)


# ---------------------------------------------------------------------------
# Serialization. JSON is emitted one object per line; integers that can
# outgrow a machine word (sequence terms) are rendered as decimal strings.
# ---------------------------------------------------------------------------

ATLAS_FIELDS = ("A", "B", "m", "pure", "tail_len", "cycle_len", "alpha")
WSS_FIELDS = ("A", "B", "p", "k_p", "k_p2")


def _json_line(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def atlas_row_obj(row: AtlasRow) -> dict:
    if row.error is not None:
        return {"A": row.A, "B": row.B, "m": row.m, "error": row.error}
    return {"A": row.A, "B": row.B, "m": row.m, "pure": row.pure,
            "tail_len": row.tail_len, "cycle_len": row.cycle_len,
            "alpha": row.alpha}


def write_atlas(rows: Iterable[AtlasRow], sink: TextIO, fmt: str = "json") -> int:
    """Write atlas rows as JSON lines or CSV; returns the row count."""
    count = 0
    if fmt == "json":
        for row in rows:
            sink.write(_json_line(atlas_row_obj(row)))
            count += 1
    elif fmt == "csv":
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(ATLAS_FIELDS)
        for row in rows:
            if row.error is not None:
                writer.writerow([row.A, row.B, row.m, "", "", "", ""])
            else:
                writer.writerow([row.A, row.B, row.m,
                                 "true" if row.pure else "false",
                                 row.tail_len, row.cycle_len,
                                 "" if row.alpha is None else row.alpha])
            count += 1
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return count


def parse_atlas(text: str, fmt: str = "json") -> list[AtlasRow]:
    """Inverse of write_atlas; re-emitting the result reproduces the bytes."""
    rows = []
    if fmt == "json":
        for line in text.splitlines():
            obj = json.loads(line)
            if "error" in obj:
                rows.append(AtlasRow(A=obj["A"], B=obj["B"], m=obj["m"],
                                     error=obj["error"]))
            else:
                rows.append(AtlasRow(A=obj["A"], B=obj["B"], m=obj["m"],
                                     pure=obj["pure"], tail_len=obj["tail_len"],
                                     cycle_len=obj["cycle_len"], alpha=obj["alpha"]))
    elif fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if tuple(header) != ATLAS_FIELDS:
            raise ValueError(f"unexpected atlas header {header}")
        for rec in reader:
            a, b, m, pure, tail, cyc, alpha = rec
            if pure == "":
                rows.append(AtlasRow(A=int(a), B=int(b), m=int(m), error="budget"))
            else:
                rows.append(AtlasRow(A=int(a), B=int(b), m=int(m),
                                     pure=pure == "true", tail_len=int(tail),
                                     cycle_len=int(cyc),
                                     alpha=None if alpha == "" else int(alpha)))
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return rows


def wss_finding_obj(f: WssFinding) -> dict:
    return {"A": f.A, "B": f.B, "p": f.p, "k_p": f.k_p, "k_p2": f.k_p2}


def write_wss(findings: Iterable[WssFinding], sink: TextIO, fmt: str = "json") -> int:
    count = 0
    if fmt == "json":
        for f in findings:
            sink.write(_json_line(wss_finding_obj(f)))
            count += 1
    elif fmt == "csv":
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(WSS_FIELDS)
        for f in findings:
            writer.writerow([f.A, f.B, f.p, f.k_p, f.k_p2])
            count += 1
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return count


def parse_wss(text: str, fmt: str = "json") -> list[WssFinding]:
    findings = []
    if fmt == "json":
        for line in text.splitlines():
            obj = json.loads(line)
            findings.append(WssFinding(A=obj["A"], B=obj["B"], p=obj["p"],
                                       k_p=obj["k_p"], k_p2=obj["k_p2"]))
    elif fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if tuple(header) != WSS_FIELDS:
            raise ValueError(f"unexpected wss header {header}")
        for rec in reader:
            findings.append(WssFinding(*(int(x) for x in rec)))
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return findings
